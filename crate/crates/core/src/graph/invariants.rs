use std::fmt;

use serde::{Serialize, Serializer};

use super::{bits, Graph};
use crate::error::{Error, Result};

/// Exact chromatic number search is limited to this many vertices.
pub const CHROMATIC_MAX_VERTICES: usize = 16;

/// Length of a shortest cycle; `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

/// Finite girths serialize as integers, infinite girth as `"inf"`.
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Graph {
    /// BFS distance from `s` to `t`, or `None` if unreachable. Stops once the
    /// distance would exceed `limit`.
    fn distance(&self, s: usize, t: usize, limit: usize) -> Option<usize> {
        let target = 1u64 << t;
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 && d < limit {
            if frontier & target != 0 {
                return Some(d);
            }
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            d += 1;
        }
        (frontier & target != 0).then_some(d)
    }

    /// Girth by deleting each edge `uv` in turn and measuring `d(u, v)`.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut h = self.clone();
        for (u, v) in self.edges() {
            h.remove_edge(u, v);
            if let Some(d) = h.distance(u, v, best.saturating_sub(1)) {
                best = best.min(d + 1);
            }
            h.add_edge(u, v);
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Vertices of one shortest cycle, in cyclic order.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let g = self.girth().finite()?;
        let mut h = self.clone();
        for (u, v) in self.edges() {
            h.remove_edge(u, v);
            if h.distance(u, v, g) == Some(g - 1) {
                return Some(h.bfs_path(u, v));
            }
            h.add_edge(u, v);
        }
        unreachable!("an edge on a shortest cycle exists when the girth is finite")
    }

    fn bfs_path(&self, s: usize, t: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.n];
        parent[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for y in self.neighbor_iter(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![t];
        let mut x = t;
        while x != s {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        path
    }

    /// Bitset of the connected component containing `s`.
    pub fn component_of(&self, s: usize) -> u64 {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn component_count(&self) -> usize {
        let mut left = self.vertex_mask();
        let mut count = 0;
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            left &= !self.component_of(s);
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    /// True iff the graph is connected and 2-regular.
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// True iff removing `v` disconnects the rest of its component.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let rest = self.component_of(v) & !(1u64 << v);
        if rest == 0 {
            return false;
        }
        let mut h = self.clone();
        for w in self.neighbor_iter(v) {
            h.remove_edge(v, w);
        }
        h.component_of(rest.trailing_zeros() as usize) != rest
    }

    /// Two-colors each component by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbor_iter(x) {
                    if side[y] == u8::MAX {
                        side[y] = side[x] ^ 1;
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exact chromatic number by iterative deepening between a clique lower
    /// bound and a greedy upper bound.
    pub fn chromatic_number(&self) -> Result<usize> {
        if self.n > CHROMATIC_MAX_VERTICES {
            return Err(Error::VertexCount { n: self.n, min: 1, max: CHROMATIC_MAX_VERTICES });
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let upper = self.greedy_colors(&order);
        let mut k = self.clique_number();
        while k < upper {
            let mut colors = vec![usize::MAX; self.n];
            if self.color_with(&order, 0, k, 0, &mut colors) {
                return Ok(k);
            }
            k += 1;
        }
        Ok(upper)
    }

    fn greedy_colors(&self, order: &[usize]) -> usize {
        let mut colors = vec![usize::MAX; self.n];
        let mut used = 0;
        for &v in order {
            let taken: u64 = self
                .neighbor_iter(v)
                .filter(|&w| colors[w] != usize::MAX)
                .fold(0, |acc, w| acc | 1 << colors[w]);
            let c = (!taken).trailing_zeros() as usize;
            colors[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    fn color_with(&self, order: &[usize], i: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        // a fresh color is interchangeable with any other fresh one
        for c in 0..k.min(used + 1) {
            if self.neighbor_iter(v).any(|w| colors[w] == c) {
                continue;
            }
            colors[v] = c;
            if self.color_with(order, i + 1, k, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
        false
    }

    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, size: usize, candidates: u64, best: &mut usize) {
            if candidates == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            let mut rest = candidates;
            while rest != 0 {
                if size + rest.count_ones() as usize <= *best {
                    return;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow(g, size + 1, rest & g.adj[v], best);
            }
        }
        let mut best = 0;
        grow(self, 0, self.vertex_mask(), &mut best);
        best
    }

    /// `max { d(u) + d(v) - |N(u) ∩ N(v)| : uv ∈ E }`, an upper bound on the
    /// largest Laplacian eigenvalue.
    pub fn das_edge_bound(&self) -> Result<usize> {
        self.edges()
            .into_iter()
            .map(|(u, v)| {
                self.degree(u) + self.degree(v) - (self.adj[u] & self.adj[v]).count_ones() as usize
            })
            .max()
            .ok_or(Error::Edgeless)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Gadget;

    #[test]
    fn girth_of_families() {
        assert_eq!(Graph::cycle(7).unwrap().girth(), Girth::Finite(7));
        assert_eq!(Graph::path(5).unwrap().girth(), Girth::Infinite);
        assert_eq!(Graph::complete(4).unwrap().girth(), Girth::Finite(3));
        assert_eq!(Graph::complete_multipartite(&[3, 2]).unwrap().girth(), Girth::Finite(4));
        assert_eq!(Graph::empty(1).unwrap().girth(), Girth::Infinite);
        for g in 3..=10 {
            for t in 0..=5 {
                assert_eq!(Graph::u_t(g, t).unwrap().girth(), Girth::Finite(g));
            }
        }
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        for g in [
            Graph::complete_multipartite(&[3, 2]).unwrap(),
            Graph::u_t(5, 2).unwrap(),
            Graph::gadget(Gadget::G1),
            Graph::complete(5).unwrap(),
        ] {
            let c = g.shortest_cycle().unwrap();
            assert_eq!(Girth::Finite(c.len()), g.girth());
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
        assert!(Graph::path(4).unwrap().shortest_cycle().is_none());
    }

    #[test]
    fn connectivity() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.is_connected() && c5.is_cycle_graph());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.component_count(), 2);
        let u = Graph::u_t(4, 1).unwrap();
        assert!(u.is_connected() && !u.is_cycle_graph());
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two_triangles.is_cycle_graph());
    }

    #[test]
    fn cut_vertices() {
        let p3 = Graph::path(3).unwrap();
        assert!(p3.is_cut_vertex(1));
        assert!(!p3.is_cut_vertex(0));
        assert!(!Graph::cycle(5).unwrap().is_cut_vertex(2));
        assert!(Graph::u_t(4, 1).unwrap().is_cut_vertex(0));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(Graph::complete_multipartite(&[3, 2]).unwrap().chromatic_number(), Ok(2));
        assert_eq!(Graph::cycle(5).unwrap().chromatic_number(), Ok(3));
        assert_eq!(Graph::complete(4).unwrap().chromatic_number(), Ok(4));
        assert_eq!(Graph::empty(3).unwrap().chromatic_number(), Ok(1));
        assert_eq!(Graph::gadget(Gadget::G3).chromatic_number(), Ok(2));
        assert!(Graph::cycle(17).unwrap().chromatic_number().is_err());
        // Petersen graph
        let petersen = Graph::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        )
        .unwrap();
        assert_eq!(petersen.chromatic_number(), Ok(3));
        assert_eq!(petersen.girth(), Girth::Finite(5));
    }

    #[test]
    fn das_bound_values() {
        assert_eq!(Graph::gadget(Gadget::G4).das_edge_bound(), Ok(5));
        assert_eq!(Graph::gadget(Gadget::G1).das_edge_bound(), Ok(5));
        assert_eq!(Graph::complete(3).unwrap().das_edge_bound(), Ok(3));
        assert_eq!(Graph::path(3).unwrap().das_edge_bound(), Ok(3));
        assert_eq!(Graph::empty(2).unwrap().das_edge_bound(), Err(Error::Edgeless));
    }
}
