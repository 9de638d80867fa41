//! Canonical labeling and isomorphism-free generation of small connected
//! graphs.
//!
//! Canonical labeling refines an ordered vertex partition to an equitable
//! one, then individualizes vertices of the first non-singleton cell and
//! recurses. Every discrete leaf yields a relabeling; the smallest resulting
//! adjacency code wins. Interchangeable twins (vertices with the same
//! neighborhood apart from each other) are only tried once per cell.
//!
//! Generation is canonical augmentation: a connected graph on `n` vertices is
//! kept only if the vertex just added is, up to automorphism, the one the
//! canonical deletion rule would remove.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CANONICAL_MAX_VERTICES: usize = 12;
pub const ENUMERATION_MAX_VERTICES: usize = 9;

/// The upper-triangle adjacency bits (graph6 order) of a canonical
/// relabeling. Equal forms mean isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Big-endian bytes: vertex count, then the packed adjacency bits.
    pub fn bytes(&self) -> Vec<u8> {
        let n = self.n as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(8);
        let mut out = vec![self.n];
        let padded = self.code << (nbytes * 8 - nbits);
        out.extend((0..nbytes).rev().map(|i| (padded >> (8 * i)) as u8));
        out
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let nbits = n * (n - 1) / 2;
        let mut g = Graph::empty(n).expect("canonical forms have 1..=12 vertices");
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (nbits - 1 - k) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_canonical_size(g)?;
    Ok(canonize(g, &vec![0; g.n()]).0)
}

/// Canonical form together with the labeling `v -> lab[v]` that produces it.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    check_canonical_size(g)?;
    Ok(canonize(g, &vec![0; g.n()]))
}

/// Canonical form of the graph with the vertex colors held fixed; colors are
/// compared by value, so isomorphisms must map each color to itself.
pub fn colored_canonical_form(g: &Graph, colors: &[u32]) -> Result<CanonicalForm> {
    check_canonical_size(g)?;
    if colors.len() != g.n() {
        return Err(Error::InvalidArgument("one color per vertex required".into()));
    }
    Ok(canonize(g, colors).0)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a)? == canonical_form(b)?)
}

fn check_canonical_size(g: &Graph) -> Result<()> {
    if g.n() > CANONICAL_MAX_VERTICES {
        return Err(Error::VertexCount { n: g.n(), min: 1, max: CANONICAL_MAX_VERTICES });
    }
    Ok(())
}

fn canonize(g: &Graph, initial: &[u32]) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    // rank the initial colors into cell-start positions
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| initial[v]);
    let mut colors = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        colors[v] = if pos > 0 && initial[order[pos - 1]] == initial[v] { colors[order[pos - 1]] } else { pos };
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    search(g, colors, &mut best);
    let (code, lab) = best.expect("search visits at least one leaf");
    (CanonicalForm { n: n as u8, code }, lab)
}

/// Refines `colors` (cell-start positions) until equitable.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.n();
    let mut cells = count_cells(colors);
    let mut keyed: Vec<(usize, Vec<usize>, usize)> = Vec::with_capacity(n);
    loop {
        keyed.clear();
        for v in 0..n {
            let mut sig: Vec<usize> = g.neighbor_iter(v).map(|w| colors[w]).collect();
            sig.sort_unstable();
            keyed.push((colors[v], sig, v));
        }
        keyed.sort_unstable();
        for pos in 0..n {
            let v = keyed[pos].2;
            colors[v] = if pos > 0 && keyed[pos - 1].0 == keyed[pos].0 && keyed[pos - 1].1 == keyed[pos].1 {
                colors[keyed[pos - 1].2]
            } else {
                pos
            };
        }
        let now = count_cells(colors);
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut seen = vec![false; colors.len()];
    colors.iter().filter(|&&c| !std::mem::replace(&mut seen[c], true)).count()
}

fn encode(g: &Graph, lab: &[usize]) -> u128 {
    let n = g.n();
    let mut inv = vec![0; n];
    for (v, &l) in lab.iter().enumerate() {
        inv[l] = v;
    }
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | g.has_edge(inv[i], inv[j]) as u128;
        }
    }
    code
}

fn search(g: &Graph, mut colors: Vec<usize>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut colors);
    let n = g.n();
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| size[c] > 1) else {
        let code = encode(g, &colors);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colors));
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        let twin_of_tried = tried.iter().any(|&w| {
            let both = (1u64 << v) | (1u64 << w);
            g.neighbors(v) & !both == g.neighbors(w) & !both
        });
        if twin_of_tried {
            continue;
        }
        tried.push(v);
        let mut next = colors.clone();
        for &x in &cell {
            if x != v {
                next[x] = target + 1;
            }
        }
        search(g, next, best);
    }
}

/// Canonical-deletion test: is `v` (the newest vertex of `g`) in the orbit
/// the deletion rule selects? The rule considers non-cut vertices in the
/// highest cell of the equitable partition and picks the one whose
/// individualized canonical form is smallest. Returns that form on success;
/// it is a complete invariant of the accepted graph.
fn canonical_parent_check(g: &Graph, v: usize) -> Option<CanonicalForm> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    refine(g, &mut colors);
    let non_cut: Vec<usize> = (0..n).filter(|&x| !g.is_cut_vertex(x)).collect();
    let top = non_cut.iter().map(|&x| colors[x]).max()?;
    if colors[v] != top {
        return None;
    }
    let marked = |x: usize| -> CanonicalForm {
        let mut c = vec![1u32; n];
        c[x] = 0;
        canonize(g, &c).0
    };
    let own = marked(v);
    for &x in &non_cut {
        if x != v && colors[x] == top && marked(x) < own {
            return None;
        }
    }
    Some(own)
}

/// Every connected graph on `n + 1` vertices whose canonical parent is `g`,
/// in canonically relabeled form.
fn children(g: &Graph) -> Vec<(CanonicalForm, Graph)> {
    let n = g.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for subset in 1u64..(1u64 << n) {
        let mut adj: Vec<u64> = g.rows().to_vec();
        for u in crate::graph::bits(subset) {
            adj[u] |= 1 << n;
        }
        adj.push(subset);
        let child = Graph::from_adjacency(adj).expect("augmentation keeps the graph simple");
        if let Some(key) = canonical_parent_check(&child, n) {
            if seen.insert(key) {
                let (form, lab) = canonize(&child, &vec![0; n + 1]);
                out.push((form, child.permuted(&lab)));
            }
        }
    }
    out
}

fn check_enumeration_size(n: usize) -> Result<()> {
    if n == 0 || n > ENUMERATION_MAX_VERTICES {
        return Err(Error::VertexCount { n, min: 1, max: ENUMERATION_MAX_VERTICES });
    }
    Ok(())
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, canonically labeled and sorted by canonical form.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected_upto(n)?.pop().unwrap_or_default())
}

/// Levels `1..=nmax` of the connected-graph enumeration; entry `k - 1` holds
/// the graphs on `k` vertices.
pub fn enumerate_connected_upto(nmax: usize) -> Result<Vec<Vec<Graph>>> {
    check_enumeration_size(nmax)?;
    let mut levels = vec![vec![Graph::empty(1)?]];
    for _ in 2..=nmax {
        let parents = levels.last().unwrap();
        let mut next: Vec<(CanonicalForm, Graph)> = parents.par_iter().flat_map_iter(children).collect();
        next.sort_unstable_by_key(|(form, _)| *form);
        levels.push(next.into_iter().map(|(_, g)| g).collect());
    }
    Ok(levels)
}
