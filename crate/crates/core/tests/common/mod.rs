//! Brute-force isomorphism-class counting shared by the oracle tests: walk
//! every labeled graph on `n` vertices, and whenever an unvisited connected
//! one appears, mark its entire orbit under all `n!` relabelings.

#![allow(dead_code)]

use lapgirth::Graph;

/// Labeled connected graphs on n = 1..=7 vertices.
pub const LABELED_CONNECTED: [usize; 7] = [1, 1, 4, 38, 728, 26704, 1866256];

#[allow(clippy::needless_range_loop)]
pub fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            idx[u][v] = k;
            idx[v][u] = k;
            k += 1;
        }
    }
    idx
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn edges_of(code: u32, n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges
}

pub fn code_of(g: &Graph, idx: &[Vec<usize>]) -> u32 {
    g.edges().iter().fold(0, |c, &(u, v)| c | 1 << idx[u][v])
}

pub fn relabel(edges: &[(usize, usize)], perm: &[usize], idx: &[Vec<usize>]) -> u32 {
    edges.iter().fold(0, |c, &(u, v)| c | 1 << idx[perm[u]][perm[v]])
}

pub fn connected(edges: &[(usize, usize)], n: usize) -> bool {
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        if c[x] == x {
            x
        } else {
            let r = find(c, c[x]);
            c[x] = r;
            r
        }
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut comp, u), find(&mut comp, v));
        if a != b {
            comp[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

/// Returns (isomorphism classes, labeled connected graphs).
pub fn brute_force_counts(n: usize) -> (usize, usize) {
    let idx = pair_index(n);
    let perms = permutations(n);
    let total = 1u32 << (n * (n - 1) / 2);
    let mut seen = vec![false; total as usize];
    let (mut classes, mut labeled) = (0, 0);
    for code in 0..total {
        let edges = edges_of(code, n);
        if !connected(&edges, n) {
            continue;
        }
        labeled += 1;
        if seen[code as usize] {
            continue;
        }
        classes += 1;
        for p in &perms {
            seen[relabel(&edges, p, &idx) as usize] = true;
        }
    }
    (classes, labeled)
}
