use lapgirth::enumeration::{canonical_form, enumerate_connected};
use lapgirth::{Girth, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Shortest cycle by BFS from every vertex, tracking parents: a non-tree
/// edge `uv` seen from root `r` closes a walk of length `d(u) + d(v) + 1`,
/// and the minimum over all roots is the girth.
fn girth_oracle(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    for r in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[r] = 0;
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbor_iter(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Smallest k admitting a proper k-coloring, by trying every assignment.
fn chromatic_oracle(g: &Graph) -> usize {
    let n = g.n();
    (1..=n)
        .find(|&k| {
            let total = k.pow(n as u32);
            (0..total).any(|mut code| {
                let mut color = vec![0; n];
                for c in color.iter_mut() {
                    *c = code % k;
                    code /= k;
                }
                g.edges().iter().all(|&(u, v)| color[u] != color[v])
            })
        })
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in arb_graph(64)) {
        let text = g.to_graph6();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn handshake(g in arb_graph(40)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn girth_agrees_with_bfs_oracle(g in arb_graph(14)) {
        prop_assert_eq!(g.girth(), girth_oracle(&g));
        prop_assert_eq!(g.girth() == Girth::Infinite, g.edge_count() + g.component_count() == g.n());
    }

    #[test]
    fn shortest_cycle_is_a_cycle(g in arb_graph(14)) {
        match (g.shortest_cycle(), g.girth()) {
            (Some(c), Girth::Finite(len)) => {
                prop_assert_eq!(c.len(), len);
                for i in 0..len {
                    prop_assert!(g.has_edge(c[i], c[(i + 1) % len]));
                }
            }
            (None, Girth::Infinite) => {}
            other => prop_assert!(false, "mismatch {:?}", other),
        }
    }

    #[test]
    fn chromatic_agrees_with_exhaustive_coloring(g in arb_graph(7)) {
        prop_assert_eq!(g.chromatic_number().unwrap(), chromatic_oracle(&g));
    }

    #[test]
    fn two_colorable_iff_bipartite(g in arb_graph(12)) {
        if g.edge_count() > 0 {
            prop_assert_eq!(g.chromatic_number().unwrap() == 2, g.is_bipartite());
        }
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_graph_with_perm(12)) {
        let form = canonical_form(&g).unwrap();
        prop_assert_eq!(canonical_form(&g.permuted(&perm)).unwrap(), form);
        prop_assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }

    #[test]
    fn invariants_survive_relabeling((g, perm) in arb_graph_with_perm(10)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(h.girth(), g.girth());
        prop_assert_eq!(h.is_connected(), g.is_connected());
        prop_assert_eq!(h.chromatic_number().unwrap(), g.chromatic_number().unwrap());
        let mut a = g.degrees();
        let mut b = h.degrees();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn enumeration_output_is_canonical_sorted_and_connected() {
    for n in 1..=6 {
        let graphs = enumerate_connected(n).unwrap();
        let forms: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]), "n = {n}");
        for (g, f) in graphs.iter().zip(&forms) {
            assert!(g.is_connected());
            assert_eq!(&f.to_graph(), g);
        }
    }
}
