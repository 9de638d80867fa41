use super::largest_vs;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{laplacian, numeric_eigenvalues, rational, IntegerSymMatrix};
use crate::spectra::{numeric_spectrum, LaplacianCounter};

/// Slack allowed in numerically evaluated eigenvalue inequalities.
pub const LEMMA_TOLERANCE: f64 = 1e-9;

/// Closed-form `m_{C_n}(3, n]`.
pub fn remark_cycle_count(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycles need n >= 3, got {n}")));
    }
    let base = 2 * n / 3 - n.div_ceil(3);
    Ok(if n.is_multiple_of(3) { base - 1 } else { base + 1 })
}

/// Number of `k` in `1..=n` with `n/3 < k < 2n/3`, i.e. with
/// `4 sin^2(k pi / n) > 3`.
pub fn cycle_k_count(n: usize) -> usize {
    (1..=n).filter(|&k| n < 3 * k && 3 * k < 2 * n).count()
}

/// `m_{C_n}(3, n]` from the characteristic polynomial.
pub fn exact_cycle_count(n: usize) -> Result<usize> {
    let counter = LaplacianCounter::new(&Graph::cycle(n)?)?;
    if n == 3 {
        return Ok(0);
    }
    counter.count_int(3, n as i64)
}

fn validate_cycle(g: &Graph, cycle: &[usize]) -> Result<()> {
    let k = cycle.len();
    let mut seen = 0u64;
    let mut distinct = true;
    for &v in cycle {
        distinct &= v < g.n() && seen >> v & 1 == 0;
        seen |= 1u64.checked_shl(v as u32).unwrap_or(0);
    }
    let ok = k >= 3 && distinct && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]));
    if ok {
        Ok(())
    } else {
        Err(Error::NotACycle(cycle.to_vec()))
    }
}

/// No cycle vertex is adjacent to every vertex off the cycle.
pub fn case1_hypothesis(g: &Graph, cycle: &[usize]) -> bool {
    let on: u64 = cycle.iter().fold(0, |m, &v| m | 1 << v);
    let off = g.vertex_mask() & !on;
    off != 0 && cycle.iter().all(|&v| g.neighbors(v) & off != off)
}

/// Evaluates the chain
/// `mu_{n-g+1}(G) <= rho_1(H) <= rho_1(L(C)) + rho_1(D) <= 4 + rho_1(D)`
/// where `H` is the principal submatrix of `L(G)` on the cycle and
/// `H = L(C) + D` with `D = diag(d(v_i) - 2)`. When the case hypothesis
/// holds, also checks `rho_1(D) <= n - g - 1`.
pub fn case1_gadget_check(g: &Graph, cycle: &[usize]) -> Result<bool> {
    validate_cycle(g, cycle)?;
    let (n, len) = (g.n(), cycle.len());
    let lg = laplacian(g);
    let h = lg.principal_submatrix(cycle);
    let lc = laplacian(&Graph::cycle(len)?);
    let d = IntegerSymMatrix::diagonal(&cycle.iter().map(|&v| g.degree(v) as i64 - 2).collect::<Vec<_>>());
    // H = L(C) + D only for chordless cycles
    if h != lc.add(&d)? {
        return Ok(false);
    }
    let mu = numeric_eigenvalues(&lg)?[n - len];
    let rho_h = numeric_eigenvalues(&h)?[0];
    let rho_c = numeric_eigenvalues(&lc)?[0];
    let rho_d = cycle.iter().map(|&v| g.degree(v) as f64 - 2.0).fold(f64::MIN, f64::max);
    let tol = LEMMA_TOLERANCE;
    let mut ok = mu <= rho_h + tol && rho_h <= rho_c + rho_d + tol && rho_c <= 4.0 + tol;
    if case1_hypothesis(g, cycle) {
        ok &= rho_d <= (n - len) as f64 - 1.0 && mu <= (n - len + 3) as f64 + tol;
    }
    Ok(ok)
}

/// Per-lemma outcomes on one connected graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    /// Deleting any edge interlaces the spectrum.
    pub edge_deletion: bool,
    /// `mu_1 >= Delta + 1`, with equality exactly when `Delta = n - 1`.
    pub max_degree_plus_one: bool,
    /// `mu_1 <= max over edges uv of d(u) + d(v) - |N(u) & N(v)|`.
    pub edge_degree_bound: bool,
    /// `m_G(n-1, n] <= chi(G) - 1`.
    pub chromatic: bool,
}

impl LemmaReport {
    pub const NAMES: [&'static str; 4] = ["edge_deletion", "max_degree_plus_one", "edge_degree_bound", "chromatic"];

    pub fn all_pass(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let flags = [self.edge_deletion, self.max_degree_plus_one, self.edge_degree_bound, self.chromatic];
        Self::NAMES.iter().zip(flags).filter(|(_, ok)| !ok).map(|(name, _)| *name).collect()
    }
}

/// Edge interlacing is checked numerically within [`LEMMA_TOLERANCE`]; the
/// other three statements are decided by exact counting.
pub fn lemma_suite(g: &Graph) -> Result<LemmaReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    lemma_suite_with(g, &LaplacianCounter::new(g)?)
}

pub(crate) fn lemma_suite_with(g: &Graph, counter: &LaplacianCounter) -> Result<LemmaReport> {
    let n = g.n();
    let ni = n as i64;
    let full = numeric_spectrum(g)?;
    let mut edge_deletion = true;
    for (u, v) in g.edges() {
        let minus = numeric_spectrum(&g.without_edge(u, v))?;
        let tol = LEMMA_TOLERANCE;
        // mu_i(G) >= mu_i(G - e) >= mu_{i+1}(G)
        let interlaced = (0..n).all(|i| full[i] + tol >= minus[i] && (i + 1 == n || minus[i] + tol >= full[i + 1]));
        edge_deletion &= interlaced && full[n - 1].abs() <= tol && minus[n - 1].abs() <= tol;
    }

    let delta = g.max_degree();
    let max_degree_plus_one = if delta == 0 {
        true
    } else {
        let (at_least, equal) = largest_vs(counter, n, delta as i64 + 1)?;
        at_least && equal == (delta == n - 1)
    };

    let edge_degree_bound = match g.das_edge_bound() {
        Ok(bound) if bound < n => counter.count_int(bound as i64, ni)? == 0,
        _ => true,
    };

    let chromatic_count = if n >= 2 { counter.count(&rational(ni - 1), &rational(ni))? } else { 0 };
    let chromatic = chromatic_count < g.chromatic_number()?;

    Ok(LemmaReport { edge_deletion, max_degree_plus_one, edge_degree_bound, chromatic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Gadget;

    #[test]
    fn cycle_count_examples() {
        assert_eq!(remark_cycle_count(5).unwrap(), 2);
        assert_eq!(remark_cycle_count(6).unwrap(), 1);
        assert_eq!(remark_cycle_count(3).unwrap(), 0);
        assert!(remark_cycle_count(2).is_err());
    }

    #[test]
    fn cycle_count_closed_form_matches_exact() {
        for n in 3..=20 {
            assert_eq!(remark_cycle_count(n).unwrap(), exact_cycle_count(n).unwrap(), "n = {n}");
            assert_eq!(remark_cycle_count(n).unwrap(), cycle_k_count(n), "n = {n}");
        }
    }

    #[test]
    fn gadget_chain_examples() {
        let g = Graph::u_t(5, 2).unwrap();
        assert!(case1_gadget_check(&g, &[0, 1, 2, 3, 4]).unwrap());
        let k32 = Graph::complete_multipartite(&[3, 2]).unwrap();
        assert!(case1_gadget_check(&k32, &[0, 3, 1, 4]).unwrap());
        let g1 = Graph::gadget(Gadget::G1);
        assert!(case1_gadget_check(&g1, &[0, 1, 2, 3, 4, 5]).unwrap());
    }

    #[test]
    fn gadget_chain_rejects_non_cycles() {
        let g = Graph::cycle(5).unwrap();
        assert!(matches!(case1_gadget_check(&g, &[0, 1, 3]), Err(Error::NotACycle(_))));
        assert!(matches!(case1_gadget_check(&g, &[0, 1, 1, 2]), Err(Error::NotACycle(_))));
    }

    #[test]
    fn off_cycle_hypothesis_examples() {
        // the single pendant vertex of U_1 sees one cycle vertex
        let u = Graph::u_t(5, 1).unwrap();
        assert!(!case1_hypothesis(&u, &[0, 1, 2, 3, 4]));
        let g1 = Graph::gadget(Gadget::G1);
        assert!(case1_hypothesis(&g1, &[0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn complete_graphs_attain_max_degree_bound() {
        for n in 2..=7 {
            let g = Graph::complete(n).unwrap();
            let counter = LaplacianCounter::new(&g).unwrap();
            assert_eq!(largest_vs(&counter, n, n as i64).unwrap(), (true, true));
            assert!(lemma_suite(&g).unwrap().all_pass());
        }
    }

    #[test]
    fn star_attains_max_degree_bound() {
        let star = Graph::complete_multipartite(&[1, 4]).unwrap();
        let counter = LaplacianCounter::new(&star).unwrap();
        assert_eq!(largest_vs(&counter, 5, 5).unwrap(), (true, true));
        assert!(lemma_suite(&star).unwrap().all_pass());
    }

    #[test]
    fn triangle_with_pendant_has_mu1_four() {
        let g = Graph::u_t(3, 1).unwrap();
        let counter = LaplacianCounter::new(&g).unwrap();
        assert_eq!(largest_vs(&counter, 4, 4).unwrap(), (true, true));
    }

    #[test]
    fn report_failures_lists_names() {
        let r = LemmaReport { edge_deletion: true, max_degree_plus_one: false, edge_degree_bound: true, chromatic: false };
        assert_eq!(r.failures(), vec!["max_degree_plus_one", "chromatic"]);
        assert!(!r.all_pass());
    }
}
