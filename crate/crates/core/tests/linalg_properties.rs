use lapgirth::linalg::{
    count_roots_in_interval, laplacian, numeric_eigenvalues, rational, square_free_decompose, symmetric_eigenvalues,
    IntegerPolynomial, IntegerSymMatrix,
};
use lapgirth::spectra::{cycle_spectrum, multipartite_spectrum, numeric_spectrum, path_spectrum, LaplacianCounter};
use lapgirth::Graph;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

#[allow(clippy::needless_range_loop)]
fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-9..=9);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}

fn to_f64(m: &[Vec<i64>]) -> Vec<Vec<f64>> {
    m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect()
}

#[test]
fn cauchy_interlacing_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a7e);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let m = random_symmetric(&mut rng, n);
        let p = rng.gen_range(1..n);
        let mut keep: Vec<usize> = (0..n).collect();
        while keep.len() > p {
            keep.remove(rng.gen_range(0..keep.len()));
        }
        let full = symmetric_eigenvalues(to_f64(&m)).unwrap();
        let sub = symmetric_eigenvalues(keep.iter().map(|&i| keep.iter().map(|&j| m[i][j] as f64).collect()).collect())
            .unwrap();
        // rho_{n-p+i}(M) <= rho_i(B) <= rho_i(M), 1-based
        for i in 0..p {
            assert!(full[n - p + i] <= sub[i] + TOL && sub[i] <= full[i] + TOL, "{m:?} {keep:?}");
        }
    }
}

#[test]
fn weyl_inequalities_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3e71);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let a = random_symmetric(&mut rng, n);
        let b = random_symmetric(&mut rng, n);
        let sum: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[i][j] + b[i][j]).collect()).collect();
        let (ea, eb, es) = (
            symmetric_eigenvalues(to_f64(&a)).unwrap(),
            symmetric_eigenvalues(to_f64(&b)).unwrap(),
            symmetric_eigenvalues(to_f64(&sum)).unwrap(),
        );
        // rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B), 1-based
        for i in 0..n {
            for j in 0..n - i {
                assert!(es[i + j] <= ea[i] + eb[j] + TOL, "{a:?} {b:?}");
            }
        }
    }
}

#[test]
fn closed_form_spectra_match_jacobi() {
    let check = |closed: Vec<f64>, numeric: Vec<f64>| {
        assert_eq!(closed.len(), numeric.len());
        for (c, x) in closed.iter().zip(&numeric) {
            assert!((c - x).abs() < 1e-8, "{c} vs {x}");
        }
    };
    for n in 3..=64 {
        check(cycle_spectrum(n).unwrap().values_desc(), numeric_spectrum(&Graph::cycle(n).unwrap()).unwrap());
    }
    for n in 1..=64 {
        check(path_spectrum(n).unwrap().values_desc(), numeric_spectrum(&Graph::path(n).unwrap()).unwrap());
    }
    for parts in [vec![3, 2], vec![1, 4], vec![2, 2, 2], vec![5, 7, 9, 11], vec![32, 32], vec![1, 1, 1, 1, 60]] {
        let g = Graph::complete_multipartite(&parts).unwrap();
        check(multipartite_spectrum(&parts).unwrap().values_desc(), numeric_spectrum(&g).unwrap());
    }
}

#[test]
fn char_poly_roots_match_jacobi_for_integer_spectra() {
    // K_{r,s}: spectrum {0, r^(s-1), s^(r-1), r+s}
    for (r, s) in [(1, 1), (2, 3), (4, 4), (3, 7)] {
        let g = Graph::complete_multipartite(&[r, s]).unwrap();
        let counter = LaplacianCounter::new(&g).unwrap();
        let exact: usize = counter.integer_eigenvalues().iter().map(|&(_, m)| m).sum();
        assert_eq!(exact, r + s);
        let numeric = numeric_spectrum(&g).unwrap();
        for (v, m) in counter.integer_eigenvalues() {
            assert_eq!(numeric.iter().filter(|x| (**x - v as f64).abs() < 1e-8).count(), m);
        }
    }
}

fn poly_from_roots() -> impl Strategy<Value = (Vec<i64>, i64)> {
    (proptest::collection::vec(-6i64..=6, 1..8), 1i64..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn square_free_decomposition_reconstructs((roots, lead) in poly_from_roots()) {
        let p = IntegerPolynomial::from_roots(&roots).scale(&BigInt::from(lead));
        let d = square_free_decompose(&p).unwrap();
        prop_assert_eq!(d.expand(), p.primitive_part());
        prop_assert_eq!(d.weighted_degree(), roots.len());
        for (q, _) in &d.factors {
            prop_assert_eq!(q.gcd(&q.derivative()).degree(), Some(0));
        }
    }

    #[test]
    fn sturm_counts_integer_roots((roots, lead) in poly_from_roots(), a in -7i64..=6, width in 1i64..=8) {
        let p = IntegerPolynomial::from_roots(&roots).scale(&BigInt::from(lead));
        let b = a + width;
        let expected = roots.iter().filter(|&&r| a < r && r <= b).count();
        prop_assert_eq!(count_roots_in_interval(&p, &rational(a), &rational(b)).unwrap(), expected);
    }

    #[test]
    fn char_poly_trace_and_jacobi_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=7);
        let rows = random_symmetric(&mut rng, n);
        let m = IntegerSymMatrix::from_rows(&rows).unwrap();
        let p = m.char_poly().unwrap();
        prop_assert_eq!(p.degree(), Some(n));
        // coefficient of x^(n-1) is minus the trace
        prop_assert_eq!(p.coeff(n - 1), -m.trace());
        let eig = numeric_eigenvalues(&m).unwrap();
        let scale = 1.0 + eig.iter().fold(0.0f64, |s, x| s.max(x.abs()));
        for x in eig {
            let value = p.eval_f64(x);
            let deriv_bound = (0..=n).map(|k| p.coeff(k).to_string().parse::<f64>().unwrap().abs() * scale.powi(k as i32)).sum::<f64>();
            prop_assert!(value.abs() <= 1e-9 * deriv_bound, "p({}) = {}", x, value);
        }
    }

    #[test]
    fn laplacian_rows_sum_to_zero(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=12);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|_| rng.gen_bool(0.4)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let l = laplacian(&g);
        for i in 0..n {
            let s: BigInt = (0..n).map(|j| l.get(i, j).clone()).sum();
            prop_assert_eq!(s, BigInt::from(0));
        }
        // the constant vector is in the kernel
        prop_assert_eq!(l.char_poly().unwrap().coeff(0), BigInt::from(0));
    }
}
