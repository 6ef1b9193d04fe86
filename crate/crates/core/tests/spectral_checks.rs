use kekule_core::exact::Rat;
use kekule_core::kekule::{col_gf, t_value};
use kekule_core::matrixcore::unit_primitive;
use kekule_core::polyfam::{char_poly_a, p_poly};
use kekule_core::spectral::*;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap()
}

#[test]
fn closed_form_eigenvalues_are_roots() {
    for n in 1..=20 {
        let f = char_poly_a(n);
        for l in eigenvalues(n).unwrap().eigenvalues {
            let scale = f.max_abs_coeff() * l.abs().max(1.0).powi(n as i32);
            assert!(f.eval_f64(l).abs() / scale < 1e-8, "n = {n}, λ = {l}");
        }
    }
}

#[test]
fn eigenvalues_are_distinct() {
    for n in 1..=20 {
        let mut v = eigenvalues(n).unwrap().eigenvalues;
        v.sort_by(f64::total_cmp);
        assert!(v.windows(2).all(|w| w[1] - w[0] > 1e-9), "n = {n}");
    }
}

#[test]
fn eigenvalue_ordering_chains() {
    for n in 1..=15usize {
        let l = eigenvalues(n).unwrap().eigenvalues;
        let at = |j: usize| l[j - 1];
        let h = n / 2;
        let (neg, pos): (Vec<usize>, Vec<usize>) = if n % 2 == 1 {
            ((h + 2..=n).collect(), (1..=h + 1).collect())
        } else {
            ((1..=h).rev().collect(), (h + 1..=n).rev().collect())
        };
        let chain: Vec<f64> = neg.iter().chain(&pos).map(|&j| at(j)).collect();
        assert!(chain.windows(2).all(|w| w[0] < w[1]), "n = {n}");
        assert!(neg.iter().all(|&j| at(j) < 0.0) && pos.iter().all(|&j| at(j) > 0.0), "n = {n}");
        let max = l.iter().fold(0f64, |a, v| a.max(v.abs()));
        assert_eq!(max, at(h + 1));
        assert!((max - spectral_radius(n).unwrap()).abs() < 1e-12);
    }
}

#[test]
fn halved_chebyshev_form_reproduces_spectrum() {
    for n in 2..=12 {
        let mut exact = eigenvalues(n).unwrap().eigenvalues;
        let mut halved = eigenvalues_u_form(n, true).unwrap();
        let mut full = eigenvalues_u_form(n, false).unwrap();
        for v in [&mut exact, &mut halved, &mut full] {
            v.sort_by(f64::total_cmp);
        }
        assert!(exact.iter().zip(&halved).all(|(a, b)| (a - b).abs() < 1e-9), "n = {n}");
        assert!(exact.iter().zip(&full).any(|(a, b)| (a - b).abs() > 1e-3), "n = {n}");
    }
}

#[test]
fn radius_u_form_agrees_numerically() {
    for n in 1..=15 {
        assert!((spectral_radius_u_form(n) - spectral_radius(n).unwrap()).abs() < 1e-9, "n = {n}");
    }
}

fn mat_vec(n: usize, v: &[f64]) -> Vec<f64> {
    let a = unit_primitive(n).unwrap();
    (1..=n).map(|i| (1..=n).map(|j| to_f64(a.get(i, j)) * v[j - 1]).sum()).collect()
}

#[test]
fn eigenvectors() {
    let l5 = eigenvalues(5).unwrap().eigenvalues;
    for j in 1..=5 {
        let v = eigenvector(5, j).unwrap();
        let av = mat_vec(5, &v);
        let residual = av.iter().zip(&v).map(|(a, x)| (a - l5[j - 1] * x).abs()).fold(0.0, f64::max);
        assert!(residual < 1e-8, "j = {j}");
    }
    let v = eigenvector(4, 2).unwrap();
    assert!((v.iter().map(|c| c * c).sum::<f64>().sqrt() - 1.0).abs() < 1e-8);
    let (a, b) = (eigenvector(6, 1).unwrap(), eigenvector(6, 2).unwrap());
    assert!(a.iter().zip(&b).map(|(x, y)| x * y).sum::<f64>().abs() < 1e-8);
    for n in 2..=12 {
        for j in 1..=n {
            let v = eigenvector(n, j).unwrap();
            let l = eigenvalues(n).unwrap().eigenvalues[j - 1];
            let av = mat_vec(n, &v);
            assert!(av.iter().zip(&v).all(|(a, x)| (a - l * x).abs() < 1e-8), "n = {n}, j = {j}");
        }
    }
}

#[test]
fn partial_fractions_reconstruct_columns() {
    for n in 1..=6 {
        let pf = partial_fractions(n).unwrap();
        assert!((pf.weights.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        for big_n in 0..=40 {
            let exact = to_f64(&t_value(big_n, n - 1));
            let approx = pf.coefficient(big_n as u32);
            assert!(((approx - exact) / exact).abs() < 1e-8, "n = {n}, N = {big_n}");
        }
        let f = col_gf(n - 1);
        for x in [0.1, -0.1, 1.0 / 7.0, -1.0 / 7.0] {
            assert!((pf.eval(x) - f.eval_f64(x)).abs() < 1e-9, "n = {n}, x = {x}");
        }
    }
}

#[test]
fn path_asymptotics() {
    let ratio = |n: usize, big_n: usize| asymp_weighted_path(n, big_n).unwrap() / to_f64(&t_value(big_n, n - 1));
    assert!((ratio(2, 60) - 1.0).abs() < 1e-6);
    assert!((ratio(5, 80) - 1.0).abs() < 1e-4);
}

#[test]
fn diagonal_asymptotics() {
    let ratio = |n: usize| asymp_diagonal(n).unwrap() / to_f64(&t_value(n - 1, n - 1));
    let logs: Vec<f64> = [10, 20, 30].iter().map(|&n| ratio(n).ln().abs()).collect();
    assert!(logs.windows(2).all(|w| w[1] < w[0]), "{logs:?}");
    assert!((ratio(20) - 1.0).abs() < 0.15);
}

#[test]
fn m_column_growth_picks_one_limit() {
    assert_eq!(m_column_growth(0, 40).unwrap().ratio, 1.0);
    let g1 = m_column_growth(1, 60).unwrap();
    assert!((g1.ratio - 1.618_033_988_749_895).abs() < 1e-6);
    for m in 0..=3 {
        let g = m_column_growth(m, 120).unwrap();
        assert!(g.decisive(), "m = {m}: {g:?}");
        assert!(g.matches_2m3(), "m = {m}: {g:?}");
        assert!((g.limit_2m3 - spectral_radius(m + 1).unwrap()).abs() < 1e-12);
    }
}

fn samples(seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..20).map(|_| rng.gen_range(-0.25..0.25)).collect()
}

#[test]
fn trigonometric_form_of_columns() {
    for n in 0..=8 {
        let f = col_gf(n);
        let den = p_poly(n + 1);
        for x in samples(n as u64) {
            if den.eval_f64(x).abs() < 1e-3 {
                continue;
            }
            let exact = f.eval_f64(x);
            assert!((f_trig(n, x) - exact).abs() <= 1e-9 * exact.abs().max(1.0), "n = {n}, x = {x}");
        }
    }
}

#[test]
fn trigonometric_form_of_p() {
    for n in 0..=10 {
        let p = p_poly(n);
        for x in samples(100 + n as u64) {
            let exact = p.eval(&Rat::from_float(x).unwrap());
            let exact = exact.to_f64().unwrap();
            assert!((p_trig(n, x) - exact).abs() <= 1e-9 * exact.abs().max(1.0), "n = {n}, x = {x}");
        }
    }
}
