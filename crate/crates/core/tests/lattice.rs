mod common;

use common::*;
use cone_hull::lattice::{
    fiber_structure, independent_exponents, proper_box_pullback, separate_points, WitnessKind,
};
use cone_hull::polytope::{enumerate_exponents, EnumerationBudget};
use cone_hull::rational::{int, Rat};
use cone_hull::{Error, RationalPolytope};
use num::complex::Complex64;
use num::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

fn rand_torus_point(r: &mut rand_chacha::ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::from_polar(r.gen_range(0.5..1.5), r.gen_range(-3.0..3.0)))
        .collect()
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn independent_exponents_span_and_lie_in_cone(seed in 0u64..10_000, n in 1usize..=3) {
        let s = random_full_polytope(&mut rng(seed), n, n + 1, 3, &[1, 2]);
        let alphas = independent_exponents(&s).unwrap();
        prop_assert_eq!(alphas.len(), n);
        let rows: Vec<Vec<Rat>> = alphas.iter().map(|a| a.iter().map(|&c| int(c)).collect()).collect();
        prop_assert_eq!(exact_rank(&rows), n);
        for a in &alphas {
            prop_assert!(a.iter().all(|&c| c >= 0));
            prop_assert!(s.ray_scaling_lp(&a.iter().map(|&c| int(c)).collect::<Vec<_>>()).is_some());
        }
        let degrees: Vec<i64> = alphas.iter().map(|a| a.iter().sum()).collect();
        prop_assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn separation_certificate_is_genuine(seed in 0u64..10_000, n in 1usize..=3) {
        let mut r = rng(seed);
        let s = random_full_polytope(&mut r, n, n + 1, 3, &[1, 2]);
        let z = rand_torus_point(&mut r, n);
        let mut w = z.clone();
        let j = r.gen_range(0..n);
        if r.gen_bool(0.5) {
            w[j] *= 1.3;
        } else {
            w[j] = Complex64::from_polar(w[j].norm(), w[j].arg() + r.gen_range(0.3..2.0));
        }
        let cert = separate_points(&s, &z, &w).unwrap();
        let alpha: Vec<Rat> = cert.alpha.iter().map(|&c| int(c)).collect();
        prop_assert!(s.cone_contains(&alpha));
        let (za, wa) = (monomial(&z, &cert.alpha), monomial(&w, &cert.alpha));
        prop_assert!((za - wa).norm() > 1e-12);
        prop_assert!(((za - wa).norm() - cert.difference).abs() <= 1e-9 * (1.0 + cert.difference));
        let moduli_differ = z.iter().zip(&w).any(|(a, b)| a.norm().ln() != b.norm().ln());
        prop_assert_eq!(cert.kind == WitnessKind::ModulusDiffers, moduli_differ);
    }

    #[test]
    fn fiber_points_share_cone_monomials(seed in 0u64..10_000, k in 1usize..=2) {
        let mut r = rng(seed);
        let s = random_polytope(&mut r, 3, k, 3, &[1, 2]);
        prop_assume!(!s.is_origin());
        let map = fiber_structure(&s).unwrap();
        prop_assert_eq!(map.ell + map.kernel.len(), 3);
        prop_assert!(map.minor_gcd().is_one());
        for b in &map.kernel {
            for v in s.vertices() {
                prop_assert!(dot(v, &b.iter().map(|&c| int(c)).collect::<Vec<_>>()).is_zero());
            }
        }
        let z = rand_torus_point(&mut r, 3);
        let t = rand_torus_point(&mut r, map.kernel.len());
        let zt = map.fiber_point(&z, &t).unwrap();
        let image = map.apply(&z);
        for m in 1..=3 {
            for alpha in enumerate_exponents(&s, m, EnumerationBudget::DEFAULT).unwrap().points {
                prop_assert!(close(monomial(&z, &alpha), monomial(&zt, &alpha), 1e-10));
                let coords = map.factor_exponent(&alpha).unwrap();
                prop_assert!(coords.iter().all(|&c| c >= 0));
                prop_assert!(close(monomial(&image, &coords), monomial(&z, &alpha), 1e-10));
            }
        }
        for tv in &map.t_vertices {
            prop_assert!(tv.iter().all(|c| *c >= Rat::zero()));
        }
    }

    #[test]
    fn pullback_box_contains_preimage(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let alphas: Vec<Vec<i64>> = (0..2).map(|_| (0..2).map(|_| r.gen_range(0..4)).collect()).collect();
        prop_assume!(alphas[0][0] * alphas[1][1] != alphas[0][1] * alphas[1][0]);
        let (inner, outer) = (0.5, 2.0);
        let b = proper_box_pullback(&alphas, inner, outer).unwrap();
        for _ in 0..4000 {
            let x: Vec<f64> = (0..2).map(|_| r.gen_range(-4.0..4.0)).collect();
            let inside = alphas
                .iter()
                .all(|a| (inner.ln()..=outer.ln()).contains(&dotf(&a.iter().map(|&c| c as f64).collect::<Vec<_>>(), &x)));
            if inside {
                prop_assert!(b.contains(&x, 1e-12));
            }
        }
    }
}

#[test]
fn pullback_box_is_tight_at_corners() {
    // The preimage is a parallelogram; its corners solve <α_k, x> = log r or log R.
    let alphas = vec![vec![1, 1], vec![1, 0]];
    let b = proper_box_pullback(&alphas, 0.5, 2.0).unwrap();
    let (lo, hi) = (0.5f64.ln(), 2.0f64.ln());
    let mut xs = Vec::new();
    for &u in &[lo, hi] {
        for &v in &[lo, hi] {
            // x1 + x2 = u, x1 = v
            xs.push(vec![v, u - v]);
        }
    }
    for j in 0..2 {
        let min = xs.iter().map(|x| x[j]).fold(f64::INFINITY, f64::min);
        let max = xs.iter().map(|x| x[j]).fold(f64::NEG_INFINITY, f64::max);
        assert!((b.lower[j] - min).abs() < 1e-12);
        assert!((b.upper[j] - max).abs() < 1e-12);
    }
}

#[test]
fn pullback_rejects_bad_input() {
    assert!(matches!(
        proper_box_pullback(&[vec![1, 0], vec![0, 1]], 2.0, 1.0),
        Err(Error::InvalidRadii { .. })
    ));
    assert!(matches!(
        proper_box_pullback(&[vec![1, 1], vec![2, 2]], 0.5, 2.0),
        Err(Error::SingularExponents)
    ));
}

#[test]
fn equal_points_are_inseparable() {
    let s = RationalPolytope::standard_simplex(2);
    let z = vec![Complex64::new(0.3, 0.4), Complex64::new(-1.0, 0.2)];
    assert!(separate_points(&s, &z, &z).is_err());
}

#[test]
fn diagonal_has_one_kernel_direction() {
    let s = RationalPolytope::from_i64(2, &[&[0, 0], &[1, 1]]).unwrap();
    let map = fiber_structure(&s).unwrap();
    assert_eq!(map.columns, vec![vec![1, 1]]);
    assert_eq!(map.kernel, vec![vec![1, -1]]);
}
