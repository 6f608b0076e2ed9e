mod common;

use proptest::prelude::*;
use quartix::closedform::{cardano_real_roots, resolvent};
use quartix::poly::isolate_real_roots;
use quartix::{Poly, Potential, PotentialSet, QuarticOperator, Quintic};

fn coeff() -> impl Strategy<Value = f64> {
    (-2.0f64..2.0).prop_map(|e| 10f64.powf(e))
}

fn operator() -> impl Strategy<Value = QuarticOperator<f64>> {
    (prop::array::uniform5(coeff()), prop::array::uniform5(coeff()))
        .prop_map(|(a, b)| QuarticOperator::new(a, b).unwrap())
}

fn positive_poly() -> impl Strategy<Value = Potential<f64>> {
    prop::collection::vec(0.1f64..2.0, 1..4).prop_map(Potential::Polynomial)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn horner_matches_power_sum(c in prop::collection::vec(-10.0f64..10.0, 1..7), x in -3.0f64..3.0) {
        let p = Poly::new(c);
        let tol = 1e-12 * p.scale_at(x);
        prop_assert!((p.eval(x) - p.eval_naive(x)).abs() <= tol);
    }

    #[test]
    fn descartes_bounds_the_positive_roots(op in operator()) {
        let q = op.build_quintic();
        let p = q.poly();
        let set = isolate_real_roots(&p, (0.0, q.cauchy_bound()), 1e-12).unwrap();
        prop_assert!(set.distinct_positive_count <= p.descartes_bound());
        prop_assert!(set.distinct_positive_count >= 1);
    }

    #[test]
    fn reported_roots_are_certified(op in operator()) {
        let q = op.build_quintic();
        let p = q.poly();
        let set = isolate_real_roots(&p, (0.0, q.cauchy_bound()), 1e-12).unwrap();
        for r in &set.roots {
            prop_assert!(p.eval(r.value).abs() <= 1e-9 * p.scale_at(r.value));
            let (lo, hi) = r.interval;
            prop_assert!(lo <= r.value && r.value <= hi);
            if r.multiplicity % 2 == 1 && lo < hi {
                let (a, b) = (p.eval(lo), p.eval(hi));
                prop_assert!(a == 0.0 || b == 0.0 || (a > 0.0) != (b > 0.0));
            }
        }
    }

    #[test]
    fn square_free_factors_multiply_back(
        roots in prop::collection::vec(-4i32..5, 1..4),
        mults in prop::collection::vec(1u32..3, 3),
    ) {
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        let mut p = Poly::constant(2.0);
        for (r, m) in distinct.iter().zip(&mults) {
            p = p.mul(&Poly::new(vec![1.0, -(*r as f64)]).pow(*m));
        }
        let mut back = Poly::constant(p.leading());
        for (f, k) in p.square_free_decomposition() {
            back = back.mul(&f.pow(k));
        }
        prop_assert_eq!(back.degree(), p.degree());
        for (x, y) in back.coeffs().iter().zip(p.coeffs()) {
            prop_assert!((x - y).abs() <= 1e-8 * p.max_abs_coeff());
        }
    }

    #[test]
    fn operator_is_homogeneous_of_degree_four(op in operator(), x in 0.0f64..3.0, y in 0.0f64..3.0, c in 0.1f64..5.0) {
        let (u, v) = op.apply(x, y).unwrap();
        let (uc, vc) = op.apply(c * x, c * y).unwrap();
        let c4 = c.powi(4);
        prop_assert!((uc - c4 * u).abs() <= 1e-12 * (c4 * u).max(1e-300));
        prop_assert!((vc - c4 * v).abs() <= 1e-12 * (c4 * v).max(1e-300));
    }

    #[test]
    fn fixed_points_exist_and_sit_on_their_rays(op in operator()) {
        let rep = op.count_fixed_points().unwrap();
        prop_assert!(rep.n_fix >= 1 && rep.n_fix <= 5);
        prop_assert_eq!(rep.n_fix, rep.fixed_points.len());
        for fp in &rep.fixed_points {
            prop_assert!(fp.x > 0.0 && fp.y > 0.0);
            prop_assert!((fp.y - fp.xi * fp.x).abs() <= 1e-14 * fp.y);
            let (u, v) = op.apply(fp.x, fp.y).unwrap();
            prop_assert!((u - fp.x).abs().max((v - fp.y).abs()) <= 1e-9 * (fp.x + fp.y));
        }
    }

    #[test]
    fn cardano_roots_solve_the_cubic(a in -50.0f64..-0.1, t in -0.99f64..0.99) {
        // Pick b so that Q < 0: |b/2| < (−a/3)^{3/2}.
        let b = 2.0 * t * (-a / 3.0).powf(1.5);
        let roots = cardano_real_roots(a, b).unwrap();
        let [e1, e2, e3] = roots.eta;
        prop_assert!(e3 < e1 && e1 < e2);
        for e in roots.eta {
            let scale = (e.abs().powi(3) + a.abs() * e.abs() + b.abs()).max(1.0);
            prop_assert!((e * e * e + a * e + b).abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn z0_lies_on_the_resolvent_cubic(op in operator()) {
        let q = op.build_quintic();
        let res = resolvent(&q).unwrap();
        if let Some(z0) = res.z0 {
            let cubic = res.resolvent_cubic();
            let x = z0.abs().max(1.0);
            let [m0, m1, m2, m3, m4, m5] = *q.mu();
            let mu_scale = (m0.abs() + m1.abs() + m2.abs() + m3.abs() + m4.abs() + m5.abs()) * x.powi(5);
            prop_assert!(cubic.eval(z0).abs() <= 1e-9 * cubic.scale_at(z0).max(mu_scale));
        }
    }

    #[test]
    fn kernel_diagnostic_matches_cancelled_form(
        f1 in positive_poly(), f2 in positive_poly(), p1 in positive_poly(), p2 in positive_poly(),
        j in prop_oneof![-3.0f64..-0.1, 0.1f64..3.0], beta in 0.1f64..5.0,
    ) {
        let pot = PotentialSet::new(f1, f2, p1, p2, j, beta).unwrap();
        for k in 0..33 {
            for l in 0..33 {
                let (t, u) = (k as f64 / 32.0, l as f64 / 32.0);
                let a = pot.kernel(t, u);
                let b = pot.kernel_uncancelled(t, u).unwrap();
                prop_assert!((a - b).abs() <= 1e-12 * a);
            }
        }
    }
}

#[test]
fn single_precision_pipeline() {
    let op = quartix::QuarticOperator32::from_expanded(
        [31.0, 0.5, 43.0 / 3.0, 0.25, 0.2],
        [10.0, 1.0, 31.0, 2.0 / 3.0, 3.0],
    )
    .unwrap();
    let rep = op.count_fixed_points().unwrap();
    assert_eq!(rep.n_fix, 5);
    assert!(rep.consistent);
}

#[test]
fn quintic_round_trips_through_poly() {
    let q = Quintic::from_mu([0.2, -2.75, 41.0 / 3.0, -30.5, 30.0, 10.0]);
    assert_eq!(Quintic::from_poly(&q.poly()).unwrap(), q);
}

#[test]
fn fixed_point_is_unique_on_its_ray() {
    let op = common::operator_for(&Quintic::from_mu([1.0, -10.0, 37.0, -64.0, 52.0, 16.0]));
    let fp = op.recover_fixed_point(4.0).unwrap();
    // Any other point on the ray scales Q by c^4 against c, so it moves.
    for c in [0.5, 0.9, 1.1, 2.0] {
        let (u, v) = op.apply(c * fp.x, c * fp.y).unwrap();
        assert!((u - c * fp.x).abs() > 1e-6 || (v - c * fp.y).abs() > 1e-6);
    }
}
