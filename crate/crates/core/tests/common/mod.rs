#![allow(dead_code)]

use quartix::{Poly, Potential, PotentialSet, QuarticOperator, Quintic};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Log-uniform in `[1e-2, 1e2]`.
pub fn log_uniform(rng: &mut impl Rng) -> f64 {
    10f64.powf(rng.gen_range(-2.0..=2.0))
}

pub fn random_operator(rng: &mut impl Rng) -> QuarticOperator<f64> {
    let a = std::array::from_fn(|_| log_uniform(rng));
    let b = std::array::from_fn(|_| log_uniform(rng));
    QuarticOperator::new(a, b).unwrap()
}

/// `P(ξ) = ∫_0^ξ 5 Π(s − λi) ds + c`, written as a quintic (`μ5 = −c`).
pub fn quintic_with_extrema(lambda: [f64; 4], c: f64) -> Quintic<f64> {
    let mut d = Poly::constant(5.0);
    for l in lambda {
        d = d.mul(&Poly::new(vec![1.0, -l]));
    }
    // d is degree 4 descending; integrate term by term.
    let dc = d.coeffs();
    let mut mu = [0.0; 6];
    for (k, &coef) in dc.iter().enumerate() {
        let power = (4 - k) as f64 + 1.0;
        mu[k] = coef / power;
    }
    mu[5] = -c;
    Quintic::from_mu(mu)
}

/// `∫_0^{λi} 5 Π(s − λj) ds`, so that `P(λi) = F[i] + c`.
pub fn extremum_offsets(lambda: [f64; 4]) -> [f64; 4] {
    let q = quintic_with_extrema(lambda, 0.0);
    lambda.map(|l| q.eval(l))
}

/// Monic quintic from its roots; `μ5` is `−P(0)`.
pub fn quintic_from_roots(roots: [f64; 5]) -> Quintic<f64> {
    let mut p = Poly::constant(1.0);
    for r in roots {
        p = p.mul(&Poly::new(vec![1.0, -r]));
    }
    Quintic::from_poly(&p).unwrap()
}

/// Four random positive polynomials of degree at most 3 with `J = β = 1`.
pub fn random_potential_set(rng: &mut impl Rng) -> PotentialSet<f64> {
    let mut gen = || -> Potential<f64> {
        let deg = rng.gen_range(0..=3);
        Potential::Polynomial((0..=deg).map(|_| rng.gen_range(0.1..2.0)).collect())
    };
    let (p1, p2, s1, s2) = (gen(), gen(), gen(), gen());
    PotentialSet::new(p1, p2, s1, s2, 1.0, 1.0).unwrap()
}

/// A positive operator whose quintic is `q`. Needs `μ0 > 0` and `μ5 > 0`;
/// each `μk` is split as a positive `a` term minus a positive `b` term.
pub fn operator_for(q: &Quintic<f64>) -> QuarticOperator<f64> {
    let [m0, m1, m2, m3, m4, m5] = *q.mu();
    let neg = |m: f64| 1.0 + (-m).max(0.0);
    let b4 = neg(m1);
    let b3 = neg(m2) / 4.0;
    let b2 = neg(m3) / 6.0;
    let b1 = neg(m4) / 4.0;
    let a = [
        m4 + 4.0 * b1,
        (m3 + 6.0 * b2) / 4.0,
        (m2 + 4.0 * b3) / 6.0,
        (m1 + b4) / 4.0,
        m0,
    ];
    QuarticOperator::new(a, [m5, b1, b2, b3, b4]).unwrap()
}
