//! Translation-invariant Gibbs measures of the degenerate-kernel model on the
//! order-4 Cayley tree.
//!
//! The potential `ξ(t,u) = ln(ϕ1(t)φ1(u) + ϕ2(t)φ2(u)) / (Jβ)` gives the kernel
//! `K(t,u) = exp(Jβ ξ(t,u)) = ϕ1(t)φ1(u) + ϕ2(t)φ2(u)`. Because `K` has rank
//! two, every fixed point of `H4 g(t) = ∫ K(t,u) g(u)^4 du` has the form
//! `g = x ϕ1 + y ϕ2`, and `(x, y)` is then a fixed point of the quartic
//! operator with `a_i = ∫ φ1 ϕ1^{4−i} ϕ2^i`, `b_i = ∫ φ2 ϕ1^{4−i} ϕ2^i`.
//! Nothing here assumes that correspondence: each fixed point is lifted to a
//! function and checked against `H4` and `R4` by direct quadrature.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operator::{AnalysisOptions, FixedPoint, QuarticOperator};
use crate::quadrature::QuadratureConfig;
use crate::report::{AnalysisReport, InputEcho};
use crate::scalar::Real;

/// Uniform points on `[0, 1]` where potentials and the kernel are validated.
pub const VALIDATION_GRID: usize = 1001;
/// Uniform points on `[0, 1]` where certificates are evaluated.
pub const CERT_GRID: usize = 101;
/// Certificate residuals are accepted up to this, relative to `max(1, max|g|)`.
pub const CERT_TOL: f64 = 1e-9;

/// A positive function on `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Potential<T> {
    /// Coefficients in ascending powers of `u`.
    Polynomial(Vec<T>),
    /// Samples joined by straight lines; `t` strictly increasing from 0 to 1.
    Tabulated { t: Vec<T>, v: Vec<T> },
}

impl<T: Real> Potential<T> {
    pub fn eval(&self, u: T) -> T {
        match self {
            Potential::Polynomial(c) => c.iter().rev().fold(T::zero(), |acc, &ci| acc * u + ci),
            Potential::Tabulated { t, v } => {
                let k = t.partition_point(|&ti| ti <= u).clamp(1, t.len() - 1);
                let (t0, t1) = (t[k - 1], t[k]);
                let s = (u - t0) / (t1 - t0);
                v[k - 1] + s * (v[k] - v[k - 1])
            }
        }
    }

    fn check_shape(&self, name: &str) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPotential(format!("{name}: {msg}")));
        match self {
            Potential::Polynomial(c) if c.is_empty() => bad("empty coefficient list".into()),
            Potential::Polynomial(c) if c.iter().any(|x| !x.is_finite()) => {
                bad("non-finite coefficient".into())
            }
            Potential::Polynomial(_) => Ok(()),
            Potential::Tabulated { t, v } => {
                if t.len() < 2 || t.len() != v.len() {
                    return bad("tabulated t and v need equal lengths of at least 2".into());
                }
                if t[0] != T::zero() || t[t.len() - 1] != T::one() {
                    return bad("tabulated t must start at 0 and end at 1".into());
                }
                if t.windows(2).any(|w| !(w[0] < w[1])) {
                    return bad("tabulated t must be strictly increasing".into());
                }
                Ok(())
            }
        }
    }
}

/// The four potential functions with `J` and `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialSet<T> {
    phi1: Potential<T>,
    phi2: Potential<T>,
    psi1: Potential<T>,
    psi2: Potential<T>,
    j: T,
    beta: T,
}

impl<T: Real> PotentialSet<T> {
    /// `phi1`, `phi2` enter through `t` in the kernel, `psi1`, `psi2` through `u`.
    pub fn new(
        phi1: Potential<T>,
        phi2: Potential<T>,
        psi1: Potential<T>,
        psi2: Potential<T>,
        j: T,
        beta: T,
    ) -> Result<Self> {
        if j == T::zero() || !j.is_finite() {
            return Err(Error::InvalidPotential("J must be finite and non-zero".into()));
        }
        if !(beta > T::zero() && beta.is_finite()) {
            return Err(Error::InvalidPotential("beta must be finite and positive".into()));
        }
        let n = T::from(VALIDATION_GRID - 1).unwrap();
        let grid: Vec<T> = (0..VALIDATION_GRID).map(|k| T::from(k).unwrap() / n).collect();
        let mut values = Vec::with_capacity(4);
        for (name, f) in [("phi1", &phi1), ("phi2", &phi2), ("psi1", &psi1), ("psi2", &psi2)] {
            f.check_shape(name)?;
            let v: Vec<T> = grid.iter().map(|&u| f.eval(u)).collect();
            if let Some(k) = v.iter().position(|x| !(*x >= T::zero())) {
                return Err(Error::InvalidPotential(format!(
                    "{name} must be positive on [0, 1], got {} at u = {}",
                    v[k].to_f64_lossy(),
                    grid[k].to_f64_lossy()
                )));
            }
            if v.iter().all(|x| *x == T::zero()) {
                return Err(Error::InvalidPotential(format!(
                    "{name} vanishes on the whole grid"
                )));
            }
            values.push(v);
        }
        // Isolated zeros (such as u at 0) are allowed as long as the kernel
        // itself stays positive; a zero kernel would make ln undefined.
        // With all four non-negative, K(t,u) = 0 exactly when each product
        // has a vanishing factor, which reduces to four zero-set overlaps.
        let zero = |v: &[T], k: usize| v[k] == T::zero();
        let any = |f: &dyn Fn(usize) -> bool| (0..VALIDATION_GRID).any(f);
        let (f1, f2, p1, p2) = (&values[0], &values[1], &values[2], &values[3]);
        let vanishes = any(&|k| zero(f1, k) && zero(f2, k))
            || any(&|k| zero(p1, k) && zero(p2, k))
            || (any(&|k| zero(f1, k)) && any(&|k| zero(p2, k)))
            || (any(&|k| zero(f2, k)) && any(&|k| zero(p1, k)));
        if vanishes {
            return Err(Error::InvalidPotential(
                "kernel phi1(t) psi1(u) + phi2(t) psi2(u) vanishes somewhere on the grid".into(),
            ));
        }
        Ok(PotentialSet {
            phi1,
            phi2,
            psi1,
            psi2,
            j,
            beta,
        })
    }

    pub fn all_ones() -> Self {
        let one = || Potential::Polynomial(vec![T::one()]);
        Self::new(one(), one(), one(), one(), T::one(), T::one()).expect("constant potentials are valid")
    }

    pub fn j(&self) -> T {
        self.j
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    /// `(ϕ1, ϕ2)` at `t`.
    pub fn phi(&self, t: T) -> (T, T) {
        (self.phi1.eval(t), self.phi2.eval(t))
    }

    /// `(φ1, φ2)` at `u`.
    pub fn psi(&self, u: T) -> (T, T) {
        (self.psi1.eval(u), self.psi2.eval(u))
    }

    /// `K(t,u) = ϕ1(t)φ1(u) + ϕ2(t)φ2(u)`.
    pub fn kernel(&self, t: T, u: T) -> T {
        let (f1, f2) = self.phi(t);
        let (p1, p2) = self.psi(u);
        f1 * p1 + f2 * p2
    }

    /// `exp(Jβ ξ(t,u))` evaluated literally, without cancelling `exp∘ln`.
    pub fn kernel_uncancelled(&self, t: T, u: T) -> Result<T> {
        let arg = self.kernel(t, u);
        if !(arg > T::zero()) {
            return Err(Error::InvalidPotential(format!(
                "kernel argument {} is not positive at (t, u) = ({}, {})",
                arg.to_f64_lossy(),
                t.to_f64_lossy(),
                u.to_f64_lossy()
            )));
        }
        let jb = self.j * self.beta;
        let xi = arg.ln() / jb;
        Ok((jb * xi).exp())
    }
}

/// `a_i = ∫ φ1 ϕ1^{4−i} ϕ2^i`, `b_i = ∫ φ2 ϕ1^{4−i} ϕ2^i` over `[0, 1]`.
pub fn compute_coefficients<T: Real>(
    pot: &PotentialSet<T>,
    quad: &QuadratureConfig,
) -> Result<QuarticOperator<T>> {
    let vals = quad.integrate_all("operator coefficients", |u| {
        let (f1, f2) = pot.phi(u);
        let (p1, p2) = pot.psi(u);
        let mut out = Vec::with_capacity(10);
        for p in [p1, p2] {
            for i in 0..5 {
                out.push(p * f1.powi(4 - i) * f2.powi(i));
            }
        }
        out
    })?;
    let mut a = [T::zero(); 5];
    let mut b = [T::zero(); 5];
    a.copy_from_slice(&vals[..5]);
    b.copy_from_slice(&vals[5..]);
    QuarticOperator::new(a, b).map_err(|e| match e {
        Error::NonPositiveCoefficient { name } => {
            Error::InvalidPotential(format!("induced coefficient {name} is not strictly positive"))
        }
        other => other,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "T: Serialize")]
pub struct HammersteinCertificate<T> {
    /// `(t, g(t))` on the certificate grid.
    pub samples: Vec<(T, T)>,
    /// `max_t |H4 g(t) − g(t)|`.
    pub residual_h: T,
    /// `max_t |R4 f(t) − f(t)|` for `f = (g / g(0))^4`.
    pub residual_r: T,
    /// `max_t |g̃(t) − g(t)|` where `g̃ = f^{1/4} / (∫K(0,u) f)^{1/3}`.
    pub round_trip: T,
    pub f_at_zero: T,
    pub passed: bool,
    pub source: FixedPoint<T>,
}

/// Lifts `fp` to `g = x ϕ1 + y ϕ2` and checks it against `H4` and `R4`.
pub fn certify_hammerstein<T: Real>(
    pot: &PotentialSet<T>,
    fp: &FixedPoint<T>,
    quad: &QuadratureConfig,
) -> Result<HammersteinCertificate<T>> {
    let g = |t: T| {
        let (f1, f2) = pot.phi(t);
        fp.x * f1 + fp.y * f2
    };
    let n = T::from(CERT_GRID - 1).unwrap();
    let grid: Vec<T> = (0..CERT_GRID).map(|k| T::from(k).unwrap() / n).collect();
    let g0 = g(T::zero());
    let f = |t: T| (g(t) / g0).powi(4);

    // First half: ∫K(t,u) g^4(u) du. Second half: ∫K(t,u) f(u) du.
    let integrals = quad.integrate_all("Hammerstein residuals", |u| {
        let g4 = g(u).powi(4);
        let fu = f(u);
        let mut out = Vec::with_capacity(2 * grid.len());
        out.extend(grid.iter().map(|&t| pot.kernel(t, u) * g4));
        out.extend(grid.iter().map(|&t| pot.kernel(t, u) * fu));
        out
    })?;
    let (hg, kf) = integrals.split_at(grid.len());
    let norm = kf[0];

    let mut residual_h = T::zero();
    let mut residual_r = T::zero();
    let mut round_trip = T::zero();
    let mut g_max = T::zero();
    let mut f_max = T::zero();
    let mut samples = Vec::with_capacity(grid.len());
    for (k, &t) in grid.iter().enumerate() {
        let (gt, ft) = (g(t), f(t));
        samples.push((t, gt));
        g_max = g_max.max(gt.abs());
        f_max = f_max.max(ft.abs());
        residual_h = residual_h.max((hg[k] - gt).abs());
        residual_r = residual_r.max(((kf[k] / norm).powi(4) - ft).abs());
        let g_back = ft.powf(T::lit(0.25)) / norm.cbrt();
        round_trip = round_trip.max((g_back - gt).abs());
    }
    let tol = T::tol(CERT_TOL);
    let passed = residual_h <= tol * g_max.max(T::one())
        && residual_r <= tol * f_max.max(T::one())
        && round_trip <= tol * g_max.max(T::one());
    Ok(HammersteinCertificate {
        samples,
        residual_h,
        residual_r,
        round_trip,
        f_at_zero: f(T::zero()),
        passed,
        source: fp.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "T: Serialize")]
pub struct GibbsSummary<T> {
    /// Certified fixed functions of `H4` with distinct samples.
    pub n_measures: usize,
    pub distinct_functions: usize,
    pub certificates: Vec<HammersteinCertificate<T>>,
}

fn distinct_count<T: Real>(certs: &[&HammersteinCertificate<T>]) -> usize {
    let mut kept: Vec<&[(T, T)]> = Vec::new();
    let close = |a: &[(T, T)], b: &[(T, T)]| {
        a.iter()
            .zip(b)
            .all(|(&(_, x), &(_, y))| (x - y).abs() <= T::tol(1e-8) * x.abs().max(y.abs()))
    };
    for c in certs {
        if !kept.iter().any(|k| close(k, &c.samples)) {
            kept.push(&c.samples);
        }
    }
    kept.len()
}

/// Coefficients by quadrature, fixed points of the induced operator, and a
/// Hammerstein certificate for each.
pub fn count_gibbs_measures<T: Real>(
    pot: &PotentialSet<T>,
    quad: &QuadratureConfig,
    opts: &AnalysisOptions<T>,
) -> Result<AnalysisReport<T>> {
    let op = compute_coefficients(pot, quad)?;
    let mut report = op.analyze(opts)?;
    let certificates = report
        .fixed_points
        .iter()
        .map(|fp| certify_hammerstein(pot, fp, quad))
        .collect::<Result<Vec<_>>>()?;
    let passed: Vec<_> = certificates.iter().filter(|c| c.passed).collect();
    let distinct = distinct_count(&passed);
    if distinct != report.n_fix {
        report.consistent = false;
        report.classification.notes.push(format!(
            "{distinct} certified Hammerstein fixed functions for {} fixed points",
            report.n_fix
        ));
    }
    report.input = InputEcho::Gibbs {
        j: pot.j,
        beta: pot.beta,
        a: op.a().to_vec(),
        b: op.b().to_vec(),
    };
    report.gibbs = Some(GibbsSummary {
        n_measures: distinct,
        distinct_functions: distinct,
        certificates,
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> Potential<f64> {
        Potential::Polynomial(c.to_vec())
    }

    fn monomial() -> PotentialSet<f64> {
        PotentialSet::new(
            poly(&[1.0]),
            poly(&[0.0, 1.0]),
            poly(&[1.0]),
            poly(&[0.0, 2.0]),
            1.0,
            1.0,
        )
        .unwrap()
    }

    #[test]
    fn all_ones_kernel_is_two() {
        let pot = PotentialSet::<f64>::all_ones();
        for (t, u) in [(0.0, 0.0), (0.3, 0.9), (1.0, 1.0)] {
            assert_eq!(pot.kernel(t, u), 2.0);
        }
    }

    #[test]
    fn kernel_by_substitution() {
        let pot = PotentialSet::new(
            poly(&[1.0]),
            poly(&[1.0, 1.0]),
            poly(&[1.0]),
            poly(&[1.0]),
            1.0,
            1.0,
        )
        .unwrap();
        // phi2 = 1 + u here, so K = 1 + (1 + t).
        assert_eq!(pot.kernel(0.5, 0.25), 2.5);
    }

    #[test]
    fn monomial_coefficients() {
        let op = compute_coefficients(&monomial(), &QuadratureConfig::default()).unwrap();
        for i in 0..5 {
            let a = 1.0 / (i as f64 + 1.0);
            let b = 2.0 / (i as f64 + 2.0);
            assert!((op.a()[i] - a).abs() <= 1e-12 * a);
            assert!((op.b()[i] - b).abs() <= 1e-12 * b);
        }
    }

    #[test]
    fn all_ones_certificate() {
        let pot = PotentialSet::<f64>::all_ones();
        let rep =
            count_gibbs_measures(&pot, &QuadratureConfig::default(), &AnalysisOptions::default()).unwrap();
        assert_eq!(rep.n_fix, 1);
        let fp = &rep.fixed_points[0];
        let x = 16f64.powf(-1.0 / 3.0);
        assert!((fp.x - x).abs() <= 1e-10 * x);
        let g = rep.gibbs.unwrap();
        assert_eq!(g.n_measures, 1);
        let c = &g.certificates[0];
        assert!(c.passed);
        assert!(c.residual_h <= 1e-9 && c.residual_r <= 1e-9);
        assert_eq!(c.f_at_zero, 1.0);
        assert!(c.samples.iter().all(|&(_, gt)| (gt - 2.0 * x).abs() < 1e-12));
    }

    #[test]
    fn a_wrong_point_fails_certification() {
        let pot = PotentialSet::<f64>::all_ones();
        let fp = FixedPoint {
            xi: 1.0,
            x: 0.3,
            y: 0.3,
            residual: 0.0,
            multiplicity: 1,
        };
        let c = certify_hammerstein(&pot, &fp, &QuadratureConfig::default()).unwrap();
        assert!(!c.passed);
    }

    #[test]
    fn uncancelled_kernel_agrees() {
        let pot = PotentialSet::new(
            poly(&[1.0, 0.5]),
            poly(&[2.0, -1.0, 0.3]),
            poly(&[0.7]),
            poly(&[1.0, 0.0, 3.0]),
            -0.4,
            2.5,
        )
        .unwrap();
        for k in 0..=8 {
            for l in 0..=8 {
                let (t, u) = (k as f64 / 8.0, l as f64 / 8.0);
                let a = pot.kernel(t, u);
                let b = pot.kernel_uncancelled(t, u).unwrap();
                assert!((a - b).abs() <= 1e-12 * a);
            }
        }
    }

    #[test]
    fn validation_names_the_function() {
        let err = PotentialSet::new(
            poly(&[1.0]),
            poly(&[0.5, -1.0]),
            poly(&[1.0]),
            poly(&[1.0]),
            1.0,
            1.0,
        )
        .unwrap_err();
        assert!(err.to_string().contains("phi2"), "{err}");
        let err =
            PotentialSet::new(poly(&[1.0]), poly(&[1.0]), poly(&[1.0]), poly(&[1.0]), 0.0, 1.0).unwrap_err();
        assert!(err.to_string().contains('J'));
        let err =
            PotentialSet::new(poly(&[1.0]), poly(&[1.0]), poly(&[1.0]), poly(&[1.0]), 1.0, -1.0).unwrap_err();
        assert!(err.to_string().contains("beta"));
    }

    #[test]
    fn vanishing_kernel_is_rejected() {
        // phi1 and psi2 both vanish at 0, so K(0, 0) = 0.
        let err = PotentialSet::new(
            poly(&[0.0, 1.0]),
            poly(&[1.0]),
            poly(&[1.0]),
            poly(&[0.0, 1.0]),
            1.0,
            1.0,
        )
        .unwrap_err();
        assert!(err.to_string().contains("kernel"));
        assert!(PotentialSet::new(
            poly(&[1.0]),
            poly(&[0.0, 1.0]),
            poly(&[1.0]),
            poly(&[0.0, 1.0]),
            1.0,
            1.0
        )
        .is_ok());
    }

    #[test]
    fn tabulated_interpolates_linearly() {
        let p = Potential::Tabulated {
            t: vec![0.0, 0.5, 1.0],
            v: vec![1.0, 3.0, 2.0],
        };
        assert_eq!(p.eval(0.25), 2.0);
        assert_eq!(p.eval(0.75), 2.5);
        assert_eq!(p.eval(1.0), 2.0);
        assert_eq!(p.eval(0.0), 1.0);
    }

    #[test]
    fn swapping_phi_reverses_indices() {
        let base = |a: Potential<f64>, b: Potential<f64>| {
            PotentialSet::new(a, b, poly(&[1.0, 1.0]), poly(&[2.0, -0.5]), 1.0, 1.0).unwrap()
        };
        let q = QuadratureConfig::default();
        let op = compute_coefficients(&base(poly(&[1.0, 2.0]), poly(&[3.0, -1.0, 0.5])), &q).unwrap();
        let sw = compute_coefficients(&base(poly(&[3.0, -1.0, 0.5]), poly(&[1.0, 2.0])), &q).unwrap();
        for i in 0..5 {
            assert!((op.a()[i] - sw.a()[4 - i]).abs() <= 1e-12 * op.a()[i]);
            assert!((op.b()[i] - sw.b()[4 - i]).abs() <= 1e-12 * op.b()[i]);
        }
    }
}
