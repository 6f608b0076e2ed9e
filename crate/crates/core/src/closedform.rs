//! Closed-form critical points of `P5`.
//!
//! `P5'(ξ) / (5μ0)` is depressed by the shift `ξ = ω − μ1/(5μ0)` into
//! `ω⁴ + pω² + qω + r`. Ferrari's method reduces that quartic to the resolvent
//! cubic `z³ + pz² + ((p² − 4r)/4) z − q²/8 = 0`, whose depressed form
//! `η³ + aη + b = 0` is solved trigonometrically when
//! `Q = (a/3)³ + (b/2)² < 0`. The least resolvent root `z0` then splits the
//! quartic into two quadratics whose roots are the four extrema of `P5`.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::quintic::Quintic;
use crate::scalar::Real;

/// Relative band inside which `|cos α|` slightly above one is clamped.
const COS_CLAMP: f64 = 1e-12;
/// Two extrema closer than this (relative) are treated as a repeated one.
pub const SEPARATION_TOL: f64 = 1e-9;
/// `|q|` below this (relative) switches to the biquadratic split.
const BIQUADRATIC_TOL: f64 = 1e-12;
/// Radicands down to `-RADICAND_TOL · scale` are taken as zero.
const RADICAND_TOL: f64 = 1e-10;
const POLISH_STEPS: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct ResolventData<T> {
    pub p: T,
    pub q: T,
    pub r: T,
    /// Depressed cubic `η³ + aη + b`.
    pub a: T,
    pub b: T,
    /// `(a/3)³ + (b/2)²`; negative means three distinct real cubic roots.
    pub disc: T,
    /// Angle with `cos α = −(b/2)(−3/a)^{3/2}`, set only when `disc < 0`.
    pub alpha: Option<T>,
    /// Least root of the resolvent cubic, set only when `disc < 0`.
    pub z0: Option<T>,
}

impl<T: Real> ResolventData<T> {
    /// `p, q, r, a, b, Q` only. Never fails for `μ0 ≠ 0`.
    pub fn coefficients(quintic: &Quintic<T>) -> Self {
        let [m0, m1, m2, m3, m4, _] = *quintic.mu();
        let c = T::lit;
        let p = (c(15.0) * m0 * m2 - c(6.0) * m1 * m1) / (c(25.0) * m0 * m0);
        let q =
            (c(50.0) * m0 * m0 * m3 + c(8.0) * m1.powi(3) - c(30.0) * m0 * m1 * m2) / (c(125.0) * m0.powi(3));
        let r = (c(15.0) * m0 * m1 * m1 * m2 - c(50.0) * m0 * m0 * m1 * m3 - c(3.0) * m1.powi(4)
            + c(125.0) * m0.powi(3) * m4)
            / (c(625.0) * m0.powi(4));
        let a = -p * p / c(12.0) - r;
        let b = -p.powi(3) / c(108.0) + p * r / c(3.0) - q * q / c(8.0);
        let disc = (a / c(3.0)).powi(3) + (b / c(2.0)).powi(2);
        ResolventData {
            p,
            q,
            r,
            a,
            b,
            disc,
            alpha: None,
            z0: None,
        }
    }

    /// The resolvent cubic `z³ + pz² + ((p² − 4r)/4) z − q²/8` in descending order.
    pub fn resolvent_cubic(&self) -> Poly<T> {
        let c = T::lit;
        Poly::new(vec![
            T::one(),
            self.p,
            (self.p * self.p - c(4.0) * self.r) / c(4.0),
            -self.q * self.q / c(8.0),
        ])
    }

    /// The depressed quartic `ω⁴ + pω² + qω + r`.
    pub fn depressed_quartic(&self) -> Poly<T> {
        Poly::new(vec![T::one(), T::zero(), self.p, self.q, self.r])
    }

    /// Magnitude against which `q` is judged: each quantity is brought to the
    /// units of `ω³`.
    fn q_scale(&self) -> T {
        let c = T::lit;
        T::one()
            .max(self.p.abs().powf(c(1.5)))
            .max(self.r.abs().powf(c(0.75)))
    }
}

/// All resolvent quantities; `alpha` and `z0` are filled in when `Q < 0`.
pub fn resolvent<T: Real>(quintic: &Quintic<T>) -> Result<ResolventData<T>> {
    if !(quintic.mu()[0] > T::zero()) {
        return Err(Error::InvalidQuintic);
    }
    let mut res = ResolventData::coefficients(quintic);
    if res.disc < T::zero() {
        let scale = T::one().max(res.p * res.p).max(res.r.abs());
        if res.a.abs() <= T::tol(1e-14) * scale {
            return Err(Error::DegenerateCubic);
        }
        let roots = cardano_real_roots(res.a, res.b)?;
        res.alpha = Some(roots.alpha);
        res.z0 = Some(roots.eta[2] - res.p / T::lit(3.0));
    }
    Ok(res)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CardanoRoots<T> {
    /// `η1, η2, η3` with `η3 < η1 < η2`.
    pub eta: [T; 3],
    pub alpha: T,
}

/// Trigonometric solution of `η³ + aη + b = 0` in the three-real-root case:
/// `η_k = 2√(−a/3) cos((α + 2π(k − 2))/3)`.
pub fn cardano_real_roots<T: Real>(a: T, b: T) -> Result<CardanoRoots<T>> {
    let c = T::lit;
    let disc = (a / c(3.0)).powi(3) + (b / c(2.0)).powi(2);
    if !(disc < T::zero()) {
        return Err(Error::CasusIrreducibilis(disc.to_f64_lossy()));
    }
    let mut cos_alpha = -(b / c(2.0)) * (-c(3.0) / a).powf(c(1.5));
    if cos_alpha.abs() > T::one() {
        if cos_alpha.abs() <= T::one() + T::tol(COS_CLAMP) {
            cos_alpha = cos_alpha.signum();
        } else {
            return Err(Error::AngleOutOfRange(cos_alpha.to_f64_lossy()));
        }
    }
    let alpha = cos_alpha.acos();
    let amp = c(2.0) * (-a / c(3.0)).sqrt();
    let two_pi = c(2.0) * T::PI();
    let eta_k = |k: i32| amp * ((alpha + two_pi * T::lit((k - 2) as f64)) / c(3.0)).cos();
    Ok(CardanoRoots {
        eta: [eta_k(1), eta_k(2), eta_k(3)],
        alpha,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtremaSet<T> {
    /// In formula order: the `+√(2z0)` pair, then the `−√(2z0)` pair.
    pub xi_ext: [T; 4],
    /// Sorted ascending, after a guarded Newton polish on `P5'`.
    pub lambda: [T; 4],
    pub xi_min: T,
    pub xi_max: T,
    /// True when the `|q| ≈ 0` biquadratic split was used.
    pub biquadratic: bool,
}

impl<T: Real> ExtremaSet<T> {
    /// `|P5'(λi)|` for each sorted extremum.
    pub fn derivative_residuals(&self, quintic: &Quintic<T>) -> [T; 4] {
        let d = quintic.derivative();
        self.lambda.map(|l| d.eval(l).abs())
    }
}

/// The four real critical points of `P5` from the closed-form Ferrari split.
///
/// Requires `Q < 0` and `z0 > 0`; anything else is reported as unavailable so
/// the caller can fall back to the numerical oracle.
pub fn ferrari_extrema<T: Real>(quintic: &Quintic<T>, res: &ResolventData<T>) -> Result<ExtremaSet<T>> {
    let c = T::lit;
    if !(res.disc < T::zero()) {
        return Err(Error::ClosedFormUnavailable(format!(
            "Q = {} is not negative",
            res.disc.to_f64_lossy()
        )));
    }
    let z0 = match res.z0 {
        Some(z) if z > T::zero() => z,
        Some(z) => {
            return Err(Error::ClosedFormUnavailable(format!(
                "z0 = {} is not positive",
                z.to_f64_lossy()
            )))
        }
        None => return Err(Error::ClosedFormUnavailable("z0 was not computed".into())),
    };
    let [m0, m1, ..] = *quintic.mu();
    let shift = m1 / (c(5.0) * m0);
    let (p, q, r) = (res.p, res.q, res.r);

    let biquadratic = q.abs() <= T::tol(BIQUADRATIC_TOL) * res.q_scale();
    let omega = if biquadratic {
        let scale = p * p + (c(4.0) * r).abs();
        let disc = clamp_radicand(p * p - c(4.0) * r, scale)?;
        let hi = (-p + disc.sqrt()) / c(2.0);
        let lo = (-p - disc.sqrt()) / c(2.0);
        let hi = clamp_radicand(hi, p.abs() + disc.sqrt())?.sqrt();
        let lo = clamp_radicand(lo, p.abs() + disc.sqrt())?.sqrt();
        [hi, -hi, lo, -lo]
    } else {
        let s = (c(2.0) * z0).sqrt();
        let t = q / (c(2.0) * s);
        let scale = c(2.0) * z0 + c(4.0) * (p.abs() / c(2.0) + z0 + t.abs());
        let rad_plus = clamp_radicand(c(2.0) * z0 - c(4.0) * (p / c(2.0) + z0 + t), scale)?.sqrt();
        let rad_minus = clamp_radicand(c(2.0) * z0 - c(4.0) * (p / c(2.0) + z0 - t), scale)?.sqrt();
        [
            (s + rad_plus) / c(2.0),
            (s - rad_plus) / c(2.0),
            (-s + rad_minus) / c(2.0),
            (-s - rad_minus) / c(2.0),
        ]
    };
    let xi_ext = omega.map(|w| w - shift);
    let mut lambda = xi_ext;
    lambda.sort_by(|x, y| x.partial_cmp(y).expect("extrema are finite"));
    for w in lambda.windows(2) {
        let tol = T::tol(SEPARATION_TOL) * w[0].abs().max(w[1].abs()).max(T::one());
        if w[1] - w[0] <= tol {
            return Err(Error::ClosedFormDegenerate(
                w[0].to_f64_lossy(),
                w[1].to_f64_lossy(),
            ));
        }
    }
    polish(&quintic.derivative(), &mut lambda);
    Ok(ExtremaSet {
        xi_ext,
        lambda,
        xi_min: lambda[0],
        xi_max: lambda[3],
        biquadratic,
    })
}

/// Newton on `P5'` from the closed-form values. With extrema spread over
/// several orders of magnitude the formula loses digits on the small ones to
/// cancellation; a few guarded steps win them back. A step is taken only if
/// it shrinks the residual and stays well inside the gap to the neighbours.
fn polish<T: Real>(d: &Poly<T>, lambda: &mut [T; 4]) {
    let dd = d.derivative();
    let seeds = *lambda;
    for i in 0..4 {
        let mut room = T::infinity();
        if i > 0 {
            room = room.min(seeds[i] - seeds[i - 1]);
        }
        if i < 3 {
            room = room.min(seeds[i + 1] - seeds[i]);
        }
        room = room / T::lit(4.0);
        let mut x = seeds[i];
        let mut fx = d.eval(x);
        for _ in 0..POLISH_STEPS {
            let slope = dd.eval(x);
            if fx == T::zero() || slope == T::zero() {
                break;
            }
            let next = x - fx / slope;
            let fnext = d.eval(next);
            if !((next - seeds[i]).abs() < room && fnext.abs() < fx.abs()) {
                break;
            }
            x = next;
            fx = fnext;
        }
        lambda[i] = x;
    }
}

fn clamp_radicand<T: Real>(v: T, scale: T) -> Result<T> {
    if v >= T::zero() {
        Ok(v)
    } else if v >= -T::tol(RADICAND_TOL) * scale.max(T::one()) {
        Ok(T::zero())
    } else {
        Err(Error::ComplexExtrema(v.to_f64_lossy()))
    }
}
