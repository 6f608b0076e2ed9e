//! The quartic operator on the closed positive quadrant and its fixed points.
//!
//! `Q(x, y) = (Σ C(4,i) a_i x^{4−i} y^i, Σ C(4,i) b_i x^{4−i} y^i)` with all
//! ten coefficients strictly positive. A fixed point `(x, y)` with `x, y > 0`
//! has ratio `ξ = y/x` that is a positive root of `P5`, and every positive
//! root `ξ` gives back exactly one fixed point through
//! `x = (Σ C(4,i) a_i ξ^i)^{−1/3}`, `y = ξ x`.

use num_traits::Num;
use serde::Serialize;

use crate::classify::{classify, locate_roots, Classification, Regime, DEFAULT_BAND};
use crate::closedform::{ferrari_extrema, resolvent, ExtremaSet, ResolventData};
use crate::error::{Error, Result};
use crate::poly::{isolate_real_roots, multiplicity_at};
use crate::quintic::Quintic;
use crate::report::{AnalysisReport, ClassificationSummary, InputEcho, Method, ResolventSummary, SCHEMA};
use crate::scalar::{small, Real};

/// Binomial weights `C(4, i)`.
pub const BINOMIAL: [u32; 5] = [1, 4, 6, 4, 1];

/// Relative tolerance for `|P5(ξ)|` when accepting `ξ` as a root.
pub const ROOT_CERT_TOL: f64 = 1e-9;
/// Relative tolerance for `‖Q(x, y) − (x, y)‖∞` against `x + y`.
pub const FIXED_POINT_TOL: f64 = 1e-9;
/// Refinement width handed to the root oracle.
pub const ORACLE_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "T: Serialize")]
pub struct QuarticOperator<T> {
    a: [T; 5],
    b: [T; 5],
}

impl<T: Num + Copy + PartialOrd> QuarticOperator<T> {
    /// Operator from reduced coefficients (the binomial weights are applied
    /// at evaluation time).
    pub fn new(a: [T; 5], b: [T; 5]) -> Result<Self> {
        for (name, coeffs) in [("a", &a), ("b", &b)] {
            if let Some(i) = coeffs.iter().position(|c| !(*c > T::zero())) {
                return Err(Error::NonPositiveCoefficient {
                    name: format!("{name}{i}"),
                });
            }
        }
        Ok(QuarticOperator { a, b })
    }

    /// Operator from the monomial coefficients `C(4,i) a_i` as they appear in
    /// the expanded forms.
    pub fn from_expanded(a: [T; 5], b: [T; 5]) -> Result<Self> {
        let reduce = |c: [T; 5]| {
            let mut out = c;
            for (o, w) in out.iter_mut().zip(BINOMIAL) {
                *o = *o / small::<T>(w);
            }
            out
        };
        Self::new(reduce(a), reduce(b))
    }

    pub fn a(&self) -> &[T; 5] {
        &self.a
    }

    pub fn b(&self) -> &[T; 5] {
        &self.b
    }

    /// Monomial coefficients `C(4,i) a_i`, `C(4,i) b_i`.
    pub fn expanded(&self) -> ([T; 5], [T; 5]) {
        let mut a = self.a;
        let mut b = self.b;
        for i in 0..5 {
            a[i] = a[i] * small::<T>(BINOMIAL[i]);
            b[i] = b[i] * small::<T>(BINOMIAL[i]);
        }
        (a, b)
    }

    fn form(coeffs: &[T; 5], x: T, y: T) -> T {
        let mut acc = T::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            let mut term = c * small::<T>(BINOMIAL[i]);
            for _ in 0..4 - i {
                term = term * x;
            }
            for _ in 0..i {
                term = term * y;
            }
            acc = acc + term;
        }
        acc
    }

    pub fn apply(&self, x: T, y: T) -> Result<(T, T)> {
        if x < T::zero() || y < T::zero() {
            return Err(Error::Domain("operator is defined on x >= 0, y >= 0".into()));
        }
        Ok((Self::form(&self.a, x, y), Self::form(&self.b, x, y)))
    }

    /// `Σ C(4,i) a_i ξ^i`, the first component on the ray `(1, ξ)`.
    pub fn ray_a(&self, xi: T) -> T {
        Self::form(&self.a, T::one(), xi)
    }

    /// `Σ C(4,i) b_i ξ^i`.
    pub fn ray_b(&self, xi: T) -> T {
        Self::form(&self.b, T::one(), xi)
    }

    /// `μ0 = a4, μ1 = 4a3 − b4, μ2 = 6a2 − 4b3, μ3 = 4a1 − 6b2,
    /// μ4 = a0 − 4b1, μ5 = b0`.
    pub fn build_quintic(&self) -> Quintic<T> {
        let (a, b) = (&self.a, &self.b);
        let k = small::<T>;
        Quintic::from_mu([
            a[4],
            k(4) * a[3] - b[4],
            k(6) * a[2] - k(4) * b[3],
            k(4) * a[1] - k(6) * b[2],
            a[0] - k(4) * b[1],
            b[0],
        ])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixedPoint<T> {
    pub xi: T,
    pub x: T,
    pub y: T,
    pub residual: T,
    pub multiplicity: u32,
}

/// Which numerical routes [`QuarticOperator::analyze`] runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OracleMode {
    /// Closed form where it applies, always cross-checked by the oracle.
    #[default]
    Both,
    OracleOnly,
    /// Closed form only; refuses when the regime needs the oracle.
    ClosedFormOnly,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalysisOptions<T> {
    /// Relative zero band for `P5(λi)`.
    pub band_factor: T,
    pub mode: OracleMode,
}

impl<T: Real> Default for AnalysisOptions<T> {
    fn default() -> Self {
        AnalysisOptions {
            band_factor: T::lit(DEFAULT_BAND),
            mode: OracleMode::Both,
        }
    }
}

/// Closed-form stages that succeeded, plus the classification built on them.
struct ClosedForm<T> {
    res: ResolventData<T>,
    extrema: Option<ExtremaSet<T>>,
    class: Classification<T>,
}

fn run_closed_form<T: Real>(quintic: &Quintic<T>, band: T) -> ClosedForm<T> {
    let res = match resolvent(quintic) {
        Ok(res) => res,
        Err(e) => {
            return ClosedForm {
                res: ResolventData::coefficients(quintic),
                extrema: None,
                class: Classification::oracle_only(e.to_string()),
            }
        }
    };
    match ferrari_extrema(quintic, &res) {
        Ok(ext) => {
            let class = classify(quintic, &res, Some(&ext), band);
            ClosedForm {
                res,
                extrema: Some(ext),
                class,
            }
        }
        Err(e) => ClosedForm {
            class: Classification::oracle_only(e.to_string()),
            res,
            extrema: None,
        },
    }
}

impl<T: Real> QuarticOperator<T> {
    /// Lifts a positive root `ξ` of `P5` to the fixed point on the ray
    /// `y = ξ x`, certifying both the root and the fixed-point equation.
    pub fn recover_fixed_point(&self, xi: T) -> Result<FixedPoint<T>> {
        if !(xi > T::zero()) {
            return Err(Error::Domain(format!(
                "xi = {} must be positive",
                xi.to_f64_lossy()
            )));
        }
        let quintic = self.build_quintic();
        let p5 = quintic.eval(xi);
        if p5.abs() > T::tol(ROOT_CERT_TOL) * quintic.scale_at(xi) {
            return Err(Error::NotCertified {
                xi: xi.to_f64_lossy(),
                residual: p5.abs().to_f64_lossy(),
            });
        }
        let x = self.ray_a(xi).cbrt().recip();
        let y = xi * x;
        let (qx, qy) = self.apply(x, y)?;
        let residual = (qx - x).abs().max((qy - y).abs());
        if residual > T::tol(FIXED_POINT_TOL) * (x + y) {
            return Err(Error::NotCertified {
                xi: xi.to_f64_lossy(),
                residual: residual.to_f64_lossy(),
            });
        }
        Ok(FixedPoint {
            xi,
            x,
            y,
            residual,
            multiplicity: multiplicity_at(&quintic.poly(), xi).max(1),
        })
    }

    /// Positive fixed points with default options.
    pub fn count_fixed_points(&self) -> Result<AnalysisReport<T>> {
        self.analyze(&AnalysisOptions::default())
    }

    /// Full analysis: quintic, Descartes bound, closed-form classification
    /// where it applies, the root oracle, and certified fixed points.
    pub fn analyze(&self, opts: &AnalysisOptions<T>) -> Result<AnalysisReport<T>> {
        let quintic = self.build_quintic();
        let poly = quintic.poly();

        let closed = match opts.mode {
            OracleMode::OracleOnly => ClosedForm {
                res: ResolventData::coefficients(&quintic),
                extrema: None,
                class: Classification::oracle_only("closed form skipped on request"),
            },
            _ => run_closed_form(&quintic, opts.band_factor),
        };
        let class_count = match closed.class.regime {
            Regime::OracleOnly => None,
            _ => closed.class.n_fix,
        };

        let mut notes = Vec::new();
        let (roots, oracle_count, method, consistent) = match opts.mode {
            OracleMode::ClosedFormOnly => {
                let (Some(ext), Some(_)) = (&closed.extrema, class_count) else {
                    return Err(Error::ClosedFormRefused);
                };
                let roots = locate_roots(&quintic, ext, &closed.class);
                let roots: Vec<(T, u32)> = roots
                    .into_iter()
                    .map(|r| (r, multiplicity_at(&poly, r).max(1)))
                    .collect();
                (roots, None, Method::ClosedForm, true)
            }
            _ => {
                let set = isolate_real_roots(&poly, (T::zero(), quintic.cauchy_bound()), T::lit(ORACLE_TOL))?;
                let roots: Vec<(T, u32)> = set.positive().map(|r| (r.value, r.multiplicity)).collect();
                let n = roots.len();
                let (method, consistent) = match class_count {
                    None => (Method::OracleFallback, true),
                    Some(c) if c == n => (Method::ClosedForm, true),
                    Some(c) if closed.class.ambiguous() => {
                        notes.push(format!(
                            "closed form counted {c} near a tangency; oracle count {n} used"
                        ));
                        (Method::OracleFallback, true)
                    }
                    Some(c) => {
                        notes.push(format!("closed form counted {c} but the oracle found {n}"));
                        (Method::ClosedForm, false)
                    }
                };
                (roots, Some(n), method, consistent)
            }
        };

        let fixed_points = roots
            .iter()
            .map(|&(xi, m)| {
                self.recover_fixed_point(xi).map(|mut fp| {
                    fp.multiplicity = m;
                    fp
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let lambdas = closed
            .extrema
            .as_ref()
            .map(|e| e.lambda.to_vec())
            .unwrap_or_default();
        let p5_at_lambdas = lambdas.iter().map(|&l| quintic.eval(l)).collect();
        let extrema_residuals = closed
            .extrema
            .as_ref()
            .map(|e| e.derivative_residuals(&quintic).to_vec())
            .unwrap_or_default();

        let mut class_notes = closed.class.notes.clone();
        class_notes.extend(notes);
        Ok(AnalysisReport {
            schema: SCHEMA.to_string(),
            input: InputEcho::Operator {
                a: self.a.to_vec(),
                b: self.b.to_vec(),
            },
            mu: quintic.mu().to_vec(),
            descartes_bound: poly.descartes_bound(),
            resolvent: ResolventSummary::from(&closed.res),
            lambdas,
            p5_at_lambdas,
            extrema_residuals,
            classification: ClassificationSummary {
                regime: closed.class.regime,
                table_row: closed.class.table_row,
                n_fix: closed.class.n_fix,
                lower_bound: closed.class.lower_bound,
                theorem: closed.class.theorem,
                signs: closed.class.pattern.as_ref().map(|p| p.signs.to_vec()),
                boundary_flags: closed.class.boundary_flags().to_vec(),
                notes: class_notes,
            },
            n_fix: fixed_points.len(),
            oracle_count,
            fixed_points,
            method,
            consistent,
            gibbs: None,
        })
    }
}
