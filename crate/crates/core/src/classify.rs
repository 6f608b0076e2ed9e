//! Counting positive roots of `P5` from its values at the four extrema.
//!
//! With `λ1 < λ2 < λ3 < λ4` real, `P5` increases on `(−∞, λ1)`, decreases on
//! `(λ1, λ2)`, increases on `(λ2, λ3)`, decreases on `(λ3, λ4)` and increases on
//! `(λ4, ∞)`. Together with `P5(0) = −μ5 < 0` and `P5(+∞) = +∞`, the signs of
//! `P5(λi)` fix the number of positive roots whenever `λ1 > 0`: every monotone
//! piece with a strict sign change holds exactly one root, and every extremum
//! where `P5` vanishes is a tangency root. When `λ4 < 0` the polynomial is
//! increasing on all of `(0, ∞)` and there is exactly one positive root.
//!
//! The count is derived from that skeleton. The standard table of sufficient
//! conditions is kept as [`TABLE_2`] and only used to label which row, if
//! any, a sign pattern satisfies.

use serde::Serialize;

use crate::closedform::{ExtremaSet, ResolventData};
use crate::poly::bisect;
use crate::quintic::Quintic;
use crate::scalar::Real;

/// Default relative width of the zero band around `P5(λi)`.
pub const DEFAULT_BAND: f64 = 1e-9;
/// Values within this multiple of the zero band are flagged as ambiguous.
pub const BOUNDARY_FACTOR: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "NEG")]
    Neg,
    #[serde(rename = "ZERO")]
    Zero,
    #[serde(rename = "POS")]
    Pos,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignPattern<T> {
    pub signs: [Sign; 4],
    pub values: [T; 4],
    pub zero_band: [T; 4],
    pub boundary_flags: [bool; 4],
}

impl<T: Real> SignPattern<T> {
    /// Signs of `P5(λi)` under `band_factor · scale(λi)`.
    pub fn at(quintic: &Quintic<T>, lambda: &[T; 4], band_factor: T) -> Self {
        let values = lambda.map(|l| quintic.eval(l));
        let zero_band = lambda.map(|l| band_factor * quintic.scale_at(l));
        let mut signs = [Sign::Zero; 4];
        let mut boundary_flags = [false; 4];
        for i in 0..4 {
            signs[i] = sign_of(values[i], zero_band[i]);
            boundary_flags[i] = values[i].abs() <= T::lit(BOUNDARY_FACTOR) * zero_band[i];
        }
        SignPattern {
            signs,
            values,
            zero_band,
            boundary_flags,
        }
    }

    pub fn ambiguous(&self) -> bool {
        self.boundary_flags.iter().any(|&f| f)
    }
}

fn sign_of<T: Real>(v: T, band: T) -> Sign {
    if v.abs() <= band {
        Sign::Zero
    } else if v > T::zero() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Positive roots implied by the monotone skeleton on `(0, ∞)` when `λ1 > 0`.
///
/// Walks `[−, s1, s2, s3, s4, +]`: each `ZERO` is one tangency root and each
/// adjacent pair of strictly opposite signs is one crossing root.
pub fn skeleton_count(signs: &[Sign; 4]) -> usize {
    let mut seq = vec![Sign::Neg];
    seq.extend_from_slice(signs);
    seq.push(Sign::Pos);
    let zeros = signs.iter().filter(|&&s| s == Sign::Zero).count();
    let crossings = seq
        .windows(2)
        .filter(|w| matches!((w[0], w[1]), (Sign::Neg, Sign::Pos) | (Sign::Pos, Sign::Neg)))
        .count();
    zeros + crossings
}

/// True when the signs respect the max/min/max/min alternation:
/// `P5(λ1) > P5(λ2) < P5(λ3) > P5(λ4)`.
pub fn skeleton_consistent(signs: &[Sign; 4]) -> bool {
    let rank = |s: Sign| match s {
        Sign::Neg => 0,
        Sign::Zero => 1,
        Sign::Pos => 2,
    };
    // Strict inequalities: two neighbouring extrema cannot both be zero.
    let above = |hi: Sign, lo: Sign| rank(hi) > rank(lo) || (hi == lo && hi != Sign::Zero);
    let [s1, s2, s3, s4] = *signs;
    above(s1, s2) && above(s3, s2) && above(s3, s4)
}

/// One sufficient condition: required signs at `λ1..λ4` (`None` = free).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub row: u8,
    pub require: [Option<Sign>; 4],
    pub n_fix: usize,
}

const fn row(row: u8, require: [Option<Sign>; 4], n_fix: usize) -> TableRow {
    TableRow { row, require, n_fix }
}

const N: Option<Sign> = Some(Sign::Neg);
const Z: Option<Sign> = Some(Sign::Zero);
const P: Option<Sign> = Some(Sign::Pos);
const F: Option<Sign> = None;

/// Sufficient conditions on `P5(λ1..λ4)` for `λ1 > 0`, in published order.
/// Rows 4 and 6 carry identical conditions.
pub const TABLE_2: [TableRow; 17] = [
    row(1, [N, F, N, F], 1),
    row(2, [Z, F, N, F], 2),
    row(3, [N, F, Z, F], 2),
    row(4, [F, P, F, Z], 2),
    row(5, [F, Z, F, P], 2),
    row(6, [F, P, F, Z], 2),
    row(7, [Z, F, F, Z], 3),
    row(8, [Z, F, Z, F], 3),
    row(9, [F, Z, F, Z], 3),
    row(10, [F, P, F, N], 3),
    row(11, [N, F, P, N], 3),
    row(12, [P, N, F, P], 3),
    row(13, [Z, F, P, N], 4),
    row(14, [P, F, Z, F], 4),
    row(15, [F, Z, F, N], 4),
    row(16, [P, N, F, Z], 4),
    row(17, [P, N, P, N], 5),
];

/// First row whose conditions the pattern satisfies.
pub fn table_row(signs: &[Sign; 4]) -> Option<&'static TableRow> {
    TABLE_2.iter().find(|r| {
        r.require
            .iter()
            .zip(signs)
            .all(|(req, s)| req.is_none_or(|want| want == *s))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    #[serde(rename = "THEOREM_1")]
    Theorem1,
    #[serde(rename = "TABLE_2")]
    Table2,
    #[serde(rename = "ORACLE_ONLY")]
    OracleOnly,
}

/// Lower-bound results that apply when `λ1 > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremBound {
    /// `P5(ξmin) = 0`: at least two roots.
    #[serde(rename = "THEOREM_2A")]
    Theorem2a,
    /// `P5(ξmax) = 0`: at least two roots.
    #[serde(rename = "THEOREM_2B")]
    Theorem2b,
    /// `P5(ξmin) > 0` and `P5(ξmax) < 0`: at least three roots.
    #[serde(rename = "THEOREM_3C")]
    Theorem3c,
}

impl TheoremBound {
    pub fn lower_bound(self) -> usize {
        match self {
            TheoremBound::Theorem2a | TheoremBound::Theorem2b => 2,
            TheoremBound::Theorem3c => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification<T> {
    pub regime: Regime,
    /// Exact count from the skeleton, or 1 when all extrema are negative.
    pub n_fix: Option<usize>,
    /// Theorem-style lower bound, when one applies.
    pub lower_bound: Option<usize>,
    pub theorem: Option<TheoremBound>,
    pub table_row: Option<u8>,
    pub pattern: Option<SignPattern<T>>,
    pub notes: Vec<String>,
}

impl<T: Real> Classification<T> {
    pub fn oracle_only(note: impl Into<String>) -> Self {
        Classification {
            regime: Regime::OracleOnly,
            n_fix: None,
            lower_bound: None,
            theorem: None,
            table_row: None,
            pattern: None,
            notes: vec![note.into()],
        }
    }

    pub fn ambiguous(&self) -> bool {
        self.pattern.as_ref().is_some_and(SignPattern::ambiguous)
    }

    pub fn boundary_flags(&self) -> [bool; 4] {
        self.pattern.as_ref().map_or([false; 4], |p| p.boundary_flags)
    }
}

/// Classifies the positive-root count of `P5` from closed-form extrema.
///
/// `extrema` is `None` when the closed form was unavailable; the result is
/// then `ORACLE_ONLY`. `band_factor` scales the zero band (default `1e-9`).
pub fn classify<T: Real>(
    quintic: &Quintic<T>,
    res: &ResolventData<T>,
    extrema: Option<&ExtremaSet<T>>,
    band_factor: T,
) -> Classification<T> {
    if !(res.disc < T::zero()) {
        return Classification::oracle_only("Q >= 0: no closed-form classification");
    }
    if !res.z0.is_some_and(|z| z > T::zero()) {
        return Classification::oracle_only("z0 <= 0: no closed-form classification");
    }
    let Some(ext) = extrema else {
        return Classification::oracle_only("closed-form extrema unavailable");
    };
    let pattern = SignPattern::at(quintic, &ext.lambda, band_factor);

    if ext.xi_max < T::zero() {
        return Classification {
            regime: Regime::Theorem1,
            n_fix: Some(1),
            lower_bound: None,
            theorem: None,
            table_row: None,
            pattern: Some(pattern),
            notes: vec!["all extrema negative: P5 increasing on (0, inf)".into()],
        };
    }
    if !(ext.xi_min > T::zero()) {
        let mut c = Classification::oracle_only("lambda1 <= 0: extrema straddle the origin");
        c.pattern = Some(pattern);
        return c;
    }

    let signs = pattern.signs;
    let mut notes = Vec::new();
    if !skeleton_consistent(&signs) {
        notes.push("sign pattern violates the max/min alternation; values are numerically unreliable".into());
    }
    let n = skeleton_count(&signs);
    let labelled = table_row(&signs);
    match labelled {
        Some(r) if r.row == 4 => notes.push("row 4 and row 6 share the same condition; labelled 4".into()),
        Some(_) => {}
        None => notes.push("sign pattern is not listed in the table; count from the skeleton".into()),
    }
    if let Some(r) = labelled.filter(|r| r.n_fix != n) {
        // Only reachable for patterns that break the alternation.
        notes.push(format!(
            "row {} lists {} but the skeleton counts {n}",
            r.row, r.n_fix
        ));
    }
    let theorem = if signs[0] == Sign::Zero {
        Some(TheoremBound::Theorem2a)
    } else if signs[3] == Sign::Zero {
        Some(TheoremBound::Theorem2b)
    } else if signs[0] == Sign::Pos && signs[3] == Sign::Neg {
        Some(TheoremBound::Theorem3c)
    } else {
        None
    };
    if pattern.ambiguous() {
        notes.push("extremum value within 10x the zero band: confirm with the oracle".into());
    }
    Classification {
        regime: Regime::Table2,
        n_fix: Some(n),
        lower_bound: theorem.map(TheoremBound::lower_bound),
        theorem,
        table_row: labelled.map(|r| r.row),
        pattern: Some(pattern),
        notes,
    }
}

/// Positive roots located from the skeleton alone: tangency roots at extrema
/// in the zero band, and one bisection per monotone piece with a sign change.
/// Returns an empty list for `ORACLE_ONLY`.
pub fn locate_roots<T: Real>(quintic: &Quintic<T>, ext: &ExtremaSet<T>, class: &Classification<T>) -> Vec<T> {
    let p = quintic.poly();
    let bound = quintic.cauchy_bound();
    match class.regime {
        Regime::OracleOnly => Vec::new(),
        Regime::Theorem1 => vec![bisect(&p, T::zero(), bound).0],
        Regime::Table2 => {
            let Some(pattern) = &class.pattern else {
                return Vec::new();
            };
            let mut points = vec![(T::zero(), Sign::Neg)];
            points.extend(ext.lambda.iter().copied().zip(pattern.signs));
            points.push((bound, Sign::Pos));
            let mut roots = Vec::new();
            for (i, w) in points.windows(2).enumerate() {
                let ((u, su), (v, sv)) = (w[0], w[1]);
                if i > 0 && su == Sign::Zero {
                    roots.push(u);
                }
                if matches!((su, sv), (Sign::Neg, Sign::Pos) | (Sign::Pos, Sign::Neg)) {
                    roots.push(bisect(&p, u, v).0);
                }
            }
            roots
        }
    }
}
