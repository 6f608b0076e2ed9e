//! Dense univariate polynomials and a real-root isolation oracle.
//!
//! Coefficients are stored in descending degree order: `coeffs[0]` is the
//! leading coefficient. Evaluation, differentiation and the Descartes bound
//! only need ring operations, so they are available for exact scalars such as
//! `num_rational::Ratio<i64>`. Everything that compares against a tolerance
//! needs [`Real`].
//!
//! Root isolation runs a Sturm sequence on the square-free part of the input,
//! refines each isolated root by bisection, and assigns multiplicities by
//! checking how many successive derivatives also vanish there. When the
//! floating point Sturm counts turn out inconsistent it falls back to bracketing
//! between the critical points of the polynomial (found recursively).

use std::cmp::Ordering;

use num_traits::Num;

use crate::error::{Error, Result};
use crate::scalar::{small, Real};

/// Relative threshold below which a leading coefficient is treated as zero.
pub const TRIM_TOL: f64 = 1e-14;
/// Relative size at which a Euclidean remainder is considered zero.
const REMAINDER_TOL: f64 = 1e-10;
/// Relative residual under which a derivative is considered to vanish when
/// counting multiplicities.
pub const MULTIPLICITY_TOL: f64 = 1e-9;
/// Relative remainder allowed when confirming that a gcd candidate divides.
const GCD_CHECK_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Num + Copy> Poly<T> {
    /// Builds a polynomial from descending coefficients, dropping exact
    /// leading zeros. An empty slice is the zero polynomial.
    pub fn new(coeffs: Vec<T>) -> Self {
        let first = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(coeffs.len().saturating_sub(1));
        let mut coeffs = coeffs;
        coeffs.drain(..first);
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients (`c0 + c1 x + ...`).
    pub fn from_ascending(coeffs: &[T]) -> Self {
        Self::new(coeffs.iter().rev().copied().collect())
    }

    pub fn constant(c: T) -> Self {
        Poly { coeffs: vec![c] }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> T {
        self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: T) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, &c| acc * x + c)
    }

    /// Formal derivative. The derivative of a constant is the zero polynomial.
    pub fn derivative(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Poly::constant(T::zero());
        }
        let coeffs = self.coeffs[..n]
            .iter()
            .enumerate()
            .map(|(i, &c)| c * small::<T>((n - i) as u32))
            .collect();
        Poly::new(coeffs)
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Poly::constant(T::one()), |acc, _| acc.mul(self))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let pad = |c: &[T]| {
            let mut v = vec![T::zero(); n - c.len()];
            v.extend_from_slice(c);
            v
        };
        let (a, b) = (pad(&self.coeffs), pad(&other.coeffs));
        Poly::new(a.iter().zip(&b).map(|(&x, &y)| x + y).collect())
    }

    pub fn scale(&self, k: T) -> Self {
        Poly::new(self.coeffs.iter().map(|&c| c * k).collect())
    }
}

impl<T: Num + Copy + PartialOrd> Poly<T> {
    /// Number of sign changes in the coefficient sequence, zeros skipped.
    /// Upper bound on the number of positive roots counted with multiplicity.
    pub fn descartes_bound(&self) -> usize {
        let mut changes = 0;
        let mut last: Option<bool> = None;
        for &c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let positive = c > T::zero();
            if let Some(prev) = last {
                if prev != positive {
                    changes += 1;
                }
            }
            last = Some(positive);
        }
        changes
    }
}

impl<T: Real> Poly<T> {
    pub fn max_abs_coeff(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    pub fn abs_sum(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |s, c| s + c.abs())
    }

    /// `Σ|c_i| · max(1, |x|)^deg`, the magnitude against which residuals at
    /// `x` are judged.
    pub fn scale_at(&self, x: T) -> T {
        self.abs_sum() * x.abs().max(T::one()).powi(self.degree() as i32)
    }

    /// Naive power-sum evaluation, kept as an independent check on Horner.
    pub fn eval_naive(&self, x: T) -> T {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, &c)| acc + c * x.powi((n - i) as i32))
    }

    /// Drops leading coefficients below `1e-14 · max|c|`.
    pub fn trimmed(&self) -> Self {
        let cut = self.max_abs_coeff() * T::lit(TRIM_TOL);
        let first = self
            .coeffs
            .iter()
            .position(|c| c.abs() > cut)
            .unwrap_or(self.coeffs.len() - 1);
        Poly::new(self.coeffs[first..].to_vec())
    }

    /// True when the leading coefficient survives the relative trim.
    pub fn has_regular_leading(&self) -> bool {
        let max = self.max_abs_coeff();
        max > T::zero() && self.leading().abs() > max * T::lit(TRIM_TOL)
    }

    fn normalized(&self) -> Self {
        let m = self.max_abs_coeff();
        if m == T::zero() {
            return self.clone();
        }
        Poly::new(self.coeffs.iter().map(|&c| c / m).collect())
    }

    /// Polynomial long division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dn = divisor.degree();
        let n = self.degree();
        if n < dn {
            return (Poly::constant(T::zero()), self.clone());
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); n - dn + 1];
        for i in 0..=n - dn {
            let q = rem[i] / lead;
            quot[i] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j] - q * d;
            }
            rem[i] = T::zero();
        }
        let tail = rem[n - dn + 1..].to_vec();
        (Poly::new(quot), Poly::new(tail))
    }

    /// Remainder with coefficients that are negligible relative to the
    /// dividend flushed to an exact zero polynomial.
    fn rem_thresholded(&self, divisor: &Self) -> Self {
        let (_, r) = self.div_rem(divisor);
        let cut = self.max_abs_coeff().max(divisor.max_abs_coeff()) * T::lit(REMAINDER_TOL);
        if r.max_abs_coeff() <= cut {
            Poly::constant(T::zero())
        } else {
            r.trimmed_against(cut)
        }
    }

    fn trimmed_against(&self, cut: T) -> Self {
        let first = self
            .coeffs
            .iter()
            .position(|c| c.abs() > cut)
            .unwrap_or(self.coeffs.len() - 1);
        Poly::new(self.coeffs[first..].to_vec())
    }

    /// Monic greatest common divisor by the Euclidean algorithm, with
    /// remainders below a relative threshold treated as zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.rem_thresholded(&b);
            a = b;
            b = r.normalized();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        Poly::new(a.coeffs.iter().map(|&c| c / lead).collect())
    }

    /// Square-free part `p / gcd(p, p')`, scaled to unit max coefficient.
    ///
    /// A thresholded Euclid step can report a common factor that is not one
    /// (small remainders are not the same as small values), so a non-trivial
    /// gcd is kept only if it really divides both `p` and `p'`.
    pub fn square_free_part(&self) -> Self {
        if self.degree() == 0 {
            return self.clone();
        }
        let d = self.derivative();
        let g = self.gcd(&d);
        if g.degree() == 0 || !(self.divisible_by(&g) && d.divisible_by(&g)) {
            return self.normalized();
        }
        self.div_rem(&g).0.normalized()
    }

    fn divisible_by(&self, g: &Self) -> bool {
        let (_, r) = self.div_rem(g);
        r.max_abs_coeff() <= self.max_abs_coeff() * T::lit(GCD_CHECK_TOL)
    }

    /// Yun's square-free decomposition: factors `f_k` paired with their
    /// multiplicity `k`, such that `lead · Π f_k^k` reproduces the input.
    /// Every factor is monic; trivial (constant) factors are omitted.
    pub fn square_free_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let lead = self.leading();
        let monic = Poly::new(self.coeffs.iter().map(|&c| c / lead).collect());
        let d = monic.derivative();
        let mut a = monic.gcd(&d);
        let mut b = monic.div_rem(&a).0;
        let mut c = d.div_rem(&a).0;
        let mut k = 1;
        loop {
            let bd = b.derivative();
            let diff = c.add(&bd.scale(-T::one()));
            let cut = c.max_abs_coeff().max(bd.max_abs_coeff()).max(T::one()) * T::lit(REMAINDER_TOL);
            let diff = if diff.max_abs_coeff() <= cut {
                Poly::constant(T::zero())
            } else {
                diff
            };
            if diff.is_zero() {
                if b.degree() > 0 {
                    out.push((make_monic(&b), k));
                }
                break;
            }
            a = b.gcd(&diff);
            if a.degree() > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_rem(&a).0;
            c = diff.div_rem(&a).0;
            k += 1;
            if b.degree() == 0 {
                break;
            }
        }
        out
    }
}

fn make_monic<T: Real>(p: &Poly<T>) -> Poly<T> {
    let lead = p.leading();
    Poly::new(p.coeffs().iter().map(|&c| c / lead).collect())
}

/// Sturm chain `s, s', -rem(s, s'), ...` with negligible remainders cut off.
#[derive(Clone, Debug)]
pub struct SturmSequence<T> {
    chain: Vec<Poly<T>>,
}

impl<T: Real> SturmSequence<T> {
    pub fn new(p: &Poly<T>) -> Self {
        let mut chain = vec![p.normalized()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.normalized());
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = chain[n - 2].rem_thresholded(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(-T::one()).normalized());
        }
        SturmSequence { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign variations of the chain evaluated at `x`, exact zeros skipped.
    pub fn variations(&self, x: T) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v == T::zero() {
                continue;
            }
            let pos = v > T::zero();
            if last.is_some_and(|l| l != pos) {
                count += 1;
            }
            last = Some(pos);
        }
        count
    }

    /// Distinct roots in `(lo, hi]`, or `None` when floating point noise makes
    /// the count negative.
    pub fn count(&self, lo: T, hi: T) -> Option<usize> {
        self.variations(lo).checked_sub(self.variations(hi))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Root<T> {
    pub value: T,
    pub multiplicity: u32,
    pub interval: (T, T),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSet<T> {
    pub roots: Vec<Root<T>>,
    pub distinct_positive_count: usize,
    /// True when the Sturm counts were unusable and the critical-point
    /// bracketing path produced the roots.
    pub used_fallback: bool,
}

impl<T: Real> RootSet<T> {
    fn from_roots(mut roots: Vec<Root<T>>, used_fallback: bool) -> Self {
        roots.sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap_or(Ordering::Equal));
        let distinct_positive_count = roots.iter().filter(|r| r.value > T::zero()).count();
        RootSet {
            roots,
            distinct_positive_count,
            used_fallback,
        }
    }

    pub fn values(&self) -> Vec<T> {
        self.roots.iter().map(|r| r.value).collect()
    }

    pub fn positive(&self) -> impl Iterator<Item = &Root<T>> {
        self.roots.iter().filter(|r| r.value > T::zero())
    }
}

/// All distinct real roots of `p` in the closed interval `[lo, hi]`, each
/// with a multiplicity and a bracketing interval of width at most `tol`
/// (or as narrow as the floating point grid allows).
pub fn isolate_real_roots<T: Real>(p: &Poly<T>, interval: (T, T), tol: T) -> Result<RootSet<T>> {
    let (lo, hi) = interval;
    if !(tol > T::zero()) {
        return Err(Error::InvalidTolerance(tol.to_f64_lossy()));
    }
    if !(lo < hi) {
        return Err(Error::InvalidInterval {
            lo: lo.to_f64_lossy(),
            hi: hi.to_f64_lossy(),
        });
    }
    if !p.has_regular_leading() {
        return Err(Error::DegeneratePolynomial);
    }
    if p.degree() == 0 {
        return Ok(RootSet::from_roots(Vec::new(), false));
    }
    match sturm_isolate(p, lo, hi) {
        Some(roots) => Ok(RootSet::from_roots(roots, false)),
        None => Ok(RootSet::from_roots(chain_isolate(p, lo, hi, tol), true)),
    }
}

// Brackets are refined to machine precision, which is never wider than any
// positive `tol` a caller can meaningfully ask for.
fn sturm_isolate<T: Real>(p: &Poly<T>, lo: T, hi: T) -> Option<Vec<Root<T>>> {
    let s = p.square_free_part();
    if s.degree() == 0 {
        return Some(Vec::new());
    }
    let sturm = SturmSequence::new(&s);

    let pad = |x: T| T::tol(1e-12) * x.abs().max(T::one());
    let near_zero = |x: T| s.eval(x).abs() <= T::epsilon() * s.scale_at(x);
    let a0 = if near_zero(lo) { lo - pad(lo) } else { lo };
    let b0 = if near_zero(hi) { hi + pad(hi) } else { hi };

    let total = sturm.count(a0, b0)?;
    if total > s.degree() {
        return None;
    }

    let min_width = T::epsilon() * T::lit(64.0) * a0.abs().max(b0.abs()).max(T::one());
    let mut isolated = Vec::new();
    let mut stack = vec![(a0, b0, total)];
    while let Some((a, b, n)) = stack.pop() {
        match n {
            0 => {}
            1 => isolated.push((a, b)),
            _ => {
                if b - a < min_width {
                    return None;
                }
                let mut mid = (a + b) / T::lit(2.0);
                if near_zero(mid) {
                    mid = mid + (b - a) * T::lit(1.0 / 64.0);
                }
                let left = sturm.count(a, mid)?;
                let right = sturm.count(mid, b)?;
                if left + right != n {
                    return None;
                }
                stack.push((mid, b, right));
                stack.push((a, mid, left));
            }
        }
    }

    let mut roots = Vec::with_capacity(isolated.len());
    for (a, b) in isolated {
        let (sa, sb) = (s.eval(a), s.eval(b));
        if sa == T::zero() || sb == T::zero() || (sa > T::zero()) == (sb > T::zero()) {
            return None;
        }
        let (r0, _) = bisect(&s, a, b);
        let root = finish_root(p, r0, (a, b))?;
        if root.value < lo || root.value > hi {
            continue;
        }
        roots.push(root);
    }

    // A sign change across the interval needs an odd total multiplicity.
    let (pl, ph) = (p.eval(lo), p.eval(hi));
    if pl != T::zero() && ph != T::zero() {
        let total: u32 = roots.iter().map(|r| r.multiplicity).sum();
        if ((pl > T::zero()) != (ph > T::zero())) != (total % 2 == 1) {
            return None;
        }
    }
    Some(roots)
}

/// Polishes an approximate root of `p` and assigns its multiplicity.
fn finish_root<T: Real>(p: &Poly<T>, approx: T, bracket: (T, T)) -> Option<Root<T>> {
    let m = multiplicity_at(p, approx);
    if m == 0 {
        return None;
    }
    // The (m-1)-th derivative has a simple root here.
    let target = p.nth_derivative(m as usize - 1);
    let (a, b) = bracket;
    let interval = if m == 1 {
        bisect(&target, a, b).1
    } else {
        let delta = T::tol(1e-6) * approx.abs().max(T::one());
        let (u, v) = ((approx - delta).max(a), (approx + delta).min(b));
        let (fu, fv) = (target.eval(u), target.eval(v));
        if fu != T::zero() && fv != T::zero() && (fu > T::zero()) != (fv > T::zero()) {
            bisect(&target, u, v).1
        } else {
            (approx, approx)
        }
    };
    let value = (interval.0 + interval.1) / T::lit(2.0);
    let m = multiplicity_at(p, value).max(1);
    Some(Root {
        value,
        multiplicity: m,
        interval,
    })
}

/// Number of leading members of `p, p', p'', ...` that vanish at `x` within
/// `MULTIPLICITY_TOL · scale`. Zero when `x` is not a root of `p`.
pub fn multiplicity_at<T: Real>(p: &Poly<T>, x: T) -> u32 {
    let mut m = 0;
    let mut d = p.clone();
    while d.degree() > 0 {
        if d.eval(x).abs() <= T::tol(MULTIPLICITY_TOL) * d.scale_at(x) {
            m += 1;
            d = d.derivative();
        } else {
            break;
        }
    }
    m
}

/// Bisection to machine precision on a bracket with a sign change (or an
/// endpoint zero). Returns the midpoint and the final bracket.
pub(crate) fn bisect<T: Real>(p: &Poly<T>, mut a: T, mut b: T) -> (T, (T, T)) {
    let mut fa = p.eval(a);
    if fa == T::zero() {
        return (a, (a, a));
    }
    if p.eval(b) == T::zero() {
        return (b, (b, b));
    }
    for _ in 0..400 {
        let mid = (a + b) / T::lit(2.0);
        if !(mid > a && mid < b) {
            break;
        }
        let fm = p.eval(mid);
        if fm == T::zero() {
            return (mid, (mid, mid));
        }
        if (fm > T::zero()) == (fa > T::zero()) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    ((a + b) / T::lit(2.0), (a, b))
}

/// Fallback: roots located between consecutive critical points, which are
/// themselves found recursively from the derivative chain.
fn chain_isolate<T: Real>(p: &Poly<T>, lo: T, hi: T, tol: T) -> Vec<Root<T>> {
    let values = chain_roots(p, lo, hi);
    let mut out: Vec<Root<T>> = Vec::new();
    for v in values {
        let m = multiplicity_at(p, v).max(1);
        let w = tol.min(T::tol(1e-12) * v.abs().max(T::one())) / T::lit(2.0);
        out.push(Root {
            value: v,
            multiplicity: m,
            interval: (v - w, v + w),
        });
    }
    out
}

fn chain_roots<T: Real>(p: &Poly<T>, lo: T, hi: T) -> Vec<T> {
    match p.degree() {
        0 => Vec::new(),
        1 => {
            let c = p.coeffs();
            let r = -c[1] / c[0];
            if r >= lo && r <= hi {
                vec![r]
            } else {
                Vec::new()
            }
        }
        _ => {
            let crit = chain_roots(&p.derivative(), lo, hi);
            let mut breaks = vec![lo];
            breaks.extend(crit.iter().copied().filter(|&c| c > lo && c < hi));
            breaks.push(hi);
            let is_zero = |x: T| p.eval(x).abs() <= T::tol(MULTIPLICITY_TOL) * p.scale_at(x);
            let mut roots: Vec<T> = Vec::new();
            let push = |r: T, roots: &mut Vec<T>| {
                let sep = T::tol(1e-12) * r.abs().max(T::one());
                if roots.last().is_none_or(|&l| (r - l).abs() > sep) {
                    roots.push(r);
                }
            };
            for w in breaks.windows(2) {
                let (u, v) = (w[0], w[1]);
                if is_zero(u) {
                    push(u, &mut roots);
                    continue;
                }
                if is_zero(v) {
                    continue;
                }
                let (fu, fv) = (p.eval(u), p.eval(v));
                if (fu > T::zero()) != (fv > T::zero()) {
                    push(bisect(p, u, v).0, &mut roots);
                }
            }
            if is_zero(hi) {
                push(hi, &mut roots);
            }
            roots
        }
    }
}

/// Roots of `p` found purely by the critical-point bracketing path.
pub fn isolate_by_critical_points<T: Real>(p: &Poly<T>, interval: (T, T), tol: T) -> Result<RootSet<T>> {
    let (lo, hi) = interval;
    if !(lo < hi) {
        return Err(Error::InvalidInterval {
            lo: lo.to_f64_lossy(),
            hi: hi.to_f64_lossy(),
        });
    }
    if !p.has_regular_leading() {
        return Err(Error::DegeneratePolynomial);
    }
    Ok(RootSet::from_roots(chain_isolate(p, lo, hi, tol), true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn ex1() -> Poly<f64> {
        Poly::new(vec![1.0, -10.0, 37.0, -64.0, 52.0, -16.0])
    }

    fn ex2_exact() -> Poly<Ratio<i64>> {
        let r = |n, d| Ratio::new(n, d);
        Poly::new(vec![r(1, 5), r(-11, 4), r(41, 3), r(-61, 2), r(30, 1), r(-10, 1)])
    }

    #[test]
    fn eval_examples() {
        assert_eq!(ex1().eval(1.0), 0.0);
        assert_eq!(ex1().eval(0.0), -16.0);
        assert_eq!(ex2_exact().eval(Ratio::from_integer(1)), Ratio::new(37, 60));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(ex1().derivative().coeffs(), &[5.0, -40.0, 111.0, -128.0, 52.0]);
        let d = ex2_exact().derivative();
        let ints: Vec<Ratio<i64>> = [1, -11, 41, -61, 30]
            .iter()
            .map(|&k| Ratio::from_integer(k))
            .collect();
        assert_eq!(d.coeffs(), ints.as_slice());
        for root in [1, 2, 3, 5] {
            assert_eq!(d.eval(Ratio::from_integer(root)), Ratio::from_integer(0));
        }
        assert_eq!(Poly::new(vec![7.0]).derivative().coeffs(), &[0.0]);
    }

    #[test]
    fn descartes_examples() {
        assert_eq!(ex1().descartes_bound(), 5);
        assert_eq!(Poly::new(vec![1, 1, 1, 1, 1, 1]).descartes_bound(), 0);
        assert_eq!(Poly::new(vec![1, 0, -1]).descartes_bound(), 1);
    }

    #[test]
    fn leading_zeros_are_dropped() {
        let p = Poly::new(vec![0.0, 0.0, 2.0, 1.0]);
        assert_eq!(p.degree(), 1);
        assert!(Poly::<f64>::new(vec![]).is_zero());
    }

    #[test]
    fn example1_roots_with_multiplicity() {
        let set = isolate_real_roots(&ex1(), (0.0, 100.0), 1e-12).unwrap();
        let got: Vec<(f64, u32)> = set.roots.iter().map(|r| (r.value, r.multiplicity)).collect();
        assert_eq!(got.len(), 3, "{got:?}");
        for ((v, m), (ev, em)) in got.iter().zip([(1.0, 2), (2.0, 2), (4.0, 1)]) {
            assert!((v - ev).abs() < 1e-10, "{v} vs {ev}");
            assert_eq!(*m, em);
        }
        assert_eq!(set.distinct_positive_count, 3);
        assert!(!set.used_fallback);
    }

    #[test]
    fn simple_quadratic() {
        let set = isolate_real_roots(&Poly::new(vec![1.0f64, 0.0, -4.0]), (0.0, 10.0), 1e-12).unwrap();
        assert_eq!(set.roots.len(), 1);
        assert!((set.roots[0].value - 2.0).abs() < 1e-14);
        assert_eq!(set.roots[0].multiplicity, 1);
        let (a, b) = set.roots[0].interval;
        assert!(b - a <= 1e-12 && a <= 2.0 && 2.0 <= b);
    }

    #[test]
    fn example2_one_root_per_monotone_piece() {
        let p = Poly::new(vec![0.2, -2.75, 41.0 / 3.0, -30.5, 30.0, -10.0]);
        let set = isolate_real_roots(&p, (0.0, 100.0), 1e-12).unwrap();
        let v = set.values();
        assert_eq!(v.len(), 5);
        let cuts = [0.0, 1.0, 2.0, 3.0, 5.0, 100.0];
        for (i, r) in v.iter().enumerate() {
            assert!(*r > cuts[i] && *r < cuts[i + 1], "root {r} not in piece {i}");
        }
    }

    #[test]
    fn root_at_interval_endpoint_is_reported() {
        let p = Poly::new(vec![1.0, -3.0, 2.0]); // roots 1, 2
        let set = isolate_real_roots(&p, (1.0, 2.0), 1e-12).unwrap();
        assert_eq!(set.roots.len(), 2);
    }

    #[test]
    fn errors() {
        let p = Poly::new(vec![1e-20, 1.0, 1.0]);
        assert_eq!(
            isolate_real_roots(&p, (0.0, 1.0), 1e-9),
            Err(Error::DegeneratePolynomial)
        );
        assert!(matches!(
            isolate_real_roots(&ex1(), (1.0, 0.0), 1e-9),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(matches!(
            isolate_real_roots(&ex1(), (0.0, 1.0), 0.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn triple_root() {
        // (x-1)^3 (x-3)
        let p = Poly::new(vec![1.0, -6.0, 12.0, -10.0, 3.0]);
        let set = isolate_real_roots(&p, (-5.0, 5.0), 1e-12).unwrap();
        let got: Vec<(f64, u32)> = set.roots.iter().map(|r| (r.value, r.multiplicity)).collect();
        assert_eq!(got.len(), 2);
        assert!((got[0].0 - 1.0).abs() < 1e-9 && got[0].1 == 3);
        assert!((got[1].0 - 3.0).abs() < 1e-12 && got[1].1 == 1);
    }

    #[test]
    fn fallback_path_agrees_on_examples() {
        let set = isolate_by_critical_points(&ex1(), (0.0, 100.0), 1e-12).unwrap();
        let got: Vec<(f64, u32)> = set.roots.iter().map(|r| (r.value, r.multiplicity)).collect();
        assert_eq!(got.len(), 3);
        assert_eq!(got.iter().map(|g| g.1).collect::<Vec<_>>(), vec![2, 2, 1]);
    }

    #[test]
    fn yun_decomposition_of_example1() {
        let parts = ex1().square_free_decomposition();
        assert_eq!(parts.len(), 2);
        let (f1, k1) = &parts[0];
        let (f2, k2) = &parts[1];
        assert_eq!((*k1, *k2), (1, 2));
        assert_eq!(f1.degree(), 1);
        assert!((f1.eval(4.0)).abs() < 1e-10);
        assert_eq!(f2.degree(), 2);
        assert!(f2.eval(1.0).abs() < 1e-10 && f2.eval(2.0).abs() < 1e-10);
    }

    #[test]
    fn sturm_counts_distinct_roots() {
        let s = SturmSequence::new(&ex1().square_free_part());
        assert_eq!(s.count(0.0, 100.0), Some(3));
        assert_eq!(s.count(1.5, 3.0), Some(1));
    }

    #[test]
    fn f32_instantiation() {
        let p: Poly<f32> = Poly::new(vec![1.0, 0.0, -4.0]);
        let set = isolate_real_roots(&p, (0.0, 10.0), 1e-6).unwrap();
        assert!((set.roots[0].value - 2.0).abs() < 1e-5);
    }
}
