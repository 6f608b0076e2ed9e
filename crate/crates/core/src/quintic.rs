use num_traits::Num;

use crate::poly::Poly;
use crate::scalar::Real;

/// `P5(ξ) = μ0 ξ⁵ + μ1 ξ⁴ + μ2 ξ³ + μ3 ξ² + μ4 ξ − μ5`, stored as the six
/// numbers `μ0..μ5` (note the sign convention on `μ5`).
#[derive(Clone, Debug, PartialEq)]
pub struct Quintic<T> {
    mu: [T; 6],
}

impl<T: Num + Copy> Quintic<T> {
    pub fn from_mu(mu: [T; 6]) -> Self {
        Quintic { mu }
    }

    /// Reads `μ` back from a degree-5 polynomial in descending order.
    pub fn from_poly(p: &Poly<T>) -> Option<Self> {
        let c = p.coeffs();
        if c.len() != 6 {
            return None;
        }
        Some(Quintic {
            mu: [c[0], c[1], c[2], c[3], c[4], T::zero() - c[5]],
        })
    }

    pub fn mu(&self) -> &[T; 6] {
        &self.mu
    }

    pub fn poly(&self) -> Poly<T> {
        let m = &self.mu;
        Poly::new(vec![m[0], m[1], m[2], m[3], m[4], T::zero() - m[5]])
    }

    pub fn eval(&self, xi: T) -> T {
        self.poly().eval(xi)
    }

    /// `5μ0 ξ⁴ + 4μ1 ξ³ + 3μ2 ξ² + 2μ3 ξ + μ4`.
    pub fn derivative(&self) -> Poly<T> {
        self.poly().derivative()
    }
}

impl<T: Real> Quintic<T> {
    /// `Σ|μi| · max(1, |ξ|)⁵`.
    pub fn scale_at(&self, xi: T) -> T {
        let sum = self.mu.iter().fold(T::zero(), |s, m| s + m.abs());
        sum * xi.abs().max(T::one()).powi(5)
    }

    /// Cauchy bound `1 + max|μi| / μ0` (i ≥ 1): every real root lies strictly
    /// inside `(-bound, bound)`.
    pub fn cauchy_bound(&self) -> T {
        let lead = self.mu[0].abs();
        let max = self.mu[1..].iter().fold(T::zero(), |m, c| m.max(c.abs()));
        T::one() + max / lead
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_carries_negated_constant() {
        let q = Quintic::from_mu([1.0, -10.0, 37.0, -64.0, 52.0, 16.0]);
        assert_eq!(q.poly().coeffs(), &[1.0, -10.0, 37.0, -64.0, 52.0, -16.0]);
        assert_eq!(q.eval(0.0), -16.0);
        assert_eq!(Quintic::from_poly(&q.poly()), Some(q));
    }

    #[test]
    fn cauchy_bound_encloses_roots() {
        let q = Quintic::from_mu([1.0, -10.0, 37.0, -64.0, 52.0, 16.0]);
        assert_eq!(q.cauchy_bound(), 65.0);
    }
}
