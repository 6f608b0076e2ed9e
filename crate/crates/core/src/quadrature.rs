//! Quadrature on `[0, 1]`: Gauss-Legendre and composite Simpson, each run
//! under doubling until successive estimates agree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{small, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleKind {
    GaussLegendre,
    Simpson,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureConfig {
    pub rule: RuleKind,
    /// Gauss-Legendre node count or Simpson panel count for the first pass.
    pub nodes: usize,
    /// Relative agreement required between a pass and its doubled successor.
    pub rel_tol: f64,
    pub max_doublings: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rule: RuleKind::GaussLegendre,
            nodes: 16,
            rel_tol: 1e-10,
            max_doublings: 10,
        }
    }
}

/// Nodes and weights on `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> Rule<T> {
    pub fn integrate(&self, f: impl Fn(T) -> T) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&u, &w)| acc + w * f(u))
    }
}

/// `n`-point Gauss-Legendre rule mapped to `[0, 1]`. Nodes are Newton
/// iterates on `P_n` from the Chebyshev-like starting guesses.
pub fn gauss_legendre<T: Real>(n: usize) -> Rule<T> {
    let one = T::one();
    let two = small::<T>(2);
    let half = one / two;
    let nt = T::from(n).expect("node count fits in T");
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    for i in 0..n.div_ceil(2) {
        let k = T::from(i).unwrap();
        let mut x = (T::PI() * (k + T::lit(0.75)) / (nt + half)).cos();
        let mut dp = T::one();
        for _ in 0..100 {
            // Three-term recurrence for P_n(x) and P_{n-1}(x).
            let (mut p0, mut p1) = (one, x);
            for j in 2..=n {
                let jt = T::from(j).unwrap();
                let p2 = ((two * jt - one) * x * p1 - (jt - one) * p0) / jt;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pm = if n == 1 { one } else { p0 };
            dp = nt * (x * pn - pm) / (x * x - one);
            let dx = pn / dp;
            x = x - dx;
            if dx.abs() <= T::epsilon() * small::<T>(4) {
                break;
            }
        }
        let w = two / ((one - x * x) * dp * dp);
        nodes[i] = half * (one - x);
        nodes[n - 1 - i] = half * (one + x);
        weights[i] = half * w;
        weights[n - 1 - i] = half * w;
    }
    Rule { nodes, weights }
}

/// Composite Simpson with `panels` subintervals (rounded up to even).
pub fn simpson<T: Real>(panels: usize) -> Rule<T> {
    let m = panels.max(2).next_multiple_of(2);
    let h = T::one() / T::from(m).unwrap();
    let third = h / small::<T>(3);
    let nodes = (0..=m).map(|i| T::from(i).unwrap() * h).collect();
    let weights = (0..=m)
        .map(|i| {
            if i == 0 || i == m {
                third
            } else if i % 2 == 1 {
                small::<T>(4) * third
            } else {
                small::<T>(2) * third
            }
        })
        .collect();
    Rule { nodes, weights }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nodes < 8 {
            return Err(Error::InvalidQuadrature(format!(
                "nodes = {} must be at least 8",
                self.nodes
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::InvalidQuadrature(format!(
                "rel_tol = {} must be positive",
                self.rel_tol
            )));
        }
        Ok(())
    }

    pub fn rule<T: Real>(&self, n: usize) -> Rule<T> {
        match self.rule {
            RuleKind::GaussLegendre => gauss_legendre(n),
            RuleKind::Simpson => simpson(n),
        }
    }

    /// Integrates every component of `f` over `[0, 1]`, doubling the rule
    /// until each component changes by at most `rel_tol` relative.
    pub fn integrate_all<T: Real>(&self, what: &str, f: impl Fn(T) -> Vec<T>) -> Result<Vec<T>> {
        self.validate()?;
        let run = |n: usize| {
            let rule = self.rule::<T>(n);
            let mut acc: Vec<T> = Vec::new();
            let mut mag: Vec<T> = Vec::new();
            for (&u, &w) in rule.nodes.iter().zip(&rule.weights) {
                let vals = f(u);
                if acc.is_empty() {
                    acc = vec![T::zero(); vals.len()];
                    mag = vec![T::zero(); vals.len()];
                }
                for ((a, m), v) in acc.iter_mut().zip(mag.iter_mut()).zip(vals) {
                    *a = *a + w * v;
                    *m = *m + w * v.abs();
                }
            }
            (acc, mag)
        };
        let rel = T::tol(self.rel_tol);
        let floor = T::epsilon() * small::<T>(64);
        let mut n = self.nodes;
        let (mut prev, _) = run(n);
        let mut last_pair = (f64::NAN, f64::NAN);
        for _ in 0..self.max_doublings {
            n *= 2;
            let (cur, mag) = run(n);
            let mut converged = true;
            for ((&p, &c), &m) in prev.iter().zip(&cur).zip(&mag) {
                if (c - p).abs() > rel * c.abs() + floor * m {
                    converged = false;
                    last_pair = (p.to_f64_lossy(), c.to_f64_lossy());
                    break;
                }
            }
            if converged {
                return Ok(cur);
            }
            prev = cur;
        }
        Err(Error::QuadratureNotConverged {
            what: what.to_string(),
            previous: last_pair.0,
            last: last_pair.1,
        })
    }

    pub fn integrate<T: Real>(&self, what: &str, f: impl Fn(T) -> T) -> Result<T> {
        Ok(self.integrate_all(what, |u| vec![f(u)])?[0])
    }
}
