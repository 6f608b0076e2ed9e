//! Positive fixed points of quartic operators on the plane.
//!
//! A quartic operator `Q(x, y)` with positive coefficients has its strictly
//! positive fixed points on rays `y = ξ x`, where `ξ` runs over the positive
//! roots of a quintic `P5`. This crate builds `P5`, counts its positive roots
//! from the closed-form critical points (Cardano for the resolvent cubic,
//! Ferrari for the quartic `P5'`), cross-checks every count with a Sturm
//! sequence root oracle, and lifts the roots back to certified fixed points.
//! The [`gibbs`] module applies this to the Hammerstein operator of a
//! degenerate-kernel model on the order-4 Cayley tree.
//!
//! Everything numeric is generic over [`Real`]; the `*64` aliases below are
//! what the CLI uses. The polynomial and operator constructors also accept
//! exact scalars such as `num_rational::Ratio<i64>`.

// `!(x > 0)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classify;
pub mod closedform;
pub mod config;
pub mod error;
pub mod gibbs;
pub mod operator;
pub mod poly;
pub mod quadrature;
pub mod quintic;
pub mod report;
pub mod scalar;

pub use classify::{classify, Classification, Regime, Sign, SignPattern, TheoremBound};
pub use closedform::{cardano_real_roots, ferrari_extrema, resolvent, ExtremaSet, ResolventData};
pub use error::{Error, Result};
pub use gibbs::{certify_hammerstein, compute_coefficients, count_gibbs_measures, Potential, PotentialSet};
pub use operator::{AnalysisOptions, FixedPoint, OracleMode, QuarticOperator};
pub use poly::{isolate_real_roots, Poly, RootSet, SturmSequence};
pub use quadrature::{QuadratureConfig, RuleKind};
pub use quintic::Quintic;
pub use report::AnalysisReport;
pub use scalar::Real;

pub type Poly64 = Poly<f64>;
pub type Quintic64 = Quintic<f64>;
pub type QuarticOperator64 = QuarticOperator<f64>;
pub type AnalysisReport64 = AnalysisReport<f64>;
pub type PotentialSet64 = PotentialSet<f64>;

pub type Poly32 = Poly<f32>;
pub type Quintic32 = Quintic<f32>;
pub type QuarticOperator32 = QuarticOperator<f32>;
