//! Analysis reports and their JSON / text renderings.

use std::fmt::Write as _;
use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::classify::{Regime, Sign, TheoremBound};
use crate::closedform::ResolventData;
use crate::gibbs::GibbsSummary;
use crate::operator::FixedPoint;
use crate::scalar::Real;

pub const SCHEMA: &str = "quartix/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    OracleFallback,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum InputEcho<T> {
    /// Reduced coefficients (binomial weights not applied).
    Operator { a: Vec<T>, b: Vec<T> },
    /// Potentials are not echoed; `a`, `b` are the reduced coefficients they induce.
    Gibbs { j: T, beta: T, a: Vec<T>, b: Vec<T> },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResolventSummary<T> {
    pub p: T,
    pub q: T,
    pub r: T,
    pub a: T,
    pub b: T,
    #[serde(rename = "Q")]
    pub disc: T,
    pub z0: Option<T>,
    pub alpha: Option<T>,
}

impl<T: Copy> From<&ResolventData<T>> for ResolventSummary<T> {
    fn from(r: &ResolventData<T>) -> Self {
        ResolventSummary {
            p: r.p,
            q: r.q,
            r: r.r,
            a: r.a,
            b: r.b,
            disc: r.disc,
            z0: r.z0,
            alpha: r.alpha,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationSummary {
    pub regime: Regime,
    pub table_row: Option<u8>,
    /// Count predicted by the closed form, if it applies.
    pub n_fix: Option<usize>,
    pub lower_bound: Option<usize>,
    pub theorem: Option<TheoremBound>,
    pub signs: Option<Vec<Sign>>,
    pub boundary_flags: Vec<bool>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "T: Serialize")]
pub struct AnalysisReport<T> {
    pub schema: String,
    pub input: InputEcho<T>,
    pub mu: Vec<T>,
    pub descartes_bound: usize,
    pub resolvent: ResolventSummary<T>,
    /// Critical points of `P5` in increasing order (empty when unavailable).
    pub lambdas: Vec<T>,
    pub p5_at_lambdas: Vec<T>,
    pub extrema_residuals: Vec<T>,
    pub classification: ClassificationSummary,
    /// Always `fixed_points.len()`.
    pub n_fix: usize,
    pub oracle_count: Option<usize>,
    pub fixed_points: Vec<FixedPoint<T>>,
    pub method: Method,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gibbs: Option<GibbsSummary<T>>,
}

/// Pretty JSON with every float written to 17 significant digits, so values
/// survive a round trip through text bit for bit.
pub struct FullPrecision(PrettyFormatter<'static>);

impl Default for FullPrecision {
    fn default() -> Self {
        FullPrecision(PrettyFormatter::new())
    }
}

impl Formatter for FullPrecision {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        write!(w, "{value:.8e}")
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn to_json<S: Serialize>(value: &S) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FullPrecision::default());
    value.serialize(&mut ser).expect("report types always serialize");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

/// The serialized name of a unit enum variant, so text and JSON agree.
fn label<S: Serialize>(value: &S) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        _ => String::from("?"),
    }
}

fn fmt_list<T: Real>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{:.12e}", x.to_f64_lossy())).collect();
    format!("[{}]", parts.join(", "))
}

impl<T: Real> AnalysisReport<T> {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.classification;
        let _ = writeln!(s, "mu               {}", fmt_list(&self.mu));
        let _ = writeln!(s, "descartes bound  {}", self.descartes_bound);
        let _ = writeln!(s, "Q                {:.12e}", self.resolvent.disc.to_f64_lossy());
        if let Some(z0) = self.resolvent.z0 {
            let _ = writeln!(s, "z0               {:.12e}", z0.to_f64_lossy());
        }
        if !self.lambdas.is_empty() {
            let _ = writeln!(s, "lambdas          {}", fmt_list(&self.lambdas));
            let _ = writeln!(s, "P5(lambdas)      {}", fmt_list(&self.p5_at_lambdas));
        }
        let _ = writeln!(s, "regime           {}", label(&c.regime));
        if let Some(row) = c.table_row {
            let _ = writeln!(s, "table row        {row}");
        }
        if let Some(lb) = c.lower_bound {
            let _ = writeln!(s, "lower bound      {lb}");
        }
        let _ = writeln!(s, "method           {}", label(&self.method));
        let _ = writeln!(s, "consistent       {}", self.consistent);
        let _ = writeln!(s, "fixed points     {}", self.n_fix);
        for fp in &self.fixed_points {
            let _ = writeln!(
                s,
                "  xi = {:.15e}  x = {:.15e}  y = {:.15e}  residual = {:.2e}  multiplicity = {}",
                fp.xi.to_f64_lossy(),
                fp.x.to_f64_lossy(),
                fp.y.to_f64_lossy(),
                fp.residual.to_f64_lossy(),
                fp.multiplicity
            );
        }
        if let Some(g) = &self.gibbs {
            let _ = writeln!(s, "gibbs measures   {}", g.n_measures);
            let _ = writeln!(s, "distinct g       {}", g.distinct_functions);
        }
        for note in &c.notes {
            let _ = writeln!(s, "note: {note}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_through_json() {
        let xs = vec![0.1f64, 1.0 / 3.0, 2f64.sqrt(), 1e-300, -6.02214076e23];
        let text = to_json(&xs);
        let back: Vec<f64> = serde_json::from_str(&text).unwrap();
        assert_eq!(xs, back);
        assert!(text.contains("3.3333333333333331e-1"));
    }

    #[test]
    fn non_finite_becomes_null() {
        let text = to_json(&vec![f64::NAN]);
        assert!(text.contains("null"));
    }
}
