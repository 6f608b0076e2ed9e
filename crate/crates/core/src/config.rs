//! JSON configuration documents.
//!
//! ```json
//! {"schema": "quartix/1", "mode": "operator", "coeff_form": "reduced",
//!  "a": [52, 2, 7, 1, 1], "b": [16, 1, 12, "5/4", 1]}
//! ```
//!
//! Gibbs mode takes `phi1`, `phi2`, `psi1`, `psi2` (ascending polynomial
//! coefficients, or `{"t": [...], "v": [...]}` samples), `J`, `beta` and an
//! optional `quadrature` block.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::gibbs::{Potential, PotentialSet};
use crate::operator::QuarticOperator;
use crate::quadrature::QuadratureConfig;
use crate::report::SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffForm {
    /// `a_i` as they multiply `C(4,i) x^{4−i} y^i`.
    Reduced,
    /// Monomial coefficients `C(4,i) a_i`.
    Expanded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OperatorConfig {
    pub coeff_form: CoeffForm,
    pub a: [f64; 5],
    pub b: [f64; 5],
}

impl OperatorConfig {
    pub fn operator(&self) -> Result<QuarticOperator<f64>> {
        match self.coeff_form {
            CoeffForm::Reduced => QuarticOperator::new(self.a, self.b),
            CoeffForm::Expanded => QuarticOperator::from_expanded(self.a, self.b),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GibbsConfig {
    pub potentials: PotentialSet<f64>,
    pub quadrature: QuadratureConfig,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Config {
    Operator(OperatorConfig),
    Gibbs(GibbsConfig),
}

fn cfg_err(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

/// A number, or a string `"p/q"` / `"p"`.
fn number(v: &Value, field: &str) -> Result<f64> {
    let x = match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => match s.split_once('/') {
            Some((p, q)) => match (p.trim().parse::<f64>(), q.trim().parse::<f64>()) {
                (Ok(p), Ok(q)) if q != 0.0 => Some(p / q),
                _ => None,
            },
            None => s.trim().parse().ok(),
        },
        _ => None,
    };
    match x {
        Some(x) if x.is_finite() => Ok(x),
        _ => Err(cfg_err(format!(
            "field `{field}`: expected a finite number or \"p/q\", got {v}"
        ))),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| cfg_err(format!("missing field `{name}`")))
}

fn five(obj: &Map<String, Value>, name: &str) -> Result<[f64; 5]> {
    let arr = field(obj, name)?
        .as_array()
        .ok_or_else(|| cfg_err(format!("field `{name}`: expected an array of 5 numbers")))?;
    if arr.len() != 5 {
        return Err(cfg_err(format!(
            "field `{name}`: expected 5 entries, got {}",
            arr.len()
        )));
    }
    let mut out = [0.0; 5];
    for (i, v) in arr.iter().enumerate() {
        out[i] = number(v, &format!("{name}[{i}]"))?;
    }
    Ok(out)
}

fn potential(obj: &Map<String, Value>, name: &str) -> Result<Potential<f64>> {
    match field(obj, name)? {
        Value::Array(arr) => arr
            .iter()
            .enumerate()
            .map(|(i, v)| number(v, &format!("{name}[{i}]")))
            .collect::<Result<Vec<_>>>()
            .map(Potential::Polynomial),
        Value::Object(tab) => {
            let list = |key: &str| -> Result<Vec<f64>> {
                let path = format!("{name}.{key}");
                field(tab, key)
                    .map_err(|_| cfg_err(format!("missing field `{path}`")))?
                    .as_array()
                    .ok_or_else(|| cfg_err(format!("field `{path}`: expected an array")))?
                    .iter()
                    .enumerate()
                    .map(|(i, v)| number(v, &format!("{path}[{i}]")))
                    .collect()
            };
            Ok(Potential::Tabulated {
                t: list("t")?,
                v: list("v")?,
            })
        }
        other => Err(cfg_err(format!(
            "field `{name}`: expected coefficient array or {{\"t\", \"v\"}} samples, got {other}"
        ))),
    }
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(cfg_err(format!("unknown field `{k}`"))),
        None => Ok(()),
    }
}

pub fn parse_config(text: &str) -> Result<Config> {
    let doc: Value = serde_json::from_str(text).map_err(|e| cfg_err(format!("invalid JSON: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| cfg_err("top level must be a JSON object"))?;
    if let Some(schema) = obj.get("schema") {
        if schema.as_str() != Some(SCHEMA) {
            return Err(cfg_err(format!(
                "field `schema`: expected \"{SCHEMA}\", got {schema}"
            )));
        }
    }
    let mode = field(obj, "mode")?
        .as_str()
        .ok_or_else(|| cfg_err("field `mode`: expected a string"))?;
    match mode {
        "operator" => {
            check_keys(obj, &["schema", "mode", "coeff_form", "a", "b"])?;
            let coeff_form = match obj.get("coeff_form").map(|v| v.as_str()) {
                None | Some(Some("reduced")) => CoeffForm::Reduced,
                Some(Some("expanded")) => CoeffForm::Expanded,
                _ => {
                    return Err(cfg_err(
                        "field `coeff_form`: expected \"reduced\" or \"expanded\"",
                    ))
                }
            };
            Ok(Config::Operator(OperatorConfig {
                coeff_form,
                a: five(obj, "a")?,
                b: five(obj, "b")?,
            }))
        }
        "gibbs" => {
            check_keys(
                obj,
                &[
                    "schema",
                    "mode",
                    "phi1",
                    "phi2",
                    "psi1",
                    "psi2",
                    "J",
                    "beta",
                    "quadrature",
                ],
            )?;
            let quadrature = match obj.get("quadrature") {
                None => QuadratureConfig::default(),
                Some(v) => serde_json::from_value(v.clone())
                    .map_err(|e| cfg_err(format!("field `quadrature`: {e}")))?,
            };
            quadrature
                .validate()
                .map_err(|e| cfg_err(format!("field `quadrature`: {e}")))?;
            let potentials = PotentialSet::new(
                potential(obj, "phi1")?,
                potential(obj, "phi2")?,
                potential(obj, "psi1")?,
                potential(obj, "psi2")?,
                number(field(obj, "J")?, "J")?,
                number(field(obj, "beta")?, "beta")?,
            )?;
            Ok(Config::Gibbs(GibbsConfig {
                potentials,
                quadrature,
            }))
        }
        other => Err(cfg_err(format!(
            "field `mode`: expected \"operator\" or \"gibbs\", got \"{other}\""
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        let cfg = parse_config(r#"{"mode":"operator","a":[52,2,7,1,1],"b":[16,1,12,"5/4","1"]}"#).unwrap();
        let Config::Operator(op) = cfg else { panic!() };
        assert_eq!(op.b, [16.0, 1.0, 12.0, 1.25, 1.0]);
        assert_eq!(op.coeff_form, CoeffForm::Reduced);
    }

    #[test]
    fn errors_name_the_field() {
        let cases = [
            (r#"{"mode":"operator","a":[1,1,1,1],"b":[1,1,1,1,1]}"#, "`a`"),
            (r#"{"mode":"operator","a":[1,1,1,1,1]}"#, "`b`"),
            (r#"{"mode":"operator","a":[1,1,"x",1,1],"b":[1,1,1,1,1]}"#, "a[2]"),
            (
                r#"{"mode":"operator","a":[1,1,1,1,1],"b":[1,1,1,1,1],"c":1}"#,
                "`c`",
            ),
            (
                r#"{"mode":"operator","coeff_form":"weird","a":[1,1,1,1,1],"b":[1,1,1,1,1]}"#,
                "coeff_form",
            ),
            (r#"{"mode":"nope"}"#, "mode"),
            (r#"{"schema":"other/2","mode":"operator"}"#, "schema"),
            (
                r#"{"mode":"gibbs","phi1":[1],"phi2":[1],"psi1":[1],"psi2":[1],"J":1,"beta":1,"quadrature":{"nodes":2}}"#,
                "quadrature",
            ),
            (
                r#"{"mode":"gibbs","phi1":[1],"phi2":{"t":[0,1]},"psi1":[1],"psi2":[1],"J":1,"beta":1}"#,
                "phi2.v",
            ),
        ];
        for (text, needle) in cases {
            let err = parse_config(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text}: {err}");
        }
    }

    #[test]
    fn negative_coefficient_is_reported_on_build() {
        let Config::Operator(op) =
            parse_config(r#"{"mode":"operator","a":[1,1,-1,1,1],"b":[1,1,1,1,1]}"#).unwrap()
        else {
            panic!()
        };
        let err = op.operator().unwrap_err().to_string();
        assert!(err.contains("a2") && err.contains("strictly positive"), "{err}");
    }

    #[test]
    fn gibbs_defaults() {
        let cfg = parse_config(
            r#"{"mode":"gibbs","phi1":[1],"phi2":[0,1],"psi1":[1],"psi2":[0,2],"J":1,"beta":0.5}"#,
        )
        .unwrap();
        let Config::Gibbs(g) = cfg else { panic!() };
        assert_eq!(g.quadrature, QuadratureConfig::default());
        assert_eq!(g.potentials.beta(), 0.5);
    }
}
