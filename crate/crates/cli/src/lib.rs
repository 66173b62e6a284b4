//! Subcommand implementations for the `rsk-toggle` binary.
//!
//! Each `cmd_*` function takes parsed input and returns the JSON document the
//! binary prints, so the commands can be exercised without spawning a
//! process.

use std::collections::BTreeMap;
use std::fmt;

use rsk_toggle::classical_rsk::classical_pipeline;
use rsk_toggle::greene_kleitman::{verify_gk, DEFAULT_PATH_CAP};
use rsk_toggle::hook_series::{
    rpp_gf, rpp_gf_brute, syt_count_by_hooks, weighted_rpp_gf, weighted_rpp_gf_brute, whlf_sides,
    ContentWeights, Rational, SeriesCaps, TruncatedSeries,
};
use rsk_toggle::octahedron::{build_all, check_octahedron, PyramidArray};
use rsk_toggle::partitions::DEFAULT_LINEAR_EXTENSION_CAP;
use rsk_toggle::toggle_rsk::{toggle_rsk, toggle_rsk_inverse};
use rsk_toggle::verify::{self, RunConfig, Suite, VerifyReport};
use rsk_toggle::{Cell, Error, NTableau, Partition};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input or configuration.
    Usage(String),
    /// Well-formed input rejected by the library.
    Validation(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Validation(_) => EXIT_VALIDATION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Validation(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Validation(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn parse_json(text: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("malformed JSON: {e}")))
}

/// Accepts either a bare array of rows or `{"shape": [...], "rows": [...]}`.
pub fn parse_tableau(text: &str) -> CliResult<NTableau> {
    let value = parse_json(text)?;
    if value.is_object() {
        return serde_json::from_value(value)
            .map_err(|e| CliError::Usage(format!("bad tableau: {e}")));
    }
    let rows: Vec<Vec<u64>> = serde_json::from_value(value)
        .map_err(|e| CliError::Usage(format!("bad tableau rows: {e}")))?;
    NTableau::from_rows(rows).map_err(|e| CliError::Usage(e.to_string()))
}

/// A square matrix; anything else is malformed input.
pub fn parse_matrix(text: &str) -> CliResult<NTableau> {
    let a = parse_tableau(text)?;
    match a.shape().square_side() {
        Some(_) => Ok(a),
        None if a.shape().is_empty() => Ok(a),
        None => Err(CliError::Usage(
            Error::NotSquare(a.shape().parts().to_vec()).to_string(),
        )),
    }
}

pub fn parse_partition(text: &str) -> CliResult<Partition> {
    let parts: Vec<usize> = serde_json::from_value(parse_json(text)?)
        .map_err(|e| CliError::Usage(format!("bad partition: {e}")))?;
    Partition::new(parts).map_err(|e| CliError::Usage(e.to_string()))
}

/// A JSON box list `[[row, col], ...]`.
pub fn parse_order(text: &str) -> CliResult<Vec<Cell>> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad box order: {e}")))
}

/// `{"<content>": w, ...}` where each `w` is a JSON number or a `"num/den"`
/// string.
pub fn parse_weights(text: &str, shape: &Partition) -> CliResult<ContentWeights> {
    let raw: BTreeMap<String, Value> = serde_json::from_value(parse_json(text)?)
        .map_err(|e| CliError::Usage(format!("bad weights: {e}")))?;
    let mut weights = BTreeMap::new();
    for (key, value) in raw {
        let content: i64 = key.parse().map_err(|_| {
            CliError::Usage(format!("weight key {key:?} is not an integer content"))
        })?;
        let text = match value {
            Value::String(s) => s,
            Value::Number(n) => n.to_string(),
            other => return Err(CliError::Usage(format!("weight {other} is not a rational"))),
        };
        let w: Rational = text
            .parse()
            .map_err(|_| CliError::Usage(format!("weight {text:?} is not a rational")))?;
        weights.insert(content, w);
    }
    Ok(ContentWeights::for_shape(shape, weights)?)
}

pub fn rows_json(t: &NTableau) -> Value {
    json!(t.rows())
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

fn series_json(s: &TruncatedSeries) -> Value {
    Value::Array(
        s.coeffs()
            .iter()
            .map(|c| {
                let text = c.to_string();
                text.parse::<u64>()
                    .map(Value::from)
                    .unwrap_or(Value::String(text))
            })
            .collect(),
    )
}

/// `A -> (P, Q) -> (GT(P), GT(Q)) -> Â`.
pub fn cmd_rsk(a: &NTableau) -> CliResult<Value> {
    let out = classical_pipeline(a)?;
    Ok(json!({
        "P": rows_json(out.p.tableau()),
        "Q": rows_json(out.q.tableau()),
        "GT_P": out.gt_p.rows(),
        "GT_Q": out.gt_q.rows(),
        "A_hat": rows_json(&out.a_hat),
    }))
}

pub fn cmd_toggle(t: &NTableau, order: Option<&[Cell]>) -> CliResult<NTableau> {
    Ok(toggle_rsk(t, order)?)
}

pub fn cmd_invert(t_hat: &NTableau) -> CliResult<NTableau> {
    Ok(toggle_rsk_inverse(t_hat)?)
}

pub struct Arrays {
    pub u: PyramidArray,
    pub ubar: PyramidArray,
    pub utilde: PyramidArray,
    pub octahedron_ok: bool,
}

impl Arrays {
    pub fn to_json(&self) -> Value {
        json!({
            "U": self.u,
            "Ubar": self.ubar,
            "Utilde": self.utilde,
            "octahedron_ok": self.octahedron_ok,
        })
    }

    pub fn render(&self) -> String {
        format!(
            "{}\n{}\n{}\noctahedron_ok: {}\n",
            self.u.render_levels(),
            self.ubar.render_levels(),
            self.utilde.render_levels(),
            self.octahedron_ok
        )
    }
}

pub fn cmd_arrays(t: &NTableau) -> CliResult<Arrays> {
    let (u, ubar, utilde) = build_all(t)?;
    let octahedron_ok = check_octahedron(&utilde, t)?.is_empty();
    Ok(Arrays {
        u,
        ubar,
        utilde,
        octahedron_ok,
    })
}

/// Returns the report and whether it is clean.
pub fn cmd_gk_check(t: &NTableau, max_boxes: usize) -> CliResult<(Value, bool)> {
    let cap = max_boxes.min(DEFAULT_PATH_CAP);
    if t.shape().size() > cap {
        return Err(CliError::Usage(format!(
            "shape has {} boxes, above the path-enumeration cap of {cap}",
            t.shape().size()
        )));
    }
    let violations = verify_gk(t, cap)?;
    let ok = violations.is_empty();
    Ok((json!({"input": rows_json(t), "violations": violations}), ok))
}

/// Hook product against brute-force enumeration through `q^degree`.
pub fn cmd_gf(
    shape: &Partition,
    weights: Option<&ContentWeights>,
    degree: usize,
    max_boxes: usize,
) -> CliResult<(Value, bool)> {
    let caps = SeriesCaps {
        max_boxes,
        max_degree: verify::MAX_SERIES_DEGREE,
    };
    let cap_error = |e: Error| match e {
        Error::CapExceeded { .. } => CliError::Usage(e.to_string()),
        other => CliError::Validation(other),
    };
    let (product, brute) = match weights {
        None => (
            rpp_gf(shape, degree, caps).map_err(cap_error)?,
            rpp_gf_brute(shape, degree, caps).map_err(cap_error)?,
        ),
        Some(w) => (
            weighted_rpp_gf(shape, w, degree, caps).map_err(cap_error)?,
            weighted_rpp_gf_brute(shape, w, degree, caps).map_err(cap_error)?,
        ),
    };
    let agree = product == brute;
    Ok((
        json!({
            "shape": shape,
            "degree": degree,
            "hook_product": series_json(&product),
            "enumeration": series_json(&brute),
            "agree": agree,
        }),
        agree,
    ))
}

/// Both sides of the content-weighted hook-length formula, plus the plain
/// SYT count check.
pub fn cmd_hlf(
    shape: &Partition,
    weights: Option<&ContentWeights>,
    max_boxes: usize,
) -> CliResult<(Value, bool)> {
    if shape.size() > max_boxes {
        return Err(CliError::Usage(format!(
            "shape has {} boxes, above --max-boxes {max_boxes}",
            shape.size()
        )));
    }
    let ones = ContentWeights::ones(shape);
    let w = weights.unwrap_or(&ones);
    let cap = DEFAULT_LINEAR_EXTENSION_CAP;
    let (lhs, rhs) = whlf_sides(shape, w, cap)?;
    let syt_count = shape.linear_extensions(cap)?.count();
    let by_hooks = syt_count_by_hooks(shape);
    let ok = lhs == rhs && by_hooks == syt_count.into();
    let weights_out: BTreeMap<String, Value> = w
        .weights()
        .iter()
        .map(|(c, v)| (c.to_string(), rational_json(v)))
        .collect();
    Ok((
        json!({
            "shape": shape,
            "weights": weights_out,
            "sum_over_syt": rational_json(&lhs),
            "hook_product": rational_json(&rhs),
            "syt_count": syt_count,
            "hook_count": by_hooks.to_string(),
            "holds": ok,
        }),
        ok,
    ))
}

pub fn cmd_verify(suite: Suite, config: &RunConfig) -> CliResult<VerifyReport> {
    verify::run(suite, config).map_err(|e| CliError::Usage(e.to_string()))
}

/// Rows as a right-aligned grid.
pub fn render_tableau(t: &NTableau) -> String {
    let width = t
        .entries()
        .map(|(_, v)| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: &str = "[[1,0,2],[0,2,0],[1,1,0]]";

    #[test]
    fn tableau_input_forms() {
        let bare = parse_tableau(A).unwrap();
        let object =
            parse_tableau(r#"{"shape":[3,3,3],"rows":[[1,0,2],[0,2,0],[1,1,0]]}"#).unwrap();
        assert_eq!(bare, object);
        assert!(matches!(
            parse_tableau("[[1,2],[3"),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            parse_tableau("[[1],[2,3]]"),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn matrix_must_be_square() {
        let err = parse_matrix("[[1,2,3],[4,5,6]]").unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn weights_parse() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        let w = parse_weights(r#"{"-1": "1/2", "0": 1, "1": "3"}"#, &shape).unwrap();
        assert_eq!(w.get(-1).unwrap(), &"1/2".parse::<Rational>().unwrap());
        let missing = parse_weights(r#"{"0": 1}"#, &shape).unwrap_err();
        assert_eq!(missing.exit_code(), EXIT_VALIDATION);
        assert_eq!(
            parse_weights(r#"{"x": 1}"#, &shape)
                .unwrap_err()
                .exit_code(),
            EXIT_USAGE
        );
    }

    #[test]
    fn rsk_of_zero_matrix() {
        let out = cmd_rsk(&parse_matrix("[[0,0],[0,0]]").unwrap()).unwrap();
        assert_eq!(out["P"], json!([]));
        assert_eq!(out["Q"], json!([]));
        assert_eq!(out["A_hat"], json!([[0, 0], [0, 0]]));
    }

    #[test]
    fn hlf_unit_weights() {
        let (out, ok) = cmd_hlf(&Partition::new(vec![3, 2]).unwrap(), None, 6).unwrap();
        assert!(ok);
        assert_eq!(out["syt_count"], json!(5));
        assert_eq!(out["sum_over_syt"], json!("1/24"));
    }
}
