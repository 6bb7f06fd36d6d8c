//! JSON documents read and written by the command-line tool.
//!
//! Integers are JSON numbers of any size (or decimal strings). Laurent
//! polynomials are lists of `[exponent, coefficient]` pairs, canonically with
//! ascending exponents and no zero coefficients. Rational line coefficients
//! may also be `"p/q"` strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Number, Value};

use crate::arrangement::{ArrangementReport, Line, LineArrangement, OmegaSubset};
use crate::chain::{EquivariantComplex, HomologyProfile, IntComplex};
use crate::covers::{CoverOutcome, OracleProfiles, PipelineReport};
use crate::error::{Error, Result};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::linalg::{AbelianGroup, IntMatrix, SmithForm};

/// A chain complex document: `{"ring": "int" | "laurent", "ranks", "boundaries"}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexDoc {
    Int(IntComplex),
    Laurent(EquivariantComplex),
}

/// An arrangement document: `{"lines": [[a, b, c], ...], "omega": [i, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementDoc {
    pub arrangement: LineArrangement,
    pub omega: OmegaSubset,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses JSON text, reporting syntax errors by line and column.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {}, column {}: {}", e.line(), e.column(), strip_position(&e))))
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.find(" at line ") {
        Some(k) => s[..k].to_string(),
        None => s,
    }
}

fn bigint(v: &Value, path: &str) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return Err(parse_err(format!("{path}: expected an integer"))),
    };
    BigInt::from_str(&text).map_err(|_| parse_err(format!("{path}: `{text}` is not an integer")))
}

fn small(v: &Value, path: &str) -> Result<i64> {
    let n = bigint(v, path)?;
    i64::try_from(&n).map_err(|_| parse_err(format!("{path}: {n} out of range")))
}

fn index(v: &Value, path: &str) -> Result<usize> {
    let n = bigint(v, path)?;
    usize::try_from(&n).map_err(|_| parse_err(format!("{path}: {n} is not a valid index")))
}

fn rational(v: &Value, path: &str) -> Result<BigRational> {
    if let Value::String(s) = v {
        if let Some((p, q)) = s.split_once('/') {
            let p = BigInt::from_str(p.trim()).map_err(|_| parse_err(format!("{path}: bad numerator in `{s}`")))?;
            let q = BigInt::from_str(q.trim()).map_err(|_| parse_err(format!("{path}: bad denominator in `{s}`")))?;
            if q == BigInt::from(0) {
                return Err(parse_err(format!("{path}: zero denominator")));
            }
            return Ok(BigRational::new(p, q));
        }
    }
    Ok(BigRational::from_integer(bigint(v, path)?))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{path}: expected an array")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.as_object()
        .ok_or_else(|| parse_err("expected a JSON object"))?
        .get(key)
        .ok_or_else(|| parse_err(format!("missing field `{key}`")))
}

fn number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn int_matrix_value(v: &Value, rows: usize, cols: usize, path: &str) -> Result<IntMatrix> {
    let rs = array(v, path)?;
    if rs.len() != rows {
        return Err(Error::ShapeMismatch(format!("{path}: expected {rows} rows, found {}", rs.len())));
    }
    let mut m = IntMatrix::zeros(rows, cols);
    for (i, r) in rs.iter().enumerate() {
        let r = array(r, &format!("{path}[{i}]"))?;
        if r.len() != cols {
            return Err(Error::ShapeMismatch(format!("{path}[{i}]: expected {cols} entries, found {}", r.len())));
        }
        for (j, x) in r.iter().enumerate() {
            m[(i, j)] = bigint(x, &format!("{path}[{i}][{j}]"))?;
        }
    }
    Ok(m)
}

fn int_matrix_json(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(number).collect())).collect())
}

/// Parses `[[...], ...]` as an integer matrix. An empty list is the 0×0
/// matrix.
pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let v = parse_json(text)?;
    let rows = array(&v, "matrix")?;
    let cols = match rows.first() {
        Some(r) => array(r, "matrix[0]")?.len(),
        None => 0,
    };
    int_matrix_value(&v, rows.len(), cols, "matrix")
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    int_matrix_json(m)
}

/// A Laurent polynomial: `[[exp, coeff], ...]`, or a bare integer constant.
fn laurent_value(v: &Value, path: &str) -> Result<LaurentPoly> {
    if !v.is_array() {
        return Ok(LaurentPoly::constant(bigint(v, path)?));
    }
    let mut terms = Vec::new();
    for (k, term) in array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{k}]");
        match array(term, &p)?.as_slice() {
            [e, c] => terms.push((small(e, &p)?, bigint(c, &p)?)),
            _ => return Err(parse_err(format!("{p}: expected [exponent, coefficient]"))),
        }
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn laurent_json(f: &LaurentPoly) -> Value {
    Value::Array(f.terms().map(|(e, c)| json!([e, number(c)])).collect())
}

/// Parses a complex document and validates it.
pub fn parse_complex(text: &str) -> Result<ComplexDoc> {
    let v = parse_json(text)?;
    let ring = field(&v, "ring")?.as_str().ok_or_else(|| parse_err("`ring` must be a string"))?;
    let ranks: Vec<usize> = array(field(&v, "ranks")?, "ranks")?
        .iter()
        .enumerate()
        .map(|(i, r)| index(r, &format!("ranks[{i}]")))
        .collect::<Result<_>>()?;
    if ranks.is_empty() {
        return Err(parse_err("`ranks` must be nonempty"));
    }
    let bs = array(field(&v, "boundaries")?, "boundaries")?;
    if bs.len() != ranks.len() - 1 {
        return Err(Error::ShapeMismatch(format!(
            "{} ranks need {} boundaries, found {}",
            ranks.len(),
            ranks.len() - 1,
            bs.len()
        )));
    }
    match ring {
        "int" => {
            let ds = bs
                .iter()
                .enumerate()
                .map(|(k, b)| int_matrix_value(b, ranks[k], ranks[k + 1], &format!("boundaries[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(ComplexDoc::Int(IntComplex::new(ranks, ds)?))
        }
        "laurent" => {
            let mut ds = Vec::with_capacity(bs.len());
            for (k, b) in bs.iter().enumerate() {
                let path = format!("boundaries[{k}]");
                let rows = array(b, &path)?;
                if rows.len() != ranks[k] {
                    return Err(Error::ShapeMismatch(format!("{path}: expected {} rows, found {}", ranks[k], rows.len())));
                }
                let mut m = LaurentMatrix::zeros(ranks[k], ranks[k + 1]);
                for (i, r) in rows.iter().enumerate() {
                    let r = array(r, &format!("{path}[{i}]"))?;
                    if r.len() != ranks[k + 1] {
                        return Err(Error::ShapeMismatch(format!(
                            "{path}[{i}]: expected {} entries, found {}",
                            ranks[k + 1],
                            r.len()
                        )));
                    }
                    for (j, x) in r.iter().enumerate() {
                        m[(i, j)] = laurent_value(x, &format!("{path}[{i}][{j}]"))?;
                    }
                }
                ds.push(m);
            }
            Ok(ComplexDoc::Laurent(EquivariantComplex::new(ranks, ds)?))
        }
        other => Err(parse_err(format!("unknown ring `{other}`"))),
    }
}

pub fn complex_to_json(doc: &ComplexDoc) -> Value {
    match doc {
        ComplexDoc::Int(c) => json!({
            "ring": "int",
            "ranks": c.ranks(),
            "boundaries": c.boundaries().iter().map(int_matrix_json).collect::<Vec<_>>(),
        }),
        ComplexDoc::Laurent(c) => json!({
            "ring": "laurent",
            "ranks": c.ranks(),
            "boundaries": c.boundaries().iter().map(laurent_matrix_json).collect::<Vec<_>>(),
        }),
    }
}

fn laurent_matrix_json(m: &LaurentMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| laurent_json(&m[(i, j)])).collect()))
            .collect(),
    )
}

/// Parses an arrangement document. Omega defaults to all lines when absent.
pub fn parse_arrangement(text: &str) -> Result<ArrangementDoc> {
    let v = parse_json(text)?;
    let mut lines = Vec::new();
    for (i, l) in array(field(&v, "lines")?, "lines")?.iter().enumerate() {
        let path = format!("lines[{i}]");
        match array(l, &path)?.as_slice() {
            [a, b, c] => lines.push(Line::new(rational(a, &path)?, rational(b, &path)?, rational(c, &path)?)),
            _ => return Err(parse_err(format!("{path}: expected [a, b, c]"))),
        }
    }
    let arrangement = LineArrangement::new(lines)?;
    let omega = match v.get("omega") {
        None => OmegaSubset::all(arrangement.len())?,
        Some(o) => {
            let idx = array(o, "omega")?
                .iter()
                .enumerate()
                .map(|(k, x)| index(x, &format!("omega[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            OmegaSubset::new(idx, arrangement.len())?
        }
    };
    Ok(ArrangementDoc { arrangement, omega })
}

/// Canonical echo: normalized integer lines and sorted omega.
pub fn arrangement_to_json(doc: &ArrangementDoc) -> Value {
    json!({
        "lines": doc.arrangement.lines().iter().map(line_json).collect::<Vec<_>>(),
        "omega": doc.omega.indices().collect::<Vec<_>>(),
    })
}

fn line_json(l: &Line) -> Value {
    json!([number(&l.a), number(&l.b), number(&l.c)])
}

pub fn group_json(g: &AbelianGroup) -> Value {
    json!({ "rank": g.rank(), "torsion": g.torsion().iter().map(number).collect::<Vec<_>>() })
}

pub fn profile_json(h: &HomologyProfile) -> Value {
    Value::Array(h.groups.iter().map(group_json).collect())
}

pub fn smith_json(m: &IntMatrix, s: &SmithForm) -> Value {
    json!({
        "invariant_factors": s.diag.iter().map(number).collect::<Vec<_>>(),
        "rank": s.rank(),
        "certificate_ok": s.certifies(m),
    })
}

pub fn pipeline_report_json(r: &PipelineReport) -> Value {
    json!({
        "h_base": profile_json(&r.h_base),
        "h_local": profile_json(&r.h_local),
        "h_halved": profile_json(&r.h_halved),
        "h_cover_formula": profile_json(&r.h_cover_formula),
        "h_cover_direct": profile_json(&r.h_cover_direct),
        "theorem_holds": r.theorem_holds,
        "torsion_matches": r.torsion_matches,
        "corollary1_consistent": r.corollary1_consistent,
        "corollary2_consistent": r.corollary2_consistent,
        "mod2_consistent": r.mod2_consistent,
    })
}

pub fn oracle_json(o: &OracleProfiles) -> Value {
    json!({
        "h_base": profile_json(&o.h_base),
        "h_local": profile_json(&o.h_local),
        "h_cover_direct": profile_json(&o.h_cover_direct),
    })
}

pub fn outcome_json(o: &CoverOutcome) -> Value {
    match o {
        CoverOutcome::Verified(r) => json!({ "status": "verified", "report": pipeline_report_json(r) }),
        CoverOutcome::NonMinimalResidue(p) => json!({ "status": "non_minimal_residue", "oracle": oracle_json(p) }),
    }
}

pub fn arrangement_report_json(r: &ArrangementReport) -> Value {
    let (b0, b1, b2) = r.combinatorial_betti;
    let mut m = Map::new();
    m.insert("lines".into(), Value::Array(r.lines.iter().map(line_json).collect()));
    m.insert("omega".into(), json!(r.omega));
    m.insert("combinatorial_betti".into(), json!([b0, b1, b2]));
    m.insert("salvetti_homology".into(), profile_json(&r.salvetti_homology));
    m.insert("betti_consistent".into(), json!(r.betti_consistent()));
    m.insert("salvetti_cells".into(), json!(r.salvetti_cells));
    m.insert("reduced_ranks".into(), json!(r.reduced_ranks));
    m.insert("outcome".into(), outcome_json(&r.outcome));
    Value::Object(m)
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let text = r#"{"ring": "laurent", "ranks": [1, 1],
            "boundaries": [[[[[1, 1], [0, -1], [3, 0]]]]]}"#;
        let doc = parse_complex(text).unwrap();
        let echo = render(&complex_to_json(&doc));
        assert!(echo.contains("\"ring\": \"laurent\""));
        assert_eq!(parse_complex(&echo).unwrap(), doc);
        assert_eq!(render(&complex_to_json(&parse_complex(&echo).unwrap())), echo);
        let ComplexDoc::Laurent(c) = doc else { panic!() };
        assert_eq!(c.boundary(1)[(0, 0)].to_string(), LaurentPoly::from_terms([(1, 1), (0, -1)]).to_string());
    }

    #[test]
    fn big_integers_survive() {
        let text = r#"[[123456789012345678901234567890, 0], [0, 1]]"#;
        let m = parse_matrix(text).unwrap();
        assert_eq!(m[(0, 0)].to_string(), "123456789012345678901234567890");
        assert_eq!(parse_matrix(&render(&matrix_to_json(&m))).unwrap(), m);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_matrix("[[1, 2],\n [3, 4],\n [5 6]]").unwrap_err();
        let Error::Parse(msg) = err else { panic!("{err:?}") };
        assert!(msg.starts_with("line 3"), "{msg}");
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(parse_matrix("[[1, 2], [3]]"), Err(Error::ShapeMismatch(_))));
        assert!(matches!(parse_complex(r#"{"ring": "int", "ranks": [1, 1], "boundaries": []}"#), Err(Error::ShapeMismatch(_))));
        assert!(matches!(
            parse_complex(r#"{"ring": "int", "ranks": [1, 1, 1], "boundaries": [[[1]], [[1]]]}"#),
            Err(Error::CompositionNonzero { .. })
        ));
    }

    #[test]
    fn arrangement_canonical_echo() {
        let doc = parse_arrangement(r#"{"lines": [["1/2", 0, "-1/3"], [0, -2, 4]], "omega": [1, 0, 1]}"#).unwrap();
        let echo = arrangement_to_json(&doc);
        assert_eq!(echo, json!({"lines": [[3, 0, -2], [0, 1, -2]], "omega": [0, 1]}));
        assert_eq!(parse_arrangement(&render(&echo)).unwrap(), doc);
        assert_eq!(parse_arrangement(r#"{"lines": [[1, 0, 0]], "omega": []}"#), Err(Error::EmptyOmega));
        assert_eq!(
            parse_arrangement(r#"{"lines": [[1, 0, 0], [2, 0, 0]]}"#),
            Err(Error::DuplicateLine { first: 0, second: 1 })
        );
    }
}
