//! Canonical JSON interchange for algebras, representations, module actions,
//! cocycles and check reports.
//!
//! Scalars are strings `"p/q"` (`"p"` for integers) over ℚ and objects
//! `{"re": .., "im": ..}` over ℚ(i). Objects are emitted with sorted keys,
//! compact, newline-terminated; parsing then re-emitting canonical output is
//! byte-identical.

use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraTable, Field};
use crate::catalog;
use crate::error::{Error, Result};
use crate::exactmath::{ExactMatrix, GaussianRational, Rational};
use crate::extensions::{Cocycle, CohomologyReport, ExtensionProblem};
use crate::report::CheckReport;
use crate::reps::{MatrixRep, ModuleAction};

type G = GaussianRational;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn scalar_to_json(x: &G, field: Field) -> Value {
    match field {
        Field::Rational => Value::String(x.re.to_string()),
        Field::Gaussian => json!({"re": x.re.to_string(), "im": x.im.to_string()}),
    }
}

pub fn scalar_from_json(v: &Value) -> Result<G> {
    match v {
        Value::String(s) => Ok(G::real(s.parse()?)),
        Value::Number(n) => n
            .as_i64()
            .map(G::int)
            .ok_or_else(|| parse_err(format!("non-integer number {n}; use a \"p/q\" string"))),
        Value::Object(o) => {
            let part = |k: &str| -> Result<Rational> {
                match o.get(k) {
                    None => Ok(Rational::zero()),
                    Some(Value::String(s)) => s.parse(),
                    Some(other) => Err(parse_err(format!("scalar part {k} must be a string, got {other}"))),
                }
            };
            if o.keys().any(|k| k != "re" && k != "im") {
                return Err(parse_err(format!("unexpected scalar keys in {v}")));
            }
            Ok(G::new(part("re")?, part("im")?))
        }
        other => Err(parse_err(format!("bad scalar {other}"))),
    }
}

/// Serializes with sorted keys, no whitespace, trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn parse_value(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| parse_err(e.to_string()))
}

fn get<'a>(o: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| parse_err(format!("missing key {key:?}")))
}

fn as_object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| parse_err("expected a JSON object"))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn as_index(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("{what} must be a non-negative integer, got {v}")))
}

fn labels_from(v: &Value) -> Result<Vec<String>> {
    as_array(v, "labels")?
        .iter()
        .map(|l| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| parse_err("labels must be strings"))
        })
        .collect()
}

fn field_from(v: &Value) -> Result<Field> {
    match v.as_str() {
        Some("rational") => Ok(Field::Rational),
        Some("gaussian") => Ok(Field::Gaussian),
        _ => Err(parse_err(format!("field must be \"rational\" or \"gaussian\", got {v}"))),
    }
}

pub fn algebra_to_value(a: &AlgebraTable) -> Value {
    let table: Vec<Value> = a
        .entries()
        .map(|(i, j, k, c)| json!([i, j, k, scalar_to_json(c, a.field())]))
        .collect();
    json!({
        "dim": a.dim(),
        "field": a.field().as_str(),
        "labels": a.labels(),
        "table": table,
    })
}

pub fn algebra_to_json(a: &AlgebraTable) -> String {
    to_canonical_string(&algebra_to_value(a))
}

pub fn algebra_from_value(v: &Value) -> Result<AlgebraTable> {
    let o = as_object(v)?;
    let dim = as_index(get(o, "dim")?, "dim")?;
    let field = field_from(get(o, "field")?)?;
    let labels = labels_from(get(o, "labels")?)?;
    if labels.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: labels.len(),
        });
    }
    let mut a = AlgebraTable::new(field, labels);
    let mut seen = std::collections::BTreeSet::new();
    for entry in as_array(get(o, "table")?, "table")? {
        let e = as_array(entry, "table entry")?;
        if e.len() != 4 {
            return Err(parse_err(format!("table entry {entry} must be [i, j, k, scalar]")));
        }
        let (i, j, k) = (
            as_index(&e[0], "i")?,
            as_index(&e[1], "j")?,
            as_index(&e[2], "k")?,
        );
        if !seen.insert((i, j, k)) {
            return Err(parse_err(format!("duplicate table entry ({i}, {j}, {k})")));
        }
        a.add_term(i, j, k, scalar_from_json(&e[3])?)?;
    }
    Ok(a)
}

pub fn algebra_from_json(s: &str) -> Result<AlgebraTable> {
    algebra_from_value(&parse_value(s)?)
}

fn matrix_to_value(m: &ExactMatrix, field: Field) -> Value {
    Value::Array(
        m.row_vectors()
            .map(|r| Value::Array(r.iter().map(|x| scalar_to_json(x, field)).collect()))
            .collect(),
    )
}

fn matrix_from_value(v: &Value, order: usize) -> Result<ExactMatrix> {
    let rows = as_array(v, "matrix")?
        .iter()
        .map(|r| as_array(r, "matrix row")?.iter().map(scalar_from_json).collect())
        .collect::<Result<Vec<_>>>()?;
    if rows.len() != order {
        return Err(Error::DimensionMismatch {
            expected: order,
            found: rows.len(),
        });
    }
    ExactMatrix::from_rows(order, rows)
}

pub fn rep_to_value(rep: &MatrixRep) -> Value {
    let a = rep.algebra();
    let images: Map<String, Value> = a
        .labels()
        .iter()
        .zip(rep.images())
        .map(|(l, m)| (l.clone(), matrix_to_value(m, a.field())))
        .collect();
    json!({
        "algebra": a.labels(),
        "images": images,
        "order": rep.order(),
    })
}

pub fn rep_to_json(rep: &MatrixRep) -> String {
    to_canonical_string(&rep_to_value(rep))
}

/// Reads a representation. Without an explicit algebra the basis labels must
/// name a catalog algebra.
pub fn rep_from_value(v: &Value, algebra: Option<&AlgebraTable>) -> Result<MatrixRep> {
    let o = as_object(v)?;
    let order = as_index(get(o, "order")?, "order")?;
    let labels = labels_from(get(o, "algebra")?)?;
    let algebra = match algebra {
        Some(a) => {
            if a.labels() != labels.as_slice() {
                return Err(parse_err("representation labels do not match the algebra"));
            }
            a.clone()
        }
        None => catalog::recognize(&labels).ok_or_else(|| {
            parse_err("labels do not name a catalog algebra; supply the algebra explicitly")
        })?,
    };
    let images_obj = as_object(get(o, "images")?)?;
    if images_obj.len() != labels.len() {
        return Err(Error::DimensionMismatch {
            expected: labels.len(),
            found: images_obj.len(),
        });
    }
    let images = labels
        .iter()
        .map(|l| matrix_from_value(get(images_obj, l)?, order))
        .collect::<Result<Vec<_>>>()?;
    MatrixRep::new(algebra, order, images)
}

pub fn rep_from_json(s: &str, algebra: Option<&AlgebraTable>) -> Result<MatrixRep> {
    rep_from_value(&parse_value(s)?, algebra)
}

pub fn action_to_value(act: &ModuleAction) -> Value {
    let field = act.algebra().field();
    let entries: Vec<Value> = act
        .entries()
        .map(|(v, e, x)| {
            let vec: Vec<Value> = x.iter().map(|c| scalar_to_json(c, field)).collect();
            json!([v, e, vec])
        })
        .collect();
    json!({"entries": entries, "module_dim": act.module_dim()})
}

pub fn action_to_json(act: &ModuleAction) -> String {
    to_canonical_string(&action_to_value(act))
}

pub fn action_from_value(v: &Value, algebra: &AlgebraTable) -> Result<ModuleAction> {
    let o = as_object(v)?;
    let module_dim = as_index(get(o, "module_dim")?, "module_dim")?;
    let mut act = ModuleAction::new(algebra.clone(), module_dim);
    let mut seen = std::collections::BTreeSet::new();
    for entry in as_array(get(o, "entries")?, "entries")? {
        let e = as_array(entry, "action entry")?;
        if e.len() != 3 {
            return Err(parse_err(format!("action entry {entry} must be [v, e, vector]")));
        }
        let (vi, ei) = (as_index(&e[0], "v")?, as_index(&e[1], "e")?);
        if !seen.insert((vi, ei)) {
            return Err(parse_err(format!("duplicate action entry ({vi}, {ei})")));
        }
        let x = as_array(&e[2], "action vector")?
            .iter()
            .map(scalar_from_json)
            .collect::<Result<Vec<_>>>()?;
        act.set(vi, ei, x)?;
    }
    Ok(act)
}

pub fn action_from_json(s: &str, algebra: &AlgebraTable) -> Result<ModuleAction> {
    action_from_value(&parse_value(s)?, algebra)
}

/// `{"entries": [[i, j, c, scalar], ...]}`: `ω(e_i, e_j)` has coefficient
/// `scalar` on `X_{c+1}`.
pub fn cocycle_to_value(omega: &Cocycle, field: Field) -> Value {
    let entries: Vec<Value> = omega
        .terms()
        .map(|(i, j, c, x)| json!([i, j, c, scalar_to_json(x, field)]))
        .collect();
    json!({ "entries": entries })
}

pub fn cocycle_from_value(v: &Value, p: &ExtensionProblem) -> Result<Cocycle> {
    let o = as_object(v)?;
    let mut omega = Cocycle::zero(p);
    for entry in as_array(get(o, "entries")?, "entries")? {
        let e = as_array(entry, "cocycle entry")?;
        if e.len() != 4 {
            return Err(parse_err(format!("cocycle entry {entry} must be [i, j, c, scalar]")));
        }
        let (i, j, c) = (
            as_index(&e[0], "i")?,
            as_index(&e[1], "j")?,
            as_index(&e[2], "c")?,
        );
        if i >= p.lie_dim() || j >= p.lie_dim() {
            return Err(Error::IndexOutOfRange {
                index: i.max(j),
                dim: p.lie_dim(),
            });
        }
        if c >= p.module_dim() {
            return Err(Error::IndexOutOfRange {
                index: c,
                dim: p.module_dim(),
            });
        }
        omega.add_term(i, j, c, scalar_from_json(&e[3])?);
    }
    Ok(omega)
}

pub fn cocycle_from_json(s: &str, p: &ExtensionProblem) -> Result<Cocycle> {
    cocycle_from_value(&parse_value(s)?, p)
}

pub fn cohomology_to_value(h: &CohomologyReport, field: Field) -> Value {
    let reps: Vec<Value> = h
        .representatives
        .iter()
        .map(|r| cocycle_to_value(r, field))
        .collect();
    json!({
        "coboundary_dim": h.coboundaries.dim(),
        "cocycle_dim": h.cocycles.dim(),
        "quotient_dim": h.quotient_dim,
        "representatives": reps,
    })
}

pub fn report_to_value(r: &CheckReport) -> Value {
    let first = r.first.as_ref().map(|v| {
        json!({
            "indices": v.indices,
            "kind": v.kind,
            "labels": v.labels,
            "residual": v.residual.iter().map(|x| scalar_to_json(x, Field::Gaussian)).collect::<Vec<_>>(),
        })
    });
    json!({
        "check": r.check,
        "first": first,
        "passed": r.passed(),
        "violations": r.violations,
    })
}

/// Which interchange format a parsed document is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocumentKind {
    Algebra,
    Rep,
    Action,
    Cocycle,
}

pub fn detect_kind(v: &Value) -> Result<DocumentKind> {
    let o = as_object(v)?;
    if o.contains_key("table") {
        Ok(DocumentKind::Algebra)
    } else if o.contains_key("images") {
        Ok(DocumentKind::Rep)
    } else if o.contains_key("module_dim") {
        Ok(DocumentKind::Action)
    } else if o.contains_key("entries") {
        Ok(DocumentKind::Cocycle)
    } else {
        Err(parse_err("unrecognized document"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{diamond_complex, diamond_real};
    use crate::reps::{action_table_sl, action_table_sp, phi_sl, phi_sp};

    #[test]
    fn complex_entry_format() {
        let s = algebra_to_json(&diamond_complex(1).unwrap());
        assert!(s.contains(r#"[1,2,3,{"im":"2","re":"0"}]"#), "{s}");
        assert!(s.starts_with(r#"{"dim":4,"field":"gaussian","labels":["J","P1+","Q1-","T"],"table":["#));
        assert!(s.ends_with("]}\n"));
    }

    #[test]
    fn rational_entry_format() {
        let s = algebra_to_json(&diamond_real(1).unwrap());
        assert!(s.contains(r#"[0,2,1,"-1"]"#), "{s}");
    }

    #[test]
    fn algebra_round_trip() {
        for a in [diamond_real(2).unwrap(), diamond_complex(3).unwrap()] {
            let s = algebra_to_json(&a);
            let back = algebra_from_json(&s).unwrap();
            assert_eq!(back, a);
            assert_eq!(algebra_to_json(&back), s);
        }
    }

    #[test]
    fn rep_and_action_round_trip() {
        for rep in [phi_sl(2).unwrap(), phi_sp(2).unwrap()] {
            let s = rep_to_json(&rep);
            let back = rep_from_json(&s, None).unwrap();
            assert_eq!(back, rep);
            assert_eq!(rep_to_json(&back), s);
        }
        for act in [action_table_sl(2).unwrap(), action_table_sp(2).unwrap()] {
            let s = action_to_json(&act);
            let back = action_from_json(&s, act.algebra()).unwrap();
            assert_eq!(back, act);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(algebra_from_json("{").is_err());
        assert!(algebra_from_json(r#"{"dim":2,"field":"rational","labels":["a"],"table":[]}"#).is_err());
        assert!(algebra_from_json(r#"{"dim":1,"field":"real","labels":["a"],"table":[]}"#).is_err());
        assert!(algebra_from_json(r#"{"dim":1,"field":"rational","labels":["a"],"table":[[0,0,1,"1"]]}"#).is_err());
        assert!(algebra_from_json(
            r#"{"dim":1,"field":"rational","labels":["a"],"table":[[0,0,0,{"re":"0","im":"1"}]]}"#
        )
        .is_err());
        assert!(algebra_from_json(
            r#"{"dim":1,"field":"rational","labels":["a"],"table":[[0,0,0,"1"],[0,0,0,"2"]]}"#
        )
        .is_err());
    }

    #[test]
    fn scalar_forms() {
        assert_eq!(scalar_from_json(&json!("3/6")).unwrap(), G::frac(1, 2));
        assert_eq!(scalar_from_json(&json!({"re": "0", "im": "-1/2"})).unwrap(), G::frac_i(-1, 2));
        assert_eq!(scalar_from_json(&json!(4)).unwrap(), G::int(4));
        assert!(scalar_from_json(&json!(0.5)).is_err());
        assert!(scalar_from_json(&json!({"re": "1", "x": "2"})).is_err());
    }

    #[test]
    fn kinds() {
        let a = algebra_to_value(&diamond_real(1).unwrap());
        assert_eq!(detect_kind(&a).unwrap(), DocumentKind::Algebra);
        let r = rep_to_value(&phi_sp(1).unwrap());
        assert_eq!(detect_kind(&r).unwrap(), DocumentKind::Rep);
        let t = action_to_value(&action_table_sp(1).unwrap());
        assert_eq!(detect_kind(&t).unwrap(), DocumentKind::Action);
    }
}
