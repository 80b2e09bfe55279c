//! JSON formats for algebras, modules, Kronecker representations and
//! operation reports. Scalars are always strings.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::ShortAlgebra;
use crate::error::{Error, Result};
use crate::kronecker::KroneckerRep;
use crate::linalg::{Field, Matrix, Scalar};
use crate::module::AModule;

/// A scalar as written in a file; integers are accepted for convenience.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Text(String),
    Int(i64),
}

impl ScalarRepr {
    fn parse(&self, field: Field) -> Result<Scalar> {
        match self {
            ScalarRepr::Text(s) => field.parse(s),
            ScalarRepr::Int(n) => Ok(field.from_i64(*n)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    field: Field,
    e: usize,
    a: usize,
    /// 1-based `(i, j, m, c)`: `v_i v_j` has coefficient `c` at `w_m`.
    structure: Vec<(usize, usize, usize, ScalarRepr)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

#[derive(Deserialize)]
struct ModuleFile {
    algebra: Value,
    dim: usize,
    actions: Vec<Vec<Vec<ScalarRepr>>>,
}

#[derive(Deserialize)]
struct KroneckerFile {
    e: usize,
    dim0: usize,
    dim1: usize,
    maps: Vec<Vec<Vec<ScalarRepr>>>,
}

fn format_err(e: impl std::fmt::Display) -> Error {
    Error::Format(e.to_string())
}

pub fn algebra_to_json(alg: &ShortAlgebra) -> Value {
    let structure: Vec<_> = alg
        .triples()
        .into_iter()
        .map(|(i, j, m, c)| (i + 1, j + 1, m + 1, ScalarRepr::Text(c.to_string())))
        .collect();
    serde_json::to_value(AlgebraFile {
        field: alg.field(),
        e: alg.e(),
        a: alg.a(),
        structure,
        name: alg.name().map(str::to_owned),
    })
    .expect("algebra serializes")
}

pub fn algebra_from_json(v: &Value) -> Result<ShortAlgebra> {
    let file: AlgebraFile = serde_json::from_value(v.clone()).map_err(format_err)?;
    file.field.check()?;
    let mut triples = Vec::with_capacity(file.structure.len());
    for (i, j, m, c) in &file.structure {
        if *i == 0 || *j == 0 || *m == 0 {
            return Err(Error::Format("structure indices are 1-based".into()));
        }
        triples.push((i - 1, j - 1, m - 1, c.parse(file.field)?));
    }
    ShortAlgebra::new(file.field, file.e, file.a, &triples, file.name)
}

fn matrix_from_repr(field: Field, rows: usize, cols: usize, m: &[Vec<ScalarRepr>]) -> Result<Matrix> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(Error::Format(format!("expected a {rows} x {cols} matrix")));
    }
    let parsed = m
        .iter()
        .map(|r| r.iter().map(|x| x.parse(field)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows == 0 {
        return Ok(Matrix::zeros(field, 0, cols));
    }
    Matrix::from_rows(field, parsed)
}

pub fn module_to_json(m: &AModule) -> Value {
    json!({
        "algebra": algebra_to_json(m.algebra()),
        "dim": m.dim(),
        "actions": m.action_strings(),
    })
}

/// `"algebra"` may be inline or a path, resolved against `base`.
pub fn module_from_json(v: &Value, base: Option<&Path>) -> Result<AModule> {
    let file: ModuleFile = serde_json::from_value(v.clone()).map_err(format_err)?;
    let alg = match &file.algebra {
        Value::String(path) => {
            let p = base.map_or_else(|| PathBuf::from(path), |b| b.join(path));
            read_algebra(&p)?
        }
        inline => algebra_from_json(inline)?,
    };
    if file.actions.len() != alg.e() {
        return Err(Error::Format(format!(
            "module needs {} action matrices, found {}",
            alg.e(),
            file.actions.len()
        )));
    }
    let f = alg.field();
    let actions = file
        .actions
        .iter()
        .map(|m| matrix_from_repr(f, file.dim, file.dim, m))
        .collect::<Result<_>>()?;
    AModule::new(Arc::new(alg), file.dim, actions)
}

pub fn kronecker_to_json(rep: &KroneckerRep) -> Value {
    serde_json::to_value(rep).expect("representation serializes")
}

pub fn kronecker_from_json(v: &Value, field: Field) -> Result<KroneckerRep> {
    let file: KroneckerFile = serde_json::from_value(v.clone()).map_err(format_err)?;
    if file.maps.len() != file.e {
        return Err(Error::Format(format!("expected {} maps, found {}", file.e, file.maps.len())));
    }
    let maps = file
        .maps
        .iter()
        .map(|m| matrix_from_repr(field, file.dim1, file.dim0, m))
        .collect::<Result<_>>()?;
    KroneckerRep::new(field, file.dim0, file.dim1, maps)
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn read_algebra(path: &Path) -> Result<ShortAlgebra> {
    algebra_from_json(&read_json(path)?)
}

pub fn read_module(path: &Path) -> Result<AModule> {
    module_from_json(&read_json(path)?, path.parent())
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// `{ "op", "inputs", "bound", "values", "flags" }`.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub op: String,
    pub inputs: Value,
    pub bound: Option<usize>,
    pub values: Value,
    pub flags: Vec<String>,
}

impl Report {
    pub fn new(op: impl Into<String>, inputs: Value, values: Value) -> Report {
        Report {
            op: op.into(),
            inputs,
            bound: None,
            values,
            flags: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{preset, PresetParams};
    use crate::module::{is_isomorphic, random_module};

    #[test]
    fn algebra_round_trip() {
        for name in ["ex5_5", "qexterior", "lambda_c"] {
            let a = preset(name, &PresetParams::default()).unwrap();
            let back = algebra_from_json(&algebra_to_json(&a)).unwrap();
            assert!(back.same_structure(&a));
            assert_eq!(back.name(), a.name());
        }
        let a = preset("L", &PresetParams { field: Field::prime(5).unwrap(), ..PresetParams::e(2) }).unwrap();
        let v = algebra_to_json(&a);
        assert_eq!(v["field"], json!({"kind": "Fp", "p": 5}));
    }

    #[test]
    fn module_round_trip_and_errors() {
        let a = Arc::new(preset("ex9_4", &PresetParams::default()).unwrap());
        let m = random_module(&a, 2, 1, 4);
        let back = module_from_json(&module_to_json(&m), None).unwrap();
        assert!(is_isomorphic(&m, &back, 0).unwrap());
        let bad = json!({"algebra": algebra_to_json(&a), "dim": 1, "actions": [[["1"]], [["0"]], [["0"]]]});
        assert!(module_from_json(&bad, None).is_err());
        let bad_index = json!({"field": {"kind": "Q"}, "e": 1, "a": 1, "structure": [[0, 1, 1, "1"]]});
        assert!(matches!(algebra_from_json(&bad_index), Err(Error::Format(_))));
        let ints = json!({"field": {"kind": "Q"}, "e": 1, "a": 1, "structure": [[1, 1, 1, 1]]});
        assert_eq!(algebra_from_json(&ints).unwrap().hilbert_type(), (1, 1));
    }

    #[test]
    fn kronecker_round_trip() {
        let f = Field::Rationals;
        let rep = KroneckerRep::new(f, 1, 2, vec![Matrix::from_i64(f, &[&[1], &[0]]), Matrix::from_i64(f, &[&[0], &[3]])]).unwrap();
        let v = kronecker_to_json(&rep);
        assert_eq!(v["maps"][1], json!([["0"], ["3"]]));
        assert_eq!(kronecker_from_json(&v, f).unwrap(), rep);
    }
}
