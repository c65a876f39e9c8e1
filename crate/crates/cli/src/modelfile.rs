use crate::CliError;
use contactgeo::ContactModel;
use num::rational::BigRational;
use polycalc::{parse_expr, OneForm, RfMatrix, VectorField};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "holonomy-lab/1";

/// On-disk model document. Expressions use the x1..xn grammar; the metric is
/// given as the upper triangle (row i holds entries (i,i)...(i,2m)) or as a
/// full symmetric square; rationals are strings like "2/3".
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelFile {
    pub schema: String,
    pub name: String,
    pub dimension: usize,
    pub m: usize,
    pub variables: Vec<String>,
    pub theta: Vec<String>,
    pub frame: Vec<Vec<String>>,
    pub metric: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<Vec<String>>>,
    pub base_point: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<serde_json::Value>,
}

pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: num::BigInt = num
        .parse()
        .map_err(|_| CliError::Parse(format!("bad rational `{s}`")))?;
    let d: num::BigInt = den
        .parse()
        .map_err(|_| CliError::Parse(format!("bad rational `{s}`")))?;
    if d == num::BigInt::from(0) {
        return Err(CliError::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

pub fn load_model(path: &std::path::Path) -> Result<ContactModel, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let doc: ModelFile =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("bad JSON: {e}")))?;
    model_from_doc(&doc)
}

pub fn model_from_doc(doc: &ModelFile) -> Result<ContactModel, CliError> {
    if doc.schema != SCHEMA {
        return Err(CliError::Validation(format!(
            "schema `{}` is not `{SCHEMA}`",
            doc.schema
        )));
    }
    let n = doc.dimension;
    if n != 2 * doc.m + 1 {
        return Err(CliError::Validation(format!(
            "dimension {} is not 2m+1 for m = {}",
            n, doc.m
        )));
    }
    if doc.variables.len() != n {
        return Err(CliError::Validation("variables list has wrong length".into()));
    }
    for (i, v) in doc.variables.iter().enumerate() {
        if v != &format!("x{}", i + 1) {
            return Err(CliError::Validation(format!(
                "variables must be canonical x1..x{n} (got `{v}` at slot {})",
                i + 1
            )));
        }
    }
    let expr = |s: &str, field: &str| -> Result<polycalc::RatFunc, CliError> {
        parse_expr(s, n).map_err(|e| CliError::Parse(format!("{field}: {e}")))
    };
    if doc.theta.len() != n {
        return Err(CliError::Validation("theta needs one component per dx_i".into()));
    }
    let theta = OneForm::new(
        doc.theta
            .iter()
            .enumerate()
            .map(|(i, s)| expr(s, &format!("theta[{i}]")))
            .collect::<Result<Vec<_>, _>>()?,
    );
    if doc.frame.len() != 2 * doc.m {
        return Err(CliError::Validation(format!("frame needs 2m = {} fields", 2 * doc.m)));
    }
    let mut frame = Vec::new();
    for (a, row) in doc.frame.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::Validation(format!("frame[{a}] needs {n} components")));
        }
        let comps = row
            .iter()
            .enumerate()
            .map(|(i, s)| expr(s, &format!("frame[{a}][{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        frame.push(VectorField::new(comps));
    }
    let d = 2 * doc.m;
    let mut g = RfMatrix::zeros(d, d, n);
    if doc.metric.len() != d {
        return Err(CliError::Validation(format!("metric needs {d} rows")));
    }
    for (i, row) in doc.metric.iter().enumerate() {
        if row.len() == d {
            for (j, s) in row.iter().enumerate() {
                g.set(i, j, expr(s, &format!("metric[{i}][{j}]"))?);
            }
        } else if row.len() == d - i {
            for (off, s) in row.iter().enumerate() {
                let j = i + off;
                let v = expr(s, &format!("metric[{i}][{j}]"))?;
                g.set(i, j, v.clone());
                g.set(j, i, v);
            }
        } else {
            return Err(CliError::Validation(format!(
                "metric[{i}] must have {d} (full) or {} (upper triangle) entries",
                d - i
            )));
        }
    }
    // symmetry of a fully-specified metric
    for i in 0..d {
        for j in (i + 1)..d {
            if !g.at(i, j).eq_exact(g.at(j, i)) {
                return Err(CliError::Validation(format!("metric[{i}][{j}] is not symmetric")));
            }
        }
    }
    let j = match &doc.j {
        Some(rows) => {
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(CliError::Validation("J must be a full 2m x 2m matrix".into()));
            }
            let mut jm = RfMatrix::zeros(d, d, n);
            for (i, row) in rows.iter().enumerate() {
                for (jj, s) in row.iter().enumerate() {
                    jm.set(i, jj, expr(s, &format!("J[{i}][{jj}]"))?);
                }
            }
            Some(jm)
        }
        None => None,
    };
    let base_point = doc
        .base_point
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    ContactModel::new(doc.name.clone(), theta, frame, g, j, base_point)
        .map_err(|e| CliError::Validation(e.to_string()))
}
