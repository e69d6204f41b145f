//! JSON file formats. Every scalar is a string (`"3"`, `"-5/3"`).
//!
//! - factorization: `{"ctx": {...}, "rank": r, "C": [[[5 strings]]], "D": ...}`
//! - morphism: `{"source": .., "target": .., "P": .., "Q": ..}` where source and
//!   target are a factorization object or a path relative to the morphism file
//! - module: `{"ctx": {...}, "dim": d, "X": [[strings]], "Y": [[strings]]}`

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{AlgebraCtx, BElt, B_DIM};
use crate::amodule::AModule;
use crate::error::{Error, Result};
use crate::factorization::{BMatrix, FactMorphism, Factorization};
use crate::field::FieldSpec;
use crate::linalg::Matrix;

type BGrid = Vec<Vec<Vec<String>>>;
type KGrid = Vec<Vec<String>>;

#[derive(Serialize, Deserialize)]
struct FactorizationRepr {
    ctx: AlgebraCtx,
    rank: usize,
    #[serde(rename = "C")]
    c: BGrid,
    #[serde(rename = "D")]
    d: BGrid,
}

#[derive(Serialize, Deserialize)]
struct MorphismRepr {
    source: Value,
    target: Value,
    #[serde(rename = "P")]
    p: BGrid,
    #[serde(rename = "Q")]
    q: BGrid,
}

#[derive(Serialize, Deserialize)]
struct ModuleRepr {
    ctx: AlgebraCtx,
    dim: usize,
    #[serde(rename = "X")]
    x: KGrid,
    #[serde(rename = "Y")]
    y: KGrid,
}

/// Unvalidated factorization data: parsing succeeded, axioms not yet checked.
#[derive(Clone, Debug)]
pub struct RawFactorization {
    pub ctx: AlgebraCtx,
    pub c: BMatrix,
    pub d: BMatrix,
}

impl RawFactorization {
    pub fn validate(self) -> Result<Factorization> {
        Factorization::new(self.c, self.d, &self.ctx)
    }
}

fn b_grid(m: &BMatrix) -> BGrid {
    m.to_rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| e.coeffs().iter().map(ToString::to_string).collect())
                .collect()
        })
        .collect()
}

fn parse_b_grid(
    field: FieldSpec,
    grid: &BGrid,
    rows: usize,
    cols: usize,
    name: &str,
) -> Result<BMatrix> {
    if grid.len() != rows || grid.iter().any(|r| r.len() != cols) {
        return Err(Error::Format(format!("{name} must be {rows}x{cols}")));
    }
    let parsed = grid
        .iter()
        .map(|row| {
            row.iter()
                .map(|entry| {
                    if entry.len() != B_DIM {
                        return Err(Error::Format(format!(
                            "{name}: each entry needs {B_DIM} coefficients on (1, x, y, xy, yx)"
                        )));
                    }
                    let coeffs = entry
                        .iter()
                        .map(|s| field.parse(s))
                        .collect::<Result<Vec<_>>>()?;
                    BElt::from_vec(field, coeffs)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows == 0 || cols == 0 {
        return Ok(BMatrix::zeros(field, rows, cols));
    }
    BMatrix::from_rows(field, parsed)
}

fn k_grid(m: &Matrix) -> KGrid {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

fn parse_k_grid(field: FieldSpec, grid: &KGrid, n: usize, name: &str) -> Result<Matrix> {
    if grid.len() != n || grid.iter().any(|r| r.len() != n) {
        return Err(Error::Format(format!("{name} must be {n}x{n}")));
    }
    let rows = grid
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| field.parse(s))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if n == 0 {
        return Ok(Matrix::zeros(field, 0, 0));
    }
    Matrix::from_rows(field, rows)
}

pub fn factorization_to_json(f: &Factorization) -> Value {
    serde_json::to_value(FactorizationRepr {
        ctx: f.ctx().clone(),
        rank: f.rank(),
        c: b_grid(f.c()),
        d: b_grid(f.d()),
    })
    .expect("serializable factorization")
}

/// Parse without checking the factorization identities.
pub fn raw_factorization_from_json(v: &Value) -> Result<RawFactorization> {
    let r: FactorizationRepr = serde_json::from_value(v.clone())?;
    if r.rank == 0 {
        return Err(Error::Format("rank must be positive".into()));
    }
    let field = r.ctx.field();
    Ok(RawFactorization {
        c: parse_b_grid(field, &r.c, r.rank, r.rank, "C")?,
        d: parse_b_grid(field, &r.d, r.rank, r.rank, "D")?,
        ctx: r.ctx,
    })
}

pub fn factorization_from_json(v: &Value) -> Result<Factorization> {
    raw_factorization_from_json(v)?.validate()
}

pub fn morphism_to_json(m: &FactMorphism) -> Value {
    serde_json::to_value(MorphismRepr {
        source: factorization_to_json(m.source()),
        target: factorization_to_json(m.target()),
        p: b_grid(m.p()),
        q: b_grid(m.q()),
    })
    .expect("serializable morphism")
}

/// `base` resolves relative source/target paths.
pub fn morphism_from_json(v: &Value, base: Option<&Path>) -> Result<FactMorphism> {
    let r: MorphismRepr = serde_json::from_value(v.clone())?;
    let end = |e: &Value| -> Result<Factorization> {
        match e {
            Value::String(path) => {
                let p = PathBuf::from(path);
                let full = match base {
                    Some(dir) if p.is_relative() => dir.join(p),
                    _ => p,
                };
                read_factorization(&full)
            }
            Value::Object(_) => factorization_from_json(e),
            _ => Err(Error::Format(
                "source/target must be a path or an object".into(),
            )),
        }
    };
    let source = end(&r.source)?;
    let target = end(&r.target)?;
    let field = source.ctx().field();
    let p = parse_b_grid(field, &r.p, source.rank(), target.rank(), "P")?;
    let q = parse_b_grid(field, &r.q, source.rank(), target.rank(), "Q")?;
    FactMorphism::new(&source, &target, p, q)
}

pub fn module_to_json(m: &AModule) -> Value {
    serde_json::to_value(ModuleRepr {
        ctx: m.ctx().clone(),
        dim: m.dim(),
        x: k_grid(m.x()),
        y: k_grid(m.y()),
    })
    .expect("serializable module")
}

pub fn module_from_json(v: &Value) -> Result<AModule> {
    let r: ModuleRepr = serde_json::from_value(v.clone())?;
    let field = r.ctx.field();
    let x = parse_k_grid(field, &r.x, r.dim, "X")?;
    let y = parse_k_grid(field, &r.y, r.dim, "Y")?;
    AModule::new(x, y, &r.ctx)
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

pub fn read_factorization(path: &Path) -> Result<Factorization> {
    factorization_from_json(&read_json(path)?)
}

pub fn read_morphism(path: &Path) -> Result<FactMorphism> {
    morphism_from_json(&read_json(path)?, path.parent())
}

pub fn read_module(path: &Path) -> Result<AModule> {
    module_from_json(&read_json(path)?)
}
