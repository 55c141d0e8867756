//! JSON spec files for the cycle and matrix families.
//!
//! ```json
//! {"n": 2, "blocks": [
//!   {"p": 2, "gram": [[0,1],[1,0]], "f": [[0,1],[1,1]], "m": 1, "r": 1},
//!   {"p": 3, "gram": [[1]], "f": [[-1]], "m": 1, "r": 1}]}
//! ```
//!
//! Blocks that all carry `m` describe a cycle family; blocks that all omit
//! it describe a matrix family.

use std::fs;
use std::path::Path;

use brace_core::algebra::Matrix;
use brace_core::constructions::{
    build_cycle_family, build_matrix_family, validate_cycle_spec, validate_matrix_spec, CycleBlock,
    CycleFamilySpec, FamilyBrace, MatrixBlock, MatrixFamilySpec, SpecReport,
};
use serde::{Deserialize, Serialize};

use crate::error::{Result, SchemaError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSpec {
    pub n: usize,
    pub blocks: Vec<RawBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBlock {
    pub p: u32,
    pub gram: Vec<Vec<i64>>,
    pub f: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(CycleFamilySpec),
    Matrix(MatrixFamilySpec),
}

impl FamilySpec {
    pub fn validate(&self) -> SpecReport {
        match self {
            FamilySpec::Cycle(s) => validate_cycle_spec(s),
            FamilySpec::Matrix(s) => validate_matrix_spec(s),
        }
    }

    pub fn build(&self) -> brace_core::Result<FamilyBrace> {
        match self {
            FamilySpec::Cycle(s) => build_cycle_family(s),
            FamilySpec::Matrix(s) => build_matrix_family(s),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Matrix(_) => "matrix",
        }
    }
}

fn matrix(p: u32, rows: &[Vec<i64>], path: String) -> std::result::Result<Matrix, SchemaError> {
    if rows.is_empty() {
        return Err(SchemaError::new(path, "matrix has no rows"));
    }
    Matrix::from_rows(p, rows).map_err(|e| SchemaError::new(path, e.to_string()))
}

/// Parses and validates spec text. Structural errors and violated
/// constraints both come back as a [`SchemaError`].
pub fn parse_spec_str(text: &str) -> std::result::Result<FamilySpec, SchemaError> {
    if text.trim().is_empty() {
        return Err(SchemaError::new("$", "empty spec"));
    }
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawSpec = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        SchemaError::new(
            if path == "." { "$".to_string() } else { path },
            e.inner().to_string(),
        )
    })?;
    spec_from_raw(&raw)
}

pub fn spec_from_raw(raw: &RawSpec) -> std::result::Result<FamilySpec, SchemaError> {
    if raw.n != raw.blocks.len() {
        return Err(SchemaError::new(
            "n",
            format!("n = {} but {} blocks are given", raw.n, raw.blocks.len()),
        ));
    }
    for (z, b) in raw.blocks.iter().enumerate() {
        if let Some(w) = raw.blocks[..z].iter().position(|o| o.p == b.p) {
            return Err(SchemaError::new(
                format!("blocks[{z}].p"),
                format!("distinct primes: p = {} repeats blocks[{w}].p", b.p),
            ));
        }
    }
    let with_m = raw.blocks.iter().filter(|b| b.m.is_some()).count();
    if with_m != 0 && with_m != raw.blocks.len() {
        let z = raw.blocks.iter().position(|b| b.m.is_none()).unwrap_or(0);
        return Err(SchemaError::new(
            format!("blocks[{z}].m"),
            "either every block or no block sets m",
        ));
    }
    let mut mats = Vec::with_capacity(raw.blocks.len());
    for (z, b) in raw.blocks.iter().enumerate() {
        if !brace_core::algebra::is_prime(b.p as u64) {
            return Err(SchemaError::new(
                format!("blocks[{z}].p"),
                format!("{} is not prime", b.p),
            ));
        }
        let gram = matrix(b.p, &b.gram, format!("blocks[{z}].gram"))?;
        let f = matrix(b.p, &b.f, format!("blocks[{z}].f"))?;
        mats.push((gram, f));
    }
    let spec = if with_m > 0 {
        FamilySpec::Cycle(CycleFamilySpec {
            blocks: raw
                .blocks
                .iter()
                .zip(mats)
                .map(|(b, (gram, f))| CycleBlock {
                    p: b.p,
                    gram,
                    f,
                    m: b.m.unwrap_or(0),
                    r: b.r,
                })
                .collect(),
        })
    } else {
        FamilySpec::Matrix(MatrixFamilySpec {
            blocks: raw
                .blocks
                .iter()
                .zip(mats)
                .map(|(b, (gram, f))| MatrixBlock {
                    p: b.p,
                    gram,
                    f,
                    r: b.r,
                })
                .collect(),
        })
    };
    if let Some(c) = spec.validate().first_failure() {
        let path = c
            .block
            .map(|z| format!("blocks[{z}]"))
            .unwrap_or_else(|| "blocks".into());
        let detail = if c.detail.is_empty() {
            String::new()
        } else {
            format!(" ({})", c.detail)
        };
        return Err(SchemaError::new(
            path,
            format!("constraint {} violated{detail}", c.constraint),
        ));
    }
    Ok(spec)
}

pub fn parse_spec(path: &Path) -> Result<FamilySpec> {
    let text = fs::read_to_string(path)?;
    Ok(parse_spec_str(&text)?)
}

/// Spec-file form of a single block.
pub fn raw_block(p: u32, gram: &Matrix, f: &Matrix, m: Option<usize>, r: usize) -> RawBlock {
    RawBlock {
        p,
        gram: gram.to_rows(),
        f: f.to_rows(),
        m,
        r,
    }
}

pub fn to_raw(spec: &FamilySpec) -> RawSpec {
    let blocks: Vec<RawBlock> = match spec {
        FamilySpec::Cycle(s) => s
            .blocks
            .iter()
            .map(|b| raw_block(b.p, &b.gram, &b.f, Some(b.m), b.r))
            .collect(),
        FamilySpec::Matrix(s) => s
            .blocks
            .iter()
            .map(|b| raw_block(b.p, &b.gram, &b.f, None, b.r))
            .collect(),
    };
    RawSpec {
        n: blocks.len(),
        blocks,
    }
}

fn rows_json(rows: &[Vec<i64>]) -> String {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| serde_json::to_string(r).expect("integers serialize"))
        .collect();
    format!("[\n      {}\n    ]", rows.join(",\n      "))
}

/// A block as it would appear inside a spec file, one matrix row per line.
pub fn render_block(b: &RawBlock) -> String {
    let mut s = format!(
        "{{\n    \"p\": {},\n    \"gram\": {},\n    \"f\": {},\n",
        b.p,
        rows_json(&b.gram),
        rows_json(&b.f)
    );
    if let Some(m) = b.m {
        s.push_str(&format!("    \"m\": {m},\n"));
    }
    s.push_str(&format!("    \"r\": {}\n}}\n", b.r));
    s
}
