//! Array documents and their three text encodings.
//!
//! JSON is the canonical form. Grid and CSV print one 2-D block per setting
//! of the leading axes (ascending, first axis slowest), each block an `n x n`
//! table over the last two axes; blocks are separated by a blank line.

use std::fmt::Write as _;

use anyhow::{bail, ensure, Context, Result};
use clap::ValueEnum;
use pandiag_core::{LatinArray, MagicArray, Shape};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Latin,
    Magic,
}

/// One vector for a latin array, one per digit for a magic array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Params {
    Vector(Vec<u64>),
    Family(Vec<Vec<u64>>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Grid,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrayDocument {
    pub dimension: usize,
    pub order: usize,
    pub values: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
}

impl ArrayDocument {
    pub fn from_latin(a: &LatinArray) -> Self {
        Self {
            dimension: a.dim(),
            order: a.order(),
            values: a.values().iter().map(|&v| v as u64).collect(),
            params: a.params().map(|p| Params::Vector(p.alphas().to_vec())),
            kind: Some(Kind::Latin),
        }
    }

    pub fn from_magic(m: &MagicArray) -> Self {
        let shape = m.shape();
        Self {
            dimension: shape.dim(),
            order: shape.order(),
            values: m.values().to_vec(),
            params: m.provenance().map(|p| {
                Params::Family(p.params.iter().map(|v| v.alphas().to_vec()).collect())
            }),
            kind: Some(Kind::Magic),
        }
    }

    pub fn shape(&self) -> Result<Shape> {
        let shape = Shape::new(self.dimension, self.order)?;
        ensure!(
            self.values.len() == shape.len(),
            "{} values for dimension {} order {}; expected {}",
            self.values.len(),
            self.dimension,
            self.order,
            shape.len()
        );
        Ok(shape)
    }

    pub fn to_latin(&self) -> Result<LatinArray> {
        let values = self
            .values
            .iter()
            .map(|&v| u32::try_from(v).context("symbol too large"))
            .collect::<Result<_>>()?;
        Ok(LatinArray::from_values(self.shape()?, values)?)
    }

    pub fn to_magic(&self) -> Result<MagicArray> {
        Ok(MagicArray::from_values(self.shape()?, self.values.clone())?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        let doc = if trimmed.starts_with('{') {
            serde_json::from_str(text).context("malformed JSON document")?
        } else {
            let csv = trimmed.lines().next().is_some_and(|l| l.contains(','));
            parse_blocks(text, csv)?
        };
        doc.shape()?;
        Ok(doc)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string(self)? + "\n"),
            Format::Grid => Ok(render_blocks(self, " ")),
            Format::Csv => Ok(render_blocks(self, ",")),
        }
    }
}

fn render_blocks(doc: &ArrayDocument, sep: &str) -> String {
    let n = doc.order;
    let mut out = String::new();
    for (b, block) in doc.values.chunks(n * n).enumerate() {
        if b > 0 {
            out.push('\n');
        }
        for row in block.chunks(n) {
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    out.push_str(sep);
                }
                write!(out, "{v}").expect("writing to a String");
            }
            out.push('\n');
        }
    }
    out
}

/// Prints rows of a 2-D section in the requested format. JSON sections
/// become 2-D documents without params.
pub fn render_rows(rows: &[Vec<u64>], kind: Option<Kind>, format: Format) -> Result<String> {
    let doc = ArrayDocument {
        dimension: 2,
        order: rows.len(),
        values: rows.concat(),
        params: None,
        kind,
    };
    doc.render(format)
}

fn parse_blocks(text: &str, csv: bool) -> Result<ArrayDocument> {
    let mut blocks: Vec<Vec<Vec<u64>>> = vec![Vec::new()];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            if !blocks.last().expect("nonempty").is_empty() {
                blocks.push(Vec::new());
            }
            continue;
        }
        let cells: Vec<&str> = if csv {
            line.split(',').map(str::trim).collect()
        } else {
            line.split_whitespace().collect()
        };
        let row = cells
            .iter()
            .map(|c| c.parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("line {}: expected non-negative integers", lineno + 1))?;
        blocks.last_mut().expect("nonempty").push(row);
    }
    if blocks.last().is_some_and(Vec::is_empty) {
        blocks.pop();
    }
    let Some(first) = blocks.first() else {
        bail!("empty document");
    };
    let n = first.len();
    for (b, block) in blocks.iter().enumerate() {
        ensure!(
            block.len() == n && block.iter().all(|r| r.len() == n),
            "block {} is not {n} x {n}",
            b + 1
        );
    }
    let mut dimension = 2;
    let mut count = 1;
    while count < blocks.len() && dimension < 4 {
        count *= n;
        dimension += 1;
    }
    ensure!(
        count == blocks.len(),
        "{} blocks of order {n} do not form a 2-, 3- or 4-dimensional array",
        blocks.len()
    );
    Ok(ArrayDocument {
        dimension,
        order: n,
        values: blocks.concat().concat(),
        params: None,
        kind: None,
    })
}
