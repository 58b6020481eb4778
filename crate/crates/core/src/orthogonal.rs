//! Orthogonality of families of linear-form arrays.
//!
//! Two independent routes: the determinant of the parameter matrix must be
//! coprime to `n`, or, by definition, superposing the arrays must give `n^d`
//! distinct tuples.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::LatinArray;
use crate::modarith::{self, Residue};
use crate::params::{self, ParamVector};

/// `d` parameter vectors of a common dimension `d` and order; row `q` belongs
/// to array `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamMatrix {
    rows: Vec<ParamVector>,
}

impl ParamMatrix {
    pub fn new(rows: Vec<ParamVector>) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::ShapeMismatch("empty family".into()))?;
        let (d, n) = (first.dimension(), first.order());
        if rows.len() != d {
            return Err(Error::ShapeMismatch(format!(
                "{} vectors for dimension {d}",
                rows.len()
            )));
        }
        if let Some(bad) = rows.iter().find(|r| r.dimension() != d || r.order() != n) {
            return Err(Error::ShapeMismatch(format!(
                "vector {bad} does not match dimension {d} order {n}"
            )));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[ParamVector] {
        &self.rows
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn order(&self) -> u64 {
        self.rows[0].order()
    }

    fn entries(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.alphas().iter().map(|&a| a as i64).collect())
            .collect()
    }
}

impl fmt::Display for ParamMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, r) in self.rows.iter().enumerate() {
            if idx > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Laplace expansion along the first row. Exact for `d <= 4` and entries
/// below 1000.
fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        size => (0..size)
            .map(|col| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if col % 2 == 0 { 1 } else { -1 };
                sign * m[0][col] * det(&minor)
            })
            .sum(),
    }
}

/// Integer determinant of the parameter matrix and its residue mod `n`.
pub fn determinant_mod(m: &ParamMatrix) -> (i64, Residue) {
    let d = det(&m.entries());
    let r = Residue::new(d, m.order()).expect("order >= 2");
    (d, r)
}

/// Orthogonality via `gcd(det, n) = 1`. Every row must itself be feasible.
pub fn check_orthogonal_fast(m: &ParamMatrix) -> Result<bool> {
    for (index, row) in m.rows.iter().enumerate() {
        let report = params::check(row)?;
        if let Some(v) = report.violations.first() {
            return Err(Error::NotPandiagonalFamily {
                index,
                vector: row.to_string(),
                constraint: v.constraint.to_string(),
            });
        }
    }
    let (_, residue) = determinant_mod(m);
    Ok(residue.is_unit())
}

/// Orthogonality by definition: superposes the arrays cell by cell and
/// checks that all `n^d` tuples are distinct.
pub fn verify_orthogonal_brute(arrays: &[LatinArray]) -> Result<bool> {
    let first = arrays
        .first()
        .ok_or_else(|| Error::ShapeMismatch("empty family".into()))?;
    let shape = first.shape();
    if arrays.len() != shape.dim() {
        return Err(Error::ShapeMismatch(format!(
            "{} arrays for dimension {}",
            arrays.len(),
            shape.dim()
        )));
    }
    if arrays.iter().any(|a| a.shape() != shape) {
        return Err(Error::ShapeMismatch("arrays differ in shape".into()));
    }
    let n = shape.order();
    let mut seen = vec![false; shape.len()];
    for cell in 0..shape.len() {
        let code = arrays
            .iter()
            .fold(0usize, |acc, a| acc * n + a.values()[cell] as usize);
        if std::mem::replace(&mut seen[code], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `gcd(det, n)`, for diagnostics.
pub fn determinant_gcd(m: &ParamMatrix) -> u64 {
    let (_, r) = determinant_mod(m);
    modarith::gcd(r.value(), r.modulus()).expect("modulus is nonzero")
}
