//! Brute-force verification by line enumeration.
//!
//! Only the value grid is read. Every constituent square is enumerated, and
//! every square contributes `4n` lines: `n` rows, `n` columns, and the two
//! wrapped diagonal families. Offset 0 of each family is a main diagonal; the
//! other offsets are the broken diagonals.
//!
//! Squares are visited in a fixed order (axis-pinned views in axis order,
//! then tied views per axis pair, equal tie before anti tie), recursively for
//! 4-D arrays, and the first reported failure is the first in that order no
//! matter how the work is scheduled.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{LatinArray, Shape, View};
use crate::magic::{sigma, MagicArray};

/// A constituent square: its position in enumeration order and how it sits
/// in the array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    pub id: usize,
    pub view: View,
}

/// The `4n + 12` constituent cubes of a 4-D array.
pub fn constituent_cubes(n: usize) -> Vec<View> {
    View::identity(4).constituents(n)
}

/// Every constituent square of a `d`-dimensional order-`n` array:
/// 1 for `d = 2`, `3n + 6` for `d = 3`, `(4n + 12)(3n + 6)` for `d = 4`.
pub fn enumerate_squares(d: usize, n: usize) -> Result<Vec<Square>> {
    let views = match d {
        2 => vec![View::identity(2)],
        3 => View::identity(3).constituents(n),
        4 => constituent_cubes(n)
            .iter()
            .flat_map(|cube| cube.constituents(n))
            .collect(),
        _ => return Err(Error::UnsupportedDimension(d)),
    };
    Ok(views
        .into_iter()
        .enumerate()
        .map(|(id, view)| Square { id, view })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineKind {
    Row,
    Column,
    /// cells `(r, r + offset mod n)`
    DiagonalPlus,
    /// cells `(r, n - 1 - r + offset mod n)`
    DiagonalMinus,
}

impl LineKind {
    fn tier(self, offset: usize) -> Grade {
        match self {
            LineKind::Row | LineKind::Column => Grade::RowsColumns,
            _ if offset == 0 => Grade::Diagonal,
            _ => Grade::Pandiagonal,
        }
    }
}

impl fmt::Display for LineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LineKind::Row => "row",
            LineKind::Column => "column",
            LineKind::DiagonalPlus => "diagonal+",
            LineKind::DiagonalMinus => "diagonal-",
        })
    }
}

/// A line of `n` cells in array coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub square: usize,
    pub kind: LineKind,
    /// Row or column number for straight lines, wrap offset for diagonals.
    pub offset: usize,
    pub cells: Vec<Vec<usize>>,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "square #{} {} {}", self.square, self.kind, self.offset)
    }
}

/// Local `(row, col)` cells of one line of an `n x n` square.
pub fn line_cells(kind: LineKind, offset: usize, n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .map(|t| match kind {
            LineKind::Row => (offset, t),
            LineKind::Column => (t, offset),
            LineKind::DiagonalPlus => (t, (t + offset) % n),
            LineKind::DiagonalMinus => (t, (2 * n - 1 - t + offset) % n),
        })
        .collect()
}

const KINDS: [LineKind; 4] = [
    LineKind::Row,
    LineKind::Column,
    LineKind::DiagonalPlus,
    LineKind::DiagonalMinus,
];

/// The `4n` lines of `square`, rows first, then columns, then the two
/// diagonal families by offset.
pub fn enumerate_lines(square: &Square, n: usize) -> Vec<Line> {
    KINDS
        .iter()
        .flat_map(|&kind| (0..n).map(move |offset| (kind, offset)))
        .map(|(kind, offset)| make_line(square, kind, offset, n))
        .collect()
}

fn make_line(square: &Square, kind: LineKind, offset: usize, n: usize) -> Line {
    Line {
        square: square.id,
        kind,
        offset,
        cells: line_cells(kind, offset, n)
            .into_iter()
            .map(|(r, c)| square.view.coords(&[r, c], n))
            .collect(),
    }
}

/// How far the line property holds, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Grade {
    RowsColumns,
    Diagonal,
    Pandiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    PandiagonalLatin,
    PandiagonalMagic,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::PandiagonalLatin => "pandiagonal-latin",
            Property::PandiagonalMagic => "pandiagonal-magic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    /// A symbol occurs twice on a line.
    RepeatedSymbol(u32),
    SymbolOutOfRange(u32),
    WrongSum { expected: u64, found: u64 },
    /// A value occurs twice in a magic array.
    Repeat(u64),
    ValueOutOfRange(u64),
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::RepeatedSymbol(s) => write!(f, "symbol {s} repeated"),
            FailureReason::SymbolOutOfRange(s) => write!(f, "symbol {s} out of range"),
            FailureReason::WrongSum { expected, found } => {
                write!(f, "sum {found}, expected {expected}")
            }
            FailureReason::Repeat(v) => write!(f, "repeat of value {v}"),
            FailureReason::ValueOutOfRange(v) => write!(f, "value {v} out of range"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub reason: FailureReason,
    /// Absent for value-set failures of magic arrays.
    pub line: Option<Line>,
    /// Placement of the failing square, e.g. `i=2 j=row k=col`.
    pub square: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub property: Property,
    pub passed: bool,
    pub squares_checked: usize,
    pub lines_checked: usize,
    /// Strongest grade met by every line of every square.
    pub grade: Option<Grade>,
    /// For magic arrays: whether the values are exactly `0..n^d`.
    pub values_distinct: bool,
    pub first_failure: Option<Failure>,
    pub magic_sum: Option<u64>,
}

impl VerificationReport {
    pub fn is_latin(&self) -> bool {
        self.grade >= Some(Grade::RowsColumns)
    }

    pub fn is_diagonal(&self) -> bool {
        self.grade >= Some(Grade::Diagonal)
    }

    pub fn is_pandiagonal(&self) -> bool {
        self.grade == Some(Grade::Pandiagonal)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}",
            self.property,
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        if let Some(sum) = self.magic_sum {
            write!(f, " sum={sum}")?;
        }
        write!(
            f,
            " lines={} squares={}",
            self.lines_checked, self.squares_checked
        )?;
        let grade = match self.grade {
            None => "none",
            Some(Grade::RowsColumns) => "rows-columns",
            Some(Grade::Diagonal) => "diagonal",
            Some(Grade::Pandiagonal) => "pandiagonal",
        };
        write!(f, " grade={grade}")?;
        if let Some(fail) = &self.first_failure {
            write!(f, " first-failure=\"{}", fail.reason)?;
            if let (Some(line), Some(sq)) = (&fail.line, &fail.square) {
                write!(f, " on {line} [{sq}]")?;
            }
            write!(f, "\"")?;
        }
        Ok(())
    }
}

struct Pattern {
    kind: LineKind,
    offset: usize,
    cells: Vec<usize>,
}

fn patterns(n: usize) -> Vec<Pattern> {
    KINDS
        .iter()
        .flat_map(|&kind| (0..n).map(move |offset| (kind, offset)))
        .map(|(kind, offset)| Pattern {
            kind,
            offset,
            cells: line_cells(kind, offset, n)
                .into_iter()
                .map(|(r, c)| r * n + c)
                .collect(),
        })
        .collect()
}

struct SquareOutcome {
    tier_ok: [bool; 3],
    first: Option<(usize, FailureReason)>,
}

struct Scan {
    squares: usize,
    lines: usize,
    grade: Option<Grade>,
    first_failure: Option<Failure>,
}

/// Runs `check` on every line of every square. `check` gets the values of
/// one line and returns the reason it fails, if it does.
fn scan<T, F>(shape: Shape, values: &[T], check: F) -> Scan
where
    T: Copy + Sync,
    F: Fn(&mut Vec<T>) -> Option<FailureReason> + Sync,
{
    let n = shape.order();
    let squares = enumerate_squares(shape.dim(), n).expect("shape dimension is valid");
    let pats = patterns(n);
    let outcomes: Vec<SquareOutcome> = squares
        .par_iter()
        .map(|square| {
            let table = square.view.plane_indices(shape);
            let mut buf = Vec::with_capacity(n);
            let mut out = SquareOutcome {
                tier_ok: [true; 3],
                first: None,
            };
            for (p_idx, pat) in pats.iter().enumerate() {
                buf.clear();
                buf.extend(pat.cells.iter().map(|&l| values[table[l]]));
                if let Some(reason) = check(&mut buf) {
                    out.tier_ok[pat.kind.tier(pat.offset) as usize] = false;
                    if out.first.is_none() {
                        out.first = Some((p_idx, reason));
                    }
                }
            }
            out
        })
        .collect();

    let mut tier_ok = [true; 3];
    let mut first_failure = None;
    for (square, outcome) in squares.iter().zip(&outcomes) {
        for (ok, &o) in tier_ok.iter_mut().zip(&outcome.tier_ok) {
            *ok &= o;
        }
        if first_failure.is_none() {
            if let Some((p_idx, reason)) = &outcome.first {
                let pat = &pats[*p_idx];
                first_failure = Some(Failure {
                    reason: reason.clone(),
                    line: Some(make_line(square, pat.kind, pat.offset, n)),
                    square: Some(square.view.to_string()),
                });
            }
        }
    }
    let grade = match tier_ok {
        [false, _, _] => None,
        [true, false, _] => Some(Grade::RowsColumns),
        [true, true, false] => Some(Grade::Diagonal),
        [true, true, true] => Some(Grade::Pandiagonal),
    };
    Scan {
        squares: squares.len(),
        lines: squares.len() * pats.len(),
        grade,
        first_failure,
    }
}

/// Checks that every line of every constituent square holds each symbol of
/// `0..n` exactly once.
pub fn verify_latin_pandiagonal(a: &LatinArray) -> VerificationReport {
    let n = a.order();
    let scan = scan(a.shape(), a.values(), |line: &mut Vec<u32>| {
        let mut seen = vec![false; n];
        for &s in line.iter() {
            match seen.get_mut(s as usize) {
                None => return Some(FailureReason::SymbolOutOfRange(s)),
                Some(slot) if *slot => return Some(FailureReason::RepeatedSymbol(s)),
                Some(slot) => *slot = true,
            }
        }
        None
    });
    VerificationReport {
        property: Property::PandiagonalLatin,
        passed: scan.grade == Some(Grade::Pandiagonal),
        squares_checked: scan.squares,
        lines_checked: scan.lines,
        grade: scan.grade,
        values_distinct: true,
        first_failure: scan.first_failure,
        magic_sum: None,
    }
}

/// Checks that the values are exactly `0..n^d` and that every line of every
/// constituent square sums to `n(n^d - 1)/2`.
pub fn verify_magic_pandiagonal(m: &MagicArray) -> VerificationReport {
    let shape = m.shape();
    let target = sigma(shape.dim(), shape.order() as u64);
    let total = shape.len() as u64;

    let mut seen = vec![false; shape.len()];
    let mut value_failure = None;
    for &v in m.values() {
        let reason = if v >= total {
            Some(FailureReason::ValueOutOfRange(v))
        } else if std::mem::replace(&mut seen[v as usize], true) {
            Some(FailureReason::Repeat(v))
        } else {
            None
        };
        if let Some(reason) = reason {
            value_failure = Some(Failure {
                reason,
                line: None,
                square: None,
            });
            break;
        }
    }

    let scan = scan(shape, m.values(), |line: &mut Vec<u64>| {
        let found: u64 = line.iter().sum();
        (found != target).then_some(FailureReason::WrongSum {
            expected: target,
            found,
        })
    });
    let values_distinct = value_failure.is_none();
    VerificationReport {
        property: Property::PandiagonalMagic,
        passed: values_distinct && scan.grade == Some(Grade::Pandiagonal),
        squares_checked: scan.squares,
        lines_checked: scan.lines,
        grade: scan.grade,
        values_distinct,
        first_failure: value_failure.or(scan.first_failure),
        magic_sum: Some(target),
    }
}
