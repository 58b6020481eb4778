//! Linear-form arrays `x -> sum(a_m * x_m) mod n` and the 2-D views used to
//! look at them.
//!
//! Storage is row-major with the first index slowest: the flat index of
//! `(x_0, .., x_{d-1})` is `sum(x_m * n^(d-1-m))`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::modarith::{self, MAX_MODULUS};
use crate::params::ParamVector;

/// Axis names in index order.
pub const AXIS_NAMES: [char; 4] = ['i', 'j', 'k', 'l'];

/// Upper bound on cell count, `101^4`.
pub const MAX_CELLS: usize = 101 * 101 * 101 * 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    dim: usize,
    order: usize,
}

impl Shape {
    pub fn new(dim: usize, order: usize) -> Result<Self> {
        if !(2..=4).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        let too_big = order
            .checked_pow(dim as u32)
            .is_none_or(|cells| cells > MAX_CELLS);
        if order == 0 || order as u64 > MAX_MODULUS || too_big {
            return Err(Error::OrderOutOfRange {
                order: order as u64,
                min: 1,
                max: (MAX_CELLS as f64).powf(1.0 / dim as f64).round() as u64,
            });
        }
        Ok(Self { dim, order })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.order.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.dim);
        coords.iter().fold(0, |acc, &x| {
            debug_assert!(x < self.order);
            acc * self.order + x
        })
    }

    pub fn coords(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.dim];
        for slot in out.iter_mut().rev() {
            *slot = index % self.order;
            index /= self.order;
        }
        out
    }

    /// Stride of `axis` in the flat layout.
    pub fn stride(&self, axis: usize) -> usize {
        self.order.pow((self.dim - 1 - axis) as u32)
    }
}

/// A `d`-dimensional order-`n` array of symbols `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinArray {
    shape: Shape,
    values: Vec<u32>,
    params: Option<ParamVector>,
}

impl LatinArray {
    pub fn from_values(shape: Shape, values: Vec<u32>) -> Result<Self> {
        if values.len() != shape.len() {
            return Err(Error::InvalidArray(format!(
                "expected {} values, got {}",
                shape.len(),
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|&&v| v as usize >= shape.order) {
            return Err(Error::InvalidArray(format!(
                "symbol {bad} outside 0..{}",
                shape.order
            )));
        }
        Ok(Self {
            shape,
            values,
            params: None,
        })
    }

    /// Builds a square from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArray("rows are not square".into()));
        }
        Self::from_values(Shape::new(2, n)?, rows.concat())
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.shape.dim
    }

    pub fn order(&self) -> usize {
        self.shape.order
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn params(&self) -> Option<&ParamVector> {
        self.params.as_ref()
    }

    pub fn get(&self, coords: &[usize]) -> u32 {
        self.values[self.shape.index(coords)]
    }
}

/// A bijection on the symbols `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolPermutation {
    map: Vec<u32>,
}

impl SymbolPermutation {
    pub fn new(map: Vec<u32>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            let v = v as usize;
            if v >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} outside 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} appears twice"
                )));
            }
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n as u32).collect(),
        }
    }

    /// `v -> v + shift mod n`
    pub fn cyclic(n: usize, shift: i64) -> Self {
        Self {
            map: (0..n)
                .map(|v| modarith::reduce(v as i64 + shift, n as u64) as u32)
                .collect(),
        }
    }

    /// `v -> k * v mod n`; `k` must be coprime to `n`.
    pub fn multiply(n: usize, k: i64) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|v| modarith::reduce(v as i64 * k, n as u64) as u32)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.map[v as usize]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    /// `self` after `first`.
    pub fn after(&self, first: &SymbolPermutation) -> SymbolPermutation {
        SymbolPermutation {
            map: first.map.iter().map(|&v| self.apply(v)).collect(),
        }
    }
}

/// Evaluates the linear form of `v` at every lattice point.
pub fn build(v: &ParamVector) -> Result<LatinArray> {
    let n = v.order() as usize;
    let shape = Shape::new(v.dimension(), n)?;
    let alphas: Vec<usize> = v.alphas().iter().map(|&a| a as usize).collect();
    let mut values = Vec::with_capacity(shape.len());
    // innermost axis runs fastest; keep the partial sum of the outer axes
    let inner = alphas[shape.dim - 1];
    let mut coords = vec![0usize; shape.dim - 1];
    loop {
        let base = coords
            .iter()
            .zip(&alphas)
            .map(|(&x, &a)| x * a)
            .sum::<usize>()
            % n;
        let mut cur = base;
        for _ in 0..n {
            values.push(cur as u32);
            cur = (cur + inner) % n;
        }
        let mut axis = coords.len();
        loop {
            if axis == 0 {
                let mut out = LatinArray::from_values(shape, values)?;
                out.params = Some(v.clone());
                return Ok(out);
            }
            axis -= 1;
            coords[axis] += 1;
            if coords[axis] < n {
                break;
            }
            coords[axis] = 0;
        }
    }
}

/// Replaces each symbol `s` by `perm(s)`.
pub fn permute_symbols(a: &LatinArray, perm: &SymbolPermutation) -> Result<LatinArray> {
    if perm.len() != a.order() {
        return Err(Error::InvalidPermutation(format!(
            "permutation of {} symbols applied to order {}",
            perm.len(),
            a.order()
        )));
    }
    Ok(LatinArray {
        shape: a.shape,
        values: a.values.iter().map(|&v| perm.apply(v)).collect(),
        params: None,
    })
}

/// Cyclic shift along `axis`: `new(x) = old(x + amount * e_axis)`.
pub fn shift_axis(a: &LatinArray, axis: usize, amount: i64) -> Result<LatinArray> {
    Ok(LatinArray {
        shape: a.shape,
        values: shift_values(a.shape, &a.values, axis, amount)?,
        params: None,
    })
}

/// [`shift_axis`] over any cell type.
pub fn shift_values<T: Copy>(shape: Shape, values: &[T], axis: usize, amount: i64) -> Result<Vec<T>> {
    if axis >= shape.dim {
        return Err(Error::ShapeMismatch(format!(
            "axis {axis} out of range for dimension {}",
            shape.dim
        )));
    }
    let n = shape.order;
    let shift = modarith::reduce(amount, n as u64) as usize;
    let stride = shape.stride(axis);
    Ok((0..shape.len())
        .map(|idx| {
            let x = (idx / stride) % n;
            let moved = (x + shift) % n;
            values[idx - x * stride + moved * stride]
        })
        .collect())
}

/// Where one array axis takes its coordinate from inside a lower-dimensional view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisMap {
    Fixed(usize),
    /// Follows free coordinate `slot`, as `n-1-x` when `reversed`.
    Free { slot: usize, reversed: bool },
}

/// An affine embedding of a `free`-dimensional grid into the array: every
/// array axis is either constant or follows (possibly reversed) one of the
/// view's free coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct View {
    free: usize,
    maps: Vec<AxisMap>,
}

impl View {
    pub fn identity(dim: usize) -> Self {
        Self {
            free: dim,
            maps: (0..dim)
                .map(|slot| AxisMap::Free {
                    slot,
                    reversed: false,
                })
                .collect(),
        }
    }

    pub fn free_dims(&self) -> usize {
        self.free
    }

    pub fn maps(&self) -> &[AxisMap] {
        &self.maps
    }

    /// Pins free coordinate `slot` to `value`.
    pub fn fix(&self, slot: usize, value: usize, n: usize) -> View {
        assert!(slot < self.free && value < n);
        let maps = self
            .maps
            .iter()
            .map(|&m| match m {
                AxisMap::Free { slot: s, reversed } if s == slot => {
                    AxisMap::Fixed(if reversed { n - 1 - value } else { value })
                }
                AxisMap::Free { slot: s, reversed } if s > slot => AxisMap::Free {
                    slot: s - 1,
                    reversed,
                },
                other => other,
            })
            .collect();
        View {
            free: self.free - 1,
            maps,
        }
    }

    /// Removes free coordinate `dependent` by tying it to `kept`: equal, or
    /// with `anti`, summing to `n-1`.
    pub fn tie(&self, dependent: usize, kept: usize, anti: bool) -> View {
        assert!(dependent < self.free && kept < self.free && dependent != kept);
        let renumber = |s: usize| if s > dependent { s - 1 } else { s };
        let maps = self
            .maps
            .iter()
            .map(|&m| match m {
                AxisMap::Free { slot, reversed } if slot == dependent => AxisMap::Free {
                    slot: renumber(kept),
                    reversed: reversed ^ anti,
                },
                AxisMap::Free { slot, reversed } => AxisMap::Free {
                    slot: renumber(slot),
                    reversed,
                },
                other => other,
            })
            .collect();
        View {
            free: self.free - 1,
            maps,
        }
    }

    /// The `(free-1)`-dimensional sub-views: `n` per free axis with that axis
    /// pinned (axes in order, values ascending), then for every pair of free
    /// axes the equal tie and the anti tie.
    pub fn constituents(&self, n: usize) -> Vec<View> {
        let mut out = Vec::with_capacity(self.free * n + self.free * (self.free - 1));
        for slot in 0..self.free {
            for value in 0..n {
                out.push(self.fix(slot, value, n));
            }
        }
        for a in 0..self.free {
            for b in a + 1..self.free {
                out.push(self.tie(a, b, false));
                out.push(self.tie(a, b, true));
            }
        }
        out
    }

    /// Array coordinates of the view point `free_coords`.
    pub fn coords(&self, free_coords: &[usize], n: usize) -> Vec<usize> {
        self.maps
            .iter()
            .map(|&m| match m {
                AxisMap::Fixed(c) => c,
                AxisMap::Free { slot, reversed } => {
                    let x = free_coords[slot];
                    if reversed {
                        n - 1 - x
                    } else {
                        x
                    }
                }
            })
            .collect()
    }

    /// Flat indices of a 2-D view, row-major: entry `r * n + c` is the cell at
    /// row `r`, column `c`.
    pub fn plane_indices(&self, shape: Shape) -> Vec<usize> {
        assert_eq!(self.free, 2, "plane_indices needs a 2-D view");
        let n = shape.order;
        let mut base = 0usize;
        let mut step = [0isize; 2];
        for (axis, &m) in self.maps.iter().enumerate() {
            let stride = shape.stride(axis);
            match m {
                AxisMap::Fixed(c) => base += c * stride,
                AxisMap::Free { slot, reversed } => {
                    if reversed {
                        base += (n - 1) * stride;
                        step[slot] -= stride as isize;
                    } else {
                        step[slot] += stride as isize;
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n as isize {
            for c in 0..n as isize {
                out.push((base as isize + r * step[0] + c * step[1]) as usize);
            }
        }
        out
    }
}

impl fmt::Display for View {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SLOTS: [&str; 4] = ["r", "c", "p", "q"];
        let slot_name = |s: usize| {
            if self.free == 2 {
                ["row", "col"][s]
            } else {
                SLOTS[s]
            }
        };
        for (axis, &m) in self.maps.iter().enumerate() {
            if axis > 0 {
                write!(f, " ")?;
            }
            let name = AXIS_NAMES[axis];
            match m {
                AxisMap::Fixed(c) => write!(f, "{name}={c}")?,
                AxisMap::Free {
                    slot,
                    reversed: false,
                } => write!(f, "{name}={}", slot_name(slot))?,
                AxisMap::Free {
                    slot,
                    reversed: true,
                } => write!(f, "{name}=n-1-{}", slot_name(slot))?,
            }
        }
        Ok(())
    }
}

/// How a non-free axis is pinned in a [`SliceSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisConstraint {
    Fixed(usize),
    /// `x_axis = x_other`
    Equal(usize),
    /// `x_axis + x_other = sum`; resolving requires `sum = n - 1`.
    Anti { other: usize, sum: usize },
}

/// A user-facing description of a planar section: constraints on all but
/// two axes, and which free axis runs down the rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceSpec {
    constraints: BTreeMap<usize, AxisConstraint>,
    axes: Option<(usize, usize)>,
}

impl SliceSpec {
    pub fn new() -> Self {
        Self {
            constraints: BTreeMap::new(),
            axes: None,
        }
    }

    pub fn with(mut self, axis: usize, c: AxisConstraint) -> Self {
        self.constraints.insert(axis, c);
        self
    }

    /// Chooses the row and column axes explicitly; by default the two free
    /// axes are taken in ascending order.
    pub fn with_axes(mut self, rows: usize, cols: usize) -> Self {
        self.axes = Some((rows, cols));
        self
    }

    pub fn resolve(&self, shape: Shape) -> Result<View> {
        let d = shape.dim;
        let n = shape.order;
        let bad = |msg: String| Err(Error::InvalidSlice(msg));
        if let Some((&axis, _)) = self.constraints.range(d..).next() {
            return bad(format!("axis {axis} out of range for dimension {d}"));
        }
        let free: Vec<usize> = (0..d).filter(|a| !self.constraints.contains_key(a)).collect();
        if free.len() != 2 {
            return bad(format!(
                "{} free axes; a slice needs exactly 2",
                free.len()
            ));
        }
        let (rows, cols) = self.axes.unwrap_or((free[0], free[1]));
        if !(free.contains(&rows) && free.contains(&cols) && rows != cols) {
            return bad("row and column axes must be the two free axes".into());
        }
        let slot_of = |axis: usize| if axis == rows { 0 } else { 1 };
        let mut maps = Vec::with_capacity(d);
        for (axis, name) in AXIS_NAMES.iter().enumerate().take(d) {
            let m = match self.constraints.get(&axis) {
                None => AxisMap::Free {
                    slot: slot_of(axis),
                    reversed: false,
                },
                Some(&AxisConstraint::Fixed(c)) => {
                    if c >= n {
                        return bad(format!("coordinate {c} outside 0..{n}"));
                    }
                    AxisMap::Fixed(c)
                }
                Some(&AxisConstraint::Equal(other)) | Some(&AxisConstraint::Anti { other, .. })
                    if !free.contains(&other) =>
                {
                    return bad(format!(
                        "axis {name} is tied to {}, which is not free",
                        AXIS_NAMES[other]
                    ));
                }
                Some(&AxisConstraint::Equal(other)) => AxisMap::Free {
                    slot: slot_of(other),
                    reversed: false,
                },
                Some(&AxisConstraint::Anti { other, sum }) => {
                    if sum != n - 1 {
                        return bad(format!("anti tie must sum to n-1 = {}, got {sum}", n - 1));
                    }
                    AxisMap::Free {
                        slot: slot_of(other),
                        reversed: true,
                    }
                }
            };
            maps.push(m);
        }
        Ok(View { free: 2, maps })
    }
}

impl Default for SliceSpec {
    fn default() -> Self {
        Self::new()
    }
}

fn parse_axis(s: &str) -> Result<usize> {
    let s = s.trim();
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => AXIS_NAMES
            .iter()
            .position(|&a| a == c)
            .or_else(|| (c == 'ℓ').then_some(3))
            .ok_or_else(|| Error::InvalidSlice(format!("unknown axis '{s}'"))),
        _ => Err(Error::InvalidSlice(format!("unknown axis '{s}'"))),
    }
}

impl FromStr for SliceSpec {
    type Err = Error;

    /// Comma-separated terms: `k=2` fixes an axis, `j=i` ties two axes,
    /// `j+k=16` ties two axes to a constant sum (the first named axis is the
    /// dependent one). An empty string is the identity slice of a square.
    fn from_str(s: &str) -> Result<Self> {
        let mut spec = SliceSpec::new();
        for term in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (lhs, rhs) = term
                .split_once('=')
                .ok_or_else(|| Error::InvalidSlice(format!("term '{term}' has no '='")))?;
            let rhs = rhs.trim();
            let (axis, c) = if let Some((a, b)) = lhs.split_once('+') {
                let sum = rhs
                    .parse()
                    .map_err(|_| Error::InvalidSlice(format!("bad sum in '{term}'")))?;
                (
                    parse_axis(a)?,
                    AxisConstraint::Anti {
                        other: parse_axis(b)?,
                        sum,
                    },
                )
            } else if let Ok(value) = rhs.parse::<usize>() {
                (parse_axis(lhs)?, AxisConstraint::Fixed(value))
            } else {
                (parse_axis(lhs)?, AxisConstraint::Equal(parse_axis(rhs)?))
            };
            if let AxisConstraint::Equal(o) | AxisConstraint::Anti { other: o, .. } = c {
                if o == axis {
                    return Err(Error::InvalidSlice(format!("'{term}' ties an axis to itself")));
                }
            }
            if spec.constraints.insert(axis, c).is_some() {
                return Err(Error::InvalidSlice(format!(
                    "axis {} constrained twice",
                    AXIS_NAMES[axis]
                )));
            }
        }
        Ok(spec)
    }
}

/// Reads the cells of a 2-D view as rows, top to bottom.
pub fn view_rows<T: Copy>(shape: Shape, values: &[T], view: &View) -> Vec<Vec<T>> {
    let n = shape.order;
    view.plane_indices(shape)
        .chunks(n)
        .map(|row| row.iter().map(|&idx| values[idx]).collect())
        .collect()
}

/// The `n x n` section of `a` described by `spec`.
pub fn slice(a: &LatinArray, spec: &SliceSpec) -> Result<Vec<Vec<u32>>> {
    let view = spec.resolve(a.shape)?;
    Ok(view_rows(a.shape, &a.values, &view))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(n: u64, a: &[u64]) -> ParamVector {
        ParamVector::new(n, a.to_vec()).unwrap()
    }

    #[test]
    fn shape_index_roundtrip() {
        let s = Shape::new(4, 5).unwrap();
        for idx in [0, 1, 7, 124, 624] {
            assert_eq!(s.index(&s.coords(idx)), idx);
        }
        assert_eq!(s.index(&[1, 0, 0, 0]), 125);
        assert!(Shape::new(5, 3).is_err());
        assert!(Shape::new(4, 102).is_err());
        assert!(Shape::new(3, 101).is_ok());
    }

    #[test]
    fn build_examples() {
        let c = build(&pv(11, &[1, 2, 7])).unwrap();
        assert_eq!(c.get(&[0, 0, 0]), 0);
        assert_eq!(c.get(&[0, 0, 2]), 3);
        assert_eq!(c.get(&[1, 1, 0]), 3);
        let h = build(&pv(17, &[1, 2, 4, 9])).unwrap();
        assert_eq!(h.get(&[0, 0, 0, 0]), 0);
        assert_eq!(h.get(&[2, 16, 0, 1]), 9);
        // every cell against the defining formula
        let s = h.shape();
        for idx in (0..s.len()).step_by(97) {
            let x = s.coords(idx);
            let expect = (x[0] + 2 * x[1] + 4 * x[2] + 9 * x[3]) % 17;
            assert_eq!(h.values()[idx] as usize, expect);
        }
    }

    #[test]
    fn slice_examples() {
        let c = build(&pv(11, &[1, 2, 7])).unwrap();
        let k2: SliceSpec = "k=2".parse().unwrap();
        assert_eq!(
            slice(&c, &k2).unwrap()[0],
            vec![3, 5, 7, 9, 0, 2, 4, 6, 8, 10, 1]
        );
        let diag: SliceSpec = "j=i".parse().unwrap();
        assert_eq!(
            slice(&c, &diag).unwrap()[0],
            vec![0, 7, 3, 10, 6, 2, 9, 5, 1, 8, 4]
        );
        let sq = build(&pv(5, &[1, 2])).unwrap();
        let rows = slice(&sq, &SliceSpec::new()).unwrap();
        assert_eq!(rows.concat(), sq.values());
    }

    #[test]
    fn slice_spec_errors() {
        let c = build(&pv(11, &[1, 2, 7])).unwrap();
        for bad in ["", "i=1,j=2", "k=11", "j+k=9", "i=i", "i=1,i=2", "x=1", "m"] {
            let res = bad.parse::<SliceSpec>().and_then(|s| s.resolve(c.shape()));
            assert!(res.is_err(), "{bad:?} should be rejected");
        }
        let spec = "i=j,j=k".parse::<SliceSpec>().unwrap();
        assert!(spec.resolve(c.shape()).is_err());
        let transposed = "k=2".parse::<SliceSpec>().unwrap().with_axes(1, 0);
        let rows = slice(&c, &transposed).unwrap();
        assert_eq!(rows[1][0], c.get(&[0, 1, 2]));
    }

    #[test]
    fn permutation_validation() {
        assert!(SymbolPermutation::new(vec![0, 0, 1]).is_err());
        assert!(SymbolPermutation::new(vec![0, 3, 1]).is_err());
        assert!(SymbolPermutation::multiply(6, 2).is_err());
        let once = SymbolPermutation::cyclic(5, 1);
        assert_eq!(once.after(&once), SymbolPermutation::cyclic(5, 2));
        let a = build(&pv(5, &[1, 2])).unwrap();
        assert!(permute_symbols(&a, &SymbolPermutation::identity(7)).is_err());
        let same = permute_symbols(&a, &SymbolPermutation::identity(5)).unwrap();
        assert_eq!(same.values(), a.values());
    }

    #[test]
    fn shift_is_symbol_permutation() {
        let v = pv(7, &[2, 3, 5]);
        let a = build(&v).unwrap();
        assert_eq!(shift_axis(&a, 1, 0).unwrap().values(), a.values());
        assert_eq!(shift_axis(&a, 1, 7).unwrap().values(), a.values());
        assert!(shift_axis(&a, 3, 1).is_err());
        for (axis, &alpha) in v.alphas().iter().enumerate() {
            let shifted = shift_axis(&a, axis, 1).unwrap();
            let relabeled =
                permute_symbols(&a, &SymbolPermutation::cyclic(7, alpha as i64)).unwrap();
            assert_eq!(shifted.values(), relabeled.values());
        }
    }

    #[test]
    fn constituent_counts() {
        let n = 5;
        assert_eq!(View::identity(3).constituents(n).len(), 3 * n + 6);
        assert_eq!(View::identity(4).constituents(n).len(), 4 * n + 12);
        let anti = View::identity(3).tie(0, 1, true);
        assert_eq!(anti.coords(&[1, 3], n), vec![3, 1, 3]);
    }
}
