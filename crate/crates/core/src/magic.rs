//! Magic arrays composed from orthogonal latin arrays, one base-`n` digit per
//! array: `M = n^(d-1) A_1 + .. + n A_(d-1) + A_d`.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lattice::{self, build, permute_symbols, LatinArray, Shape, SymbolPermutation};
use crate::orthogonal::{check_orthogonal_fast, determinant_mod, ParamMatrix};
use crate::params::{enumerate, ParamVector};

/// The common line sum `n(n^d - 1)/2` of a magic array over `0..n^d`.
pub fn sigma(d: usize, n: u64) -> u64 {
    n * (n.pow(d as u32) - 1) / 2
}

/// What a checked composition was made from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub params: Vec<ParamVector>,
    pub perms: Vec<SymbolPermutation>,
}

/// A `d`-dimensional order-`n` array of integers, meant to hold `0..n^d`.
/// Nothing about the value set is assumed; the verifier checks it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicArray {
    shape: Shape,
    values: Vec<u64>,
    provenance: Option<Provenance>,
}

impl MagicArray {
    pub fn from_values(shape: Shape, values: Vec<u64>) -> Result<Self> {
        if values.len() != shape.len() {
            return Err(Error::InvalidArray(format!(
                "expected {} values, got {}",
                shape.len(),
                values.len()
            )));
        }
        Ok(Self {
            shape,
            values,
            provenance: None,
        })
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArray("rows are not square".into()));
        }
        Self::from_values(Shape::new(2, n)?, rows.concat())
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn get(&self, coords: &[usize]) -> u64 {
        self.values[self.shape.index(coords)]
    }

    /// Base-`n` digit `q` (0 = most significant) of every cell, as a latin
    /// array. Inverts [`compose`] for values below `n^d`.
    pub fn digit(&self, q: usize) -> Result<LatinArray> {
        let d = self.shape.dim();
        if q >= d {
            return Err(Error::ShapeMismatch(format!("digit {q} of a {d}-digit array")));
        }
        let n = self.shape.order() as u64;
        let place = n.pow((d - 1 - q) as u32);
        LatinArray::from_values(
            self.shape,
            self.values.iter().map(|&v| ((v / place) % n) as u32).collect(),
        )
    }

    /// Cyclic shift along `axis`, as for latin arrays.
    pub fn shift_axis(&self, axis: usize, amount: i64) -> Result<MagicArray> {
        Ok(MagicArray {
            shape: self.shape,
            values: lattice::shift_values(self.shape, &self.values, axis, amount)?,
            provenance: None,
        })
    }
}

/// Cell-wise `sum(n^(d-q) * arrays[q])`, `arrays[0]` most significant.
/// Orthogonality is the caller's business.
pub fn compose(arrays: &[LatinArray]) -> Result<MagicArray> {
    let first = arrays
        .first()
        .ok_or_else(|| Error::ShapeMismatch("no arrays to compose".into()))?;
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
    let n = shape.order() as u64;
    let values = (0..shape.len())
        .map(|cell| {
            arrays
                .iter()
                .fold(0u64, |acc, a| acc * n + a.values()[cell] as u64)
        })
        .collect();
    MagicArray::from_values(shape, values)
}

/// Validates each vector and the family's orthogonality, then builds,
/// relabels and composes.
pub fn compose_checked(
    vectors: &[ParamVector],
    perms: Option<&[SymbolPermutation]>,
) -> Result<MagicArray> {
    let family = ParamMatrix::new(vectors.to_vec())?;
    if !check_orthogonal_fast(&family)? {
        let (det, _) = determinant_mod(&family);
        return Err(Error::NotOrthogonal {
            det,
            order: family.order(),
        });
    }
    let n = family.order() as usize;
    let perms: Vec<SymbolPermutation> = match perms {
        Some(p) if p.len() != vectors.len() => {
            return Err(Error::InvalidPermutation(format!(
                "{} permutations for {} arrays",
                p.len(),
                vectors.len()
            )))
        }
        Some(p) => p.to_vec(),
        None => vec![SymbolPermutation::identity(n); vectors.len()],
    };
    let arrays = vectors
        .iter()
        .zip(&perms)
        .map(|(v, p)| permute_symbols(&build(v)?, p))
        .collect::<Result<Vec<_>>>()?;
    let mut out = compose(&arrays)?;
    out.provenance = Some(Provenance {
        params: vectors.to_vec(),
        perms,
    });
    Ok(out)
}

/// Outcome of [`count_constructed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionCount {
    /// Ordered families of canonical feasible vectors with `gcd(det, n) = 1`.
    pub families: u64,
    /// `(n!)^d`: independent relabelings of each digit array.
    pub relabelings: BigUint,
    /// `families * relabelings`.
    pub total: BigUint,
    /// Distinct composed grids, when materialized.
    pub distinct: Option<u64>,
}

/// Ceiling on ordered canonical families examined.
const MAX_FAMILY_CANDIDATES: u64 = 50_000_000;

/// Largest order for which every composed square is materialized.
pub const MAX_DISTINCT_ORDER: u64 = 5;

/// Canonical vectors suffice: any feasible vector is a unit multiple of a
/// canonical one, and scaling only relabels symbols.
pub fn orthogonal_families(d: usize, n: u64) -> Result<Vec<Vec<ParamVector>>> {
    let canonical = enumerate(d, n, true)?;
    let candidates = (canonical.len() as u64).saturating_pow(d as u32);
    if candidates > MAX_FAMILY_CANDIDATES {
        return Err(Error::Unsupported(format!(
            "{candidates} candidate families for d={d} n={n}"
        )));
    }
    let families = (0..d)
        .map(|_| canonical.iter().cloned())
        .multi_cartesian_product()
        .filter(|family| {
            let m = ParamMatrix::new(family.clone()).expect("same shape");
            determinant_mod(&m).1.is_unit()
        })
        .collect();
    Ok(families)
}

/// Counts the magic arrays this construction yields: ordered orthogonal
/// families times `(n!)^d` relabelings. With `distinct`, every square is
/// materialized and distinct grids are counted (`d = 2`, `n <= 5` only).
pub fn count_constructed(d: usize, n: u64, distinct: bool) -> Result<ConstructionCount> {
    if distinct && (d != 2 || n > MAX_DISTINCT_ORDER) {
        return Err(Error::Unsupported(format!(
            "distinct counting needs d = 2 and n <= {MAX_DISTINCT_ORDER}"
        )));
    }
    let families = orthogonal_families(d, n)?;
    let factorial: BigUint = (1..=n).map(BigUint::from).product();
    let relabelings = factorial.pow(d as u32);
    let total = &relabelings * families.len();

    let distinct = if distinct {
        let all_perms: Vec<SymbolPermutation> = (0..n as u32)
            .permutations(n as usize)
            .map(|p| SymbolPermutation::new(p).expect("permutation"))
            .collect();
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        for family in &families {
            let arrays: Vec<LatinArray> = family.iter().map(build).collect::<Result<_>>()?;
            for p in &all_perms {
                let high = permute_symbols(&arrays[0], p)?;
                for q in &all_perms {
                    let low = permute_symbols(&arrays[1], q)?;
                    let m = compose(&[high.clone(), low])?;
                    seen.insert(m.values().iter().map(|&v| v as u16).collect());
                }
            }
        }
        Some(seen.len() as u64)
    } else {
        None
    };

    Ok(ConstructionCount {
        families: families.len() as u64,
        relabelings,
        total,
        distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_magic_pandiagonal;

    fn pv(n: u64, a: &[u64]) -> ParamVector {
        ParamVector::new(n, a.to_vec()).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(2, 5), 60);
        assert_eq!(sigma(2, 4), 30);
        assert_eq!(sigma(3, 11), 11 * 1330 / 2);
        assert_eq!(sigma(3, 11), 7315);
        assert_eq!(sigma(4, 17), 709_920);
    }

    #[test]
    fn zero_digits_compose_to_zero() {
        let shape = Shape::new(2, 5).unwrap();
        let zero = LatinArray::from_values(shape, vec![0; 25]).unwrap();
        let m = compose(&[zero.clone(), zero]).unwrap();
        assert!(m.values().iter().all(|&v| v == 0));
        assert!(!verify_magic_pandiagonal(&m).passed);
    }

    #[test]
    fn checked_square() {
        let m = compose_checked(&[pv(5, &[1, 2]), pv(5, &[1, 3])], None).unwrap();
        let r = verify_magic_pandiagonal(&m);
        assert!(r.passed, "{r}");
        assert_eq!(r.magic_sum, Some(60));
        let mut sorted = m.values().to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..25).collect::<Vec<u64>>());
        assert_eq!(m.provenance().unwrap().params.len(), 2);
    }

    #[test]
    fn checked_rejections() {
        assert!(matches!(
            compose_checked(&[pv(5, &[1, 2]), pv(5, &[2, 4])], None),
            Err(Error::NotOrthogonal { det: 0, order: 5 })
        ));
        assert!(matches!(
            compose_checked(&[pv(11, &[1, 2, 5]), pv(11, &[1, 2, 6]), pv(11, &[1, 2, 7])], None),
            Err(Error::NotOrthogonal { .. })
        ));
        assert!(matches!(
            compose_checked(&[pv(5, &[1, 2]), pv(5, &[1, 4])], None),
            Err(Error::NotPandiagonalFamily { index: 1, .. })
        ));
        let one = [SymbolPermutation::identity(5)];
        assert!(compose_checked(&[pv(5, &[1, 2]), pv(5, &[1, 3])], Some(&one)).is_err());
    }

    #[test]
    fn digits_round_trip() {
        let vs = [pv(11, &[1, 2, 4]), pv(11, &[1, 5, 8]), pv(11, &[1, 6, 8])];
        let m = compose_checked(&vs, None).unwrap();
        for (q, v) in vs.iter().enumerate() {
            assert_eq!(m.digit(q).unwrap().values(), build(v).unwrap().values());
        }
        assert!(m.digit(3).is_err());
    }

    #[test]
    fn counts() {
        let c = count_constructed(2, 5, false).unwrap();
        assert_eq!(c.families, 2);
        assert_eq!(c.total, BigUint::from(28_800u32));
        let none = count_constructed(2, 3, false).unwrap();
        assert_eq!(none.families, 0);
        assert_eq!(none.total, BigUint::from(0u32));
        assert!(count_constructed(2, 7, true).is_err());
        assert!(count_constructed(3, 5, true).is_err());
        // n = 7: every ordered pair of distinct <1,l> is orthogonal
        assert_eq!(count_constructed(2, 7, false).unwrap().families, 4 * 3);
    }
}
