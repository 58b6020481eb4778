//! Parameter vectors `<a1, .., ad>` and their feasibility constraints.
//!
//! A vector is feasible when every linear combination that shows up along
//! some line of some constituent square of the array it generates is coprime
//! to the order. Each constraint is a signed sum of components; differences
//! are reduced mod `n` before the gcd, so `gcd(0, n) = n` marks a violation.

use std::fmt;

use crate::error::{Error, Result};
use crate::modarith::{self, MAX_MODULUS};

/// The tuple `(a1, .., ad)` with every component in `1..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamVector {
    order: u64,
    alphas: Vec<u64>,
}

impl ParamVector {
    pub fn new(order: u64, alphas: Vec<u64>) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&order) {
            return Err(Error::OrderOutOfRange {
                order,
                min: 2,
                max: MAX_MODULUS,
            });
        }
        if !(2..=4).contains(&alphas.len()) {
            return Err(Error::UnsupportedDimension(alphas.len()));
        }
        for (position, &value) in alphas.iter().enumerate() {
            if value == 0 || value >= order {
                return Err(Error::ParamOutOfRange {
                    position: position + 1,
                    value,
                    max: order - 1,
                });
            }
        }
        Ok(Self { order, alphas })
    }

    pub fn dimension(&self) -> usize {
        self.alphas.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn alphas(&self) -> &[u64] {
        &self.alphas
    }

    pub fn is_canonical(&self) -> bool {
        self.alphas[0] == 1
    }
}

impl fmt::Display for ParamVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (idx, a) in self.alphas.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "> mod {}", self.order)
    }
}

/// One coprimality requirement. Indices are zero-based; `S` is the sum of all
/// components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// `a_m`
    Component(usize),
    /// `a_m + a_m'`
    PairSum(usize, usize),
    /// `a_m - a_m'`, symmetric up to sign
    PairDifference(usize, usize),
    /// `S`
    Total,
    /// `S - a_m`
    TotalLess(usize),
    /// `S - 2 a_m`
    TotalLessTwice(usize),
    /// `S - a_once - 2 a_twice`, ordered
    TotalLessOnceTwice { once: usize, twice: usize },
    /// `S - 2 a_m - 2 a_m'`
    TotalLessTwiceBoth(usize, usize),
}

impl Constraint {
    pub fn evaluate(&self, alphas: &[u64]) -> i64 {
        let a = |m: usize| alphas[m] as i64;
        let total: i64 = alphas.iter().map(|&x| x as i64).sum();
        match *self {
            Constraint::Component(m) => a(m),
            Constraint::PairSum(m, p) => a(m) + a(p),
            Constraint::PairDifference(m, p) => a(m) - a(p),
            Constraint::Total => total,
            Constraint::TotalLess(m) => total - a(m),
            Constraint::TotalLessTwice(m) => total - 2 * a(m),
            Constraint::TotalLessOnceTwice { once, twice } => total - a(once) - 2 * a(twice),
            Constraint::TotalLessTwiceBoth(m, p) => total - 2 * a(m) - 2 * a(p),
        }
    }

    /// Highest component index the constraint reads.
    fn max_index(&self) -> usize {
        match *self {
            Constraint::Component(m) => m,
            Constraint::PairSum(m, p) | Constraint::PairDifference(m, p) => m.max(p),
            _ => usize::MAX,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Constraint::Component(m) => write!(f, "a{}", m + 1),
            Constraint::PairSum(m, p) => write!(f, "a{}+a{}", m + 1, p + 1),
            Constraint::PairDifference(m, p) => write!(f, "a{}-a{}", m + 1, p + 1),
            Constraint::Total => write!(f, "S"),
            Constraint::TotalLess(m) => write!(f, "S-a{}", m + 1),
            Constraint::TotalLessTwice(m) => write!(f, "S-2a{}", m + 1),
            Constraint::TotalLessOnceTwice { once, twice } => {
                write!(f, "S-a{}-2a{}", once + 1, twice + 1)
            }
            Constraint::TotalLessTwiceBoth(m, p) => write!(f, "S-2a{}-2a{}", m + 1, p + 1),
        }
    }
}

/// The full constraint system for dimension `d`, in a fixed order.
pub fn constraint_system(d: usize) -> Result<Vec<Constraint>> {
    if !(2..=4).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|m| (m + 1..d).map(move |p| (m, p)))
        .collect();
    let mut out: Vec<Constraint> = (0..d).map(Constraint::Component).collect();
    out.extend(pairs.iter().map(|&(m, p)| Constraint::PairSum(m, p)));
    out.extend(pairs.iter().map(|&(m, p)| Constraint::PairDifference(m, p)));
    match d {
        2 => {}
        3 => {
            out.push(Constraint::Total);
            out.extend((0..3).map(Constraint::TotalLessTwice));
        }
        _ => {
            out.extend((0..4).map(Constraint::TotalLess));
            out.push(Constraint::Total);
            out.extend((0..4).map(Constraint::TotalLessTwice));
            for twice in 0..4 {
                for once in 0..4 {
                    if once != twice {
                        out.push(Constraint::TotalLessOnceTwice { once, twice });
                    }
                }
            }
            out.extend(
                pairs
                    .iter()
                    .map(|&(m, p)| Constraint::TotalLessTwiceBoth(m, p)),
            );
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub constraint: Constraint,
    /// The constraint's value reduced into `[0, n)`.
    pub residue: u64,
    pub gcd: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintReport {
    pub feasible: bool,
    pub violations: Vec<Violation>,
}

impl ConstraintReport {
    pub fn violates(&self, constraint: Constraint) -> bool {
        self.violations.iter().any(|v| v.constraint == constraint)
    }
}

fn run_checks(v: &ParamVector, constraints: &[Constraint]) -> ConstraintReport {
    let n = v.order;
    let violations: Vec<Violation> = constraints
        .iter()
        .filter_map(|&constraint| {
            let residue = modarith::reduce(constraint.evaluate(&v.alphas), n);
            let g = modarith::gcd(residue, n).expect("n >= 2");
            (g != 1).then_some(Violation {
                constraint,
                residue,
                gcd: g,
            })
        })
        .collect();
    ConstraintReport {
        feasible: violations.is_empty(),
        violations,
    }
}

fn check_dim(v: &ParamVector, d: usize) -> Result<ConstraintReport> {
    if v.dimension() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: v.dimension(),
        });
    }
    check(v)
}

pub fn check_pair(v: &ParamVector) -> Result<ConstraintReport> {
    check_dim(v, 2)
}

pub fn check_triple(v: &ParamVector) -> Result<ConstraintReport> {
    check_dim(v, 3)
}

pub fn check_quad(v: &ParamVector) -> Result<ConstraintReport> {
    check_dim(v, 4)
}

/// Checks `v` against the constraint system of its own dimension.
pub fn check(v: &ParamVector) -> Result<ConstraintReport> {
    Ok(run_checks(v, &constraint_system(v.dimension())?))
}

pub fn is_feasible(v: &ParamVector) -> bool {
    check(v).map(|r| r.feasible).unwrap_or(false)
}

/// Multiplies every component by `k` mod `n`. `k` must be a unit.
pub fn scale(v: &ParamVector, k: i64) -> Result<ParamVector> {
    let n = v.order;
    if !modarith::is_coprime(k, n) {
        return Err(Error::NotInvertible { value: k, modulus: n });
    }
    let k = modarith::reduce(k, n);
    let alphas = v.alphas.iter().map(|&a| (a * k) % n).collect();
    ParamVector::new(n, alphas)
}

/// Scales `v` by the inverse of its first component, giving `<1, ..>`.
pub fn canonicalize(v: &ParamVector) -> Result<ParamVector> {
    let inv = modarith::mod_inverse(v.alphas[0] as i64, v.order)?;
    scale(v, inv.value() as i64)
}

/// All feasible vectors of dimension `d` and order `n`, in lexicographic
/// order. With `canonical_only` the first component is pinned to 1.
pub fn enumerate(d: usize, n: u64, canonical_only: bool) -> Result<Vec<ParamVector>> {
    let mut out = Vec::new();
    search(d, n, canonical_only, &mut |v| {
        out.push(v);
        true
    })?;
    Ok(out)
}

/// Smallest order `2 <= n <= n_max` admitting a feasible vector of dimension `d`.
pub fn minimal_order(d: usize, n_max: u64) -> Result<Option<u64>> {
    for n in 2..=n_max {
        let mut found = false;
        // scaling by a1^-1 preserves every gcd, so canonical vectors suffice
        search(d, n, true, &mut |_| {
            found = true;
            false
        })?;
        if found {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Depth-first lexicographic search. Prefixes are pruned on the component
/// and pairwise constraints; complete vectors get the full system. The
/// visitor returns `false` to stop early.
fn search(
    d: usize,
    n: u64,
    canonical_only: bool,
    visit: &mut dyn FnMut(ParamVector) -> bool,
) -> Result<()> {
    if !(2..=MAX_MODULUS).contains(&n) {
        return Err(Error::OrderOutOfRange {
            order: n,
            min: 2,
            max: MAX_MODULUS,
        });
    }
    let system = constraint_system(d)?;
    // constraints that become decidable once the prefix reaches length m + 1
    let staged: Vec<Vec<Constraint>> = (0..d)
        .map(|m| {
            system
                .iter()
                .copied()
                .filter(|c| c.max_index() == m)
                .collect()
        })
        .collect();
    let global: Vec<Constraint> = system
        .iter()
        .copied()
        .filter(|c| c.max_index() == usize::MAX)
        .collect();

    let mut prefix = vec![0u64; d];
    descend(
        0,
        n,
        canonical_only,
        &staged,
        &global,
        &mut prefix,
        visit,
    );
    Ok(())
}

fn descend(
    depth: usize,
    n: u64,
    canonical_only: bool,
    staged: &[Vec<Constraint>],
    global: &[Constraint],
    prefix: &mut Vec<u64>,
    visit: &mut dyn FnMut(ParamVector) -> bool,
) -> bool {
    let d = prefix.len();
    let candidates = if depth == 0 && canonical_only { 1..2 } else { 1..n };
    for a in candidates {
        prefix[depth] = a;
        let ok = staged[depth]
            .iter()
            .all(|c| modarith::is_coprime(c.evaluate(prefix), n));
        if !ok {
            continue;
        }
        if depth + 1 == d {
            if global
                .iter()
                .all(|c| modarith::is_coprime(c.evaluate(prefix), n))
            {
                let v = ParamVector {
                    order: n,
                    alphas: prefix.clone(),
                };
                if !visit(v) {
                    return false;
                }
            }
        } else if !descend(depth + 1, n, canonical_only, staged, global, prefix, visit) {
            return false;
        }
    }
    true
}
