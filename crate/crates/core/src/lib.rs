//! Pandiagonal latin squares, cubes and 4-D hypercubes built from linear
//! forms `sum(a_m * x_m) mod n`, a brute-force verifier that knows nothing
//! about the construction, orthogonality tests, and magic arrays composed
//! from orthogonal families.
//!
//! ```
//! use pandiag_core::{compose_checked, verify_magic_pandiagonal, ParamVector};
//!
//! let family = [
//!     ParamVector::new(5, vec![1, 2]).unwrap(),
//!     ParamVector::new(5, vec![1, 3]).unwrap(),
//! ];
//! let square = compose_checked(&family, None).unwrap();
//! let report = verify_magic_pandiagonal(&square);
//! assert!(report.passed);
//! assert_eq!(report.magic_sum, Some(60));
//! ```

pub mod error;
pub mod lattice;
pub mod magic;
pub mod modarith;
pub mod orthogonal;
pub mod params;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{
    build, permute_symbols, shift_axis, slice, AxisConstraint, LatinArray, Shape, SliceSpec,
    SymbolPermutation, View,
};
pub use magic::{compose, compose_checked, count_constructed, sigma, ConstructionCount, MagicArray};
pub use modarith::{gcd, mod_inverse, Residue};
pub use orthogonal::{check_orthogonal_fast, determinant_mod, verify_orthogonal_brute, ParamMatrix};
pub use params::{
    canonicalize, check, check_pair, check_quad, check_triple, enumerate, minimal_order, scale,
    Constraint, ConstraintReport, ParamVector,
};
pub use verify::{
    enumerate_lines, enumerate_squares, verify_latin_pandiagonal, verify_magic_pandiagonal, Grade,
    Line, LineKind, Property, VerificationReport,
};
