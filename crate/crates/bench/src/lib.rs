//! Inputs shared by the criterion benchmarks.

use pandiag_core::ParamVector;

fn family(n: u64, rows: &[&[u64]]) -> Vec<ParamVector> {
    rows.iter()
        .map(|r| ParamVector::new(n, r.to_vec()).expect("valid vector"))
        .collect()
}

pub fn square_family() -> Vec<ParamVector> {
    family(13, &[&[1, 2], &[1, 5]])
}

pub fn cube_family() -> Vec<ParamVector> {
    family(11, &[&[1, 2, 4], &[1, 5, 8], &[1, 6, 8]])
}

pub fn hypercube_family() -> Vec<ParamVector> {
    family(17, &[&[1, 2, 4, 8], &[1, 2, 4, 9], &[1, 2, 8, 4], &[1, 4, 9, 2]])
}
