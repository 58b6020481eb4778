#![allow(dead_code)]

use std::path::PathBuf;

use pandiag_core::{LatinArray, MagicArray, ParamVector};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Whitespace-separated rows of a figure fixture.
pub fn fixture_rows(name: &str) -> Vec<Vec<u64>> {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect()
}

pub fn latin_fixture(name: &str) -> LatinArray {
    let rows: Vec<Vec<u32>> = fixture_rows(name)
        .into_iter()
        .map(|r| r.into_iter().map(|v| v as u32).collect())
        .collect();
    LatinArray::from_rows(&rows).unwrap()
}

pub fn magic_fixture(name: &str) -> MagicArray {
    MagicArray::from_rows(&fixture_rows(name)).unwrap()
}

pub fn pv(n: u64, alphas: &[u64]) -> ParamVector {
    ParamVector::new(n, alphas.to_vec()).unwrap()
}

/// Every vector in `{1..n-1}^d`, lexicographic.
pub fn all_vectors(d: usize, n: u64) -> Vec<ParamVector> {
    let total = (n - 1).pow(d as u32);
    (0..total)
        .map(|mut code| {
            let mut alphas = vec![0; d];
            for slot in alphas.iter_mut().rev() {
                *slot = code % (n - 1) + 1;
                code /= n - 1;
            }
            ParamVector::new(n, alphas).unwrap()
        })
        .collect()
}
