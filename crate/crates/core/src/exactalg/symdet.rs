use std::collections::HashMap;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Largest matrix handed to [`poly_det`]; the memo table has `2^dim` slots.
pub const MAX_POLY_DET_DIM: usize = 20;

/// Determinant of a square matrix of polynomials (row-major `entries`).
///
/// Cofactor expansion along successive rows, memoised on the set of columns
/// still available, so the cost is `O(2^dim · dim)` polynomial products
/// rather than `dim!`. No division is ever performed.
pub fn poly_det(dim: usize, nvars: usize, entries: &[Polynomial]) -> Result<Polynomial> {
    if entries.len() != dim * dim {
        return Err(Error::dim(format!(
            "{} entries for a {dim}x{dim} polynomial matrix",
            entries.len()
        )));
    }
    if dim > MAX_POLY_DET_DIM {
        return Err(Error::Size(format!(
            "symbolic determinant of size {dim} exceeds {MAX_POLY_DET_DIM}"
        )));
    }
    if let Some(p) = entries.iter().find(|p| p.nvars() != nvars) {
        return Err(Error::dim(format!(
            "entry in {} variables, expected {nvars}",
            p.nvars()
        )));
    }
    if dim == 0 {
        return Ok(Polynomial::one(nvars));
    }
    // minors[mask] = det of rows (dim - |mask|).. on the columns in mask
    let mut minors: HashMap<u32, Polynomial> = HashMap::new();
    minors.insert(0, Polynomial::one(nvars));
    for size in 1..=dim {
        let row = dim - size;
        let mut next: HashMap<u32, Polynomial> = HashMap::new();
        for &mask in minors.keys() {
            for c in 0..dim {
                let bit = 1u32 << c;
                if mask & bit != 0 || next.contains_key(&(mask | bit)) {
                    continue;
                }
                let full = mask | bit;
                next.insert(full, expand_row(row, full, dim, entries, &minors, nvars));
            }
        }
        minors = next;
    }
    Ok(minors.remove(&((1u32 << dim) - 1)).expect("full minor"))
}

fn expand_row(
    row: usize,
    mask: u32,
    dim: usize,
    entries: &[Polynomial],
    minors: &HashMap<u32, Polynomial>,
    nvars: usize,
) -> Polynomial {
    let mut acc = Polynomial::zero(nvars);
    let mut position = 0;
    for c in 0..dim {
        let bit = 1u32 << c;
        if mask & bit == 0 {
            continue;
        }
        let entry = &entries[row * dim + c];
        if !entry.is_zero() {
            let minor = &minors[&(mask & !bit)];
            if !minor.is_zero() {
                let term = entry * minor;
                acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
            }
        }
        position += 1;
    }
    acc
}
