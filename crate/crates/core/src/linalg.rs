//! Exact linear algebra over the rationals.
//!
//! Everything here works on dense row-major matrices of [`BigRational`]s.
//! Matrices are desk-scale (tens of rows), so plain Gauss–Jordan elimination
//! with exact arithmetic is used throughout; there is no pivoting heuristic
//! beyond "first nonzero entry". Rank decisions are exact by construction.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Row = Vec<BigRational>;

/// Reduces `rows` in place to reduced row-echelon form with pivots normalized
/// to 1, and returns the pivot column indices (one per nonzero row, in order).
///
/// Zero rows sink to the bottom. All rows must have length `cols`.
pub fn rref(rows: &mut Vec<Row>, cols: usize) -> Vec<usize> {
    for row in rows.iter() {
        assert_eq!(row.len(), cols, "ragged matrix");
    }
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        let Some(src) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, src);
        let inv = rows[next_row][col].clone();
        for entry in rows[next_row].iter_mut() {
            *entry = &*entry / &inv;
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..cols {
                    let delta = &factor * &rows[next_row][c];
                    rows[r][c] = &rows[r][c] - delta;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    pivots
}

/// Rank of the matrix.
pub fn rank(rows: &[Row], cols: usize) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work, cols).len()
}

/// Basis of the right nullspace `{x : A x = 0}`, one vector per free column.
///
/// The basis is deterministic: derived from the RREF, ordered by free column
/// index, with the free coordinate set to 1. An empty `rows` matrix (no
/// constraints) yields the standard basis of the full space.
pub fn nullspace(rows: &[Row], cols: usize) -> Vec<Row> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work, cols);
    let mut basis = Vec::with_capacity(cols - pivots.len());
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut vec = vec![BigRational::zero(); cols];
        vec[free] = BigRational::one();
        for (row_idx, &piv) in pivots.iter().enumerate() {
            // pivot variable = -(coefficient of the free variable in its row)
            vec[piv] = -work[row_idx][free].clone();
        }
        basis.push(vec);
    }
    basis
}

/// Row space basis in RREF form (pivot-normalized, deterministic).
pub fn row_space_basis(rows: &[Row], cols: usize) -> Vec<Row> {
    let mut work = rows.to_vec();
    rref(&mut work, cols);
    work
}

/// Whether `vec` lies in the span of `basis` (rank does not grow).
pub fn in_span(basis: &[Row], vec: &Row, cols: usize) -> bool {
    let base_rank = rank(basis, cols);
    let mut extended = basis.to_vec();
    extended.push(vec.clone());
    rank(&extended, cols) == base_rank
}
