//! Shared fixtures for the kernel benchmarks.

use homtwist::{Matrix, Rational};

/// Deterministic pseudo-random rational matrix with small entries; a fixed
/// LCG keeps benchmark inputs identical across runs.
pub fn pseudo_random_matrix(rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) as i64
    };
    Matrix::from_fn(rows, cols, |_, _| {
        let num = next() % 9 - 4;
        let den = next() % 4 + 1;
        Rational::frac(num, den)
    })
}

/// A singular variant: the last column is the sum of the others.
pub fn pseudo_random_singular(rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut m = pseudo_random_matrix(rows, cols, seed);
    for i in 0..rows {
        let sum = (0..cols - 1).fold(Rational::zero(), |acc, j| acc + m.get(i, j));
        m.set(i, cols - 1, sum);
    }
    m
}
