//! Left-regular matrix representation of Cl(2,3), used as a brute-force
//! oracle for the geometric product and for exponentials.
//!
//! The blade product here is re-derived from scratch with a literal rewriting
//! scheme on generator label lists (adjacent swaps and metric contractions)
//! so that it shares no sign logic with the Cayley table in [`crate::algebra`].
//! This module trades speed for independence.

use crate::algebra::{Blade, Multivector, DIM};

/// A 32x32 real matrix acting on coefficient vectors, rows and columns
/// indexed by blade mask.
#[derive(Clone)]
pub struct RepMatrix {
    entries: Box<[[f64; DIM]; DIM]>,
}

impl RepMatrix {
    pub fn zeros() -> RepMatrix {
        RepMatrix { entries: Box::new([[0.0; DIM]; DIM]) }
    }

    pub fn identity() -> RepMatrix {
        let mut m = Self::zeros();
        for i in 0..DIM {
            m.entries[i][i] = 1.0;
        }
        m
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, x: f64) {
        self.entries[row][col] = x;
    }

    pub fn matmul(&self, rhs: &RepMatrix) -> RepMatrix {
        let mut out = Self::zeros();
        for i in 0..DIM {
            for k in 0..DIM {
                let a = self.entries[i][k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..DIM {
                    out.entries[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &RepMatrix) -> RepMatrix {
        let mut out = Self::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                out.entries[i][j] = self.entries[i][j] + rhs.entries[i][j];
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> RepMatrix {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for x in row.iter_mut() {
                *x *= s;
            }
        }
        out
    }

    /// Apply to a coefficient column vector.
    pub fn apply(&self, v: &[f64; DIM]) -> [f64; DIM] {
        let mut out = [0.0; DIM];
        for (slot, row) in out.iter_mut().zip(self.entries.iter()) {
            *slot = row.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
        }
        out
    }

    /// Column `col` as a multivector.
    pub fn column(&self, col: usize) -> Multivector {
        let mut m = Multivector::ZERO;
        for (row, b) in Blade::all().enumerate() {
            m.set_coeff(b, self.entries[row][col]);
        }
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0f64, |m, x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, rhs: &RepMatrix) -> f64 {
        let mut m = 0.0f64;
        for i in 0..DIM {
            for j in 0..DIM {
                m = m.max((self.entries[i][j] - rhs.entries[i][j]).abs());
            }
        }
        m
    }

    /// Max-row-sum operator norm, enough for exp scaling decisions.
    fn norm_inf(&self) -> f64 {
        self.entries
            .iter()
            .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0f64, f64::max)
    }
}

/// Blade product by literal term rewriting on generator label lists. One
/// bubble pass at a time: swap adjacent distinct labels (sign flip) or
/// contract an adjacent equal pair (metric factor), until sorted and
/// duplicate-free.
fn rewrite_blade_product(a: Blade, b: Blade) -> (f64, Blade) {
    let mut seq: Vec<u8> = a.labels().chain(b.labels()).collect();
    let mut sign = 1.0;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < seq.len() {
            if seq[i] == seq[i + 1] {
                sign *= match seq[i] {
                    0 | 5 => 1.0,
                    _ => -1.0,
                };
                seq.drain(i..i + 2);
                changed = true;
            } else if seq[i] > seq[i + 1] {
                seq.swap(i, i + 1);
                sign = -sign;
                changed = true;
                i += 1;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    (sign, Blade::from_labels(&seq).expect("rewriting yields distinct sorted labels"))
}

/// Left-regular representation: column `b` holds the coefficients of
/// `a * blade_b`. Linear in `a`; `rep(1)` is the identity.
pub fn left_rep(a: &Multivector) -> RepMatrix {
    let mut m = RepMatrix::zeros();
    for (d, coeff) in a.terms() {
        for (col, b) in Blade::all().enumerate() {
            let (s, out) = rewrite_blade_product(d, b);
            m.entries[out.mask() as usize][col] += coeff * s;
        }
    }
    m
}

/// Geometric product through the regular representation: reconstructs
/// `a b` from the scalar column of `left_rep(a) * left_rep(b)`.
pub fn oracle_gp(a: &Multivector, b: &Multivector) -> Multivector {
    left_rep(a).matmul(&left_rep(b)).column(Blade::SCALAR.mask() as usize)
}

/// Matrix exponential by scaling and squaring with a truncated series.
pub fn matrix_exp(m: &RepMatrix) -> RepMatrix {
    let norm = m.norm_inf();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = m.scale(0.5f64.powi(squarings as i32));

    let mut acc = RepMatrix::identity();
    let mut term = RepMatrix::identity();
    for n in 1..60 {
        term = term.matmul(&scaled).scale(1.0 / n as f64);
        acc = acc.add(&term);
        if term.max_abs() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        acc = acc.matmul(&acc);
    }
    acc
}
