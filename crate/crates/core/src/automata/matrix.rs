use std::collections::BTreeSet;
use std::fmt;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fuzzy_set::FuzzyStateSet;

/// A square fuzzy matrix whose rows and columns follow the declared state order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TransitionMatrix {
    n: usize,
    entries: Vec<Degree>,
}

impl TransitionMatrix {
    pub fn zero(n: usize) -> Self {
        TransitionMatrix {
            n,
            entries: vec![Degree::ZERO; n * n],
        }
    }

    /// `M_ε`: ones on the diagonal.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, Degree::ONE);
        }
        m
    }

    /// Row-major construction; fails unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Degree>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(TransitionMatrix { n, entries })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Degree {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, r: Degree) {
        self.entries[i * self.n + j] = r;
    }

    pub fn row(&self, i: usize) -> &[Degree] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Row `i` as the fuzzy set `F_{a_i,w}`.
    pub fn row_set(&self, i: usize) -> FuzzyStateSet {
        FuzzyStateSet::from_pairs(self.n, self.row(i).iter().copied().enumerate())
    }

    /// Distinct entry values, zero included.
    pub fn values(&self) -> BTreeSet<Degree> {
        self.entries.iter().copied().collect()
    }

    /// Max-min product; callers guarantee equal dimensions.
    pub(crate) fn product_unchecked(&self, other: &TransitionMatrix) -> TransitionMatrix {
        let n = self.n;
        let mut out = TransitionMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let r = self.get(i, k);
                if r.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = r.meet(other.get(k, j));
                    let slot = &mut out.entries[i * n + j];
                    if t > *slot {
                        *slot = t;
                    }
                }
            }
        }
        out
    }

    /// Every row of the matrix is the same fuzzy set.
    pub fn rows_identical(&self) -> bool {
        (1..self.n).all(|i| self.row(i) == self.row(0))
    }

    /// Some column holds one positive value in every row and all other entries are 0.
    pub fn is_single_column_constant(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let Some(j) = self.row(0).iter().position(Degree::is_positive) else {
            return false;
        };
        let r = self.get(0, j);
        (0..self.n).all(|i| {
            self.row(i)
                .iter()
                .enumerate()
                .all(|(k, &v)| if k == j { v == r } else { v.is_zero() })
        })
    }

    /// Some column is, in every row, a positive maximum of that row.
    pub fn has_common_max_column(&self) -> bool {
        let maxima: Vec<Degree> = (0..self.n)
            .map(|i| self.row(i).iter().copied().max().unwrap_or(Degree::ZERO))
            .collect();
        (0..self.n).any(|j| {
            (0..self.n).all(|i| {
                let v = self.get(i, j);
                v.is_positive() && v == maxima[i]
            })
        })
    }
}

/// Max-min product `t_ij = max_k (r_ik ∧ s_kj)`.
pub fn matrix_product(left: &TransitionMatrix, right: &TransitionMatrix) -> Result<TransitionMatrix> {
    if left.n != right.n {
        return Err(Error::DimensionMismatch {
            left: left.n,
            right: right.n,
        });
    }
    Ok(left.product_unchecked(right))
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(Degree::to_string).collect();
            f.write_str(&row.join(" "))?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
