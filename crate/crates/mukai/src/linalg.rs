//! Exact linear algebra over the rationals, used for Jacobian kernels,
//! echelon normal forms of linear systems and Gram-matrix ranks.

use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Dense rational matrix in row-major storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    /// Reduced row echelon form in place, pivoting on the lowest column
    /// index in each row. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(row * self.cols + j, p * self.cols + j);
                }
            }
            let inv = self.at(row, col).recip();
            for j in col..self.cols {
                let v = self.at(row, j) * &inv;
                *self.at_mut(row, j) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for j in col..self.cols {
                    let v = self.at(r, j) - &(&factor * self.at(row, j));
                    *self.at_mut(r, j) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank_rref(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Rank by Bareiss fraction-free elimination. All intermediate values
    /// stay integral when the input is integral.
    pub fn rank_bareiss(&self) -> usize {
        let mut m = self.clone();
        let mut prev = Rational::one();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(row * m.cols + j, p * m.cols + j);
                }
            }
            let pivot = m.at(row, col).clone();
            for r in row + 1..m.rows {
                for j in col + 1..m.cols {
                    let v = (&(&pivot * m.at(r, j)) - &(m.at(r, col) * m.at(row, j))) / &prev;
                    *m.at_mut(r, j) = v;
                }
                *m.at_mut(r, col) = Rational::zero();
            }
            prev = pivot;
            rank += 1;
            row += 1;
        }
        rank
    }

    /// One exact solution `x` of `self * x = rhs`, or `None` when the
    /// system is inconsistent. Free variables are set to zero; the result
    /// is deterministic.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        debug_assert_eq!(rhs.len(), self.rows);
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = rhs[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.at(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Largest absolute value, used by tests for sanity checks.
#[allow(dead_code)]
pub(crate) fn max_abs(m: &QMatrix) -> Rational {
    m.data
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn q(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_and_ranks_agree() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank_rref(), 2);
        assert_eq!(m.rank_bareiss(), 2);
        let id = q(&[&[1, 0], &[0, 1]]);
        assert_eq!(id.rank_bareiss(), 2);
    }

    #[test]
    fn solve_picks_deterministic_solution() {
        let m = q(&[&[1, 1, 0], &[0, 0, 1]]);
        let x = m.solve(&[rat(3), rat(5)]).unwrap();
        assert_eq!(x, vec![rat(3), rat(0), rat(5)]);
        let inconsistent = q(&[&[1, 1], &[1, 1]]);
        assert!(inconsistent.solve(&[rat(1), rat(2)]).is_none());
    }
}
