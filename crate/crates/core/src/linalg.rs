//! Dense matrices over exact rationals with Gaussian elimination.
//!
//! Entries are ratios of 64-bit integers with every operation checked;
//! an overflow aborts instead of rounding or wrapping, so results are
//! exact whenever they are produced at all.

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

pub type Scalar = Ratio<i64>;

fn add(a: &Scalar, b: &Scalar) -> Scalar {
    a.checked_add(b)
        .expect("rational overflow in matrix arithmetic")
}

fn sub(a: &Scalar, b: &Scalar) -> Scalar {
    a.checked_sub(b)
        .expect("rational overflow in matrix arithmetic")
}

fn mul(a: &Scalar, b: &Scalar) -> Scalar {
    a.checked_mul(b)
        .expect("rational overflow in matrix arithmetic")
}

fn div(a: &Scalar, b: &Scalar) -> Scalar {
    a.checked_div(b)
        .expect("division failure in matrix arithmetic")
}


#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn set_one(&mut self, r: usize, c: usize) {
        self.set(r, c, Scalar::one());
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_mat(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.at(r, k);
                if lhs.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let rhs = other.at(k, c);
                    if rhs.is_zero() {
                        continue;
                    }
                    let v = add(out.at(r, c), &mul(lhs, rhs));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Rank by forward elimination. The pivot for each column is the first
    /// row with a nonzero entry, scanning downward.
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let pivot_row = (rank..self.rows).find(|&r| !self.at(r, col).is_zero());
            let Some(pivot_row) = pivot_row else {
                continue;
            };
            if pivot_row != rank {
                for c in 0..self.cols {
                    self.data
                        .swap(pivot_row * self.cols + c, rank * self.cols + c);
                }
            }
            let pivot = *self.at(rank, col);
            for r in rank + 1..self.rows {
                let factor = *self.at(r, col);
                if factor.is_zero() {
                    continue;
                }
                let scale = div(&factor, &pivot);
                for c in col..self.cols {
                    let v = sub(self.at(r, c), &mul(&scale, self.at(rank, c)));
                    self.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Dimension of the kernel: columns minus rank.
    pub fn nullity(self) -> usize {
        let cols = self.cols;
        cols - self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[i64]]) -> RatMatrix {
        let mut m = RatMatrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, Scalar::from_integer(v));
            }
        }
        m
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(from_rows(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(from_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(from_rows(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(from_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
    }

    #[test]
    fn nullity_counts_free_columns() {
        assert_eq!(
            from_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).nullity(),
            1
        );
        assert_eq!(RatMatrix::zeros(3, 4).nullity(), 4);
        assert_eq!(RatMatrix::zeros(0, 4).nullity(), 4);
    }

    #[test]
    fn product_and_nilpotence() {
        let shift = from_rows(&[&[0, 1], &[0, 0]]);
        let square = shift.mul_mat(&shift);
        assert!(square.is_zero());
    }

    #[test]
    fn elimination_is_exact() {
        // A matrix whose elimination passes through non-integer entries.
        let m = from_rows(&[&[2, 3, 5], &[7, 11, 13], &[1, 1, 1]]);
        assert_eq!(m.rank(), 3);
    }
}
