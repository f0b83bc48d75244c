//! Dense rational matrices and exact rank.

use std::ops::Mul;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::exact::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rank(&rows)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not match");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }
}

/// Rank over Q by fraction-free (Bareiss) elimination on integer rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in rank + 1..nrows {
            let factor = a[r][col].clone();
            for c in col..ncols {
                let v = (&pivot * &a[r][c] - &factor * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
        }
        prev = pivot.abs();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    #[test]
    fn rank_small() {
        let m = Matrix::from_rows(vec![
            vec![q(1, 2), q(1, 3), q(1, 1)],
            vec![q(1, 1), q(2, 3), q(2, 1)],
            vec![q(0, 1), q(1, 1), q(5, 7)],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zeros(3, 2).rank(), 0);
    }

    #[test]
    fn hilbert_is_full_rank() {
        let n = 6;
        let rows: Vec<Vec<Rational>> =
            (0..n).map(|i| (0..n).map(|j| q(1, (i + j + 1) as i64)).collect()).collect();
        assert_eq!(rank(&rows), n);
    }
}
