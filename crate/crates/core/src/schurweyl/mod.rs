//! The Schur-Weyl functor into matrices on tensor powers of the permutation
//! module `U_t = Q^t`.
//!
//! A basis tensor `u_{i_n} ⊗ … ⊗ u_{i_1}` (strand 1 rightmost) with labels
//! `i_k ∈ {1..t}` has index `Σ (i_k - 1) t^{k-1}`, so strand 1 is the least
//! significant digit.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::diagram::{enumerate_diagrams, PartitionDiagram};
use crate::exact::{Poly, Rational};
use crate::linalg;
use crate::perm::Permutation;

/// Matrices on `U_t^{⊗k}` are [`SparseMatrix`] values of size `t^m x t^n`.
pub type IntMatrix = SparseMatrix;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::zeros(n, n);
        for i in 0..n {
            m.add_at(i, i, &Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        assert!(i < self.rows && j < self.cols, "entry out of range");
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for ((i, j), v) in &other.entries {
            out.add_at(*i, *j, v);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        if !c.is_zero() {
            for ((i, j), v) in &self.entries {
                out.entries.insert((*i, *j), v * c);
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not match");
        let mut by_row: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); other.rows];
        for ((k, j), v) in &other.entries {
            by_row[*k].push((*j, v));
        }
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for ((i, k), a) in &self.entries {
            for (j, b) in &by_row[*k] {
                out.add_at(*i, *j, &(a * *b));
            }
        }
        out
    }

    /// `self ⊗ other` with `other` on the low (rightmost) tensor factors.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for ((i, j), a) in &self.entries {
            for ((k, l), b) in &other.entries {
                out.add_at(i * other.rows + k, j * other.cols + l, &(a * b));
            }
        }
        out
    }

    /// `row col value` lines, 0-based indices.
    pub fn to_coordinate_text(&self) -> String {
        let mut s = String::new();
        for ((i, j), v) in &self.entries {
            writeln!(s, "{i} {j} {v}").unwrap();
        }
        s
    }
}

fn encode(labels: &[usize], t: usize) -> usize {
    labels.iter().rev().fold(0, |acc, &l| acc * t + l)
}

fn decode(mut idx: usize, len: usize, t: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(idx % t);
        idx /= t;
    }
    out
}

/// Entry is 1 exactly when the labelling of all vertices is constant on every block.
pub fn psi_diagram(d: &PartitionDiagram, t: usize) -> SparseMatrix {
    let (m, n) = (d.m(), d.n());
    let mut out = SparseMatrix::zeros(t.pow(m as u32), t.pow(n as u32));
    let b = d.num_blocks();
    if t == 0 && b > 0 {
        return out;
    }
    let one = Rational::one();
    let mut vals = vec![0usize; b];
    loop {
        let col: Vec<usize> = (0..n).map(|i| vals[d.bottom_label(i)]).collect();
        let row: Vec<usize> = (0..m).map(|j| vals[d.top_label(j)]).collect();
        out.add_at(encode(&row, t), encode(&col, t), &one);
        // Odometer over block values.
        let mut k = 0;
        while k < b {
            vals[k] += 1;
            if vals[k] < t {
                break;
            }
            vals[k] = 0;
            k += 1;
        }
        if k == b {
            break;
        }
    }
    out
}

/// `ψ_t(f)` after substituting `T = t`.
pub fn psi_element(f: &AlgebraElement<Poly>, t: usize) -> SparseMatrix {
    psi_rational(&f.specialize(&Rational::from(t)), t)
}

pub fn psi_rational(f: &AlgebraElement<Rational>, t: usize) -> SparseMatrix {
    let mut out = SparseMatrix::zeros(t.pow(f.m() as u32), t.pow(f.n() as u32));
    for (d, c) in f.terms() {
        out = out.add(&psi_diagram(d, t).scale(c));
    }
    out
}

/// Rank of the span of all `ψ_t(d)` with `d: n → m`.
pub fn hom_rank(m: usize, n: usize, t: usize) -> usize {
    let size = t.pow((m + n) as u32);
    let cols = t.pow(n as u32);
    let rows: Vec<Vec<Rational>> = enumerate_diagrams(m, n)
        .iter()
        .map(|d| {
            let mut v = vec![Rational::zero(); size];
            for ((i, j), x) in psi_diagram(d, t).entries() {
                v[i * cols + j] = x.clone();
            }
            v
        })
        .collect();
    linalg::rank(&rows)
}

/// The diagonal action of `g ∈ S_t` on `U_t^{⊗k}`.
pub fn diagonal_action(g: &Permutation, k: usize) -> SparseMatrix {
    let t = g.degree();
    let size = t.pow(k as u32);
    let mut out = SparseMatrix::zeros(size, size);
    for c in 0..size {
        let labels: Vec<usize> = decode(c, k, t).into_iter().map(|l| g.apply(l)).collect();
        out.add_at(encode(&labels, t), c, &Rational::one());
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleKind {
    LeftDot,
    RightDot,
    LeftCross,
    RightCross,
}

fn swap_label(x: usize, a: usize, b: usize) -> usize {
    if x == a {
        b
    } else if x == b {
        a
    } else {
        x
    }
}

/// Direct matrix formulas for the dotted strands and dotted crossings.
///
/// Dots and crossings at position `j` relabel the strands to their right by a
/// transposition and fix the rest.
pub fn jm_matrix_oracle(n: usize, j: usize, t: usize, kind: OracleKind) -> SparseMatrix {
    match kind {
        OracleKind::LeftDot | OracleKind::RightDot => assert!(j >= 1 && j <= n),
        _ => assert!(j >= 1 && j < n),
    }
    let size = t.pow(n as u32);
    let mut out = SparseMatrix::zeros(size, size);
    let one = Rational::one();
    for c in 0..size {
        let lab = decode(c, n, t);
        let relabel = |upto: usize, a: usize, b: usize| -> usize {
            let v: Vec<usize> =
                lab.iter().enumerate().map(|(k, &x)| if k < upto { swap_label(x, a, b) } else { x }).collect();
            encode(&v, t)
        };
        match kind {
            OracleKind::LeftDot => {
                for i in 0..t {
                    out.add_at(relabel(j, i, lab[j - 1]), c, &one);
                }
            }
            OracleKind::RightDot => {
                for i in 0..t {
                    out.add_at(relabel(j - 1, i, lab[j - 1]), c, &one);
                }
            }
            OracleKind::LeftCross => out.add_at(relabel(j - 1, lab[j - 1], lab[j]), c, &one),
            OracleKind::RightCross => out.add_at(relabel(j + 1, lab[j - 1], lab[j]), c, &one),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::merge;

    #[test]
    fn merge_matrix() {
        let m = psi_diagram(&merge(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { Rational::one() } else { Rational::zero() };
                assert_eq!(m.get(i, encode(&[i, j], 3)), want);
            }
        }
    }

    #[test]
    fn identity_and_leafleaf() {
        assert_eq!(psi_diagram(&PartitionDiagram::identity(1), 2), SparseMatrix::identity(2));
        let e: PartitionDiagram = "1 x 1 : {1}{1'}".parse().unwrap();
        assert_eq!(psi_diagram(&e, 2).entries().len(), 4);
    }

    #[test]
    fn hom_rank_examples() {
        assert_eq!(hom_rank(2, 2, 4), 15);
        assert_eq!(hom_rank(2, 2, 1), 1);
        assert_eq!(hom_rank(0, 0, 0), 1);
        assert_eq!(hom_rank(0, 0, 3), 1);
        assert_eq!(hom_rank(1, 1, 0), 0);
    }

    #[test]
    fn oracle_one_strand() {
        let l = jm_matrix_oracle(1, 1, 2, OracleKind::LeftDot);
        assert_eq!(l.entries().len(), 4);
        let r = jm_matrix_oracle(1, 1, 3, OracleKind::RightDot);
        assert_eq!(r, SparseMatrix::identity(3).scale(&Rational::from(3)));
    }
}
