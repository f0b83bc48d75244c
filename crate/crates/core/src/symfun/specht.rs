//! Specht modules in Young's seminormal form over Q.

use std::collections::HashMap;

use num::{One, Zero};

use super::partition::Partition;
use crate::exact::Rational;
use crate::linalg::Matrix;
use crate::perm::Permutation;

/// A standard tableau as the (row, col) of each entry `1..n`.
pub type Tableau = Vec<(usize, usize)>;

/// All standard tableaux of shape `λ`, sorted by the row sequence of entries
/// `1..n`, so the row-reading tableau comes first.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.size();
    let mut out = Vec::new();
    let mut filled = vec![0usize; lambda.len()];
    let mut cur = Vec::with_capacity(n);
    fn rec(lambda: &Partition, filled: &mut [usize], cur: &mut Tableau, out: &mut Vec<Tableau>) {
        if cur.len() == lambda.size() {
            out.push(cur.clone());
            return;
        }
        for r in 0..filled.len() {
            let c = filled[r];
            if c < lambda.parts()[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                cur.push((r, c));
                rec(lambda, filled, cur, out);
                cur.pop();
                filled[r] -= 1;
            }
        }
    }
    rec(lambda, &mut filled, &mut cur, &mut out);
    out
}

pub fn specht_dim(lambda: &Partition) -> usize {
    standard_tableaux(lambda).len()
}

fn content(t: &Tableau, k: usize) -> i64 {
    let (r, c) = t[k];
    c as i64 - r as i64
}

#[derive(Clone, Debug)]
pub struct SeminormalRep {
    lambda: Partition,
    basis: Vec<Tableau>,
    gens: Vec<Matrix>,
    weights: Vec<Rational>,
}

impl SeminormalRep {
    pub fn new(lambda: &Partition) -> Self {
        let basis = standard_tableaux(lambda);
        let n = lambda.size();
        let dim = basis.len();
        let index: HashMap<&Tableau, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        // Edges (T, U = s_i T, r_T) with r_T > 0, for the form weights.
        let mut edges: Vec<(usize, usize, i64)> = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut g = Matrix::zeros(dim, dim);
            for (col, t) in basis.iter().enumerate() {
                let r = content(t, i + 1) - content(t, i);
                let rr = Rational::from_integer(r);
                g.set(col, col, rr.recip().expect("adjacent contents differ"));
                let mut u = t.clone();
                u.swap(i, i + 1);
                if let Some(&row) = index.get(&u) {
                    let off = if r > 0 { Rational::one() } else { Rational::one() - (&rr * &rr).recip().unwrap() };
                    g.set(row, col, off);
                    if r > 0 {
                        edges.push((col, row, r));
                    }
                }
            }
            gens.push(g);
        }
        let mut weights: Vec<Option<Rational>> = vec![None; dim];
        if dim > 0 {
            weights[0] = Some(Rational::one());
        }
        let mut changed = true;
        while changed {
            changed = false;
            for &(a, b, r) in &edges {
                let f = Rational::one() - Rational::new(1, r * r).unwrap();
                match (&weights[a], &weights[b]) {
                    (Some(wa), None) => {
                        weights[b] = Some(wa * &f);
                        changed = true;
                    }
                    (None, Some(wb)) => {
                        weights[a] = Some(wb / &f);
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        let weights = weights.into_iter().map(|w| w.expect("tableau graph is connected")).collect();
        SeminormalRep { lambda: lambda.clone(), basis, gens, weights }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    /// Matrix of `s_i` for 1-based `i`.
    pub fn generator(&self, i: usize) -> &Matrix {
        &self.gens[i - 1]
    }

    /// Diagonal of the invariant form; the row-reading tableau has weight 1.
    pub fn form_weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Content of entry `j` (1-based) in basis tableau `idx`.
    pub fn content_of(&self, idx: usize, j: usize) -> i64 {
        content(&self.basis[idx], j - 1)
    }

    /// The matrix of an arbitrary permutation.
    pub fn matrix_of(&self, g: &Permutation) -> Matrix {
        assert_eq!(g.degree(), self.lambda.size());
        let mut acc = Matrix::identity(self.dim());
        for k in g.reduced_word() {
            acc = &acc * self.generator(k);
        }
        acc
    }

    /// Matrices of every element of `S_n`.
    pub fn all_matrices(&self) -> HashMap<Permutation, Matrix> {
        Permutation::all(self.lambda.size()).into_iter().map(|g| {
            let m = self.matrix_of(&g);
            (g, m)
        }).collect()
    }

    /// Trace of `g`, for cross-checking characters.
    pub fn trace(&self, g: &Permutation) -> Rational {
        let m = self.matrix_of(g);
        (0..self.dim()).map(|i| m.get(i, i).clone()).fold(Rational::zero(), |a, b| a + b)
    }
}

pub fn specht_rep(lambda: &Partition) -> SeminormalRep {
    SeminormalRep::new(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dims() {
        assert_eq!(specht_dim(&p("(4)")), 1);
        assert_eq!(specht_dim(&p("(2,1)")), 2);
        assert_eq!(specht_dim(&p("(3,2)")), 5);
        assert_eq!(specht_dim(&p("()")), 1);
    }

    #[test]
    fn sign_rep() {
        let r = specht_rep(&p("(1,1,1)"));
        for i in 1..3 {
            assert_eq!(r.generator(i), &Matrix::identity(1).scale(&Rational::from(-1)));
        }
    }

    #[test]
    fn trace_matches_character() {
        let r = specht_rep(&p("(2,1)"));
        let c = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(r.trace(&c), Rational::from(-1));
    }
}
