use std::collections::BTreeMap;
use std::fmt;


use super::element::{AlgebraElement, Coeff};
use crate::perm::Permutation;

/// An element of the group algebra of `S_n`.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebraElement<R> {
    n: usize,
    terms: BTreeMap<Permutation, R>,
}

impl<R: Coeff> GroupAlgebraElement<R> {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, R)>) -> Self {
        let mut out = GroupAlgebraElement::zero(n);
        for (w, c) in terms {
            assert_eq!(w.degree(), n);
            out.add_term(w, c);
        }
        out
    }

    pub fn scalar(n: usize, c: R) -> Self {
        GroupAlgebraElement::from_terms(n, [(Permutation::identity(n), c)])
    }

    fn add_term(&mut self, w: Permutation, c: R) {
        let s = match self.terms.remove(&w) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(w, s);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, R> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Coeff> fmt::Display for GroupAlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let c = c.to_string();
                if c.contains(' ') {
                    format!("{w} * ({c})")
                } else {
                    format!("{w} * {c}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Keeps the permutation-diagram terms of an endomorphism and drops the rest.
pub fn hc_project<R: Coeff>(f: &AlgebraElement<R>) -> GroupAlgebraElement<R> {
    assert_eq!(f.m(), f.n(), "Harish-Chandra projection of a non-square element");
    GroupAlgebraElement::from_terms(
        f.n(),
        f.terms().iter().filter_map(|(d, c)| d.to_permutation().map(|w| (w, c.clone()))),
    )
}

/// `Σ_{i<j} (i j)` in the group algebra of `S_n`.
pub fn jucys_murphy<R: Coeff>(n: usize, j: usize) -> GroupAlgebraElement<R> {
    GroupAlgebraElement::from_terms(n, (1..j).map(|i| (Permutation::transposition(n, i, j), R::one())))
}
