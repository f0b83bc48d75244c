//! Permutations of `{1..n}` stored as image lists.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation `w` with `images[i] = w(i+1) - 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` (0-based) is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// The transposition of `a` and `b` (1-based) in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for 0-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &w) in self.images.iter().enumerate() {
            inv[w] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &w)| i == w)
    }

    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A word `[k_1, .., k_r]` (1-based) with `self = s_{k_1} ∘ … ∘ s_{k_r}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut word = Vec::new();
        // Peel adjacent transpositions off the right: w = w' ∘ s_i whenever w(i) > w(i+1).
        loop {
            match (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
                Some(i) => {
                    w.swap(i, i + 1);
                    word.push(i + 1);
                }
                None => break,
            }
        }
        word.reverse();
        word
    }

    /// All permutations of `n` letters in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { images: cur.clone() });
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Cycle lengths sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for s in 0..self.degree() {
            if seen[s] || self.images[s] == s {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.images[i];
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
