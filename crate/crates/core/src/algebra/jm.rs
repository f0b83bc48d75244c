//! Jucys-Murphy elements `x_j^L`, `x_j^R` and dotted crossings `s_k^L`,
//! `s_k^R` of `P_n(T)`, built position by position from their recurrences.
//!
//! Notation in comments: `s_j` is the crossing of strands `j, j+1`,
//! `sp_j`/`mg_j` split and merge at `j`, `e_j = sp_j mg_j`, and `(n-1)`
//! marks an element on one strand fewer.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::element::AlgebraElement;
use super::AlgebraError;
use crate::diagram::{self, PartitionDiagram};
use crate::exact::Poly;

type El = AlgebraElement<Poly>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Kind {
    DotL,
    DotR,
    CrossL,
    CrossR,
}

fn cache() -> &'static Mutex<HashMap<(Kind, usize, usize), El>> {
    static CACHE: OnceLock<Mutex<HashMap<(Kind, usize, usize), El>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn memo(kind: Kind, n: usize, j: usize, build: impl FnOnce() -> El) -> El {
    if let Some(x) = cache().lock().unwrap().get(&(kind, n, j)) {
        return x.clone();
    }
    let x = build();
    cache().lock().unwrap().insert((kind, n, j), x.clone());
    x
}

/// Single elementary layers as algebra elements.
pub mod layer {
    use super::*;

    pub fn s(n: usize, k: usize) -> El {
        El::from_diagram(diagram::crossing_layer(n, k))
    }

    /// `n → n-1`.
    pub fn merge(n: usize, k: usize) -> El {
        El::from_diagram(diagram::merge_layer(n, k))
    }

    /// `n-1 → n`.
    pub fn split(n: usize, k: usize) -> El {
        El::from_diagram(diagram::split_layer(n, k))
    }

    /// `n-1 → n`.
    pub fn leaf_up(n: usize, k: usize) -> El {
        El::from_diagram(diagram::leaf_up_layer(n, k))
    }

    /// `n → n-1`.
    pub fn leaf_down(n: usize, k: usize) -> El {
        El::from_diagram(diagram::leaf_down_layer(n, k))
    }

    /// `sp_k ∘ mg_k` on `n` strands.
    pub fn e(n: usize, k: usize) -> El {
        &split(n, k) * &merge(n, k)
    }

    /// Product of a list of composable elements, leftmost on top.
    pub fn chain(parts: &[&El]) -> El {
        let mut it = parts.iter();
        let first = (*it.next().expect("empty chain")).clone();
        it.fold(first, |acc, x| &acc * *x)
    }
}

use layer::{chain, e, merge, s, split};

fn check_dot(n: usize, j: usize) -> Result<(), AlgebraError> {
    if j == 0 || j > n {
        return Err(AlgebraError::OutOfRange(format!("dot position {j} on {n} strands")));
    }
    Ok(())
}

fn check_cross(n: usize, k: usize) -> Result<(), AlgebraError> {
    if k == 0 || k >= n {
        return Err(AlgebraError::OutOfRange(format!("crossing position {k} on {n} strands")));
    }
    Ok(())
}

/// `x_j^L` in `P_n(T)`.
pub fn jm_left(n: usize, j: usize) -> Result<El, AlgebraError> {
    check_dot(n, j)?;
    Ok(left_dot(n, j))
}

/// `x_j^R` in `P_n(T)`.
pub fn jm_right(n: usize, j: usize) -> Result<El, AlgebraError> {
    check_dot(n, j)?;
    Ok(right_dot(n, j))
}

/// `s_k^L` in `P_n(T)`.
pub fn cross_left(n: usize, k: usize) -> Result<El, AlgebraError> {
    check_cross(n, k)?;
    Ok(left_cross(n, k))
}

/// `s_k^R` in `P_n(T)`.
pub fn cross_right(n: usize, k: usize) -> Result<El, AlgebraError> {
    check_cross(n, k)?;
    Ok(right_cross(n, k))
}

fn left_dot(n: usize, j: usize) -> El {
    memo(Kind::DotL, n, j, || {
        if j == 1 {
            // Two leaves on strand 1.
            let ll: PartitionDiagram = "1 x 1 : {1}{1'}".parse().unwrap();
            return El::identity(n - 1).tensor(&El::from_diagram(ll));
        }
        let k = j - 1;
        let (sk, ek) = (s(n, k), e(n, k));
        let x = left_dot(n, k);
        // x_{k+1}^L = s x s + s^R + sp x(n-1) mg - s x e - e x s
        let mut out = chain(&[&sk, &x, &sk]);
        out = &out + &right_cross(n, k);
        out = &out + &chain(&[&split(n, k), &left_dot(n - 1, k), &merge(n, k)]);
        out = &out - &chain(&[&sk, &x, &ek]);
        &out - &chain(&[&ek, &x, &sk])
    })
}

fn right_dot(n: usize, j: usize) -> El {
    memo(Kind::DotR, n, j, || {
        if j == 1 {
            return El::scalar(n, Poly::t());
        }
        let k = j - 1;
        let (sk, ek) = (s(n, k), e(n, k));
        let xl = left_dot(n, k);
        // x_{k+1}^R = s x^R s + x^L e + e x^L - sp x^R(n-1) mg - s^L
        let mut out = chain(&[&sk, &right_dot(n, k), &sk]);
        out = &out + &(&xl * &ek);
        out = &out + &(&ek * &xl);
        out = &out - &chain(&[&split(n, k), &right_dot(n - 1, k), &merge(n, k)]);
        &out - &left_cross(n, k)
    })
}

fn right_cross(n: usize, k: usize) -> El {
    memo(Kind::CrossR, n, k, || {
        if k == 1 {
            return s(n, 1);
        }
        let i = k - 1;
        let (si, sk) = (s(n, i), s(n, k));
        let (sp, mg) = (split(n, i), merge(n, i));
        let r1 = right_cross(n - 1, i);
        let l1 = left_cross(n - 1, i);
        // s_{i+1}^R = s_i s_{i+1} s_i^R s_{i+1} s_i + s_{i+1} sp r mg s_{i+1} + sp r mg
        //           - s_{i+1} sp l mg - sp l mg s_{i+1}
        let mut out = chain(&[&si, &sk, &right_cross(n, i), &sk, &si]);
        out = &out + &chain(&[&sk, &sp, &r1, &mg, &sk]);
        out = &out + &chain(&[&sp, &r1, &mg]);
        out = &out - &chain(&[&sk, &sp, &l1, &mg]);
        &out - &chain(&[&sp, &l1, &mg, &sk])
    })
}

fn left_cross(n: usize, k: usize) -> El {
    memo(Kind::CrossL, n, k, || {
        if k == 1 {
            return El::identity(n);
        }
        &s(n, k) * &right_cross(n, k)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::{hc_project, jucys_murphy, GroupAlgebraElement};
    use crate::perm::Permutation;
    use num::One;

    #[test]
    fn base_cases() {
        assert_eq!(jm_left(1, 1).unwrap().to_string(), "1 x 1 : {1}{1'} * 1");
        assert_eq!(jm_right(1, 1).unwrap(), El::scalar(1, Poly::t()));
        assert_eq!(cross_left(2, 1).unwrap(), El::identity(2));
        assert_eq!(cross_right(2, 1).unwrap(), s(2, 1));
        assert!(jm_left(2, 3).is_err());
        assert!(cross_right(2, 2).is_err());
    }

    #[test]
    fn harish_chandra_images() {
        for n in 1..=4 {
            for j in 1..=n {
                assert_eq!(hc_project(&jm_left(n, j).unwrap()), jucys_murphy(n, j), "x_{j}^L n={n}");
                let want = Poly::t() - Poly::from_int(j as i64 - 1);
                assert_eq!(hc_project(&jm_right(n, j).unwrap()), GroupAlgebraElement::scalar(n, want));
            }
            for k in 1..n {
                assert_eq!(
                    hc_project(&cross_left(n, k).unwrap()),
                    GroupAlgebraElement::scalar(n, Poly::one())
                );
                assert_eq!(
                    hc_project(&cross_right(n, k).unwrap()),
                    GroupAlgebraElement::from_terms(n, [(Permutation::transposition(n, k, k + 1), Poly::one())])
                );
            }
        }
    }
}
