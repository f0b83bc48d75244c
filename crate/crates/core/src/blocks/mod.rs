//! Block combinatorics: weights, κ-orbits, typicality and central characters.

mod branching;

pub use branching::{branch_d, branch_hood, branch_support, BranchLayers};

use std::collections::BTreeMap;

use num::{One, Zero};
use thiserror::Error;

use crate::exact::Rational;
use crate::symfun::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlocksError {
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Sorted multiset; keys are only comparable at equal window size.
pub type WeightKey = Vec<Rational>;

/// `{t - |λ|} ∪ {λ_i - i : 1 ≤ i ≤ k}`, sorted.
pub fn weight_key(lambda: &Partition, t: &Rational, k: usize) -> WeightKey {
    assert!(k >= lambda.len(), "window shorter than the partition");
    let mut out = vec![t - &Rational::from(lambda.size())];
    out.extend((1..=k).map(|i| Rational::from(lambda.part(i) as i64 - i as i64)));
    out.sort();
    out
}

pub fn same_block(lambda: &Partition, mu: &Partition, t: &Rational) -> bool {
    let k = lambda.len().max(mu.len());
    weight_key(lambda, t, k) == weight_key(mu, t, k)
}

/// `κ^{(n)} = (κ_1+1, …, κ_n+1, κ_{n+2}, κ_{n+3}, …)`.
pub fn kappa_n(kappa: &Partition, n: usize) -> Partition {
    let mut parts: Vec<usize> = (1..=n).map(|i| kappa.part(i) + 1).collect();
    parts.extend((n + 2..=kappa.len().max(n + 1)).map(|i| kappa.part(i)));
    Partition::from_unsorted(parts)
}

/// `[κ^{(0)}, …, κ^{(n_max)}]` for `κ ⊢ t`.
pub fn kappa_orbit(kappa: &Partition, t: &Rational, n_max: usize) -> Result<Vec<Partition>, BlocksError> {
    match t.to_natural() {
        Some(tn) if tn as usize == kappa.size() => Ok((0..=n_max).map(|n| kappa_n(kappa, n)).collect()),
        _ => Err(BlocksError::Precondition(format!("{kappa} is not a partition of t = {t}"))),
    }
}

/// The unique `(κ, n)` with `κ ⊢ t` and `λ = κ^{(n)}`, or `None` when `λ` is typical.
pub fn recover_kappa(lambda: &Partition, t: u64) -> Option<(Partition, usize)> {
    let size = lambda.size() as i64;
    for n in 0..=lambda.len() {
        let row = t as i64 - size + n as i64;
        if row < 0 || row < lambda.part(n + 1) as i64 {
            continue;
        }
        if n > 0 && (lambda.part(n) as i64 - 1) < row {
            continue;
        }
        let mut parts: Vec<usize> = (1..=n).map(|i| lambda.part(i) - 1).collect();
        parts.push(row as usize);
        parts.extend(lambda.parts().iter().skip(n));
        let kappa = Partition::from_unsorted(parts);
        debug_assert_eq!(kappa_n(&kappa, n), *lambda);
        return Some((kappa, n));
    }
    None
}

/// Typical exactly when `t ∉ N` or `t - |λ| = λ_i - i` for some `i ≥ 1`.
pub fn is_typical(lambda: &Partition, t: &Rational) -> bool {
    if !t.is_integer() {
        return true;
    }
    let s = t - &Rational::from(lambda.size());
    let Some(s) = s.to_i64() else { return true };
    // λ_i - i is strictly decreasing and equals -i past the length.
    (1..=lambda.len() + 1).any(|i| lambda.part(i) as i64 - i as i64 == s) || s < -(lambda.len() as i64) - 1
}

/// Scalar by which `z^{(r)}` acts on `Δ(λ)`:
/// `Σ_{boxes} c^r - Σ_{i=1}^{|λ|} (t - i + 1)^r`.
pub fn central_char_z(lambda: &Partition, r: u32, t: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in lambda.contents() {
        acc += &Rational::from(c).pow(r);
    }
    for i in 1..=lambda.size() {
        acc -= &(t - &Rational::from(i as i64 - 1)).pow(r);
    }
    acc
}

fn add_alpha(div: &mut BTreeMap<Rational, i64>, c: &Rational, sign: i64) {
    let one = Rational::one();
    for (pt, w) in [(c.clone(), 2 * sign), (c + &one, -sign), (c - &one, -sign)] {
        let e = div.entry(pt.clone()).or_insert(0);
        *e += w;
        if *e == 0 {
            div.remove(&pt);
        }
    }
}

/// Zeros and poles of `Π_i α_{cont_i}(u) / α_{t-i+1}(u)` as a divisor, where
/// `α_c` contributes `2` at `c` and `-1` at `c ± 1`.
pub fn central_char_c(lambda: &Partition, t: &Rational) -> BTreeMap<Rational, i64> {
    let mut div = BTreeMap::new();
    for c in lambda.contents() {
        add_alpha(&mut div, &Rational::from(c), 1);
    }
    for i in 1..=lambda.size() {
        add_alpha(&mut div, &(t - &Rational::from(i as i64 - 1)), -1);
    }
    div
}
