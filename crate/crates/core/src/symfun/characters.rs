//! Irreducible characters of symmetric groups by the Murnaghan-Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::{One, Zero};

use super::partition::{partitions_of, Partition};
use super::SymfunError;

type Key = (Vec<u8>, Vec<u8>);

fn mn_cache() -> &'static Mutex<HashMap<Key, i128>> {
    static C: OnceLock<Mutex<HashMap<Key, i128>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn vector_cache() -> &'static Mutex<HashMap<Partition, Arc<Vec<i128>>>> {
    static C: OnceLock<Mutex<HashMap<Partition, Arc<Vec<i128>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn classes_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Partition>>>> {
    static C: OnceLock<Mutex<HashMap<usize, Arc<Vec<Partition>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Cycle types of `S_n` in the order used by [`char_vector`].
pub fn classes(n: usize) -> Arc<Vec<Partition>> {
    if let Some(v) = classes_cache().lock().unwrap().get(&n) {
        return v.clone();
    }
    let v = Arc::new(partitions_of(n));
    classes_cache().lock().unwrap().insert(n, v.clone());
    v
}

/// `χ^λ` at a cycle type, memoized on (shape, remaining cycles).
fn mn(shape: &[u8], cycles: &[u8]) -> i128 {
    if cycles.is_empty() {
        return if shape.is_empty() { 1 } else { 0 };
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = mn_cache().lock().unwrap().get(&key) {
        return v;
    }
    let k = cycles[0] as usize;
    let rest = &cycles[1..];
    let l = shape.len();
    // Beta numbers λ_i + (l - i), strictly decreasing.
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p as usize + l - 1 - i).collect();
    let mut total = 0i128;
    for i in 0..l {
        let b = beta[i];
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mut new_shape: Vec<u8> = nb.iter().enumerate().map(|(j, &x)| (x + j + 1 - l) as u8).collect();
        while new_shape.last() == Some(&0) {
            new_shape.pop();
        }
        let v = mn(&new_shape, rest);
        total += if between % 2 == 0 { v } else { -v };
    }
    mn_cache().lock().unwrap().insert(key, total);
    total
}

fn to_u8(p: &Partition) -> Vec<u8> {
    p.parts().iter().map(|&x| u8::try_from(x).expect("part too large")).collect()
}

/// `χ^λ(ρ)`.
pub fn char_value(lambda: &Partition, class: &Partition) -> Result<i128, SymfunError> {
    if lambda.size() != class.size() {
        return Err(SymfunError::SizeMismatch(format!("{lambda} and {class}")));
    }
    Ok(mn(&to_u8(lambda), &to_u8(class)))
}

/// `χ^λ` on every class of `S_{|λ|}`, in the order of [`classes`].
pub fn char_vector(lambda: &Partition) -> Arc<Vec<i128>> {
    if let Some(v) = vector_cache().lock().unwrap().get(lambda) {
        return v.clone();
    }
    let shape = to_u8(lambda);
    let v: Arc<Vec<i128>> = Arc::new(classes(lambda.size()).iter().map(|c| mn(&shape, &to_u8(c))).collect());
    vector_cache().lock().unwrap().insert(lambda.clone(), v.clone());
    v
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Centralizer order `z_ρ = Π i^{m_i} m_i!`.
pub fn z_class(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in rho.multiplicities().iter().enumerate() {
        z *= BigInt::from(i + 1).pow(m as u32) * factorial(m);
    }
    z
}

/// `n! / z_ρ`, the number of permutations of cycle type `ρ`.
pub fn class_size(rho: &Partition) -> BigInt {
    factorial(rho.size()) / z_class(rho)
}

/// `Σ_ρ |class ρ| · Π_k f_k(ρ)` divided by `n!`, for character vectors `f_k` of `S_n`.
pub(crate) fn average_product(n: usize, vectors: &[&[i128]]) -> BigInt {
    let cls = classes(n);
    let mut acc = BigInt::zero();
    for (idx, rho) in cls.iter().enumerate() {
        let mut prod = BigInt::one();
        for v in vectors {
            prod *= BigInt::from(v[idx]);
            if prod.is_zero() {
                break;
            }
        }
        if !prod.is_zero() {
            acc += prod * class_size(rho);
        }
    }
    let nf = factorial(n);
    assert!((&acc % &nf).is_zero(), "character average is not an integer");
    acc / nf
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(char_value(&p("(2,1)"), &p("(3)")).unwrap(), -1);
        assert_eq!(char_value(&p("(2,1)"), &p("(1,1,1)")).unwrap(), 2);
        assert_eq!(char_value(&p("(3,2)"), &p("(1,1,1,1,1)")).unwrap(), 5);
        assert_eq!(char_value(&p("(1,1,1)"), &p("(2,1)")).unwrap(), -1);
        assert!(char_value(&p("(2)"), &p("(1)")).is_err());
    }

    #[test]
    fn column_orthogonality_row_norms() {
        for n in 0..=6 {
            for l in partitions_of(n) {
                let v = char_vector(&l);
                assert_eq!(average_product(n, &[&v, &v]), BigInt::one());
            }
        }
    }
}
