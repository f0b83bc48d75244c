//! Littlewood-Richardson, Kronecker and reduced Kronecker coefficients.

use num::bigint::BigInt;
use num::{ToPrimitive, Zero};

use super::characters::{char_value, char_vector, classes, factorial, z_class, average_product};
use super::partition::{partitions_of, Partition};
use super::SymfunError;

fn to_u64(x: BigInt) -> u64 {
    x.to_u64().expect("coefficient is a nonnegative machine integer")
}

/// `LR^λ_{μ,ν}`, the coefficient of `s_λ` in `s_μ s_ν`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let (a, b) = (mu.size(), nu.size());
    if lambda.size() != a + b {
        return 0;
    }
    if a == 0 {
        return u64::from(lambda == nu);
    }
    if b == 0 {
        return u64::from(lambda == mu);
    }
    let (cm, cn) = (char_vector(mu), char_vector(nu));
    let (ka, kb) = (classes(a), classes(b));
    let scale = factorial(a) * factorial(b);
    let mut acc = BigInt::zero();
    for (i, r1) in ka.iter().enumerate() {
        if cm[i] == 0 {
            continue;
        }
        for (j, r2) in kb.iter().enumerate() {
            if cn[j] == 0 {
                continue;
            }
            let mut parts = r1.parts().to_vec();
            parts.extend(r2.parts());
            let joint = Partition::from_unsorted(parts);
            let cl = char_value(lambda, &joint).expect("sizes agree");
            if cl == 0 {
                continue;
            }
            let w = &scale / (z_class(r1) * z_class(r2));
            acc += BigInt::from(cl) * BigInt::from(cm[i]) * BigInt::from(cn[j]) * w;
        }
    }
    assert!((&acc % &scale).is_zero());
    to_u64(acc / scale)
}

/// Coefficient of `s_κ` in `s_λ s_μ s_ν`.
pub fn lr_triple(kappa: &Partition, lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let g = lambda.size() + mu.size();
    if kappa.size() != g + nu.size() {
        return 0;
    }
    partitions_of(g)
        .iter()
        .map(|gamma| {
            let a = lr_coeff(gamma, lambda, mu);
            if a == 0 {
                0
            } else {
                a * lr_coeff(kappa, gamma, nu)
            }
        })
        .sum()
}

/// `G^λ_{μ,ν}`: multiplicity of `S(λ)` in `S(μ) ⊗ S(ν)`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64, SymfunError> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(SymfunError::SizeMismatch(format!("{lambda}, {mu}, {nu}")));
    }
    let (a, b, c) = (char_vector(lambda), char_vector(mu), char_vector(nu));
    Ok(to_u64(average_product(n, &[&a, &b, &c])))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReducedMethod {
    Stabilize,
    Littlewood,
}

/// `Ḡ^λ_{μ,ν}`.
pub fn reduced_kronecker(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    method: ReducedMethod,
) -> Result<u64, SymfunError> {
    match method {
        ReducedMethod::Stabilize => stabilize(lambda, mu, nu),
        ReducedMethod::Littlewood => Ok(littlewood(lambda, mu, nu)),
    }
}

fn stabilize(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64, SymfunError> {
    let n0 = lambda.size() + mu.size() + nu.size() + lambda.part(1) + mu.part(1) + nu.part(1);
    let at = |n: usize| -> u64 {
        let pad = |p: &Partition| p.padded(n).expect("n is large enough to pad");
        kronecker(&pad(lambda), &pad(mu), &pad(nu)).expect("equal sizes")
    };
    let (a, b) = (at(n0), at(n0 + 1));
    if a != b {
        return Err(SymfunError::Unstable(format!("{lambda}, {mu}, {nu}: {a} at {n0}, {b} at {}", n0 + 1)));
    }
    Ok(a)
}

fn littlewood(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let (l, m, n) = (lambda.size() as i64, mu.size() as i64, nu.size() as i64);
    let mut total = 0u64;
    for d in 0..=l.min(m).min(n) {
        let (a2, b2, c2) = (m + n - l - d, l + n - m - d, l + m - n - d);
        if a2 < 0 || b2 < 0 || c2 < 0 || a2 % 2 != 0 || b2 % 2 != 0 || c2 % 2 != 0 {
            continue;
        }
        let (a, b, c, d) = ((a2 / 2) as usize, (b2 / 2) as usize, (c2 / 2) as usize, d as usize);
        let pd = partitions_of(d);
        for alpha in partitions_of(a) {
            for beta in partitions_of(b) {
                for gamma in partitions_of(c) {
                    for delta in &pd {
                        let x = lr_triple(lambda, &beta, &gamma, delta);
                        if x == 0 {
                            continue;
                        }
                        for d1 in &pd {
                            let y = lr_triple(mu, &alpha, &gamma, d1);
                            if y == 0 {
                                continue;
                            }
                            for d2 in &pd {
                                let z = lr_triple(nu, &alpha, &beta, d2);
                                if z == 0 {
                                    continue;
                                }
                                total += x * y * z * kronecker(delta, d1, d2).expect("equal sizes");
                            }
                        }
                    }
                }
            }
        }
    }
    total
}
