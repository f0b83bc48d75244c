use num::Zero;

use super::DeltaWeightSpace;
use crate::exact::{Poly, Rational};
use crate::linalg::{rank, Matrix};
use crate::symfun::Partition;

/// The contravariant form on `1_m Δ(λ)` in the orbit-major basis.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub lambda: Partition,
    pub m: usize,
    pub t: Rational,
    pub matrix: Matrix,
    pub rank: usize,
}

/// For each pair of orbits, `(loops, permutation)` when `σ(rep a) ∘ rep b`
/// is a permutation; `None` otherwise.
fn pairing_pattern(space: &DeltaWeightSpace) -> Vec<Vec<Option<(usize, crate::perm::Permutation)>>> {
    let reps: Vec<_> = space.orbits().iter().map(|o| o.representative()).collect();
    let flips: Vec<_> = reps.iter().map(|r| r.flip()).collect();
    flips
        .iter()
        .map(|fa| {
            reps.iter()
                .map(|rb| {
                    let (d, loops) = fa.compose(rb).expect("arities agree");
                    d.to_permutation().map(|g| (loops, g))
                })
                .collect()
        })
        .collect()
}

pub fn gram_matrix(lambda: &Partition, m: usize, t: &Rational) -> GramMatrix {
    let space = DeltaWeightSpace::new(lambda, m, t);
    let k = space.specht_dim();
    let w = space.specht().form_weights().to_vec();
    let n = space.dim();
    let mut g = Matrix::zeros(n, n);
    for (a, row) in pairing_pattern(&space).into_iter().enumerate() {
        for (b, entry) in row.into_iter().enumerate() {
            let Some((loops, perm)) = entry else { continue };
            let s = t.pow(loops as u32);
            if s.is_zero() {
                continue;
            }
            let rho = space.specht_matrix(&perm);
            for i in 0..k {
                for j in 0..k {
                    let x = rho.get(i, j);
                    if !x.is_zero() {
                        g.set(a * k + i, b * k + j, &(&s * &w[i]) * x);
                    }
                }
            }
        }
    }
    let r = g.rank();
    GramMatrix { lambda: lambda.clone(), m, t: t.clone(), matrix: g, rank: r }
}

/// Dimension of `1_m L(λ)`.
pub fn simple_dim(lambda: &Partition, m: usize, t: &Rational) -> usize {
    gram_matrix(lambda, m, t).rank
}

/// The Gram matrix over `Q[T]`.
pub fn generic_gram_matrix(lambda: &Partition, m: usize) -> Vec<Vec<Poly>> {
    let space = DeltaWeightSpace::new(lambda, m, &Rational::zero());
    let k = space.specht_dim();
    let w = space.specht().form_weights().to_vec();
    let n = space.dim();
    let mut g = vec![vec![Poly::zero(); n]; n];
    for (a, row) in pairing_pattern(&space).into_iter().enumerate() {
        for (b, entry) in row.into_iter().enumerate() {
            let Some((loops, perm)) = entry else { continue };
            let rho = space.specht_matrix(&perm);
            for i in 0..k {
                for j in 0..k {
                    let x = rho.get(i, j);
                    if !x.is_zero() {
                        g[a * k + i][b * k + j] = Poly::monomial(&w[i] * x, loops);
                    }
                }
            }
        }
    }
    g
}

/// Rank over `Q(T)`.
///
/// Entries have degree at most `m`, so a nonvanishing `r x r` minor has
/// degree at most `r m` and cannot vanish at `r m + 1` distinct points.
pub fn generic_rank(lambda: &Partition, m: usize) -> usize {
    let g = generic_gram_matrix(lambda, m);
    let n = g.len();
    let mut best = 0;
    for k in 0..=(n * m) as i64 {
        let t = Rational::from(1_000_003 + k);
        let rows: Vec<Vec<Rational>> = g.iter().map(|r| r.iter().map(|p| p.eval(&t)).collect()).collect();
        best = best.max(rank(&rows));
        if best == n {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn small_forms() {
        let e = Partition::empty();
        let g = gram_matrix(&e, 0, &q("5"));
        assert_eq!(g.matrix, Matrix::from_rows(vec![vec![q("1")]]));
        assert_eq!(g.rank, 1);
        let g = gram_matrix(&e, 1, &q("3/2"));
        assert_eq!(g.matrix, Matrix::from_rows(vec![vec![q("3/2")]]));
        assert_eq!(simple_dim(&e, 1, &q("0")), 0);
        let one: Partition = "(1)".parse().unwrap();
        assert_eq!(gram_matrix(&one, 1, &q("7")).matrix, Matrix::from_rows(vec![vec![q("1")]]));
        assert_eq!(generic_gram_matrix(&e, 1), vec![vec![Poly::t()]]);
        assert_eq!(generic_rank(&e, 2), 2);
    }
}
