//! Recovering an element of `Hom(n, m)` over `Q[T]` from its matrices.

use std::collections::HashMap;

use num::Zero;
use thiserror::Error;

use super::element::AlgebraElement;
use crate::diagram::{enumerate_diagrams, PartitionDiagram};
use crate::exact::{Poly, Rational};
use crate::schurweyl::SparseMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpolationError {
    #[error("t = {0} is below m + n")]
    TooSmall(usize),
    #[error("matrix at t = {0} is not a combination of diagram matrices")]
    Inconsistent(usize),
    #[error("matrix at t = {0} has the wrong shape")]
    Shape(usize),
    #[error("degree bound exceeded: {0} sample points do not determine the coefficients")]
    DegreeBoundExceeded(usize),
}

fn refines(fine: &[u8], coarse: &[u8]) -> bool {
    let mut map: HashMap<u8, u8> = HashMap::new();
    fine.iter().zip(coarse).all(|(f, c)| *map.entry(*f).or_insert(*c) == *c)
}

fn pattern(labels: &[usize]) -> Vec<u8> {
    let mut seen: Vec<(usize, u8)> = Vec::new();
    labels
        .iter()
        .map(|&l| match seen.iter().find(|(x, _)| *x == l) {
            Some((_, k)) => *k,
            None => {
                let k = seen.len() as u8;
                seen.push((l, k));
                k
            }
        })
        .collect()
}

/// Diagram-basis coefficients of the matrix `mat` at a single `t ≥ m + n`.
fn coefficients_at(
    diagrams: &[PartitionDiagram],
    mat: &SparseMatrix,
    m: usize,
    n: usize,
    t: usize,
) -> Result<Vec<Rational>, InterpolationError> {
    let (rows, cols) = (t.pow(m as u32), t.pow(n as u32));
    if mat.rows() != rows || mat.cols() != cols {
        return Err(InterpolationError::Shape(t));
    }
    // Orbit-basis coefficient: the entry at a labelling whose equality pattern is exactly d.
    let index: HashMap<&[u8], usize> =
        diagrams.iter().enumerate().map(|(i, d)| (d.labels(), i)).collect();
    let orbit: Vec<Rational> = diagrams
        .iter()
        .map(|d| {
            let lab = d.labels();
            let col = (0..n).rev().fold(0, |acc, i| acc * t + lab[i] as usize);
            let row = (0..m).rev().fold(0, |acc, j| acc * t + lab[n + j] as usize);
            mat.get(row, col)
        })
        .collect();
    // Every entry must equal the orbit coefficient of its pattern.
    let mut labels = vec![0usize; m + n];
    for idx in 0..rows * cols {
        let (row, col) = (idx / cols, idx % cols);
        let (mut c, mut r) = (col, row);
        for l in labels.iter_mut().take(n) {
            *l = c % t;
            c /= t;
        }
        for l in labels.iter_mut().skip(n) {
            *l = r % t;
            r /= t;
        }
        let p = pattern(&labels);
        if mat.get(row, col) != orbit[index[p.as_slice()]] {
            return Err(InterpolationError::Inconsistent(t));
        }
    }
    // Diagram matrices are sums of orbit matrices over coarser patterns, so
    // solve from the finest patterns down.
    let mut order: Vec<usize> = (0..diagrams.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(diagrams[i].num_blocks()));
    let mut coeff = vec![Rational::zero(); diagrams.len()];
    for (pos, &i) in order.iter().enumerate() {
        let mut c = orbit[i].clone();
        for &j in &order[..pos] {
            if diagrams[j].num_blocks() > diagrams[i].num_blocks()
                && !coeff[j].is_zero()
                && refines(diagrams[j].labels(), diagrams[i].labels())
            {
                c -= &coeff[j];
            }
        }
        coeff[i] = c;
    }
    Ok(coeff)
}

/// Reconstructs the unique element whose `ψ_t`-matrix is `oracle(t)` for each
/// `t` in `t_list`, with coefficients interpolated in `T`.
///
/// The degree bound starts at 1 and doubles; each candidate must reproduce
/// two further sample points before it is accepted.
pub fn interpolate_element(
    oracle: impl Fn(usize) -> SparseMatrix,
    m: usize,
    n: usize,
    t_list: &[usize],
) -> Result<AlgebraElement<Poly>, InterpolationError> {
    if let Some(&t) = t_list.iter().find(|&&t| t < m + n) {
        return Err(InterpolationError::TooSmall(t));
    }
    let diagrams = enumerate_diagrams(m, n);
    let mut samples: Vec<(Rational, Vec<Rational>)> = Vec::new();
    for &t in t_list {
        samples.push((Rational::from(t), coefficients_at(&diagrams, &oracle(t), m, n, t)?));
    }
    let mut degree = 1;
    loop {
        if degree + 3 > samples.len() {
            return Err(InterpolationError::DegreeBoundExceeded(samples.len()));
        }
        let (fit, check) = samples.split_at(degree + 1);
        let polys: Vec<Poly> = (0..diagrams.len())
            .map(|k| {
                let pts: Vec<(Rational, Rational)> =
                    fit.iter().map(|(t, c)| (t.clone(), c[k].clone())).collect();
                Poly::lagrange(&pts).expect("distinct sample points")
            })
            .collect();
        let ok = check[..2]
            .iter()
            .all(|(t, c)| polys.iter().zip(c).all(|(p, v)| p.eval(t) == *v));
        if ok {
            let terms = diagrams.into_iter().zip(polys);
            return Ok(AlgebraElement::from_terms(m, n, terms).expect("arities match"));
        }
        degree *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schurweyl::{jm_matrix_oracle, OracleKind};

    #[test]
    fn scalar_t() {
        let got = interpolate_element(|t| SparseMatrix::identity(t).scale(&Rational::from(t)), 1, 1, &[2, 3, 4, 5]).unwrap();
        assert_eq!(got, AlgebraElement::scalar(1, Poly::t()));
    }

    #[test]
    fn leafleaf_from_matrices() {
        let got =
            interpolate_element(|t| jm_matrix_oracle(1, 1, t, OracleKind::LeftDot), 1, 1, &[2, 3, 4, 5]).unwrap();
        assert_eq!(got.to_string(), "1 x 1 : {1}{1'} * 1");
    }

    #[test]
    fn errors() {
        assert_eq!(
            interpolate_element(SparseMatrix::identity, 1, 1, &[1, 2, 3]),
            Err(InterpolationError::TooSmall(1))
        );
        assert_eq!(
            interpolate_element(SparseMatrix::identity, 1, 1, &[2, 3]),
            Err(InterpolationError::DegreeBoundExceeded(2))
        );
        let mut bad = SparseMatrix::zeros(16, 16);
        bad.add_at(0, 1, &Rational::from(1));
        assert_eq!(interpolate_element(|_| bad.clone(), 2, 2, &[4]), Err(InterpolationError::Inconsistent(4)));
    }
}
