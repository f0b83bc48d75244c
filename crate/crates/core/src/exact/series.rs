//! Truncated power series in `u^{-1}` over a commutative ring.

use num::{One, Zero};

use super::{ExactError, Poly, Rational};

/// Ring operations needed by [`TruncSeries`].
///
/// Some rings (endomorphism algebras) have no context-free zero or one, so
/// neutral elements are produced from an existing element.
pub trait SeriesRing: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, k: i64) -> Self;
    fn is_zero_elem(&self) -> bool;
    /// A two-sided inverse, when one exists and is easy to find.
    fn try_inverse(&self) -> Option<Self>;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

impl SeriesRing for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: i64) -> Self {
        self * &Rational::from_integer(k)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn try_inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl SeriesRing for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(k))
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.is_constant() && !self.is_zero() {
            self.coeff(0).recip().ok().map(Poly::constant)
        } else {
            None
        }
    }
}

/// `Σ_{k=0}^{N} c_k u^{-k}`, with everything past order `N` discarded.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: SeriesRing> TruncSeries<R> {
    /// Builds a series from its first `order + 1` coefficients.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs a constant term");
        TruncSeries { coeffs }
    }

    /// The constant series `c`.
    pub fn constant(c: R, order: usize) -> Self {
        let z = c.zero_like();
        let mut coeffs = vec![z; order + 1];
        coeffs[0] = c;
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `u^{-k}`.
    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_order(other);
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        let n = self.order();
        let mut out: Vec<R> = (0..=n).map(|_| self.coeffs[0].zero_like()).collect();
        for i in 0..=n {
            if self.coeffs[i].is_zero_elem() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_zero_elem() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&self.coeffs[i].times(&other.coeffs[j]));
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse up to the same order.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(ExactError::NotInvertible)?;
        let n = self.order();
        let mut out = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = inv0.zero_like();
            for i in 1..=k {
                if self.coeffs[i].is_zero_elem() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[i].times(&out[k - i]));
            }
            out.push(inv0.times(&acc).negated());
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// True when this is the constant series 1.
    pub fn is_one(&self) -> bool {
        let one = self.coeffs[0].one_like();
        self.coeffs[0] == one && self.coeffs[1..].iter().all(|c| c.is_zero_elem())
    }
}

/// `α_a(u) = 1 - (u-a)^{-2} = (u-a-1)(u-a+1)/(u-a)^2` to order `order`.
///
/// The `u^{-k}` coefficient is `-(k-1) a^{k-2}` for `k ≥ 2`.
pub fn alpha_series<R: SeriesRing>(a: &R, order: usize) -> TruncSeries<R> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = a.one_like();
    for k in 0..=order {
        match k {
            0 => coeffs.push(a.one_like()),
            1 => coeffs.push(a.zero_like()),
            _ => {
                coeffs.push(power.scaled(-(k as i64 - 1)));
                power = power.times(a);
            }
        }
    }
    TruncSeries { coeffs }
}

/// `α_y(u) / α_x(u)` to order `order`. `x` and `y` must commute.
pub fn series_ratio_alpha<R: SeriesRing>(x: &R, y: &R, order: usize) -> TruncSeries<R> {
    let ax = alpha_series(x, order);
    let ay = alpha_series(y, order);
    // The constant term of α_x is 1, so the inverse always exists.
    ay.mul(&ax.inverse().expect("alpha series has constant term 1"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn alpha_symbolic() {
        let a = Poly::t();
        let s = alpha_series(&a, 5);
        let want = ["1", "0", "-1", "-2*T", "-3*T^2", "-4*T^3"];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(s.coeff(k).to_string(), *w);
        }
        let inv = s.inverse().unwrap();
        let want = ["1", "0", "1", "2*T", "3*T^2 + 1", "4*T^3 + 4*T"];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(inv.coeff(k).to_string(), *w);
        }
    }

    #[test]
    fn alpha_at_zero() {
        let s = alpha_series(&q(0), 2);
        assert_eq!(s.coeffs(), &[q(1), q(0), q(-1)]);
    }

    #[test]
    fn ratio_small_cases() {
        assert_eq!(series_ratio_alpha(&q(1), &q(0), 3).coeffs(), &[q(1), q(0), q(0), q(2)]);
        assert!(series_ratio_alpha(&q(4), &q(4), 6).is_one());
    }

    #[test]
    fn non_invertible_constant() {
        let s = TruncSeries::from_coeffs(vec![Poly::t(), Poly::one()]);
        assert_eq!(s.inverse(), Err(ExactError::NotInvertible));
    }
}
