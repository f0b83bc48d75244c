//! Univariate polynomials over Q in the loop parameter `T`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Zero};

use super::{ExactError, Rational};

/// A polynomial in `T` with rational coefficients; `coeffs[k]` multiplies `T^k`.
/// Trailing zeros are always trimmed so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(Rational::from_integer(c))
    }

    /// The generator `T`.
    pub fn t() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * T^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Poly::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * t + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Division, permitted only by a nonzero constant.
    pub fn checked_div(&self, other: &Poly) -> Result<Poly, ExactError> {
        match other.coeffs.len() {
            0 => Err(ExactError::DivisionByZero),
            1 => Ok(self.scale(&other.coeffs[0].recip()?)),
            _ => Err(ExactError::NonConstantDivisor(other.to_string())),
        }
    }

    /// The unique polynomial of degree below `points.len()` through the given points.
    pub fn lagrange(points: &[(Rational, Rational)]) -> Result<Poly, ExactError> {
        let mut out = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = &basis * &Poly::from_coeffs(vec![-xj, Rational::one()]);
                denom = denom * (xi - xj);
            }
            out = out + basis.scale(&yi.checked_div(&denom)?);
        }
        Ok(out)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::from_int(1)
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(k).cloned().unwrap_or_else(Rational::zero);
        out.push(if negate_b { x - y } else { x + y });
    }
    Poly::from_coeffs(out)
}

fn mul_coeffs(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Poly::zero();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    Poly::from_coeffs(out)
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl<'a, 'b> $tr<&'b Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: &'b Poly) -> Poly {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
    };
}

poly_binop!(Add, add, |a, b| add_coeffs(a, b, false));
poly_binop!(Sub, sub, |a, b| add_coeffs(a, b, true));
poly_binop!(Mul, mul, mul_coeffs);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -(self.clone())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{a}*{var}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = ExactError;

    /// Accepts sums of terms like `3/2*T^2`, `-T`, `2T`, `1`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::Parse(format!("not a polynomial: {s:?}"));
        let mut body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        while body.starts_with('(') && body.ends_with(')') {
            body = body[1..body.len() - 1].to_string();
        }
        if body.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in body.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && i == 0 {
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        let mut out = Poly::zero();
        for (neg, term) in terms {
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, deg) = match term.find(['T', 't']) {
                None => (term.parse::<Rational>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let c = term[..pos].trim_end_matches('*');
                    let coef = if c.is_empty() {
                        Rational::one()
                    } else {
                        c.parse::<Rational>().map_err(|_| bad())?
                    };
                    let rest = &term[pos + 1..];
                    let deg = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|d| d.parse::<usize>().ok())
                            .ok_or_else(bad)?
                    };
                    (coef, deg)
                }
            };
            let coef = if neg { -coef } else { coef };
            out = out + Poly::monomial(coef, deg);
        }
        Ok(out)
    }
}
