use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;
use crate::diagram::PartitionDiagram;
use crate::exact::{Poly, Rational, SeriesRing};

/// Scalars an [`AlgebraElement`] may carry.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + FromStr
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl Coeff for Rational {}
impl Coeff for Poly {}

/// A finitely supported map from `m × n` diagrams to scalars.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraElement<R> {
    m: usize,
    n: usize,
    terms: BTreeMap<PartitionDiagram, R>,
}

impl<R: Coeff> AlgebraElement<R> {
    pub fn zero(m: usize, n: usize) -> Self {
        AlgebraElement { m, n, terms: BTreeMap::new() }
    }

    pub fn from_term(d: PartitionDiagram, c: R) -> Self {
        let mut e = AlgebraElement::zero(d.m(), d.n());
        if !c.is_zero() {
            e.terms.insert(d, c);
        }
        e
    }

    pub fn from_diagram(d: PartitionDiagram) -> Self {
        AlgebraElement::from_term(d, R::one())
    }

    pub fn identity(n: usize) -> Self {
        AlgebraElement::from_diagram(PartitionDiagram::identity(n))
    }

    pub fn scalar(n: usize, c: R) -> Self {
        AlgebraElement::from_term(PartitionDiagram::identity(n), c)
    }

    /// Sums terms, checking arities and dropping zeros.
    pub fn from_terms(
        m: usize,
        n: usize,
        terms: impl IntoIterator<Item = (PartitionDiagram, R)>,
    ) -> Result<Self, AlgebraError> {
        let mut e = AlgebraElement::zero(m, n);
        for (d, c) in terms {
            if d.m() != m || d.n() != n {
                return Err(AlgebraError::ArityMismatch(format!("{d} in a {m} x {n} element")));
            }
            e.add_term(d, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, d: PartitionDiagram, c: R) {
        match self.terms.remove(&d) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(d, s);
                }
            }
            None if !c.is_zero() => {
                self.terms.insert(d, c);
            }
            None => {}
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<PartitionDiagram, R> {
        &self.terms
    }

    pub fn coeff(&self, d: &PartitionDiagram) -> R {
        self.terms.get(d).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = AlgebraElement::zero(self.m, self.n);
        for (d, a) in &self.terms {
            out.add_term(d.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(AlgebraError::ArityMismatch(format!(
                "cannot add {} x {} and {} x {}",
                self.m, self.n, other.m, other.n
            )));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    /// Bilinear extension of diagram composition, each closed loop
    /// contributing a factor `loop_value`.
    pub fn compose(&self, rhs: &Self, loop_value: &R) -> Result<Self, AlgebraError> {
        if self.n != rhs.m {
            return Err(AlgebraError::ArityMismatch(format!(
                "cannot compose {} x {} after {} x {}",
                self.m, self.n, rhs.m, rhs.n
            )));
        }
        let mut powers = vec![R::one()];
        let mut acc: HashMap<PartitionDiagram, R> = HashMap::new();
        for (f, a) in &self.terms {
            for (g, b) in &rhs.terms {
                let (h, loops) = f.compose(g).expect("arities checked");
                while powers.len() <= loops {
                    let next = powers.last().unwrap().clone() * loop_value.clone();
                    powers.push(next);
                }
                let c = a.clone() * b.clone() * powers[loops].clone();
                match acc.get_mut(&h) {
                    Some(x) => *x = x.clone() + c,
                    None => {
                        acc.insert(h, c);
                    }
                }
            }
        }
        Ok(AlgebraElement {
            m: self.m,
            n: rhs.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Horizontal juxtaposition, `other` on the right.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = AlgebraElement::zero(self.m + other.m, self.n + other.n);
        for (f, a) in &self.terms {
            for (g, b) in &other.terms {
                out.add_term(f.tensor(g), a.clone() * b.clone());
            }
        }
        out
    }

    /// The anti-involution induced by flipping diagrams.
    pub fn sigma(&self) -> Self {
        AlgebraElement {
            m: self.n,
            n: self.m,
            terms: self.terms.iter().map(|(d, c)| (d.flip(), c.clone())).collect(),
        }
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero(self.m, self.n);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), f(c));
        }
        out
    }
}

impl AlgebraElement<Poly> {
    /// Product over `Q[T]`; loops contribute powers of `T`.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.compose(rhs, &Poly::t())
    }

    pub fn pow(&self, k: u32) -> Self {
        assert_eq!(self.m, self.n, "power of a non-square element");
        let mut acc = AlgebraElement::identity(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `T = t`.
    pub fn specialize(&self, t: &Rational) -> AlgebraElement<Rational> {
        self.map_coeffs(|p| p.eval(t))
    }
}

impl AlgebraElement<Rational> {
    /// Product with loops evaluated at `t`.
    pub fn mul_at(&self, rhs: &Self, t: &Rational) -> Result<Self, AlgebraError> {
        self.compose(rhs, t)
    }
}

/// Products over `Q[T]`. Panics on an arity mismatch; see `checked_mul`.
impl Mul for &AlgebraElement<Poly> {
    type Output = AlgebraElement<Poly>;
    fn mul(self, rhs: &AlgebraElement<Poly>) -> AlgebraElement<Poly> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Coeff> Add for &AlgebraElement<R> {
    type Output = AlgebraElement<R>;
    fn add(self, rhs: &AlgebraElement<R>) -> AlgebraElement<R> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Coeff> Sub for &AlgebraElement<R> {
    type Output = AlgebraElement<R>;
    fn sub(self, rhs: &AlgebraElement<R>) -> AlgebraElement<R> {
        self.checked_add(&-rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<R: Coeff> Neg for &AlgebraElement<R> {
    type Output = AlgebraElement<R>;
    fn neg(self) -> AlgebraElement<R> {
        AlgebraElement {
            m: self.m,
            n: self.n,
            terms: self.terms.iter().map(|(d, c)| (d.clone(), -c.clone())).collect(),
        }
    }
}

impl SeriesRing for AlgebraElement<Poly> {
    fn zero_like(&self) -> Self {
        AlgebraElement::zero(self.m, self.n)
    }
    fn one_like(&self) -> Self {
        AlgebraElement::identity(self.n)
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
        self.scale(&Poly::from_int(k))
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn try_inverse(&self) -> Option<Self> {
        let id = PartitionDiagram::identity(self.n);
        if self.m != self.n || self.terms.len() != 1 {
            return None;
        }
        let c = self.terms.get(&id)?;
        c.try_inverse().map(|ci| AlgebraElement::scalar(self.n, ci))
    }
}

fn fmt_coeff<R: fmt::Display>(c: &R) -> String {
    let s = c.to_string();
    if s.trim_start_matches('-').contains([' ', '+', '-']) {
        format!("({s})")
    } else {
        s
    }
}

impl<R: Coeff> fmt::Display for AlgebraElement<R> {
    /// One `diagram * coeff` line per term; the zero element prints as `0 (m x n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 ({} x {})", self.m, self.n);
        }
        let lines: Vec<String> =
            self.terms.iter().map(|(d, c)| format!("{d} * {}", fmt_coeff(c))).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

impl<R: Coeff> FromStr for AlgebraElement<R> {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: String| AlgebraError::Parse(why);
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("0 (").and_then(|r| r.strip_suffix(')')) {
            let (m, n) = rest.split_once('x').ok_or_else(|| bad(format!("bad zero {s:?}")))?;
            let m = m.trim().parse().map_err(|_| bad(format!("bad arity in {s:?}")))?;
            let n = n.trim().parse().map_err(|_| bad(format!("bad arity in {s:?}")))?;
            return Ok(AlgebraElement::zero(m, n));
        }
        let mut terms = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (d, c) = line.rsplit_once(" * ").ok_or_else(|| bad(format!("missing ' * ' in {line:?}")))?;
            let d: PartitionDiagram = d.parse().map_err(|e| bad(format!("{e}")))?;
            let c = c.trim();
            let c = c.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(c);
            let c: R = c.parse().map_err(|_| bad(format!("bad coefficient {c:?}")))?;
            terms.push((d, c));
        }
        let (m, n) = terms.first().map(|(d, _)| (d.m(), d.n())).ok_or_else(|| bad("empty element".into()))?;
        AlgebraElement::from_terms(m, n, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    diagram: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    m: usize,
    n: usize,
    terms: Vec<TermJson>,
}

impl<R: Coeff> AlgebraElement<R> {
    pub fn to_json(&self) -> String {
        let j = ElementJson {
            m: self.m,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermJson { coeff: c.to_string(), diagram: d.to_string() })
                .collect(),
        };
        serde_json::to_string(&j).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, AlgebraError> {
        let j: ElementJson = serde_json::from_str(s).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        let mut terms = Vec::new();
        for t in j.terms {
            let d: PartitionDiagram =
                t.diagram.parse().map_err(|e| AlgebraError::Parse(format!("{e}")))?;
            let c: R = t
                .coeff
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            terms.push((d, c));
        }
        AlgebraElement::from_terms(j.m, j.n, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{merge, split};

    fn e1() -> AlgebraElement<Poly> {
        AlgebraElement::from_diagram("1 x 1 : {1}{1'}".parse().unwrap())
    }

    #[test]
    fn leafleaf_squares_to_t_times_itself() {
        assert_eq!(&e1() * &e1(), e1().scale(&Poly::t()));
    }

    #[test]
    fn merge_after_split_is_identity() {
        let m = AlgebraElement::<Poly>::from_diagram(merge());
        let s = AlgebraElement::<Poly>::from_diagram(split());
        assert_eq!(&m * &s, AlgebraElement::identity(1));
    }

    #[test]
    fn arity_errors() {
        let m = AlgebraElement::<Poly>::from_diagram(merge());
        assert!(m.checked_mul(&m).is_err());
        assert!(m.checked_add(&e1()).is_err());
    }

    #[test]
    fn json_and_text_round_trip() {
        let x = &AlgebraElement::scalar(2, "T-1".parse::<Poly>().unwrap())
            + &AlgebraElement::from_diagram("2 x 2 : {1,2}{1',2'}".parse().unwrap());
        let j = x.to_json();
        assert!(j.contains(r#""coeff":"T - 1","diagram":"2 x 2 : {1,1'}{2,2'}""#), "{j}");
        assert_eq!(AlgebraElement::<Poly>::from_json(&j).unwrap(), x);
        assert_eq!(
            AlgebraElement::<Poly>::from_json(r#"{"m":2,"n":2,"terms":[{"coeff":"T-1","diagram":"2 x 2 : {1,1'}{2,2'}"}]}"#)
                .unwrap(),
            AlgebraElement::scalar(2, "T - 1".parse().unwrap())
        );
        assert_eq!(x.to_string().parse::<AlgebraElement<Poly>>().unwrap(), x);
        let z = AlgebraElement::<Poly>::zero(1, 3);
        assert_eq!(z.to_string().parse::<AlgebraElement<Poly>>().unwrap(), z);
    }
}
