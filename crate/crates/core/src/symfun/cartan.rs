//! The Cartan matrix of the downward partition category and deformed Schur functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::{One, ToPrimitive, Zero};

use super::characters::{char_vector, classes, z_class};
use super::coeffs::lr_coeff;
use super::partition::{partitions_of, Partition};
use crate::diagram::{set_partitions, PartitionDiagram};
use crate::exact::Rational;
use crate::perm::Permutation;

/// Downward `m × n` diagrams as raw labels: the bottoms form a set partition
/// and the tops go injectively to its blocks.
fn downward_diagrams(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for p in set_partitions(n) {
        let k = p.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut inj = Vec::with_capacity(m);
        let mut used = vec![false; k];
        fn rec(m: usize, p: &[u8], inj: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if inj.len() == m {
                let mut raw: Vec<usize> = p.iter().map(|&l| l as usize).collect();
                raw.extend(inj.iter());
                out.push(raw);
                return;
            }
            for b in 0..used.len() {
                if !used[b] {
                    used[b] = true;
                    inj.push(b);
                    rec(m, p, inj, used, out);
                    inj.pop();
                    used[b] = false;
                }
            }
        }
        rec(m, &p, &mut inj, &mut used, &mut out);
    }
    out
}

/// A permutation with the given cycle type.
fn representative(rho: &Partition) -> Permutation {
    let n = rho.size();
    let mut images = vec![0; n];
    let mut start = 0;
    for &len in rho.parts() {
        for i in 0..len {
            images[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    Permutation::from_images(images).expect("cycle representative")
}

type FixTable = Arc<Vec<Vec<u64>>>;

fn fix_cache() -> &'static Mutex<HashMap<(usize, usize), FixTable>> {
    static C: OnceLock<Mutex<HashMap<(usize, usize), FixTable>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Fixed-point counts of `d ↦ g d h^{-1}` on downward `m × n` diagrams,
/// indexed by (class of g in S_m, class of h in S_n).
fn fixed_points(m: usize, n: usize) -> FixTable {
    if let Some(t) = fix_cache().lock().unwrap().get(&(m, n)) {
        return t.clone();
    }
    let diagrams: Vec<(Vec<usize>, PartitionDiagram)> = downward_diagrams(m, n)
        .into_iter()
        .map(|raw| {
            let d = PartitionDiagram::from_labels(m, n, &raw).unwrap();
            (raw, d)
        })
        .collect();
    let (cm, cn) = (classes(m), classes(n));
    let mut table = vec![vec![0u64; cn.len()]; cm.len()];
    for (a, rho) in cm.iter().enumerate() {
        let g = representative(rho);
        for (b, tau) in cn.iter().enumerate() {
            let h = representative(tau);
            let mut count = 0;
            let mut moved = vec![0usize; m + n];
            for (raw, d) in &diagrams {
                for i in 0..n {
                    moved[h.apply(i)] = raw[i];
                }
                for j in 0..m {
                    moved[n + g.apply(j)] = raw[n + j];
                }
                if PartitionDiagram::from_labels(m, n, &moved).unwrap() == *d {
                    count += 1;
                }
            }
            table[a][b] = count;
        }
    }
    let table = Arc::new(table);
    fix_cache().lock().unwrap().insert((m, n), table.clone());
    table
}

/// `B_{λ,μ}`: multiplicity of `S(μ) ⊠ S(λ)` in the span of downward
/// `|μ| × |λ|` diagrams under `S_{|μ|} × S_{|λ|}`.
pub fn cartan_b(lambda: &Partition, mu: &Partition) -> u64 {
    let (n, m) = (lambda.size(), mu.size());
    if m > n {
        return 0;
    }
    let fix = fixed_points(m, n);
    let (cm, cn) = (classes(m), classes(n));
    let (chi_mu, chi_lambda) = (char_vector(mu), char_vector(lambda));
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    // Σ fix · χ^μ(ρ) χ^λ(τ) / (z_ρ z_τ), kept as a single fraction.
    for (a, rho) in cm.iter().enumerate() {
        for (b, tau) in cn.iter().enumerate() {
            let v = BigInt::from(fix[a][b]) * BigInt::from(chi_mu[a]) * BigInt::from(chi_lambda[b]);
            if v.is_zero() {
                continue;
            }
            let z = z_class(rho) * z_class(tau);
            num = num * &z + v * &den;
            den *= z;
        }
    }
    let r = Rational::from_bigint(num) / Rational::from_bigint(den);
    assert!(r.is_integer(), "multiplicity is not an integer");
    r.to_i64().and_then(|x| x.to_u64()).expect("nonnegative multiplicity")
}

/// A symmetric function in the Schur basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurPoly {
    terms: BTreeMap<Partition, Rational>,
}

impl SchurPoly {
    pub fn zero() -> Self {
        SchurPoly::default()
    }

    pub fn s(lambda: Partition) -> Self {
        SchurPoly::from_terms([(lambda, Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = SchurPoly::zero();
        for (p, c) in terms {
            out.add_term(p, &c);
        }
        out
    }

    fn add_term(&mut self, p: Partition, c: &Rational) {
        let e = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> SchurPoly {
        SchurPoly::from_terms(self.terms.iter().map(|(p, x)| (p.clone(), x * c)))
    }

    /// Largest partition in the support (by size, then parts).
    pub fn leading(&self) -> Option<(&Partition, &Rational)> {
        self.terms.iter().next_back()
    }
}

impl Add for &SchurPoly {
    type Output = SchurPoly;
    fn add(self, rhs: &SchurPoly) -> SchurPoly {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c);
        }
        out
    }
}

impl Sub for &SchurPoly {
    type Output = SchurPoly;
    fn sub(self, rhs: &SchurPoly) -> SchurPoly {
        self + &rhs.scale(&Rational::from(-1))
    }
}

/// Product via Littlewood-Richardson coefficients.
impl Mul for &SchurPoly {
    type Output = SchurPoly;
    fn mul(self, rhs: &SchurPoly) -> SchurPoly {
        let mut out = SchurPoly::zero();
        for (mu, a) in &self.terms {
            for (nu, b) in &rhs.terms {
                let ab = a * b;
                for lambda in partitions_of(mu.size() + nu.size()) {
                    let c = lr_coeff(&lambda, mu, nu);
                    if c > 0 {
                        out.add_term(lambda, &(&ab * &Rational::from(c as i64)));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SchurPoly {
    /// Largest partitions first, e.g. `s(2) + s(1,1) - s()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            let body = p.to_string();
            write!(f, "s{body}")?;
        }
        Ok(())
    }
}

fn deformed_cache() -> &'static Mutex<HashMap<Partition, SchurPoly>> {
    static C: OnceLock<Mutex<HashMap<Partition, SchurPoly>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `s̃_λ = s_λ - Σ_{|μ|<|λ|} B_{λ,μ} s̃_μ`.
pub fn deformed_schur(lambda: &Partition) -> SchurPoly {
    if let Some(p) = deformed_cache().lock().unwrap().get(lambda) {
        return p.clone();
    }
    let mut out = SchurPoly::s(lambda.clone());
    for k in 0..lambda.size() {
        for mu in partitions_of(k) {
            let b = cartan_b(lambda, &mu);
            if b > 0 {
                out = &out - &deformed_schur(&mu).scale(&Rational::from(b as i64));
            }
        }
    }
    deformed_cache().lock().unwrap().insert(lambda.clone(), out.clone());
    out
}

/// Coordinates of `p` in the deformed Schur basis.
pub fn schur_to_deformed(p: &SchurPoly) -> SchurPoly {
    let mut rest = p.clone();
    let mut out = SchurPoly::zero();
    while let Some((lambda, c)) = rest.leading().map(|(l, c)| (l.clone(), c.clone())) {
        out.add_term(lambda.clone(), &c);
        rest = &rest - &deformed_schur(&lambda).scale(&c);
    }
    out
}

/// `Σ_μ c_μ s̃_μ` expanded back in the Schur basis.
pub fn deformed_to_schur(p: &SchurPoly) -> SchurPoly {
    p.terms.iter().fold(SchurPoly::zero(), |acc, (mu, c)| &acc + &deformed_schur(mu).scale(c))
}
