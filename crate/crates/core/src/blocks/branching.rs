//! Three-layer branching of `D Δ(λ)` and its eigenspace summands `D_{b|a}`.

use std::collections::{BTreeMap, BTreeSet};

use crate::exact::Rational;
use crate::symfun::Partition;

/// Multisets of partitions in the top, middle and bottom layers.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BranchLayers {
    pub top: BTreeMap<Partition, usize>,
    pub middle: BTreeMap<Partition, usize>,
    pub bottom: BTreeMap<Partition, usize>,
}

fn bump(m: &mut BTreeMap<Partition, usize>, p: Partition, k: usize) {
    if k > 0 {
        *m.entry(p).or_insert(0) += k;
    }
}

impl BranchLayers {
    pub fn is_empty(&self) -> bool {
        self.top.is_empty() && self.middle.is_empty() && self.bottom.is_empty()
    }

    /// Layer-by-layer multiset union.
    pub fn union(&self, other: &BranchLayers) -> BranchLayers {
        let mut out = self.clone();
        for (p, k) in &other.top {
            bump(&mut out.top, p.clone(), *k);
        }
        for (p, k) in &other.middle {
            bump(&mut out.middle, p.clone(), *k);
        }
        for (p, k) in &other.bottom {
            bump(&mut out.bottom, p.clone(), *k);
        }
        out
    }
}

fn as_int(x: &Rational) -> Option<i64> {
    x.to_i64()
}

/// Top: `λ + a`; middle: `λ` and every `(λ - b) + a`; bottom: `λ - b`.
pub fn branch_hood(lambda: &Partition) -> BranchLayers {
    let mut out = BranchLayers::default();
    for a in lambda.addable() {
        bump(&mut out.top, lambda.add_box(a).unwrap(), 1);
    }
    bump(&mut out.middle, lambda.clone(), 1);
    for b in lambda.removable() {
        let smaller = lambda.remove_box(b).unwrap();
        for a in smaller.addable() {
            bump(&mut out.middle, smaller.add_box(a).unwrap(), 1);
        }
        bump(&mut out.bottom, smaller, 1);
    }
    out
}

/// The layers of `D_{b|a} Δ(λ)` at parameter `t`.
pub fn branch_d(lambda: &Partition, a: &Rational, b: &Rational, t: &Rational) -> BranchLayers {
    let mut out = BranchLayers::default();
    let s = t - &Rational::from(lambda.size());
    let (ai, bi) = (as_int(a), as_int(b));
    let in_add = |x: Option<i64>, p: &Partition| x.is_some_and(|x| p.addable().contains(&x));
    let in_rem = |x: Option<i64>, p: &Partition| x.is_some_and(|x| p.removable().contains(&x));

    if *b == s && in_add(ai, lambda) {
        bump(&mut out.top, lambda.add_box(ai.unwrap()).unwrap(), 1);
    }
    if a == b {
        if in_rem(ai, lambda) {
            bump(&mut out.middle, lambda.clone(), if *a == s { 2 } else { 1 });
        } else if *a == s {
            bump(&mut out.middle, lambda.clone(), 1);
        }
    } else if in_rem(bi, lambda) {
        let smaller = lambda.remove_box(bi.unwrap()).unwrap();
        if in_add(ai, &smaller) {
            bump(&mut out.middle, smaller.add_box(ai.unwrap()).unwrap(), 1);
        }
    }
    if *a == &s + &Rational::from(1) && in_rem(bi, lambda) {
        bump(&mut out.bottom, lambda.remove_box(bi.unwrap()).unwrap(), 1);
    }
    out
}

/// A finite set of `(a, b)` outside which every `D_{b|a} Δ(λ)` vanishes.
pub fn branch_support(lambda: &Partition, t: &Rational) -> Vec<(Rational, Rational)> {
    let mut vals: BTreeSet<Rational> = BTreeSet::new();
    for c in lambda.contents().into_iter().chain([0]) {
        for d in [-1, 0, 1] {
            vals.insert(Rational::from(c + d));
        }
    }
    let s = t - &Rational::from(lambda.size());
    vals.insert(&s + &Rational::from(1));
    vals.insert(s);
    let mut out = Vec::new();
    for a in &vals {
        for b in &vals {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn hood_examples() {
        let h = branch_hood(&p("()"));
        assert_eq!(h.top, [(p("(1)"), 1)].into());
        assert_eq!(h.middle, [(p("()"), 1)].into());
        assert!(h.bottom.is_empty());
        let h = branch_hood(&p("(1)"));
        assert_eq!(h.top, [(p("(2)"), 1), (p("(1,1)"), 1)].into());
        assert_eq!(h.middle, [(p("(1)"), 2)].into());
        assert_eq!(h.bottom, [(p("()"), 1)].into());
        assert_eq!(branch_hood(&p("(2,1)")).middle[&p("(2,1)")], 3);
    }

    #[test]
    fn d_examples() {
        let l = p("(1)");
        let x = branch_d(&l, &q(1), &q(2), &q(3));
        assert_eq!(x.top, [(p("(2)"), 1)].into());
        assert!(x.middle.is_empty() && x.bottom.is_empty());
        let x = branch_d(&l, &q(0), &q(0), &q(3));
        assert_eq!(x.middle, [(p("(1)"), 1)].into());
        assert!(x.top.is_empty() && x.bottom.is_empty());
        let x = branch_d(&l, &q(3), &q(0), &q(3));
        assert_eq!(x.bottom, [(p("()"), 1)].into());
        assert!(x.top.is_empty() && x.middle.is_empty());
    }
}
