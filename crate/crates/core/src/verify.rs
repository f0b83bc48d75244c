//! Invariant suites run by `parcat verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::layer::{chain, leaf_down, leaf_up, merge, s, split};
use crate::algebra::{
    central_c, central_z, check_centrality, cross_left, cross_right, jm_left, jm_right, AlgebraElement,
};
use crate::diagram::{bell, enumerate_diagrams};
use crate::exact::{Poly, Rational};
use crate::schurweyl::{hom_rank, jm_matrix_oracle, psi_diagram, psi_element, OracleKind};
use crate::stdmod::verify_block_structure;
use crate::symfun::Partition;

type El = AlgebraElement<Poly>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Relations,
    Centrality,
    OracleAgreement,
    BlockStructure,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Relations, Suite::Centrality, Suite::OracleAgreement, Suite::BlockStructure];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Centrality => "centrality",
            Suite::OracleAgreement => "oracle-agreement",
            Suite::BlockStructure => "block-structure",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bounds {
    Small,
    Medium,
}

impl Bounds {
    pub fn from_name(s: &str) -> Option<Bounds> {
        match s {
            "small" => Some(Bounds::Small),
            "medium" => Some(Bounds::Medium),
            _ => None,
        }
    }

    fn strands(self) -> usize {
        match self {
            Bounds::Small => 3,
            Bounds::Medium => 4,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub check: String,
    pub passed: bool,
}

struct Collector {
    suite: &'static str,
    out: Vec<CheckResult>,
}

impl Collector {
    fn push(&mut self, check: String, passed: bool) {
        self.out.push(CheckResult { suite: self.suite, check, passed });
    }
}

fn xl(n: usize, j: usize) -> El {
    jm_left(n, j).expect("in range")
}

fn xr(n: usize, j: usize) -> El {
    jm_right(n, j).expect("in range")
}

fn relations(b: Bounds, c: &mut Collector) {
    let nmax = b.strands();
    for n in 1..=nmax {
        for j in 1..n {
            let sp = split(n, j);
            c.push(
                format!("split slides right dot n={n} j={j}"),
                chain(&[&sp, &xr(n - 1, j)]) == chain(&[&xr(n, j), &sp]),
            );
            c.push(
                format!("split exchanges dots n={n} j={j}"),
                chain(&[&xr(n, j + 1), &sp]) == chain(&[&xl(n, j), &sp]),
            );
        }
        for j in 1..=n {
            let lu = leaf_up(n, j);
            c.push(format!("leaf exchanges dots n={n} j={j}"), chain(&[&xl(n, j), &lu]) == chain(&[&xr(n, j), &lu]));
            c.push(format!("dots commute n={n} j={j}"), &xl(n, j) * &xr(n, j) == &xr(n, j) * &xl(n, j));
            c.push(format!("dots are flip invariant n={n} j={j}"), xl(n, j).sigma() == xl(n, j) && xr(n, j).sigma() == xr(n, j));
        }
    }
    for n in 1..nmax {
        for j in 1..=n {
            let a = chain(&[&merge(n + 1, j), &xl(n + 1, j), &leaf_up(n + 1, j)]);
            let d = chain(&[&leaf_down(n + 1, j), &xl(n + 1, j), &split(n + 1, j)]);
            c.push(format!("right dot from left dot n={n} j={j}"), a == xr(n, j) && d == xr(n, j));
            let e = chain(&[&merge(n + 1, j), &xr(n + 1, j + 1), &leaf_up(n + 1, j + 1)]);
            c.push(format!("left dot from right dot n={n} j={j}"), e == xl(n, j));
        }
        for k in 1..n {
            let (l, r, sk) = (cross_left(n, k).unwrap(), cross_right(n, k).unwrap(), s(n, k));
            let a = chain(&[&merge(n + 1, k + 1), &xr(n + 1, k + 2), &s(n + 1, k), &split(n + 1, k + 1)]);
            let d = chain(&[&merge(n + 1, k), &xl(n + 1, k), &s(n + 1, k + 1), &split(n + 1, k)]);
            c.push(format!("dotted crossings from dots n={n} k={k}"), a == l && d == r);
            c.push(format!("dotted crossings differ by a crossing n={n} k={k}"), r == &sk * &l && r == &l * &sk);
            let id = El::identity(n);
            c.push(
                format!("dotted crossings square to one n={n} k={k}"),
                &l * &l == id && &r * &r == id && &r * &l == sk && &l * &r == sk,
            );
        }
        for k in 1..n.saturating_sub(1) {
            let conj = chain(&[&s(n, k), &s(n, k + 1)]);
            let conj_inv = chain(&[&s(n, k + 1), &s(n, k)]);
            let s1 = s(n, k + 1);
            let rp = chain(&[&split(n, k), &cross_right(n - 1, k).unwrap(), &merge(n, k)]);
            let lp = chain(&[&split(n, k), &cross_left(n - 1, k).unwrap(), &merge(n, k)]);
            let rhs = &(&(&(&chain(&[&conj, &cross_left(n, k).unwrap(), &conj_inv]) + &chain(&[&s1, &rp]))
                + &chain(&[&rp, &s1]))
                - &chain(&[&s1, &lp, &s1]))
                - &lp;
            c.push(format!("left dotted crossing recursion n={n} k={k}"), rhs == cross_left(n, k + 1).unwrap());
        }
    }
}

fn centrality(b: Bounds, c: &mut Collector) {
    let (rz, rc) = match b {
        Bounds::Small => (2, 3),
        Bounds::Medium => (4, 5),
    };
    let nmax = 3;
    for r in 0..=rz {
        c.push(format!("z({r}) central to n={nmax}"), check_centrality(|n| central_z(n, r), nmax));
    }
    for r in 0..=rc {
        c.push(format!("c({r}) central to n={nmax}"), check_centrality(|n| central_c(n, r as usize), nmax));
    }
    for n in 0..=nmax {
        c.push(format!("c(0) = 1 n={n}"), central_c(n, 0) == El::identity(n));
        c.push(format!("c(1) = c(2) = 0 n={n}"), central_c(n, 1).is_zero() && central_c(n, 2).is_zero());
        let z = |r| central_z(n, r);
        let k = |x: i64| Poly::from_int(x);
        c.push(format!("c(3) = -2 z(1) n={n}"), central_c(n, 3) == z(1).scale(&k(-2)));
        if rc >= 4 {
            c.push(format!("c(4) = -3 z(2) n={n}"), central_c(n, 4) == z(2).scale(&k(-3)));
        }
        if rc >= 5 {
            c.push(
                format!("c(5) = -4 z(3) - 2 z(1) n={n}"),
                central_c(n, 5) == &z(3).scale(&k(-4)) + &z(1).scale(&k(-2)),
            );
        }
    }
}

fn oracle_agreement(b: Bounds, seed: u64, c: &mut Collector) {
    let nmax = b.strands() - 1;
    for n in 1..=nmax {
        for t in n + 1..=5 {
            let mut ok = true;
            for j in 1..=n {
                ok &= psi_element(&xl(n, j), t) == jm_matrix_oracle(n, j, t, OracleKind::LeftDot);
                ok &= psi_element(&xr(n, j), t) == jm_matrix_oracle(n, j, t, OracleKind::RightDot);
            }
            for k in 1..n {
                ok &= psi_element(&cross_left(n, k).unwrap(), t) == jm_matrix_oracle(n, k, t, OracleKind::LeftCross);
                ok &= psi_element(&cross_right(n, k).unwrap(), t) == jm_matrix_oracle(n, k, t, OracleKind::RightCross);
            }
            c.push(format!("dots and dotted crossings match matrices n={n} t={t}"), ok);
        }
    }
    let total = match b {
        Bounds::Small => 4,
        Bounds::Medium => 5,
    };
    for s in 0..=total {
        for m in 0..=s {
            let n = s - m;
            c.push(format!("hom rank m={m} n={n} t={s}"), hom_rank(m, n, s.max(1)) as u128 == bell(s));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = match b {
        Bounds::Small => 40,
        Bounds::Medium => 200,
    };
    let mut ok = true;
    for _ in 0..pairs {
        let (m, k, n) = (rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=2));
        let t = m.max(k).max(n) + rng.gen_range(0..=2);
        let fs = enumerate_diagrams(m, k);
        let gs = enumerate_diagrams(k, n);
        let f = &fs[rng.gen_range(0..fs.len())];
        let g = &gs[rng.gen_range(0..gs.len())];
        let (h, loops) = f.compose(g).unwrap();
        let lhs = psi_diagram(&h, t).scale(&Rational::from(t).pow(loops as u32));
        ok &= lhs == psi_diagram(f, t).mul(&psi_diagram(g, t));
    }
    c.push(format!("matrix functor respects composition on {pairs} random pairs"), ok);
}

fn block_structure(b: Bounds, c: &mut Collector) {
    let m_max = match b {
        Bounds::Small => 3,
        Bounds::Medium => 4,
    };
    for kappa in ["()", "(1)", "(2)", "(1,1)"] {
        let kappa: Partition = kappa.parse().unwrap();
        let report = verify_block_structure(&kappa, m_max, 3);
        for chk in &report.checks {
            c.push(
                format!("kappa={kappa} n={} m={} rank={} predicted={}", chk.n, chk.m, chk.rank, chk.predicted),
                chk.holds(),
            );
        }
    }
}

/// Run one suite; `seed` drives the randomized checks.
pub fn run_suite(suite: Suite, bounds: Bounds, seed: u64) -> Vec<CheckResult> {
    let mut c = Collector { suite: suite.name(), out: Vec::new() };
    match suite {
        Suite::Relations => relations(bounds, &mut c),
        Suite::Centrality => centrality(bounds, &mut c),
        Suite::OracleAgreement => oracle_agreement(bounds, seed, &mut c),
        Suite::BlockStructure => block_structure(bounds, &mut c),
    }
    c.out
}
