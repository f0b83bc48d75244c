use parcat_core::algebra::{central_z, AlgebraElement};
use parcat_core::blocks::{central_char_z, is_typical};
use parcat_core::diagram::{
    crossing_layer, leaf_down_layer, leaf_up_layer, merge_layer, split_layer, PartitionDiagram,
};
use parcat_core::stdmod::{delta_dim, gram_matrix, verify_block_structure, DeltaWeightSpace};
use parcat_core::symfun::{partitions_up_to, Partition};
use parcat_core::Rational;
use proptest::prelude::*;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

/// A generator layer with bottom arity `m`, picked by `kind` and `pos`.
fn layer(m: usize, kind: u8, pos: usize) -> Option<PartitionDiagram> {
    match kind % 5 {
        0 if m >= 2 => Some(crossing_layer(m, 1 + pos % (m - 1))),
        1 if m >= 2 => Some(merge_layer(m, 1 + pos % (m - 1))),
        2 if m >= 1 => Some(split_layer(m + 1, 1 + pos % m)),
        3 if m >= 1 => Some(leaf_down_layer(m, 1 + pos % m)),
        4 => Some(leaf_up_layer(m + 1, 1 + pos % (m + 1))),
        _ => None,
    }
}

fn el(d: PartitionDiagram) -> AlgebraElement<Rational> {
    AlgebraElement::from_diagram(d)
}

fn small_lambda() -> impl Strategy<Value = Partition> {
    (0usize..7).prop_map(|i| partitions_up_to(3)[i].clone())
}

fn t_value() -> impl Strategy<Value = Rational> {
    prop_oneof![Just(q("0")), Just(q("2")), Just(q("1/2"))]
}

fn dot(g: &parcat_core::linalg::Matrix, x: &[Rational], y: &[Rational]) -> Rational {
    let gy = g.mul_vec(y);
    x.iter().zip(&gy).map(|(a, b)| a * b).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_is_functorial(
        lam in small_lambda(), t in t_value(), extra in 0usize..2,
        k1 in 0u8..5, p1 in 0usize..4, k2 in 0u8..5, p2 in 0usize..4,
        coeffs in proptest::collection::vec(-3i64..4, 64),
    ) {
        let m = lam.size() + extra;
        let Some(g) = layer(m, k1, p1) else { return Ok(()) };
        let Some(f) = layer(g.m(), k2, p2) else { return Ok(()) };
        prop_assume!(f.m() <= 4);
        let space = DeltaWeightSpace::new(&lam, m, &t);
        let v: Vec<Rational> = (0..space.dim()).map(|i| Rational::from(coeffs[i % 64])).collect();
        let fg = el(f.clone()).mul_at(&el(g.clone()), &t).unwrap();
        let (_, direct) = space.act(&fg, &v).unwrap();
        let (mid, gv) = space.act(&el(g), &v).unwrap();
        let (_, two_step) = mid.act(&el(f), &gv).unwrap();
        prop_assert_eq!(direct, two_step);
    }

    #[test]
    fn form_is_contravariant(
        lam in small_lambda(), t in t_value(), extra in 0usize..2,
        k in 0u8..5, p in 0usize..4,
        xs in proptest::collection::vec(-3i64..4, 64),
        ys in proptest::collection::vec(-3i64..4, 64),
    ) {
        let m = lam.size() + extra;
        let Some(f) = layer(m, k, p) else { return Ok(()) };
        let src = DeltaWeightSpace::new(&lam, m, &t);
        let gm = gram_matrix(&lam, m, &t).matrix;
        let gm2 = gram_matrix(&lam, f.m(), &t).matrix;
        prop_assert!(gm.is_symmetric());
        let x: Vec<Rational> = (0..src.dim()).map(|i| Rational::from(xs[i % 64])).collect();
        let (dst, fx) = src.act(&el(f.clone()), &x).unwrap();
        let y: Vec<Rational> = (0..dst.dim()).map(|i| Rational::from(ys[i % 64])).collect();
        let (_, sy) = dst.act(&el(f.flip()), &y).unwrap();
        prop_assert_eq!(dot(&gm2, &fx, &y), dot(&gm, &x, &sy));
    }
}

#[test]
fn central_elements_act_by_scalars() {
    for t in [q("0"), q("2"), q("1/2")] {
        for lam in partitions_up_to(3) {
            for m in lam.size()..=4 {
                let space = DeltaWeightSpace::new(&lam, m, &t);
                for r in 0..=2 {
                    let z = central_z(m, r).specialize(&t);
                    let chi = central_char_z(&lam, r, &t);
                    for b in 0..space.dim() {
                        let v = space.basis_vector(b / space.specht_dim(), b % space.specht_dim());
                        let (_, w) = space.act(&z, &v).unwrap();
                        let expect: Vec<Rational> = v.iter().map(|x| x * &chi).collect();
                        assert_eq!(w, expect, "λ={lam} m={m} r={r} t={t}");
                    }
                }
            }
        }
    }
}

#[test]
fn empty_partition_at_two() {
    let e = Partition::empty();
    let three: Partition = "(3)".parse().unwrap();
    let three_one: Partition = "(3,1)".parse().unwrap();
    let r = verify_block_structure(&"(2)".parse().unwrap(), 4, 0);
    assert!(r.all_hold());
    for c in &r.checks {
        let expect = delta_dim(&e, c.m) as i128 - delta_dim(&three, c.m) as i128
            + delta_dim(&three_one, c.m) as i128;
        assert_eq!(c.predicted, expect);
    }
}

#[test]
fn typical_partitions_give_simple_standards() {
    let t = q("2");
    for lam in partitions_up_to(4).into_iter().filter(|l| is_typical(l, &t)) {
        for m in 0..=4 {
            assert_eq!(gram_matrix(&lam, m, &t).rank as u128, delta_dim(&lam, m));
        }
    }
}
