use parcat_core::algebra::AlgebraElement;
use parcat_core::schurweyl::{diagonal_action, psi_diagram, psi_element};
use parcat_core::{PartitionDiagram, Permutation, Poly, Rational};
use proptest::prelude::*;

type El = AlgebraElement<Poly>;

fn diagram(m: usize, n: usize) -> impl Strategy<Value = PartitionDiagram> {
    proptest::collection::vec(0usize..5, m + n).prop_map(move |raw| PartitionDiagram::from_labels(m, n, &raw).unwrap())
}

fn element(m: usize, n: usize) -> impl Strategy<Value = El> {
    proptest::collection::vec((diagram(m, n), -2i64..3, -2i64..3), 0..3).prop_map(move |ts| {
        ts.into_iter().fold(El::zero(m, n), |acc, (d, a, b)| {
            &acc + &El::from_term(d, Poly::from_coeffs(vec![Rational::from(a), Rational::from(b)]))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn psi_is_a_functor(
        (f, g) in (0usize..3, 0usize..3, 0usize..3).prop_flat_map(|(a, b, c)| (element(a, b), element(b, c))),
        t in 1usize..5,
    ) {
        prop_assert_eq!(psi_element(&(&f * &g), t), psi_element(&f, t).mul(&psi_element(&g, t)));
    }

    #[test]
    fn psi_is_monoidal(
        (f, g) in (0usize..3, 0usize..3, 0usize..3, 0usize..3).prop_flat_map(|(a, b, c, d)| (diagram(a, b), diagram(c, d))),
        t in 1usize..4,
    ) {
        prop_assert_eq!(psi_diagram(&f.tensor(&g), t), psi_diagram(&f, t).kron(&psi_diagram(&g, t)));
    }

    #[test]
    fn psi_is_equivariant(
        d in (0usize..3, 0usize..3).prop_flat_map(|(m, n)| diagram(m, n)),
        t in 1usize..5,
        pick in 0usize..120,
    ) {
        let all = Permutation::all(t);
        let g = &all[pick % all.len()];
        let p = psi_diagram(&d, t);
        prop_assert_eq!(diagonal_action(g, d.m()).mul(&p), p.mul(&diagonal_action(g, d.n())));
    }
}
