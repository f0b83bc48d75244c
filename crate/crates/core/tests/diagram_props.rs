use std::collections::BTreeSet;

use parcat_core::diagram::{bell, enumerate_diagrams, enumerate_upward_orbits, DiagramKind};
use parcat_core::{PartitionDiagram, Permutation};
use proptest::prelude::*;

fn diagram(m: usize, n: usize) -> impl Strategy<Value = PartitionDiagram> {
    proptest::collection::vec(0usize..6, m + n).prop_map(move |raw| PartitionDiagram::from_labels(m, n, &raw).unwrap())
}

fn triple() -> impl Strategy<Value = (PartitionDiagram, PartitionDiagram, PartitionDiagram)> {
    (0usize..4, 0usize..4, 0usize..4, 0usize..4)
        .prop_flat_map(|(a, b, c, d)| (diagram(a, b), diagram(b, c), diagram(c, d)))
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in triple()) {
        let (fg, l1) = f.compose(&g).unwrap();
        let (left, l2) = fg.compose(&h).unwrap();
        let (gh, r1) = g.compose(&h).unwrap();
        let (right, r2) = f.compose(&gh).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(l1 + l2, r1 + r2);
    }

    #[test]
    fn flip_is_contravariant((f, g, _) in triple()) {
        prop_assert_eq!(f.flip().flip(), f.clone());
        let (fg, l) = f.compose(&g).unwrap();
        let (gf, l2) = g.flip().compose(&f.flip()).unwrap();
        prop_assert_eq!(fg.flip(), gf);
        prop_assert_eq!(l, l2);
    }

    #[test]
    fn tensor_interchange((f, g, _) in triple(), (h, k, _) in triple()) {
        let (fg, l1) = f.compose(&g).unwrap();
        let (hk, l2) = h.compose(&k).unwrap();
        let (both, l3) = f.tensor(&h).compose(&g.tensor(&k)).unwrap();
        prop_assert_eq!(fg.tensor(&hk), both);
        prop_assert_eq!(l1 + l2, l3);
    }

    #[test]
    fn text_round_trip(d in (0usize..5, 0usize..5).prop_flat_map(|(m, n)| diagram(m, n))) {
        prop_assert_eq!(d.to_string().parse::<PartitionDiagram>().unwrap(), d);
    }
}

#[test]
fn bell_counts() {
    for s in 0..=7 {
        for m in 0..=s {
            let ds = enumerate_diagrams(m, s - m);
            assert_eq!(ds.len() as u128, bell(s));
            assert_eq!(ds.iter().collect::<BTreeSet<_>>().len(), ds.len());
        }
    }
}

#[test]
fn permutations_act_freely_on_upward_diagrams() {
    for m in 0..=4 {
        for n in 0..=m {
            let perms = Permutation::all(n);
            for o in enumerate_upward_orbits(m, n) {
                let d = o.representative();
                let images: BTreeSet<PartitionDiagram> = perms
                    .iter()
                    .map(|g| {
                        let (dg, loops) = d.compose(&PartitionDiagram::from_permutation(g)).unwrap();
                        assert_eq!(loops, 0);
                        assert!(dg.is_upward());
                        assert!(matches!(dg.classify().kind, DiagramKind::Upward | DiagramKind::StrictlyUpward | DiagramKind::Permutation));
                        let top: Vec<usize> = (0..m).map(|j| dg.top_label(j)).collect();
                        let top0: Vec<usize> = (0..m).map(|j| d.top_label(j)).collect();
                        assert_eq!(canon(&top), canon(&top0));
                        dg
                    })
                    .collect();
                assert_eq!(images.len(), perms.len());
            }
        }
    }
}

fn canon(v: &[usize]) -> Vec<usize> {
    let mut seen = Vec::new();
    v.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(i) => i,
            None => {
                seen.push(*x);
                seen.len() - 1
            }
        })
        .collect()
}
