use num::{One, Zero};
use parcat_core::linalg::Matrix;
use parcat_core::symfun::{
    cartan_b, deformed_to_schur, kronecker, partitions_of, partitions_up_to, specht_rep, SchurPoly,
};
use parcat_core::{Permutation, Rational};

fn diag(ws: &[Rational]) -> Matrix {
    let mut m = Matrix::zeros(ws.len(), ws.len());
    for (i, w) in ws.iter().enumerate() {
        m.set(i, i, w.clone());
    }
    m
}

#[test]
fn seminormal_relations() {
    for lam in partitions_up_to(5) {
        let rep = specht_rep(&lam);
        let n = lam.size();
        let id = Matrix::identity(rep.dim());
        let w = diag(rep.form_weights());
        for i in 1..n {
            let s = rep.generator(i);
            assert_eq!(&(s * s), &id, "{lam} s_{i}^2");
            let ws = &w * s;
            assert_eq!(ws.transpose(), ws, "{lam} form not invariant under s_{i}");
            for j in i + 1..n {
                let t = rep.generator(j);
                if j == i + 1 {
                    assert_eq!(&(&(s * t) * s), &(&(t * s) * t), "{lam} braid {i}");
                } else {
                    assert_eq!(&(s * t), &(t * s), "{lam} s_{i} s_{j}");
                }
            }
        }
        for j in 1..=n {
            let mut x = Matrix::zeros(rep.dim(), rep.dim());
            for i in 1..j {
                let m = rep.matrix_of(&Permutation::transposition(n, i, j));
                for a in 0..rep.dim() {
                    for b in 0..rep.dim() {
                        x.add_at(a, b, m.get(a, b));
                    }
                }
            }
            let contents: Vec<Rational> = (0..rep.dim()).map(|k| Rational::from(rep.content_of(k, j))).collect();
            assert_eq!(x, diag(&contents), "{lam} x_{j}");
        }
    }
}

#[test]
fn restriction_branches_by_removable_boxes() {
    for n in 1..=5 {
        for lam in partitions_of(n) {
            let rep = specht_rep(&lam);
            let smaller: Vec<_> = lam.removable().into_iter().map(|b| specht_rep(&lam.remove_box(b).unwrap())).collect();
            for g in Permutation::all(n - 1) {
                let mut images: Vec<usize> = (0..n - 1).map(|i| g.apply(i)).collect();
                images.push(n - 1);
                let big = Permutation::from_images(images).unwrap();
                let sum = smaller.iter().fold(Rational::zero(), |acc, r| acc + r.trace(&g));
                assert_eq!(rep.trace(&big), sum, "{lam} at {g}");
            }
        }
    }
}

#[test]
fn kronecker_is_symmetric() {
    for n in 0..=5 {
        let ps = partitions_of(n);
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    let v = kronecker(a, b, c).unwrap();
                    for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                        assert_eq!(kronecker(x, y, z).unwrap(), v);
                    }
                }
            }
        }
    }
}

#[test]
fn cartan_matrix_inverts_deformation() {
    for lam in partitions_up_to(5) {
        let expansion = SchurPoly::from_terms(
            partitions_up_to(lam.size())
                .into_iter()
                .map(|mu| {
                    let b = cartan_b(&lam, &mu);
                    (mu, Rational::from(b as i64))
                })
                .filter(|(_, c)| !c.is_zero()),
        );
        assert_eq!(deformed_to_schur(&expansion), SchurPoly::s(lam.clone()), "{lam}");
        assert!(expansion.coeff(&lam).is_one());
    }
}
