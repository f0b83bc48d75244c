//! Central elements built from Jucys-Murphy elements.

use super::element::AlgebraElement;
use super::jm::{jm_left, jm_right};
use crate::diagram::enumerate_diagrams;
use crate::exact::{series_ratio_alpha, Poly, TruncSeries};

type El = AlgebraElement<Poly>;

/// `z_n^{(r)} = Σ_i ((x_i^L)^r - (x_i^R)^r)`.
pub fn central_z(n: usize, r: u32) -> El {
    let mut out = El::zero(n, n);
    for i in 1..=n {
        let l = jm_left(n, i).expect("in range").pow(r);
        let rt = jm_right(n, i).expect("in range").pow(r);
        out = &(&out + &l) - &rt;
    }
    out
}

/// The `u^{-r}` coefficient of `Π_i α_{x_i^L}(u) / α_{x_i^R}(u)`.
pub fn central_c(n: usize, r: usize) -> El {
    let mut prod = TruncSeries::constant(El::identity(n), r);
    for i in 1..=n {
        let x = jm_right(n, i).expect("in range");
        let y = jm_left(n, i).expect("in range");
        prod = prod.mul(&series_ratio_alpha(&x, &y, r));
    }
    prod.coeff(r).clone()
}

/// Checks `z_m h = h z_n` for every diagram `h: n → m` with `m, n ≤ n_max`.
pub fn check_centrality(family: impl Fn(usize) -> El, n_max: usize) -> bool {
    let zs: Vec<El> = (0..=n_max).map(&family).collect();
    for m in 0..=n_max {
        for n in 0..=n_max {
            for d in enumerate_diagrams(m, n) {
                let h = El::from_diagram(d);
                if &zs[m] * &h != &h * &zs[n] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_z() {
        let want = &El::from_diagram("1 x 1 : {1}{1'}".parse().unwrap()) - &El::scalar(1, Poly::t());
        assert_eq!(central_z(1, 1), want);
        assert!(central_z(0, 3).is_zero());
    }

    #[test]
    fn low_c_coefficients() {
        for n in 0..=2 {
            assert_eq!(central_c(n, 0), El::identity(n));
            assert!(central_c(n, 1).is_zero());
            assert!(central_c(n, 2).is_zero());
        }
    }

    #[test]
    fn centrality_small() {
        assert!(check_centrality(|n| central_z(n, 1), 2));
        assert!(check_centrality(El::identity, 2));
        assert!(!check_centrality(
            |n| if n == 0 { El::zero(0, 0) } else { jm_left(n, 1).unwrap() },
            2
        ));
    }
}
