use parcat_core::algebra::{cross_left, cross_right, interpolate_element, jm_left, jm_right};
use parcat_core::schurweyl::{jm_matrix_oracle, psi_element, OracleKind};

#[test]
fn recurrences_match_matrix_formulas() {
    for n in 1..=3 {
        for t in n + 1..=5 {
            for j in 1..=n {
                assert_eq!(
                    psi_element(&jm_left(n, j).unwrap(), t),
                    jm_matrix_oracle(n, j, t, OracleKind::LeftDot),
                    "left dot n={n} j={j} t={t}"
                );
                assert_eq!(
                    psi_element(&jm_right(n, j).unwrap(), t),
                    jm_matrix_oracle(n, j, t, OracleKind::RightDot),
                    "right dot n={n} j={j} t={t}"
                );
            }
            for k in 1..n {
                assert_eq!(
                    psi_element(&cross_left(n, k).unwrap(), t),
                    jm_matrix_oracle(n, k, t, OracleKind::LeftCross),
                    "left crossing n={n} k={k} t={t}"
                );
                assert_eq!(
                    psi_element(&cross_right(n, k).unwrap(), t),
                    jm_matrix_oracle(n, k, t, OracleKind::RightCross),
                    "right crossing n={n} k={k} t={t}"
                );
            }
        }
    }
}

#[test]
fn interpolation_reconstructs_two_strand_dots() {
    let ts: Vec<usize> = (4..=10).collect();
    let l = interpolate_element(|t| jm_matrix_oracle(2, 2, t, OracleKind::LeftDot), 2, 2, &ts).unwrap();
    assert_eq!(l, jm_left(2, 2).unwrap());
    let r = interpolate_element(|t| jm_matrix_oracle(2, 2, t, OracleKind::RightDot), 2, 2, &ts).unwrap();
    assert_eq!(r, jm_right(2, 2).unwrap());
}
