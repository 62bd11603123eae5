use std::collections::BTreeMap;

use ko_triples::products::{
    agreement_grid, even_representatives, predicted_from_table, representative, verify_product, Agreement,
    MatrixOutcome, Prediction, ProductMode,
};
use ko_triples::signature;
use ko_triples::triple::{table_signs, Sign, SignTriple};

/// Product sign rules written out on plain `i8`s.
fn oracle(s1: u8, s2: u8, mode: ProductMode) -> Option<(i8, i8, i8)> {
    let v = |s: Option<Sign>| s.unwrap().value();
    let (a, b) = (table_signs(s1), table_signs(s2));
    let (e1, p1, d1) = (a.eps.value(), v(a.eps_prime), v(a.eps_dprime));
    let (e2, p2, d2) = (b.eps.value(), v(b.eps_prime), v(b.eps_dprime));
    match mode {
        ProductMode::Natural => (p1 == d1 * p2).then_some((e1 * e2, p1, d1 * d2)),
        ProductMode::Modified => (p1 == -d1 * p2).then_some((e1 * e2 * d2, p1, d1 * d2)),
    }
}

#[test]
fn calculus_matches_the_plain_oracle() {
    for mode in ProductMode::ALL {
        for s1 in (0..8).step_by(2) {
            for s2 in (0..8).step_by(2) {
                let got = predicted_from_table(s1, s2, mode).unwrap().signs();
                let want = oracle(s1, s2, mode).map(|(e, p, d)| {
                    SignTriple::new(
                        Sign::from_i8(e).unwrap(),
                        Some(Sign::from_i8(p).unwrap()),
                        Some(Sign::from_i8(d).unwrap()),
                    )
                });
                assert_eq!(got, want, "{mode} {s1}×{s2}");
            }
        }
    }
}

#[test]
fn grid_agrees_with_the_calculus() {
    let grid = agreement_grid(4);
    assert_eq!(grid.len(), 2 * even_representatives(4).len().pow(2));
    for cell in &grid {
        assert!(cell.verification.consistent(), "{cell:?}");
        assert!(cell.matches_calculus(), "{cell:?}");
        assert_ne!(cell.verification.agreement, Agreement::Disagree);
    }
}

#[test]
fn outcome_depends_only_on_signatures() {
    let mut seen: BTreeMap<(u8, u8, &str), bool> = BTreeMap::new();
    for cell in agreement_grid(4) {
        let key = (
            signature(cell.factor1.0, cell.factor1.1),
            signature(cell.factor2.0, cell.factor2.1),
            cell.verification.mode.as_str(),
        );
        let compatible = matches!(cell.verification.predicted, Prediction::Compatible { .. });
        if let Some(&prev) = seen.get(&key) {
            assert_eq!(prev, compatible, "{key:?}");
        }
        seen.insert(key, compatible);
    }
    for ((s1, _, mode), compatible) in seen {
        let expected = match mode {
            "natural" => s1 == 0 || s1 == 4,
            _ => s1 == 2 || s1 == 6,
        };
        assert_eq!(compatible, expected, "σ₁={s1} {mode}");
    }
}

#[test]
fn incompatible_products_with_two_dirac_terms_have_witnesses() {
    let reps: Vec<(u32, u32)> = even_representatives(4).into_iter().filter(|&(p, _)| p >= 1).collect();
    for mode in ProductMode::ALL {
        for &a in &reps {
            for &b in &reps {
                let v = verify_product(&representative(a.0, a.1), &representative(b.0, b.1), mode).unwrap();
                if let Prediction::Incompatible { .. } = v.predicted {
                    assert!(!v.product_valid);
                    assert!(
                        matches!(&v.matrix, MatrixOutcome::Indefinite { witness: Some(_), .. }),
                        "{mode} {a:?}×{b:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn modes_differ_by_twisting_the_second_factor() {
    use ko_triples::triple::twist_real_structure;
    for &a in &[(4, 0), (1, 1), (3, 1)] {
        for &b in &[(2, 0), (1, 1), (4, 0)] {
            let t1 = representative(a.0, a.1);
            let t2 = representative(b.0, b.1);
            let modified = ko_triples::products::product_triple(&t1, &t2, ProductMode::Modified).unwrap();
            let natural_of_twist = ko_triples::products::product_triple(
                &t1,
                &twist_real_structure(&t2).unwrap(),
                ProductMode::Natural,
            )
            .unwrap();
            assert_eq!(modified.real_structure(), natural_of_twist.real_structure());
        }
    }
}
