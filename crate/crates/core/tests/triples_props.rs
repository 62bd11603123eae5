mod common;

use proptest::prelude::*;

use ko_triples::products::{product_triple, representative, ProductMode};
use ko_triples::triple::{
    canonical_triple, extract_signs, ko_from_signs, restrict_majorana_weyl, table_signs,
    twist_real_structure, validate_triple, DiracMode, FiniteSpectralTriple, SignError,
};

fn even_pairs(max_n: u32) -> Vec<(u32, u32)> {
    (2..=max_n).step_by(2).flat_map(|n| (0..=n).map(move |p| (p, n - p))).collect()
}

fn canonical_with_dirac(max_n: u32) -> Vec<FiniteSpectralTriple> {
    even_pairs(max_n)
        .into_iter()
        .filter(|&(p, _)| p >= 1)
        .map(|(p, q)| canonical_triple(p, q, DiracMode::Gamma1).unwrap())
        .collect()
}

#[test]
fn canonical_signs_in_both_dirac_modes() {
    for (p, q) in even_pairs(6) {
        let sigma = ko_triples::signature(p, q);
        let zero = canonical_triple(p, q, DiracMode::Zero).unwrap();
        assert!(validate_triple(&zero).passed());
        let s = extract_signs(&zero).unwrap();
        assert_eq!(s.eps_prime, None);
        assert!(table_signs(sigma).agrees_where_present(&s));
        assert_eq!(ko_from_signs(&s, zero.parity()).unwrap(), sigma);

        if p >= 1 {
            let t = canonical_triple(p, q, DiracMode::Gamma1).unwrap();
            assert!(validate_triple(&t).passed(), "Cl({p},{q})");
            assert_eq!(extract_signs(&t).unwrap(), table_signs(sigma), "Cl({p},{q})");
        }
    }
}

#[test]
fn twist_moves_signs_and_undoes_itself() {
    for t in canonical_with_dirac(6) {
        let s = extract_signs(&t).unwrap();
        let twisted = twist_real_structure(&t).unwrap();
        assert!(validate_triple(&twisted).passed());
        let ts = extract_signs(&twisted).unwrap();
        let e2 = s.eps_dprime.unwrap();
        assert_eq!(ts.eps, s.eps * e2);
        assert_eq!(ts.eps_prime, s.eps_prime.map(|e| -e));
        assert_eq!(ts.eps_dprime, s.eps_dprime);
        assert!(matches!(ko_from_signs(&ts, twisted.parity()), Err(SignError::NoTableMatch(_))));

        let back = twist_real_structure(&twisted).unwrap();
        assert_eq!(back.real_structure(), t.real_structure());
    }
}

fn signature_zero_triples() -> Vec<FiniteSpectralTriple> {
    let mut out: Vec<FiniteSpectralTriple> =
        [(1, 1), (2, 2), (3, 3)].iter().map(|&(p, q)| representative(p, q)).collect();
    out.push(product_triple(&representative(3, 1), &representative(0, 2), ProductMode::Modified).unwrap());
    out.push(product_triple(&representative(1, 3), &representative(2, 0), ProductMode::Modified).unwrap());
    out.push(product_triple(&representative(4, 0), &representative(0, 4), ProductMode::Natural).unwrap());
    out
}

#[test]
fn majorana_weyl_matches_projection_traces() {
    for t in signature_zero_triples() {
        let mw = restrict_majorana_weyl(&t).unwrap();
        let (fixed, chiral) = common::projection_dims(&t);
        assert_eq!((mw.fixed_dim, mw.chiral_fixed_dim), (fixed, chiral));
        assert_eq!(fixed, t.dim());
        assert_eq!(2 * chiral, fixed);
    }
}

fn triple_and_basis_change() -> impl Strategy<Value = (usize, Vec<usize>, Vec<u8>)> {
    let count = signature_zero_triples().len();
    (0..count).prop_flat_map(|which| {
        let dim = signature_zero_triples()[which].dim();
        (
            Just(which),
            Just((0..dim).collect::<Vec<usize>>()).prop_shuffle(),
            proptest::collection::vec(0u8..4, dim),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn majorana_weyl_is_basis_independent((which, perm, phases) in triple_and_basis_change()) {
        let t = &signature_zero_triples()[which];
        let u = common::monomial_unitary(&perm, &phases);
        let moved = common::change_basis(t, &u);
        prop_assert!(validate_triple(&moved).passed());
        prop_assert_eq!(extract_signs(&moved).unwrap(), extract_signs(t).unwrap());
        let mw = restrict_majorana_weyl(&moved).unwrap();
        prop_assert_eq!((mw.fixed_dim, mw.chiral_fixed_dim), common::projection_dims(&moved));
        prop_assert_eq!(mw.fixed_dim, 2 * mw.chiral_fixed_dim);
        prop_assert_eq!(mw.fixed_dim, t.dim());
    }

    #[test]
    fn signs_survive_basis_changes(idx in 0usize..9, phases in proptest::collection::vec(0u8..4, 8), seed in any::<u64>()) {
        let triples = canonical_with_dirac(4);
        let t = &triples[idx % triples.len()];
        let dim = t.dim();
        let mut perm: Vec<usize> = (0..dim).collect();
        perm.rotate_left((seed as usize) % dim);
        let u = common::monomial_unitary(&perm, &phases[..dim]);
        let moved = common::change_basis(t, &u);
        prop_assert_eq!(extract_signs(&moved).unwrap(), extract_signs(t).unwrap());
    }
}
