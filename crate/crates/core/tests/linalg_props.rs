use ko_triples::linalg::{Antiunitary, ExactMatrix, GaussianRational};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(a, b, c, d)| GaussianRational::from_fractions(a, b, c, d))
}

fn matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(entry(), n * n).prop_map(move |e| ExactMatrix::from_entries(n, n, e).unwrap())
}

fn square_pair() -> impl Strategy<Value = (ExactMatrix, ExactMatrix, ExactMatrix)> {
    (1usize..=3).prop_flat_map(|n| (matrix(n), matrix(n), matrix(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in entry(), b in entry(), c in entry()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!((&a * &a.conj()).im, GaussianRational::zero().im);
    }

    #[test]
    fn scaling_is_exact((a, b, _) in square_pair(), k in 1i64..50) {
        // Dividing by k after multiplying by k must recover the matrix bit for bit.
        let s = GaussianRational::from_int(k);
        let inv = s.inv().unwrap();
        prop_assert_eq!(a.scale(&s).scale(&inv), a.clone());
        prop_assert_eq!(&a.scale(&s) * &b, (&a * &b).scale(&s));
    }

    #[test]
    fn product_is_associative((a, b, c) in square_pair()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn dagger_laws((a, b, _) in square_pair()) {
        prop_assert_eq!(a.dagger().dagger(), a.clone());
        prop_assert_eq!((&a * &b).dagger(), &b.dagger() * &a.dagger());
        prop_assert!((&a + &a.dagger()).is_hermitian());
    }

    #[test]
    fn kron_mixed_product(
        (a, c) in (1usize..=2).prop_flat_map(|n| (matrix(n), matrix(n))),
        (b, d) in (1usize..=2).prop_flat_map(|n| (matrix(n), matrix(n))),
    ) {
        prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
        prop_assert_eq!(a.kron(&b).dagger(), a.dagger().kron(&b.dagger()));
    }

    #[test]
    fn antiunitary_conjugation_is_multiplicative((a, b, _) in (2usize..=2).prop_flat_map(|n| (matrix(n), matrix(n), matrix(n))), which in 0usize..4) {
        let k = [
            ko_triples::linalg::pauli::sigma_x(),
            ko_triples::linalg::pauli::sigma_y(),
            ko_triples::linalg::pauli::sigma_z(),
            ExactMatrix::identity(2),
        ][which].clone();
        let j = Antiunitary::new(k).unwrap();
        // J(AB)J⁻¹ = (JAJ⁻¹)(JBJ⁻¹), and J is antilinear: J(iA)J⁻¹ = −i JAJ⁻¹.
        prop_assert_eq!(j.conjugate(&(&a * &b)).unwrap(), &j.conjugate(&a).unwrap() * &j.conjugate(&b).unwrap());
        let i = GaussianRational::i();
        prop_assert_eq!(j.conjugate(&a.scale(&i)).unwrap(), j.conjugate(&a).unwrap().scale(&i.conj()));
    }
}

#[test]
fn mismatched_shapes_are_errors() {
    let a = ExactMatrix::zeros(2, 3);
    assert!(a.mul(&a).is_err());
    assert!(a.add(&ExactMatrix::zeros(3, 2)).is_err());
}
