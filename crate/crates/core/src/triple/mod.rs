//! Finite real spectral triples `(A, H, D, Ω, J)`.
//!
//! A triple here is a finite-dimensional Hilbert space `Cⁿ` carrying a
//! hermitian Dirac operator, an optional chirality, an antiunitary real
//! structure and an optional list of algebra generators. Construction only
//! checks shapes; the axioms are checked by [`validate_triple`] so that broken
//! triples can still be inspected and reported on.

mod signs;
mod validate;

use std::collections::BTreeMap;

pub use signs::{
    extract_signs, indefinite_sign_witness, ko_from_signs, relative_sign, table_signs, Parity,
    Sign, SignError, SignTriple, EPSILON_TABLE,
};
pub use validate::{validate_triple, Axiom, AxiomCheck, CheckStatus, ValidationReport};

use crate::clifford::{self, CliffordError};
use crate::linalg::{real_fixed_dim, real_fixed_dim_within, Antiunitary, ExactMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TripleError {
    #[error("{what} is {rows}x{cols}, expected {dim}x{dim}")]
    Shape { what: String, rows: usize, cols: usize, dim: usize },
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("Cl({p},{q}) has no spacelike generator to use as a hermitian Dirac operator")]
    NoHermitianGenerator { p: u32, q: u32 },
    #[error("triple has no chirality")]
    NoChirality,
    #[error(transparent)]
    Signs(#[from] SignError),
    #[error("Majorana–Weyl restriction needs J² = +1 and JΩ = ΩJ: {0}")]
    RestrictionUndefined(String),
}

/// A finite real spectral triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpectralTriple {
    dirac: ExactMatrix,
    chirality: Option<ExactMatrix>,
    real_structure: Antiunitary,
    algebra_gens: Vec<ExactMatrix>,
    metadata: BTreeMap<String, String>,
}

fn check_shape(what: &str, m: &ExactMatrix, dim: usize) -> Result<(), TripleError> {
    if (m.rows(), m.cols()) != (dim, dim) {
        return Err(TripleError::Shape {
            what: what.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            dim,
        });
    }
    Ok(())
}

impl FiniteSpectralTriple {
    /// Assembles a triple; every operator must be `dim × dim` with `dim` taken from `J`.
    pub fn new(
        dirac: ExactMatrix,
        chirality: Option<ExactMatrix>,
        real_structure: Antiunitary,
        algebra_gens: Vec<ExactMatrix>,
    ) -> Result<Self, TripleError> {
        let dim = real_structure.dim();
        check_shape("D", &dirac, dim)?;
        if let Some(o) = &chirality {
            check_shape("Ω", o, dim)?;
        }
        for (i, a) in algebra_gens.iter().enumerate() {
            check_shape(&format!("algebra generator {i}"), a, dim)?;
        }
        Ok(Self { dirac, chirality, real_structure, algebra_gens, metadata: BTreeMap::new() })
    }

    pub fn dim(&self) -> usize {
        self.real_structure.dim()
    }

    pub fn dirac(&self) -> &ExactMatrix {
        &self.dirac
    }

    pub fn chirality(&self) -> Option<&ExactMatrix> {
        self.chirality.as_ref()
    }

    pub fn real_structure(&self) -> &Antiunitary {
        &self.real_structure
    }

    pub fn algebra_gens(&self) -> &[ExactMatrix] {
        &self.algebra_gens
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn parity(&self) -> Parity {
        if self.chirality.is_some() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn with_dirac(self, dirac: ExactMatrix) -> Result<Self, TripleError> {
        check_shape("D", &dirac, self.dim())?;
        Ok(Self { dirac, ..self })
    }

    pub fn with_chirality(self, chirality: Option<ExactMatrix>) -> Result<Self, TripleError> {
        if let Some(o) = &chirality {
            check_shape("Ω", o, self.dim())?;
        }
        Ok(Self { chirality, ..self })
    }

    pub fn with_real_structure(self, real_structure: Antiunitary) -> Result<Self, TripleError> {
        check_shape("K", real_structure.k(), self.dim())?;
        Ok(Self { real_structure, ..self })
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn with_metadata_map(self, metadata: BTreeMap<String, String>) -> Self {
        Self { metadata, ..self }
    }
}

/// Which Dirac operator a canonical triple carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiracMode {
    Zero,
    /// `D = Γ¹`, hermitian when the first generator is spacelike.
    Gamma1,
}

impl DiracMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiracMode::Zero => "zero",
            DiracMode::Gamma1 => "gamma1",
        }
    }
}

/// The triple of `Cl(p,q)` on its spinor space.
///
/// `Ω` and `J` come from [`clifford::chirality`] and
/// [`clifford::find_real_structure`]. The algebra is generated by `Ω`
/// (the span of the two chiral projectors), which commutes with `Ω` and
/// satisfies the order-zero condition because `JΩJ⁻¹ = ±Ω`.
pub fn canonical_triple(p: u32, q: u32, mode: DiracMode) -> Result<FiniteSpectralTriple, TripleError> {
    let rep = clifford::build_gammas(p, q)?;
    let dirac = match mode {
        DiracMode::Zero => ExactMatrix::zeros(rep.dim(), rep.dim()),
        DiracMode::Gamma1 if p == 0 => return Err(TripleError::NoHermitianGenerator { p, q }),
        DiracMode::Gamma1 => rep.gammas()[0].clone(),
    };
    let omega = clifford::chirality(&rep);
    let j = clifford::find_real_structure(&rep)?;
    Ok(FiniteSpectralTriple::new(dirac, Some(omega.clone()), j, vec![omega])?
        .with_metadata("origin", "canonical")
        .with_metadata("p", p.to_string())
        .with_metadata("q", q.to_string())
        .with_metadata("dirac", mode.as_str()))
}

/// Replaces `J` by `J∘Ω`, whose linear part is `K·conj(Ω)`.
///
/// The signs move as `(ε, ε′, ε″) ↦ (εε″, −ε′, ε″)`; twisting twice gives back
/// `K·conj(Ω²) = K` exactly.
pub fn twist_real_structure(t: &FiniteSpectralTriple) -> Result<FiniteSpectralTriple, TripleError> {
    let omega = t.chirality().ok_or(TripleError::NoChirality)?;
    let twisted = t.real_structure().after_unitary(omega)?;
    let flipped = t.metadata.get("twisted").is_none_or(|v| v != "true");
    Ok(t.clone()
        .with_real_structure(twisted)?
        .with_metadata("twisted", flipped.to_string()))
}

/// Real dimensions of the Majorana–Weyl restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MajoranaWeyl {
    /// `dim_R {v : Jv = v}`.
    pub fixed_dim: usize,
    /// `dim_R {v : Jv = v, Ωv = v}`.
    pub chiral_fixed_dim: usize,
}

/// Restricts to the common `+1` eigenspace of `J` and `Ω`.
///
/// Only defined when `J² = +1` and `JΩ = ΩJ`.
pub fn restrict_majorana_weyl(t: &FiniteSpectralTriple) -> Result<MajoranaWeyl, TripleError> {
    let omega = t.chirality().ok_or_else(|| TripleError::RestrictionUndefined("no chirality".into()))?;
    let j = t.real_structure();
    match j.square().as_signed_identity() {
        Some(1) => {}
        Some(_) => return Err(TripleError::RestrictionUndefined("J² = −1".into())),
        None => return Err(TripleError::RestrictionUndefined("J² is not ±1".into())),
    }
    match relative_sign(j, omega) {
        Some(Sign::Plus) => {}
        Some(Sign::Minus) => return Err(TripleError::RestrictionUndefined("JΩ = −ΩJ".into())),
        None => return Err(TripleError::RestrictionUndefined("JΩ ≠ ±ΩJ".into())),
    }
    Ok(MajoranaWeyl {
        fixed_dim: real_fixed_dim(j)?,
        chiral_fixed_dim: real_fixed_dim_within(j, std::slice::from_ref(omega))?,
    })
}

/// One cell of the reproduced KO-dimension table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TableCell {
    pub stored: Option<Sign>,
    /// Present when the sign was measured on matrices.
    pub measured: Option<Sign>,
}

impl TableCell {
    pub fn verified(&self) -> bool {
        self.measured.is_some()
    }

    pub fn consistent(&self) -> bool {
        self.measured.is_none() || self.measured == self.stored
    }
}

/// A table row with `(ε, ε′, ε″)` cells.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TableRowCheck {
    pub sigma: u8,
    pub representative: Option<(u32, u32)>,
    pub cells: [TableCell; 3],
}

/// Canonical representatives measured for the even rows `σ = 0, 2, 4, 6`.
pub const EVEN_ROW_REPRESENTATIVES: [(u32, u32); 4] = [(1, 1), (2, 0), (4, 0), (0, 2)];

/// Re-measures the even table rows on canonical triples; odd rows are stored only.
///
/// Representatives with a spacelike generator use `D = Γ¹` so that `ε′` is
/// measured too; `(0,2)` has `D = 0` and its `ε′` stays stored.
pub fn reproduce_epsilon_table() -> Result<Vec<TableRowCheck>, TripleError> {
    let mut rows = Vec::with_capacity(8);
    for sigma in 0..8u8 {
        let stored = table_signs(sigma);
        let representative = EVEN_ROW_REPRESENTATIVES
            .iter()
            .copied()
            .find(|&(p, q)| clifford::signature(p, q) == sigma);
        let measured = match representative {
            Some((p, q)) => {
                let mode = if p >= 1 { DiracMode::Gamma1 } else { DiracMode::Zero };
                let t = canonical_triple(p, q, mode)?;
                Some(extract_signs(&t)?)
            }
            None => None,
        };
        let cell = |stored: Option<Sign>, measured: Option<Sign>| TableCell { stored, measured };
        rows.push(TableRowCheck {
            sigma,
            representative,
            cells: [
                cell(Some(stored.eps), measured.map(|m| m.eps)),
                cell(stored.eps_prime, measured.and_then(|m| m.eps_prime)),
                cell(stored.eps_dprime, measured.and_then(|m| m.eps_dprime)),
            ],
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::GaussianRational;

    fn signs(e: i8, e1: Option<i8>, e2: Option<i8>) -> SignTriple {
        let s = |v: i8| Sign::from_i8(v).unwrap();
        SignTriple::new(s(e), e1.map(s), e2.map(s))
    }

    #[test]
    fn canonical_examples() {
        let t = canonical_triple(2, 0, DiracMode::Gamma1).unwrap();
        assert!(validate_triple(&t).passed());
        let s = extract_signs(&t).unwrap();
        assert_eq!(s, signs(1, Some(1), Some(-1)));
        assert_eq!(ko_from_signs(&s, Parity::Even), Ok(2));

        let t = canonical_triple(0, 2, DiracMode::Zero).unwrap();
        assert!(validate_triple(&t).passed());
        let s = extract_signs(&t).unwrap();
        assert_eq!(s.eps_prime, None);
        assert_eq!(ko_from_signs(&s, Parity::Even), Ok(6));

        assert_eq!(
            canonical_triple(0, 2, DiracMode::Gamma1),
            Err(TripleError::NoHermitianGenerator { p: 0, q: 2 })
        );
    }

    #[test]
    fn extract_signs_table_rows() {
        let cases = [((2, 0), signs(1, Some(1), Some(-1))), ((4, 0), signs(-1, Some(1), Some(1))), ((1, 1), signs(1, Some(1), Some(1)))];
        for ((p, q), expected) in cases {
            let t = canonical_triple(p, q, DiracMode::Gamma1).unwrap();
            assert_eq!(extract_signs(&t).unwrap(), expected, "({p},{q})");
        }
    }

    #[test]
    fn validate_reports_non_hermitian_dirac() {
        let t = canonical_triple(2, 0, DiracMode::Gamma1).unwrap();
        let shifted = t.dirac() + &ExactMatrix::identity(2).scale(&GaussianRational::i());
        let bad = t.with_dirac(shifted).unwrap();
        let report = validate_triple(&bad);
        assert!(!report.passed());
        let fail = report.failures().find(|c| c.axiom == Axiom::DiracHermitian).unwrap();
        assert!(fail.witness.as_deref().unwrap().contains("D − D†"));
    }

    #[test]
    fn validate_reports_gamma_as_chirality() {
        let t = canonical_triple(2, 0, DiracMode::Gamma1).unwrap();
        let g1 = t.dirac().clone();
        let report = validate_triple(&t.with_chirality(Some(g1)).unwrap());
        assert_eq!(report.status_of(Axiom::ChiralityInvolution), Some(CheckStatus::Pass));
        assert_eq!(report.status_of(Axiom::DiracOdd), Some(CheckStatus::Fail));
        assert!(!report.passed());
    }

    #[test]
    fn validate_is_repeatable() {
        let t = canonical_triple(3, 1, DiracMode::Gamma1).unwrap();
        assert_eq!(validate_triple(&t), validate_triple(&t));
    }

    #[test]
    fn order_zero_failure_has_pair_witness() {
        // M₂(C) with plain conjugation violates order zero: [σx, σzᵀ] ≠ 0.
        use crate::linalg::pauli;
        let t = FiniteSpectralTriple::new(
            ExactMatrix::zeros(2, 2),
            None,
            Antiunitary::complex_conjugation(2),
            vec![pauli::sigma_x(), pauli::sigma_z()],
        )
        .unwrap();
        let report = validate_triple(&t);
        let fail = report.failures().find(|c| c.axiom == Axiom::OrderZero).unwrap();
        assert!(fail.witness.as_deref().unwrap().contains("[a0, J a1* J⁻¹]"));
    }

    #[test]
    fn order_zero_holds_for_diagonal_algebra() {
        use crate::linalg::pauli;
        let t = FiniteSpectralTriple::new(
            ExactMatrix::zeros(2, 2),
            None,
            Antiunitary::new(pauli::sigma_x()).unwrap(),
            vec![pauli::sigma_z(), ExactMatrix::identity(2)],
        )
        .unwrap();
        assert_eq!(validate_triple(&t).status_of(Axiom::OrderZero), Some(CheckStatus::Pass));
    }

    #[test]
    fn shape_errors() {
        let err = FiniteSpectralTriple::new(
            ExactMatrix::zeros(3, 3),
            None,
            Antiunitary::complex_conjugation(2),
            vec![],
        );
        assert!(matches!(err, Err(TripleError::Shape { .. })));
    }

    #[test]
    fn twist_examples() {
        let t = canonical_triple(1, 1, DiracMode::Gamma1).unwrap();
        let tw = twist_real_structure(&t).unwrap();
        let s = extract_signs(&tw).unwrap();
        assert_eq!(s, signs(1, Some(-1), Some(1)));
        assert_eq!(ko_from_signs(&s, Parity::Even), Err(SignError::NoTableMatch(s)));
        assert!(validate_triple(&tw).passed());

        let t = canonical_triple(0, 2, DiracMode::Zero).unwrap();
        assert_eq!(extract_signs(&t).unwrap(), signs(-1, None, Some(-1)));
        let tw = twist_real_structure(&t).unwrap();
        assert_eq!(extract_signs(&tw).unwrap(), signs(1, None, Some(-1)));
        assert_eq!(twist_real_structure(&tw).unwrap().real_structure(), t.real_structure());
    }

    #[test]
    fn twist_needs_chirality() {
        let t = canonical_triple(2, 0, DiracMode::Gamma1).unwrap().with_chirality(None).unwrap();
        assert_eq!(twist_real_structure(&t), Err(TripleError::NoChirality));
    }

    #[test]
    fn majorana_weyl_on_signature_zero() {
        let t = canonical_triple(1, 1, DiracMode::Gamma1).unwrap();
        assert_eq!(
            restrict_majorana_weyl(&t).unwrap(),
            MajoranaWeyl { fixed_dim: 2, chiral_fixed_dim: 1 }
        );
        let t = canonical_triple(2, 0, DiracMode::Gamma1).unwrap();
        assert!(matches!(restrict_majorana_weyl(&t), Err(TripleError::RestrictionUndefined(_))));
    }
}
