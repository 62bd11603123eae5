//! Tensor products of even real spectral triples.
//!
//! Both constructions share
//!
//! ```text
//! H = H₁ ⊗ H₂,   D = D₁ ⊗ 1 + Ω₁ ⊗ D₂,   Ω = Ω₁ ⊗ Ω₂
//! ```
//!
//! so that `D` anticommutes with `Ω` and `D² = D₁² ⊗ 1 + 1 ⊗ D₂²`. They differ
//! in the real structure:
//!
//! * natural: `J = J₁ ⊗ J₂`, linear part `K₁ ⊗ K₂`;
//! * modified: `J = J₁ ⊗ J₂Ω₂`, linear part `K₁ ⊗ K₂·conj(Ω₂)`, since `Ω₂`
//!   acts before the conjugation inside `J₂`.
//!
//! [`predicted_signs`] gives the sign calculus for each construction and
//! [`verify_product`] checks it against the matrices.

use std::fmt;

use crate::linalg::{ExactMatrix, GaussianRational};
use crate::triple::{
    extract_signs, indefinite_sign_witness, ko_from_signs, table_signs, validate_triple,
    FiniteSpectralTriple, Parity, SignError, SignTriple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductMode {
    /// `J = J₁ ⊗ J₂`
    Natural,
    /// `J = J₁ ⊗ J₂Ω₂`
    Modified,
}

impl ProductMode {
    pub const ALL: [ProductMode; 2] = [ProductMode::Natural, ProductMode::Modified];

    pub fn as_str(self) -> &'static str {
        match self {
            ProductMode::Natural => "natural",
            ProductMode::Modified => "modified",
        }
    }
}

impl fmt::Display for ProductMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ProductMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "natural" => Ok(ProductMode::Natural),
            "modified" => Ok(ProductMode::Modified),
            other => Err(format!("unknown product mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProductError {
    #[error("factor {factor} has no chirality")]
    NoChirality { factor: u8 },
    #[error("factor {factor} fails validation: {failures}")]
    InvalidComponent { factor: u8, failures: String },
    #[error("factor {factor} signs {signs} lack {missing}")]
    IncompleteSigns { factor: u8, signs: SignTriple, missing: &'static str },
    #[error("factor {factor}: {source}")]
    Signs { factor: u8, source: SignError },
}

/// Builds `T₁ ⊗ T₂`. Algebra generators are `{a ⊗ 1} ∪ {1 ⊗ b}`.
pub fn product_triple(
    t1: &FiniteSpectralTriple,
    t2: &FiniteSpectralTriple,
    mode: ProductMode,
) -> Result<FiniteSpectralTriple, ProductError> {
    let omega1 = t1.chirality().ok_or(ProductError::NoChirality { factor: 1 })?;
    let omega2 = t2.chirality().ok_or(ProductError::NoChirality { factor: 2 })?;
    for (factor, t) in [(1, t1), (2, t2)] {
        let report = validate_triple(t);
        if !report.passed() {
            let failures: Vec<&str> = report.failures().map(|c| c.axiom.description()).collect();
            return Err(ProductError::InvalidComponent { factor, failures: failures.join("; ") });
        }
    }

    let id1 = ExactMatrix::identity(t1.dim());
    let id2 = ExactMatrix::identity(t2.dim());
    let dirac = &t1.dirac().kron(&id2) + &omega1.kron(t2.dirac());
    let omega = omega1.kron(omega2);
    let j2 = match mode {
        ProductMode::Natural => t2.real_structure().clone(),
        ProductMode::Modified => t2
            .real_structure()
            .after_unitary(omega2)
            .expect("chirality of a validated triple is unitary"),
    };
    let j = t1.real_structure().tensor(&j2);
    let gens = t1
        .algebra_gens()
        .iter()
        .map(|a| a.kron(&id2))
        .chain(t2.algebra_gens().iter().map(|b| id1.kron(b)))
        .collect();

    let triple = FiniteSpectralTriple::new(dirac, Some(omega), j, gens)
        .expect("kronecker factors have matching shapes")
        .with_metadata("origin", "product")
        .with_metadata("mode", mode.as_str());
    let describe = |t: &FiniteSpectralTriple| match (t.metadata().get("p"), t.metadata().get("q")) {
        (Some(p), Some(q)) => format!("Cl({p},{q})"),
        _ => format!("dim {}", t.dim()),
    };
    Ok(triple.with_metadata("factor1", describe(t1)).with_metadata("factor2", describe(t2)))
}

/// Outcome of the sign calculus for a product.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Prediction {
    Compatible { signs: SignTriple },
    Incompatible { relation: String },
}

impl Prediction {
    pub fn signs(&self) -> Option<SignTriple> {
        match self {
            Prediction::Compatible { signs } => Some(*signs),
            Prediction::Incompatible { .. } => None,
        }
    }
}

/// Sign calculus for `T₁ ⊗ T₂`.
///
/// * natural: `ε = ε₁ε₂`, `ε′ = ε′₁ = ε″₁ε′₂`, `ε″ = ε″₁ε″₂`;
/// * modified: `ε = ε₁ε₂ε″₂`, `ε′ = ε′₁ = −ε″₁ε′₂`, `ε″ = ε″₁ε″₂`.
///
/// The middle equality is the consistency condition; when it fails the
/// product has no uniform `ε′`. A second factor without `ε″₂` is accepted in
/// natural mode (the product then has no `ε″`) but not in modified mode.
pub fn predicted_signs(
    s1: &SignTriple,
    s2: &SignTriple,
    mode: ProductMode,
) -> Result<Prediction, ProductError> {
    let missing = |factor, signs, missing| ProductError::IncompleteSigns { factor, signs, missing };
    let e1p = s1.eps_prime.ok_or_else(|| missing(1, *s1, "ε′"))?;
    let e1pp = s1.eps_dprime.ok_or_else(|| missing(1, *s1, "ε″"))?;
    let e2p = s2.eps_prime.ok_or_else(|| missing(2, *s2, "ε′"))?;

    let (eps, required, relation) = match mode {
        ProductMode::Natural => (s1.eps * s2.eps, e1pp * e2p, "ε′₁ = ε″₁ε′₂"),
        ProductMode::Modified => {
            let e2pp = s2.eps_dprime.ok_or_else(|| missing(2, *s2, "ε″"))?;
            (s1.eps * s2.eps * e2pp, -(e1pp * e2p), "ε′₁ = −ε″₁ε′₂")
        }
    };
    if e1p != required {
        return Ok(Prediction::Incompatible {
            relation: format!("{relation} fails: ε′₁ = {e1p}, right-hand side = {required}"),
        });
    }
    Ok(Prediction::Compatible {
        signs: SignTriple { eps, eps_prime: Some(e1p), eps_dprime: s2.eps_dprime.map(|e| e1pp * e) },
    })
}

/// Which factors' Dirac operators are nonzero and so carry evidence for `ε′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EpsPrimeEvidence {
    Both,
    FirstOnly,
    SecondOnly,
    Neither,
}

/// Sign measurement on the product matrices.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MatrixOutcome {
    Signs { signs: SignTriple },
    /// `J` neither commutes nor anticommutes with `D` (or `Ω`); the witness
    /// is a vector `v` with `J X v ≠ ±X J v`.
    Indefinite { relation: String, witness: Option<Vec<String>> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    /// Matrix-level signs match the prediction (or both report incompatibility).
    Agree,
    Disagree,
    /// Predicted incompatible, but a zero factor Dirac operator hides the
    /// conflicting term, so no matrix witness can exist.
    NotWitnessable,
}

/// Matrix-level check of a product against the sign calculus.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ProductVerification {
    pub mode: ProductMode,
    /// Measured factor signs, with a missing `ε′` filled from the table row of
    /// the factor's KO-dimension.
    pub factor_signs: [SignTriple; 2],
    /// Whether the factor's `ε′` was filled from the table rather than measured.
    pub eps_prime_from_table: [bool; 2],
    pub factor_sigma: [Option<u8>; 2],
    pub eps_prime_evidence: EpsPrimeEvidence,
    pub predicted: Prediction,
    pub matrix: MatrixOutcome,
    pub product_sigma: Option<u8>,
    /// `(σ₁ + σ₂) mod 8` when both factor signatures are known.
    pub expected_sigma: Option<u8>,
    pub agreement: Agreement,
    pub product_valid: bool,
}

impl ProductVerification {
    pub fn agrees(&self) -> bool {
        self.agreement == Agreement::Agree
    }

    /// Agreement plus additivity of the signature when the product is compatible.
    pub fn consistent(&self) -> bool {
        match self.predicted {
            Prediction::Compatible { .. } => {
                self.agrees() && self.product_sigma.is_some() && self.product_sigma == self.expected_sigma
            }
            Prediction::Incompatible { .. } => self.agreement != Agreement::Disagree,
        }
    }
}

fn completed_factor_signs(
    factor: u8,
    t: &FiniteSpectralTriple,
) -> Result<(SignTriple, bool, Option<u8>), ProductError> {
    let measured = extract_signs(t).map_err(|source| ProductError::Signs { factor, source })?;
    let sigma = ko_from_signs(&measured, t.parity()).ok();
    if measured.eps_prime.is_some() {
        return Ok((measured, false, sigma));
    }
    let sigma_known = sigma.ok_or(ProductError::IncompleteSigns {
        factor,
        signs: measured,
        missing: "ε′ (D = 0 and no table row)",
    })?;
    let filled = SignTriple { eps_prime: table_signs(sigma_known).eps_prime, ..measured };
    Ok((filled, true, sigma))
}

fn format_vector(v: &[GaussianRational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Builds the product, measures its signs and compares them with [`predicted_signs`].
pub fn verify_product(
    t1: &FiniteSpectralTriple,
    t2: &FiniteSpectralTriple,
    mode: ProductMode,
) -> Result<ProductVerification, ProductError> {
    let product = product_triple(t1, t2, mode)?;
    let (s1, filled1, sigma1) = completed_factor_signs(1, t1)?;
    let (s2, filled2, sigma2) = completed_factor_signs(2, t2)?;
    let predicted = predicted_signs(&s1, &s2, mode)?;

    let evidence = match (t1.dirac().is_zero(), t2.dirac().is_zero()) {
        (false, false) => EpsPrimeEvidence::Both,
        (false, true) => EpsPrimeEvidence::FirstOnly,
        (true, false) => EpsPrimeEvidence::SecondOnly,
        (true, true) => EpsPrimeEvidence::Neither,
    };

    let matrix = match extract_signs(&product) {
        Ok(signs) => MatrixOutcome::Signs { signs },
        Err(SignError::IndefiniteSign { relation }) => {
            let op = if relation.contains('D') {
                product.dirac()
            } else {
                product.chirality().expect("product has a chirality")
            };
            MatrixOutcome::Indefinite {
                relation: relation.to_string(),
                witness: indefinite_sign_witness(product.real_structure(), op)
                    .map(|v| format_vector(&v)),
            }
        }
        Err(e) => MatrixOutcome::Indefinite { relation: e.to_string(), witness: None },
    };

    let product_sigma = match &matrix {
        MatrixOutcome::Signs { signs } => ko_from_signs(signs, Parity::Even).ok(),
        MatrixOutcome::Indefinite { .. } => None,
    };
    let expected_sigma = sigma1.zip(sigma2).map(|(a, b)| (a + b) % 8);

    let agreement = match (&predicted, &matrix) {
        (Prediction::Compatible { signs: p }, MatrixOutcome::Signs { signs: m }) => {
            if p.agrees_where_present(m) {
                Agreement::Agree
            } else {
                Agreement::Disagree
            }
        }
        (Prediction::Compatible { .. }, MatrixOutcome::Indefinite { .. }) => Agreement::Disagree,
        (Prediction::Incompatible { .. }, MatrixOutcome::Indefinite { witness: Some(_), .. }) => {
            Agreement::Agree
        }
        (Prediction::Incompatible { .. }, _) if evidence != EpsPrimeEvidence::Both => {
            Agreement::NotWitnessable
        }
        (Prediction::Incompatible { .. }, _) => Agreement::Disagree,
    };

    Ok(ProductVerification {
        mode,
        factor_signs: [s1, s2],
        eps_prime_from_table: [filled1, filled2],
        factor_sigma: [sigma1, sigma2],
        eps_prime_evidence: evidence,
        predicted,
        matrix,
        product_sigma,
        expected_sigma,
        agreement,
        product_valid: validate_triple(&product).passed(),
    })
}

impl fmt::Display for ProductVerification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma = |s: Option<u8>| s.map_or_else(|| "?".to_string(), |s| s.to_string());
        writeln!(f, "mode: {}", self.mode)?;
        for i in 0..2 {
            let filled = if self.eps_prime_from_table[i] { " (ε′ from table, D = 0)" } else { "" };
            writeln!(
                f,
                "factor {}: σ = {}, signs {}{}",
                i + 1,
                sigma(self.factor_sigma[i]),
                self.factor_signs[i],
                filled
            )?;
        }
        writeln!(f, "ε′ evidence: {:?}", self.eps_prime_evidence)?;
        match &self.predicted {
            Prediction::Compatible { signs } => writeln!(f, "predicted: {signs}")?,
            Prediction::Incompatible { relation } => writeln!(f, "predicted: incompatible ({relation})")?,
        }
        match &self.matrix {
            MatrixOutcome::Signs { signs } => writeln!(f, "measured: {signs}")?,
            MatrixOutcome::Indefinite { relation, witness } => {
                write!(f, "measured: indefinite sign in {relation}")?;
                if let Some(w) = witness {
                    write!(f, ", witness v = ({})", w.join(", "))?;
                }
                writeln!(f)?;
            }
        }
        writeln!(
            f,
            "σ(product) = {}, (σ₁ + σ₂) mod 8 = {}",
            sigma(self.product_sigma),
            sigma(self.expected_sigma)
        )?;
        writeln!(f, "agreement: {:?}", self.agreement)
    }
}

/// Canonical triple used to stand for `Cl(p,q)` in product checks:
/// `D = Γ¹` when a spacelike generator exists, else `D = 0`.
pub fn representative(p: u32, q: u32) -> FiniteSpectralTriple {
    use crate::triple::{canonical_triple, DiracMode};
    let mode = if p >= 1 { DiracMode::Gamma1 } else { DiracMode::Zero };
    canonical_triple(p, q, mode).expect("even (p,q) within range")
}

/// All even `(p,q)` with `2 ≤ p + q ≤ max_n`.
pub fn even_representatives(max_n: u32) -> Vec<(u32, u32)> {
    (2..=max_n)
        .step_by(2)
        .flat_map(|n| (0..=n).rev().map(move |p| (p, n - p)))
        .collect()
}

/// One matrix-level product check within [`agreement_grid`].
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GridCell {
    pub factor1: (u32, u32),
    pub factor2: (u32, u32),
    pub verification: ProductVerification,
}

/// Verifies every pair of representatives with `p + q ≤ max_n`, in both modes.
pub fn agreement_grid(max_n: u32) -> Vec<GridCell> {
    let reps: Vec<((u32, u32), FiniteSpectralTriple)> = even_representatives(max_n)
        .into_iter()
        .map(|(p, q)| ((p, q), representative(p, q)))
        .collect();
    let mut cells = Vec::with_capacity(reps.len() * reps.len() * 2);
    for mode in ProductMode::ALL {
        for (pq1, t1) in &reps {
            for (pq2, t2) in &reps {
                let verification =
                    verify_product(t1, t2, mode).expect("canonical representatives are valid");
                cells.push(GridCell { factor1: *pq1, factor2: *pq2, verification });
            }
        }
    }
    cells
}

impl GridCell {
    /// The matrix-free entry for the same signatures and mode.
    pub fn calculus_entry(&self) -> crate::signcalc::CompatibilityEntry {
        let sigma = |(p, q): (u32, u32)| crate::clifford::signature(p, q);
        crate::signcalc::enumerate_compatible(sigma(self.factor1), self.verification.mode)
            .swap_remove(usize::from(sigma(self.factor2)))
    }

    /// Whether the matrices and the table-only calculus tell the same story.
    pub fn matches_calculus(&self) -> bool {
        let entry = self.calculus_entry();
        let v = &self.verification;
        if entry.compatible != matches!(v.predicted, Prediction::Compatible { .. }) || !v.consistent() {
            return false;
        }
        match (&v.matrix, entry.predicted) {
            _ if !entry.compatible => true,
            (MatrixOutcome::Signs { signs }, Some(p)) => {
                p.agrees_where_present(signs) && v.product_sigma == entry.sigma_product
            }
            _ => false,
        }
    }
}

/// Representative factor pairs realising a scenario on matrices.
pub fn scenario_pairs(scenario: crate::signcalc::Scenario) -> Vec<((u32, u32), (u32, u32))> {
    use crate::signcalc::Scenario;
    match scenario {
        Scenario::Connes => vec![((4, 0), (2, 0))],
        Scenario::Barrett => vec![((3, 1), (0, 2)), ((1, 3), (2, 0))],
    }
}

/// Matrix-level verification of [`scenario_pairs`] in the scenario's mode.
pub fn scenario_witnesses(scenario: crate::signcalc::Scenario) -> Result<Vec<GridCell>, ProductError> {
    let mode = crate::signcalc::scenario_check(scenario).mode;
    scenario_pairs(scenario)
        .into_iter()
        .map(|(f1, f2)| {
            let verification =
                verify_product(&representative(f1.0, f1.1), &representative(f2.0, f2.1), mode)?;
            Ok(GridCell { factor1: f1, factor2: f2, verification })
        })
        .collect()
}

/// Signs of the table row for each factor, a convenience for calculus-only use.
pub fn predicted_from_table(sigma1: u8, sigma2: u8, mode: ProductMode) -> Result<Prediction, ProductError> {
    predicted_signs(&table_signs(sigma1), &table_signs(sigma2), mode)
}
