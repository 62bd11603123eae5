//! Axiom checks for finite real spectral triples.

use std::fmt;

use crate::linalg::{ExactMatrix, GaussianRational};

use super::signs::{indefinite_sign_witness, relative_sign};
use super::FiniteSpectralTriple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    DiracHermitian,
    ChiralityHermitian,
    ChiralityInvolution,
    DiracOdd,
    ChiralityCommutesWithAlgebra,
    RealStructureUnitary,
    RealStructureSquare,
    RealStructureDirac,
    RealStructureChirality,
    OrderZero,
}

impl Axiom {
    pub fn description(self) -> &'static str {
        match self {
            Axiom::DiracHermitian => "D† = D",
            Axiom::ChiralityHermitian => "Ω† = Ω",
            Axiom::ChiralityInvolution => "Ω² = 1",
            Axiom::DiracOdd => "ΩD + DΩ = 0",
            Axiom::ChiralityCommutesWithAlgebra => "[Ω, a] = 0",
            Axiom::RealStructureUnitary => "K†K = 1",
            Axiom::RealStructureSquare => "J² = ±1",
            Axiom::RealStructureDirac => "JD = ±DJ",
            Axiom::RealStructureChirality => "JΩ = ±ΩJ",
            Axiom::OrderZero => "[a, J b* J⁻¹] = 0",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not applicable, e.g. no chirality or no algebra generators.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub status: CheckStatus,
    /// On failure, where the identity breaks.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    /// True iff no applicable check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn status_of(&self, axiom: Axiom) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.axiom == axiom).map(|c| c.status)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            write!(f, "[{tag}] {}", c.axiom.description())?;
            if let Some(w) = &c.witness {
                write!(f, "  ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `Ok` for a zero residual, otherwise a witness naming its first nonzero entry.
fn zero_residual(label: &str, m: &ExactMatrix) -> Result<(), String> {
    match m.first_nonzero() {
        None => Ok(()),
        Some((r, c, v)) => Err(format!("entry ({r},{c}) of {label} is {v}")),
    }
}

fn format_vector(v: &[GaussianRational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

struct Checks(Vec<AxiomCheck>);

impl Checks {
    fn record(&mut self, axiom: Axiom, outcome: Option<Result<(), String>>) {
        let (status, witness) = match outcome {
            None => (CheckStatus::Skipped, None),
            Some(Ok(())) => (CheckStatus::Pass, None),
            Some(Err(w)) => (CheckStatus::Fail, Some(w)),
        };
        self.0.push(AxiomCheck { axiom, status, witness });
    }
}

/// Checks every applicable axiom, never short-circuiting.
pub fn validate_triple(t: &FiniteSpectralTriple) -> ValidationReport {
    let d = t.dirac();
    let j = t.real_structure();
    let omega = t.chirality();
    let gens = t.algebra_gens();
    let mut checks = Checks(Vec::with_capacity(10));

    checks.record(Axiom::DiracHermitian, Some(zero_residual("D − D†", &(d - &d.dagger()))));

    checks.record(
        Axiom::ChiralityHermitian,
        omega.map(|o| zero_residual("Ω − Ω†", &(o - &o.dagger()))),
    );
    checks.record(
        Axiom::ChiralityInvolution,
        omega.map(|o| zero_residual("Ω² − 1", &(&(o * o) - &ExactMatrix::identity(t.dim())))),
    );
    checks.record(
        Axiom::DiracOdd,
        omega.map(|o| zero_residual("ΩD + DΩ", &o.anticommutator(d).expect("square"))),
    );
    checks.record(
        Axiom::ChiralityCommutesWithAlgebra,
        omega.filter(|_| !gens.is_empty()).map(|o| {
            gens.iter().enumerate().try_for_each(|(i, a)| {
                zero_residual(&format!("[Ω, a{i}]"), &o.commutator(a).expect("square"))
            })
        }),
    );

    let unitary = j.k().is_unitary();
    checks.record(
        Axiom::RealStructureUnitary,
        Some(zero_residual("K†K − 1", &(&(&j.k().dagger() * j.k()) - &ExactMatrix::identity(t.dim())))),
    );
    checks.record(
        Axiom::RealStructureSquare,
        Some(match j.square().as_signed_identity() {
            Some(_) => Ok(()),
            None => Err(match j.square().first_nonzero() {
                Some((r, c, v)) if r != c => format!("off-diagonal entry ({r},{c}) of J² is {v}"),
                _ => "J² is diagonal but not ±1".to_string(),
            }),
        }),
    );
    checks.record(
        Axiom::RealStructureDirac,
        (!d.is_zero() && unitary).then(|| match relative_sign(j, d) {
            Some(_) => Ok(()),
            None => Err(match indefinite_sign_witness(j, d) {
                Some(v) => format!("JDv ≠ ±DJv for v = {}", format_vector(&v)),
                None => "JD = ±DJ fails".to_string(),
            }),
        }),
    );
    checks.record(
        Axiom::RealStructureChirality,
        omega.filter(|_| unitary).map(|o| match relative_sign(j, o) {
            Some(_) => Ok(()),
            None => Err(match indefinite_sign_witness(j, o) {
                Some(v) => format!("JΩv ≠ ±ΩJv for v = {}", format_vector(&v)),
                None => "JΩ = ±ΩJ fails".to_string(),
            }),
        }),
    );
    checks.record(
        Axiom::OrderZero,
        (!gens.is_empty() && unitary).then(|| {
            let opposite: Vec<ExactMatrix> =
                gens.iter().map(|b| j.conjugate(&b.dagger()).expect("square")).collect();
            gens.iter().enumerate().try_for_each(|(ia, a)| {
                opposite.iter().enumerate().try_for_each(|(ib, b_op)| {
                    zero_residual(
                        &format!("[a{ia}, J a{ib}* J⁻¹]"),
                        &a.commutator(b_op).expect("square"),
                    )
                })
            })
        }),
    );

    ValidationReport { checks: checks.0 }
}
