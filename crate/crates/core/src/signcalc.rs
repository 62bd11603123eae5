//! Matrix-free sign calculus over the KO-dimension table.
//!
//! Every entry here is computed from table rows and the product sign rules in
//! [`crate::products::predicted_signs`]; no matrices are involved. The
//! matrix-level counterpart is [`crate::products::agreement_grid`].

use std::collections::BTreeSet;
use std::fmt;

use crate::products::{predicted_from_table, Prediction, ProductMode};
use crate::triple::{ko_from_signs, table_signs, Parity, Sign, SignTriple};

/// How a `(σ₁, σ₂, mode)` combination fares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryStatus {
    /// Consistent signs and a chirality on the product.
    Compatible,
    /// Consistent signs, but the odd second factor leaves the product without `Ω`.
    CompatibleWithoutChirality,
    /// The consistency relation fails.
    Incompatible,
    /// The construction itself needs a chirality that a factor lacks.
    Undefined,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CompatibilityEntry {
    pub sigma1: u8,
    pub sigma2: u8,
    pub mode: ProductMode,
    pub status: EntryStatus,
    pub compatible: bool,
    pub predicted: Option<SignTriple>,
    pub sigma_product: Option<u8>,
    pub violated_relation: Option<String>,
}

impl fmt::Display for CompatibilityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ₁={} σ₂={} {}: ", self.sigma1, self.sigma2, self.mode)?;
        match self.status {
            EntryStatus::Compatible | EntryStatus::CompatibleWithoutChirality => {
                let signs = self.predicted.expect("compatible entries carry signs");
                write!(f, "compatible")?;
                if self.status == EntryStatus::CompatibleWithoutChirality {
                    write!(f, " (without chirality)")?;
                }
                write!(f, ", σ={}, signs {signs}", self.sigma_product.expect("compatible"))
            }
            EntryStatus::Incompatible | EntryStatus::Undefined => {
                let what =
                    if self.status == EntryStatus::Incompatible { "incompatible" } else { "undefined" };
                write!(f, "{what}: {}", self.violated_relation.as_deref().unwrap_or(""))
            }
        }
    }
}

fn entry(sigma1: u8, sigma2: u8, mode: ProductMode) -> CompatibilityEntry {
    let s1 = table_signs(sigma1);
    let s2 = table_signs(sigma2);
    let blank = |status, why: &str| CompatibilityEntry {
        sigma1,
        sigma2,
        mode,
        status,
        compatible: false,
        predicted: None,
        sigma_product: None,
        violated_relation: Some(why.to_string()),
    };
    if s1.eps_dprime.is_none() {
        return blank(
            EntryStatus::Undefined,
            "first factor has no chirality Ω₁, so D = D₁⊗1 + Ω₁⊗D₂ is undefined",
        );
    }
    if mode == ProductMode::Modified && s2.eps_dprime.is_none() {
        return blank(EntryStatus::Undefined, "second factor has no chirality Ω₂ to define J = J₁⊗J₂Ω₂");
    }
    let prediction = predicted_from_table(sigma1, sigma2, mode).expect("table rows are complete");
    match prediction {
        Prediction::Incompatible { relation } => blank(EntryStatus::Incompatible, &relation),
        Prediction::Compatible { signs } => {
            let parity = Parity::of_signature(sigma2);
            match ko_from_signs(&signs, parity) {
                Ok(sigma) => CompatibilityEntry {
                    sigma1,
                    sigma2,
                    mode,
                    status: match parity {
                        Parity::Even => EntryStatus::Compatible,
                        Parity::Odd => EntryStatus::CompatibleWithoutChirality,
                    },
                    compatible: true,
                    predicted: Some(signs),
                    sigma_product: Some(sigma),
                    violated_relation: None,
                },
                Err(e) => CompatibilityEntry {
                    predicted: Some(signs),
                    ..blank(EntryStatus::Incompatible, &format!("product signs {signs}: {e}"))
                },
            }
        }
    }
}

/// Every second-factor signature `σ₂ ∈ 0..8` against a fixed `σ₁`.
pub fn enumerate_compatible(sigma1: u8, mode: ProductMode) -> Vec<CompatibilityEntry> {
    (0..8).map(|sigma2| entry(sigma1 % 8, sigma2, mode)).collect()
}

/// The sign and signature content of one worked case, as stated in the
/// reference case analysis of the two product constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseClaim {
    /// The stated `ε` line: `ε = c·ε₂` (natural) or `ε = c·ε₂ε″₂` (modified).
    pub eps_coefficient: Sign,
    /// Whether every even `σ₂` is stated to be allowed (otherwise none is).
    pub all_even_allowed: bool,
    /// Odd `σ₂` stated to be allowed without chirality, when the case lists any.
    pub odd_allowed: Option<BTreeSet<u8>>,
}

/// The reference case analysis for even `σ₁`, transcribed as data.
pub fn reference_case_claim(sigma1: u8, mode: ProductMode) -> Option<CaseClaim> {
    use Sign::{Minus, Plus};
    let set = |v: &[u8]| Some(v.iter().copied().collect::<BTreeSet<u8>>());
    let (eps_coefficient, all_even_allowed, odd_allowed) = match (mode, sigma1) {
        (ProductMode::Natural, 0) => (Plus, true, set(&[1, 5])),
        (ProductMode::Natural, 2) => (Plus, false, set(&[3, 7])),
        (ProductMode::Natural, 4) => (Minus, true, set(&[1, 5])),
        (ProductMode::Natural, 6) => (Plus, false, set(&[1, 5])),
        (ProductMode::Modified, 0) => (Plus, false, None),
        (ProductMode::Modified, 2) => (Minus, true, None),
        (ProductMode::Modified, 4) => (Minus, false, None),
        (ProductMode::Modified, 6) => (Plus, true, None),
        _ => return None,
    };
    Some(CaseClaim { eps_coefficient, all_even_allowed, odd_allowed })
}

/// A point where the computed calculus departs from the reference case analysis.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Discrepancy {
    pub sigma1: u8,
    pub mode: ProductMode,
    pub topic: &'static str,
    pub computed: String,
    pub reference: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "discrepancy (σ₁={}, {}): {} computed as {}, but the reference case analysis lists {}",
            self.sigma1, self.mode, self.topic, self.computed, self.reference
        )
    }
}

fn format_set(s: &BTreeSet<u8>) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Compares [`enumerate_compatible`] with [`reference_case_claim`].
pub fn discrepancies(sigma1: u8, mode: ProductMode) -> Vec<Discrepancy> {
    let Some(claim) = reference_case_claim(sigma1, mode) else {
        return Vec::new();
    };
    let entries = enumerate_compatible(sigma1, mode);
    let mut out = Vec::new();
    let mut report = |topic, computed: String, reference: String| {
        if computed != reference {
            out.push(Discrepancy { sigma1, mode, topic, computed, reference });
        }
    };

    // ε = ε₁·ε₂ (natural) or ε₁·ε₂ε″₂ (modified): the coefficient is ε₁.
    let eps_line = |c: Sign| {
        let sign = if c == Sign::Plus { "+" } else { "−" };
        match mode {
            ProductMode::Natural => format!("ε = {sign}ε₂"),
            ProductMode::Modified => format!("ε = {sign}ε₂ε″₂"),
        }
    };
    report("ε line", eps_line(table_signs(sigma1).eps), eps_line(claim.eps_coefficient));

    let even: Vec<&CompatibilityEntry> = entries.iter().filter(|e| e.sigma2 % 2 == 0).collect();
    let computed_even = if even.iter().all(|e| e.compatible) {
        "all even σ₂"
    } else if even.iter().all(|e| !e.compatible) {
        "no even σ₂"
    } else {
        "some even σ₂"
    };
    let claimed_even = if claim.all_even_allowed { "all even σ₂" } else { "no even σ₂" };
    report("even σ₂", computed_even.to_string(), claimed_even.to_string());

    if let Some(claimed_odd) = &claim.odd_allowed {
        let computed_odd: BTreeSet<u8> = entries
            .iter()
            .filter(|e| e.status == EntryStatus::CompatibleWithoutChirality)
            .map(|e| e.sigma2)
            .collect();
        report("odd σ₂ set", format_set(&computed_odd), format_set(claimed_odd));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SigncalcError {
    #[error("additivity violated: {0}")]
    AdditivityViolation(Box<CompatibilityEntry>),
}

/// The full `8 × 8 × 2` grid, checking `σ = σ₁ + σ₂ mod 8` on every compatible entry.
pub fn additivity_scan() -> Result<Vec<CompatibilityEntry>, SigncalcError> {
    let mut grid = Vec::with_capacity(128);
    for mode in ProductMode::ALL {
        for sigma1 in 0..8 {
            for e in enumerate_compatible(sigma1, mode) {
                if e.compatible && e.sigma_product != Some((e.sigma1 + e.sigma2) % 8) {
                    return Err(SigncalcError::AdditivityViolation(Box::new(e)));
                }
                grid.push(e);
            }
        }
    }
    Ok(grid)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    /// Natural product of a Euclidean `σ₁ = 4` triple reaching `σ = 6`.
    Connes,
    /// Modified product of a Lorentzian `σ₁ ∈ {2, 6}` triple reaching `σ = 0`.
    Barrett,
}

impl std::str::FromStr for Scenario {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "connes" => Ok(Scenario::Connes),
            "barrett" => Ok(Scenario::Barrett),
            other => Err(format!("unknown scenario {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ScenarioFinding {
    pub sigma1: u8,
    /// Even `σ₂` whose product reaches the target signature and signs.
    pub sigma2: Vec<u8>,
    pub signs: Option<SignTriple>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ScenarioReport {
    pub scenario: Scenario,
    pub mode: ProductMode,
    pub target_sigma: u8,
    pub target_signs: SignTriple,
    pub findings: Vec<ScenarioFinding>,
}

impl ScenarioReport {
    /// The expected outcome: exactly one even `σ₂` for every first factor.
    pub fn unique_solutions(&self) -> bool {
        self.findings.iter().all(|f| f.sigma2.len() == 1)
    }
}

/// Searches even `σ₂` for the scenario's target signature and sign triple.
pub fn scenario_check(scenario: Scenario) -> ScenarioReport {
    let (mode, firsts, target_sigma) = match scenario {
        Scenario::Connes => (ProductMode::Natural, vec![4u8], 6u8),
        Scenario::Barrett => (ProductMode::Modified, vec![2, 6], 0),
    };
    let target_signs = table_signs(target_sigma);
    let findings = firsts
        .into_iter()
        .map(|sigma1| {
            let hits: Vec<CompatibilityEntry> = enumerate_compatible(sigma1, mode)
                .into_iter()
                .filter(|e| {
                    e.status == EntryStatus::Compatible
                        && e.sigma_product == Some(target_sigma)
                        && e.predicted == Some(target_signs)
                })
                .collect();
            ScenarioFinding {
                sigma1,
                sigma2: hits.iter().map(|e| e.sigma2).collect(),
                signs: hits.first().and_then(|e| e.predicted),
            }
        })
        .collect();
    ScenarioReport { scenario, mode, target_sigma, target_signs, findings }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compatible_set(sigma1: u8, mode: ProductMode, status: EntryStatus) -> Vec<u8> {
        enumerate_compatible(sigma1, mode)
            .into_iter()
            .filter(|e| e.status == status)
            .map(|e| e.sigma2)
            .collect()
    }

    #[test]
    fn natural_signature_zero() {
        assert_eq!(compatible_set(0, ProductMode::Natural, EntryStatus::Compatible), vec![0, 2, 4, 6]);
        assert_eq!(
            compatible_set(0, ProductMode::Natural, EntryStatus::CompatibleWithoutChirality),
            vec![1, 5]
        );
        for e in enumerate_compatible(0, ProductMode::Natural) {
            if e.compatible {
                assert_eq!(e.sigma_product, Some(e.sigma2));
            }
        }
    }

    #[test]
    fn natural_signature_two() {
        assert!(compatible_set(2, ProductMode::Natural, EntryStatus::Compatible).is_empty());
        assert_eq!(
            compatible_set(2, ProductMode::Natural, EntryStatus::CompatibleWithoutChirality),
            vec![3, 7]
        );
    }

    #[test]
    fn natural_signature_six_diverges_from_reference() {
        assert_eq!(
            compatible_set(6, ProductMode::Natural, EntryStatus::CompatibleWithoutChirality),
            vec![3, 7]
        );
        let d = discrepancies(6, ProductMode::Natural);
        let odd = d.iter().find(|d| d.topic == "odd σ₂ set").unwrap();
        assert_eq!(odd.computed, "{3,7}");
        assert_eq!(odd.reference, "{1,5}");
        assert!(d.iter().any(|d| d.topic == "ε line"));
    }

    #[test]
    fn modified_signature_six_all_even() {
        assert_eq!(compatible_set(6, ProductMode::Modified, EntryStatus::Compatible), vec![0, 2, 4, 6]);
        for e in enumerate_compatible(6, ProductMode::Modified) {
            if e.sigma2 % 2 == 1 {
                assert_eq!(e.status, EntryStatus::Undefined);
            }
        }
    }

    #[test]
    fn odd_first_factor_is_undefined() {
        assert!(enumerate_compatible(3, ProductMode::Natural)
            .iter()
            .all(|e| e.status == EntryStatus::Undefined && e.violated_relation.is_some()));
    }

    #[test]
    fn reference_agrees_where_expected() {
        for sigma1 in [0, 2, 4] {
            assert!(discrepancies(sigma1, ProductMode::Natural).is_empty(), "natural {sigma1}");
        }
        for sigma1 in [0, 4] {
            assert!(discrepancies(sigma1, ProductMode::Modified).is_empty(), "modified {sigma1}");
        }
        // The ε lines of the modified σ₁ = 2 and σ₁ = 6 cases carry the wrong sign.
        for sigma1 in [2, 6] {
            let d = discrepancies(sigma1, ProductMode::Modified);
            assert_eq!(d.len(), 1);
            assert_eq!(d[0].topic, "ε line");
        }
        assert!(discrepancies(3, ProductMode::Natural).is_empty());
    }

    #[test]
    fn scan_size_and_even_blocks() {
        let grid = additivity_scan().unwrap();
        assert_eq!(grid.len(), 128);
        for mode in ProductMode::ALL {
            let firsts: BTreeSet<u8> = grid
                .iter()
                .filter(|e| e.mode == mode && e.sigma1 % 2 == 0 && e.sigma2 % 2 == 0 && e.compatible)
                .map(|e| e.sigma1)
                .collect();
            let expected: BTreeSet<u8> = match mode {
                ProductMode::Natural => [0, 4].into(),
                ProductMode::Modified => [2, 6].into(),
            };
            assert_eq!(firsts, expected);
        }
    }

    #[test]
    fn scenarios() {
        let connes = scenario_check(Scenario::Connes);
        assert_eq!(connes.findings.len(), 1);
        assert_eq!(connes.findings[0].sigma2, vec![2]);
        assert!(connes.unique_solutions());

        let barrett = scenario_check(Scenario::Barrett);
        let pairs: Vec<(u8, Vec<u8>)> =
            barrett.findings.iter().map(|f| (f.sigma1, f.sigma2.clone())).collect();
        assert_eq!(pairs, vec![(2, vec![6]), (6, vec![2])]);
    }
}
