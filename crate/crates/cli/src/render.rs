//! Plain-text rendering. Everything here only formats values computed by the core.

use std::fmt::Write;

use ko_triples::products::{GridCell, MatrixOutcome, Prediction, ProductMode};
use ko_triples::signcalc::{
    CompatibilityEntry, Discrepancy, EntryStatus, ScenarioReport, SigncalcError,
};
use ko_triples::triple::{DiracMode, Sign, TableCell, TableRowCheck};

pub fn pm(sign: i8) -> &'static str {
    if sign > 0 {
        "+1"
    } else {
        "−1"
    }
}

fn sign(s: Sign) -> &'static str {
    pm(s.value())
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

pub fn dirac_label(mode: DiracMode) -> &'static str {
    match mode {
        DiracMode::Zero => "0",
        DiracMode::Gamma1 => "Γ¹",
    }
}

fn table_cell(c: &TableCell) -> String {
    match (c.stored, c.measured) {
        (None, None) => String::new(),
        (Some(s), None) => format!("{} ·", sign(s)),
        (Some(s), Some(m)) if s == m => format!("{} ✓", sign(s)),
        (s, Some(m)) => format!("{} ✗ measured {}", s.map_or("none", sign), sign(m)),
    }
}

pub fn epsilon_table(rows: &[TableRowCheck]) -> String {
    let mut out = String::new();
    writeln!(out, "{:<3} {:<6} {:<6} {:<6} source", "σ", "ε", "ε′", "ε″").unwrap();
    for r in rows {
        let cells: Vec<String> = r.cells.iter().map(table_cell).collect();
        let source = match r.representative {
            Some((p, q)) => format!("Cl({p},{q})"),
            None => "stored".to_string(),
        };
        writeln!(out, "{:<3} {:<6} {:<6} {:<6} {source}", r.sigma, cells[0], cells[1], cells[2]).unwrap();
    }
    out.push_str("✓ measured on the canonical triple and equal to the table; · stored value\n");
    out
}

fn set(values: impl Iterator<Item = u8>) -> String {
    let parts: Vec<String> = values.map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn enumeration(
    sigma1: u8,
    mode: ProductMode,
    entries: &[CompatibilityEntry],
    notes: &[Discrepancy],
) -> String {
    let mut out = String::new();
    writeln!(out, "σ₁ = {sigma1}, {mode} product").unwrap();
    for e in entries {
        writeln!(out, "  {e}").unwrap();
    }
    let with = |status: EntryStatus| set(entries.iter().filter(|e| e.status == status).map(|e| e.sigma2));
    writeln!(out, "compatible even σ₂: {}", with(EntryStatus::Compatible)).unwrap();
    writeln!(out, "compatible odd σ₂ (no chirality): {}", with(EntryStatus::CompatibleWithoutChirality)).unwrap();
    for n in notes {
        writeln!(out, "{n}").unwrap();
    }
    out
}

fn cell_line(c: &GridCell) -> String {
    let v = &c.verification;
    let predicted = match &v.predicted {
        Prediction::Compatible { signs } => signs.to_string(),
        Prediction::Incompatible { .. } => "incompatible".to_string(),
    };
    let measured = match &v.matrix {
        MatrixOutcome::Signs { signs } => format!("{signs}, σ = {}", opt(v.product_sigma)),
        MatrixOutcome::Indefinite { relation, witness } => {
            format!("indefinite {relation}{}", if witness.is_some() { " (witness)" } else { "" })
        }
    };
    format!(
        "Cl({},{}) ⊗ Cl({},{}) {}: predicted {predicted}; matrices {measured}; {:?}",
        c.factor1.0, c.factor1.1, c.factor2.0, c.factor2.1, v.mode, v.agreement
    )
}

pub fn scenario(report: &ScenarioReport, witnesses: &[GridCell]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:?}: {} product, target σ = {}, signs {}",
        report.scenario, report.mode, report.target_sigma, report.target_signs
    )
    .unwrap();
    for f in &report.findings {
        let sigma2 = if f.sigma2.len() == 1 { f.sigma2[0].to_string() } else { set(f.sigma2.iter().copied()) };
        writeln!(out, "  σ₁ = {} → σ₂ = {sigma2}, signs {}", f.sigma1, opt(f.signs)).unwrap();
    }
    writeln!(out, "unique: {}", if report.unique_solutions() { "yes" } else { "no" }).unwrap();
    for c in witnesses {
        writeln!(out, "matrix check: {}", cell_line(c)).unwrap();
    }
    out
}

pub fn scan(
    additivity: &Result<Vec<CompatibilityEntry>, SigncalcError>,
    grid: &[GridCell],
    matches: &[bool],
) -> String {
    let mut out = String::new();
    match additivity {
        Ok(entries) => writeln!(
            out,
            "additivity: σ = σ₁ + σ₂ mod 8 on all {} compatible of {} entries",
            entries.iter().filter(|e| e.compatible).count(),
            entries.len()
        )
        .unwrap(),
        Err(e) => writeln!(out, "additivity FAILED: {e}").unwrap(),
    }
    for (c, &m) in grid.iter().zip(matches) {
        writeln!(out, "[{}] {}", if m { "ok" } else { "MISMATCH" }, cell_line(c)).unwrap();
    }
    let bad = matches.iter().filter(|&&m| !m).count();
    writeln!(out, "agreement grid: {} cells, {bad} mismatches", grid.len()).unwrap();
    out
}
