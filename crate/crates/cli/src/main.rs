use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ko_triples::clifford::{self, classify_algebra, volume_square_sign};
use ko_triples::io::{parse_triple, serialize_triple};
use ko_triples::products::{self, ProductMode};
use ko_triples::signcalc::{self, Scenario};
use ko_triples::triple::{
    self, extract_signs, ko_from_signs, restrict_majorana_weyl, twist_real_structure, validate_triple,
    DiracMode, FiniteSpectralTriple,
};

mod render;

/// Largest `p + q` for which `classify` squares the volume element on matrices.
const MATRIX_THETA_MAX_N: u32 = 8;

#[derive(Parser)]
#[command(name = "ko-triples", version, about = "Exact Clifford algebras and finite real spectral triples")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiracArg {
    Zero,
    Gamma1,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Natural,
    Modified,
}

impl From<ModeArg> for ProductMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Natural => ProductMode::Natural,
            ModeArg::Modified => ProductMode::Modified,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Connes,
    Barrett,
}

#[derive(Subcommand)]
enum Command {
    /// Isomorphism type of Cl(p,q), its signature and the sign of Θ².
    Classify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
    },
    /// The (ε, ε′, ε″) table, with even rows re-measured on canonical triples.
    EpsilonTable,
    /// Writes the canonical triple of Cl(p,q).
    MakeTriple {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum, default_value = "gamma1")]
        dirac: DiracArg,
        /// Output file; the document goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Axiom report and KO-dimension of a triple file.
    Validate { file: PathBuf },
    /// Builds and verifies the product of two triple files.
    Product {
        #[arg(long, value_enum)]
        mode: ModeArg,
        t1: PathBuf,
        t2: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sign-calculus compatibility of σ₁ against every σ₂.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..8))]
        sigma1: u8,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Checks the Connes or Barrett signature scenario.
    Scenario {
        #[arg(long, value_enum)]
        name: ScenarioArg,
    },
    /// Replaces J by JΩ.
    Twist {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Real dimensions of the Majorana–Weyl restriction.
    Restrict { file: PathBuf },
    /// Additivity over all signatures and calculus/matrix agreement over representatives.
    Scan {
        /// Largest p + q among the matrix representatives.
        #[arg(long, default_value_t = 4)]
        max_n: u32,
    },
}

/// What a subcommand produced: text and JSON renderings and whether the mathematics checked out.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, ok: true }
    }
}

enum Failure {
    /// Bad input: unreadable or malformed files, unsupported parameters.
    Input(String),
    /// The input is fine but the requested construction does not exist.
    Math(String),
}

type Outcome = Result<Report, Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn math<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Math(e.to_string())
}

fn read_triple(path: &Path) -> Result<FiniteSpectralTriple, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_triple(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_triple(path: &Path, t: &FiniteSpectralTriple) -> Result<(), Failure> {
    fs::write(path, serialize_triple(t)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn classify(p: u32, q: u32) -> Outcome {
    let class = classify_algebra(p, q);
    let sigma = clifford::signature(p, q);
    let n = p + q;
    let (theta_sq, source) = if n.is_multiple_of(2) && (2..=MATRIX_THETA_MAX_N).contains(&n) {
        let rep = clifford::build_gammas(p, q).map_err(input)?;
        let theta = clifford::volume_element(&rep);
        let sq = (&theta * &theta)
            .as_signed_identity()
            .ok_or_else(|| Failure::Math("Θ² is not a multiple of the identity".into()))?;
        (sq, "matrix")
    } else {
        (volume_square_sign(p, q), "formula")
    };
    let mut text = format!("{class}, σ={sigma}, Θ²={}\n", render::pm(theta_sq));
    text.push_str(&format!("real dimension: {}\n", class.real_dimension()));
    text.push_str(&format!("unitary group: {}\n", class.unitary_group_label));
    if let Some(c) = &class.identity_component {
        text.push_str(&format!("identity component: {c}\n"));
    }
    let json = json!({
        "p": p,
        "q": q,
        "algebra": class.to_string(),
        "class": class,
        "real_dimension": class.real_dimension(),
        "sigma": sigma,
        "theta_squared": theta_sq,
        "theta_squared_source": source,
    });
    Ok(Report::ok(text, json))
}

fn epsilon_table() -> Outcome {
    let rows = triple::reproduce_epsilon_table().map_err(math)?;
    let ok = rows.iter().all(|r| r.cells.iter().all(|c| c.consistent()));
    Ok(Report { text: render::epsilon_table(&rows), json: json!({ "rows": rows, "consistent": ok }), ok })
}

fn make_triple(p: u32, q: u32, dirac: DiracArg, out: Option<&Path>) -> Outcome {
    let mode = match dirac {
        DiracArg::Zero => DiracMode::Zero,
        DiracArg::Gamma1 => DiracMode::Gamma1,
    };
    let t = triple::canonical_triple(p, q, mode).map_err(input)?;
    let Some(out) = out else {
        let doc: Value = serde_json::from_slice(&serialize_triple(&t)).expect("serializer emits JSON");
        let text = String::from_utf8(serialize_triple(&t)).expect("serializer emits UTF-8");
        return Ok(Report::ok(text, doc));
    };
    write_triple(out, &t)?;
    let signs = extract_signs(&t).map_err(math)?;
    let sigma = ko_from_signs(&signs, t.parity()).ok();
    let text = format!(
        "Cl({p},{q}), D = {}: dim {}, signs {signs}, KO-dimension {}\nwrote {}\n",
        render::dirac_label(mode),
        t.dim(),
        render::opt(sigma),
        out.display()
    );
    let json = json!({ "p": p, "q": q, "dirac": mode, "dim": t.dim(), "signs": signs, "ko_dimension": sigma, "out": out });
    Ok(Report::ok(text, json))
}

fn validate(path: &Path) -> Outcome {
    let t = read_triple(path)?;
    let report = validate_triple(&t);
    let signs = extract_signs(&t);
    let ko = signs.as_ref().map_err(Clone::clone).and_then(|s| ko_from_signs(s, t.parity()));
    let mut text = report.to_string();
    match &signs {
        Ok(s) => text.push_str(&format!("signs: {s}\n")),
        Err(e) => text.push_str(&format!("signs: {e}\n")),
    }
    match &ko {
        Ok(k) => text.push_str(&format!("KO-dimension: {k}\n")),
        Err(e) => text.push_str(&format!("KO-dimension: none ({e})\n")),
    }
    let ok = report.passed();
    text.push_str(if ok { "valid\n" } else { "INVALID\n" });
    let json = json!({
        "file": path,
        "valid": ok,
        "report": report,
        "signs": signs.as_ref().ok(),
        "signs_error": signs.as_ref().err().map(ToString::to_string),
        "ko_dimension": ko.as_ref().ok(),
        "ko_error": ko.as_ref().err().map(ToString::to_string),
    });
    Ok(Report { text, json, ok })
}

fn product(mode: ProductMode, p1: &Path, p2: &Path, out: Option<&Path>) -> Outcome {
    let t1 = read_triple(p1)?;
    let t2 = read_triple(p2)?;
    let verification = products::verify_product(&t1, &t2, mode).map_err(math)?;
    let built = products::product_triple(&t1, &t2, mode).map_err(math)?;
    if let Some(out) = out {
        write_triple(out, &built)?;
    }
    let ok = verification.consistent() && verification.product_valid;
    let mut text = verification.to_string();
    text.push_str(&format!(
        "product triple: dim {}, {}\n",
        built.dim(),
        if verification.product_valid { "valid" } else { "not a valid real spectral triple" }
    ));
    if let Some(out) = out {
        text.push_str(&format!("wrote {}\n", out.display()));
    }
    Ok(Report { text, json: json!({ "verification": verification, "dim": built.dim(), "out": out }), ok })
}

fn enumerate(sigma1: u8, mode: ProductMode) -> Outcome {
    let entries = signcalc::enumerate_compatible(sigma1, mode);
    let notes = signcalc::discrepancies(sigma1, mode);
    let text = render::enumeration(sigma1, mode, &entries, &notes);
    let notes_text: Vec<String> = notes.iter().map(ToString::to_string).collect();
    Ok(Report::ok(text, json!({ "entries": entries, "discrepancies": notes, "annotations": notes_text })))
}

fn scenario(name: ScenarioArg) -> Outcome {
    let scenario = match name {
        ScenarioArg::Connes => Scenario::Connes,
        ScenarioArg::Barrett => Scenario::Barrett,
    };
    let report = signcalc::scenario_check(scenario);
    let witnesses = products::scenario_witnesses(scenario).map_err(math)?;
    let ok = report.unique_solutions() && witnesses.iter().all(|c| c.matches_calculus());
    Ok(Report {
        text: render::scenario(&report, &witnesses),
        json: json!({ "report": report, "matrix_checks": witnesses, "unique": report.unique_solutions(), "consistent": ok }),
        ok,
    })
}

fn twist(path: &Path, out: Option<&Path>) -> Outcome {
    let t = read_triple(path)?;
    let twisted = twist_real_structure(&t).map_err(math)?;
    if let Some(out) = out {
        write_triple(out, &twisted)?;
    }
    let describe = |t: &FiniteSpectralTriple| match extract_signs(t) {
        Ok(s) => {
            let ko = ko_from_signs(&s, t.parity());
            let ko_text = match &ko {
                Ok(k) => k.to_string(),
                Err(e) => format!("none ({e})"),
            };
            (format!("signs {s}, KO-dimension {ko_text}"), json!({ "signs": s, "ko_dimension": ko.ok() }))
        }
        Err(e) => (e.to_string(), json!({ "error": e.to_string() })),
    };
    let (before, before_json) = describe(&t);
    let (after, after_json) = describe(&twisted);
    let mut text = format!("before: {before}\nafter:  {after}\n");
    if let Some(out) = out {
        text.push_str(&format!("wrote {}\n", out.display()));
    }
    Ok(Report::ok(text, json!({ "before": before_json, "after": after_json, "out": out })))
}

fn restrict(path: &Path) -> Outcome {
    let t = read_triple(path)?;
    let mw = restrict_majorana_weyl(&t).map_err(math)?;
    let text = format!(
        "complex dimension: {}\nreal dimension of {{Jv = v}}: {}\nreal dimension of {{Jv = v, Ωv = v}}: {}\n",
        t.dim(),
        mw.fixed_dim,
        mw.chiral_fixed_dim
    );
    Ok(Report::ok(text, json!({ "dim": t.dim(), "restriction": mw })))
}

fn scan(max_n: u32) -> Outcome {
    if max_n > clifford::MAX_GENERATORS / 2 {
        return Err(Failure::Input(format!("--max-n {max_n} is too large for an exact product scan")));
    }
    let additivity = signcalc::additivity_scan();
    let grid = products::agreement_grid(max_n);
    let matches: Vec<bool> = grid.iter().map(|c| c.matches_calculus()).collect();
    let ok = additivity.is_ok() && matches.iter().all(|&m| m);
    let text = render::scan(&additivity, &grid, &matches);
    let json = json!({
        "additivity": match &additivity {
            Ok(entries) => json!({ "entries": entries.len(), "compatible": entries.iter().filter(|e| e.compatible).count(), "holds": true }),
            Err(e) => json!({ "holds": false, "error": e.to_string() }),
        },
        "grid": grid.iter().zip(&matches).map(|(c, m)| json!({ "cell": c, "matches_calculus": m })).collect::<Vec<_>>(),
        "consistent": ok,
    });
    Ok(Report { text, json, ok })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Classify { p, q } => classify(*p, *q),
        Command::EpsilonTable => epsilon_table(),
        Command::MakeTriple { p, q, dirac, out } => make_triple(*p, *q, *dirac, out.as_deref()),
        Command::Validate { file } => validate(file),
        Command::Product { mode, t1, t2, out } => product((*mode).into(), t1, t2, out.as_deref()),
        Command::Enumerate { sigma1, mode } => enumerate(*sigma1, (*mode).into()),
        Command::Scenario { name } => scenario(*name),
        Command::Twist { file, out } => twist(file, out.as_deref()),
        Command::Restrict { file } => restrict(file),
        Command::Scan { max_n } => scan(*max_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("report is serializable"));
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("ko-triples: mathematical check failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Math(msg)) => {
            eprintln!("ko-triples: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("ko-triples: {msg}");
            ExitCode::from(2)
        }
    }
}
