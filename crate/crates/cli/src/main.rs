use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use twocover::arrangement::{pipeline, ArrangementReport};
use twocover::battery::{run_trial, trial_seed, TrialResult};
use twocover::chain::{unit_reduce, HomologyProfile, RandomBounds};
use twocover::covers::{oracle_profiles, verify_theorem, CoverOutcome, OracleProfiles, PipelineReport};
use twocover::doc::{self, ComplexDoc};
use twocover::linalg::snf;
use twocover::Error;

#[derive(Parser)]
#[command(name = "twocover", version, about = "Integral homology of double covers and sign local systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form of an integer matrix `[[...], ...]`.
    Snf { path: PathBuf },
    /// Homology of a complex document; Laurent complexes are specialized at
    /// t = 1, t = -1 and on the double cover.
    Homology { path: PathBuf },
    /// Double cover homology of a minimal Laurent complex, by formula and directly.
    Cover { path: PathBuf },
    /// Salvetti complex pipeline for a line arrangement document.
    Arrangement { path: PathBuf },
    /// Seeded battery of random minimal and disguised complexes.
    Verify(VerifyArgs),
    /// Cancels unit entries of a Laurent complex and prints the result.
    Reduce { path: PathBuf },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: u64,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    max_rank: u64,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..))]
    coeff_bound: i64,
}

/// Failure of a command: a library error, an I/O error, or a check that ran
/// and came out false.
enum Failure {
    Lib(Error),
    Io(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

const EXIT_CHECK: u8 = 1;
const EXIT_IO: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 4,
        Error::ShapeMismatch(_) => 5,
        Error::CompositionNonzero { .. } => 6,
        Error::NotMinimal { .. } => 7,
        Error::OddEntry { .. } => 8,
        Error::ZeroOmega { .. } => 9,
        Error::ShapeViolation(_) => 10,
        Error::DuplicateLine { .. } => 11,
        Error::DegenerateLine(_) => 12,
        Error::EmptyOmega => 13,
        Error::OmegaIndex { .. } => 14,
    }
}

/// Collected output of a command, flushed even when the command fails.
struct Out {
    json: bool,
    text: String,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn value(&mut self, v: &Value) {
        self.text.push_str(&doc::render(v));
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { json: cli.json, text: String::new() };
    let result = run(&cli.command, &mut out);

    let written = match &cli.output {
        Some(p) => fs::write(p, &out.text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{}", out.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_IO);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Check(e)) => {
            eprintln!("check failed: {e}");
            ExitCode::from(EXIT_CHECK)
        }
    }
}

fn run(cmd: &Command, out: &mut Out) -> Result<(), Failure> {
    match cmd {
        Command::Snf { path } => cmd_snf(path, out),
        Command::Homology { path } => cmd_homology(path, out),
        Command::Cover { path } => cmd_cover(path, out),
        Command::Arrangement { path } => cmd_arrangement(path, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Reduce { path } => cmd_reduce(path, out),
    }
}

fn cmd_snf(path: &Path, out: &mut Out) -> Result<(), Failure> {
    let m = doc::parse_matrix(&read(path)?)?;
    let s = snf(&m);
    let ok = s.certifies(&m);
    if out.json {
        out.value(&doc::smith_json(&m, &s));
    } else {
        out.line(s.diag.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        out.line(format!("certificate: {}", if ok { "ok" } else { "FAILED" }));
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check("unimodular certificate does not reproduce the diagonal".into()))
    }
}

fn cmd_homology(path: &Path, out: &mut Out) -> Result<(), Failure> {
    match doc::parse_complex(&read(path)?)? {
        ComplexDoc::Int(c) => {
            let h = c.homology();
            if out.json {
                out.value(&json!({ "homology": doc::profile_json(&h) }));
            } else {
                out.line(format!("H_* = {h}"));
            }
        }
        ComplexDoc::Laurent(c) => {
            let p = oracle_profiles(&c);
            if out.json {
                out.value(&doc::oracle_json(&p));
            } else {
                oracle_text(&p, out);
            }
        }
    }
    Ok(())
}

fn require_laurent(d: ComplexDoc) -> Result<twocover::chain::EquivariantComplex, Failure> {
    match d {
        ComplexDoc::Laurent(c) => Ok(c),
        ComplexDoc::Int(_) => Err(Error::Parse("expected a complex with \"ring\": \"laurent\"".into()).into()),
    }
}

fn cmd_cover(path: &Path, out: &mut Out) -> Result<(), Failure> {
    let c = require_laurent(doc::parse_complex(&read(path)?)?)?;
    let report = match verify_theorem(&c) {
        Ok(r) => r,
        Err(e @ Error::NotMinimal { .. }) => {
            let p = oracle_profiles(&c);
            if out.json {
                out.value(&json!({ "status": "not_minimal", "oracle": doc::oracle_json(&p) }));
            } else {
                oracle_text(&p, out);
            }
            return Err(e.into());
        }
        Err(e) => return Err(e.into()),
    };
    if out.json {
        out.value(&doc::pipeline_report_json(&report));
    } else {
        report_text(&report, out);
    }
    if report.theorem_holds {
        Ok(())
    } else {
        Err(Failure::Check("formula and direct cover homology differ".into()))
    }
}

fn cmd_arrangement(path: &Path, out: &mut Out) -> Result<(), Failure> {
    let d = doc::parse_arrangement(&read(path)?)?;
    let report = pipeline(&d.arrangement, &d.omega)?;
    if out.json {
        out.value(&doc::arrangement_report_json(&report));
    } else {
        arrangement_text(&report, out);
    }
    if !report.betti_consistent() {
        return Err(Failure::Check("Salvetti homology differs from the combinatorial Betti numbers".into()));
    }
    match &report.outcome {
        CoverOutcome::Verified(r) if !r.theorem_holds => {
            Err(Failure::Check("formula and direct cover homology differ".into()))
        }
        _ => Ok(()),
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut Out) -> Result<(), Failure> {
    let bounds = RandomBounds {
        max_degree: args.max_degree as usize,
        max_rank: args.max_rank as usize,
        coeff_bound: args.coeff_bound,
    };
    let results: Vec<(u64, Result<TrialResult, Error>)> = (0..args.trials)
        .into_par_iter()
        .map(|i| (i, run_trial(trial_seed(args.seed, i), bounds)))
        .collect();

    let n = results.len();
    let count = |f: &dyn Fn(&TrialResult) -> bool| {
        results.iter().filter(|(_, r)| r.as_ref().is_ok_and(f)).count()
    };
    let theorem = count(&|r| r.theorem());
    let cor1 = count(&|r| r.corollary1());
    let cor2 = count(&|r| r.corollary2());
    let reduction = count(&|r| r.reduction);
    let h0 = count(&|r| r.h0_contract);
    let mod2 = count(&|r| r.report.mod2_consistent);
    let passed = count(&|r| r.passed());

    if out.json {
        let trials: Vec<Value> = results
            .iter()
            .map(|(i, r)| match r {
                Ok(t) => json!({
                    "index": i,
                    "seed": t.seed,
                    "ranks": t.ranks,
                    "h_cover": doc::profile_json(&t.report.h_cover_direct),
                    "theorem": t.theorem(),
                    "corollary1": t.corollary1(),
                    "corollary2": t.corollary2(),
                    "h0_contract": t.h0_contract,
                    "reduction": t.reduction,
                    "mod2": t.report.mod2_consistent,
                }),
                Err(e) => json!({ "index": i, "seed": trial_seed(args.seed, *i), "error": e.to_string() }),
            })
            .collect();
        out.value(&json!({
            "seed": args.seed,
            "trials": trials,
            "summary": {
                "trials": n, "passed": passed, "theorem": theorem, "corollary1": cor1,
                "corollary2": cor2, "reduction": reduction, "h0_contract": h0, "mod2": mod2,
            },
        }));
    } else {
        for (i, r) in &results {
            match r {
                Ok(t) => out.line(format!(
                    "trial {i}: seed {}, ranks {:?}, H_*(X^ω) = {}: {}",
                    t.seed,
                    t.ranks,
                    t.report.h_cover_direct,
                    if t.passed() { "pass" } else { "FAIL" }
                )),
                Err(e) => out.line(format!("trial {i}: seed {}: error: {e}", trial_seed(args.seed, *i))),
            }
        }
        out.line(format!("{reduction}/{n} reduction, {h0}/{n} H_0 contract, {mod2}/{n} mod 2"));
        out.line(format!("{theorem}/{n} theorem, {cor1}/{n} corollary1, {cor2}/{n} corollary2"));
    }
    if passed == n {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} of {n} trials failed", n - passed)))
    }
}

fn cmd_reduce(path: &Path, out: &mut Out) -> Result<(), Failure> {
    let c = require_laurent(doc::parse_complex(&read(path)?)?)?;
    let reduced = unit_reduce(&c);
    out.value(&doc::complex_to_json(&ComplexDoc::Laurent(reduced.clone())));
    eprintln!(
        "ranks {:?} -> {:?}, minimal: {}",
        c.ranks(),
        reduced.ranks(),
        if reduced.is_minimal() { "yes" } else { "no" }
    );
    Ok(())
}

fn degrees(label: &str, h: &HomologyProfile, out: &mut Out) {
    out.line(format!("{label:<22}{h}"));
}

fn oracle_text(p: &OracleProfiles, out: &mut Out) {
    degrees("H_*(X, Z)", &p.h_base, out);
    degrees("H_*(X, L_ω)", &p.h_local, out);
    degrees("H_*(X^ω, Z)", &p.h_cover_direct, out);
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn report_text(r: &PipelineReport, out: &mut Out) {
    degrees("H_*(X, Z)", &r.h_base, out);
    degrees("H_*(X, L_ω)", &r.h_local, out);
    degrees("H_*(E, α/2)", &r.h_halved, out);
    degrees("H_*(X^ω, Z) formula", &r.h_cover_formula, out);
    degrees("H_*(X^ω, Z) direct", &r.h_cover_direct, out);
    let mut s = String::new();
    for (i, g) in r.h_cover_direct.groups.iter().enumerate() {
        let _ = writeln!(s, "H_{i}(X^ω, Z) = {g}");
    }
    out.text.push_str(&s);
    out.line(format!("theorem holds: {}", yes(r.theorem_holds)));
    out.line(format!("torsion matches: {}", yes(r.torsion_matches)));
    out.line(format!(
        "corollary 1: {}",
        match r.corollary1_consistent {
            Some(b) => yes(b),
            None => "not applicable",
        }
    ));
    out.line(format!("corollary 2: {}", yes(r.corollary2_consistent)));
    out.line(format!("mod 2 dimensions: {}", yes(r.mod2_consistent)));
}

fn arrangement_text(r: &ArrangementReport, out: &mut Out) {
    let lines: Vec<String> = r.lines.iter().map(ToString::to_string).collect();
    out.line(format!("lines: {}", lines.join(", ")));
    out.line(format!("omega: {:?}", r.omega));
    let [c0, c1, c2] = r.salvetti_cells;
    out.line(format!("Salvetti cells: {c0}, {c1}, {c2}"));
    let (b0, b1, b2) = r.combinatorial_betti;
    out.line(format!(
        "Betti numbers: combinatorial ({b0}, {b1}, {b2}), Salvetti {}: {}",
        r.salvetti_homology,
        if r.betti_consistent() { "consistent" } else { "MISMATCH" }
    ));
    out.line(format!("reduced ranks: {:?}", r.reduced_ranks));
    match &r.outcome {
        CoverOutcome::Verified(p) => report_text(p, out),
        CoverOutcome::NonMinimalResidue(p) => {
            out.line("reduction did not reach a minimal complex; oracle side only");
            oracle_text(p, out);
        }
    }
}
