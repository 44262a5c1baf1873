//! `knotlat`: exact knot-signature and lattice-embedding computations.
//!
//! Exit codes: 0 success, 2 invalid input, 3 internal-consistency failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use knotlat::algebra::AlgebraError;
use knotlat::knfamily::{
    self, build_omega_sequence, find_l0, independence_certificate, lemma_dichotomy_grid, monotonicity_window, sigma_bar,
    KnError, KnotCombo, OmegaSequence, WindowEnd, WindowKind,
};
use knotlat::lattice::{embed, FormSign, IntegralLattice, LatticeError};
use knotlat::lens::{cf_expand, obstruct, LensError, LensSum, ObstructionStatus};
use knotlat::seifert::{self, SeifertError, SeifertMatrix};
use knotlat::{CirclePoint, IntMatrix, Rational};

#[derive(Parser)]
#[command(name = "knotlat", version, about = "Exact knot signatures, the K_n family, and lattice embedding obstructions")]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,
    /// Emit tab-separated rows (tabular commands only).
    #[arg(long, global = true)]
    tsv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial of a Seifert matrix file (JSON array of rows).
    Alexander { file: PathBuf },
    /// Knot determinant |det(S + S^T)|.
    Det { file: PathBuf },
    /// Tristram–Levine signature at omega(u); U is a rational or `inf`.
    Sigma {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        omega: CirclePoint,
    },
    /// Signature as a step function of u, breakpoints refined to width 1/R.
    Profile {
        file: PathBuf,
        #[arg(long, default_value_t = 1000)]
        resolution: u64,
        /// Also print approximate breakpoint angles in degrees.
        #[arg(long)]
        degrees: bool,
    },
    /// The family K_n.
    #[command(subcommand)]
    Kn(KnCommand),
    /// Lens spaces and their plumbing lattices.
    #[command(subcommand)]
    Lens(LensCommand),
    /// Integral lattices given as JSON Gram matrices.
    #[command(subcommand)]
    Lattice(LatticeCommand),
}

#[derive(Subcommand)]
enum KnCommand {
    /// The 14x14 Seifert matrix S_N.
    Matrix { n: u64 },
    /// Check the skein identity for 0 <= n <= MAX.
    Skein {
        #[arg(long)]
        max: u64,
    },
    /// Signature dichotomy grid for l0 < l, m <= LMAX (default l0 + 8).
    Grid {
        #[arg(long)]
        lmax: Option<u64>,
    },
    /// Truncated signature vector of a combination such as `J5 - J4`.
    Sigmabar {
        #[arg(long, allow_hyphen_values = true)]
        combo: String,
        /// Number of coordinates (default 8).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Witness that a combination of K_l, l > l0, is not slice.
    Independence {
        #[arg(long, allow_hyphen_values = true)]
        combo: String,
        #[arg(long)]
        lmax: Option<u64>,
    },
}

#[derive(Subcommand)]
enum LensCommand {
    /// Continued fraction p/q = [a1, ..., an]^- with ai >= 2.
    Cf { p: u64, q: u64 },
    /// Plumbing lattice of a sum like "L(7,2) # L(3,1)".
    Lattice { sum: String },
    /// Embedding obstruction for the sum and its dual.
    Obstruct { sum: String },
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Search for an embedding into (Z^N, sign I).
    Embed {
        file: PathBuf,
        /// Ambient rank N.
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        sign: FormSign,
    },
    /// Is the lattice isomorphic to (Z^n, +-I)?
    Standard { file: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<SeifertError> for Failure {
    fn from(e: SeifertError) -> Self {
        match e {
            SeifertError::NotSquare { .. } | SeifertError::OddSize(_) | SeifertError::NotUnimodular(_) | SeifertError::OmegaIsOne => {
                Failure::input(e.to_string())
            }
            _ => Failure::internal(e.to_string()),
        }
    }
}

impl From<KnError> for Failure {
    fn from(e: KnError) -> Self {
        match e {
            KnError::Seifert(inner) => inner.into(),
            KnError::OmegaIsOne
            | KnError::LmaxTooSmall { .. }
            | KnError::MissingOmega(_)
            | KnError::ZeroCombination
            | KnError::IndexNotAboveL0 { .. }
            | KnError::MalformedCombo(_)
            | KnError::NoNonvanishingBaseline(_) => Failure::input(e.to_string()),
            _ => Failure::internal(e.to_string()),
        }
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<LensError> for Failure {
    fn from(e: LensError) -> Self {
        match e {
            LensError::OrderMismatch { .. } => Failure::internal(e.to_string()),
            _ => Failure::input(e.to_string()),
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::internal(e.to_string())
    }
}

/// One result in all three renderings.
struct Report {
    json: Value,
    text: String,
    tsv: Option<String>,
}

impl Report {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Report { json, text: text.into(), tsv: None }
    }

    fn with_tsv(mut self, tsv: String) -> Self {
        self.tsv = Some(tsv);
        self
    }
}

fn rat_str(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn read_matrix(path: &Path) -> Result<Vec<Vec<i64>>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: expected a JSON array of integer rows: {e}", path.display())))
}

fn read_seifert(path: &Path) -> Result<SeifertMatrix, Failure> {
    Ok(SeifertMatrix::from_rows(read_matrix(path)?)?)
}

fn read_lattice(path: &Path) -> Result<IntegralLattice, Failure> {
    Ok(IntegralLattice::from_rows(read_matrix(path)?)?)
}

fn rows_text(rows: &[Vec<i64>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn rows_tsv(rows: &[Vec<i64>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join("\t"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn matrix_report(m: &IntMatrix) -> Report {
    let rows = m.to_rows();
    Report::new(json!(rows), rows_text(&rows)).with_tsv(rows_tsv(&rows))
}

fn run(cli: Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Alexander { file } => {
            let d = seifert::alexander(&read_seifert(&file)?);
            let terms: serde_json::Map<String, Value> = d.terms().map(|(e, c)| (e.to_string(), rat_str(c))).collect();
            Ok(Report::new(json!({ "polynomial": d.to_string(), "terms": terms }), d.to_string()))
        }
        Command::Det { file } => {
            let d = seifert::knot_determinant(&read_seifert(&file)?)?;
            Ok(Report::new(json!({ "determinant": d.to_string() }), d.to_string()))
        }
        Command::Sigma { file, omega } => {
            let v = seifert::sigma(&read_seifert(&file)?, &omega)?;
            let text = format!("{}{}", v.value, if v.singular { " (averaged at a singular point)" } else { "" });
            Ok(Report::new(
                json!({ "omega": omega.to_string(), "sigma": rat_str(&v.value), "nullity": v.nullity, "singular": v.singular }),
                text,
            ))
        }
        Command::Profile { file, resolution, degrees } => profile(&file, resolution, degrees),
        Command::Kn(cmd) => kn(cmd),
        Command::Lens(cmd) => lens(cmd),
        Command::Lattice(cmd) => lattice(cmd),
    }
}

fn profile(file: &Path, resolution: u64, degrees: bool) -> Result<Report, Failure> {
    if resolution == 0 {
        return Err(Failure::input("--resolution must be positive"));
    }
    let s = read_seifert(file)?;
    let width = Rational::new(1.into(), resolution.into());
    let p = seifert::signature_profile(&s, &width)?;
    let bound = |k: usize, upper: bool| -> Value {
        let idx = if upper { Some(k) } else { k.checked_sub(1) };
        match idx.and_then(|i| p.breakpoints.get(i)) {
            Some(b) => json!([rat_str(b.parameter.lo()), rat_str(b.parameter.hi())]),
            None => Value::String(if upper { "+inf" } else { "-inf" }.into()),
        }
    };
    let breakpoints: Vec<Value> = p
        .breakpoints
        .iter()
        .map(|b| {
            let mut v = json!({
                "u_lo": rat_str(b.parameter.lo()),
                "u_hi": rat_str(b.parameter.hi()),
                "sigma_at": rat_str(&b.sigma),
            });
            if degrees {
                v["approx_degrees"] = json!(approx_degrees(b.parameter.approx()));
            }
            v
        })
        .collect();
    let segments: Vec<Value> = p
        .sigmas
        .iter()
        .enumerate()
        .map(|(k, s)| json!({ "from": bound(k, false), "to": bound(k, true), "sigma": s }))
        .collect();
    let mut text = String::new();
    let mut tsv = String::from("u_from_lo\tu_from_hi\tu_to_lo\tu_to_hi\tsigma");
    for (k, s) in p.sigmas.iter().enumerate() {
        let edge = |v: Value| match v {
            Value::Array(a) => format!("{}\t{}", a[0].as_str().unwrap(), a[1].as_str().unwrap()),
            Value::String(s) => format!("{s}\t{s}"),
            _ => unreachable!(),
        };
        let _ = write!(tsv, "\n{}\t{}\t{s}", edge(bound(k, false)), edge(bound(k, true)));
        let _ = writeln!(text, "sigma = {s}");
        if let Some(b) = p.breakpoints.get(k) {
            let _ = write!(text, "  jump at u in ({}, {})", b.parameter.lo(), b.parameter.hi());
            if degrees {
                let _ = write!(text, ", approx {:.4} deg", approx_degrees(b.parameter.approx()));
            }
            text.push('\n');
        }
    }
    Ok(Report::new(json!({ "breakpoints": breakpoints, "segments": segments }), text.trim_end()).with_tsv(tsv))
}

fn approx_degrees(u: f64) -> f64 {
    (2.0 * u.atan()).to_degrees()
}

fn sequence_for(lmax: Option<u64>) -> Result<OmegaSequence, Failure> {
    let l_max = match lmax {
        Some(l) => l,
        None => find_l0(&monotonicity_window()?)? + 8,
    };
    Ok(build_omega_sequence(l_max)?)
}

fn window_json(seq: &OmegaSequence) -> Value {
    let w = &seq.window;
    let (lo, hi) = w.end_bracket();
    let kind = match w.kind {
        WindowKind::Pole => "pole",
        WindowKind::Critical => "critical",
        WindowKind::Whole => "whole",
    };
    let exact = matches!(w.end, WindowEnd::Exact(_));
    json!({
        "variable": "cos t",
        "from": "-1",
        "end": { "lo": rat_str(&lo), "hi": rat_str(&hi), "exact": exact },
        "kind": kind,
        "approx_epsilon": w.approx_epsilon(),
    })
}

fn omegas_json(seq: &OmegaSequence) -> Vec<Value> {
    (seq.l0 + 1..=seq.l_max)
        .filter_map(|l| seq.omega(l).ok().map(|w| json!({ "l": l, "u": w.to_string(), "approx_angle": w.approx_angle() })))
        .collect()
}

fn kn(cmd: KnCommand) -> Result<Report, Failure> {
    match cmd {
        KnCommand::Matrix { n } => Ok(matrix_report(knfamily::seifert_kn(n).matrix())),
        KnCommand::Skein { max } => {
            if max < 1 {
                return Err(Failure::input("--max must be at least 1"));
            }
            let r = knfamily::skein_check(max);
            let mut v = json!({ "ok": r.ok, "checked": r.checked });
            if let Some(n) = r.first_failure {
                v["first_failure"] = json!(n);
            }
            let text = match r.first_failure {
                None => format!("skein identity holds for 0 <= n <= {max}"),
                Some(n) => format!("skein identity FAILS at n = {n}"),
            };
            if !r.ok {
                return Err(Failure::internal(text));
            }
            Ok(Report::new(v, text))
        }
        KnCommand::Grid { lmax } => {
            let seq = sequence_for(lmax)?;
            let range = seq.l0 + 1..=seq.l_max;
            let grid = lemma_dichotomy_grid(&seq, range.clone(), range)?;
            let cells: Vec<Value> = grid
                .cells
                .iter()
                .map(|c| json!({ "l": c.l, "m": c.m, "F_sign": c.f_sign, "sigma_diff": c.sigma_diff, "sigma_k0": c.sigma_k0 }))
                .collect();
            let jumps: serde_json::Map<String, Value> = grid.jump_signs.iter().map(|(m, s)| (m.to_string(), json!(s))).collect();
            let mut tsv = String::from("l\tm\tF_sign\tsigma_diff\tsigma_k0");
            let mut text = format!("l0 = {}\nrows l, columns m = {}..={}; entries sigma(K_m) - sigma(K_0)\n", seq.l0, seq.l0 + 1, seq.l_max);
            for c in &grid.cells {
                let _ = write!(tsv, "\n{}\t{}\t{}\t{}\t{}", c.l, c.m, c.f_sign, c.sigma_diff, c.sigma_k0);
            }
            for l in seq.l0 + 1..=seq.l_max {
                let row: Vec<String> = grid.cells.iter().filter(|c| c.l == l).map(|c| format!("{:>3}", c.sigma_diff)).collect();
                let _ = writeln!(text, "l = {l:>3}: {}", row.join(" "));
            }
            let v = json!({
                "l0": seq.l0,
                "window": window_json(&seq),
                "omegas": omegas_json(&seq),
                "cells": cells,
                "jump_signs": jumps,
            });
            Ok(Report::new(v, text.trim_end()).with_tsv(tsv))
        }
        KnCommand::Sigmabar { combo, k } => {
            let combo: KnotCombo = combo.parse()?;
            let k = k.unwrap_or(8);
            if k == 0 {
                return Err(Failure::input("--k must be positive"));
            }
            let l0 = find_l0(&monotonicity_window()?)?;
            let seq = build_omega_sequence(l0 + k as u64)?;
            let v = sigma_bar(&combo, &seq, k)?;
            let text = format!("{:?}", v);
            let tsv = v.iter().enumerate().fold(String::from("j\tl\thalf_sigma"), |mut acc, (j, x)| {
                let _ = write!(acc, "\n{}\t{}\t{x}", j + 1, seq.l0 + 1 + j as u64);
                acc
            });
            Ok(Report::new(json!({ "combo": combo.to_string(), "l0": seq.l0, "sigma_bar": v }), text).with_tsv(tsv))
        }
        KnCommand::Independence { combo, lmax } => {
            let combo: KnotCombo = combo.parse()?;
            let seq = sequence_for(lmax)?;
            let w = independence_certificate(&combo, &seq)?;
            let text = format!("sigma at omega_{} (u = {}) is {}", w.l, w.omega, w.sigma);
            Ok(Report::new(
                json!({ "combo": combo.to_string(), "l0": seq.l0, "l": w.l, "omega": w.omega.to_string(), "sigma": w.sigma }),
                text,
            ))
        }
    }
}

fn lens(cmd: LensCommand) -> Result<Report, Failure> {
    match cmd {
        LensCommand::Cf { p, q } => {
            let a = cf_expand(p, q)?;
            let text = format!("{a:?}");
            Ok(Report::new(json!(a), text))
        }
        LensCommand::Lattice { sum } => {
            let s: LensSum = sum.parse()?;
            let l = s.plumbing_lattice();
            let mut r = matrix_report(l.gram());
            r.json = json!({ "sum": s.to_string(), "gram": l.gram().to_rows(), "h1_order": s.h1_order()?.to_string() });
            Ok(r)
        }
        LensCommand::Obstruct { sum } => {
            let s: LensSum = sum.parse()?;
            let v = obstruct(&s);
            let (json, text) = match &v.status {
                ObstructionStatus::Obstructed { failed_side, failed_sides } => (
                    json!({
                        "status": "Obstructed",
                        "failed_side": failed_side.to_string(),
                        "failed_sides": failed_sides.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "rank": v.rank,
                        "dual_rank": v.dual_rank,
                    }),
                    format!("Obstructed: the {failed_side} lattice does not embed in the standard lattice of its rank"),
                ),
                ObstructionStatus::HypothesisHolds { primary, dual } => (
                    json!({
                        "status": "HypothesisHolds",
                        "witnesses": { "primary": primary.vectors, "dual": dual.vectors },
                        "rank": v.rank,
                        "dual_rank": v.dual_rank,
                    }),
                    format!("HypothesisHolds (inconclusive)\nprimary: {:?}\ndual: {:?}", primary.vectors, dual.vectors),
                ),
            };
            Ok(Report::new(json, text))
        }
    }
}

fn lattice(cmd: LatticeCommand) -> Result<Report, Failure> {
    match cmd {
        LatticeCommand::Embed { file, rank, sign } => {
            let l = read_lattice(&file)?;
            match embed(&l, rank, sign)? {
                Some(w) => {
                    if !w.verify(&l) {
                        return Err(Failure::internal("embedding witness failed re-verification"));
                    }
                    let text = rows_text(&w.vectors);
                    let tsv = rows_tsv(&w.vectors);
                    Ok(Report::new(json!({ "embeddable": true, "sign": sign.value(), "ambient": rank, "vectors": w.vectors }), text)
                        .with_tsv(tsv))
                }
                None => Ok(Report::new(json!({ "embeddable": false, "sign": sign.value(), "ambient": rank }), "NotEmbeddable")),
            }
        }
        LatticeCommand::Standard { file } => {
            let l = read_lattice(&file)?;
            let standard = l.is_standard();
            let json = json!({
                "standard": standard,
                "determinant": l.determinant().to_string(),
                "definite": l.definite_sign().map(|s: FormSign| s.to_string()),
            });
            Ok(Report::new(json, standard.to_string()))
        }
    }
}

fn configure_workers() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("KNOTLAT_WORKERS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("KNOTLAT_WORKERS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json, tsv) = (cli.json, cli.tsv);
    let result = configure_workers().and_then(|()| run(cli)).and_then(|r| {
        if tsv {
            r.tsv.ok_or_else(|| Failure::input("this command has no TSV form"))
        } else if json {
            Ok(r.json.to_string())
        } else {
            Ok(r.text)
        }
    });
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("knotlat: {}", f.message.replace('\n', " "));
            ExitCode::from(f.code)
        }
    }
}
