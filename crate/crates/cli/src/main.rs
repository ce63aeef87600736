//! Command-line front end: parse ideal / Betti / degree-matrix files,
//! dispatch library computations, and emit pretty or JSON reports.
//!
//! Exit codes: 0 computed (and every checked bound holds), 1 some
//! checked bound violated (the report is still emitted), 2 input or
//! parse error, 3 capacity guard exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde_json::json;

use multcheck::betti::TAYLOR_MAX_GENERATORS;
use multcheck::corpus::{run_instance, CorpusLimits};
use multcheck::io::{
    self, betti_from_json_str, betti_to_json, degree_matrix_from_json_str, parse_betti_str,
    parse_ideal_str, ratio_str, render_betti_pretty, report_to_json,
};
use multcheck::{
    bdl_hypotheses, betti_koszul, betti_taylor_guarded, cancel_splittings, check_curve,
    check_cyclic, check_module, check_quasipure, cone_basic_double_link, det_check_conjecture,
    degree_nested, degree_recursive, en_betti_table_guarded, en_extremal_shifts, hilbert_numerator,
    sharp_family, stats, BettiTable, BoundReport, CurveData, Error, MonomialIdeal,
    ResolutionShape, EN_MAX_TERMS,
};

#[derive(Parser)]
#[command(
    name = "multcheck",
    version,
    about = "Exact multiplicity-bound computations for monomial ideals and determinantal data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Koszul,
    Taylor,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti table of a monomial ideal
    Resolve {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_enum, default_value = "koszul")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert series numerator, dimension, codimension, multiplicity
    Hilbert {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cyclic multiplicity bounds for R/I
    #[command(name = "check-conj1")]
    CheckConj1 {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_enum, default_value = "koszul")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Module upper bound for a rank-zero Betti table
    #[command(name = "check-conj2")]
    CheckConj2 {
        #[arg(long)]
        betti: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Quasi-pure bounds plus the Vandermonde identity
    #[command(name = "check-quasipure")]
    CheckQuasipure {
        #[arg(long)]
        betti: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Curve bounds with the deficiency-submodule correction
    #[command(name = "check-curve")]
    CheckCurve {
        /// Degree of the curve
        #[arg(long)]
        deg: u64,
        /// Minimal shifts m1,m2
        #[arg(long, value_delimiter = ',')]
        m: Vec<u64>,
        /// Maximal shifts M1,M2
        #[arg(long = "M", value_delimiter = ',')]
        cap_m: Vec<u64>,
        /// dim K_A
        #[arg(long)]
        ka: u64,
        #[arg(long)]
        json: bool,
    },
    /// Degree-matrix computations
    Det {
        #[command(subcommand)]
        action: DetAction,
    },
    /// Basic double link: mapping cone, cancellation, hypotheses
    Bdl {
        #[arg(long = "ideal-i")]
        ideal_i: PathBuf,
        #[arg(long = "ideal-j")]
        ideal_j: PathBuf,
        /// Degree of the link form
        #[arg(long)]
        d: u32,
        /// Optional direct generators of J1 for comparison
        #[arg(long = "ideal-j1")]
        ideal_j1: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Sharp curve family pipeline
    #[command(name = "sharp-family")]
    SharpFamily {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        json: bool,
    },
    /// Seeded random cross-check corpus, one JSON line per instance
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 4)]
        max_vars: usize,
        #[arg(long, default_value_t = 8)]
        max_gens: usize,
        #[arg(long, default_value_t = 6)]
        max_deg: u32,
    },
}

#[derive(Subcommand)]
enum DetAction {
    /// Closed degree formula, both evaluations
    Degree {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Extremal shift recursions
    Shifts {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Full Eagon-Northcott Betti table
    Table {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Multiplicity bounds and sharpness classification
    Check {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

/// Capacity guards, raisable through `MULTCHECK_GUARD=N` (Taylor
/// generator limit N, Eagon-Northcott term limit 2^N).
struct Guards {
    taylor_max_generators: usize,
    en_max_terms: u64,
}

impl Guards {
    fn from_env() -> Result<Self, Error> {
        match std::env::var("MULTCHECK_GUARD") {
            Err(_) => Ok(Guards {
                taylor_max_generators: TAYLOR_MAX_GENERATORS,
                en_max_terms: EN_MAX_TERMS,
            }),
            Ok(raw) => {
                let n: u32 = raw.parse().map_err(|_| {
                    Error::Input(format!("MULTCHECK_GUARD must be an integer, got `{raw}`"))
                })?;
                Ok(Guards {
                    taylor_max_generators: n as usize,
                    en_max_terms: 1u64.checked_shl(n.min(62)).unwrap_or(u64::MAX),
                })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Capacity(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<io::IdealFile, Error> {
    let src = read_file(path)?;
    parse_ideal_str(&src, &path.display().to_string())
}

/// Betti files may be the text format or the JSON emitted by this tool.
fn load_betti(path: &Path) -> Result<(BettiTable, usize), Error> {
    let src = read_file(path)?;
    if src.trim_start().starts_with('{') {
        betti_from_json_str(&src, &path.display().to_string())
    } else {
        parse_betti_str(&src, &path.display().to_string())
    }
}

fn load_matrix(path: &Path) -> Result<multcheck::DegreeMatrix, Error> {
    let src = read_file(path)?;
    degree_matrix_from_json_str(&src, &path.display().to_string())
}

fn resolve_table(
    ideal: &MonomialIdeal,
    method: Method,
    guards: &Guards,
) -> Result<BettiTable, Error> {
    match method {
        Method::Koszul => betti_koszul(ideal),
        Method::Taylor => betti_taylor_guarded(ideal, guards.taylor_max_generators),
    }
}

fn print_report(report: &BoundReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&report_to_json(report)).unwrap());
        return;
    }
    println!("context: {}", io::context_str(report.context));
    println!("classification: {}", io::classification_str(report.classification));
    if let Some(lower) = &report.lower_value {
        let status = if report.lower_sharp {
            "holds (sharp)"
        } else if report.lower_holds {
            "holds"
        } else {
            "VIOLATED"
        };
        println!("lower = {}  [{}]", ratio_str(lower), status);
    }
    println!("e     = {}", ratio_str(&report.e_value));
    let status = if report.upper_sharp {
        "holds (sharp)"
    } else if report.upper_holds {
        "holds"
    } else {
        "VIOLATED"
    };
    println!("upper = {}  [{}]", ratio_str(&report.upper_value), status);
    if let Some((value, holds)) = &report.strong_lower {
        println!(
            "strong lower = {}  [{}]",
            ratio_str(value),
            if *holds { "holds" } else { "does not hold" }
        );
    }
    if let Some(ok) = report.vandermonde_ok {
        println!("vandermonde identity: {}", if ok { "holds" } else { "FAILS" });
    }
    for finding in &report.findings {
        println!("finding: {finding}");
    }
}

fn report_exit(report: &BoundReport) -> u8 {
    if report.all_hold() && report.findings.is_empty() {
        0
    } else {
        1
    }
}

fn run(command: Command) -> Result<u8, Error> {
    let guards = Guards::from_env()?;
    match command {
        Command::Resolve { ideal, method, json } => {
            let file = load_ideal(&ideal)?;
            let table = resolve_table(&file.ideal, method, &guards)?;
            if json {
                let v = betti_to_json(&table, file.ideal.ambient_n());
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                print!("{}", render_betti_pretty(&table));
            }
            Ok(0)
        }
        Command::Hilbert { ideal, json } => {
            let file = load_ideal(&ideal)?;
            let h = hilbert_numerator(&file.ideal)?;
            if json {
                let coeffs: Vec<String> =
                    h.numerator.coeffs().iter().map(|c| c.to_string()).collect();
                let hv: Vec<String> = h.h_vector.iter().map(|c| c.to_string()).collect();
                let v = json!({
                    "vars": h.ambient_n,
                    "numerator": coeffs,
                    "dim": h.dim,
                    "codim": h.codim,
                    "multiplicity": h.multiplicity.to_string(),
                    "h_vector": hv,
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                let terms: Vec<String> = h
                    .numerator
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num::Zero::is_zero(*c))
                    .map(|(k, c)| format!("{c}*t^{k}"))
                    .collect();
                println!("numerator = {}", terms.join(" + "));
                println!("dim = {}  codim = {}", h.dim, h.codim);
                println!("e = {}", h.multiplicity);
                let hv: Vec<String> = h.h_vector.iter().map(|c| c.to_string()).collect();
                println!("h-vector = ({})", hv.join(", "));
            }
            Ok(0)
        }
        Command::CheckConj1 { ideal, method, json } => {
            let file = load_ideal(&ideal)?;
            let table = resolve_table(&file.ideal, method, &guards)?;
            let h = hilbert_numerator(&file.ideal)?;
            let report = check_cyclic(&table, &h)?;
            print_report(&report, json);
            Ok(report_exit(&report))
        }
        Command::CheckConj2 { betti, json } => {
            let (table, vars) = load_betti(&betti)?;
            let report = check_module(&table, vars)?;
            print_report(&report, json);
            Ok(report_exit(&report))
        }
        Command::CheckQuasipure { betti, json } => {
            let (table, vars) = load_betti(&betti)?;
            let report = check_quasipure(&table, vars)?;
            print_report(&report, json);
            Ok(report_exit(&report))
        }
        Command::CheckCurve { deg, m, cap_m, ka, json } => {
            if m.len() != 2 || cap_m.len() != 2 {
                return Err(Error::Input(
                    "--m and --M each need exactly two comma-separated values".into(),
                ));
            }
            let report = check_curve(&CurveData {
                deg,
                m1: m[0],
                m2: m[1],
                cap_m1: cap_m[0],
                cap_m2: cap_m[1],
                dim_ka: ka,
            });
            print_report(&report, json);
            Ok(report_exit(&report))
        }
        Command::Det { action } => run_det(action, &guards),
        Command::Bdl { ideal_i, ideal_j, d, ideal_j1, json } => {
            run_bdl(&ideal_i, &ideal_j, d, ideal_j1.as_deref(), json)
        }
        Command::SharpFamily { t, d, json } => {
            let r = sharp_family(t, d)?;
            if json {
                let v = json!({
                    "t": r.t,
                    "d": r.d,
                    "e_restricted": r.e_restricted.to_string(),
                    "deg_c": r.deg_c.to_string(),
                    "dim_ka": r.dim_ka.to_string(),
                    "m1": r.m1,
                    "m2": r.m2,
                    "half_product": ratio_str(&r.half_product),
                    "identity_holds": r.identity_holds,
                    "table": betti_to_json(&r.table, 4),
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("deg C = {}", r.deg_c);
                println!("dim K_A = {}", r.dim_ka);
                println!(
                    "{} = {} + {}",
                    ratio_str(&r.half_product),
                    r.deg_c,
                    r.dim_ka
                );
                print!("{}", render_betti_pretty(&r.table));
            }
            Ok(if r.identity_holds { 0 } else { 1 })
        }
        Command::Corpus { seed, count, max_vars, max_gens, max_deg } => {
            if max_vars < 2 || max_gens < 1 || max_deg < 1 {
                return Err(Error::Input(
                    "corpus limits need max-vars >= 2, max-gens >= 1, max-deg >= 1".into(),
                ));
            }
            let limits = CorpusLimits { max_vars, max_gens, max_deg };
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let mut all_ok = true;
            for index in 0..count {
                match run_instance(&mut rng, index, &limits) {
                    Ok(verdict) => {
                        println!("{}", verdict.json);
                        all_ok &= verdict.ok;
                    }
                    Err(Error::Capacity(msg)) => {
                        eprintln!("notice: instance {index} skipped: {msg}");
                    }
                    Err(other) => return Err(other),
                }
            }
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}

fn run_det(action: DetAction, guards: &Guards) -> Result<u8, Error> {
    match action {
        DetAction::Degree { matrix, json } => {
            let dm = load_matrix(&matrix)?;
            let nested = degree_nested(&dm);
            let recursive = degree_recursive(&dm);
            if nested != recursive {
                return Err(Error::Inconsistent(format!(
                    "degree evaluations disagree: {nested} vs {recursive}"
                )));
            }
            if json {
                let v = json!({ "degree": nested.to_string() });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("{nested}");
            }
            Ok(0)
        }
        DetAction::Shifts { matrix, json } => {
            let dm = load_matrix(&matrix)?;
            let (m, cap) = en_extremal_shifts(&dm);
            if json {
                let v = json!({ "m": m, "M": cap });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                let fmt = |v: &[i64]| {
                    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
                };
                println!("m: {}", fmt(&m));
                println!("M: {}", fmt(&cap));
            }
            Ok(0)
        }
        DetAction::Table { matrix, json } => {
            let dm = load_matrix(&matrix)?;
            let table = en_betti_table_guarded(&dm, guards.en_max_terms)?;
            if json {
                let vars = dm.rows() + dm.codim() + 2;
                let v = betti_to_json(&table, vars);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                print!("{}", render_betti_pretty(&table));
            }
            Ok(0)
        }
        DetAction::Check { matrix, json } => {
            let dm = load_matrix(&matrix)?;
            let report = det_check_conjecture(&dm);
            print_report(&report, json);
            Ok(report_exit(&report))
        }
    }
}

fn run_bdl(
    ideal_i: &Path,
    ideal_j: &Path,
    d: u32,
    ideal_j1: Option<&Path>,
    json: bool,
) -> Result<u8, Error> {
    let file_i = load_ideal(ideal_i)?;
    let file_j = load_ideal(ideal_j)?;
    let h_i = hilbert_numerator(&file_i.ideal)?;
    let h_j = hilbert_numerator(&file_j.ideal)?;
    if h_i.codim + 1 != h_j.codim {
        return Err(Error::Input(format!(
            "codimensions must satisfy codim I + 1 = codim J, got {} and {}",
            h_i.codim, h_j.codim
        )));
    }
    let table_i = betti_koszul(&file_i.ideal)?;
    let table_j = betti_koszul(&file_j.ideal)?;
    let cone = cone_basic_double_link(
        &ResolutionShape::from_betti(&table_i),
        &ResolutionShape::from_betti(&table_j),
        d,
    )?;
    let cancelled = cancel_splittings(&cone)?;
    let cone_table = cancelled.shape.to_betti()?;

    let mut ok = true;
    let mut comparison = None;
    if let Some(path) = ideal_j1 {
        let file_j1 = load_ideal(path)?;
        let direct = betti_koszul(&file_j1.ideal)?;
        let hyp = bdl_hypotheses(
            &stats(&table_i),
            &stats(&table_j),
            &stats(&direct),
            d,
            h_i.codim,
        )?;
        let matches = cone_table == direct;
        ok &= matches;
        comparison = Some((direct, hyp, matches));
    }

    if json {
        let mut v = json!({
            "d": d,
            "codim_i": h_i.codim,
            "cone_table": betti_to_json(&cone_table, file_i.ideal.ambient_n()),
            "cancellation_unambiguous": cancelled.unambiguous,
        });
        if let Some((direct, hyp, matches)) = &comparison {
            let obj = v.as_object_mut().unwrap();
            obj.insert(
                "direct_table".into(),
                betti_to_json(direct, file_i.ideal.ambient_n()),
            );
            obj.insert("cone_matches_direct".into(), json!(matches));
            obj.insert("upper_from_j".into(), json!(hyp.upper_from_j));
            obj.insert("upper_from_i".into(), json!(hyp.upper_from_i));
            obj.insert("lower_from_i".into(), json!(hyp.lower_from_i));
        }
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("cone table after cancellation:");
        print!("{}", render_betti_pretty(&cone_table));
        if !cancelled.unambiguous {
            println!("(ambiguous cancellation: entries are upper bounds)");
        }
        if let Some((direct, hyp, matches)) = &comparison {
            println!("direct table:");
            print!("{}", render_betti_pretty(direct));
            println!("cone matches direct: {matches}");
            let fmt = |v: &[bool]| {
                v.iter()
                    .map(|b| if *b { "holds" } else { "fails" })
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            println!("upper transfer from J (i = 1..): {}", fmt(&hyp.upper_from_j));
            println!("upper transfer from I (i = 2..): {}", fmt(&hyp.upper_from_i));
            println!("lower transfer from I (i = 2..): {}", fmt(&hyp.lower_from_i));
        }
    }
    Ok(if ok { 0 } else { 1 })
}
