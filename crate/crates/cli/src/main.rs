//! Command-line surface: construct systems and ideals from JSON, run the
//! decisions and decompositions, and execute the verification suites. All
//! output is machine-readable JSON on stdout; identical inputs (including
//! seeds) produce byte-identical reports.
//!
//! Exit codes: 0 success, 2 validation error (with a diagnostic object),
//! 3 internal consistency failure (with the counterexample serialized).

mod suites;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use weylfcr_core::fcr::{fcr_decide, lambda_set};
use weylfcr_core::howe::{
    case_b_fcr, case_c_report, closure_case_a, closure_case_b, enumerate_case_a,
    enumerate_case_b, odd_k_case_b, witness_case_a, ClosureReport, DualPairCase, PhiSet,
};
use weylfcr_core::json::{
    ideal_from_json, ideal_to_json, ratvec_to_json, system_to_json, verdict_to_json,
};
use weylfcr_core::rat::rat_to_string;
use weylfcr_core::rootsys::{build, Kind, RootSystem};
use weylfcr_core::weyl::{
    enumerate_group, inversion_set, length, parse_word, rho_difference, word_string,
};
use weylfcr_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "weylfcr",
    version,
    about = "Exact Weyl-group combinatorics, linear ideals, and FCR decisions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root system inspection.
    Rootsys {
        #[command(subcommand)]
        cmd: RootsysCmd,
    },
    /// Weyl group element queries.
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// Linear ideal operations.
    Ideal {
        #[command(subcommand)]
        cmd: IdealCmd,
    },
    /// FCR decisions and weight sets.
    Fcr {
        #[command(subcommand)]
        cmd: FcrCmd,
    },
    /// Dual-pair decompositions.
    Howe {
        #[command(subcommand)]
        cmd: HoweCmd,
    },
    /// Exhaustive verification suites.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum RootsysCmd {
    /// Roots, coroots, rho, and fundamental weights of a system.
    Info {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Inversion set, length, and the inversion-sum identity for a word.
    Inversions {
        #[arg(long)]
        kind: String,
        /// Semisimple rank (the ambient dimension is rank+1 for A and GL).
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "")]
        word: String,
    },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Apply the dot action of a word to an ideal loaded from JSON.
    Dot {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum FcrCmd {
    /// Classify the prime factor attached to an ideal.
    Decide {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Dominant weights absorbed by the ideal within a pairing box.
    LambdaSet {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value_t = 4)]
        bound: u64,
    },
}

#[derive(Subcommand)]
enum HoweCmd {
    /// GL_k on matrix pairs: closure components, witnesses, weights.
    CaseA {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        bound: u64,
        /// Write the weight table (alpha, beta, weight_g, weight_K) as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// O_k on k x n matrices: closure components and the dense-component
    /// decision. Give --p for even multiplicity (k = 2p) or an odd --k.
    CaseB {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "k")]
        p: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 3)]
        bound: u64,
    },
    /// Sp_2k on k x n matrices: rank predicate and imported facts.
    CaseC {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: section2, section3, section4, howe-a, howe-b, ideals-fuzz, all.
    #[arg(long)]
    suite: String,
    /// Restrict to systems of exactly this semisimple rank.
    #[arg(long)]
    rank: Option<usize>,
    /// Restrict to one system kind (A, B, C, D, GL).
    #[arg(long = "type")]
    kind: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Corpus size per system for the fuzz-backed suites.
    #[arg(long)]
    count: Option<usize>,
}

fn system_from_kind_rank(kind: &str, rank: usize) -> Result<Arc<RootSystem>> {
    let kind = Kind::parse(kind)?;
    let n = match kind {
        Kind::A | Kind::Gl => rank + 1,
        _ => rank,
    };
    build(kind, n)
}

fn load_ideal(path: &PathBuf) -> Result<weylfcr_core::ideals::LinearIdeal> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("bad JSON in {}: {e}", path.display())))?;
    ideal_from_json(&value)
}

fn closure_to_json(rep: &ClosureReport) -> Value {
    json!({
        "index_set": rep.index_set,
        "components": rep.components.iter().map(ideal_to_json).collect::<Vec<_>>(),
        "dims": rep.dims,
        "oracle_agreement": rep.oracle_agreement,
        "full_space": rep.full_space,
        "note": rep.note,
    })
}

fn run(cli: Cli) -> Result<Value> {
    match cli.command {
        Command::Rootsys { cmd: RootsysCmd::Info { kind, n } } => {
            let rs = build(Kind::parse(&kind)?, n)?;
            Ok(json!({
                "system": system_to_json(&rs),
                "semisimple": rs.is_semisimple(),
                "rank": rs.semisimple_rank(),
                "positive_roots": rs.positive_roots().iter().map(ratvec_to_json).collect::<Vec<_>>(),
                "simple_roots": rs.simple_roots().iter().map(ratvec_to_json).collect::<Vec<_>>(),
                "rho": ratvec_to_json(rs.rho()),
                "fundamental_weights": rs.fundamental_weights().iter().map(ratvec_to_json).collect::<Vec<_>>(),
            }))
        }
        Command::Weyl { cmd: WeylCmd::Inversions { kind, rank, word } } => {
            let rs = system_from_kind_rank(&kind, rank)?;
            let w = parse_word(&rs, &word)?;
            let inv = inversion_set(&rs, &w);
            let diff = rho_difference(&rs, &w)?;
            Ok(json!({
                "system": system_to_json(&rs),
                "word": word_string(&rs, &w),
                "length": length(&rs, &w),
                "inversions": inv.iter().map(|&t| ratvec_to_json(rs.root(t))).collect::<Vec<_>>(),
                "inversion_sum": ratvec_to_json(&diff),
            }))
        }
        Command::Ideal { cmd: IdealCmd::Dot { ideal, word } } => {
            let input = load_ideal(&ideal)?;
            let w = parse_word(input.system(), &word)?;
            let moved = input.dot_act(&w);
            Ok(json!({
                "input": ideal_to_json(&input),
                "word": word_string(input.system(), &w),
                "result": ideal_to_json(&moved),
            }))
        }
        Command::Fcr { cmd } => match cmd {
            FcrCmd::Decide { ideal } => {
                let input = load_ideal(&ideal)?;
                let group = enumerate_group(input.system())?;
                let verdict = fcr_decide(&group, &input)?;
                Ok(verdict_to_json(input.system(), &verdict))
            }
            FcrCmd::LambdaSet { ideal, bound } => {
                let input = load_ideal(&ideal)?;
                let group = enumerate_group(input.system())?;
                let weights = lambda_set(&group, &input, bound);
                Ok(json!({
                    "bound": bound,
                    "count": weights.len(),
                    "weights": weights.iter().map(ratvec_to_json).collect::<Vec<_>>(),
                }))
            }
        },
        Command::Howe { cmd } => match cmd {
            HoweCmd::CaseA { p, q, k, bound, csv } => {
                let n = p + q;
                if n == 0 || k == 0 {
                    return Err(Error::InvalidParameter("need p + q >= 1 and k >= 1".into()));
                }
                let system = build(Kind::Gl, n)?;
                let rep = closure_case_a(&system, p, q, k, bound)?;
                let weights = enumerate_case_a(p, q, k, bound);
                if let Some(path) = csv {
                    let mut text = String::from("alpha,beta,weight_g,weight_K\n");
                    for w in &weights {
                        let fmt = |v: &weylfcr_core::exactlin::RatVec| {
                            v.iter().map(rat_to_string).collect::<Vec<_>>().join(" ")
                        };
                        text.push_str(&format!(
                            "{},{},{},{}\n",
                            w.alpha,
                            w.beta,
                            fmt(&w.weight_g),
                            fmt(&w.weight_k)
                        ));
                    }
                    std::fs::write(&path, text).map_err(|e| {
                        Error::Parse(format!("cannot write {}: {e}", path.display()))
                    })?;
                }
                let witnesses: Option<Vec<String>> = if rep.full_space {
                    None
                } else {
                    let mut out = Vec::new();
                    for &i in &rep.index_set {
                        let w = witness_case_a(&system, i, n, k)?;
                        out.push(word_string(&system, &w));
                    }
                    Some(out)
                };
                let case = DualPairCase::A { p, q, k };
                let phi = match weylfcr_core::howe::phi_set(p, q, k)? {
                    PhiSet::FullSpace => Value::String("full-space".into()),
                    PhiSet::Indices(v) => json!(v),
                };
                Ok(json!({
                    "case": "A",
                    "p": p, "q": q, "k": k, "bound": bound,
                    "phi": phi,
                    "closure": closure_to_json(&rep),
                    "dims": rep.dims,
                    "oracle_agreement": rep.oracle_agreement,
                    "witness_words": witnesses,
                    "weights_enumerated": weights.len(),
                    "rank_g": case.rank_g(),
                    "rank_k": case.rank_k(),
                    "kernel_is_zero": case.rank_g() <= case.rank_k(),
                }))
            }
            HoweCmd::CaseB { n, p, k, bound } => {
                let system = build(Kind::C, n)?;
                let case_k = match (p, k) {
                    (Some(p), None) => 2 * p,
                    (None, Some(k)) => k,
                    _ => {
                        return Err(Error::InvalidParameter(
                            "give exactly one of --p (even multiplicity) or --k".into(),
                        ))
                    }
                };
                let case = DualPairCase::B { n, k: case_k };
                let weights = enumerate_case_b(n, case_k, bound);
                let mut report = json!({
                    "case": "B",
                    "n": n, "k": case_k, "bound": bound,
                    "weights_enumerated": weights.len(),
                    "rank_g": case.rank_g(),
                    "rank_k": case.rank_k(),
                    "kernel_is_zero": case.rank_g() <= case.rank_k(),
                });
                let obj = report.as_object_mut().unwrap();
                if case_k % 2 == 0 && case_k < 2 * n {
                    let pp = case_k / 2;
                    let rep = closure_case_b(&system, n, pp, bound)?;
                    let group = enumerate_group(&system)?;
                    let fcr = case_b_fcr(&system, &group, n, pp)?;
                    obj.insert("p".into(), json!(pp));
                    obj.insert("closure".into(), closure_to_json(&rep));
                    obj.insert("dims".into(), json!(rep.dims));
                    obj.insert("oracle_agreement".into(), json!(rep.oracle_agreement));
                    obj.insert("kernel_component".into(), json!(0));
                    obj.insert("base_ideal".into(), ideal_to_json(&fcr.base));
                    obj.insert("witness".into(), json!(word_string(&system, &fcr.witness)));
                    obj.insert("fcr".into(), verdict_to_json(&system, &fcr.verdict));
                } else if case_k % 2 == 1 && case_k < 2 * n {
                    let group = enumerate_group(&system)?;
                    let rep = odd_k_case_b(&system, &group, n, case_k, bound)?;
                    obj.insert(
                        "components".into(),
                        json!(rep.components.iter().map(ideal_to_json).collect::<Vec<_>>()),
                    );
                    obj.insert("empty".into(), json!(rep.empty));
                    obj.insert(
                        "certificates_complete".into(),
                        json!(rep
                            .certificates
                            .iter()
                            .all(|per_w| per_w.iter().all(|c| c.is_some()))),
                    );
                } else {
                    obj.insert("full_space".into(), json!(true));
                }
                Ok(report)
            }
            HoweCmd::CaseC { n, k } => {
                let case = DualPairCase::C { n, k };
                let rep = case_c_report(n, k);
                Ok(json!({
                    "case": "C",
                    "n": n, "k": k,
                    "irreducible": rep.irreducible,
                    "full_space": rep.full_space,
                    "fcr": rep.fcr,
                    "rank_g": case.rank_g(),
                    "rank_k": case.rank_k(),
                    "kernel_is_zero": case.rank_g() <= case.rank_k(),
                }))
            }
        },
        Command::Verify(args) => suites::run_suite(
            &args.suite,
            suites::Options {
                rank: args.rank,
                kind: args.kind,
                seed: args.seed,
                count: args.count,
            },
        ),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable report"));
        }
        Err(err) => {
            let (code, kind) = match &err {
                Error::Consistency(_) => (3, "internal"),
                _ => (2, "validation"),
            };
            let diagnostic = json!({
                "error": { "kind": kind, "message": err.to_string() },
            });
            println!("{}", serde_json::to_string_pretty(&diagnostic).expect("serializable error"));
            std::process::exit(code);
        }
    }
}
