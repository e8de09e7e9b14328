use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schubert_core::kp::{kp_integer_check, kp_residue_check, QPolynomial};
use schubert_core::pluecker::{
    classical_criterion, exterior_residue_check, pluecker_ideal, random_decomposable, ring_residue_check,
    DEFAULT_VARIANT,
};
use schubert_core::selftest;
use schubert_core::symmetric::{set_h_recurrence_mutation, TensorCoefficients};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_DISAGREE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "schubert", version, about = "Decomposability, Pluecker quadrics and KP residue checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a tensor (JSON coefficients) is decomposable, by three independent predicates.
    Decomposable {
        /// Input file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print the quadrics cutting out decomposable tensors of ⋀^r of an n-dimensional space.
    Ideal {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the KP residue identity for a tau function, truncated at a weight.
    KpCheck {
        #[arg(long)]
        tau: PathBuf,
        #[arg(long)]
        weight: u32,
    },
    /// Emit random decomposable tensors as JSON lines.
    RandomGen {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, hide = true, value_enum)]
        mutate: Option<Mutation>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mutation {
    HRecurrence,
}

/// Output and exit code; nothing is written until the command has finished.
struct Done {
    out: String,
    code: u8,
}

fn usage(msg: impl std::fmt::Display) -> Done {
    eprintln!("schubert: {msg}");
    Done { out: String::new(), code: EXIT_USAGE }
}

fn read_input(path: Option<&PathBuf>) -> io::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn decomposable(input: Option<PathBuf>) -> Done {
    let text = match read_input(input.as_ref()) {
        Ok(t) => t,
        Err(e) => return usage(format!("cannot read input: {e}")),
    };
    let t = match TensorCoefficients::from_json(&text) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    if t.rank() == 0 {
        return usage("rank must be at least 1");
    }
    let m = t.to_exterior();
    let verdicts = (|| -> schubert_core::Result<_> {
        Ok((classical_criterion(&m)?, exterior_residue_check(&m, DEFAULT_VARIANT)?, ring_residue_check(&t)?))
    })();
    let (classical, first, second) = match verdicts {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let agree = classical == first && classical == second.decomposable;
    let witness = second.first_nonzero.as_ref().map(|(a, b, c)| json!({"left": a, "right": b, "coeff": c.to_string()}));
    let report = json!({
        "rank": t.rank(),
        "classical": classical,
        "exterior_residue": first,
        "ring_residue": second.decomposable,
        "agree": agree,
        "decomposable": agree.then_some(classical),
        "first_nonzero": witness,
    });
    let code = match (agree, classical) {
        (false, _) => EXIT_DISAGREE,
        (true, true) => EXIT_YES,
        (true, false) => EXIT_NO,
    };
    Done { out: format!("{report}\n"), code }
}

fn ideal(r: usize, n: usize, format: Format) -> Done {
    if r == 0 || n < r {
        return usage(format!("need n ≥ r ≥ 1, got r = {r}, n = {n}"));
    }
    let quadrics = match pluecker_ideal(r, n) {
        Ok(q) => q,
        Err(e) => return usage(e),
    };
    let out = match format {
        Format::Text => quadrics.iter().map(|q| format!("{q}\n")).collect(),
        Format::Json => {
            let v: Vec<_> = quadrics.iter().map(|q| q.to_json_value()).collect();
            format!("{}\n", json!({"r": r, "n": n, "quadrics": v}))
        }
    };
    Done { out, code: EXIT_YES }
}

fn kp_check(path: PathBuf, weight: u32) -> Done {
    if weight == 0 {
        return usage("--weight must be at least 1");
    }
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => return usage(format!("cannot read {}: {e}", path.display())),
    };
    let tau = match QPolynomial::from_json(&text).and_then(|t| t.with_weight_bound(weight)) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    let rational = match kp_residue_check(&tau) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    // the integer form applies when τ has integer coefficients in the h variables
    let integer = tau.to_integer_h(weight as usize).ok().map(|p| kp_integer_check(&p, weight));
    let integer = match integer.transpose() {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let mut out = String::new();
    if rational.passes {
        out.push_str(&format!("pass: the residue vanishes up to weight {weight}\n"));
    } else {
        out.push_str(&format!("fail: the residue is nonzero at weight ≤ {weight}\n"));
        if let Some((a, b, c)) = &rational.first_nonzero {
            out.push_str(&format!("first nonzero coefficient: x'{a:?} ⊗ x''{b:?} ↦ {c}\n"));
        }
    }
    let mut code = if rational.passes { EXIT_YES } else { EXIT_NO };
    if let Some(rep) = integer {
        out.push_str(&format!("integer form at rank {weight}: {}\n", if rep.decomposable { "pass" } else { "fail" }));
        if let Some((a, b, c)) = &rep.first_nonzero {
            out.push_str(&format!("first nonzero coefficient: e'{a:?} ⊗ e''{b:?} ↦ {c}\n"));
        }
        if rep.decomposable != rational.passes {
            code = EXIT_DISAGREE;
        }
    }
    out.push_str("verdicts are relative to the weight truncation\n");
    Done { out, code }
}

fn random_gen(r: usize, n: usize, seed: u64, count: u64) -> Done {
    let mut out = String::new();
    for k in 0..count {
        match random_decomposable(r, n, seed.wrapping_add(k)) {
            Ok(t) => {
                out.push_str(&t.to_json());
                out.push('\n');
            }
            Err(e) => return usage(e),
        }
    }
    Done { out, code: EXIT_YES }
}

fn run_selftest(mutate: Option<Mutation>) -> Done {
    if let Some(Mutation::HRecurrence) = mutate {
        set_h_recurrence_mutation(true);
    }
    let outcomes = selftest::run_all();
    let mut out: String = outcomes.iter().map(|o| format!("{}\n", o.line())).collect();
    let passed = outcomes.iter().filter(|o| o.passed).count();
    out.push_str(&format!("{passed}/{} criteria passed\n", outcomes.len()));
    Done { out, code: if passed == outcomes.len() { EXIT_YES } else { EXIT_NO } }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let done = match cli.command {
        Command::Decomposable { input } => decomposable(input),
        Command::Ideal { r, n, format } => ideal(r, n, format),
        Command::KpCheck { tau, weight } => kp_check(tau, weight),
        Command::RandomGen { r, n, seed, count } => random_gen(r, n, seed, count),
        Command::Selftest { mutate } => run_selftest(mutate),
    };
    let mut stdout = io::stdout().lock();
    if stdout.write_all(done.out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(done.code)
}
