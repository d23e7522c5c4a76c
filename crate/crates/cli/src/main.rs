//! `jantzen`: sum formulas for Weyl and tilting modules of the classical
//! groups and their quantum analogues, with a differential-testing
//! `verify` harness.
//!
//! Exit codes: 0 success, 2 usage/input error, 3 internal-consistency
//! failure (disagreeing routes or a failing verify suite).

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use jantzen_core::chars::{expand_combination, expand_weights, ChiCombination, Coeff};
use jantzen_core::rootsets::{s_set_bruteforce, s_set_fast, u_set, v_set, RootSetEntry, SSetEntry};
use jantzen_core::sumformulas::{
    div_t_q, euler_delta_checked, euler_q, jantzen_sum, jantzen_sum_quantum, tilting_sum_checked,
    tilting_sum_quantum, TiltingCharacter,
};
use jantzen_core::verify::{run_suite, suite_names, SweepParams};
use jantzen_core::{Error, Family, QuantumSpec, RootSystem, Weight};

/// Default bound on Weyl group enumeration; override with JANTZEN_WEYL_CAP.
const DEFAULT_WEYL_CAP: u128 = 1 << 22;

#[derive(Parser)]
#[command(name = "jantzen", version, about = "Jantzen-type sum formulas for classical groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArgs {
    /// Root system family: A, B, C or D
    #[arg(long)]
    family: String,
    /// Lie rank (type A rank n means GL_{n+1})
    #[arg(long)]
    rank: usize,
}

impl SystemArgs {
    fn build(&self) -> Result<RootSystem, Error> {
        let family = Family::from_str(&self.family)?;
        let m = match family {
            Family::A => self.rank + 1,
            _ => self.rank,
        };
        RootSystem::new(family, m)
    }
}

#[derive(Args)]
struct RenderArgs {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Jantzen sum formula for the Weyl module of highest weight mu
    SumWeyl {
        #[command(flatten)]
        sys: SystemArgs,
        /// Highest weight mu (comma-separated; bare integer in type A)
        #[arg(long)]
        weight: String,
        /// The prime characteristic
        #[arg(long)]
        p: u64,
        /// Interpret the weight as mu + rho
        #[arg(long)]
        rho_shifted: bool,
        /// Also expand the result into weight multiplicities
        #[arg(long)]
        expand: bool,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Quantum Jantzen sum formula at an l-th root of unity
    SumWeylQ {
        #[command(flatten)]
        sys: SystemArgs,
        /// Highest weight mu (comma-separated; bare integer in type A)
        #[arg(long)]
        weight: String,
        /// Order of the root of unity (odd, >= 3)
        #[arg(long)]
        l: u64,
        /// Characteristic of the base field (0 or a prime not dividing l)
        #[arg(long = "char", default_value_t = 0)]
        char_k: u64,
        /// Interpret the weight as mu + rho
        #[arg(long)]
        rho_shifted: bool,
        /// Also expand the result into weight multiplicities
        #[arg(long)]
        expand: bool,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Tilting sum formula: total positive layer dimension at lambda
    SumTilting {
        #[command(flatten)]
        sys: SystemArgs,
        /// The weight lambda (comma-separated; bare integer in type A)
        #[arg(long)]
        lambda: String,
        /// Weyl factors of Q as weight:multiplicity pairs, e.g. "4:1,0:1"
        /// (tuple coordinates slash-separated, halves as decimals)
        #[arg(long)]
        factors: String,
        /// The prime characteristic
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Quantum tilting sum formula
    SumTiltingQ {
        #[command(flatten)]
        sys: SystemArgs,
        /// The weight lambda (comma-separated; bare integer in type A)
        #[arg(long)]
        lambda: String,
        /// Weyl factors of Q as weight:multiplicity pairs, e.g. "4:1,0:1"
        #[arg(long)]
        factors: String,
        /// Order of the root of unity (odd, >= 3)
        #[arg(long)]
        l: u64,
        /// Characteristic of the base field (0 or a prime not dividing l)
        #[arg(long = "char", default_value_t = 0)]
        char_k: u64,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Euler coefficients e_lambda(Q(mu)) and e_lambda(Delta(mu))
    Euler {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Interpret both weights as lambda + rho, mu + rho
        #[arg(long)]
        rho_shifted: bool,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// The divisor-valued scan div_T(Q(mu)) underlying the sum formulas
    Divt {
        #[command(flatten)]
        sys: SystemArgs,
        /// Highest weight mu (comma-separated; bare integer in type A)
        #[arg(long)]
        weight: String,
        /// Interpret the weight as mu + rho
        #[arg(long)]
        rho_shifted: bool,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// The root subsets S, U and V attached to a pair of weights
    Rootsets {
        #[command(flatten)]
        sys: SystemArgs,
        /// lambda, unshifted (conflicts with --lambda-rho)
        #[arg(long, conflicts_with = "lambda_rho")]
        lambda: Option<String>,
        /// mu, unshifted (conflicts with --mu-rho)
        #[arg(long, conflicts_with = "mu_rho")]
        mu: Option<String>,
        /// lambda + rho
        #[arg(long)]
        lambda_rho: Option<String>,
        /// mu + rho
        #[arg(long)]
        mu_rho: Option<String>,
        /// Use the brute-force Weyl group scan instead of the fast search
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Weight multiplicities of the Weyl character chi(lambda)
    Expand {
        #[command(flatten)]
        sys: SystemArgs,
        /// Highest weight (comma-separated; bare integer in type A)
        #[arg(long)]
        weight: String,
        /// Interpret the weight as lambda + rho
        #[arg(long)]
        rho_shifted: bool,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Run randomized invariant sweeps over the library
    Verify {
        /// Suite name: arith, reduce, rootsets, euler, sums, quantum, all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[command(flatten)]
        render: RenderArgs,
    },
}

fn weyl_cap() -> u128 {
    std::env::var("JANTZEN_WEYL_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_WEYL_CAP)
}

/// Parses a weight argument; a bare integer in type A is shorthand for
/// (k, 0, ..., 0). With `rho_shifted` the input is read as lambda + rho.
fn parse_weight(s: &str, rs: &RootSystem, rho_shifted: bool) -> Result<Weight, Error> {
    let mut w = Weight::from_str(s)?;
    if w.c2.len() == 1 && rs.family == Family::A && rs.m > 1 {
        w.c2.resize(rs.m, 0);
    }
    if w.c2.len() != rs.m {
        return Err(Error::BadWeight(format!(
            "expected {} coordinates, got {}",
            rs.m,
            w.c2.len()
        )));
    }
    if rho_shifted {
        w = w.shift_zero().unshift(rs);
    }
    if !w.in_lattice(rs) {
        return Err(Error::BadWeight(format!("{w} is not in the weight lattice")));
    }
    Ok(w)
}

/// Parses "4:1,0:1" or "2/1/0:1,1/0/0:2" into (weight, multiplicity)
/// pairs. Coordinates are slash-separated; halves are written as
/// decimals ("5.5"), since "/" is the separator here.
fn parse_factors(s: &str, rs: &RootSystem) -> Result<Vec<(Weight, i64)>, Error> {
    let mut out = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        let (wpart, mpart) = item
            .split_once(':')
            .ok_or_else(|| Error::BadWeight(format!("factor {item:?} is not weight:mult")))?;
        let mult: i64 = mpart
            .trim()
            .parse()
            .map_err(|_| Error::BadWeight(format!("bad multiplicity {mpart:?}")))?;
        let mut c2 = Vec::new();
        for tok in wpart.split('/') {
            let tok = tok.trim();
            let v = if let Some((int, frac)) = tok.split_once('.') {
                if frac != "5" {
                    return Err(Error::BadWeight(format!("bad coordinate {tok:?}")));
                }
                let i: i64 = int
                    .parse()
                    .map_err(|_| Error::BadWeight(format!("bad coordinate {tok:?}")))?;
                2 * i + if int.starts_with('-') { -1 } else { 1 }
            } else {
                2 * tok
                    .parse::<i64>()
                    .map_err(|_| Error::BadWeight(format!("bad coordinate {tok:?}")))?
            };
            c2.push(v);
        }
        if c2.len() == 1 && rs.family == Family::A && rs.m > 1 {
            c2.resize(rs.m, 0);
        }
        if c2.len() != rs.m {
            return Err(Error::BadWeight(format!(
                "factor {item:?}: expected {} coordinates, got {}",
                rs.m,
                c2.len()
            )));
        }
        out.push((Weight::from_doubled(c2, false), mult));
    }
    Ok(out)
}

/// Text label of an output weight: the bare coroot pairing in rank-1
/// type A (so GL_2 classes print as single integers), the coordinate
/// tuple otherwise.
fn weight_label(w: &Weight, rs: &RootSystem) -> String {
    if rs.family == Family::A && rs.m == 2 {
        ((w.c2[0] - w.c2[1]) / 2).to_string()
    } else {
        w.to_string()
    }
}

fn render_combo<C: Coeff>(combo: &ChiCombination<C>, rs: &RootSystem) -> String {
    if combo.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (w, c) in combo.iter().rev() {
        let r = c.render();
        let (neg, mag) = match r.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, r.as_str()),
        };
        if first {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        first = false;
        let label = weight_label(w, rs);
        if mag == "1" {
            out.push_str(&format!("χ({label})"));
        } else if mag.chars().all(|ch| ch.is_ascii_digit()) {
            out.push_str(&format!("{mag}·χ({label})"));
        } else {
            out.push_str(&format!("({mag})·χ({label})"));
        }
    }
    out
}

fn rootset_entry_json(e: &RootSetEntry) -> serde_json::Value {
    serde_json::json!({
        "gamma": e.gamma.coords,
        "n": e.n,
        "det": e.w.det(),
        "w": e.w,
    })
}

fn s_entries_json(entries: &[SSetEntry]) -> serde_json::Value {
    serde_json::Value::Array(
        entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "gamma": e.gamma.coords,
                    "solutions": e
                        .solutions
                        .iter()
                        .map(|(w, n)| serde_json::json!({"n": n, "det": w.det(), "w": w}))
                        .collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn print_sum(
    result: &jantzen_core::sumformulas::SumFormulaResult,
    rs: &RootSystem,
    extra: &[(&str, serde_json::Value)],
    expand: bool,
    json: bool,
) -> Result<(), Error> {
    let expanded = if expand {
        Some(expand_combination(&result.combo, rs, weyl_cap())?)
    } else {
        None
    };
    if json {
        let mut obj = result.combo.to_json();
        let map = obj.as_object_mut().expect("object");
        map.insert("convention".into(), serde_json::json!(result.convention));
        for (k, v) in extra {
            map.insert((*k).into(), v.clone());
        }
        if let Some(ws) = &expanded {
            map.insert("expanded".into(), ws.to_json());
        }
        println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
    } else {
        println!("{}", render_combo(&result.combo, rs));
        if let Some(ws) = &expanded {
            println!("expanded weights ({} total):", ws.total());
            for (w, m) in ws.iter() {
                println!("  {}: {m}", weight_label(w, rs));
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::SumWeyl {
            sys,
            weight,
            p,
            rho_shifted,
            expand,
            render,
        } => {
            let rs = sys.build()?;
            let mu = parse_weight(&weight, &rs, rho_shifted)?;
            let result = jantzen_sum(&mu, p, &rs)?;
            print_sum(&result, &rs, &[("p", serde_json::json!(p))], expand, render.json)
        }
        Command::SumWeylQ {
            sys,
            weight,
            l,
            char_k,
            rho_shifted,
            expand,
            render,
        } => {
            let rs = sys.build()?;
            let spec = QuantumSpec::new(l, char_k)?;
            let mu = parse_weight(&weight, &rs, rho_shifted)?;
            let result = jantzen_sum_quantum(&mu, &spec, &rs)?;
            let extra = [
                ("l", serde_json::json!(l)),
                ("char", serde_json::json!(char_k)),
            ];
            print_sum(&result, &rs, &extra, expand, render.json)
        }
        Command::SumTilting {
            sys,
            lambda,
            factors,
            p,
            render,
        } => {
            let rs = sys.build()?;
            let lam = parse_weight(&lambda, &rs, false)?;
            let q = TiltingCharacter::new(parse_factors(&factors, &rs)?, &rs)?;
            let value = tilting_sum_checked(&lam, &q, p, &rs)?;
            if render.json {
                let obj = serde_json::json!({
                    "value": value,
                    "convention": jantzen_core::sumformulas::TILTING_CONVENTION,
                    "p": p,
                });
                println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
            } else {
                println!("{value}");
            }
            Ok(())
        }
        Command::SumTiltingQ {
            sys,
            lambda,
            factors,
            l,
            char_k,
            render,
        } => {
            let rs = sys.build()?;
            let spec = QuantumSpec::new(l, char_k)?;
            let lam = parse_weight(&lambda, &rs, false)?;
            let q = TiltingCharacter::new(parse_factors(&factors, &rs)?, &rs)?;
            let value = tilting_sum_quantum(&lam, &q, &spec, &rs)?;
            if render.json {
                let obj = serde_json::json!({
                    "value": value,
                    "convention": jantzen_core::sumformulas::TILTING_CONVENTION,
                    "l": l,
                    "char": char_k,
                });
                println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
            } else {
                println!("{value}");
            }
            Ok(())
        }
        Command::Euler {
            sys,
            lambda,
            mu,
            rho_shifted,
            render,
        } => {
            let rs = sys.build()?;
            let lam = parse_weight(&lambda, &rs, rho_shifted)?;
            let muw = parse_weight(&mu, &rs, rho_shifted)?;
            let q = euler_q(&lam, &muw, &rs)?;
            let delta = euler_delta_checked(&lam, &muw, &rs)?;
            if render.json {
                let obj = serde_json::json!({
                    "euler_q": q.to_json(),
                    "euler_delta": delta.to_json(),
                });
                println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
            } else {
                println!("e_lambda(Q(mu))     = {q}");
                println!("e_lambda(Delta(mu)) = {delta}");
            }
            Ok(())
        }
        Command::Divt {
            sys,
            weight,
            rho_shifted,
            render,
        } => {
            let rs = sys.build()?;
            let mu = parse_weight(&weight, &rs, rho_shifted)?;
            let combo = div_t_q(&mu, &rs)?;
            if render.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&combo.to_json()).expect("json")
                );
            } else {
                println!("{}", render_combo(&combo, &rs));
            }
            Ok(())
        }
        Command::Rootsets {
            sys,
            lambda,
            mu,
            lambda_rho,
            mu_rho,
            oracle,
            render,
        } => {
            let rs = sys.build()?;
            let lam = match (&lambda, &lambda_rho) {
                (Some(s), None) => parse_weight(s, &rs, false)?,
                (None, Some(s)) => parse_weight(s, &rs, true)?,
                _ => {
                    return Err(Error::InvalidSpec(
                        "exactly one of --lambda and --lambda-rho is required".into(),
                    ))
                }
            };
            let muw = match (&mu, &mu_rho) {
                (Some(s), None) => parse_weight(s, &rs, false)?,
                (None, Some(s)) => parse_weight(s, &rs, true)?,
                _ => {
                    return Err(Error::InvalidSpec(
                        "exactly one of --mu and --mu-rho is required".into(),
                    ))
                }
            };
            let s = if oracle {
                s_set_bruteforce(&lam, &muw, &rs, weyl_cap())?
            } else {
                s_set_fast(&lam, &muw, &rs)?
            };
            let u = u_set(&lam, &muw, &rs)?;
            let v = v_set(&lam, &muw, &rs)?;
            if render.json {
                let obj = serde_json::json!({
                    "s": s_entries_json(&s),
                    "u": u.iter().map(rootset_entry_json).collect::<Vec<_>>(),
                    "v": v.iter().map(rootset_entry_json).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
            } else {
                let total: usize = s.iter().map(|e| e.solutions.len()).sum();
                println!("S: {} roots, {} solutions", s.len(), total);
                for e in &s {
                    for (w, n) in &e.solutions {
                        println!("  gamma = {}  n = {n}  det = {:+}", e.gamma, w.det());
                    }
                }
                println!("U: {} entries", u.len());
                for e in &u {
                    println!("  gamma = {}  n = {}  det = {:+}", e.gamma, e.n, e.w.det());
                }
                println!("V: {} entries", v.len());
                for e in &v {
                    println!("  beta = {}  m = {}  det = {:+}", e.gamma, e.n, e.w.det());
                }
            }
            Ok(())
        }
        Command::Expand {
            sys,
            weight,
            rho_shifted,
            render,
        } => {
            let rs = sys.build()?;
            let lam = parse_weight(&weight, &rs, rho_shifted)?;
            let ws = expand_weights(&lam, &rs, weyl_cap())?;
            if render.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&ws.to_json()).expect("json")
                );
            } else {
                println!("dim = {}", ws.total());
                for (w, m) in ws.iter() {
                    println!("  {}: {m}", weight_label(w, &rs));
                }
            }
            Ok(())
        }
        Command::Verify {
            suite,
            seed,
            trials,
            max_rank,
            render,
        } => {
            if !suite_names().contains(&suite.as_str()) && suite != "all" {
                return Err(Error::InvalidSpec(format!(
                    "unknown suite {suite:?}; expected one of {:?} or \"all\"",
                    suite_names()
                )));
            }
            let params = SweepParams {
                seed,
                trials,
                max_rank,
            };
            let reports = run_suite(&suite, params)?;
            let mut failed = false;
            if render.json {
                let obj = serde_json::Value::Array(
                    reports
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "suite": r.suite,
                                "instances": r.instances,
                                "failures": r.failures,
                            })
                        })
                        .collect(),
                );
                println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
                failed = reports.iter().any(|r| !r.ok());
            } else {
                for r in &reports {
                    println!(
                        "suite {}: {} instances, {} failures",
                        r.suite,
                        r.instances,
                        r.failures.len()
                    );
                    for f in &r.failures {
                        println!("  FAIL {f}");
                        failed = true;
                    }
                }
            }
            if failed {
                return Err(Error::Inconsistency("verify suite failures".into()));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Inconsistency(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
