//! `artinian`: command-line front end for the h-vector toolkit.
//!
//! Exit codes: 0 success, 2 input error, 3 infeasible pair, 4 budget
//! exceeded. With `--json` every command prints one report object with the
//! keys `command`, `inputs`, `outputs`, `provenance` and `version`.

use std::fmt::Display;
use std::io::Write;
use std::process::ExitCode;

use artinian::binom::{expand, macaulay_growth, macaulay_lower};
use artinian::bounds::{
    admissibility_case, fl_bound, generalized_compressed, known_maximum, symmetric_upper_bound,
    BoundProfile,
};
use artinian::gorenstein::{ci_check, enumerate_gorenstein3, si_max_growth, stanley_check};
use artinian::hvec::{compare, first_difference, is_differentiable, is_o_sequence, is_symmetric};
use artinian::inverse::{parse_forms, random_forms, InverseSystem};
use artinian::maxima::{
    classify_existence, many_maxima_family, non_existence_witnesses, relative_maxima,
    verify_many_maxima, Budget, TwoEntrySocle, WitnessShape,
};
use artinian::{Error, HVector, PairRS, SocleVector};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

const ORACLE_COEFFICIENT_BOUND: i64 = 99;

#[derive(Parser)]
#[command(
    name = "artinian",
    version,
    about = "Exact h-vector and socle-vector calculus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundKind {
    Fl,
    #[value(alias = "zanello")]
    Refined,
    Symmetric,
}

#[derive(clap::Args)]
struct TwoEntryArgs {
    #[arg(long)]
    p: usize,
    #[arg(long = "sp")]
    s_p: u64,
    #[arg(long)]
    e: usize,
}

impl TwoEntryArgs {
    fn socle(&self) -> artinian::Result<TwoEntrySocle> {
        TwoEntrySocle::new(self.p, self.s_p, self.e)
    }
}

#[derive(clap::Args)]
struct BudgetArg {
    /// Largest socle degree the enumerators accept.
    #[arg(long, env = "ARTINIAN_BUDGET", default_value_t = 14)]
    budget: usize,
}

impl BudgetArg {
    fn get(&self) -> Budget {
        Budget {
            max_socle_degree: self.budget,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// i-binomial expansion of N.
    Expand { n: BigUint, i: usize },
    /// Largest possible value in degree D+1 after H in degree D.
    Growth { h: BigUint, d: usize },
    /// Smallest value in degree B-1 that can grow to A in degree B.
    Lower { a: BigUint, b: usize },
    /// O-sequence, differentiability, symmetry and Gorenstein checks.
    Check {
        hvector: HVector,
        #[arg(long)]
        json: bool,
    },
    /// Entrywise comparison of two h-vectors.
    Compare {
        left: HVector,
        right: HVector,
        #[arg(long)]
        json: bool,
    },
    /// Upper bound for a pair (r, s).
    Bound {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        socle: SocleVector,
        #[arg(long, value_enum, default_value_t = BoundKind::Fl)]
        kind: BoundKind,
        #[arg(long)]
        json: bool,
    },
    /// Generalized compressed h-vector for s_p in degree p plus s_e = 1.
    Construct {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        socle: TwoEntryArgs,
        #[arg(long)]
        json: bool,
    },
    /// Gorenstein h-vectors with h_1 <= 3, one per line.
    Enumerate {
        #[arg(long)]
        e: usize,
        /// Per-degree cap as DEGREE=VALUE; repeatable.
        #[arg(long = "cap", value_parser = parse_cap)]
        caps: Vec<(usize, BigUint)>,
        #[command(flatten)]
        budget: BudgetArg,
        #[arg(long)]
        json: bool,
    },
    /// Relative maxima for a two-entry socle in three variables.
    Maxima {
        #[command(flatten)]
        socle: TwoEntryArgs,
        #[command(flatten)]
        budget: BudgetArg,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form answer to whether a maximum exists.
    Classify {
        #[command(flatten)]
        socle: TwoEntryArgs,
        #[arg(long)]
        json: bool,
    },
    /// The family with n relative maxima.
    Family {
        #[arg(long)]
        n: usize,
        /// Also enumerate and confirm that the predicted vectors are maxima.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        budget: BudgetArg,
        #[arg(long)]
        json: bool,
    },
    /// Two incomparable admissible vectors when no maximum exists.
    Witnesses {
        #[command(flatten)]
        socle: TwoEntryArgs,
        #[arg(long)]
        json: bool,
    },
    /// h-vector (and socle) of an inverse system read from a file.
    Oracle {
        #[arg(long)]
        file: std::path::PathBuf,
        #[arg(long)]
        socle: bool,
        #[arg(long, requires = "add_count")]
        add_degree: Option<usize>,
        #[arg(long, requires = "add_degree")]
        add_count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// JSON report reproducing the worked examples.
    Report,
}

fn parse_cap(s: &str) -> Result<(usize, BigUint), String> {
    let (d, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected DEGREE=VALUE, got {s:?}"))?;
    let d = d
        .trim()
        .parse()
        .map_err(|_| format!("bad degree in {s:?}"))?;
    let v = v
        .trim()
        .parse()
        .map_err(|_| format!("bad value in {s:?}"))?;
    Ok((d, v))
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible { .. } => 3,
            Error::BudgetExceeded { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Display) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn report(command: &str, inputs: Value, outputs: Value, provenance: Value) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "provenance": provenance,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

fn emit(json_mode: bool, text: String, value: impl FnOnce() -> Value) {
    if json_mode {
        put(&serde_json::to_string_pretty(&value()).expect("values serialize"));
    } else {
        put(text.trim_end_matches('\n'));
    }
}

/// Writes one line to stdout. A closed pipe ends the process quietly.
fn put(line: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{line}").and_then(|()| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {e}");
    }
}

fn lines<T: Display>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x}\n")).collect()
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Expand { n, i } => {
            put(&expand(&n, i)?.to_string());
        }
        Command::Growth { h, d } => {
            if d == 0 {
                return Err(input_error("growth is defined from degree 1 on"));
            }
            put(&macaulay_growth(&h, d).to_string());
        }
        Command::Lower { a, b } => {
            put(&macaulay_lower(&a, b)?.to_string());
        }
        Command::Check { hvector, json } => {
            let o_seq = is_o_sequence(&hvector);
            let diff = is_differentiable(&hvector);
            let sym = is_symmetric(&hvector);
            let three = hvector.len() < 2 || hvector[1] <= BigUint::from(3u32);
            let gor = if three {
                stanley_check(&hvector)?
            } else {
                ci_check(&hvector)
            };
            let gor_label = if three {
                "gorenstein"
            } else {
                "gorenstein-sufficient"
            };
            let first: Vec<String> = first_difference(&hvector)
                .iter()
                .map(|x| x.to_string())
                .collect();
            let text = format!(
                "o-sequence {o_seq}\ndifferentiable {diff}\nsymmetric {sym}\n{gor_label} {gor}\nfirst-difference ({})\n",
                first.join(",")
            );
            emit(json, text, || {
                report(
                    "check",
                    json!({ "hvector": hvector }),
                    json!({
                        "o_sequence": o_seq,
                        "differentiable": diff,
                        "symmetric": sym,
                        "gorenstein": gor,
                        "first_difference": first_difference(&hvector).iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    }),
                    json!({
                        "gorenstein": if three {
                            "exact test for h_1 <= 3: symmetric with differentiable first half"
                        } else {
                            "sufficient test only: symmetric with differentiable first half"
                        },
                    }),
                )
            });
        }
        Command::Compare { left, right, json } => {
            let d = compare(&left, &right)?;
            emit(json, format!("{d}\n"), || {
                report(
                    "compare",
                    json!({ "left": left, "right": right }),
                    json!({ "dominance": d.to_string() }),
                    json!({ "dominance": "entrywise partial order" }),
                )
            });
        }
        Command::Bound {
            r,
            socle,
            kind,
            json,
        } => bound(r, socle, kind, json)?,
        Command::Construct { r, socle, json } => {
            let h = generalized_compressed(r, socle.p, socle.s_p, socle.e)?;
            let branch = if 2 * socle.p >= socle.e {
                "generalized compressed constructor, 2p >= e: the fl bound"
            } else {
                "generalized compressed constructor, 2p < e: symmetric shape with h_{e-p} = N(r,p) - s_p"
            };
            emit(json, format!("{h}\n"), || {
                report(
                    "construct",
                    json!({ "r": r, "p": socle.p, "s_p": socle.s_p, "e": socle.e }),
                    json!({ "hvector": h }),
                    json!({ "hvector": branch }),
                )
            });
        }
        Command::Enumerate {
            e,
            caps,
            budget,
            json,
        } => {
            let limit = budget.get().max_socle_degree;
            if e > limit {
                return Err(Error::BudgetExceeded {
                    requested: e,
                    limit,
                }
                .into());
            }
            let mut table = vec![None; e + 1];
            for (d, v) in caps {
                if d > e {
                    return Err(input_error(format!("cap degree {d} exceeds e = {e}")));
                }
                table[d] = Some(v);
            }
            for h in enumerate_gorenstein3(e, &table)? {
                if json {
                    put(&serde_json::to_string(&h).expect("values serialize"));
                } else {
                    put(&h.to_string());
                }
            }
        }
        Command::Maxima {
            socle,
            budget,
            json,
        } => {
            let ts = socle.socle()?;
            let rep = relative_maxima(&ts, &budget.get())?;
            let text = format!(
                "pair {}\n{}unique={}\ncandidates_examined={}\n",
                ts,
                lines(&rep.maxima),
                rep.unique,
                rep.candidates_examined
            );
            emit(json, text, || {
                report(
                    "maxima",
                    json!({ "p": ts.p(), "s_p": ts.s_p(), "e": ts.e(), "budget": budget.budget }),
                    to_value(&rep),
                    json!({
                        "maxima": "Pareto maxima of Gorenstein tails lifted through the generic prefix fill",
                        "prefix_fill": "heuristic: min(N(3,i), g_i + s_p N(3,p-i)) below degree p",
                    }),
                )
            });
        }
        Command::Classify { socle, json } => {
            let ts = socle.socle()?;
            let class = classify_existence(&ts);
            emit(json, format!("{class}\n"), || {
                report(
                    "classify",
                    json!({ "p": ts.p(), "s_p": ts.s_p(), "e": ts.e() }),
                    json!({ "exists": class.exists(), "branch": class.to_string() }),
                    json!({ "branch": "closed-form existence classifier for two-entry socles in three variables" }),
                )
            });
        }
        Command::Family {
            n,
            verify,
            budget,
            json,
        } => {
            let (ts, predicted) = many_maxima_family(n)?;
            let check = if verify {
                Some(verify_many_maxima(n, &budget.get())?)
            } else {
                None
            };
            let mut text = format!("socle {ts}\n{}", lines(&predicted));
            if let Some(c) = &check {
                text.push_str(&format!(
                    "verified={} maxima_found={}\n",
                    c.holds(),
                    c.report.maxima.len()
                ));
            }
            emit(json, text, || {
                let mut outputs = json!({ "pair": to_value(ts), "predicted": predicted });
                if let Some(c) = &check {
                    outputs["verified"] = json!(c.holds());
                    outputs["maxima"] = to_value(&c.report.maxima);
                    outputs["missing"] = to_value(&c.missing);
                }
                report(
                    "family",
                    json!({ "n": n, "verify": verify }),
                    outputs,
                    json!({
                        "predicted": "explicit family: generic through degree 2n-1, then (N+k-2, N-1, N-k) with N = N(3,2n-2)",
                        "verified": "relative maxima of the tail-candidate enumeration",
                    }),
                )
            });
        }
        Command::Witnesses { socle, json } => {
            let ts = socle.socle()?;
            let w = non_existence_witnesses(&ts)?;
            let shape = match w.shape {
                WitnessShape::Slope { a } => format!("slope a={a}"),
                WitnessShape::Staircase { q } => format!("staircase q={q}"),
            };
            let text = format!("H  {}\nH' {}\nshape {shape}\n", w.h, w.h_prime);
            emit(json, text, || {
                report(
                    "witnesses",
                    json!({ "p": ts.p(), "s_p": ts.s_p(), "e": ts.e() }),
                    json!({ "h": w.h, "h_prime": w.h_prime, "shape": shape }),
                    json!({ "h": "incomparable admissible pair for the non-existence regime" }),
                )
            });
        }
        Command::Oracle {
            file,
            socle,
            add_degree,
            add_count,
            seed,
            json,
        } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| input_error(format!("{}: {e}", file.display())))?;
            let mut m = InverseSystem::new(parse_forms(&text)?)?;
            if let (Some(p), Some(t)) = (add_degree, add_count) {
                let extra = random_forms(m.num_vars(), p, t, seed, ORACLE_COEFFICIENT_BOUND);
                m = m.add_generators(&extra)?;
            }
            let h = m.hvector();
            let s = if socle { Some(m.socle()?) } else { None };
            let mut out = format!("{h}\n");
            if let Some(s) = &s {
                out.push_str(&format!("{s}\n"));
            }
            emit(json, out, || {
                let mut outputs = json!({ "hvector": h });
                if let Some(s) = &s {
                    outputs["socle"] = to_value(s);
                }
                report(
                    "oracle",
                    json!({
                        "file": file.display().to_string(),
                        "add_degree": add_degree,
                        "add_count": add_count,
                        "seed": seed,
                        "generators": m.generators().len(),
                        "variables": m.num_vars(),
                    }),
                    outputs,
                    json!({ "hvector": "oracle rank: fraction-free elimination on derivative spaces" }),
                )
            });
        }
        Command::Report => worked_examples()?,
    }
    Ok(())
}

fn bound(r: usize, socle: SocleVector, kind: BoundKind, json_mode: bool) -> Result<(), Failure> {
    let pair = PairRS::new(r, socle.clone())?;
    let profile = BoundProfile::compute(&pair)?;
    let (vector, note, admissible) = match kind {
        BoundKind::Fl => (
            profile.fl.clone(),
            "upper bound min(N(r,i) - r_i, N(r,i)) from the r_d numbers",
            None,
        ),
        BoundKind::Refined => (
            profile.refined.clone(),
            "recursive bound: Macaulay growth of h_{i-1} - s_{i-1}, capped by N(r,i) - r_i",
            None,
        ),
        BoundKind::Symmetric => {
            let (p, s_p) = socle.as_two_entry().ok_or_else(|| {
                input_error("the symmetric bound needs s_p in one degree plus s_e = 1")
            })?;
            let s_p = u64::try_from(&s_p).map_err(|_| input_error("s_p too large"))?;
            let b = symmetric_upper_bound(r, p, s_p, socle.socle_degree())?;
            (
                b.hvector,
                "symmetric shape forced by a Gorenstein tail when 2p < e",
                Some(b.admissible),
            )
        }
    };
    let mut text = format!(
        "{vector}\nb {}\nc {}\nt {}\ncoincide {}\n",
        profile.b, profile.c, profile.t, profile.coincide
    );
    if let Some(a) = admissible {
        text.push_str(&format!("admissible {a}\n"));
    }
    let kind_name = match kind {
        BoundKind::Fl => "fl",
        BoundKind::Refined => "refined",
        BoundKind::Symmetric => "symmetric",
    };
    emit(json_mode, text, || {
        let mut outputs = json!({ "bound": vector, "profile": to_value(&profile) });
        if let Some(a) = admissible {
            outputs["admissible"] = json!(a);
        }
        if let Ok(case) = admissibility_case(&pair) {
            outputs["admissibility_case"] = json!(case.to_string());
        }
        report(
            "bound",
            json!({ "r": r, "socle": to_value(&socle), "kind": kind_name }),
            outputs,
            json!({
                "bound": note,
                "coincide": "coincidence criterion on s_0..s_{b-1}",
            }),
        )
    });
    Ok(())
}

fn worked_examples() -> Result<(), Failure> {
    let budget = Budget::default();
    let ts = TwoEntrySocle::new(3, 3, 8)?;
    let two_maxima = relative_maxima(&ts, &budget)?;
    let pair = PairRS::new(3, ts.socle())?;
    let profile = BoundProfile::compute(&pair)?;
    let sym = symmetric_upper_bound(4, 3, 4, 8)?;
    let half = HVector::from_u64s(&[1, 4, 10, 16, 25])?;
    let family = verify_many_maxima(2, &budget)?;
    let witnesses = non_existence_witnesses(&ts)?;
    let prefix = HVector::from_u64s(&[1, 3, 6, 7])?;
    let known =
        known_maximum(&pair)?.map(|(h, why)| json!({ "hvector": h, "reason": format!("{why:?}") }));
    let value = report(
        "report",
        json!({}),
        json!({
            "two_maxima": to_value(&two_maxima),
            "two_maxima_bounds": to_value(&profile),
            "two_maxima_known_maximum": known,
            "classification": classify_existence(&ts).to_string(),
            "witnesses": { "h": witnesses.h, "h_prime": witnesses.h_prime },
            "symmetric_bound": { "hvector": sym.hvector, "admissible": sym.admissible },
            "non_differentiable_half": {
                "hvector": half,
                "differentiable": is_differentiable(&half),
                "first_difference": first_difference(&half).iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            },
            "family_n2": { "pair": to_value(family.report.pair), "predicted": family.predicted, "verified": family.holds() },
            "growth_7_3": macaulay_growth(&BigUint::from(7u32), 3).to_string(),
            "si_max_growth_1367": si_max_growth(&prefix)?.to_string(),
            "fl_bound": fl_bound(&pair),
        }),
        json!({
            "two_maxima": "tail-candidate enumeration",
            "symmetric_bound": "symmetric shape forced by a Gorenstein tail",
            "family_n2": "explicit n-maxima family, confirmed by enumeration",
            "witnesses": "incomparable pair for the non-existence regime",
        }),
    );
    put(&serde_json::to_string_pretty(&value).expect("values serialize"));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
