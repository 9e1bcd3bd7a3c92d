//! `strproc`: string algorithms from the command line. Every command
//! prints a single JSON object on standard output.

mod input;
mod selftest;
mod spec_json;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use strproc::concatenation::{min_lex_concat, shortest_common_concat, shortest_palindrome_concat};
use strproc::counting::{count_constrained, count_epsilon_dfa, max_weight_string};
use strproc::oracles;
use strproc::prefix_queries::build_failure_tree;
use strproc::subsequences::{
    de_bruijn_superstring, lccs_constrained, max_weight_common_subsequence,
    shortest_non_substring_lexicographic, shortest_non_substring_trie, Agg, AggPair,
    DEFAULT_TUPLE_CAP,
};
use strproc::{BigCount, Text};

use input::{load_texts, load_weights, parse_list, parse_texts, Codec, Raw};

/// Failure payload; always a JSON object with an `error` key.
#[derive(Debug)]
pub struct CliError(Value);

impl CliError {
    pub fn new(msg: String) -> Self {
        CliError(json!({ "error": msg }))
    }

    pub fn with_detail(detail: Value) -> Self {
        CliError(detail)
    }
}

impl From<strproc::Error> for CliError {
    fn from(e: strproc::Error) -> Self {
        CliError::new(e.to_string())
    }
}

type Out = Result<Value, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "strproc",
    version,
    about = "Prefix queries, concatenations, common substrings and string counting"
)]
struct Cli {
    /// Wrap the result in a report with an input digest and timing.
    #[arg(long, global = true)]
    report: bool,
    /// Characters of the alphabet in symbol order, overriding the default.
    #[arg(long, global = true, value_name = "FILE")]
    alphabet_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    #[command(flatten)]
    Task(Task),
    /// Run the brute-force reference for a task instead.
    Oracle {
        /// Largest answer length the enumerating oracles explore.
        #[arg(long, default_value_t = 12)]
        cap: usize,
        #[command(subcommand)]
        task: Task,
    },
    /// Seeded oracle-equivalence battery across all modules.
    Selftest {
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_lcp_fault: bool,
    },
}

#[derive(Debug, Subcommand)]
enum Task {
    /// Prefix queries on the failure tree.
    PrefixQuery(PrefixArgs),
    #[command(subcommand)]
    Concat(ConcatCmd),
    #[command(subcommand)]
    Subseq(SubseqCmd),
    #[command(subcommand)]
    Count(CountCmd),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PrefixOp {
    Pq,
    Lpq,
}

#[derive(Debug, Args)]
struct PrefixArgs {
    /// The text, or a JSON array of symbol ids.
    #[arg(long)]
    text: String,
    #[arg(long, value_enum)]
    op: PrefixOp,
    /// `i,j` for pq, `j,k` for lpq.
    #[arg(long)]
    args: String,
    /// Answer lpq through the strided ancestor table.
    #[arg(long)]
    stride: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum ConcatCmd {
    /// Shortest string that concatenates from both sets.
    ShortestCommon {
        #[arg(long)]
        set_a: PathBuf,
        #[arg(long)]
        set_b: PathBuf,
    },
    /// Shortest palindromic concatenation from one set.
    Palindrome {
        #[arg(long)]
        set: PathBuf,
    },
    /// Lexicographically smallest concatenation of all strings.
    MinLex {
        #[arg(long)]
        set: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AbsentMethod {
    Trie,
    Lex,
}

#[derive(Debug, Subcommand)]
enum SubseqCmd {
    /// Longest substring meeting per-text occurrence thresholds.
    Lccs {
        #[arg(long)]
        texts: PathBuf,
        #[arg(long)]
        thresholds: String,
        #[arg(long = "f")]
        f: usize,
    },
    /// Maximum-weight common subsequence.
    Mwcs {
        #[arg(long)]
        texts: PathBuf,
        /// Position weights; unit weights when omitted.
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long, default_value = "sum")]
        agg1: Agg,
        #[arg(long, default_value = "min")]
        agg2: Agg,
    },
    /// Shortest string absent from every text.
    Absent {
        #[arg(long)]
        texts: PathBuf,
        #[arg(long)]
        alphabet: Option<u32>,
        #[arg(long, value_enum, default_value = "trie")]
        method: AbsentMethod,
    },
    /// String containing every length-q string over the alphabet.
    Debruijn {
        #[arg(long)]
        alphabet: u32,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Debug, Subcommand)]
enum CountCmd {
    /// Strings meeting forbidden-pattern and occurrence constraints.
    Constrained {
        #[arg(long)]
        spec: PathBuf,
        /// Also report the count reduced modulo this value.
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Accepting runs of an automaton with non-absorbing edges.
    Edfa {
        #[arg(long)]
        dfa: PathBuf,
        #[arg(long)]
        lens: String,
    },
    /// Heaviest string meeting the constraints.
    Maxweight {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value = "sum")]
        agg: Agg,
    },
}

struct Ctx<'a> {
    alphabet_file: Option<&'a Path>,
    oracle: Option<usize>,
}

fn texts_of(
    ctx: &Ctx,
    raws: &[&Raw],
    size: Option<u32>,
) -> Result<(Codec, Vec<Vec<Text>>), CliError> {
    let codec = Codec::for_inputs(raws, ctx.alphabet_file, size)?;
    let sets = raws
        .iter()
        .map(|r| codec.encode(r))
        .collect::<Result<_, _>>()?;
    Ok((codec, sets))
}

fn length_witness(codec: &Codec, r: Option<(usize, Text)>) -> Value {
    match r {
        Some((l, w)) => json!({ "length": l, "witness": codec.decode(&w) }),
        None => json!({ "length": null, "witness": null }),
    }
}

fn prefix_query(ctx: &Ctx, a: &PrefixArgs) -> Out {
    let raw = if a.text.trim_start().starts_with('[') {
        parse_texts(&format!("[{}]", a.text))?
    } else {
        Raw::Strings(vec![a.text.clone()])
    };
    let (_, sets) = texts_of(ctx, &[&raw], None)?;
    let s = &sets[0][0];
    let args: Vec<usize> = parse_list(&a.args)?;
    let [x, y] = args[..] else {
        return Err(CliError::new(
            "--args takes exactly two comma-separated integers".into(),
        ));
    };
    let result = match (a.op, ctx.oracle) {
        (PrefixOp::Pq, None) => json!(build_failure_tree(s, None)?.pq(x, y)?),
        (PrefixOp::Pq, Some(_)) => json!(oracles::oracle_pq(s, x, y)?),
        (PrefixOp::Lpq, None) => {
            let tree = build_failure_tree(s, a.stride)?;
            json!(if a.stride.is_some() {
                tree.lpq_strided(x, y)?
            } else {
                tree.lpq(x, y)?
            })
        }
        (PrefixOp::Lpq, Some(_)) => json!(oracles::oracle_lpq(s, x, y)?),
    };
    Ok(json!({ "result": result }))
}

fn concat(ctx: &Ctx, cmd: &ConcatCmd) -> Out {
    match cmd {
        ConcatCmd::ShortestCommon { set_a, set_b } => {
            let (ra, rb) = (load_texts(set_a)?, load_texts(set_b)?);
            let (codec, sets) = texts_of(ctx, &[&ra, &rb], None)?;
            let r = match ctx.oracle {
                None => shortest_common_concat(&sets[0], &sets[1])?,
                Some(cap) => oracles::oracle_shortest_common_concat(&sets[0], &sets[1], cap)?,
            };
            Ok(length_witness(&codec, r))
        }
        ConcatCmd::Palindrome { set } => {
            let r = load_texts(set)?;
            let (codec, sets) = texts_of(ctx, &[&r], None)?;
            let r = match ctx.oracle {
                None => shortest_palindrome_concat(&sets[0])?,
                Some(cap) => oracles::oracle_palindrome_concat(&sets[0], cap)?,
            };
            Ok(length_witness(&codec, r))
        }
        ConcatCmd::MinLex { set } => {
            let r = load_texts(set)?;
            let (codec, sets) = texts_of(ctx, &[&r], None)?;
            let out = match ctx.oracle {
                None => min_lex_concat(&sets[0])?,
                Some(_) => oracles::oracle_min_lex(&sets[0])?,
            };
            Ok(json!({ "result": codec.decode(&out) }))
        }
    }
}

fn subseq(ctx: &Ctx, cmd: &SubseqCmd) -> Out {
    match cmd {
        SubseqCmd::Lccs {
            texts,
            thresholds,
            f,
        } => {
            let r = load_texts(texts)?;
            let (codec, sets) = texts_of(ctx, &[&r], None)?;
            let a: Vec<usize> = parse_list(thresholds)?;
            match ctx.oracle {
                None => {
                    let r = lccs_constrained(&sets[0], &a, *f)?;
                    Ok(
                        json!({ "length": r.length, "witness": codec.decode(&r.witness), "branch": format!("{:?}", r.branch) }),
                    )
                }
                Some(_) => {
                    let (length, w) = oracles::oracle_lccs(&sets[0], &a, *f)?;
                    Ok(json!({ "length": length, "witness": codec.decode(&w) }))
                }
            }
        }
        SubseqCmd::Mwcs {
            texts,
            weights,
            agg1,
            agg2,
        } => {
            let r = load_texts(texts)?;
            let (codec, sets) = texts_of(ctx, &[&r], None)?;
            let texts = &sets[0];
            let w = match weights {
                Some(p) => load_weights(p)?,
                None => texts.iter().map(|t| vec![1.0; t.len()]).collect(),
            };
            let aggs = AggPair {
                agg1: *agg1,
                agg2: *agg2,
            };
            match ctx.oracle {
                None => {
                    let r = max_weight_common_subsequence(texts, &w, aggs, DEFAULT_TUPLE_CAP)?;
                    let chain: Vec<&Vec<usize>> = r.chain.iter().map(|t| &t.positions).collect();
                    Ok(
                        json!({ "weight": r.weight, "subsequence": codec.decode(&r.subsequence), "chain": chain }),
                    )
                }
                Some(_) => Ok(json!({ "weight": oracles::oracle_mwcs(texts, &w, aggs)? })),
            }
        }
        SubseqCmd::Absent {
            texts,
            alphabet,
            method,
        } => {
            let r = load_texts(texts)?;
            let (codec, sets) = texts_of(ctx, &[&r], *alphabet)?;
            let m = alphabet.unwrap_or_else(|| codec.size(&sets[0]));
            let w = match (ctx.oracle, method) {
                (None, AbsentMethod::Trie) => shortest_non_substring_trie(&sets[0], m)?,
                (None, AbsentMethod::Lex) => shortest_non_substring_lexicographic(&sets[0], m)?,
                (Some(_), _) => {
                    let longest = sets[0].iter().map(|t| t.len()).max().unwrap_or(0);
                    oracles::oracle_absent(&sets[0], m, longest + 1)?
                }
            };
            Ok(json!({ "length": w.len(), "witness": codec.decode(&w) }))
        }
        SubseqCmd::Debruijn { alphabet, order } => {
            if ctx.oracle.is_some() {
                return Err(CliError::new("debruijn has no oracle".into()));
            }
            let w = de_bruijn_superstring(*alphabet, *order)?;
            Ok(json!({ "length": w.len(), "witness": Codec::letters(*alphabet).decode(&w) }))
        }
    }
}

fn count_json(n: &BigCount, modulus: Option<u64>) -> Result<Value, CliError> {
    let mut out = json!({ "count": n.to_string() });
    if let Some(m) = modulus {
        if m == 0 {
            return Err(CliError::new("modulus must be positive".into()));
        }
        out["modulus"] = json!(m);
        out["residue"] = json!((n % BigCount::from(m)).to_string());
    }
    Ok(out)
}

fn count(ctx: &Ctx, cmd: &CountCmd) -> Out {
    match cmd {
        CountCmd::Constrained { spec, modulus } => {
            let spec = spec_json::load_spec(spec)?;
            let n = match ctx.oracle {
                None => count_constrained(&spec)?,
                Some(_) => oracles::oracle_count(&spec)?,
            };
            count_json(&n, *modulus)
        }
        CountCmd::Edfa { dfa, lens } => {
            let dfa = spec_json::load_dfa(dfa)?;
            let lengths = spec_json::lengths(&parse_list(lens)?);
            let n = match ctx.oracle {
                None => count_epsilon_dfa(&dfa, &lengths)?,
                Some(_) => oracles::oracle_edfa_count(&dfa, &lengths)?,
            };
            count_json(&n, None)
        }
        CountCmd::Maxweight { spec, agg } => {
            let spec = spec_json::load_spec(spec)?;
            let codec = Codec::letters(spec.alphabet);
            let r = match ctx.oracle {
                None => max_weight_string(&spec, *agg)?.map(|r| (r.weight, r.witness)),
                Some(_) => oracles::oracle_max_weight_string(&spec, *agg)?,
            };
            Ok(match r {
                Some((w, s)) => json!({ "weight": w, "witness": codec.decode(&s) }),
                None => json!({ "weight": null, "witness": null }),
            })
        }
    }
}

fn run_task(ctx: &Ctx, task: &Task) -> Out {
    match task {
        Task::PrefixQuery(a) => prefix_query(ctx, a),
        Task::Concat(c) => concat(ctx, c),
        Task::Subseq(c) => subseq(ctx, c),
        Task::Count(c) => count(ctx, c),
    }
}

fn task_name(task: &Task) -> &'static str {
    match task {
        Task::PrefixQuery(_) => "prefix-query",
        Task::Concat(ConcatCmd::ShortestCommon { .. }) => "concat shortest-common",
        Task::Concat(ConcatCmd::Palindrome { .. }) => "concat palindrome",
        Task::Concat(ConcatCmd::MinLex { .. }) => "concat min-lex",
        Task::Subseq(SubseqCmd::Lccs { .. }) => "subseq lccs",
        Task::Subseq(SubseqCmd::Mwcs { .. }) => "subseq mwcs",
        Task::Subseq(SubseqCmd::Absent { .. }) => "subseq absent",
        Task::Subseq(SubseqCmd::Debruijn { .. }) => "subseq debruijn",
        Task::Count(CountCmd::Constrained { .. }) => "count constrained",
        Task::Count(CountCmd::Edfa { .. }) => "count edfa",
        Task::Count(CountCmd::Maxweight { .. }) => "count maxweight",
    }
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Task(t) => task_name(t).to_string(),
        Command::Oracle { task, .. } => format!("oracle {}", task_name(task)),
        Command::Selftest { .. } => "selftest".to_string(),
    }
}

/// Digest over the raw arguments and the bytes of every readable file
/// they name.
fn input_digest(argv: &[String]) -> String {
    let mut h = Sha256::new();
    for a in argv.iter().skip(1) {
        h.update(a.as_bytes());
        h.update([0]);
        if let Ok(bytes) = std::fs::read(a) {
            h.update(&bytes);
        }
    }
    format!("{:x}", h.finalize())
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse_from(&argv);
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Task(t) => run_task(
            &Ctx {
                alphabet_file: cli.alphabet_file.as_deref(),
                oracle: None,
            },
            t,
        ),
        Command::Oracle { cap, task } => run_task(
            &Ctx {
                alphabet_file: cli.alphabet_file.as_deref(),
                oracle: Some(*cap),
            },
            task,
        ),
        Command::Selftest {
            seed,
            inject_lcp_fault,
        } => selftest::run(*seed, *inject_lcp_fault),
    };
    let (value, code) = match outcome {
        Ok(v) => (v, ExitCode::SUCCESS),
        Err(CliError(v)) => (v, ExitCode::from(1)),
    };
    let value = if cli.report {
        json!({
            "command": command_name(&cli.command),
            "parameters": argv[1..],
            "inputs_digest": input_digest(&argv),
            "result": value,
            "wall_time_ms": start.elapsed().as_secs_f64() * 1e3,
        })
    } else {
        value
    };
    println!("{value}");
    code
}
