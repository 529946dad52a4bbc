//! Command-line front end.
//!
//! Exit codes: 0 = pass, 1 = a property fails (violation found), 2 = usage
//! error, 3 = truncated or resource limit hit. The distinction between 1 and
//! 3 lets pipelines tell a falsification from a depth or node limit.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use avoidance::constructions::verify_structural;
use avoidance::{
    enumerate_tree, first_violation, generate, longest_words, two_zero_window_check, window,
    AvoidanceSpec, ConstructionId, Relation, SearchConfig, SearchError, Word,
};

const SCHEMA_VERSION: u32 = 1;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TRUNCATED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "avoidance",
    version,
    about = "Check, enumerate, and construct self-avoiding words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    Subword,
    Subsequence,
}

impl From<RelationArg> for Relation {
    fn from(r: RelationArg) -> Relation {
        match r {
            RelationArg::Subword => Relation::Subword,
            RelationArg::Subsequence => Relation::Subsequence,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructionArg {
    /// Ternary weakly self-avoiding word (zeros at the f-positions).
    Ternary,
    /// Binary word satisfying the offset-2 variant.
    BinaryOffset2,
}

impl From<ConstructionArg> for ConstructionId {
    fn from(c: ConstructionArg) -> ConstructionId {
        match c {
            ConstructionArg::Ternary => ConstructionId::TernaryWsa,
            ConstructionArg::BinaryOffset2 => ConstructionId::BinaryOffset2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FormatArg {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ModeArg {
    /// Run the full pairwise window scan (quadratic; capped length).
    Pairwise,
    /// Run the linear structural checks only (usable at large lengths).
    Structural,
}

#[derive(Subcommand)]
enum Command {
    /// Test one word; prints the first violating window pair if any.
    Check {
        /// Digit string, or "-" to read the word from stdin.
        word: String,
        #[arg(long, value_enum, default_value = "subword")]
        relation: RelationArg,
        /// Smallest window index the constraint applies to.
        #[arg(long, default_value_t = 1)]
        min_index: usize,
        /// Alphabet size; inferred as 1 + max digit when omitted.
        #[arg(long)]
        alphabet_size: Option<u8>,
    },
    /// Breadth-first enumeration of the minimal-violator tree.
    Enumerate {
        #[arg(short = 'k', long, default_value_t = 2)]
        alphabet_size: u8,
        #[arg(long, value_enum, default_value = "subword")]
        relation: RelationArg,
        #[arg(long, default_value_t = 1)]
        min_index: usize,
        /// Fixed starting prefix (must be self-avoiding).
        #[arg(long)]
        root: Option<String>,
        /// Stop extending self-avoiding words of this length.
        #[arg(long)]
        depth_limit: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Recompute every violation check from scratch (cross-validation).
        #[arg(long)]
        full_recheck: bool,
    },
    /// All self-avoiding words of maximal length.
    Longest {
        #[arg(short = 'k', long, default_value_t = 2)]
        alphabet_size: u8,
        #[arg(long, value_enum, default_value = "subword")]
        relation: RelationArg,
        #[arg(long, default_value_t = 1)]
        min_index: usize,
        #[arg(long)]
        root: Option<String>,
        #[arg(long)]
        depth_limit: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Print a prefix of one of the explicit infinite words.
    Generate {
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        #[arg(long)]
        length: usize,
    },
    /// Verify the construction invariants on a generated prefix.
    Verify {
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value = "pairwise")]
        mode: ModeArg,
        /// Largest length accepted in pairwise mode.
        #[arg(long, default_value_t = 8192)]
        pairwise_cap: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Check {
            word,
            relation,
            min_index,
            alphabet_size,
        } => cmd_check(&word, relation.into(), min_index, alphabet_size),
        Command::Enumerate {
            alphabet_size,
            relation,
            min_index,
            root,
            depth_limit,
            format,
            full_recheck,
        } => {
            let config = build_config(
                alphabet_size,
                relation.into(),
                min_index,
                root.as_deref(),
                depth_limit,
                full_recheck,
            )?;
            cmd_enumerate(&config, format)
        }
        Command::Longest {
            alphabet_size,
            relation,
            min_index,
            root,
            depth_limit,
            format,
        } => {
            let config = build_config(
                alphabet_size,
                relation.into(),
                min_index,
                root.as_deref(),
                depth_limit,
                false,
            )?;
            cmd_longest(&config, format)
        }
        Command::Generate {
            construction,
            length,
        } => cmd_generate(construction.into(), length),
        Command::Verify {
            construction,
            length,
            mode,
            pairwise_cap,
        } => cmd_verify(construction.into(), length, mode, pairwise_cap),
    }
}

fn cmd_check(
    word: &str,
    relation: Relation,
    min_index: usize,
    alphabet_size: Option<u8>,
) -> Result<ExitCode, String> {
    let text = if word == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf.trim().to_string()
    } else {
        word.to_string()
    };
    let x = Word::from_digits(&text, alphabet_size).map_err(|e| e.to_string())?;
    let spec = AvoidanceSpec::new(relation, min_index).map_err(|e| e.to_string())?;
    match first_violation(&x, &spec) {
        None => {
            println!("self-avoiding");
            Ok(ExitCode::SUCCESS)
        }
        Some(v) => {
            let wi = window(&x, v.i).expect("violation indices are in range");
            let wj = window(&x, v.j).expect("violation indices are in range");
            println!(
                "violation: i={} j={} window_i={} window_j={}",
                v.i, v.j, wi, wj
            );
            Ok(ExitCode::from(EXIT_VIOLATION))
        }
    }
}

fn build_config(
    alphabet_size: u8,
    relation: Relation,
    min_index: usize,
    root: Option<&str>,
    depth_limit: Option<usize>,
    full_recheck: bool,
) -> Result<SearchConfig, String> {
    let spec = AvoidanceSpec::new(relation, min_index).map_err(|e| e.to_string())?;
    let mut config = SearchConfig::new(alphabet_size, spec);
    if let Some(root) = root {
        config.root =
            Some(Word::from_digits(root, Some(alphabet_size)).map_err(|e| e.to_string())?);
    }
    config.depth_limit = depth_limit;
    config.full_recheck = full_recheck;
    if let Ok(budget) = std::env::var("AVOIDANCE_NODE_BUDGET") {
        config.node_budget = budget
            .parse()
            .map_err(|_| format!("AVOIDANCE_NODE_BUDGET is not a number: {budget}"))?;
    }
    Ok(config)
}

fn search_exit(err: SearchError) -> Result<ExitCode, String> {
    match err {
        SearchError::NodeBudgetExhausted(_) => {
            eprintln!("error: {err}");
            Ok(ExitCode::from(EXIT_TRUNCATED))
        }
        other => Err(other.to_string()),
    }
}

fn cmd_enumerate(config: &SearchConfig, format: FormatArg) -> Result<ExitCode, String> {
    let summary = match enumerate_tree(config) {
        Ok(s) => s,
        Err(e) => return search_exit(e),
    };
    match format {
        FormatArg::Text => {
            for leaf in &summary.leaves {
                println!("{leaf}");
            }
            let mut line = format!(
                "leaves={} max_leaf_len={} longest_sa={}",
                summary.leaf_count, summary.max_leaf_length, summary.max_self_avoiding_length
            );
            if summary.truncated {
                line.push_str(" truncated=true");
            }
            println!("{line}");
        }
        FormatArg::Jsonl => {
            for leaf in &summary.leaves {
                println!(
                    "{}",
                    json!({
                        "type": "leaf",
                        "schema_version": SCHEMA_VERSION,
                        "word": leaf.to_string(),
                        "len": leaf.len(),
                    })
                );
            }
            println!(
                "{}",
                json!({
                    "type": "summary",
                    "schema_version": SCHEMA_VERSION,
                    "leaves": summary.leaf_count,
                    "max_leaf_len": summary.max_leaf_length,
                    "longest_sa": summary.max_self_avoiding_length,
                    "truncated": summary.truncated,
                })
            );
        }
    }
    Ok(if summary.truncated {
        ExitCode::from(EXIT_TRUNCATED)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_longest(config: &SearchConfig, format: FormatArg) -> Result<ExitCode, String> {
    let result = match longest_words(config) {
        Ok(r) => r,
        Err(e) => return search_exit(e),
    };
    match format {
        FormatArg::Text => {
            for w in &result.words {
                println!("{w}");
            }
            let mut line = format!("length={} count={}", result.length, result.words.len());
            if result.truncated {
                line.push_str(" truncated=true");
            }
            println!("{line}");
        }
        FormatArg::Jsonl => {
            for w in &result.words {
                println!(
                    "{}",
                    json!({
                        "type": "word",
                        "schema_version": SCHEMA_VERSION,
                        "word": w.to_string(),
                        "len": w.len(),
                    })
                );
            }
            println!(
                "{}",
                json!({
                    "type": "summary",
                    "schema_version": SCHEMA_VERSION,
                    "length": result.length,
                    "count": result.words.len(),
                    "truncated": result.truncated,
                })
            );
        }
    }
    Ok(if result.truncated {
        ExitCode::from(EXIT_TRUNCATED)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_generate(id: ConstructionId, length: usize) -> Result<ExitCode, String> {
    if length == 0 {
        return Err("length must be >= 1".to_string());
    }
    println!("{}", generate(id, length));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    id: ConstructionId,
    length: usize,
    mode: ModeArg,
    pairwise_cap: usize,
) -> Result<ExitCode, String> {
    if length == 0 {
        return Err("length must be >= 1".to_string());
    }
    match mode {
        ModeArg::Pairwise => {
            if length > pairwise_cap {
                return Err(format!(
                    "length {length} exceeds the pairwise cap {pairwise_cap}; \
                     use --mode structural or raise --pairwise-cap"
                ));
            }
            let x = generate(id, length);
            let spec = id.claimed_spec();
            if let Some(v) = first_violation(&x, &spec) {
                let wi = window(&x, v.i).expect("violation indices are in range");
                let wj = window(&x, v.j).expect("violation indices are in range");
                println!(
                    "FAIL: window-avoidance i={} j={} window_i={} window_j={}",
                    v.i, v.j, wi, wj
                );
                return Ok(ExitCode::from(EXIT_VIOLATION));
            }
            println!(
                "pass: window-avoidance (pairwise, length={length}, min_index={})",
                spec.min_index
            );
            let i_min = id.two_zero_min_index();
            if let Some(i) = two_zero_window_check(&x, i_min) {
                println!("FAIL: two-zero-windows at i={i}");
                return Ok(ExitCode::from(EXIT_VIOLATION));
            }
            println!("pass: two-zero-windows (i_min={i_min})");
        }
        ModeArg::Structural => match verify_structural(id, length) {
            Ok(checks) => {
                for check in checks {
                    println!("pass: {check} (length={length})");
                }
            }
            Err(violation) => {
                println!("FAIL: {violation}");
                return Ok(ExitCode::from(EXIT_VIOLATION));
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}
