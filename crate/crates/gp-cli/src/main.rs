mod context_file;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gp_core::{foata, oracle, witness, words, GraphContext, OrbitBudget, Word};

use context_file::{load_context, CliError};

/// Compute in graph products of finite monoids.
///
/// All subcommands take a context file: a JSON description of the graph
/// and the multiplication table of each vertex monoid. Words are written
/// as whitespace-separated `vertex:elem` tokens, with `-` for the empty
/// word. Boolean subcommands print `true`/`false` and exit with 0/1;
/// other failures exit with 2.
#[derive(Parser)]
#[command(name = "gp", version, about, max_term_width = 80)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a context file and report per-vertex structure flags.
    Check {
        /// Path to the context JSON file.
        context: PathBuf,
    },
    /// Print the reduced form of a word.
    Reduce { context: PathBuf, word: String },
    /// Decide whether two words represent the same element.
    Eq {
        context: PathBuf,
        x: String,
        y: String,
    },
    /// Print the reduced product of two words.
    Mul {
        context: PathBuf,
        x: String,
        y: String,
    },
    /// Print the left Foata normal form of a word, block by block.
    Foata { context: PathBuf, word: String },
    /// Split a word into its maximal left-invertible prefix and the Foata
    /// form of the remainder.
    Decompose { context: PathBuf, word: String },
    /// Print an idempotent witness for the word under the chosen relation.
    Witness {
        #[arg(long, value_enum)]
        relation: Relation,
        context: PathBuf,
        word: String,
    },
    /// Report the vertex-local analysis of a word: goodness, absorbency,
    /// amenability, movable positions, and the four derived images.
    Analyze {
        /// Vertex the analysis is relative to.
        #[arg(long)]
        vertex: usize,
        context: PathBuf,
        word: String,
    },
    /// Decide equality by exhaustive search instead of normal forms.
    OracleEq {
        /// Abort with an error if the search would visit more states.
        #[arg(long, default_value_t = OrbitBudget::default().max_states)]
        max_states: usize,
        context: PathBuf,
        x: String,
        y: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    Rstar,
    Rtilde,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn parse_word(ctx: &GraphContext, s: &str) -> Result<Word, CliError> {
    let word = Word::parse(s)?;
    ctx.validate_word(&word)?;
    Ok(word)
}

fn bool_exit(value: bool) -> ExitCode {
    println!("{value}");
    if value {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, CliError> {
    match cmd {
        Cmd::Check { context } => {
            let loaded = load_context(&context)?;
            for (v, name) in loaded.names.iter().enumerate() {
                let m = loaded.ctx.monoid(v);
                let op = m.opposite();
                let label = match name {
                    Some(n) => format!("vertex {v} ({n})"),
                    None => format!("vertex {v}"),
                };
                println!(
                    "{label}: left-abundant={} right-abundant={} left-fountain={} right-fountain={}",
                    m.is_left_abundant(),
                    op.is_left_abundant(),
                    m.is_left_fountain(),
                    op.is_left_fountain(),
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reduce { context, word } => {
            let loaded = load_context(&context)?;
            let w = parse_word(&loaded.ctx, &word)?;
            println!("{}", words::reduce(&loaded.ctx, &w));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Eq { context, x, y } => {
            let loaded = load_context(&context)?;
            let x = parse_word(&loaded.ctx, &x)?;
            let y = parse_word(&loaded.ctx, &y)?;
            Ok(bool_exit(foata::equal(&loaded.ctx, &x, &y)))
        }
        Cmd::Mul { context, x, y } => {
            let loaded = load_context(&context)?;
            let x = parse_word(&loaded.ctx, &x)?;
            let y = parse_word(&loaded.ctx, &y)?;
            println!("{}", words::multiply(&loaded.ctx, &x, &y));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Foata { context, word } => {
            let loaded = load_context(&context)?;
            let w = parse_word(&loaded.ctx, &word)?;
            println!("{}", foata::left_foata(&loaded.ctx, &w));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decompose { context, word } => {
            let loaded = load_context(&context)?;
            let w = parse_word(&loaded.ctx, &word)?;
            println!("{}", foata::decompose(&loaded.ctx, &w));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Witness {
            relation,
            context,
            word,
        } => {
            let loaded = load_context(&context)?;
            let w = parse_word(&loaded.ctx, &word)?;
            let e = match relation {
                Relation::Rstar => witness::rstar_witness(&loaded.ctx, &w)?,
                Relation::Rtilde => witness::rtilde_witness(&loaded.ctx, &w)?,
            };
            println!("{e}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Analyze {
            vertex,
            context,
            word,
        } => {
            let loaded = load_context(&context)?;
            if vertex >= loaded.ctx.vertex_count() {
                return Err(CliError::BadVertex {
                    vertex,
                    bound: loaded.ctx.vertex_count(),
                });
            }
            let w = parse_word(&loaded.ctx, &word)?;
            let ctx = &loaded.ctx;
            println!("good: {}", words::is_good(ctx, &w, vertex));
            println!("absorbing: {}", words::is_absorbing(ctx, &w, vertex));
            println!("amenable: {}", words::is_amenable(ctx, &w, vertex));
            let movable = words::movable_positions(ctx, &w, vertex);
            let rendered: Vec<String> = movable.iter().map(usize::to_string).collect();
            println!("movable: {{{}}}", rendered.join(", "));
            let reduced = words::reduce(ctx, &w);
            println!("drop-first: {}", words::drop_first(ctx, &reduced, vertex));
            println!("first-letter: {}", words::first_letter(&reduced, vertex));
            println!("left-factor: {}", words::left_factor(ctx, &w, vertex));
            println!("right-factor: {}", words::right_factor(ctx, &w, vertex));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::OracleEq {
            max_states,
            context,
            x,
            y,
        } => {
            let loaded = load_context(&context)?;
            let x = parse_word(&loaded.ctx, &x)?;
            let y = parse_word(&loaded.ctx, &y)?;
            let budget = OrbitBudget::with_max_states(max_states);
            Ok(bool_exit(oracle::equal_oracle(
                &loaded.ctx,
                &x,
                &y,
                &budget,
            )?))
        }
    }
}
