//! Command-line front end for `billey-core`.
//!
//! Every subcommand prints text, JSON or LaTeX. Exit status is 0 on
//! success, 1 when the mathematics rejects the input and 2 for malformed
//! arguments.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use billey_core::weyl::DEFAULT_GROUP_CAP;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod json;
pub mod render;

#[derive(Debug, Parser)]
#[command(name = "billey", version, about = "Equivariant Schubert calculus on flag varieties")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_CAP)]
    pub max_group_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// Either `--type X --rank n` or `--cartan FILE`.
#[derive(Debug, Clone, Default, Args)]
pub struct GroupArgs {
    /// Cartan family: A, B, C, D, F or G.
    #[arg(long = "type", value_name = "FAMILY")]
    pub family: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// JSON file: {"family": "A", "rank": 2} or {"matrix": [[2, -1], [-1, 2]]}.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["family", "rank"])]
    pub cartan: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Specialize {
    /// Every simple root to t.
    Line,
    /// alpha_i to t_i - t_{i+1} (type A only).
    Tvars,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variety {
    Springer,
    Hessenberg,
    Peterson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchMode {
    First,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PetersonCheck {
    /// Chevalley-Monk expansion of p_{s_i} p_A.
    Cm,
    /// Constant c in prod p_{s_i} = c p_{v_A}.
    Giambelli,
    /// Restriction matrix over all subsets and its determinant.
    Matrix,
}

#[derive(Debug, Clone, Args)]
pub struct VarietyArgs {
    #[arg(long, value_enum)]
    pub variety: Variety,
    /// Jordan block sizes, e.g. 2,1.
    #[arg(long)]
    pub jordan: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Hessenberg function values h(1),...,h(n).
    #[arg(long)]
    pub h: Option<String>,
    #[command(flatten)]
    pub group: GroupArgs,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Positive roots in the simple-root basis.
    Roots {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// All group elements with lengths.
    Group {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Length and reduced words of an element.
    Word {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        w: String,
        /// List every reduced word.
        #[arg(long)]
        all: bool,
    },
    /// The Bruhat graph, or a single comparison with --v and --w.
    Bruhat {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, requires = "w")]
        v: Option<String>,
        #[arg(long, requires = "v")]
        w: Option<String>,
    },
    /// Billey's formula sigma_v(w).
    Billey {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[arg(long, value_enum)]
        specialize: Option<Specialize>,
    },
    /// Schubert classes at every vertex of the Bruhat graph.
    ClassTable {
        #[command(flatten)]
        group: GroupArgs,
        /// Only the class of this element.
        #[arg(long)]
        v: Option<String>,
    },
    /// GKM divisibility on every edge, for Schubert classes or a class file.
    GkmCheck {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, conflicts_with = "class")]
        v: Option<String>,
        /// Class in the JSON array format of class-table.
        #[arg(long, value_name = "FILE")]
        class: Option<PathBuf>,
    },
    /// Kumar's smoothness criterion at wB for the class of v.
    Kumar {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Excited Young diagrams of lambda in mu and their weighted sum.
    Eyd {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Rows of the ambient Grassmannian (default: rows of mu).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        n: Option<usize>,
    },
    /// Compare the excited-diagram sum with Billey's formula in G(k, n).
    EydVerify {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Torus fixed points of a Springer, Hessenberg or Peterson variety.
    FixedPoints {
        #[command(flatten)]
        variety: VarietyArgs,
    },
    /// Poset pinball roll-downs and their module-basis certificates.
    Pinball {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long, value_enum, default_value_t = SearchMode::First)]
        mode: SearchMode,
    },
    /// Chevalley-Monk, Giambelli and generation checks for Peterson varieties.
    Peterson {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = PetersonCheck::Matrix)]
        check: PetersonCheck,
        #[arg(long)]
        i: Option<usize>,
        /// Subset of simple indices, e.g. 1,2.
        #[arg(long = "A", value_name = "SUBSET")]
        a: Option<String>,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed arguments; exit 2.
    Usage(String),
    /// Valid syntax the mathematics rejects; exit 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<billey_core::Error> for CliError {
    fn from(e: billey_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{}", text);
                2
            } else {
                let _ = write!(stdout, "{}", text);
                0
            };
        }
    };
    let result = commands::execute(&cli.command, &cli.global).and_then(|body| {
        let body = if body.ends_with('\n') { body } else { body + "\n" };
        match &cli.global.out {
            Some(path) => std::fs::write(path, body)
                .map_err(|e| CliError::Domain(format!("cannot write {}: {}", path.display(), e))),
            None => stdout
                .write_all(body.as_bytes())
                .map_err(|e| CliError::Domain(format!("cannot write output: {}", e))),
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}
