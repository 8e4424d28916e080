use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod selftest;

#[derive(Debug, Parser)]
#[command(name = "gradedpi", version, about = "Graded polynomial identities of small Lie algebras over finite fields")]
struct Cli {
    /// Emit JSON reports instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Built-in algebras and algebra files.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Check that every identity of a basis vanishes on an algebra.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Basis file, or the name of a shipped basis.
        #[arg(long)]
        basis: String,
        /// Check only the identity with this name.
        #[arg(long)]
        ident: Option<String>,
    },
    /// Graded identities of an algebra inside one cell.
    Kernel {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        cell: String,
    },
    /// Consequences of a basis inside one cell (a lower bound).
    Consequences {
        #[arg(long)]
        basis: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        cell: String,
        /// `s,r` or `s,r,margin`.
        #[arg(long)]
        limits: Option<String>,
    },
    /// Compare two spans in the same cell.
    CompareSpans {
        /// `kernel:ALGEBRA` or `consequences:BASIS`.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        cell: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        limits: Option<String>,
    },
    /// Compare the identity kernels of two algebras cell by cell.
    CompareKernels {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_total_degree: u32,
        /// Use every multilinear cell up to the total degree.
        #[arg(long)]
        multilinear: bool,
        /// Explicit cells, instead of or in addition to `--multilinear`.
        #[arg(long)]
        cell: Vec<String>,
    },
    /// Structural analysis: center, radicals, monolith, criteria.
    Analyze {
        #[command(flatten)]
        target: Target,
        #[arg(long, conflicts_with = "ungraded")]
        graded: bool,
        #[arg(long)]
        ungraded: bool,
    },
    /// Spectrum of `ad u`.
    Spectrum {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        element: String,
    },
    /// Random bracket trees against their normal forms.
    Selftest {
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
enum AlgebraCommand {
    /// Built-in algebra names.
    List,
    /// Basis, grades and brackets.
    Show {
        #[command(flatten)]
        target: Target,
    },
    /// Check an algebra file.
    Validate { path: PathBuf },
}

#[derive(Debug, Args)]
struct Target {
    /// Built-in name or path to an algebra JSON file.
    #[arg(long)]
    algebra: String,
    /// `p` or `p^2`; defaults to 7 for Z3 gradings and 5 otherwise.
    #[arg(long)]
    field: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let out = commands::Output { json: cli.json };
    let result = match cli.command {
        Command::Algebra(AlgebraCommand::List) => commands::algebra_list(out),
        Command::Algebra(AlgebraCommand::Show { target }) => {
            commands::algebra_show(out, &target.algebra, target.field.as_deref())
        }
        Command::Algebra(AlgebraCommand::Validate { path }) => commands::algebra_validate(out, &path),
        Command::Verify { target, basis, ident } => {
            commands::verify(out, &target.algebra, target.field.as_deref(), &basis, ident.as_deref())
        }
        Command::Kernel { target, cell } => {
            commands::kernel(out, &target.algebra, target.field.as_deref(), &cell)
        }
        Command::Consequences { basis, field, cell, limits } => {
            commands::consequences(out, &basis, field.as_deref(), &cell, limits.as_deref())
        }
        Command::CompareSpans { a, b, cell, field, limits } => {
            commands::compare_spans(out, &a, &b, &cell, field.as_deref(), limits.as_deref())
        }
        Command::CompareKernels { a, b, field, max_total_degree, multilinear, cell } => {
            commands::compare_kernels(out, &a, &b, field.as_deref(), max_total_degree, multilinear, &cell)
        }
        Command::Analyze { target, ungraded, .. } => {
            commands::analyze(out, &target.algebra, target.field.as_deref(), ungraded)
        }
        Command::Spectrum { target, element } => {
            commands::spectrum(out, &target.algebra, target.field.as_deref(), &element)
        }
        Command::Selftest { samples } => selftest::run(out, cli.seed, samples),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
