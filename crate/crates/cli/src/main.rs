//! `gemkit`: inspect gems, compute their invariants and check identities.
//!
//! Exit codes: 0 success, 1 identity violated or bound inconsistent,
//! 2 usage or parse error, 3 validation error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{BoundArgs, Suite};

#[derive(Parser)]
#[command(
    name = "gemkit",
    version,
    about = "Edge-colored graphs encoding PL manifolds"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a gem file.
    Validate { file: PathBuf },
    /// Vertex classes, residue counts and bipartiteness.
    Info { file: PathBuf },
    /// Write the boundary graph (one file per component when there are several).
    Boundary {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Cap the boundary with a singular color.
    Regularize {
        file: PathBuf,
        #[arg(long)]
        singular_color: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// List 1-dipoles, optionally cancelling one.
    Dipoles {
        file: PathBuf,
        #[arg(long)]
        cancel: Option<usize>,
        #[arg(short, long, requires = "cancel")]
        out: Option<PathBuf>,
    },
    /// Cancel 1-dipoles until none remain.
    Contract {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Regular genus.
    Genus {
        file: PathBuf,
        /// Print rho for every cyclic permutation.
        #[arg(long)]
        all_perms: bool,
    },
    /// Sum of rho over all cyclic permutations.
    Gdegree { file: PathBuf },
    /// Face counts of the associated complex.
    Fvector { file: PathBuf },
    /// Euler characteristic.
    Euler { file: PathBuf },
    /// Fundamental group presentation from a color pair.
    Pi1 {
        file: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        pair: (usize, usize),
        #[arg(long)]
        simplify: bool,
    },
    /// Run an identity check.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Compare the gem with the lower bounds for (chi, m, m_hat, h).
    Bound {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        mhat: i64,
        #[arg(long)]
        h: i64,
        #[arg(long)]
        semisimple: bool,
        /// Treat the gem as realizing the minimal gem-complexity.
        #[arg(long)]
        minimal: bool,
    },
    /// Append to or query a catalog of invariant records.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Graphviz export.
    ExportDot {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    Add {
        store: PathBuf,
        file: PathBuf,
    },
    Scan {
        store: PathBuf,
        /// Only the record of this gem.
        file: Option<PathBuf>,
        /// `FIELD OP VALUE` with OP one of = != < <= > >=; repeatable.
        #[arg(long = "where")]
        filters: Vec<String>,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (i, j) = s.split_once(',').ok_or("expected I,J")?;
    let color = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((color(i)?, color(j)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate { file } => commands::validate(file),
        Command::Info { file } => commands::info(file),
        Command::Boundary { file, out } => commands::boundary(file, out),
        Command::Regularize {
            file,
            singular_color,
            out,
        } => commands::regularize_cmd(file, *singular_color, out),
        Command::Dipoles { file, cancel, out } => commands::dipoles(file, *cancel, out.as_deref()),
        Command::Contract { file, out } => commands::contract(file, out),
        Command::Genus { file, all_perms } => commands::genus(file, *all_perms),
        Command::Gdegree { file } => commands::gdegree(file),
        Command::Fvector { file } => commands::fvector(file),
        Command::Euler { file } => commands::euler(file),
        Command::Pi1 {
            file,
            pair,
            simplify,
        } => commands::pi1(file, *pair, *simplify),
        Command::Check { file, suite } => commands::check(file, *suite),
        Command::Bound {
            file,
            chi,
            m,
            mhat,
            h,
            semisimple,
            minimal,
        } => commands::bound(
            file,
            &BoundArgs {
                chi: *chi,
                m: *m,
                m_hat: *mhat,
                h: *h,
                semisimple: *semisimple,
                minimal: *minimal,
            },
        ),
        Command::Catalog(CatalogCommand::Add { store, file }) => {
            commands::catalog_add_cmd(store, file)
        }
        Command::Catalog(CatalogCommand::Scan {
            store,
            file,
            filters,
        }) => commands::catalog_scan_cmd(store, file.as_deref(), filters),
        Command::ExportDot { file, out } => commands::export_dot_cmd(file, out),
    };
    match outcome {
        Ok(report) => report.emit(cli.json),
        Err(failure) => failure.emit(cli.json),
    }
}
