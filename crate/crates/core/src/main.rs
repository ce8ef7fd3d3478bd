use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use eqfix::cli::{self, BurnsideOp, Command, Format, LefschetzRoute};

/// Burnside-ring valued Lefschetz numbers, equivariant degrees and Fuller
/// indices for finite group actions.
#[derive(Parser)]
#[command(name = "eqfix", version)]
struct Args {
    /// Scene document (JSON)
    #[arg(long, global = true)]
    scene: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Largest group order to generate (at most 2000)
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Defaults to the scene's `command` field
    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Subgroup classes with orders and Weyl group orders
    GroupInfo,
    /// The table of marks
    Marks,
    /// Burnside ring operations on the scene's `burnside` section
    Burnside {
        #[command(subcommand)]
        op: BurnsideCmd,
    },
    /// Equivariant degree of the map named in the scene's `degree` section
    Degree,
    /// Equivariant Lefschetz number
    Lefschetz {
        #[command(subcommand)]
        route: RouteCmd,
    },
    /// Rational equivariant Fuller index of the scene's periodic orbits
    Fuller,
}

#[derive(Subcommand)]
enum BurnsideCmd {
    Mul,
    Eta,
    Induce,
    Restrict,
}

#[derive(Subcommand)]
enum RouteCmd {
    /// From fixed orbit data
    Orbits,
    /// From the marks vector L(f^H)
    Marks,
    /// Alternating trace of a cellular chain map
    Cellular,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = args.command.map(|c| match c {
        Cmd::GroupInfo => Command::GroupInfo,
        Cmd::Marks => Command::Marks,
        Cmd::Burnside { op } => Command::Burnside(match op {
            BurnsideCmd::Mul => BurnsideOp::Mul,
            BurnsideCmd::Eta => BurnsideOp::Eta,
            BurnsideCmd::Induce => BurnsideOp::Induce,
            BurnsideCmd::Restrict => BurnsideOp::Restrict,
        }),
        Cmd::Degree => Command::Degree,
        Cmd::Lefschetz { route } => Command::Lefschetz(match route {
            RouteCmd::Orbits => LefschetzRoute::Orbits,
            RouteCmd::Marks => LefschetzRoute::Marks,
            RouteCmd::Cellular => LefschetzRoute::Cellular,
        }),
        Cmd::Fuller => Command::Fuller,
    });
    let format = match args.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    let Some(path) = args.scene else {
        eprintln!("error: --scene <path> is required");
        return ExitCode::from(2);
    };
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    match cli::run(&text, command, format, args.max_order) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
