mod commands;
mod output;
mod params;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::CliError;

#[derive(Parser)]
#[command(name = "motivic-dt", version, about = "Exact motivic classes of moduli of Higgs bundles and connections on curves")]
struct Cli {
    /// JSON configuration (model config, or a torus element for dt-extract)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Realization: point-count:q=<r>[,sqrt_q=<r>], q=<r>, e-polynomial, euler, symbolic
    #[arg(long, global = true)]
    realize: Option<String>,
    #[arg(long, global = true)]
    r_max: Option<u32>,
    #[arg(long, global = true)]
    z_max: Option<u32>,
    /// Number of top z-degrees that must vanish before evaluating at z = 1
    #[arg(long, global = true)]
    guard: Option<u32>,
    /// Write the JSON result here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Kapranov zeta function: n=<z_max> [l=1,-2,5]
    Zeta { params: Vec<String> },
    /// Stack of bundles: r=<rank> [l=..]
    BunClass { params: Vec<String> },
    /// Hilbert schemes of points on the affine plane: n=<max>
    Goettsche { params: Vec<String> },
    /// [GL(n)]: n=<n>
    GlClass { params: Vec<String> },
    /// Modified Macdonald polynomial: mu=2,1 [vars=J] [check=true]
    Macdonald { params: Vec<String> },
    /// Master series, H and the polynomiality report (needs --config)
    DtSeries { params: Vec<String> },
    /// Class of the stack of connections: [r=.. rxj=1,0;1 d=..] (needs --config)
    ConnClass { params: Vec<String> },
    /// Class of the stack of semistable objects (needs --config)
    ConnSsClass { params: Vec<String> },
    /// DT invariants of a torus element on one ray (torus JSON via --config)
    DtExtract { params: Vec<String> },
    /// Brute-force finite-field counts
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Subcommand)]
pub enum OracleCommand {
    /// Nilpotent matrices by Jordan type: d=<dim> q=<order>
    Nilpotent { params: Vec<String> },
    /// Rank-2 bundles on P^1 weighted by automorphisms: d=<deg> q=<order> [k_max=..]
    BunP1 { params: Vec<String> },
    /// Colength-n ideals of F_q[x,y]: n=<n> q=<order>
    HilbA2 { params: Vec<String> },
    /// Hall number g^lambda_{mu nu}(q): lambda=.. mu=.. nu=.. q=..
    Hall { params: Vec<String> },
}

pub struct Globals {
    pub config: Option<PathBuf>,
    pub realize: Option<String>,
    pub r_max: Option<u32>,
    pub z_max: Option<u32>,
    pub guard: Option<u32>,
}

fn emit(value: &serde_json::Value, out: Option<&PathBuf>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let globals =
        Globals { config: cli.config, realize: cli.realize, r_max: cli.r_max, z_max: cli.z_max, guard: cli.guard };
    let result = commands::run(&cli.command, &globals).and_then(|v| emit(&v, cli.out.as_ref()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = emit(&e.to_json(), None);
            eprintln!("error [{}]: {}", e.code, e.message);
            ExitCode::from(e.exit as u8)
        }
    }
}
