use std::process::ExitCode;

use bpu_verify::{exit_code, render_json, render_text, run, Check, Options};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bpu-verify", version, about = "Exact verification of BPU(n) cohomology computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mui presentation of the SL_2(F_p) invariants
    VerifyMui(Flags),
    /// Integral SL_2(F_p) invariants
    VerifyVistoli(Flags),
    /// Bockstein and power ledger on s, y, z, w
    VerifyPropS(Flags),
    /// Vanishing of the alpha sum after restriction
    VerifyMain(Flags),
    /// Milnor operations on the K(Z,3) generators
    VerifyYagita(Flags),
    /// Milnor operations on lambda
    VerifyLambda(Flags),
    /// Theta(delta) in Z[eta]/(p eta)
    VerifyTheta(Flags),
    /// Diagonal pullback of the total Chern class
    VerifyDelta(Flags),
    /// Shape of L_n in degree 2p^2
    VerifyLn(Flags),
    /// Mod-p surjectivity of nabla in degree 2p
    VerifyNablaOnto(Flags),
    /// E_4 rank identities and d_3 d_3 = 0
    VerifyE4(Flags),
    /// Every check at desk-scale parameters plus the sampled properties
    VerifyAll(Flags),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Flags {
    #[arg(long, default_value_t = 3)]
    p: u64,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    blocks: Option<usize>,
    #[arg(long)]
    max_degree: Option<u32>,
    /// Largest Milnor index
    #[arg(long)]
    max_index: Option<u32>,
    /// Largest half-degree for the diagonal expansion
    #[arg(long)]
    up_to: Option<u32>,
    /// Largest half-degree of the fiber for E_4
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cases per sampled property
    #[arg(long, default_value_t = 200)]
    cases: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (check, flags) = match cli.command {
        Command::VerifyMui(f) => (Check::Mui, f),
        Command::VerifyVistoli(f) => (Check::Vistoli, f),
        Command::VerifyPropS(f) => (Check::PropS, f),
        Command::VerifyMain(f) => (Check::Main, f),
        Command::VerifyYagita(f) => (Check::Yagita, f),
        Command::VerifyLambda(f) => (Check::Lambda, f),
        Command::VerifyTheta(f) => (Check::Theta, f),
        Command::VerifyDelta(f) => (Check::Delta, f),
        Command::VerifyLn(f) => (Check::Ln, f),
        Command::VerifyNablaOnto(f) => (Check::NablaOnto, f),
        Command::VerifyE4(f) => (Check::E4, f),
        Command::VerifyAll(f) => (Check::All, f),
    };
    let opts = Options {
        p: flags.p,
        n: flags.n,
        blocks: flags.blocks,
        max_degree: flags.max_degree,
        max_index: flags.max_index,
        up_to: flags.up_to,
        kmax: flags.kmax,
        seed: flags.seed,
        cases: flags.cases,
    };
    let reports = match run(check, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match flags.format {
        Format::Json => println!("{}", render_json(&reports)),
        Format::Text => print!("{}", render_text(&reports)),
    }
    ExitCode::from(exit_code(&reports) as u8)
}
