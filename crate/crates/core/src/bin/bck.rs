use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cbck::cli::{self, Format, Options, Output};

#[derive(Parser)]
#[command(name = "bck", version, about = "Finite commutative BCK-algebras, their spectra and duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Args)]
struct Common {
    /// JSON specification; `-` or omitted reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum elements (algebras) or vertices (trees) to enumerate.
    #[arg(long)]
    guard: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and report structural properties.
    Check(Common),
    /// Prime spectrum with topological checks.
    Spectrum(Common),
    /// Ideal lattice with primes marked.
    Ideals(Common),
    /// The tree algebra of a rooted tree.
    Tree(Common),
    /// Birkhoff and spectral duality checks.
    Duality(Common),
    /// Run the built-in verification suites.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
}

impl Common {
    fn options(&self) -> Options {
        let mut opts = Options {
            format: match self.format {
                FormatArg::Json => Format::Json,
                FormatArg::Dot => Format::Dot,
            },
            seed: self.seed,
            ..Options::default()
        };
        if let Some(g) = self.guard {
            opts.guard = g;
        }
        opts
    }

    fn read(&self) -> std::io::Result<String> {
        match &self.input {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
            _ => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                Ok(s)
            }
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let out: Output = match &args.command {
        Command::Verify { suite, common } => cli::cmd_verify(suite, &common.options()),
        Command::Check(c)
        | Command::Spectrum(c)
        | Command::Ideals(c)
        | Command::Tree(c)
        | Command::Duality(c) => {
            let input = match c.read() {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("bck: cannot read input: {e}");
                    return ExitCode::from(2);
                }
            };
            let f = match &args.command {
                Command::Check(_) => cli::cmd_check,
                Command::Spectrum(_) => cli::cmd_spectrum,
                Command::Ideals(_) => cli::cmd_ideals,
                Command::Tree(_) => cli::cmd_tree,
                _ => cli::cmd_duality,
            };
            f(&input, &c.options())
        }
    };
    print!("{}", out.text);
    ExitCode::from(out.code as u8)
}
