use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homkit::cache::Cache;
use homkit::commands::{self, CheckSuite, Ctx, DimKind};
use homkit::manifest::Manifest;
use homkit::{exit_code, CliError};
use homkit_core::replacement::Side;

#[derive(Parser)]
#[command(name = "homkit", version, about = "Exact Ext groups, replacements and relative dimensions over quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Print the full JSON report instead of the short rendering.
    #[arg(long, global = true)]
    json: bool,
    /// Witness cache directory (HOMKIT_CACHE takes precedence).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Do not read or write the witness cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, global = true, default_value_t = 12)]
    cutoff: usize,
    /// Cap on universal-extension iterations per preenvelope.
    #[arg(long, global = true)]
    iter_cap: Option<usize>,
    #[arg(long, global = true, default_value_t = 3)]
    dim_bound: usize,
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Args)]
struct Target {
    /// Algebra file, or catalog:<name>[:<field>].
    #[arg(short = 'A', long)]
    algebra: String,
    /// Cotorsion pair file, or `projective` / `injective`.
    #[arg(long)]
    pair: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// dim Ext^n(M, N) by every applicable method.
    Ext {
        #[command(flatten)]
        target: Target,
        #[arg(short = 'M')]
        m: PathBuf,
        #[arg(short = 'N')]
        n: PathBuf,
        #[arg(short = 'n', long = "degree")]
        degree: usize,
    },
    /// Projective dimension, relative to the right class of --pair when given.
    Pd {
        #[command(flatten)]
        target: Target,
        #[arg(short = 'M')]
        m: PathBuf,
    },
    /// Length of the cofibrant replacement (projective pair by default).
    Cofdim {
        #[command(flatten)]
        target: Target,
        #[arg(short = 'M')]
        m: PathBuf,
    },
    /// Length of the fibrant replacement (injective pair by default).
    Fibdim {
        #[command(flatten)]
        target: Target,
        #[arg(short = 'N')]
        n: PathBuf,
    },
    /// Finitistic dimension from the module corpus up to --dim-bound.
    Findim {
        #[arg(short = 'A', long)]
        algebra: String,
    },
    /// A verified cofibrant or fibrant replacement.
    Replace {
        side: SideArg,
        #[command(flatten)]
        target: Target,
        #[arg(short = 'M', short_alias = 'N')]
        module: PathBuf,
        /// Degree of the sphere (fibrant side).
        #[arg(short = 'n', long = "degree", default_value_t = 0, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long, default_value_t = 4)]
        length: usize,
    },
    /// Run the property suites over a manifest.
    Check {
        suite: SuiteArg,
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Cofibrant,
    Fibrant,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    #[value(alias = "paper-invariants")]
    Invariants,
    Findim,
    All,
}

fn run(cli: Cli) -> anyhow::Result<(String, i32)> {
    let c = &cli.common;
    let ctx = Ctx {
        cache: Cache::resolve(c.cache_dir.clone(), !c.no_cache),
        cutoff: c.cutoff,
        iter_cap: c.iter_cap,
        dim_bound: c.dim_bound,
        seed: c.seed,
    };
    let out = match &cli.command {
        Command::Ext { target, m, n, degree } => {
            commands::ext(&ctx, &target.algebra, m, n, *degree, target.pair.as_deref())?
        }
        Command::Pd { target, m } => commands::dimension(&ctx, DimKind::Pd, &target.algebra, m, target.pair.as_deref())?,
        Command::Cofdim { target, m } => {
            commands::dimension(&ctx, DimKind::Cofdim, &target.algebra, m, target.pair.as_deref())?
        }
        Command::Fibdim { target, n } => {
            commands::dimension(&ctx, DimKind::Fibdim, &target.algebra, n, target.pair.as_deref())?
        }
        Command::Findim { algebra } => commands::findim(&ctx, algebra)?,
        Command::Replace { side, target, module, degree, length } => {
            let side = match side {
                SideArg::Cofibrant => Side::Cofibrant,
                SideArg::Fibrant => Side::Fibrant,
            };
            if side == Side::Cofibrant && *degree != 0 {
                return Err(CliError::Usage("cofibrant replacements are of S^0(M); drop -n".into()).into());
            }
            commands::replace(&ctx, side, &target.algebra, module, target.pair.as_deref(), *degree, *length)?
        }
        Command::Check { suite, manifest } => {
            let mut m = match manifest {
                Some(p) => Manifest::load(p)?,
                None => Manifest::default(),
            };
            if c.seed != 0x5eed {
                m.seed = c.seed;
            }
            let which = match suite {
                SuiteArg::Invariants => CheckSuite::Invariants,
                SuiteArg::Findim => CheckSuite::Findim,
                SuiteArg::All => CheckSuite::All,
            };
            commands::check_output(&m, which)?
        }
    };
    Ok((out.render(c.json), out.outcome.code()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
