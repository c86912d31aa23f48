//! superhc: catalog browsing, pair analysis, Harish-Chandra computations on
//! user expressions, and the verification suite.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use superhc::catalog::{self, PairDescriptor};
use superhc::hc::PairContext;
use superhc::scalar::Gq;
use superhc::verify::{self, Report, Status};

#[derive(Parser)]
#[command(name = "superhc", version, about = "Ghost distributions on supersymmetric pairs: exact Harish-Chandra computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog of supersymmetric pairs with their verdicts.
    Catalog {
        /// Restrict to a family: gl, osp, or exceptional.
        #[arg(long)]
        family: Option<String>,
        /// Only rows with dim g at most this bound.
        #[arg(long)]
        max_dim: Option<usize>,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
        /// Dump the full catalog descriptors (the SUPERHC_CATALOG file format).
        #[arg(long)]
        export: bool,
    },
    /// Compute HC(v_{k'}·z) for a catalog pair.
    Ghost {
        /// Pair id (see `superhc catalog`).
        pair: String,
        /// Even invariant z in the expression language (default 1).
        #[arg(long)]
        z: Option<String>,
        /// Twist scalar c for the twisted generator of a special pair.
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite. Exit code 0 iff nothing failed.
    Verify {
        /// One of: rank1, conjecture, reduction, even-pairs, all.
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        degree_bound: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Rank1,
    Conjecture,
    Reduction,
    EvenPairs,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> superhc::Result<ExitCode> {
    match cli.command {
        Command::Catalog { family, max_dim, json, export } => cmd_catalog(family, max_dim, json, export),
        Command::Ghost { pair, z, c, json } => cmd_ghost(&pair, z.as_deref(), c.as_deref(), json),
        Command::Verify { suite, degree_bound, json } => cmd_verify(suite, degree_bound, json),
    }
}

fn cmd_catalog(family: Option<String>, max_dim: Option<usize>, json: bool, export: bool) -> superhc::Result<ExitCode> {
    let rows = catalog::catalog_from_env()?;
    if export {
        println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    let rows: Vec<PairDescriptor> = rows
        .into_iter()
        .filter(|d| {
            if let Some(f) = &family {
                if d.family_tag() != f {
                    return false;
                }
            }
            if let Some(md) = max_dim {
                if d.dim_g() > md {
                    return false;
                }
            }
            true
        })
        .collect();
    if json {
        #[derive(serde::Serialize)]
        struct RowOut<'a> {
            slug: &'a str,
            g: &'a str,
            k: &'a str,
            dim: usize,
            rank: usize,
            realizable: bool,
            iwasawa: Option<bool>,
            interlaced: Option<bool>,
            special: bool,
            golden: bool,
        }
        let out: Vec<RowOut> = rows
            .iter()
            .map(|d| {
                let (iw, inter) = catalog::table_verdicts(&d.family);
                RowOut {
                    slug: &d.slug,
                    g: &d.g_name,
                    k: &d.k_name,
                    dim: d.dim_g(),
                    rank: d.rank(),
                    realizable: d.realizable,
                    iwasawa: iw,
                    interlaced: inter,
                    special: d.special,
                    golden: d.golden.is_some(),
                }
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "{:<26} {:<11} {:<24} {:>4} {:>4}  {:<8} {:<10} {:<7} {}",
        "pair", "g", "k", "dim", "rank", "iwasawa", "interlaced", "special", "realizable"
    );
    for d in &rows {
        let (iw, inter) = catalog::table_verdicts(&d.family);
        let fmt_opt = |v: Option<bool>| match v {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        println!(
            "{:<26} {:<11} {:<24} {:>4} {:>4}  {:<8} {:<10} {:<7} {}",
            d.slug,
            d.g_name,
            d.k_name,
            d.dim_g(),
            d.rank(),
            fmt_opt(iw),
            fmt_opt(inter),
            if d.special { "yes" } else { "no" },
            if d.realizable { "yes" } else { "no" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ghost(pair: &str, z: Option<&str>, c: Option<&str>, json: bool) -> superhc::Result<ExitCode> {
    let rows = catalog::catalog_from_env()?;
    let desc = catalog::find_in(&rows, pair)?;
    let ctx = PairContext::from_descriptor(&desc)?;
    let ghost = match c {
        Some(cs) => {
            let cval = Gq::parse(cs).map_err(|m| superhc::Error::Parse { pos: 0, msg: m })?;
            ctx.twisted_ghost_generator(&cval)?
        }
        None => ctx.ghost_generator()?,
    };
    let hc = match z {
        Some(src) => {
            let ast = superhc::expr::parse(src)?;
            let zel = superhc::expr::eval(&ast, &ctx)?;
            let (_, hc) = ctx.ghost_hc(&ghost, &zel)?;
            hc
        }
        None => ghost.hc_image.clone(),
    };
    let (monic, scalar) = hc.monic();
    if json {
        #[derive(serde::Serialize)]
        struct GhostOut<'a> {
            pair: &'a str,
            vars: &'a [String],
            polynomial: &'a superhc::Polynomial,
            scalar: String,
        }
        let out = GhostOut {
            pair: &desc.slug,
            vars: &ctx.t_names,
            polynomial: &monic,
            scalar: scalar.to_string(),
        };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("pair: {} = ({}, {})", desc.slug, desc.g_name, desc.k_name);
        println!("HC = {monic}   (scalar {scalar})");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: SuiteArg, degree_bound: usize, json: bool) -> superhc::Result<ExitCode> {
    let reports: Vec<Report> = match suite {
        SuiteArg::Rank1 => verify::suite_rank_one(),
        SuiteArg::Conjecture => verify::suite_conjecture(degree_bound),
        SuiteArg::Reduction => verify::suite_reduction(),
        SuiteArg::EvenPairs => verify::suite_even_pairs(degree_bound),
        SuiteArg::All => verify::suite_all(degree_bound),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    } else {
        for r in &reports {
            println!("{}", r.line());
        }
        let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
        let xfail = reports.iter().filter(|r| r.status == Status::ExpectedFail).count();
        let skip = reports.iter().filter(|r| r.status == Status::Skip).count();
        let fail = reports.iter().filter(|r| r.status == Status::Fail).count();
        println!("{pass} passed, {xfail} expected-fail, {skip} skipped, {fail} failed");
    }
    if reports.iter().all(Report::is_ok) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}
