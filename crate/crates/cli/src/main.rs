//! `tilecount`: count, verify, tabulate and render.

mod cache;
mod count;
mod report;
mod suites;
mod table;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tilecount::lattice::{enumerate_tilings, parse_region, render_svg};
use tilecount::{Budget, Error, Result};

use cache::CountCache;
use count::{Kind, Method, Target};
use suites::{Ctx, GridArgs, Suite};
use table::{Family, Format, RangeSpec};

#[derive(Parser, Debug)]
#[command(name = "tilecount", version, about = "Exact counts of plane partitions and lozenge tilings with free boundaries")]
struct Cli {
    /// Largest region, in unit triangles, counted by brute force.
    #[arg(long, global = true, default_value_t = 64)]
    triangle_budget: usize,
    /// Largest number of objects any enumeration may produce.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    enum_cap: usize,
    /// Worker threads for verification suites (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count (shifted) plane partitions of a shape or tilings of a region.
    Count {
        #[arg(value_enum)]
        kind: Kind,
        /// Shape such as `sds:2,1`, `rect:2,3` or `custom:3,1`.
        #[arg(long, conflicts_with = "region")]
        shape: Option<String>,
        /// Region such as `hex:2,2,2`, `flashlight:1,1,1,0` or `qhex:3,3,4,6,7`.
        #[arg(long)]
        region: Option<String>,
        /// Entry bound `m`.
        #[arg(long = "max")]
        max: Option<u64>,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        /// Print the size generating function as a coefficient list.
        #[arg(long)]
        q: bool,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        grid: GridFlags,
        /// Count failures of experimental checks too.
        #[arg(long)]
        strict: bool,
        /// Write the report here instead of stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Tabulate counts for a shape family over parameter ranges.
    Table(Box<TableArgs>),
    /// Draw a region, or one of its tilings, as SVG.
    Render {
        #[arg(long)]
        region: String,
        /// Index of the tiling in enumeration order.
        #[arg(long)]
        tiling: Option<usize>,
        #[arg(long, short)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct GridFlags {
    #[arg(long)]
    xmax: Option<u64>,
    #[arg(long)]
    ymax: Option<u64>,
    #[arg(long)]
    zmax: Option<u64>,
    #[arg(long)]
    tmax: Option<u64>,
    #[arg(long)]
    nmax: Option<u64>,
    #[arg(long)]
    mmax: Option<u64>,
}

/// Each range is `lo..hi` (inclusive) or a single value; bounds may name an
/// earlier parameter, as in `--k 0..n`.
#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    a: Option<RangeSpec>,
    #[arg(long)]
    b: Option<RangeSpec>,
    #[arg(long)]
    n: Option<RangeSpec>,
    #[arg(long)]
    k: Option<RangeSpec>,
    #[arg(long)]
    m: Option<RangeSpec>,
    #[arg(long)]
    top: Option<RangeSpec>,
    #[arg(long)]
    d: Option<RangeSpec>,
    #[arg(long)]
    len: Option<RangeSpec>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Method::Formula)]
    method: Method,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

impl TableArgs {
    fn ranges(&self) -> Result<Vec<RangeSpec>> {
        let mut out = Vec::new();
        for name in self.family.params() {
            let r = match *name {
                "a" => &self.a,
                "b" => &self.b,
                "n" => &self.n,
                "k" => &self.k,
                "m" => &self.m,
                "top" => &self.top,
                "d" => &self.d,
                _ => &self.len,
            };
            out.push(r.clone().ok_or_else(|| Error::Usage(format!("--{name} is required for this family")))?);
        }
        Ok(out)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parameter(_) | Error::Shape(_) | Error::Usage(_) => 2,
        Error::Resource { .. } => 3,
        _ => 1,
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => Ok(std::fs::write(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let budget = Budget { triangles: cli.triangle_budget, enum_cap: cli.enum_cap, ..Budget::default() };
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Error::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Count { kind, shape, region, max, method, q } => {
            let cache = CountCache::from_env()?;
            let target = Target::parse(kind, shape.as_deref(), region.as_deref(), max)?;
            let (answer, route) = count::run(&target, method, q, &budget, &cache)?;
            cache.save()?;
            println!("{answer}");
            eprintln!("method: {route}");
            Ok(true)
        }
        Command::Verify { suite, grid, strict, out } => {
            let cache = CountCache::from_env()?;
            let ctx = Ctx { budget, cache: &cache, strict };
            let grid = GridArgs {
                xmax: grid.xmax,
                ymax: grid.ymax,
                zmax: grid.zmax,
                tmax: grid.tmax,
                nmax: grid.nmax,
                mmax: grid.mmax,
            };
            let report = suites::run(suite, &grid, &ctx);
            cache.save()?;
            let mut text = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
            text.push('\n');
            write_output(out.as_deref(), &text)?;
            let s = &report.summary;
            eprintln!(
                "{}: {} ({} pass, {} fail, {} skipped, {} experimental)",
                report.suite,
                if report.passed { "PASS" } else { "FAIL" },
                s.pass,
                s.fail,
                s.skipped,
                s.experimental
            );
            Ok(report.passed)
        }
        Command::Table(args) => {
            let cache = CountCache::from_env()?;
            let t = table::build(args.family, &args.ranges()?, args.method, &budget, &cache)?;
            cache.save()?;
            let text = match args.format {
                Format::Csv => t.to_csv(),
                Format::Json => {
                    serde_json::to_string_pretty(&t).map_err(|e| Error::Io(e.to_string()))? + "\n"
                }
            };
            write_output(args.out.as_deref(), &text)?;
            if t.skipped > 0 {
                eprintln!("skipped {} parameter combinations outside the family's domain", t.skipped);
            }
            Ok(true)
        }
        Command::Render { region, tiling, out } => {
            let region = parse_region(&region)?;
            let tiling = match tiling {
                None => None,
                Some(i) => {
                    let t = enumerate_tilings(&region, &budget)?.nth(i);
                    Some(t.ok_or_else(|| Error::Usage(format!("tiling index {i} is out of range")))?)
                }
            };
            render_svg(&region, tiling.as_ref(), &out)?;
            println!("{}", out.display());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
