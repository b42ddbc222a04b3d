use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use semicount::calculus::{delta_op, delta_spectrum, tree_delta, CompTree, DeltaMode, Op};
use semicount::elastic::{
    chain_backward, chain_forward, elastic_apply, elastic_invert, surface_grid, write_surface_csv,
    ElasticSpec, SurfaceWindow,
};
use semicount::nat::parse_nat;
use semicount::sorted::{
    density_profile, write_grid_csv, SortKey, SortedStream, SubsetSumInstance,
};
use semicount::{
    delta_pi, pair, set_decode, set_encode, sigma_decode, sigma_encode, unpair, Cell, CodecMode,
    FinSet, Nat,
};

#[derive(Parser)]
#[command(
    name = "semicount",
    version,
    about = "Exact pairing, set codes and information-efficiency tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cantor code of a cell
    Pair {
        #[arg(value_parser = nat_arg)]
        x: Nat,
        #[arg(value_parser = nat_arg)]
        y: Nat,
    },
    /// Cell of a Cantor code, printed as `x y`
    Unpair {
        #[arg(value_parser = nat_arg)]
        n: Nat,
    },
    /// Finite set codes
    Set {
        #[command(subcommand)]
        action: SetAction,
    },
    /// Combinatorial number system index
    Sigma {
        #[command(subcommand)]
        action: SigmaAction,
    },
    /// Information efficiency of one operation or a whole expression
    Delta {
        #[command(subcommand)]
        action: DeltaAction,
    },
    /// Distinct delta totals over every bracketing of a multiset
    Spectrum {
        #[arg(long, value_delimiter = ',', value_parser = nat_arg, required = true)]
        values: Vec<Nat>,
        #[arg(long, default_value = "add", value_parser = op_arg)]
        op: Op,
        #[arg(long, default_value = "two-arg", value_parser = delta_mode_arg)]
        mode: DeltaMode,
    },
    /// Elastic translation of a single cell
    Elastic {
        #[command(subcommand)]
        action: ElasticAction,
    },
    /// Elastic translation induced on codes
    Chain {
        #[command(subcommand)]
        action: ChainAction,
    },
    /// CSV of elastic efficiency over a window of cells
    Surface(SurfaceArgs),
    /// Sorted injections
    Sorted {
        #[command(subcommand)]
        action: SortedAction,
    },
    /// Subset-sum decision or n-th witness in canonical order
    SubsetSum {
        #[arg(long, value_parser = set_arg)]
        set: FinSet<Nat>,
        #[arg(long, value_parser = nat_arg)]
        target: Nat,
        #[arg(long)]
        nth: Option<usize>,
    },
    /// CSV of code occupancy over a canonical survey
    Density {
        #[arg(long, value_parser = key_arg)]
        key: SortKey,
        #[arg(long)]
        survey: u64,
    },
    /// Run the built-in invariant checks
    Verify,
}

#[derive(Subcommand)]
enum SetAction {
    Encode {
        #[arg(long, default_value = "canonical", value_parser = codec_arg)]
        mode: CodecMode,
        #[arg(value_parser = set_arg)]
        set: FinSet<Nat>,
    },
    Decode {
        #[arg(long, default_value = "canonical", value_parser = codec_arg)]
        mode: CodecMode,
        #[arg(value_parser = nat_arg)]
        n: Nat,
    },
}

#[derive(Subcommand)]
enum SigmaAction {
    Encode {
        #[arg(value_parser = set_arg)]
        set: FinSet<Nat>,
    },
    Decode {
        /// Cardinality of the set
        #[arg(long)]
        k: usize,
        #[arg(value_parser = nat_arg)]
        index: Nat,
    },
}

#[derive(Subcommand)]
enum DeltaAction {
    Add(BinaryArgs),
    Mul(BinaryArgs),
    /// Efficiency of the pairing at a cell
    Pi {
        #[arg(value_parser = nat_arg)]
        x: Nat,
        #[arg(value_parser = nat_arg)]
        y: Nat,
    },
    /// Per-node deltas of an expression such as `(2+98)+(47+53)`
    Tree {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value = "two-arg", value_parser = delta_mode_arg)]
        mode: DeltaMode,
    },
}

#[derive(Args)]
struct BinaryArgs {
    #[arg(value_parser = nat_arg)]
    x: Nat,
    #[arg(value_parser = nat_arg)]
    y: Nat,
    #[arg(long, default_value = "two-arg", value_parser = delta_mode_arg)]
    mode: DeltaMode,
}

#[derive(Subcommand)]
enum ElasticAction {
    Apply(CellArgs),
    Invert(CellArgs),
}

#[derive(Args)]
struct CellArgs {
    /// `id`, `const:C` or `poly:C:K`
    #[arg(long, value_parser = spec_arg)]
    spec: ElasticSpec<Nat>,
    #[arg(value_parser = nat_arg)]
    x: Nat,
    #[arg(value_parser = nat_arg)]
    y: Nat,
}

#[derive(Subcommand)]
enum ChainAction {
    Forward(CodeArgs),
    Backward(CodeArgs),
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long, value_parser = spec_arg)]
    spec: ElasticSpec<Nat>,
    #[arg(value_parser = nat_arg)]
    n: Nat,
}

#[derive(Args)]
struct SurfaceArgs {
    #[arg(long, default_value = "id", value_parser = spec_arg)]
    spec: ElasticSpec<Nat>,
    #[arg(long, default_value = "0", value_parser = nat_arg)]
    x_start: Nat,
    #[arg(long, value_parser = nat_arg)]
    x_end: Nat,
    #[arg(long, default_value = "0", value_parser = nat_arg)]
    y_start: Nat,
    #[arg(long, value_parser = nat_arg)]
    y_end: Nat,
    #[arg(long, default_value = "1", value_parser = nat_arg)]
    stride: Nat,
}

#[derive(Subcommand)]
enum SortedAction {
    /// CSV of the first in-ground sets with their cells
    Grid {
        #[arg(long, value_parser = key_arg)]
        key: SortKey,
        #[arg(long)]
        cells: usize,
    },
}

fn nat_arg(s: &str) -> Result<Nat, String> {
    parse_nat(s).map_err(|e| e.to_string())
}

fn set_arg(s: &str) -> Result<FinSet<Nat>, String> {
    FinSet::parse(s).map_err(|e| e.to_string())
}

fn codec_arg(s: &str) -> Result<CodecMode, String> {
    s.parse().map_err(|e: semicount::Error| e.to_string())
}

fn delta_mode_arg(s: &str) -> Result<DeltaMode, String> {
    s.parse().map_err(|e: semicount::Error| e.to_string())
}

fn op_arg(s: &str) -> Result<Op, String> {
    s.parse().map_err(|e: semicount::Error| e.to_string())
}

fn spec_arg(s: &str) -> Result<ElasticSpec<Nat>, String> {
    s.parse().map_err(|e: semicount::Error| e.to_string())
}

fn key_arg(s: &str) -> Result<SortKey, String> {
    s.parse().map_err(|e: semicount::Error| e.to_string())
}

fn bits(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn run(cli: Cli, out: &mut impl Write) -> anyhow::Result<bool> {
    match cli.command {
        Command::Pair { x, y } => writeln!(out, "{}", pair(&Cell::new(x, y)))?,
        Command::Unpair { n } => {
            let c = unpair(&n);
            writeln!(out, "{} {}", c.x, c.y)?;
        }
        Command::Set { action } => match action {
            SetAction::Encode { mode, set } => writeln!(out, "{}", set_encode(&set, mode)?)?,
            SetAction::Decode { mode, n } => writeln!(out, "{}", set_decode(&n, mode)?)?,
        },
        Command::Sigma { action } => match action {
            SigmaAction::Encode { set } => writeln!(out, "{}", sigma_encode(&set)?)?,
            SigmaAction::Decode { k, index } => writeln!(out, "{}", sigma_decode(k, &index)?)?,
        },
        Command::Delta { action } => match action {
            DeltaAction::Add(a) => {
                writeln!(out, "{}", bits(delta_op(Op::Add, &a.x, &a.y, a.mode)))?
            }
            DeltaAction::Mul(a) => {
                writeln!(out, "{}", bits(delta_op(Op::Mul, &a.x, &a.y, a.mode)))?
            }
            DeltaAction::Pi { x, y } => writeln!(out, "{}", bits(delta_pi(&Cell::new(x, y))))?,
            DeltaAction::Tree { expr, mode } => {
                let report = tree_delta(&CompTree::<Nat>::parse(&expr, mode)?);
                for (i, d) in report.per_node.iter().enumerate() {
                    writeln!(out, "node {i} {}", bits(*d))?;
                }
                writeln!(out, "total {}", bits(report.total))?;
                writeln!(out, "result {}", report.result)?;
            }
        },
        Command::Spectrum { values, op, mode } => {
            let s = delta_spectrum(&values, op, mode)?;
            writeln!(out, "total,multiplicity")?;
            for line in &s.lines {
                writeln!(out, "{},{}", bits(line.total), line.multiplicity)?;
            }
        }
        Command::Elastic { action } => {
            let c = match action {
                ElasticAction::Apply(a) => elastic_apply(&a.spec, &Cell::new(a.x, a.y)),
                ElasticAction::Invert(a) => elastic_invert(&a.spec, &Cell::new(a.x, a.y))?,
            };
            writeln!(out, "{} {}", c.x, c.y)?;
        }
        Command::Chain { action } => match action {
            ChainAction::Forward(a) => writeln!(out, "{}", chain_forward(&a.spec, &a.n))?,
            ChainAction::Backward(a) => writeln!(out, "{}", chain_backward(&a.spec, &a.n)?)?,
        },
        Command::Surface(a) => {
            let window = SurfaceWindow {
                x_start: a.x_start,
                x_end: a.x_end,
                y_start: a.y_start,
                y_end: a.y_end,
                stride: a.stride,
            };
            write_surface_csv(&surface_grid(&a.spec, &window)?, &mut *out)?;
        }
        Command::Sorted {
            action: SortedAction::Grid { key, cells },
        } => {
            let entries: Vec<_> = SortedStream::<u64>::new(key).take(cells).collect();
            write_grid_csv(&entries, &mut *out)?;
        }
        Command::SubsetSum { set, target, nth } => {
            let inst = SubsetSumInstance::new(set)?;
            match nth {
                None => writeln!(out, "{}", inst.decide(&target))?,
                Some(n) => match inst.nth(&target, n)? {
                    Some(s) => writeln!(out, "{s}")?,
                    None => writeln!(out, "not-found")?,
                },
            }
        }
        Command::Density { key, survey } => {
            writeln!(out, "n,occupied")?;
            for (n, occ) in density_profile(&key, survey) {
                writeln!(out, "{n},{occ}")?;
            }
        }
        Command::Verify => {
            let mut ok = true;
            for c in semicount::verify::run_all() {
                ok &= c.passed;
                writeln!(
                    out,
                    "{} {} {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )?;
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result =
        run(cli, &mut out).and_then(|ok| out.flush().context("writing output").map(|_| ok));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
