use std::io::Read;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use tamari::dot::{flow_to_dot, poset_to_dot};
use tamari::flows::{
    enumerate_closed_flows, enumerate_flows_with_exit, flow_to_interval_poset,
    interval_poset_to_flow,
};
use tamari::format::{parse_object, render_object, FormatError, Kind, Object};
use tamari::verify;
use tamari::{beta, beta_inverse, IntervalPoset, PlanarForest};

/// Interval-posets of the Tamari lattice, the bijection beta, and flows.
#[derive(Parser)]
#[command(name = "tamari", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of intervals of size N from the closed formula.
    Count {
        #[arg(long)]
        size: usize,
        /// Also enumerate the intervals and compare the two counts.
        #[arg(long)]
        enumerate: bool,
    },
    /// Generating polynomial of intervals by size, trees and initial rise.
    Phi {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        check_symmetry: bool,
        #[arg(long)]
        check_equations: bool,
    },
    /// Apply beta (or its inverse) to an interval-poset.
    Beta {
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        poset: Option<String>,
    },
    /// Check that beta swaps the statistics and is an involution.
    CheckInvolution {
        #[arg(long)]
        max_size: usize,
    },
    /// Convert between text formats.
    Convert {
        #[arg(long)]
        from: KindArg,
        #[arg(long)]
        to: KindArg,
        #[arg(long)]
        input: Option<String>,
    },
    /// Enumerate the flows of an ordered forest.
    Flows(FlowsArgs),
    /// Compare closed-flow counts with Tamari ideal sizes for small forests.
    VerifyFlowTheorem {
        #[arg(long)]
        max_size: usize,
    },
    /// Render an interval-poset or a flow.
    Render {
        #[arg(long, required = true)]
        dot: bool,
        #[arg(long)]
        kind: RenderKind,
        #[arg(long)]
        input: Option<String>,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("which").required(true).args(["closed", "exit_rate"])))]
struct FlowsArgs {
    #[arg(long)]
    forest: Option<String>,
    #[arg(long)]
    closed: bool,
    #[arg(long)]
    exit_rate: Option<u64>,
    /// Print only the number of flows.
    #[arg(long)]
    count: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Tree,
    Dyck,
    Forest,
    Poset,
    Flow,
    TreePair,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Tree => Kind::Tree,
            KindArg::Dyck => Kind::Dyck,
            KindArg::Forest => Kind::Forest,
            KindArg::Poset => Kind::Poset,
            KindArg::Flow => Kind::Flow,
            KindArg::TreePair => Kind::TreePair,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Poset,
    Flow,
}

enum Failure {
    /// Malformed input or unsupported request; exit code 2.
    Parse(String),
    /// Well-formed input describing an invalid object, or a failed check;
    /// exit code 1.
    Invalid(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(flag: Option<String>) -> Result<String, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Failure::Parse(format!("cannot read standard input: {e}")))?;
    Ok(s)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Count { size, enumerate } => count(size, enumerate),
        Command::Phi {
            max_size,
            check_symmetry,
            check_equations,
        } => phi(max_size, check_symmetry, check_equations),
        Command::Beta { inverse, poset } => {
            let p: IntervalPoset = read_input(poset)?.parse()?;
            let out = if inverse { beta_inverse(&p) } else { beta(&p) };
            Ok(format!("{out}\n"))
        }
        Command::CheckInvolution { max_size } => check_involution(max_size),
        Command::Convert { from, to, input } => {
            let o = parse_object(from.into(), &read_input(input)?)?;
            Ok(format!("{}\n", render_object(&convert(o, to.into())?)))
        }
        Command::Flows(args) => flows(args),
        Command::VerifyFlowTheorem { max_size } => flow_theorem(max_size),
        Command::Render { kind, input, .. } => {
            let text = read_input(input)?;
            Ok(match kind {
                RenderKind::Poset => poset_to_dot(&text.parse()?),
                RenderKind::Flow => flow_to_dot(&text.parse()?),
            })
        }
    }
}

/// Left-aligned first column, right-aligned others, two spaces apart.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, w))| {
                if i == 0 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        format!("{}\n", parts.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn check(ok: bool, out: String, what: &str) -> Outcome {
    if ok {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Invalid(format!("{what} failed")))
    }
}

fn count(size: usize, enumerate: bool) -> Outcome {
    let formula = verify::count_formula(size).map_err(|e| Failure::Invalid(e.to_string()))?;
    if !enumerate {
        return Ok(format!("{formula}\n"));
    }
    let enumerated = verify::enumerate_interval_posets(size).len();
    let ok = formula == enumerated.into();
    let out = table(
        &["n", "enumerated", "formula", "match"],
        &[vec![
            size.to_string(),
            enumerated.to_string(),
            formula.to_string(),
            ok.to_string(),
        ]],
    );
    check(ok, out, "interval count")
}

fn phi(max_size: usize, symmetry: bool, equations: bool) -> Outcome {
    let p = verify::phi(max_size);
    let mut out = format!("{p}\n");
    let mut ok = true;
    if symmetry {
        let s = p.swap_xz() == p;
        out += &format!("symmetry: {s}\n");
        ok &= s;
    }
    if equations {
        let (a, b) = verify::check_functional_equations(max_size)
            .map_err(|e| Failure::Invalid(e.to_string()))?;
        out += &format!("first equation: {a}\nsecond equation: {b}\n");
        ok &= a && b;
    }
    check(ok, out, "identity check")
}

fn check_involution(max_size: usize) -> Outcome {
    let reports = verify::check_beta_involution(max_size);
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.count.to_string(),
                r.swaps_statistics.to_string(),
                r.injective.to_string(),
                r.involution.to_string(),
                r.ir_then_lc_is_beta.to_string(),
            ]
        })
        .collect();
    let out = table(
        &["n", "posets", "swaps", "injective", "involution", "ir-lc"],
        &rows,
    );
    let ok = reports
        .iter()
        .all(|r| r.swaps_statistics && r.injective && r.involution && r.ir_then_lc_is_beta);
    check(ok, out, "beta check")
}

fn convert(o: Object, to: Kind) -> Result<Object, Failure> {
    use tamari::catalan::{dyck_from_tree, tree_from_dyck};
    let from = o.kind();
    Ok(match (o, to) {
        (o, to) if o.kind() == to => o,
        (Object::Tree(t), Kind::Dyck) => Object::Dyck(dyck_from_tree(&t)),
        (Object::Dyck(d), Kind::Tree) => Object::Tree(tree_from_dyck(&d)),
        (Object::TreePair(a, b), Kind::Poset) => Object::Poset(
            IntervalPoset::from_tree_pair(&a, &b).map_err(|e| Failure::Invalid(e.to_string()))?,
        ),
        (Object::Poset(p), Kind::TreePair) => Object::TreePair(p.lower_tree(), p.upper_tree()),
        (Object::Poset(p), Kind::Flow) => Object::Flow(interval_poset_to_flow(&p)),
        (Object::Flow(f), Kind::Poset) => {
            Object::Poset(flow_to_interval_poset(&f).map_err(|e| Failure::Invalid(e.to_string()))?)
        }
        _ => return Err(Failure::Parse(format!("no conversion from {from} to {to}"))),
    })
}

fn flows(args: FlowsArgs) -> Outcome {
    let forest: PlanarForest = read_input(args.forest)?.parse()?;
    let list = match args.exit_rate {
        Some(k) => enumerate_flows_with_exit(&forest, k),
        None => enumerate_closed_flows(&forest),
    };
    if args.count {
        return Ok(format!("{}\n", list.len()));
    }
    Ok(list.iter().map(|f| format!("{f}\n")).collect())
}

fn flow_theorem(max_size: usize) -> Outcome {
    let reports = verify::flow_theorem_reports(max_size);
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.forest.to_string(),
                r.closed_flows.to_string(),
                r.ideal_size.to_string(),
                (r.closed_flows == r.ideal_size).to_string(),
            ]
        })
        .collect();
    let out = table(&["forest", "closed-flows", "ideal", "match"], &rows);
    let ok = reports.iter().all(|r| r.closed_flows == r.ideal_size);
    check(ok, out, "flow theorem")
}
