//! Command-line front end.
//!
//! Exit codes: 0 when every requested check passed, 1 when a verification
//! failed, 2 for usage or input errors. Reports are `KEY: value` lines.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::extension::{extend_representation, iterate_powers, Extension, PowerStep};
use crate::format;
use crate::graph::{graph_power, graph_power_oracle, Graph};
use crate::interval::{
    endpoint_orders, intersection_graph, is_proper, proper_to_unit, same_orders,
    IntervalRepresentation,
};
use crate::random;
use crate::trapezoid::{
    count_interleavings_brute_force, enumerate_interleavings, p5_representation,
    search_representation, trapezoid_intersection_graph, TrapezoidOrders,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Exit code plus the text report destined for standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: u8,
    pub report: String,
}

impl CommandOutcome {
    fn new(code: u8, report: String) -> Self {
        CommandOutcome { code, report }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        CommandOutcome::new(EXIT_USAGE, format!("ERROR: {message}\n"))
    }

    pub fn success(&self) -> bool {
        self.code == EXIT_OK
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "interval-powers",
    version,
    about = "Order-preserving interval representations of graph powers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the k-th power of a graph.
    Power {
        graph: PathBuf,
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extend a representation of G^(k-1) to one of G^k.
    Extend(ExtendArgs),
    /// Convert a proper representation into a unit one.
    Tounit {
        rep: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a representation realizes G^k.
    Verify {
        graph: PathBuf,
        k: usize,
        rep: PathBuf,
        /// Second representation whose endpoint orders must agree.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
    /// Print both endpoint orders of a representation.
    Orders { rep: PathBuf },
    /// Search trapezoid representations of a graph with prescribed orders.
    TrapezoidSearch {
        orders: PathBuf,
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively check the trapezoid counterexample on P5.
    P5Demo,
    /// Generate a random interval representation.
    RandomRep(RandomRepArgs),
}

#[derive(Debug, Args)]
pub struct ExtendArgs {
    pub graph: PathBuf,
    pub rep: PathBuf,
    /// Target power; the representation must realize G^(k-1).
    #[arg(
        short,
        long,
        required_unless_present = "iterate",
        conflicts_with = "iterate"
    )]
    pub k: Option<usize>,
    /// Starting from a representation of G itself, extend up to G^K.
    #[arg(long, value_name = "K")]
    pub iterate: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RandomRepArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub max_coord: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Generate a proper representation.
    #[arg(long, conflicts_with = "connected")]
    pub proper: bool,
    /// Generate a representation with a connected intersection graph.
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the intersection graph.
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            CommandOutcome::new(code, e.render().to_string())
        }
    }
}

pub fn execute(command: Command) -> CommandOutcome {
    let result = match command {
        Command::Power { graph, k, out } => cmd_power(&graph, k, out.as_deref()),
        Command::Extend(args) => cmd_extend(&args),
        Command::Tounit { rep, out } => cmd_tounit(&rep, out.as_deref()),
        Command::Verify {
            graph,
            k,
            rep,
            compare,
        } => cmd_verify(&graph, k, &rep, compare.as_deref()),
        Command::Orders { rep } => cmd_orders(&rep),
        Command::TrapezoidSearch { orders, graph, out } => {
            cmd_trapezoid_search(&orders, &graph, out.as_deref())
        }
        Command::P5Demo => Ok(cmd_p5_demo()),
        Command::RandomRep(args) => cmd_random_rep(&args),
    };
    result.unwrap_or_else(|failure| failure)
}

type CmdResult = Result<CommandOutcome, CommandOutcome>;

fn read(path: &Path) -> Result<String, CommandOutcome> {
    fs::read_to_string(path)
        .map_err(|e| CommandOutcome::usage(format_args!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: fn(&str) -> crate::Result<T>) -> Result<T, CommandOutcome> {
    parse(&read(path)?).map_err(|e| CommandOutcome::usage(format_args!("{}: {e}", path.display())))
}

fn store(path: &Path, contents: &str) -> Result<(), CommandOutcome> {
    fs::write(path, contents)
        .map_err(|e| CommandOutcome::usage(format_args!("{}: {e}", path.display())))
}

/// Exit code for a library error surfacing from a command.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::RepresentationMismatch { .. }
        | Error::NotProper { .. }
        | Error::InfeasibleConstraints => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

fn failure(e: Error) -> CommandOutcome {
    CommandOutcome::new(error_code(&e), format!("ERROR: {e}\n"))
}

fn verdict(ok: bool, yes: &'static str, no: &'static str) -> &'static str {
    if ok {
        yes
    } else {
        no
    }
}

pub fn cmd_power(graph: &Path, k: usize, out: Option<&Path>) -> CmdResult {
    let g = load(graph, format::parse_graph)?;
    let power = graph_power(&g, k).map_err(failure)?;
    let text = format::write_graph(&power);
    match out {
        Some(path) => {
            store(path, &text)?;
            Ok(CommandOutcome::new(
                EXIT_OK,
                format!(
                    "K: {k}\nVERTICES: {}\nEDGES: {}\nOUTPUT: {}\n",
                    power.vertex_count(),
                    power.edge_count(),
                    path.display()
                ),
            ))
        }
        None => Ok(CommandOutcome::new(EXIT_OK, text)),
    }
}

fn step_report(
    report: &mut String,
    g: &Graph,
    k: usize,
    input: &IntervalRepresentation,
    output: &IntervalRepresentation,
) -> bool {
    let before = endpoint_orders(input);
    let after = endpoint_orders(output);
    let left_ok = before.left == after.left;
    let right_ok = before.right == after.right;
    let graph_ok = graph_power_oracle(g, k)
        .map(|expected| intersection_graph(output) == expected)
        .unwrap_or(false);
    let _ = writeln!(report, "K: {k}");
    let _ = writeln!(
        report,
        "LEFT_ORDER: {}",
        verdict(left_ok, "PRESERVED", "VIOLATED")
    );
    let _ = writeln!(
        report,
        "RIGHT_ORDER: {}",
        verdict(right_ok, "PRESERVED", "VIOLATED")
    );
    let _ = writeln!(report, "GRAPH: {}", verdict(graph_ok, "OK", "MISMATCH"));
    left_ok && right_ok && graph_ok
}

fn suffixed(path: &Path, k: usize) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(format!(".k{k}"));
    PathBuf::from(s)
}

pub fn cmd_extend(args: &ExtendArgs) -> CmdResult {
    let g = load(&args.graph, format::parse_graph)?;
    let r = load(&args.rep, format::parse_representation)?;
    let mut report = String::new();
    let mut ok = true;

    let steps: Vec<PowerStep> = match (args.k, args.iterate) {
        (_, Some(k_max)) => iterate_powers(&g, &r, k_max).map_err(failure)?,
        (Some(k), None) => {
            let Extension {
                representation,
                trace,
            } = extend_representation(&g, k, &r).map_err(failure)?;
            vec![PowerStep {
                k,
                representation,
                trace,
            }]
        }
        (None, None) => return Err(CommandOutcome::usage("either --k or --iterate is required")),
    };

    let chained = args.iterate.is_some();
    for step in &steps {
        ok &= step_report(&mut report, &g, step.k, &r, &step.representation);
        let _ = writeln!(report, "SCALE: {}", step.trace.scale);
        if chained {
            if let Some(out) = &args.out {
                let path = suffixed(out, step.k);
                store(&path, &format::write_representation(&step.representation))?;
                let _ = writeln!(report, "OUTPUT: {}", path.display());
            }
            if let Some(trace) = &args.trace {
                let path = suffixed(trace, step.k);
                store(&path, &format::write_trace(&step.trace))?;
                let _ = writeln!(report, "TRACE: {}", path.display());
            }
        }
    }

    let last = steps.last().expect("at least one step");
    let rep_text = format::write_representation(&last.representation);
    match &args.out {
        Some(out) => {
            store(out, &rep_text)?;
            let _ = writeln!(report, "OUTPUT: {}", out.display());
        }
        None => {
            report.push_str("REPRESENTATION:\n");
            report.push_str(&rep_text);
        }
    }
    if let Some(trace) = &args.trace {
        store(trace, &format::write_trace(&last.trace))?;
        let _ = writeln!(report, "TRACE: {}", trace.display());
    }
    let _ = writeln!(report, "RESULT: {}", verdict(ok, "PASS", "FAIL"));
    Ok(CommandOutcome::new(verdict_code(ok), report))
}

fn verdict_code(ok: bool) -> u8 {
    if ok {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

pub fn cmd_tounit(rep: &Path, out: Option<&Path>) -> CmdResult {
    let r = load(rep, format::parse_representation)?;
    let unit = match proper_to_unit(&r) {
        Ok(u) => u,
        Err(Error::NotProper { outer, inner }) => {
            return Ok(CommandOutcome::new(
                EXIT_VERIFY,
                format!("PROPER: no\nWITNESS: {outer} contains {inner}\n"),
            ))
        }
        Err(e) => return Err(failure(e)),
    };
    let length = unit.intervals().first().map_or(0, |iv| iv.length());
    let orders_ok = endpoint_orders(&unit) == endpoint_orders(&r);
    let graph_ok = intersection_graph(&unit) == intersection_graph(&r);
    let mut report = format!(
        "PROPER: yes\nUNIT_LENGTH: {length}\nORDERS: {}\nGRAPH: {}\n",
        verdict(orders_ok, "PRESERVED", "VIOLATED"),
        verdict(graph_ok, "OK", "MISMATCH")
    );
    let text = format::write_representation(&unit);
    match out {
        Some(path) => {
            store(path, &text)?;
            let _ = writeln!(report, "OUTPUT: {}", path.display());
        }
        None => {
            report.push_str("REPRESENTATION:\n");
            report.push_str(&text);
        }
    }
    Ok(CommandOutcome::new(
        verdict_code(orders_ok && graph_ok),
        report,
    ))
}

pub fn cmd_verify(graph: &Path, k: usize, rep: &Path, compare: Option<&Path>) -> CmdResult {
    let g = load(graph, format::parse_graph)?;
    let r = load(rep, format::parse_representation)?;
    let expected = graph_power_oracle(&g, k).map_err(failure)?;
    if r.len() != g.vertex_count() {
        return Err(failure(Error::VertexSetMismatch {
            left: r.len(),
            right: g.vertex_count(),
        }));
    }
    let mut report = String::new();
    let actual = intersection_graph(&r);
    let mut ok = true;
    match actual.first_difference(&expected) {
        None => report.push_str("GRAPH: OK\n"),
        Some((u, v, in_rep)) => {
            ok = false;
            let what = if in_rep {
                "extra in representation"
            } else {
                "missing in representation"
            };
            let _ = writeln!(
                report,
                "GRAPH: MISMATCH\nPAIR: {} {} ({what})",
                u + 1,
                v + 1
            );
        }
    }
    if let Some(other) = compare {
        let o = load(other, format::parse_representation)?;
        let a = endpoint_orders(&r);
        let b = endpoint_orders(&o);
        let left = same_orders(&a.left, &b.left).map_err(failure)?;
        let right = same_orders(&a.right, &b.right).map_err(failure)?;
        let _ = writeln!(report, "LEFT_ORDER: {}", verdict(left, "SAME", "DIFFERENT"));
        let _ = writeln!(
            report,
            "RIGHT_ORDER: {}",
            verdict(right, "SAME", "DIFFERENT")
        );
        ok &= left && right;
    }
    let _ = writeln!(report, "RESULT: {}", verdict(ok, "PASS", "FAIL"));
    Ok(CommandOutcome::new(verdict_code(ok), report))
}

pub fn cmd_orders(rep: &Path) -> CmdResult {
    let r = load(rep, format::parse_representation)?;
    let o = endpoint_orders(&r);
    Ok(CommandOutcome::new(
        EXIT_OK,
        format!(
            "LEFT: {}\nRIGHT: {}\nPROPER: {}\n",
            format::display_weak_order(&o.left),
            format::display_weak_order(&o.right),
            verdict(is_proper(&r), "yes", "no")
        ),
    ))
}

pub fn cmd_trapezoid_search(orders: &Path, graph: &Path, out: Option<&Path>) -> CmdResult {
    let o = load(orders, format::parse_orders)?;
    let g = load(graph, format::parse_graph)?;
    let outcome = search_representation(&o, &g).map_err(failure)?;
    let mut report = format!(
        "CANDIDATES: {}\nMATCHES: {}\n",
        outcome.candidates, outcome.matches
    );
    if let Some(t) = &outcome.first_match {
        let text = format::write_trapezoids(t);
        match out {
            Some(path) => {
                store(path, &text)?;
                let _ = writeln!(report, "OUTPUT: {}", path.display());
            }
            None => {
                report.push_str("FIRST_MATCH:\n");
                report.push_str(&text);
            }
        }
    }
    Ok(CommandOutcome::new(EXIT_OK, report))
}

/// Counts gathered by the P5 trapezoid check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemoCounts {
    pub interleavings: [u64; 2],
    pub brute_force: [u64; 2],
    pub candidates: u64,
    pub matches: u64,
}

/// Runs the exhaustive search for `target` under `orders`, also counting
/// interleavings per line both by enumeration and by brute force.
pub fn p5_demo_counts(orders: &TrapezoidOrders, target: &Graph) -> crate::Result<DemoCounts> {
    let lines = [
        (&orders.left0, &orders.right0),
        (&orders.left1, &orders.right1),
    ];
    let mut interleavings = [0; 2];
    let mut brute_force = [0; 2];
    for (i, (l, r)) in lines.into_iter().enumerate() {
        interleavings[i] = enumerate_interleavings(l, r)?.count() as u64;
        brute_force[i] = count_interleavings_brute_force(l, r)?;
    }
    let outcome = search_representation(orders, target)?;
    Ok(DemoCounts {
        interleavings,
        brute_force,
        candidates: outcome.candidates,
        matches: outcome.matches,
    })
}

/// Expected line orders of [`p5_representation`], 1-indexed.
const P5_LINE0: [usize; 5] = [1, 3, 2, 5, 4];
const P5_LINE1: [usize; 5] = [2, 1, 4, 3, 5];

pub fn cmd_p5_demo() -> CommandOutcome {
    let mut report = String::new();
    let mut ok = true;
    let mut check = |report: &mut String, key: &str, pass: bool, detail: String| {
        ok &= pass;
        let status = verdict(pass, "OK", "FAIL");
        let _ = if detail.is_empty() {
            writeln!(report, "{key}: {status}")
        } else {
            writeln!(report, "{key}: {status} {detail}")
        };
    };

    let t = p5_representation();
    let p5 = Graph::path(5);
    check(
        &mut report,
        "P5_GRAPH",
        trapezoid_intersection_graph(&t) == p5,
        String::new(),
    );

    let orders = t.orders();
    let expect = |seq: &[usize; 5]| seq.iter().map(|v| v - 1).collect::<Vec<_>>();
    for (key, order, seq) in [
        ("ORDER_L0", &orders.left0, &P5_LINE0),
        ("ORDER_R0", &orders.right0, &P5_LINE0),
        ("ORDER_L1", &orders.left1, &P5_LINE1),
        ("ORDER_R1", &orders.right1, &P5_LINE1),
    ] {
        let pass = order.is_strict() && order.sequence() == expect(seq);
        check(
            &mut report,
            key,
            pass,
            format!("({})", format::display_weak_order(order)),
        );
    }

    let square = graph_power(&p5, 2).expect("k >= 1");
    match (
        p5_demo_counts(&orders, &square),
        p5_demo_counts(&orders, &p5),
    ) {
        (Ok(sq), Ok(control)) => {
            for line in 0..2 {
                let pass = sq.interleavings[line] == sq.brute_force[line];
                check(
                    &mut report,
                    &format!("INTERLEAVINGS_L{line}"),
                    pass,
                    format!(
                        "({} enumerated, {} brute force)",
                        sq.interleavings[line], sq.brute_force[line]
                    ),
                );
            }
            let expected_candidates = sq.brute_force[0] * sq.brute_force[1];
            let pass = sq.candidates == expected_candidates && sq.candidates <= 63_504;
            check(
                &mut report,
                "CANDIDATES",
                pass,
                format!("({})", sq.candidates),
            );
            check(
                &mut report,
                "MATCHES_P5_SQUARED",
                sq.matches == 0,
                format!("({})", sq.matches),
            );
            check(
                &mut report,
                "MATCHES_P5",
                control.matches >= 1,
                format!("({})", control.matches),
            );
        }
        (Err(e), _) | (_, Err(e)) => check(&mut report, "SEARCH", false, e.to_string()),
    }
    let _ = writeln!(report, "RESULT: {}", verdict(ok, "PASS", "FAIL"));
    CommandOutcome::new(verdict_code(ok), report)
}

pub fn cmd_random_rep(args: &RandomRepArgs) -> CmdResult {
    if args.max_coord < 0 {
        return Err(CommandOutcome::usage("--max-coord must be non-negative"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let r = if args.proper {
        random::proper_representation(&mut rng, args.n, (args.max_coord / 10).max(1))
    } else if args.connected {
        random::connected_interval_representation(&mut rng, args.n, args.max_coord)
    } else {
        random::interval_representation(&mut rng, args.n, args.max_coord)
    };
    let mut report = String::new();
    if let Some(path) = &args.graph_out {
        store(path, &format::write_graph(&intersection_graph(&r)))?;
        let _ = writeln!(report, "GRAPH_OUTPUT: {}", path.display());
    }
    let text = format::write_representation(&r);
    match &args.out {
        Some(path) => {
            store(path, &text)?;
            let _ = writeln!(report, "OUTPUT: {}", path.display());
        }
        None => report.push_str(&text),
    }
    Ok(CommandOutcome::new(EXIT_OK, report))
}
