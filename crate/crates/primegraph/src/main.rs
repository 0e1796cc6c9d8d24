use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use itertools::Itertools;

use primegraph::arith::factorize;
use primegraph::catalog::{parse_target, realization_pgc, Catalog};
use primegraph::chars::table::FixedPointTable;
use primegraph::chars::{extension_graphs_from, generic_sl2_2f_fixed_points, printed_m4_on_mersenne_class, GenericElement};
use primegraph::classify::{classifier_for, classify_solvable, conjecture_probe, Verdict, VerdictStatus};
use primegraph::groupkit::{ConcreteGroup, GroupSpec};
use primegraph::smallgraph::{parse_graph, to_dot, to_text, PrimeGraph};
use primegraph::witness::{build_witness, round_trips, verify_blueprint};
use primegraph::{spectra, Error};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_OPEN: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "primegraph", version, about = "Prime graph complements of PSL(2,q)-solvable groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the prime graph complement of a group spec.
    Pgc {
        #[arg(long)]
        group: String,
        /// Also write a DOT rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide whether a graph is a pgc of a T-solvable group.
    Classify {
        #[arg(long)]
        target: String,
        #[arg(long)]
        f: Option<u64>,
        #[arg(long)]
        graph: PathBuf,
        /// Overrides a `root:` line in the graph file.
        #[arg(long)]
        root: Option<u64>,
        /// Print the full certificate or failure list.
        #[arg(long)]
        verbose: bool,
    },
    /// Build a group blueprint for a realizable graph.
    Witness {
        #[arg(long)]
        target: String,
        #[arg(long)]
        f: Option<u64>,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        root: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Which prime exponents f ≤ max give K4 groups PSL(2,2^f).
    ScanK4 {
        #[arg(long)]
        max_f: u64,
    },
    /// Inspect a fixed-point table or the generic SL(2,2^f) computation.
    FixedPoints {
        #[arg(long, conflicts_with = "generic")]
        table: Option<PathBuf>,
        /// `f=<prime>`.
        #[arg(long, requires = "order")]
        generic: Option<String>,
        #[arg(long)]
        order: Option<u64>,
    },
    /// Compare the analytic prime graph with brute-force enumeration.
    OracleCompare {
        #[arg(long)]
        q: u64,
        /// psl2, sl2, pgl2 or aut.
        #[arg(long, default_value = "psl2")]
        family: String,
    },
    /// Compare two targets' verdicts on all small graphs.
    ProbeConjecture {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        f: Option<u64>,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print every catalog entry in graph-text blocks.
    Dump {
        #[arg(long)]
        target: String,
        #[arg(long)]
        f: Option<u64>,
    },
}

/// A failure carrying its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_DATA, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn read_graph(path: &PathBuf) -> Result<(PrimeGraph, Option<u64>), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(EXIT_DATA, format!("{}: {e}", path.display())))?;
    Ok(parse_graph(&text)?)
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn status_code(status: VerdictStatus) -> u8 {
    match status {
        VerdictStatus::Realizable => 0,
        VerdictStatus::Unrealizable => EXIT_NEGATIVE,
        VerdictStatus::Open => EXIT_OPEN,
    }
}

fn classify_target(target: &str, f: Option<u64>, g: &PrimeGraph, root: Option<u64>) -> Result<Verdict, Failure> {
    if target.eq_ignore_ascii_case("solvable") {
        return Ok(classify_solvable(g));
    }
    let spec = parse_target(target, f)?;
    Ok(classifier_for(&spec)?.classify(g, root)?)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Pgc { group, dot } => {
            let spec: GroupSpec = group.parse()?;
            let (g, _) = realization_pgc(&spec)?;
            print!("{}", to_text(&g, None));
            if let Some(path) = dot {
                write_file(&path, &to_dot(&g, None))?;
            }
            Ok(0)
        }
        Command::Classify { target, f, graph, root, verbose } => {
            let (g, file_root) = read_graph(&graph)?;
            let v = classify_target(&target, f, &g, root.or(file_root))?;
            if verbose {
                print!("{}", v.report());
            } else {
                println!("{v}");
            }
            Ok(status_code(v.status))
        }
        Command::Witness { target, f, graph, root, out } => {
            let (g, file_root) = read_graph(&graph)?;
            let v = classify_target(&target, f, &g, root.or(file_root))?;
            let Some(cert) = v.certificate.as_ref().filter(|_| v.status == VerdictStatus::Realizable) else {
                println!("{v}");
                return Ok(status_code(v.status));
            };
            let b = build_witness(&g, cert)?;
            verify_blueprint(&b)?;
            if !round_trips(&g, &b)? {
                return Err(Failure(EXIT_DATA, "blueprint complement differs from the input graph".into()));
            }
            match out {
                Some(path) => {
                    write_file(&path, &b.to_string())?;
                    println!("{v}");
                    println!("blueprint written to {} (round-trip verified)", path.display());
                }
                None => print!("{b}"),
            }
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::Dump { target, f } } => {
            let spec = parse_target(&target, f)?;
            print!("{}", Catalog::build(&spec)?.dump());
            Ok(0)
        }
        Command::ScanK4 { max_f } => {
            for r in spectra::k4_scan(max_f) {
                if r.is_k4 {
                    println!("f={} 2^f-1={} (2^f+1)/3={} K4", r.f, r.q_minus, r.p_plus);
                } else {
                    let why = [r.q_minus, r.p_plus]
                        .into_iter()
                        .filter(|&n| factorize(n).iter().map(|&(_, e)| e).sum::<u32>() > 1)
                        .map(|n| format!("{n}={}", factor_text(n)))
                        .join(", ");
                    println!("f={} 2^f-1={} (2^f+1)/3={} non-K4 ({why})", r.f, r.q_minus, r.p_plus);
                }
            }
            Ok(0)
        }
        Command::FixedPoints { table, generic, order } => {
            if let Some(path) = table {
                let text =
                    fs::read_to_string(&path).map_err(|e| Failure(EXIT_DATA, format!("{}: {e}", path.display())))?;
                let t = FixedPointTable::parse(&text)?;
                println!("target: {}", t.target);
                println!("characteristic: {}", t.characteristic);
                for row in &t.rows {
                    let no: Vec<_> = row.has_fixed_points.iter().filter(|(_, &y)| !y).map(|(p, _)| *p).collect();
                    println!("row {}: fixed [{}] fixed-point-free [{}]", row.label, row.fixed().iter().join(","), no.iter().join(","));
                }
                if t.characteristic != 0 {
                    let graphs = extension_graphs_from(&t)?;
                    println!("extension graphs: {}", graphs.len());
                    for g in graphs {
                        println!("graph: {}", g.edges().iter().map(|(a, b)| format!("{a}-{b}")).join(" "));
                    }
                }
                return Ok(0);
            }
            let Some(spec) = generic else {
                return Err(Failure(EXIT_USAGE, "fixed-points needs --table or --generic".into()));
            };
            let f: u64 = spec
                .strip_prefix("f=")
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Failure(EXIT_USAGE, format!("--generic expects f=<prime>, got {spec:?}")))?;
            let order = order.expect("clap enforces --order");
            let fp = generic_sl2_2f_fixed_points(f, GenericElement::from_order(f, order)?)?;
            println!("f={f} element order {}", fp.element_order);
            println!("summed: {}", fp.summed.iter().join(" "));
            println!("closed form: {}", fp.closed_form.iter().join(" "));
            if fp.element == GenericElement::MersenneTorus {
                println!("printed m4: {} (summation gives {})", printed_m4_on_mersenne_class(f), fp.summed[3]);
            }
            println!("all positive: {}", fp.all_positive());
            Ok(if fp.all_positive() { 0 } else { EXIT_NEGATIVE })
        }
        Command::OracleCompare { q, family } => {
            let spec = match family.as_str() {
                "psl2" => GroupSpec::psl2(q)?,
                "sl2" => GroupSpec::sl2(q)?,
                "pgl2" => GroupSpec::pgl2(q)?,
                "aut" => GroupSpec::aut(q)?,
                other => return Err(Failure(EXIT_USAGE, format!("unknown family {other:?}"))),
            };
            let analytic = spectra::prime_graph(&spec)?;
            let group = ConcreteGroup::build(&spec)?;
            let brute = group.prime_graph();
            if analytic == brute {
                println!("MATCH: analytic == brute force ({} elements)", group.order());
                Ok(0)
            } else {
                println!("MISMATCH for {spec}");
                println!("analytic:\n{}", to_text(&analytic, None));
                println!("brute force:\n{}", to_text(&brute, None));
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::ProbeConjecture { a, b, f, max_vertices } => {
            let r = conjecture_probe(&parse_target(&a, f)?, &parse_target(&b, f)?, max_vertices)?;
            println!(
                "{} vs {} on graphs with at most {} vertices: {} checked, {} disagreements",
                r.target_a,
                r.target_b,
                r.max_vertices,
                r.graphs_checked,
                r.disagreements.len()
            );
            for d in &r.disagreements {
                let root = d.root.map(|r| format!(" root {r}")).unwrap_or_default();
                let edges = d.graph.edges().iter().map(|(x, y)| format!("{x}-{y}")).join(" ");
                println!("disagree: vertices {}{root} edges [{edges}]: {} vs {}", d.graph.vertices().iter().join(","), d.a, d.b);
            }
            Ok(0)
        }
    }
}

fn factor_text(n: u64) -> String {
    factorize(n)
        .into_iter()
        .map(|(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .join("·")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
