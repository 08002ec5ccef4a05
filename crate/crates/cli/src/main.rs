//! Command-line surface for the network-model library: parse, normalize,
//! compare, combine, permute, generate Kneser graphs, act with operad
//! operations, run invariant suites, and export DOT/JSON.
//!
//! Vertex labels in text formats are 1-based, matching the usual drawings;
//! JSON carries 0-based indices. Exit codes: 0 success (or equal), 1 unequal
//! or failed check, 2 parse error, 3 context violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use netmods::checks;
use netmods::io;
use netmods::operad::{DistanceMatrix, MetricSpace, Point, RangeLimitedContext};
use netmods::{
    BoundedDegreeNetwork, Error, MonoidHandle, NetworkElement, NetworkModel, OperadOperation,
    Permutation, SimpleGraph, VarietalModel, VarietyTag,
};

#[derive(Parser)]
#[command(
    name = "netmods",
    version,
    about = "Network models from monoids: free varietal networks, Kneser graphs, and operad algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModelArgs {
    /// Edge monoid: bool, nat, band, or free:LETTERS (e.g. free:ab)
    #[arg(long, default_value = "bool")]
    monoid: String,
    /// Variety: mon, cmon, or gmon
    #[arg(long, default_value = "mon")]
    variety: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a network word
    Normalize {
        #[command(flatten)]
        model: ModelArgs,
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Output format: text, json, or dot
        #[arg(long, default_value = "text")]
        format: String,
        /// Network literal, e.g. "e(1,2)=T * e(3,4)=T" (1 is the empty network)
        word: String,
    },
    /// Decide equality of two network words; exits 0 if equal, 1 if not
    Eq {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: usize,
        left: String,
        right: String,
    },
    /// Overlay two networks on the same vertex set
    Overlay {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "text")]
        format: String,
        left: String,
        right: String,
    },
    /// Place two networks side by side
    Disjoint {
        #[command(flatten)]
        model: ModelArgs,
        /// Vertices of the left network
        #[arg(long)]
        m: usize,
        /// Vertices of the right network
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "text")]
        format: String,
        left: String,
        right: String,
    },
    /// Relabel vertices along a permutation in 1-based cycle notation
    Permute {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: usize,
        /// Permutation, e.g. "(1 2)(3 4)"
        #[arg(long)]
        sigma: String,
        #[arg(long, default_value = "text")]
        format: String,
        word: String,
    },
    /// Emit a Kneser graph (DOT by default, vertices labeled by subsets)
    Kneser {
        n: usize,
        k: usize,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Apply operad operations to algebra states
    Act {
        /// Scenario file (JSON); contains either space/L or k, plus states and ops
        #[arg(long, conflicts_with_all = ["k", "space", "range", "op", "states"])]
        scenario: Option<PathBuf>,
        /// Degree bound for the bounded-degree algebra
        #[arg(long)]
        k: Option<usize>,
        /// Metric space for the range-limited algebra: line or plane
        #[arg(long)]
        space: Option<String>,
        /// Range limit for the range-limited algebra
        #[arg(long)]
        range: Option<f64>,
        /// Operation as "(cycles; network-literal)", e.g. "((1 2); e(1,2)=T)"
        #[arg(long)]
        op: Option<String>,
        /// States as a JSON array
        #[arg(long)]
        states: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run a named invariant suite; `all` runs everything
    Check { suite: String },
    /// Export a network as JSON or DOT
    Export {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "json")]
        format: String,
        word: String,
    },
}

enum CliError {
    Parse(String),
    Context(String),
    Runtime(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Context(_) => 3,
            CliError::Runtime(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Context(m) | CliError::Runtime(m) => m,
        }
    }
}

/// Errors raised while reading user input are parse errors; the same
/// library error during execution is a context violation.
fn at_parse(e: Error) -> CliError {
    CliError::Parse(e.to_string())
}

fn at_context(e: Error) -> CliError {
    match e {
        Error::BudgetExceeded(_) => CliError::Runtime(e.to_string()),
        _ => CliError::Context(e.to_string()),
    }
}

fn build_model(args: &ModelArgs) -> Result<(MonoidHandle, VarietalModel), CliError> {
    let monoid = io::parse_monoid_name(&args.monoid).map_err(at_parse)?;
    let variety = VarietyTag::parse(&args.variety)
        .ok_or_else(|| CliError::Parse(format!("unknown variety {:?}", args.variety)))?;
    let model = VarietalModel::new(monoid.clone(), variety).map_err(at_context)?;
    Ok((monoid, model))
}

fn parse_network(
    monoid: &MonoidHandle,
    model: &VarietalModel,
    n: usize,
    s: &str,
) -> Result<NetworkElement, CliError> {
    let letters = io::parse_network_literal(monoid, n, s).map_err(at_parse)?;
    model.network(n, &letters).map_err(at_context)
}

fn print_network(
    monoid: &MonoidHandle,
    model: &VarietalModel,
    g: &NetworkElement,
    format: &str,
) -> Result<(), CliError> {
    match format {
        "text" => println!("{}", io::format_network_literal(monoid, g)),
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&io::network_to_json(model, g)).expect("serializable")
        ),
        "dot" => print!("{}", io::network_dot(model, g)),
        other => return Err(CliError::Parse(format!("unknown format {other:?}"))),
    }
    Ok(())
}

/// Parses cycle notation with 1-based points by shifting every number down.
fn parse_cycles_one_based(n: usize, s: &str) -> Result<Permutation, CliError> {
    let mut shifted = String::with_capacity(s.len());
    let mut digits = String::new();
    for c in s.chars().chain(std::iter::once(' ')) {
        if c.is_ascii_digit() {
            digits.push(c);
        } else {
            if !digits.is_empty() {
                let value: usize = digits
                    .parse()
                    .map_err(|_| CliError::Parse(format!("bad point {digits:?}")))?;
                if value == 0 {
                    return Err(CliError::Parse(
                        "vertex labels are 1-based; 0 is not a vertex".to_string(),
                    ));
                }
                shifted.push_str(&(value - 1).to_string());
                digits.clear();
            }
            shifted.push(c);
        }
    }
    Permutation::from_cycles(n, shifted.trim()).map_err(at_parse)
}

/// Splits an operation literal "(cycles; network-literal)" into its parts.
fn split_operation_literal(s: &str) -> Result<(String, String), CliError> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| {
            CliError::Parse("operation literal must look like \"(cycles; network)\"".to_string())
        })?;
    let semi = inner.find(';').ok_or_else(|| {
        CliError::Parse("operation literal needs a ';' between permutation and network".to_string())
    })?;
    Ok((
        inner[..semi].trim().to_string(),
        inner[semi + 1..].trim().to_string(),
    ))
}

/// Turns a boolean network literal into a simple graph (non-identity
/// letters become edges).
fn parse_graph_literal(n: usize, s: &str) -> Result<SimpleGraph, CliError> {
    let letters =
        io::parse_network_literal(&netmods::boolean_monoid(), n, s).map_err(at_parse)?;
    let mut g = SimpleGraph::edgeless(n);
    for (u, v, value) in letters {
        if value == netmods::Value::Bool(true) {
            g.add_edge(u, v).map_err(at_parse)?;
        }
    }
    Ok(g)
}

fn space_from_json(space: &io::SpaceJson) -> Result<MetricSpace, CliError> {
    match space.kind.as_str() {
        "line" => Ok(MetricSpace::Line),
        "plane" => Ok(MetricSpace::Plane),
        "matrix" => {
            let rows = space
                .matrix
                .clone()
                .ok_or_else(|| CliError::Parse("matrix space needs a matrix".to_string()))?;
            Ok(MetricSpace::Matrix(
                DistanceMatrix::new(rows).map_err(at_parse)?,
            ))
        }
        other => Err(CliError::Parse(format!("unknown space type {other:?}"))),
    }
}

fn point_from_json(space: &MetricSpace, raw: &[f64]) -> Result<Point, CliError> {
    match (space, raw) {
        (MetricSpace::Line, [x]) => Ok(Point::Line(*x)),
        (MetricSpace::Plane, [x, y]) => Ok(Point::Plane(*x, *y)),
        (MetricSpace::Matrix(_), [i]) => Ok(Point::Index(*i as usize)),
        _ => Err(CliError::Parse(format!(
            "point {raw:?} does not fit the space"
        ))),
    }
}

fn point_to_json(p: &Point) -> Vec<f64> {
    match p {
        Point::Line(x) => vec![*x],
        Point::Plane(x, y) => vec![*x, *y],
        Point::Index(i) => vec![*i as f64],
    }
}

fn run_bounded_scenario(
    k: usize,
    state_graphs: Vec<SimpleGraph>,
    ops: &[(Permutation, SimpleGraph, Vec<usize>)],
    format: &str,
) -> Result<(), CliError> {
    let model = VarietalModel::new(netmods::boolean_monoid(), VarietyTag::GMon)
        .expect("the boolean monoid is graphic");
    let mut states: Vec<BoundedDegreeNetwork> = state_graphs
        .into_iter()
        .map(|g| BoundedDegreeNetwork::new(k, g).map_err(at_context))
        .collect::<Result<_, _>>()?;
    for (sigma, network_graph, inputs) in ops {
        let letters: Vec<(usize, usize, netmods::Value)> = network_graph
            .edges()
            .map(|(u, v)| (u, v, netmods::Value::Bool(true)))
            .collect();
        let network = model
            .network(network_graph.n_vertices(), &letters)
            .map_err(at_context)?;
        let op = OperadOperation::new(&model, inputs.clone(), sigma.clone(), network)
            .map_err(at_context)?;
        let result =
            netmods::full_bounded_degree_action(&model, &op, &states).map_err(at_context)?;
        states = vec![result];
    }
    let last = states.last().expect("at least one state");
    match format {
        "text" => {
            let edges: Vec<String> = last
                .graph
                .edges()
                .map(|(u, v)| format!("({},{})", u + 1, v + 1))
                .collect();
            println!(
                "k={} n={} edges: {}",
                last.bound,
                last.graph.n_vertices(),
                if edges.is_empty() {
                    "none".to_string()
                } else {
                    edges.join(" ")
                }
            );
        }
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&io::GraphJson::from_graph(&last.graph))
                .expect("serializable")
        ),
        "dot" => print!("{}", last.graph.to_dot("state", None)),
        other => return Err(CliError::Parse(format!("unknown format {other:?}"))),
    }
    Ok(())
}

fn run_range_scenario(
    ctx: &RangeLimitedContext,
    mut states: Vec<netmods::RangeLimitedState>,
    ops: &[(Permutation, SimpleGraph, Vec<usize>)],
    format: &str,
) -> Result<(), CliError> {
    for (sigma, network, inputs) in ops {
        let op = OperadOperation {
            inputs: inputs.clone(),
            sigma: sigma.clone(),
            network: network.clone(),
        };
        let result = ctx.act(&op, &states).map_err(at_context)?;
        states = vec![result];
    }
    let last = states.last().expect("at least one state");
    match format {
        "text" => {
            let edges: Vec<String> = last
                .graph
                .edges()
                .map(|(u, v)| format!("({},{})", u + 1, v + 1))
                .collect();
            println!(
                "n={} edges: {}",
                last.graph.n_vertices(),
                if edges.is_empty() {
                    "none".to_string()
                } else {
                    edges.join(" ")
                }
            );
            for (v, p) in last.positions.iter().enumerate() {
                println!("  {} at {:?}", v + 1, point_to_json(p));
            }
        }
        "json" => {
            let json = io::RangeStateJson {
                graph: io::GraphJson::from_graph(&last.graph),
                points: last.positions.iter().map(point_to_json).collect(),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&json).expect("serializable")
            );
        }
        "dot" => print!("{}", last.graph.to_dot("state", None)),
        other => return Err(CliError::Parse(format!("unknown format {other:?}"))),
    }
    Ok(())
}

fn scenario_ops(
    scenario: &io::ScenarioJson,
    per_op_sizes: &[Vec<usize>],
) -> Result<Vec<(Permutation, SimpleGraph, Vec<usize>)>, CliError> {
    let mut out = Vec::new();
    for (op, sizes) in scenario.ops.iter().zip(per_op_sizes) {
        let total: usize = sizes.iter().sum();
        let sigma = Permutation::from_map(op.perm.clone()).map_err(at_parse)?;
        if sigma.len() != total {
            return Err(CliError::Context(format!(
                "operation permutes {} points but the states have {total} vertices",
                sigma.len()
            )));
        }
        let network = parse_graph_literal(total, &op.network)?;
        if op.inputs != *sizes {
            return Err(CliError::Context(format!(
                "operation inputs {:?} do not match the state sizes {sizes:?}",
                op.inputs
            )));
        }
        out.push((sigma, network, sizes.clone()));
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_act(
    scenario: Option<PathBuf>,
    k: Option<usize>,
    space: Option<String>,
    range: Option<f64>,
    op: Option<String>,
    states: Option<String>,
    format: &str,
) -> Result<(), CliError> {
    if let Some(path) = scenario {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
        let scenario: io::ScenarioJson =
            serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
        if let Some(k) = scenario.k {
            let graphs: Vec<io::GraphJson> = serde_json::from_value(scenario.states.clone())
                .map_err(|e| CliError::Parse(format!("bad bounded-degree states: {e}")))?;
            let graphs: Vec<SimpleGraph> = graphs
                .iter()
                .map(|g| g.to_graph().map_err(at_parse))
                .collect::<Result<_, _>>()?;
            // the first op consumes the listed states, each later op the
            // single previous result
            let mut sizes = vec![graphs.iter().map(|g| g.n_vertices()).collect::<Vec<_>>()];
            let total: usize = sizes[0].iter().sum();
            for _ in 1..scenario.ops.len() {
                sizes.push(vec![total]);
            }
            let ops = scenario_ops(&scenario, &sizes)?;
            return run_bounded_scenario(k, graphs, &ops, format);
        }
        let space_json = scenario
            .space
            .as_ref()
            .ok_or_else(|| CliError::Parse("scenario needs either k or space".to_string()))?;
        let metric = space_from_json(space_json)?;
        let max_range = scenario
            .max_range
            .ok_or_else(|| CliError::Parse("range-limited scenario needs L".to_string()))?;
        let ctx = RangeLimitedContext::new(metric, max_range).map_err(at_parse)?;
        let raw_states: Vec<io::RangeStateJson> = serde_json::from_value(scenario.states.clone())
            .map_err(|e| CliError::Parse(format!("bad range-limited states: {e}")))?;
        let mut parsed = Vec::new();
        for s in &raw_states {
            let graph = s.graph.to_graph().map_err(at_parse)?;
            let positions: Vec<Point> = s
                .points
                .iter()
                .map(|p| point_from_json(&ctx.space, p))
                .collect::<Result<_, _>>()?;
            parsed.push(ctx.state(graph, positions).map_err(at_context)?);
        }
        let mut sizes = vec![parsed
            .iter()
            .map(|s| s.graph.n_vertices())
            .collect::<Vec<_>>()];
        let total: usize = sizes[0].iter().sum();
        for _ in 1..scenario.ops.len() {
            sizes.push(vec![total]);
        }
        let ops = scenario_ops(&scenario, &sizes)?;
        return run_range_scenario(&ctx, parsed, &ops, format);
    }

    // inline mode: one operation from --op, states from --states
    let op_text = op.ok_or_else(|| {
        CliError::Parse("act needs either --scenario or --op with --states".to_string())
    })?;
    let states_text = states
        .ok_or_else(|| CliError::Parse("inline act needs --states as a JSON array".to_string()))?;
    let (cycles, network_literal) = split_operation_literal(&op_text)?;
    if let Some(k) = k {
        let graphs: Vec<io::GraphJson> = serde_json::from_str(&states_text)
            .map_err(|e| CliError::Parse(format!("bad states: {e}")))?;
        let graphs: Vec<SimpleGraph> = graphs
            .iter()
            .map(|g| g.to_graph().map_err(at_parse))
            .collect::<Result<_, _>>()?;
        let sizes: Vec<usize> = graphs.iter().map(|g| g.n_vertices()).collect();
        let total: usize = sizes.iter().sum();
        let sigma = parse_cycles_one_based(total, &cycles)?;
        let network = parse_graph_literal(total, &network_literal)?;
        return run_bounded_scenario(k, graphs, &[(sigma, network, sizes)], format);
    }
    let space_name = space.ok_or_else(|| {
        CliError::Parse("inline act needs --k (bounded degree) or --space with --range".to_string())
    })?;
    let metric = match space_name.as_str() {
        "line" => MetricSpace::Line,
        "plane" => MetricSpace::Plane,
        other => {
            return Err(CliError::Parse(format!(
                "inline space must be line or plane, got {other:?}"
            )))
        }
    };
    let max_range =
        range.ok_or_else(|| CliError::Parse("range-limited act needs --range".to_string()))?;
    let ctx = RangeLimitedContext::new(metric, max_range).map_err(at_parse)?;
    let raw_states: Vec<io::RangeStateJson> = serde_json::from_str(&states_text)
        .map_err(|e| CliError::Parse(format!("bad states: {e}")))?;
    let mut parsed = Vec::new();
    for s in &raw_states {
        let graph = s.graph.to_graph().map_err(at_parse)?;
        let positions: Vec<Point> = s
            .points
            .iter()
            .map(|p| point_from_json(&ctx.space, p))
            .collect::<Result<_, _>>()?;
        parsed.push(ctx.state(graph, positions).map_err(at_context)?);
    }
    let sizes: Vec<usize> = parsed.iter().map(|s| s.graph.n_vertices()).collect();
    let total: usize = sizes.iter().sum();
    let sigma = parse_cycles_one_based(total, &cycles)?;
    let network = parse_graph_literal(total, &network_literal)?;
    run_range_scenario(&ctx, parsed, &[(sigma, network, sizes)], format)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Normalize {
            model,
            n,
            format,
            word,
        } => {
            let (monoid, model) = build_model(&model)?;
            let g = parse_network(&monoid, &model, n, &word)?;
            print_network(&monoid, &model, &g, &format)?;
            Ok(0)
        }
        Command::Eq {
            model,
            n,
            left,
            right,
        } => {
            let (monoid, model) = build_model(&model)?;
            let a = parse_network(&monoid, &model, n, &left)?;
            let b = parse_network(&monoid, &model, n, &right)?;
            let equal = model.eq(&a, &b).map_err(at_context)?;
            println!("{}", if equal { "equal" } else { "unequal" });
            Ok(if equal { 0 } else { 1 })
        }
        Command::Overlay {
            model,
            n,
            format,
            left,
            right,
        } => {
            let (monoid, model) = build_model(&model)?;
            let a = parse_network(&monoid, &model, n, &left)?;
            let b = parse_network(&monoid, &model, n, &right)?;
            let g = model.overlay(&a, &b).map_err(at_context)?;
            print_network(&monoid, &model, &g, &format)?;
            Ok(0)
        }
        Command::Disjoint {
            model,
            m,
            n,
            format,
            left,
            right,
        } => {
            let (monoid, model) = build_model(&model)?;
            let a = parse_network(&monoid, &model, m, &left)?;
            let b = parse_network(&monoid, &model, n, &right)?;
            let g = model.disjoint_union(&a, &b).map_err(at_context)?;
            print_network(&monoid, &model, &g, &format)?;
            Ok(0)
        }
        Command::Permute {
            model,
            n,
            sigma,
            format,
            word,
        } => {
            let (monoid, model) = build_model(&model)?;
            let g = parse_network(&monoid, &model, n, &word)?;
            let sigma = parse_cycles_one_based(n, &sigma)?;
            let image = model.permute(&sigma, &g).map_err(at_context)?;
            print_network(&monoid, &model, &image, &format)?;
            Ok(0)
        }
        Command::Kneser { n, k, format } => {
            match format.as_str() {
                "dot" => print!("{}", io::kneser_dot(n, k)),
                "text" => {
                    let g = netmods::kneser_graph(n, k);
                    println!("vertices: {}", g.n_vertices());
                    let edges: Vec<String> =
                        g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                    println!("edges: {}", edges.join(" "));
                }
                "json" => {
                    let g = netmods::kneser_graph(n, k);
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&io::GraphJson::from_graph(&g))
                            .expect("serializable")
                    );
                }
                other => return Err(CliError::Parse(format!("unknown format {other:?}"))),
            }
            Ok(0)
        }
        Command::Act {
            scenario,
            k,
            space,
            range,
            op,
            states,
            format,
        } => {
            cmd_act(scenario, k, space, range, op, states, &format)?;
            Ok(0)
        }
        Command::Check { suite } => {
            let Some(reports) = checks::run_suite(&suite) else {
                return Err(CliError::Parse(format!(
                    "unknown suite {suite:?}; available: {}",
                    checks::suite_names().join(", ")
                )));
            };
            for report in &reports {
                if report.passed {
                    println!("ok   {}: {}", report.name, report.detail);
                } else {
                    println!("FAIL {}: {}", report.name, report.detail);
                    return Ok(1);
                }
            }
            println!("{} checks passed", reports.len());
            Ok(0)
        }
        Command::Export {
            model,
            n,
            format,
            word,
        } => {
            let (monoid, model) = build_model(&model)?;
            let g = parse_network(&monoid, &model, n, &word)?;
            print_network(&monoid, &model, &g, &format)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help and version through this path too
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
