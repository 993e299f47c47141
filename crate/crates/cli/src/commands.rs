use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::Instant;

use cutwiener_core::{
    all_pairs_distances, check_c_partition, cut_report, direct_report, gen_gmn, gen_named,
    gen_random_connected, oracle_report, parse_edge_list, parse_partition, reduce_fully,
    theta_star_partition, write_edge_list, write_partition, CutDecomposition, DistanceMatrix,
    EdgePartition, EdgeWeights, Error, Family, Graph, GridHexSpec, IndexReport, Scalar,
    VertexWeights, WeightedGraph, Weights,
};
use serde::Serialize;

use crate::report::{
    render_reduce, render_report, render_verify, PartitionReport, QuotientDump, ReduceReport,
    Report, VerifyReport,
};
use crate::{
    Command, CutExtras, Format, IndexArg, InputArgs, MethodArg, OutputArgs, PartitionArgs,
    PartitionSource,
};

/// Relative tolerance for comparing methods on fractional weights.
const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io { path: PathBuf, source: io::Error },
    Core(Error),
    Mismatch(Vec<&'static str>),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Core(Error::Format { .. } | Error::NotAPartition(_)) => 3,
            CliError::Core(Error::BadSpec { .. } | Error::BadParams(_)) => 1,
            CliError::Core(_) => 4,
            CliError::Mismatch(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Core(err) => write!(f, "{err}"),
            CliError::Mismatch(which) => write!(f, "methods disagree on {}", which.join(", ")),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

type Result<T> = std::result::Result<T, CliError>;

type Field<T> = (&'static str, fn(&Report<T>) -> Option<T>);

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Compute { input, output, partition, method, index, extras } => {
            let wg = load(&input)?;
            match &wg.weights {
                Weights::Integer { vertex, edge } => {
                    compute(&wg.graph, vertex, edge, method, &index, &partition, &extras, &output)
                }
                Weights::Float { vertex, edge } => {
                    compute(&wg.graph, vertex, edge, method, &index, &partition, &extras, &output)
                }
            }
        }
        Command::Verify { input, output, partition, extras } => {
            let wg = load(&input)?;
            match &wg.weights {
                Weights::Integer { vertex, edge } => {
                    verify(&wg.graph, vertex, edge, &partition, &extras, &output)
                }
                Weights::Float { vertex, edge } => {
                    verify(&wg.graph, vertex, edge, &partition, &extras, &output)
                }
            }
        }
        Command::Generate { family, params, seed, out } => {
            let mut spec = vec![family];
            spec.extend(params);
            let graph = generate(&spec, seed)?;
            emit(out.as_deref(), &write_edge_list::<i128>(&graph, None, None))
        }
        Command::Partition { input, output, partition } => {
            let wg = load(&input)?;
            let graph = &wg.graph;
            require_connected(graph)?;
            let dm = all_pairs_distances(graph);
            let p = resolve_partition(graph, &dm, &partition)?;
            check_c_partition(graph, &dm, &p)?;
            let text = match output.format {
                Format::Json => to_json(&PartitionReport::new(graph, &p)),
                Format::Text => write_partition(&p),
            };
            emit(output.out.as_deref(), &text)
        }
        Command::Reduce { input, out, format } => {
            let wg = load(&input)?;
            match &wg.weights {
                Weights::Integer { vertex, edge } => reduce(&wg.graph, vertex, edge, out.as_deref(), format),
                Weights::Float { vertex, edge } => reduce(&wg.graph, vertex, edge, out.as_deref(), format),
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<S: Serialize>(value: &S) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn load(input: &InputArgs) -> Result<WeightedGraph> {
    match (&input.input, input.generator.is_empty()) {
        (Some(path), true) => Ok(parse_edge_list(&read(path)?)?),
        (None, false) => Ok(WeightedGraph::unit(generate(&input.generator, input.seed)?)),
        (Some(_), false) => Err(CliError::Usage("--in and --gen are mutually exclusive".into())),
        (None, true) => Err(CliError::Usage("an input is required: --in <path> or --gen <family> <params>".into())),
    }
}

fn parse_param<T: std::str::FromStr>(raw: &str) -> Result<T> {
    raw.parse()
        .map_err(|_| CliError::Usage(format!("invalid generator parameter {raw:?}")))
}

fn generate(spec: &[String], seed: u64) -> Result<Graph> {
    let (family, params) = spec
        .split_first()
        .ok_or_else(|| CliError::Usage("missing generator family".into()))?;
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{family} takes {k} parameters, got {}", params.len())))
        }
    };
    match family.as_str() {
        "gmn" => {
            arity(2)?;
            let spec = GridHexSpec::new(parse_param(&params[0])?, parse_param(&params[1])?)?;
            Ok(gen_gmn(&spec))
        }
        "random" => {
            arity(2)?;
            Ok(gen_random_connected(parse_param(&params[0])?, parse_param(&params[1])?, seed)?)
        }
        other => {
            let nums = params.iter().map(|p| parse_param(p)).collect::<Result<Vec<usize>>>()?;
            Ok(gen_named(Family::parse(other, &nums)?)?)
        }
    }
}

fn require_connected(graph: &Graph) -> Result<()> {
    if graph.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected.into())
    }
}

fn resolve_partition(graph: &Graph, dm: &DistanceMatrix, args: &PartitionArgs) -> Result<EdgePartition> {
    let source = match (args.partition, &args.partition_file) {
        (Some(s), _) => s,
        (None, Some(_)) => PartitionSource::File,
        (None, None) => PartitionSource::ThetaStar,
    };
    match source {
        PartitionSource::ThetaStar => Ok(theta_star_partition(graph, dm)),
        PartitionSource::SingleClass => Ok(EdgePartition::single_class(graph.edge_count())),
        PartitionSource::File => {
            let path = args
                .partition_file
                .as_deref()
                .ok_or_else(|| CliError::Usage("--partition file needs --partition-file <path>".into()))?;
            Ok(parse_partition(&read(path)?, graph.edge_count())?)
        }
    }
}

struct Inputs<'a, T> {
    graph: &'a Graph,
    dm: &'a DistanceMatrix,
    w: &'a VertexWeights<T>,
    w_e: &'a EdgeWeights<T>,
}

fn from_index<T>(r: IndexReport<T>, classes: Option<usize>) -> Report<T> {
    Report {
        w: Some(r.w),
        we: Some(r.we),
        we_hat: Some(r.we_hat),
        wve: Some(r.wve),
        method: r.method,
        exactness: r.exactness,
        classes,
        elapsed_ms: None,
        quotients: None,
        quotient_terms: None,
    }
}

fn dump_quotients<T: Scalar>(cut: &CutDecomposition, w_e: &EdgeWeights<T>) -> Vec<QuotientDump<T>> {
    cut.quotients()
        .iter()
        .enumerate()
        .map(|(class, q)| {
            let (vw, ew) = q.weights(w_e);
            QuotientDump {
                class,
                edges: cut.partition().class(class).to_vec(),
                components: q.components(),
                quotient_edges: q.graph().edges().to_vec(),
                vertex_weights: vw.as_slice().to_vec(),
                edge_weights: ew.as_slice().to_vec(),
            }
        })
        .collect()
}

fn evaluate<T: Scalar>(
    method: MethodArg,
    inputs: &Inputs<'_, T>,
    partition: &PartitionArgs,
    extras: &CutExtras,
) -> Result<Report<T>> {
    let Inputs { graph, dm, w, w_e } = *inputs;
    let start = Instant::now();
    let mut report = match method {
        MethodArg::Direct => from_index(direct_report(graph, dm, w, w_e)?, None),
        MethodArg::Oracle => from_index(oracle_report(graph, dm, w, w_e)?, None),
        MethodArg::Cut => {
            let p = resolve_partition(graph, dm, partition)?;
            let cut = CutDecomposition::new(graph, dm, p)?;
            let reduce = extras.reduce || extras.trace_reduction;
            let mut r = from_index(cut_report(graph, dm, w, w_e, &cut, reduce)?, Some(cut.len()));
            if extras.dump_quotients {
                r.quotients = Some(dump_quotients(&cut, w_e));
            }
            if extras.trace_reduction {
                r.quotient_terms = Some(cut.quotient_terms(w_e, true));
            }
            r
        }
        MethodArg::All => unreachable!("expanded by the caller"),
    };
    if extras.timing {
        report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    }
    Ok(report)
}

fn select<T>(mut r: Report<T>, index: &[IndexArg]) -> Report<T> {
    if index.contains(&IndexArg::All) {
        return r;
    }
    if !index.contains(&IndexArg::W) {
        r.w = None;
    }
    if !index.contains(&IndexArg::We) {
        r.we = None;
    }
    if !index.contains(&IndexArg::Wehat) {
        r.we_hat = None;
    }
    if !index.contains(&IndexArg::Wve) {
        r.wve = None;
    }
    r
}

#[allow(clippy::too_many_arguments)]
fn compute<T: Scalar>(
    graph: &Graph,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
    method: MethodArg,
    index: &[IndexArg],
    partition: &PartitionArgs,
    extras: &CutExtras,
    output: &OutputArgs,
) -> Result<()> {
    require_connected(graph)?;
    let dm = all_pairs_distances(graph);
    let inputs = Inputs { graph, dm: &dm, w, w_e };
    let methods = match method {
        MethodArg::All => vec![MethodArg::Direct, MethodArg::Cut, MethodArg::Oracle],
        m => vec![m],
    };
    let reports = methods
        .into_iter()
        .map(|m| evaluate(m, &inputs, partition, extras).map(|r| select(r, index)))
        .collect::<Result<Vec<_>>>()?;
    let text = match (output.format, reports.as_slice()) {
        (Format::Json, [single]) => to_json(single),
        (Format::Json, many) => to_json(&many),
        (Format::Text, many) => many.iter().map(render_report).collect::<Vec<_>>().join("\n"),
    };
    emit(output.out.as_deref(), &text)
}

fn same<T: Scalar>(a: T, b: T) -> bool {
    if T::EXACT {
        a == b
    } else {
        let (x, y) = (a.to_f64(), b.to_f64());
        (x - y).abs() <= FLOAT_TOLERANCE * x.abs().max(y.abs()).max(1.0)
    }
}

fn verify<T: Scalar>(
    graph: &Graph,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
    partition: &PartitionArgs,
    extras: &CutExtras,
    output: &OutputArgs,
) -> Result<()> {
    require_connected(graph)?;
    let dm = all_pairs_distances(graph);
    let inputs = Inputs { graph, dm: &dm, w, w_e };
    let direct = evaluate(MethodArg::Direct, &inputs, partition, extras)?;
    let cut = evaluate(MethodArg::Cut, &inputs, partition, extras)?;
    let oracle = evaluate(MethodArg::Oracle, &inputs, partition, extras)?;

    let mut mismatches = Vec::new();
    let fields: [Field<T>; 4] = [
        ("W", |r| r.w),
        ("We", |r| r.we),
        ("WeHat", |r| r.we_hat),
        ("Wve", |r| r.wve),
    ];
    for (name, get) in fields {
        let (a, b, c) = (get(&direct).unwrap(), get(&cut).unwrap(), get(&oracle).unwrap());
        if !(same(a, b) && same(a, c)) {
            mismatches.push(name);
        }
    }
    let report = VerifyReport { direct, cut, oracle, agree: mismatches.is_empty(), mismatches };
    let text = match output.format {
        Format::Json => to_json(&report),
        Format::Text => render_verify(&report),
    };
    emit(output.out.as_deref(), &text)?;
    if report.agree {
        Ok(())
    } else {
        Err(CliError::Mismatch(report.mismatches))
    }
}

fn reduce<T: Scalar>(
    graph: &Graph,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
    out: Option<&Path>,
    format: Format,
) -> Result<()> {
    let r = reduce_fully(graph, w, w_e)?;
    let edge_list = write_edge_list(&r.graph, Some(&r.vertex_weights), Some(&r.edge_weights));
    if let Some(path) = out {
        emit(Some(path), &edge_list)?;
    }
    let report = ReduceReport {
        input_vertices: graph.vertex_count(),
        input_edges: graph.edge_count(),
        vertices: r.graph.vertex_count(),
        edges: r.graph.edge_count(),
        corrections: r.corrections,
        steps: r.steps,
        vertex_map: r.vertex_map,
        graph: out.is_none().then_some(edge_list),
    };
    let text = match format {
        Format::Json => to_json(&report),
        Format::Text => render_reduce(&report),
    };
    emit(None, &text)
}
