//! Serializable report shapes and their text rendering.

use std::fmt::Write as _;

use cutwiener_core::{
    Corrections, EdgePartition, Exactness, Graph, Method, QuotientTerms, ReductionStepTrace, Scalar,
};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Report<T> {
    #[serde(rename = "W", skip_serializing_if = "Option::is_none")]
    pub w: Option<T>,
    #[serde(rename = "We", skip_serializing_if = "Option::is_none")]
    pub we: Option<T>,
    #[serde(rename = "WeHat", skip_serializing_if = "Option::is_none")]
    pub we_hat: Option<T>,
    #[serde(rename = "Wve", skip_serializing_if = "Option::is_none")]
    pub wve: Option<T>,
    pub method: Method,
    pub exactness: Exactness,
    /// Number of partition classes; `None` unless the cut method ran.
    pub classes: Option<usize>,
    pub elapsed_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotients: Option<Vec<QuotientDump<T>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_terms: Option<Vec<QuotientTerms<T>>>,
}

#[derive(Debug, Serialize)]
pub struct QuotientDump<T> {
    pub class: usize,
    pub edges: Vec<usize>,
    /// Original vertices of each quotient vertex.
    pub components: Vec<Vec<usize>>,
    pub quotient_edges: Vec<(usize, usize)>,
    pub vertex_weights: Vec<T>,
    pub edge_weights: Vec<T>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport<T> {
    pub direct: Report<T>,
    pub cut: Report<T>,
    pub oracle: Report<T>,
    pub agree: bool,
    pub mismatches: Vec<&'static str>,
}

#[derive(Debug, Serialize)]
pub struct PartitionReport {
    pub count: usize,
    pub classes: Vec<PartitionClass>,
}

#[derive(Debug, Serialize)]
pub struct PartitionClass {
    pub class: usize,
    pub edges: Vec<usize>,
    pub endpoints: Vec<(usize, usize)>,
}

impl PartitionReport {
    pub fn new(graph: &Graph, partition: &EdgePartition) -> Self {
        let classes = partition
            .classes()
            .iter()
            .enumerate()
            .map(|(class, edges)| PartitionClass {
                class,
                edges: edges.clone(),
                endpoints: edges.iter().map(|&e| graph.edge(e)).collect(),
            })
            .collect();
        Self { count: partition.len(), classes }
    }
}

#[derive(Debug, Serialize)]
pub struct ReduceReport<T> {
    pub input_vertices: usize,
    pub input_edges: usize,
    pub vertices: usize,
    pub edges: usize,
    pub corrections: Corrections<T>,
    pub steps: Vec<ReductionStepTrace<T>>,
    pub vertex_map: Vec<usize>,
    /// Reduced graph in edge-list format, when not written to a file.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Direct => "direct",
        Method::Cut => "cut",
        Method::LineGraphOracle => "line_graph_oracle",
    }
}

fn opt<T: Scalar>(out: &mut String, key: &str, value: Option<T>) {
    if let Some(v) = value {
        writeln!(out, "{key:<8}{v}").unwrap();
    }
}

pub fn render_report<T: Scalar>(r: &Report<T>) -> String {
    let mut out = String::new();
    writeln!(out, "method  {}", method_name(r.method)).unwrap();
    if let Some(c) = r.classes {
        writeln!(out, "classes {c}").unwrap();
    }
    opt(&mut out, "W", r.w);
    opt(&mut out, "We", r.we);
    opt(&mut out, "WeHat", r.we_hat);
    opt(&mut out, "Wve", r.wve);
    if let Some(ms) = r.elapsed_ms {
        writeln!(out, "time    {ms:.3} ms").unwrap();
    }
    for q in r.quotients.iter().flatten() {
        writeln!(
            out,
            "  quotient {}: {} vertices, {} edges",
            q.class,
            q.components.len(),
            q.quotient_edges.len()
        )
        .unwrap();
    }
    for t in r.quotient_terms.iter().flatten() {
        write!(
            out,
            "  class {}: W {} WeHat {} Wve {}",
            t.class, t.wiener, t.edge_wiener_hat, t.vertex_edge_wiener
        )
        .unwrap();
        if let Some(red) = &t.reduction {
            write!(out, " ({} reduction steps)", red.steps.len()).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn render_verify<T: Scalar>(v: &VerifyReport<T>) -> String {
    let mut out = String::new();
    for r in [&v.direct, &v.cut, &v.oracle] {
        out.push_str(&render_report(r));
        out.push('\n');
    }
    if v.agree {
        out.push_str("all methods agree\n");
    } else {
        writeln!(out, "MISMATCH in {}", v.mismatches.join(", ")).unwrap();
    }
    out
}

pub fn render_reduce<T: Scalar>(r: &ReduceReport<T>) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{} vertices, {} edges -> {} vertices, {} edges in {} steps",
        r.input_vertices,
        r.input_edges,
        r.vertices,
        r.edges,
        r.steps.len()
    )
    .unwrap();
    for (i, s) in r.steps.iter().enumerate() {
        writeln!(
            out,
            "step {i}: class {:?} keep {} dW {} dWeHat {} dWve {}",
            s.members,
            s.kept,
            s.corrections.wiener,
            s.corrections.edge_wiener_hat,
            s.corrections.vertex_edge_wiener
        )
        .unwrap();
    }
    let c = &r.corrections;
    writeln!(
        out,
        "total: dW {} dWeHat {} dWve {}",
        c.wiener, c.edge_wiener_hat, c.vertex_edge_wiener
    )
    .unwrap();
    if let Some(g) = &r.graph {
        out.push_str(g);
    }
    out
}
