//! Weighted Wiener-type indices.
//!
//! Direct evaluation sums over unordered pairs (`u < v`, `e < f`), which is
//! the halved ordered double sum since every diagonal term vanishes. The cut
//! method evaluates the edge indices from the quotient graphs of a
//! c-partition; the line-graph oracle evaluates the edge-Wiener index as the
//! vertex-weighted Wiener index of the line graph.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, edge_distance_d0, line_graph, DistanceMatrix, Graph};
use crate::quotient::CutDecomposition;
use crate::reduction::{reduce_fully, Corrections, ReductionStepTrace};
use crate::theta::EdgePartition;
use crate::weight::{ordered_sum, EdgeWeights, Scalar, VertexWeights};

fn require_connected(dm: &DistanceMatrix) -> Result<()> {
    if dm.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn check_len(kind: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::WeightLength {
            kind,
            expected,
            found,
        })
    }
}

/// `W(G, w) = sum over {u, v} of w(u) w(v) d(u, v)`.
pub fn wiener<T: Scalar>(graph: &Graph, dm: &DistanceMatrix, w: &VertexWeights<T>) -> Result<T> {
    require_connected(dm)?;
    check_len("vertex", graph.vertex_count(), w.len())?;
    let n = graph.vertex_count();
    let rows: Vec<T> = (0..n)
        .into_par_iter()
        .map(|u| {
            let row = dm.row(u);
            let inner = ordered_sum((u + 1..n).map(|v| w[v] * T::from_count(row[v] as u64)));
            w[u] * inner
        })
        .collect();
    Ok(ordered_sum(rows))
}

fn edge_pair_sum<T: Scalar>(
    graph: &Graph,
    w_e: &EdgeWeights<T>,
    dist: impl Fn(usize, usize) -> u32 + Sync,
) -> T {
    let m = graph.edge_count();
    let rows: Vec<T> = (0..m)
        .into_par_iter()
        .map(|e| {
            let inner = ordered_sum((e + 1..m).map(|f| w_e[f] * T::from_count(dist(e, f) as u64)));
            w_e[e] * inner
        })
        .collect();
    ordered_sum(rows)
}

/// Edge-Wiener index with the endpoint-minimum distance `d1`.
pub fn edge_wiener_hat<T: Scalar>(graph: &Graph, dm: &DistanceMatrix, w_e: &EdgeWeights<T>) -> Result<T> {
    require_connected(dm)?;
    check_len("edge", graph.edge_count(), w_e.len())?;
    let edges = graph.edges();
    Ok(edge_pair_sum(graph, w_e, |e, f| dm.edge_d1(edges[e], edges[f])))
}

/// Edge-Wiener index with the line-graph distance `d0`.
pub fn edge_wiener<T: Scalar>(graph: &Graph, dm: &DistanceMatrix, w_e: &EdgeWeights<T>) -> Result<T> {
    require_connected(dm)?;
    check_len("edge", graph.edge_count(), w_e.len())?;
    let edges = graph.edges();
    Ok(edge_pair_sum(graph, w_e, |e, f| edge_distance_d0(dm, edges[e], edges[f])))
}

/// `W_ve(G, w, w_e) = sum over all (v, e) of w(v) w_e(e) d(v, e)`, with no
/// halving.
pub fn vertex_edge_wiener<T: Scalar>(
    graph: &Graph,
    dm: &DistanceMatrix,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
) -> Result<T> {
    require_connected(dm)?;
    check_len("vertex", graph.vertex_count(), w.len())?;
    check_len("edge", graph.edge_count(), w_e.len())?;
    let edges = graph.edges();
    let rows: Vec<T> = (0..graph.vertex_count())
        .into_par_iter()
        .map(|v| {
            let inner = ordered_sum(
                edges
                    .iter()
                    .enumerate()
                    .map(|(k, &e)| w_e[k] * T::from_count(dm.vertex_edge(v, e) as u64)),
            );
            w[v] * inner
        })
        .collect();
    Ok(ordered_sum(rows))
}

/// `sum over {e, f}, e != f, of w_e(e) w_e(f)`: the gap between the `d0` and
/// `d1` indices. Equals `m(m-1)/2` for unit weights.
pub fn distinct_pair_weight<T: Scalar>(w_e: &EdgeWeights<T>) -> T {
    let w = w_e.as_slice();
    let mut prefix = T::ZERO;
    let mut acc = T::ZERO;
    for &x in w {
        acc = acc + prefix * x;
        prefix = prefix + x;
    }
    acc
}

/// The three weighted indices of one quotient, optionally evaluated through
/// its twin reduction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientTerms<T> {
    pub class: usize,
    pub wiener: T,
    pub edge_wiener_hat: T,
    pub vertex_edge_wiener: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<QuotientReduction<T>>,
}

impl<T: Scalar> QuotientTerms<T> {
    pub fn total(&self) -> T {
        self.wiener + self.edge_wiener_hat + self.vertex_edge_wiener
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientReduction<T> {
    pub reduced_vertices: usize,
    pub reduced_edges: usize,
    pub corrections: Corrections<T>,
    pub steps: Vec<ReductionStepTrace<T>>,
}

impl CutDecomposition {
    /// Weighted indices of every quotient, in class order. With `reduce`,
    /// each quotient is first reduced by twin classes and its indices are
    /// recovered from the reduced graph plus the correction terms.
    pub fn quotient_terms<T: Scalar>(&self, w_e: &EdgeWeights<T>, reduce: bool) -> Vec<QuotientTerms<T>> {
        self.quotients()
            .par_iter()
            .enumerate()
            .map(|(class, q)| {
                let (vw, ew) = q.weights(w_e);
                if reduce {
                    let reduced = reduce_fully(q.graph(), &vw, &ew)
                        .expect("quotient of a connected graph is connected");
                    let dm = all_pairs_distances(&reduced.graph);
                    let c = &reduced.corrections;
                    let w = wiener(&reduced.graph, &dm, &reduced.vertex_weights).expect("connected");
                    let we_hat =
                        edge_wiener_hat(&reduced.graph, &dm, &reduced.edge_weights).expect("connected");
                    let wve = vertex_edge_wiener(
                        &reduced.graph,
                        &dm,
                        &reduced.vertex_weights,
                        &reduced.edge_weights,
                    )
                    .expect("connected");
                    QuotientTerms {
                        class,
                        wiener: w + c.wiener,
                        edge_wiener_hat: we_hat + c.edge_wiener_hat,
                        vertex_edge_wiener: wve + c.vertex_edge_wiener,
                        reduction: Some(QuotientReduction {
                            reduced_vertices: reduced.graph.vertex_count(),
                            reduced_edges: reduced.graph.edge_count(),
                            corrections: reduced.corrections.clone(),
                            steps: reduced.steps,
                        }),
                    }
                } else {
                    let dm = q.distances();
                    let g = q.graph();
                    QuotientTerms {
                        class,
                        wiener: wiener(g, dm, &vw).expect("connected"),
                        edge_wiener_hat: edge_wiener_hat(g, dm, &ew).expect("connected"),
                        vertex_edge_wiener: vertex_edge_wiener(g, dm, &vw, &ew).expect("connected"),
                        reduction: None,
                    }
                }
            })
            .collect()
    }

    pub fn edge_wiener_hat<T: Scalar>(&self, w_e: &EdgeWeights<T>) -> T {
        ordered_sum(self.quotient_terms(w_e, false).iter().map(QuotientTerms::total))
    }
}

/// `d1` edge-Wiener index from the quotients of `partition`.
pub fn edge_wiener_hat_cut<T: Scalar>(
    graph: &Graph,
    dm: &DistanceMatrix,
    w_e: &EdgeWeights<T>,
    partition: &EdgePartition,
) -> Result<T> {
    require_connected(dm)?;
    check_len("edge", graph.edge_count(), w_e.len())?;
    let cut = CutDecomposition::new(graph, dm, partition.clone())?;
    Ok(cut.edge_wiener_hat(w_e))
}

/// Unweighted edge-Wiener index from the quotients of `partition`.
pub fn edge_wiener_cut(graph: &Graph, dm: &DistanceMatrix, partition: &EdgePartition) -> Result<i128> {
    let m = graph.edge_count() as i128;
    let hat: i128 = edge_wiener_hat_cut(graph, dm, &EdgeWeights::unit(graph.edge_count()), partition)?;
    Ok(hat + m * (m - 1) / 2)
}

/// Weighted edge-Wiener index (`d0`) from the quotients of `partition`.
pub fn edge_wiener_cut_weighted<T: Scalar>(
    graph: &Graph,
    dm: &DistanceMatrix,
    w_e: &EdgeWeights<T>,
    partition: &EdgePartition,
) -> Result<T> {
    Ok(edge_wiener_hat_cut(graph, dm, w_e, partition)? + distinct_pair_weight(w_e))
}

/// Wiener index of the line graph.
pub fn edge_wiener_oracle(graph: &Graph) -> Result<i128> {
    edge_wiener_oracle_weighted(graph, &EdgeWeights::unit(graph.edge_count()))
}

/// Vertex-weighted Wiener index of the line graph, with edge weights carried
/// over to the line-graph vertices.
pub fn edge_wiener_oracle_weighted<T: Scalar>(graph: &Graph, w_e: &EdgeWeights<T>) -> Result<T> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    check_len("edge", graph.edge_count(), w_e.len())?;
    let line = line_graph(graph);
    let ldm = all_pairs_distances(&line);
    let w = VertexWeights::with_len(line.vertex_count(), w_e.as_slice().to_vec())?;
    wiener(&line, &ldm, &w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Direct,
    Cut,
    LineGraphOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Integer,
    Float,
}

impl Exactness {
    pub fn of<T: Scalar>() -> Self {
        if T::EXACT {
            Exactness::Integer
        } else {
            Exactness::Float
        }
    }
}

/// All four indices of one weighted graph, computed by one method.
///
/// The cut method and the oracle only change how the two edge indices are
/// obtained; `w` and `wve` are always evaluated directly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexReport<T> {
    pub w: T,
    pub we_hat: T,
    pub we: T,
    pub wve: T,
    pub method: Method,
    pub exactness: Exactness,
}

pub fn direct_report<T: Scalar>(
    graph: &Graph,
    dm: &DistanceMatrix,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
) -> Result<IndexReport<T>> {
    Ok(IndexReport {
        w: wiener(graph, dm, w)?,
        we_hat: edge_wiener_hat(graph, dm, w_e)?,
        we: edge_wiener(graph, dm, w_e)?,
        wve: vertex_edge_wiener(graph, dm, w, w_e)?,
        method: Method::Direct,
        exactness: Exactness::of::<T>(),
    })
}

pub fn cut_report<T: Scalar>(
    graph: &Graph,
    dm: &DistanceMatrix,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
    cut: &CutDecomposition,
    reduce_quotients: bool,
) -> Result<IndexReport<T>> {
    require_connected(dm)?;
    check_len("edge", graph.edge_count(), w_e.len())?;
    let terms = cut.quotient_terms(w_e, reduce_quotients);
    let we_hat = ordered_sum(terms.iter().map(QuotientTerms::total));
    Ok(IndexReport {
        w: wiener(graph, dm, w)?,
        we_hat,
        we: we_hat + distinct_pair_weight(w_e),
        wve: vertex_edge_wiener(graph, dm, w, w_e)?,
        method: Method::Cut,
        exactness: Exactness::of::<T>(),
    })
}

pub fn oracle_report<T: Scalar>(
    graph: &Graph,
    dm: &DistanceMatrix,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
) -> Result<IndexReport<T>> {
    let we = edge_wiener_oracle_weighted(graph, w_e)?;
    Ok(IndexReport {
        w: wiener(graph, dm, w)?,
        we_hat: we - distinct_pair_weight(w_e),
        we,
        wve: vertex_edge_wiener(graph, dm, w, w_e)?,
        method: Method::LineGraphOracle,
        exactness: Exactness::of::<T>(),
    })
}
