//! Twin-vertex reduction.
//!
//! Vertices with identical open neighborhoods form a twin class `C`. Deleting
//! all of `C` but one representative `c`, and folding the deleted weights
//! onto `c` and its edges, changes each of `W`, `Ŵ_e` and `W_ve` by a
//! correction term that depends only on the weights inside `C` and on the
//! edges incident to it.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::weight::{EdgeWeights, Scalar, VertexWeights};

/// Partition of the vertices by open neighborhood, ordered by smallest
/// member; members ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClasses {
    classes: Vec<Vec<usize>>,
}

impl TwinClasses {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Classes with at least two members.
    pub fn nontrivial(&self) -> impl Iterator<Item = &[usize]> {
        self.classes.iter().filter(|c| c.len() > 1).map(Vec::as_slice)
    }

    pub fn all_singletons(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

pub fn twin_classes(graph: &Graph) -> TwinClasses {
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..graph.vertex_count() {
        let slot = *index.entry(graph.neighborhood(v)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(v);
    }
    TwinClasses { classes }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Corrections<T> {
    pub wiener: T,
    pub edge_wiener_hat: T,
    pub vertex_edge_wiener: T,
}

impl<T: Scalar> Corrections<T> {
    pub fn zero() -> Self {
        Self {
            wiener: T::ZERO,
            edge_wiener_hat: T::ZERO,
            vertex_edge_wiener: T::ZERO,
        }
    }

    fn accumulate(&mut self, other: &Self) {
        self.wiener = self.wiener + other.wiener;
        self.edge_wiener_hat = self.edge_wiener_hat + other.edge_wiener_hat;
        self.vertex_edge_wiener = self.vertex_edge_wiener + other.vertex_edge_wiener;
    }
}

/// An edge `c_i n_j` between a class member and a common neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidentEdge {
    pub edge: usize,
    /// Position of `c_i` in the class.
    pub member: usize,
    /// Position of `n_j` in the neighbor list.
    pub neighbor: usize,
}

#[derive(Debug, Clone)]
pub struct ReductionStep<T> {
    /// The twin class `C`, ascending.
    pub class: Vec<usize>,
    pub kept: usize,
    pub removed: Vec<usize>,
    /// Common neighborhood `N(c)`, ascending.
    pub neighbors: Vec<usize>,
    /// `I(C)`, member-major.
    pub incident: Vec<IncidentEdge>,
    /// The reduced graph `G'`.
    pub graph: Graph,
    /// Image of every old vertex in `G'`; removed vertices map to `kept`'s image.
    pub vertex_map: Vec<usize>,
    /// Image of every old edge in `G'`; `c_i n_j` maps to `c n_j`.
    pub edge_map: Vec<usize>,
    pub vertex_weights: VertexWeights<T>,
    pub edge_weights: EdgeWeights<T>,
    pub corrections: Corrections<T>,
    /// `|C| = 1`: nothing was removed.
    pub trivial: bool,
}

/// `W` correction for a class whose members all weigh `a`: `a² k (k-1)`.
pub fn uniform_wiener_correction<T: Scalar>(a: T, k: usize) -> T {
    a * a * T::from_count((k * k.saturating_sub(1)) as u64)
}

/// `Ŵ_e` correction when every edge of `I(C)` weighs `a`:
/// `a² k s (k-1)(s-1) / 2`.
pub fn uniform_edge_wiener_hat_correction<T: Scalar>(a: T, k: usize, s: usize) -> T {
    // k (k-1) is even, so the halving is exact.
    let pairs = k * s * k.saturating_sub(1) * s.saturating_sub(1) / 2;
    a * a * T::from_count(pairs as u64)
}

/// `W_ve` correction when members weigh `a` and `I(C)` edges weigh `b`:
/// `a b k (k-1) s`.
pub fn uniform_vertex_edge_wiener_correction<T: Scalar>(a: T, b: T, k: usize, s: usize) -> T {
    a * b * T::from_count((k * k.saturating_sub(1) * s) as u64)
}

/// Removes `class \ {kept}` from `graph`.
///
/// `class` must be an entire twin class (all members share one neighborhood
/// and no other vertex has it) and contain `kept`.
pub fn reduce_once<T: Scalar>(
    graph: &Graph,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
    class: &[usize],
    kept: usize,
) -> Result<ReductionStep<T>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    for (kind, expected, found) in [
        ("vertex", graph.vertex_count(), w.len()),
        ("edge", graph.edge_count(), w_e.len()),
    ] {
        if expected != found {
            return Err(Error::WeightLength {
                kind,
                expected,
                found,
            });
        }
    }
    let mut class: Vec<usize> = class.to_vec();
    class.sort_unstable();
    class.dedup();
    let not_twin = || Error::NotTwinClass(class.clone());
    if class.is_empty() || !class.contains(&kept) || class.iter().any(|&v| v >= graph.vertex_count()) {
        return Err(not_twin());
    }
    let neighbors = graph.neighborhood(kept);
    let is_member = |v: usize| class.binary_search(&v).is_ok();
    for v in 0..graph.vertex_count() {
        if (graph.neighborhood(v) == neighbors) != is_member(v) {
            return Err(not_twin());
        }
    }

    let k = class.len();
    let s = neighbors.len();
    let removed: Vec<usize> = class.iter().copied().filter(|&v| v != kept).collect();

    let mut incident = Vec::with_capacity(k * s);
    for (i, &ci) in class.iter().enumerate() {
        for (j, &nj) in neighbors.iter().enumerate() {
            let edge = graph.edge_between(ci, nj).expect("twin shares every neighbor");
            incident.push(IncidentEdge {
                edge,
                member: i,
                neighbor: j,
            });
        }
    }

    // W: sum over unordered member pairs of 2 w(c_i) w(c_j).
    let mut wiener = T::ZERO;
    for i in 0..k {
        for j in i + 1..k {
            wiener = wiener + T::from_count(2) * w[class[i]] * w[class[j]];
        }
    }
    // Ŵ_e: half the ordered sum over c_i n_j and e in I(C) \ (I(c_i) ∪ I(n_j)),
    // i.e. the sum over unordered pairs sharing neither member nor neighbor.
    let mut edge_wiener_hat = T::ZERO;
    for (p, a) in incident.iter().enumerate() {
        for b in &incident[p + 1..] {
            if a.member != b.member && a.neighbor != b.neighbor {
                edge_wiener_hat = edge_wiener_hat + w_e[a.edge] * w_e[b.edge];
            }
        }
    }
    // W_ve: sum over i and r != i of w(c_i) times the weight of I(c_r).
    let member_edge_weight: Vec<T> = (0..k)
        .map(|i| {
            incident
                .iter()
                .filter(|ie| ie.member == i)
                .fold(T::ZERO, |acc, ie| acc + w_e[ie.edge])
        })
        .collect();
    let mut vertex_edge_wiener = T::ZERO;
    for i in 0..k {
        for (r, &weight) in member_edge_weight.iter().enumerate() {
            if r != i {
                vertex_edge_wiener = vertex_edge_wiener + w[class[i]] * weight;
            }
        }
    }

    // Build G'.
    let n = graph.vertex_count();
    let mut vertex_map = vec![usize::MAX; n];
    let mut next = 0;
    for (v, slot) in vertex_map.iter_mut().enumerate() {
        if removed.binary_search(&v).is_err() {
            *slot = next;
            next += 1;
        }
    }
    for &v in &removed {
        vertex_map[v] = vertex_map[kept];
    }
    let is_removed = |v: usize| removed.binary_search(&v).is_ok();
    let mut edges: Vec<Edge> = Vec::new();
    let mut edge_map = vec![usize::MAX; graph.edge_count()];
    let mut new_edge_weights = Vec::new();
    for (e, &(x, y)) in graph.edges().iter().enumerate() {
        if !is_removed(x) && !is_removed(y) {
            edge_map[e] = edges.len();
            edges.push((vertex_map[x], vertex_map[y]));
            new_edge_weights.push(w_e[e]);
        }
    }
    for ie in &incident {
        let target = edge_map[graph
            .edge_between(kept, neighbors[ie.neighbor])
            .expect("kept vertex is adjacent to every neighbor")];
        if class[ie.member] != kept {
            edge_map[ie.edge] = target;
            new_edge_weights[target] = new_edge_weights[target] + w_e[ie.edge];
        }
    }
    let mut new_vertex_weights = Vec::with_capacity(next);
    for v in 0..n {
        if v == kept {
            new_vertex_weights.push(class.iter().fold(T::ZERO, |acc, &c| acc + w[c]));
        } else if !is_removed(v) {
            new_vertex_weights.push(w[v]);
        }
    }
    let reduced = Graph::new(next, edges).expect("subgraph of a simple graph is simple");

    Ok(ReductionStep {
        trivial: k == 1,
        class,
        kept,
        removed,
        neighbors,
        incident,
        vertex_weights: VertexWeights::with_len(next, new_vertex_weights)?,
        edge_weights: EdgeWeights::with_len(reduced.edge_count(), new_edge_weights)?,
        graph: reduced,
        vertex_map,
        edge_map,
        corrections: Corrections {
            wiener,
            edge_wiener_hat,
            vertex_edge_wiener,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionStepTrace<T> {
    /// Class members, as indices of the graph being reduced at this step.
    pub members: Vec<usize>,
    pub kept: usize,
    /// Vertices of the input graph merged into this step's kept vertex.
    pub original_members: Vec<usize>,
    pub corrections: Corrections<T>,
}

#[derive(Debug, Clone)]
pub struct ReducedGraph<T> {
    pub graph: Graph,
    pub vertex_weights: VertexWeights<T>,
    pub edge_weights: EdgeWeights<T>,
    /// Accumulated over all steps.
    pub corrections: Corrections<T>,
    pub steps: Vec<ReductionStepTrace<T>>,
    /// Image of every input vertex in the reduced graph.
    pub vertex_map: Vec<usize>,
}

/// Reduces until no twin class has two members, always taking the class
/// with the smallest member first and keeping that member.
pub fn reduce_fully<T: Scalar>(
    graph: &Graph,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
) -> Result<ReducedGraph<T>> {
    reduce_fully_with(graph, w, w_e, |_| 0)
}

/// Like [`reduce_fully`], but `pick` chooses which nontrivial class to
/// reduce next (an index into the slice it is given).
pub fn reduce_fully_with<T: Scalar>(
    graph: &Graph,
    w: &VertexWeights<T>,
    w_e: &EdgeWeights<T>,
    mut pick: impl FnMut(&[&[usize]]) -> usize,
) -> Result<ReducedGraph<T>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut current = graph.clone();
    let mut vw = w.clone();
    let mut ew = w_e.clone();
    let mut corrections = Corrections::zero();
    let mut steps = Vec::new();
    let mut vertex_map: Vec<usize> = (0..graph.vertex_count()).collect();
    let mut origin: Vec<Vec<usize>> = (0..graph.vertex_count()).map(|v| vec![v]).collect();

    loop {
        let twins = twin_classes(&current);
        let candidates: Vec<&[usize]> = twins.nontrivial().collect();
        if candidates.is_empty() {
            break;
        }
        let class = candidates[pick(&candidates).min(candidates.len() - 1)].to_vec();
        let kept = class[0];
        let step = reduce_once(&current, &vw, &ew, &class, kept)?;

        let mut merged: Vec<usize> = class.iter().flat_map(|&c| origin[c].iter().copied()).collect();
        merged.sort_unstable();
        let mut new_origin = vec![Vec::new(); step.graph.vertex_count()];
        for (v, o) in origin.into_iter().enumerate() {
            new_origin[step.vertex_map[v]].extend(o);
        }
        for o in &mut new_origin {
            o.sort_unstable();
        }
        origin = new_origin;
        for m in &mut vertex_map {
            *m = step.vertex_map[*m];
        }

        corrections.accumulate(&step.corrections);
        steps.push(ReductionStepTrace {
            members: class,
            kept,
            original_members: merged,
            corrections: step.corrections,
        });
        current = step.graph;
        vw = step.vertex_weights;
        ew = step.edge_weights;
    }

    Ok(ReducedGraph {
        graph: current,
        vertex_weights: vw,
        edge_weights: ew,
        corrections,
        steps,
        vertex_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;
    use crate::indices::{edge_wiener_hat, vertex_edge_wiener, wiener};

    fn star(k: usize) -> Graph {
        Graph::new(k + 1, (1..=k).map(|i| (0, i)).collect()).unwrap()
    }

    #[test]
    fn twin_class_examples() {
        assert_eq!(twin_classes(&star(3)).classes(), &[vec![0], vec![1, 2, 3]]);
        let c4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(twin_classes(&c4).classes(), &[vec![0, 2], vec![1, 3]]);
        let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(twin_classes(&p4).all_singletons());
    }

    #[test]
    fn rejects_non_twin_classes() {
        let g = star(3);
        let w = VertexWeights::<i128>::unit(4);
        let w_e = EdgeWeights::<i128>::unit(3);
        assert!(matches!(reduce_once(&g, &w, &w_e, &[1, 2], 1), Err(Error::NotTwinClass(_))));
        assert!(matches!(reduce_once(&g, &w, &w_e, &[0, 1], 0), Err(Error::NotTwinClass(_))));
        assert!(matches!(reduce_once(&g, &w, &w_e, &[1, 2, 3], 0), Err(Error::NotTwinClass(_))));
    }

    #[test]
    fn trivial_class_is_identity() {
        let g = star(3);
        let w = VertexWeights::<i128>::unit(4);
        let w_e = EdgeWeights::<i128>::unit(3);
        let step = reduce_once(&g, &w, &w_e, &[0], 0).unwrap();
        assert!(step.trivial);
        assert_eq!(step.graph, g);
        assert_eq!(step.corrections, Corrections::zero());
    }

    #[test]
    fn star_reduces_to_k2() {
        let g = star(3);
        let w = VertexWeights::<i128>::with_len(4, vec![5, 1, 2, 3]).unwrap();
        let w_e = EdgeWeights::<i128>::with_len(3, vec![1, 4, 2]).unwrap();
        let step = reduce_once(&g, &w, &w_e, &[1, 2, 3], 1).unwrap();
        assert_eq!(step.graph.edges(), &[(0, 1)]);
        assert_eq!(step.vertex_weights.as_slice(), &[5, 6]);
        assert_eq!(step.edge_weights.as_slice(), &[7]);
        assert_eq!(step.vertex_map, vec![0, 1, 1, 1]);
        assert_eq!(step.edge_map, vec![0, 0, 0]);
        // 2(1*2 + 1*3 + 2*3); s = 1 so no Ŵ_e term; W_ve = 1*(4+2) + 2*(1+2) + 3*(1+4).
        assert_eq!(step.corrections.wiener, 22);
        assert_eq!(step.corrections.edge_wiener_hat, 0);
        assert_eq!(step.corrections.vertex_edge_wiener, 6 + 6 + 15);

        let dm = all_pairs_distances(&g);
        let rdm = all_pairs_distances(&step.graph);
        assert_eq!(
            wiener(&g, &dm, &w).unwrap(),
            wiener(&step.graph, &rdm, &step.vertex_weights).unwrap() + 22
        );
        assert_eq!(
            vertex_edge_wiener(&g, &dm, &w, &w_e).unwrap(),
            vertex_edge_wiener(&step.graph, &rdm, &step.vertex_weights, &step.edge_weights).unwrap() + 27
        );
    }

    #[test]
    fn k23_uniform_closed_forms() {
        // K_{2,3}: {0,1} vs {2,3,4}.
        let edges = (0..2).flat_map(|a| (2..5).map(move |b| (a, b))).collect();
        let g = Graph::new(5, edges).unwrap();
        let w = VertexWeights::<i128>::uniform(5, 3);
        let w_e = EdgeWeights::<i128>::uniform(6, 2);
        let step = reduce_once(&g, &w, &w_e, &[2, 3, 4], 2).unwrap();
        let (k, s) = (3, 2);
        assert_eq!(step.corrections.wiener, uniform_wiener_correction(3, k));
        assert_eq!(step.corrections.edge_wiener_hat, uniform_edge_wiener_hat_correction(2, k, s));
        assert_eq!(step.corrections.vertex_edge_wiener, uniform_vertex_edge_wiener_correction(3, 2, k, s));

        let dm = all_pairs_distances(&g);
        let rdm = all_pairs_distances(&step.graph);
        assert_eq!(
            edge_wiener_hat(&g, &dm, &w_e).unwrap(),
            edge_wiener_hat(&step.graph, &rdm, &step.edge_weights).unwrap()
                + step.corrections.edge_wiener_hat
        );
    }

    #[test]
    fn full_reduction_of_complete_bipartite() {
        let edges = (0..2).flat_map(|a| (2..5).map(move |b| (a, b))).collect();
        let g = Graph::new(5, edges).unwrap();
        let r = reduce_fully(&g, &VertexWeights::<i128>::unit(5), &EdgeWeights::unit(6)).unwrap();
        assert_eq!(r.graph.vertex_count(), 2);
        assert_eq!(r.steps.len(), 2);
        assert_eq!(r.vertex_weights.as_slice(), &[2, 3]);
        assert_eq!(r.edge_weights.as_slice(), &[6]);
        assert_eq!(r.vertex_map, vec![0, 0, 1, 1, 1]);
        assert!(twin_classes(&r.graph).all_singletons());
        assert_eq!(r.steps[1].original_members, vec![2, 3, 4]);
    }
}
