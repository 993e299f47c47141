//! Quotient graphs `G / F` over one class of a c-partition, with the induced
//! vertex and edge weights and the maps sending original vertices and edges
//! into the quotient.

use std::collections::{BTreeMap, VecDeque};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::theta::{check_c_partition, EdgePartition};
use crate::weight::{EdgeWeights, Scalar, VertexWeights};

/// Where an original edge lands in a quotient: inside a single component
/// (a quotient vertex) or across two components (a quotient edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuotientImage {
    Vertex(usize),
    Edge(usize),
}

/// Labels vertices by connected component of `graph` minus `class_edges`.
///
/// Labels are contiguous from 0 and ordered by smallest member vertex.
pub fn components_without(graph: &Graph, class_edges: &[usize]) -> (usize, Vec<usize>) {
    let mut removed = vec![false; graph.edge_count()];
    for &e in class_edges {
        removed[e] = true;
    }
    let mut label = vec![usize::MAX; graph.vertex_count()];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..graph.vertex_count() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in graph.incident(u) {
                if !removed[e] && label[v] == usize::MAX {
                    label[v] = count;
                    queue.push_back(v);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

#[derive(Debug)]
pub struct Quotient {
    graph: Graph,
    ell: Vec<usize>,
    alpha: Vec<QuotientImage>,
    distances: OnceLock<DistanceMatrix>,
}

impl Quotient {
    /// Builds `graph / class_edges`. Quotient edges are ordered by their
    /// `(smaller, larger)` component pair.
    pub fn new(graph: &Graph, class_edges: &[usize]) -> Self {
        let (count, ell) = components_without(graph, class_edges);
        let mut pairs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(x, y) in graph.edges() {
            let (a, b) = (ell[x], ell[y]);
            if a != b {
                pairs.insert((a.min(b), a.max(b)), 0);
            }
        }
        for (i, slot) in pairs.values_mut().enumerate() {
            *slot = i;
        }
        let alpha = graph
            .edges()
            .iter()
            .map(|&(x, y)| {
                let (a, b) = (ell[x], ell[y]);
                if a == b {
                    QuotientImage::Vertex(a)
                } else {
                    QuotientImage::Edge(pairs[&(a.min(b), a.max(b))])
                }
            })
            .collect();
        let quotient = Graph::new(count, pairs.into_keys().collect())
            .expect("component pairs are distinct and loop-free");
        Self {
            graph: quotient,
            ell,
            alpha,
            distances: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Component of each original vertex.
    pub fn ell(&self) -> &[usize] {
        &self.ell
    }

    pub fn alpha(&self) -> &[QuotientImage] {
        &self.alpha
    }

    /// Original vertices of each component, ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.graph.vertex_count()];
        for (v, &c) in self.ell.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Distances in the quotient, computed on first use.
    pub fn distances(&self) -> &DistanceMatrix {
        self.distances.get_or_init(|| all_pairs_distances(&self.graph))
    }

    /// Vertex/vertex, vertex/edge or edge/edge distance in the quotient,
    /// depending on the kinds of the two images.
    pub fn image_distance(&self, a: QuotientImage, b: QuotientImage) -> u32 {
        use QuotientImage::*;
        let dm = self.distances();
        match (a, b) {
            (Vertex(x), Vertex(y)) => dm.d(x, y),
            (Vertex(x), Edge(f)) | (Edge(f), Vertex(x)) => dm.vertex_edge(x, self.graph.edge(f)),
            (Edge(e), Edge(f)) => dm.edge_d1(self.graph.edge(e), self.graph.edge(f)),
        }
    }

    /// Component weight: total weight of original edges with both endpoints
    /// in the component. Quotient edge weight: total weight of the original
    /// edges it stands for.
    pub fn weights<T: Scalar>(&self, w_e: &EdgeWeights<T>) -> (VertexWeights<T>, EdgeWeights<T>) {
        let mut vw = vec![T::ZERO; self.graph.vertex_count()];
        let mut ew = vec![T::ZERO; self.graph.edge_count()];
        for (e, image) in self.alpha.iter().enumerate() {
            match *image {
                QuotientImage::Vertex(x) => vw[x] = vw[x] + w_e[e],
                QuotientImage::Edge(f) => ew[f] = ew[f] + w_e[e],
            }
        }
        (
            VertexWeights::with_len(vw.len(), vw).expect("sums of non-negative weights"),
            EdgeWeights::with_len(ew.len(), ew).expect("sums of non-negative weights"),
        )
    }
}

#[derive(Debug)]
pub struct WeightedQuotient<T> {
    pub quotient: Quotient,
    pub vertex_weight: VertexWeights<T>,
    pub edge_weight: EdgeWeights<T>,
}

pub fn build_quotient<T: Scalar>(
    graph: &Graph,
    edge_weights: &EdgeWeights<T>,
    class_edges: &[usize],
) -> WeightedQuotient<T> {
    let quotient = Quotient::new(graph, class_edges);
    let (vertex_weight, edge_weight) = quotient.weights(edge_weights);
    WeightedQuotient {
        quotient,
        vertex_weight,
        edge_weight,
    }
}

/// All quotients of a graph over the classes of one c-partition.
#[derive(Debug)]
pub struct CutDecomposition {
    partition: EdgePartition,
    quotients: Vec<Quotient>,
}

impl CutDecomposition {
    /// Fails with `NotCoarser` unless `partition` is a c-partition of `graph`.
    pub fn new(graph: &Graph, dm: &DistanceMatrix, partition: EdgePartition) -> Result<Self> {
        check_c_partition(graph, dm, &partition)?;
        let quotients = partition
            .classes()
            .par_iter()
            .map(|class| Quotient::new(graph, class))
            .collect();
        Ok(Self {
            partition,
            quotients,
        })
    }

    pub fn partition(&self) -> &EdgePartition {
        &self.partition
    }

    pub fn quotients(&self) -> &[Quotient] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// Sum over quotients of the distance between the images of `u` and `v`.
    pub fn vertex_distance(&self, u: usize, v: usize) -> u32 {
        self.quotients
            .iter()
            .map(|q| q.distances().d(q.ell[u], q.ell[v]))
            .sum()
    }

    /// Sum over quotients of the distance between the images of `e` and `f`.
    pub fn edge_distance(&self, e: usize, f: usize) -> u32 {
        self.quotients
            .iter()
            .map(|q| q.image_distance(q.alpha[e], q.alpha[f]))
            .sum()
    }
}

pub fn edge_distance_via_quotients(
    graph: &Graph,
    dm: &DistanceMatrix,
    partition: &EdgePartition,
    e: usize,
    f: usize,
) -> Result<u32> {
    let cut = CutDecomposition::new(graph, dm, partition.clone())?;
    Ok(cut.edge_distance(e, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::theta::theta_star_partition;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    #[test]
    fn components_examples() {
        let g = cycle(6);
        assert_eq!(components_without(&g, &[]), (1, vec![0; 6]));
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(components_without(&g, &all), (6, all.clone()));
        // Removing the opposite pair {0-1, 3-4} leaves 1-2-3 and 4-5-0.
        assert_eq!(components_without(&g, &[0, 3]), (2, vec![0, 1, 1, 1, 0, 0]));
    }

    #[test]
    fn c6_quotient_is_weighted_k2() {
        let g = cycle(6);
        let wq = build_quotient(&g, &EdgeWeights::<i128>::unit(6), &[0, 3]);
        assert_eq!(wq.quotient.graph().edges(), &[(0, 1)]);
        assert_eq!(wq.vertex_weight.as_slice(), &[2, 2]);
        assert_eq!(wq.edge_weight.as_slice(), &[2]);
        assert_eq!(wq.quotient.alpha()[0], QuotientImage::Edge(0));
        assert_eq!(wq.quotient.alpha()[1], QuotientImage::Vertex(1));
        assert_eq!(wq.quotient.components(), vec![vec![0, 4, 5], vec![1, 2, 3]]);
    }

    #[test]
    fn edge_distance_examples() {
        let g = cycle(6);
        let dm = all_pairs_distances(&g);
        let p = theta_star_partition(&g, &dm);
        for e in 0..6 {
            assert_eq!(edge_distance_via_quotients(&g, &dm, &p, e, e), Ok(0));
        }
        assert_eq!(edge_distance_via_quotients(&g, &dm, &p, 0, 3), Ok(2));
        let single = EdgePartition::single_class(6);
        for e in 0..6 {
            for f in 0..6 {
                assert_eq!(
                    edge_distance_via_quotients(&g, &dm, &single, e, f).unwrap(),
                    dm.edge_d1(g.edge(e), g.edge(f))
                );
            }
        }
    }

    #[test]
    fn rejects_non_c_partition() {
        let g = cycle(6);
        let dm = all_pairs_distances(&g);
        let bad = EdgePartition::from_classes(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(matches!(
            CutDecomposition::new(&g, &dm, bad),
            Err(Error::NotCoarser { .. })
        ));
    }

    #[test]
    fn weights_conserve_total() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)]).unwrap();
        let w = EdgeWeights::<i128>::new(&g, vec![3, 0, 5, 1, 2]).unwrap();
        let wq = build_quotient(&g, &w, &[0, 2]);
        assert_eq!(wq.vertex_weight.total() + wq.edge_weight.total(), 11);
    }
}
