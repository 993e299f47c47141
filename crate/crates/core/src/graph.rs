//! Simple undirected graphs, all-pairs hop distances, and the vertex/edge
//! distance functions built on top of them.
//!
//! Edges are identified by their position in the edge list. Every parallel
//! structure (weights, partitions, quotient maps) is indexed the same way.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};

/// An edge as an endpoint pair `(x, y)`, in the orientation it was given.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    /// `(neighbor, edge index)` per vertex, in edge-list order.
    adjacency: Vec<Vec<(usize, usize)>>,
}

/// Checks that `edges` describes a simple graph on `vertex_count` vertices.
///
/// Returns whether the graph is connected.
pub fn validate(vertex_count: usize, edges: &[Edge]) -> Result<bool> {
    let graph = Graph::new(vertex_count, edges.to_vec())?;
    Ok(graph.is_connected())
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut seen: HashMap<Edge, usize> = HashMap::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (k, &(x, y)) in edges.iter().enumerate() {
            for v in [x, y] {
                if v >= vertex_count {
                    return Err(Error::BadIndex {
                        edge: k,
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if x == y {
                return Err(Error::SelfLoop { edge: k, vertex: x });
            }
            let key = (x.min(y), x.max(y));
            if let Some(&first) = seen.get(&key) {
                return Err(Error::DuplicateEdge {
                    edge: k,
                    first,
                    u: key.0,
                    v: key.1,
                });
            }
            seen.insert(key, k);
            adjacency[x].push((y, k));
            adjacency[y].push((x, k));
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, k: usize) -> Edge {
        self.edges[k]
    }

    /// `(neighbor, edge index)` pairs incident to `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(u, _)| u)
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighborhood(&self, v: usize) -> Vec<usize> {
        let mut n: Vec<usize> = self.neighbors(v).collect();
        n.sort_unstable();
        n
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, k)| k)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        bfs(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn shares_endpoint(&self, e: usize, f: usize) -> bool {
        let (x, y) = self.edges[e];
        let (a, b) = self.edges[f];
        x == a || x == b || y == a || y == b
    }
}

/// Sentinel distance between vertices in different components.
pub const UNREACHABLE: u32 = u32::MAX;

fn bfs(graph: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; graph.vertex_count()];
    bfs_into(graph, source, &mut dist);
    dist
}

fn bfs_into(graph: &Graph, source: usize, dist: &mut [u32]) {
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &(v, _) in graph.incident(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
}

/// Dense `n x n` table of hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.data[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Distance for pairs known to be connected.
    ///
    /// Panics on the unreachable sentinel so it never leaks into arithmetic.
    #[inline]
    pub fn d(&self, u: usize, v: usize) -> u32 {
        let d = self.data[u * self.n + v];
        assert!(d != UNREACHABLE, "distance between {u} and {v} is infinite");
        d
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// All entries finite.
    pub fn is_connected(&self) -> bool {
        self.data.iter().all(|&d| d != UNREACHABLE)
    }

    /// `d(v, e) = min(d(v, x), d(v, y))` for `e = xy`.
    #[inline]
    pub fn vertex_edge(&self, v: usize, (x, y): Edge) -> u32 {
        self.d(v, x).min(self.d(v, y))
    }

    /// Minimum over the four endpoint-to-endpoint distances.
    #[inline]
    pub fn edge_d1(&self, (x, y): Edge, (a, b): Edge) -> u32 {
        self.d(x, a)
            .min(self.d(x, b))
            .min(self.d(y, a))
            .min(self.d(y, b))
    }
}

/// BFS from every source; rows are filled in parallel.
pub fn all_pairs_distances(graph: &Graph) -> DistanceMatrix {
    let n = graph.vertex_count();
    let mut data = vec![UNREACHABLE; n * n];
    if n > 0 {
        data.par_chunks_mut(n)
            .enumerate()
            .for_each(|(source, row)| bfs_into(graph, source, row));
    }
    DistanceMatrix { n, data }
}

pub fn vertex_edge_distance(dm: &DistanceMatrix, v: usize, e: Edge) -> u32 {
    dm.vertex_edge(v, e)
}

pub fn edge_distance_d1(dm: &DistanceMatrix, e: Edge, f: Edge) -> u32 {
    dm.edge_d1(e, f)
}

/// Line-graph distance between two edges: 0 for the same edge, otherwise
/// `d1 + 1`. Edges are compared as unordered pairs.
pub fn edge_distance_d0(dm: &DistanceMatrix, e: Edge, f: Edge) -> u32 {
    let same = (e.0 == f.0 && e.1 == f.1) || (e.0 == f.1 && e.1 == f.0);
    if same {
        0
    } else {
        dm.edge_d1(e, f) + 1
    }
}

/// One vertex per edge of `graph`; two are adjacent iff the edges share an
/// endpoint. Vertex `k` of the result is edge `k` of the input.
pub fn line_graph(graph: &Graph) -> Graph {
    let mut edges = Vec::new();
    for v in 0..graph.vertex_count() {
        let inc = graph.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                edges.push((e.min(f), e.max(f)));
            }
        }
    }
    // In a simple graph two edges share at most one endpoint, so no duplicates.
    edges.sort_unstable();
    Graph::new(graph.edge_count(), edges).expect("line graph of a simple graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(validate(2, &[(0, 1)]), Ok(true));
        assert_eq!(
            validate(1, &[(0, 0)]),
            Err(Error::SelfLoop { edge: 0, vertex: 0 })
        );
        assert_eq!(validate(4, &[(0, 1), (2, 3)]), Ok(false));
        assert!(matches!(
            validate(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { edge: 1, first: 0, .. })
        ));
        assert!(matches!(
            validate(2, &[(0, 2)]),
            Err(Error::BadIndex { edge: 0, vertex: 2, .. })
        ));
    }

    #[test]
    fn adjacency_lists_each_edge_from_both_ends() {
        let g = cycle(5);
        for (k, &(x, y)) in g.edges().iter().enumerate() {
            assert_eq!(g.incident(x).iter().filter(|&&(_, e)| e == k).count(), 1);
            assert_eq!(g.incident(y).iter().filter(|&&(_, e)| e == k).count(), 1);
        }
    }

    #[test]
    fn distances_small() {
        assert_eq!(all_pairs_distances(&path3()).d(0, 2), 2);
        assert_eq!(all_pairs_distances(&cycle(6)).d(0, 3), 3);
        let k2 = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(all_pairs_distances(&k2).d(0, 1), 1);
    }

    #[test]
    fn unreachable_is_none() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let dm = all_pairs_distances(&g);
        assert_eq!(dm.get(0, 3), None);
        assert_eq!(dm.get(2, 3), Some(1));
        assert!(!dm.is_connected());
    }

    #[test]
    #[should_panic(expected = "infinite")]
    fn sentinel_never_used_in_arithmetic() {
        let g = Graph::new(2, vec![]).unwrap();
        all_pairs_distances(&g).d(0, 1);
    }

    #[test]
    fn vertex_edge_examples() {
        let c6 = all_pairs_distances(&cycle(6));
        assert_eq!(vertex_edge_distance(&c6, 0, (0, 1)), 0);
        assert_eq!(vertex_edge_distance(&c6, 0, (3, 4)), 2);
        let p3 = all_pairs_distances(&path3());
        assert_eq!(vertex_edge_distance(&p3, 2, (0, 1)), 1);
    }

    #[test]
    fn edge_distance_examples() {
        let g = cycle(6);
        let dm = all_pairs_distances(&g);
        assert_eq!(edge_distance_d1(&dm, (0, 1), (0, 1)), 0);
        assert_eq!(edge_distance_d1(&dm, (0, 1), (1, 2)), 0);
        assert_eq!(edge_distance_d1(&dm, (0, 1), (3, 4)), 2);
        assert_eq!(edge_distance_d0(&dm, (0, 1), (0, 1)), 0);
        assert_eq!(edge_distance_d0(&dm, (1, 0), (0, 1)), 0);
        assert_eq!(edge_distance_d0(&dm, (0, 1), (1, 2)), 1);
        assert_eq!(edge_distance_d0(&dm, (0, 1), (3, 4)), 3);
    }

    #[test]
    fn line_graph_examples() {
        let l = line_graph(&path3());
        assert_eq!((l.vertex_count(), l.edges()), (2, &[(0, 1)][..]));

        let l6 = line_graph(&cycle(6));
        assert_eq!((l6.vertex_count(), l6.edge_count()), (6, 6));
        assert!((0..6).all(|v| l6.degree(v) == 2));
        assert!(l6.is_connected());

        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let l = line_graph(&star);
        assert_eq!(l.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn d0_matches_line_graph_on_cycle() {
        let g = cycle(6);
        let dm = all_pairs_distances(&g);
        let ldm = all_pairs_distances(&line_graph(&g));
        for e in 0..6 {
            for f in 0..6 {
                assert_eq!(edge_distance_d0(&dm, g.edge(e), g.edge(f)), ldm.d(e, f));
            }
        }
    }
}
