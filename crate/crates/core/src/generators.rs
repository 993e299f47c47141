//! Test-graph families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::theta::EdgePartition;

/// The hexagon grid with `m` horizontal and `n` vertical layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridHexSpec {
    m: usize,
    n: usize,
}

impl GridHexSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::BadSpec { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_len(&self) -> usize {
        2 * self.n + 1
    }

    /// Index of vertex `(row, column)`, row-major.
    pub fn vertex(&self, row: usize, col: usize) -> usize {
        row * self.row_len() + col
    }

    pub fn vertex_count(&self) -> usize {
        (self.m + 1) * (2 * self.n + 1)
    }

    pub fn edge_count(&self) -> usize {
        3 * self.m * self.n + self.m + 2 * self.n
    }

    /// Number of row edges; these come first in the edge list and the rungs
    /// follow.
    pub fn row_edge_count(&self) -> usize {
        (self.m + 1) * 2 * self.n
    }
}

/// `m + 1` rows, each a path on `2n + 1` vertices, with consecutive rows
/// joined by rungs at every even column.
///
/// Edge order: row edges row by row, left to right, then rungs layer by
/// layer, left to right.
pub fn gen_gmn(spec: &GridHexSpec) -> Graph {
    let mut edges: Vec<Edge> = Vec::with_capacity(spec.edge_count());
    for row in 0..=spec.m {
        for col in 0..2 * spec.n {
            edges.push((spec.vertex(row, col), spec.vertex(row, col + 1)));
        }
    }
    for row in 0..spec.m {
        for col in (0..spec.row_len()).step_by(2) {
            edges.push((spec.vertex(row, col), spec.vertex(row + 1, col)));
        }
    }
    Graph::new(spec.vertex_count(), edges).expect("grid is simple")
}

/// Two-class partition: class 0 holds every row edge, class 1 every rung.
pub fn gmn_row_rung_partition(spec: &GridHexSpec) -> EdgePartition {
    let split = spec.row_edge_count();
    EdgePartition::from_classes(
        spec.edge_count(),
        vec![(0..split).collect(), (split..spec.edge_count()).collect()],
    )
    .expect("row/rung split covers the edges")
}

/// Closed form of the edge-Wiener index of the hexagon grid.
pub fn closed_formula_we(m: u64, n: u64) -> i128 {
    let (m, n) = (m as i128, n as i128);
    let numerator = 9 * m.pow(3) * n.pow(2)
        + 18 * m.pow(2) * n.pow(3)
        + 6 * m.pow(3) * n
        + 36 * m.pow(2) * n.pow(2)
        + 24 * m * n.pow(3)
        + m.pow(3)
        + 24 * m.pow(2) * n
        + 24 * m * n.pow(2)
        + 8 * n.pow(3)
        + 15 * m * n
        - m
        - 2 * n;
    assert_eq!(numerator % 6, 0, "numerator not divisible by 6 at m={m}, n={n}");
    numerator / 6
}

/// Random connected graph: a uniformly random labelled spanning tree shape
/// (random attachment order) plus every other pair independently with
/// probability `p`. Edges are sorted, so output depends only on the seed.
pub fn gen_random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("need at least one vertex".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = vec![false; n * n];
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        present[parent.min(child) * n + parent.max(child)] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u * n + v] && rng.gen_bool(p) {
                present[u * n + v] = true;
            }
        }
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| present[u * n + v])
        .collect();
    Ok(Graph::new(n, edges).expect("generated pairs are simple"))
}

/// Named families with deterministic indexing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// `K_{1,k}`, center 0.
    Star(usize),
    Complete(usize),
    /// `K_{a,b}`, first part `0..a`.
    CompleteBipartite(usize, usize),
}

impl Family {
    /// Parses `path 5`, `cycle 6`, `star 3`, `complete 4`, `bipartite 2 3`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        match name {
            "path" => arity(1).map(|_| Family::Path(params[0])),
            "cycle" => arity(1).map(|_| Family::Cycle(params[0])),
            "star" => arity(1).map(|_| Family::Star(params[0])),
            "complete" => arity(1).map(|_| Family::Complete(params[0])),
            "bipartite" | "complete_bipartite" => {
                arity(2).map(|_| Family::CompleteBipartite(params[0], params[1]))
            }
            other => Err(Error::BadParams(format!("unknown family {other:?}"))),
        }
    }
}

pub fn gen_named(family: Family) -> Result<Graph> {
    let (n, edges): (usize, Vec<Edge>) = match family {
        Family::Path(n) if n >= 1 => (n, (1..n).map(|i| (i - 1, i)).collect()),
        Family::Cycle(n) if n >= 3 => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
        Family::Star(k) if k >= 1 => (k + 1, (1..=k).map(|i| (0, i)).collect()),
        Family::Complete(n) if n >= 1 => (n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()),
        Family::CompleteBipartite(a, b) if a >= 1 && b >= 1 => {
            (a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect())
        }
        other => return Err(Error::BadParams(format!("{other:?} is too small"))),
    };
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(GridHexSpec::new(0, 1), Err(Error::BadSpec { m: 0, n: 1 }));
        assert_eq!(GridHexSpec::new(2, 0), Err(Error::BadSpec { m: 2, n: 0 }));
    }

    #[test]
    fn g11_is_a_hexagon() {
        let g = gen_gmn(&GridHexSpec::new(1, 1).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn small_counts() {
        let g = gen_gmn(&GridHexSpec::new(2, 1).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 10));
        let g = gen_gmn(&GridHexSpec::new(1, 2).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 11));
    }

    #[test]
    fn count_formulas_hold() {
        for m in 1..=8 {
            for n in 1..=8 {
                let spec = GridHexSpec::new(m, n).unwrap();
                let g = gen_gmn(&spec);
                assert_eq!(g.vertex_count(), (m + 1) * (2 * n + 1));
                assert_eq!(g.edge_count(), 3 * m * n + m + 2 * n);
            }
        }
    }

    #[test]
    fn closed_formula_values() {
        assert_eq!(closed_formula_we(1, 1), 27);
        assert_eq!(closed_formula_we(2, 1), 95);
        assert_eq!(closed_formula_we(1, 2), 127);
    }

    #[test]
    fn random_graphs() {
        let g = gen_random_connected(1, 0.5, 7).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let t = gen_random_connected(5, 0.0, 7).unwrap();
        assert_eq!(t.edge_count(), 4);
        assert!(t.is_connected());
        let k = gen_random_connected(8, 1.0, 7).unwrap();
        assert_eq!(k.edge_count(), 28);
        assert_eq!(gen_random_connected(9, 0.3, 42), gen_random_connected(9, 0.3, 42));
        assert!(gen_random_connected(0, 0.5, 1).is_err());
        assert!(gen_random_connected(3, 1.5, 1).is_err());
    }

    #[test]
    fn named_families() {
        let c6 = gen_named(Family::Cycle(6)).unwrap();
        assert_eq!(c6.edge_count(), 6);
        let star = gen_named(Family::Star(3)).unwrap();
        assert_eq!(star.edges(), &[(0, 1), (0, 2), (0, 3)]);
        let k23 = gen_named(Family::CompleteBipartite(2, 3)).unwrap();
        assert_eq!((k23.vertex_count(), k23.edge_count()), (5, 6));
        assert!(gen_named(Family::Cycle(2)).is_err());
        assert_eq!(Family::parse("bipartite", &[2, 3]), Ok(Family::CompleteBipartite(2, 3)));
        assert!(Family::parse("cycle", &[]).is_err());
        assert!(Family::parse("wheel", &[5]).is_err());
    }
}
