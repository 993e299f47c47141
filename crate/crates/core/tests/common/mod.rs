//! Brute-force reference implementations. Nothing here calls into the
//! library's distance, index, theta or quotient code; it works on raw edge
//! lists only.

#![allow(dead_code)]

use cutwiener_core::{gen_random_connected, EdgePartition, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Floyd–Warshall hop distances; `None` for unreachable pairs.
pub fn floyd(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<Option<u64>>> {
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(x, y) in edges {
        d[x][y] = Some(1);
        d[y][x] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub fn full(d: &[Vec<Option<u64>>]) -> Vec<Vec<i128>> {
    d.iter()
        .map(|r| r.iter().map(|x| x.expect("connected") as i128).collect())
        .collect()
}

pub fn line_edges(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (x, y) = edges[i];
            let (a, b) = edges[j];
            if x == a || x == b || y == a || y == b {
                out.push((i, j));
            }
        }
    }
    out
}

fn d1(d: &[Vec<i128>], (x, y): (usize, usize), (a, b): (usize, usize)) -> i128 {
    d[x][a].min(d[x][b]).min(d[y][a]).min(d[y][b])
}

/// Half of the ordered double sum.
pub fn wiener(n: usize, edges: &[(usize, usize)], w: &[i128]) -> i128 {
    let d = full(&floyd(n, edges));
    let mut s = 0;
    for u in 0..n {
        for v in 0..n {
            s += w[u] * w[v] * d[u][v];
        }
    }
    assert_eq!(s % 2, 0);
    s / 2
}

pub fn edge_wiener_hat(n: usize, edges: &[(usize, usize)], w: &[i128]) -> i128 {
    let d = full(&floyd(n, edges));
    let mut s = 0;
    for (i, &e) in edges.iter().enumerate() {
        for (j, &f) in edges.iter().enumerate() {
            s += w[i] * w[j] * d1(&d, e, f);
        }
    }
    assert_eq!(s % 2, 0);
    s / 2
}

/// Through the line graph.
pub fn edge_wiener(n: usize, edges: &[(usize, usize)], w: &[i128]) -> i128 {
    let _ = n;
    wiener(edges.len(), &line_edges(edges), w)
}

pub fn vertex_edge_wiener(n: usize, edges: &[(usize, usize)], w: &[i128], we: &[i128]) -> i128 {
    let d = full(&floyd(n, edges));
    let mut s = 0;
    for v in 0..n {
        for (k, &(x, y)) in edges.iter().enumerate() {
            s += w[v] * we[k] * d[v][x].min(d[v][y]);
        }
    }
    s
}

/// Θ by the definition, then transitive closure by Warshall; classes sorted
/// by smallest edge.
pub fn theta_star_classes(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let d = full(&floyd(n, edges));
    let m = edges.len();
    let mut rel = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            let (x, y) = edges[i];
            let (a, b) = edges[j];
            rel[i][j] = d[x][a] + d[y][b] != d[x][b] + d[y][a];
        }
    }
    for k in 0..m {
        for i in 0..m {
            if rel[i][k] {
                let via = rel[k].clone();
                for (r, &x) in rel[i].iter_mut().zip(&via) {
                    *r |= x;
                }
            }
        }
    }
    let mut seen = vec![false; m];
    let mut classes = Vec::new();
    for i in 0..m {
        if !seen[i] {
            let class: Vec<usize> = (0..m).filter(|&j| rel[i][j]).collect();
            for &j in &class {
                seen[j] = true;
            }
            classes.push(class);
        }
    }
    classes
}

/// The seeded sweep graphs: `count` connected graphs on 4..=12 vertices.
pub fn sweep_graphs(count: u64) -> Vec<Graph> {
    (0..count)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE ^ seed);
            let n = rng.gen_range(4..=12);
            let p = rng.gen_range(0.05..0.6);
            gen_random_connected(n, p, seed).unwrap()
        })
        .collect()
}

/// Random grouping of the classes of `p` into a coarser partition.
pub fn random_coarsening(p: &EdgePartition, seed: u64) -> EdgePartition {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = rng.gen_range(1..=p.len());
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); groups];
    for c in p.classes() {
        classes[rng.gen_range(0..groups)].extend(c);
    }
    classes.retain(|c| !c.is_empty());
    EdgePartition::from_classes(p.edge_count(), classes).unwrap()
}

pub fn random_weights(len: usize, max: i128, rng: &mut impl Rng) -> Vec<i128> {
    (0..len).map(|_| rng.gen_range(0..=max)).collect()
}

/// Adds a twin of vertex `v`: a new vertex with the same open neighborhood.
pub fn with_twin(g: &Graph, v: usize) -> Graph {
    let new = g.vertex_count();
    let mut edges = g.edges().to_vec();
    let mut nbrs: Vec<usize> = g.neighbors(v).collect();
    nbrs.sort_unstable();
    edges.extend(nbrs.into_iter().map(|u| (u, new)));
    Graph::new(new + 1, edges).unwrap()
}
