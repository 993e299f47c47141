//! The Djoković–Winkler relation Θ, its transitive closure Θ*, and edge
//! partitions coarser than the Θ*-partition ("c-partitions").

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Edge, Graph};

/// A partition of the edge set into nonempty classes.
///
/// Classes are stored sorted, and ordered by their smallest edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl EdgePartition {
    pub fn from_classes(edge_count: usize, mut classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut class_of = vec![usize::MAX; edge_count];
        for class in &mut classes {
            if class.is_empty() {
                return Err(Error::NotAPartition("empty class".into()));
            }
            class.sort_unstable();
        }
        classes.sort_unstable_by_key(|c| c[0]);
        for (i, class) in classes.iter().enumerate() {
            for &e in class {
                if e >= edge_count {
                    return Err(Error::NotAPartition(format!(
                        "edge {e} out of range (graph has {edge_count} edges)"
                    )));
                }
                if class_of[e] != usize::MAX {
                    return Err(Error::NotAPartition(format!("edge {e} appears twice")));
                }
                class_of[e] = i;
            }
        }
        if let Some(e) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::NotAPartition(format!("edge {e} is not covered")));
        }
        Ok(Self { class_of, classes })
    }

    /// The partition with one class holding every edge.
    pub fn single_class(edge_count: usize) -> Self {
        if edge_count == 0 {
            return Self {
                class_of: Vec::new(),
                classes: Vec::new(),
            };
        }
        Self {
            class_of: vec![0; edge_count],
            classes: vec![(0..edge_count).collect()],
        }
    }

    pub fn edge_count(&self) -> usize {
        self.class_of.len()
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.class_of[e]
    }

    pub fn same_class(&self, e: usize, f: usize) -> bool {
        self.class_of[e] == self.class_of[f]
    }

    /// True when every class of `self` lies inside one class of `other`.
    pub fn refines(&self, other: &EdgePartition) -> bool {
        self.edge_count() == other.edge_count()
            && self
                .classes
                .iter()
                .all(|c| c.iter().all(|&e| other.same_class(e, c[0])))
    }
}

/// `xy Θ ab` iff `d(x,a) + d(y,b) != d(x,b) + d(y,a)`.
pub fn theta_related(dm: &DistanceMatrix, (x, y): Edge, (a, b): Edge) -> bool {
    dm.d(x, a) + dm.d(y, b) != dm.d(x, b) + dm.d(y, a)
}

/// All Θ-related pairs `(e, f)` with `e < f`, in lexicographic order.
pub fn theta_pairs(graph: &Graph, dm: &DistanceMatrix) -> Vec<(usize, usize)> {
    let edges = graph.edges();
    (0..edges.len())
        .into_par_iter()
        .flat_map_iter(|e| {
            (e + 1..edges.len())
                .filter(move |&f| theta_related(dm, edges[e], edges[f]))
                .map(move |f| (e, f))
        })
        .collect()
}

pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Θ*-classes: connected components of the Θ relation over the edges.
pub fn theta_star_partition(graph: &Graph, dm: &DistanceMatrix) -> EdgePartition {
    let m = graph.edge_count();
    let mut sets = DisjointSet::new(m);
    for (e, f) in theta_pairs(graph, dm) {
        sets.union(e, f);
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); m];
    for e in 0..m {
        let r = sets.find(e);
        by_root[r].push(e);
    }
    let classes = by_root.into_iter().filter(|c| !c.is_empty()).collect();
    EdgePartition::from_classes(m, classes).expect("union-find classes partition the edges")
}

/// Returns `Ok(())` when `partition` is a c-partition, otherwise a
/// [`Error::NotCoarser`] naming a Θ-related pair that it separates.
pub fn check_c_partition(graph: &Graph, dm: &DistanceMatrix, partition: &EdgePartition) -> Result<()> {
    if partition.edge_count() != graph.edge_count() {
        return Err(Error::NotAPartition(format!(
            "partition covers {} edges, graph has {}",
            partition.edge_count(),
            graph.edge_count()
        )));
    }
    // Θ* is the closure of Θ, so it suffices that no Θ pair is split.
    let edges = graph.edges();
    let witness = (0..edges.len()).into_par_iter().find_first(|&e| {
        (e + 1..edges.len())
            .any(|f| !partition.same_class(e, f) && theta_related(dm, edges[e], edges[f]))
    });
    match witness {
        None => Ok(()),
        Some(e) => {
            let f = (e + 1..edges.len())
                .find(|&f| !partition.same_class(e, f) && theta_related(dm, edges[e], edges[f]))
                .expect("witness pair exists");
            Err(Error::NotCoarser { e, f })
        }
    }
}

pub fn is_c_partition(graph: &Graph, dm: &DistanceMatrix, partition: &EdgePartition) -> Result<bool> {
    match check_c_partition(graph, dm, partition) {
        Ok(()) => Ok(true),
        Err(Error::NotCoarser { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Unions the classes named in each group. `groups` must partition the class
/// indices of `partition`.
pub fn merge_classes(partition: &EdgePartition, groups: &[Vec<usize>]) -> Result<EdgePartition> {
    let mut seen = vec![false; partition.len()];
    for group in groups {
        if group.is_empty() {
            return Err(Error::BadGroup("empty group".into()));
        }
        for &c in group {
            if c >= partition.len() {
                return Err(Error::BadGroup(format!(
                    "class {c} out of range ({} classes)",
                    partition.len()
                )));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::BadGroup(format!("class {c} appears in two groups")));
            }
        }
    }
    if let Some(c) = seen.iter().position(|&s| !s) {
        return Err(Error::BadGroup(format!("class {c} is not in any group")));
    }
    let merged = groups
        .iter()
        .map(|g| g.iter().flat_map(|&c| partition.class(c).iter().copied()).collect())
        .collect();
    EdgePartition::from_classes(partition.edge_count(), merged)
}
