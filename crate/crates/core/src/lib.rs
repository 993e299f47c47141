//! Exact Wiener, edge-Wiener and vertex-edge-Wiener indices of weighted
//! connected graphs.
//!
//! The edge indices can be evaluated three ways: directly from all-pairs
//! distances, through the weighted quotient graphs of any edge partition
//! coarser than the Θ*-partition (the cut method), or as the Wiener index of
//! the line graph. Quotients may additionally be shrunk by twin-vertex
//! reduction before their indices are taken.
//!
//! ```
//! use cutwiener_core::{all_pairs_distances, edge_wiener_cut, edge_wiener_oracle,
//!     gen_gmn, theta_star_partition, GridHexSpec};
//!
//! let g = gen_gmn(&GridHexSpec::new(2, 3).unwrap());
//! let dm = all_pairs_distances(&g);
//! let p = theta_star_partition(&g, &dm);
//! assert_eq!(p.len(), 5);
//! assert_eq!(edge_wiener_cut(&g, &dm, &p).unwrap(), edge_wiener_oracle(&g).unwrap());
//! ```

pub mod error;
pub mod generators;
pub mod graph;
pub mod indices;
pub mod io;
pub mod quotient;
pub mod reduction;
pub mod theta;
pub mod weight;

pub use error::{Error, Result};
pub use generators::{
    closed_formula_we, gen_gmn, gen_named, gen_random_connected, gmn_row_rung_partition, Family,
    GridHexSpec,
};
pub use graph::{
    all_pairs_distances, edge_distance_d0, edge_distance_d1, line_graph, validate,
    vertex_edge_distance, DistanceMatrix, Edge, Graph, UNREACHABLE,
};
pub use indices::{
    cut_report, direct_report, distinct_pair_weight, edge_wiener, edge_wiener_cut,
    edge_wiener_cut_weighted, edge_wiener_hat, edge_wiener_hat_cut, edge_wiener_oracle,
    edge_wiener_oracle_weighted, oracle_report, vertex_edge_wiener, wiener, Exactness,
    IndexReport, Method, QuotientTerms,
};
pub use io::{parse_edge_list, parse_partition, write_edge_list, write_partition, WeightedGraph, Weights};
pub use quotient::{
    build_quotient, components_without, edge_distance_via_quotients, CutDecomposition, Quotient,
    QuotientImage, WeightedQuotient,
};
pub use reduction::{
    reduce_fully, reduce_fully_with, reduce_once, twin_classes, Corrections, ReducedGraph,
    ReductionStep, ReductionStepTrace, TwinClasses,
};
pub use theta::{
    check_c_partition, is_c_partition, merge_classes, theta_pairs, theta_related,
    theta_star_partition, EdgePartition,
};
pub use weight::{EdgeWeights, Scalar, VertexWeights};
