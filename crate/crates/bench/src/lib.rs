//! Criterion benchmarks for cutwiener-core; see `benches/`.
