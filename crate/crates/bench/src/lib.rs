//! Criterion benchmarks for the striclcs solvers; see `benches/`.
