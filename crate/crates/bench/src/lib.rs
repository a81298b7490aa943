//! Criterion benchmarks for the tensor pipeline; see `benches/`.
