//! Criterion benchmarks for parcat-core live in `benches/`.
