//! Criterion benchmarks for the `tamari` crate live in `benches/`.
