//! Criterion benchmarks for the core computations live in `benches/`.
