//! Criterion benchmarks for the numeric and combinatorial kernels live in `benches/`.
