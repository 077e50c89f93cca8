//! Criterion benchmarks for `hopfcyc`; see `benches/`.
