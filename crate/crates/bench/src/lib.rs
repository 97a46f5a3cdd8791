//! Criterion benchmarks for the search and group engines live in `benches/`.
