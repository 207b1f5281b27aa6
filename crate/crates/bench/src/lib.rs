//! Benchmarks for the concentration lab live under `benches/`.
