//! Benchmarks for the edgering engine live under `benches/`.
