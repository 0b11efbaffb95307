//! Benchmarks for the `qborel` kernels; see `benches/`.
