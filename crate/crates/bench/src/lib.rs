//! Benchmarks for the exchange perturbation theory kernels live in `benches/`.
