//! Criterion benchmarks for the geoquest kernels; see `benches/`.
