//! Criterion benchmarks for `sperner-core` live in `benches/`.
