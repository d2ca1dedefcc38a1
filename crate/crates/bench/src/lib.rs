//! Benchmarks for `ultra-lpa-core`; see `benches/engine.rs`.
