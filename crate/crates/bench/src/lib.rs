//! Support crate for the `algebra` criterion benchmarks in `benches/`.
