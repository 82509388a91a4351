//! Benchmark-only crate; see `benches/main.rs` for the criterion targets.
