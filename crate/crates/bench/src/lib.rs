//! Benchmark-only crate; see `benches/routes.rs`. The interesting comparison
//! is closed form vs dynamic programming vs exhaustive enumeration for the
//! same quantity.
