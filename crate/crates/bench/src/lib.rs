//! Shared helpers for the criterion benches; see `benches/`.

/// Dimension bounds the search benches sweep over.
pub const SEARCH_BOUNDS: [u64; 3] = [1 << 12, 1 << 14, 1 << 17];
