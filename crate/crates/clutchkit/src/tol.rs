//! Default tolerances.
//!
//! Two classes cover almost everything: `SHALLOW` for identities built from
//! at most a handful of arithmetic compositions, `DEEP` for long chains
//! (chart round-trips through inverse trig/normalization, homotopy sweeps).
//! Both are runtime-overridable through the suite configuration. The
//! remaining constants are pinned where a check is genuinely exact in f64
//! up to rounding.

/// Identities with few compositions: products, conjugations, single maps.
pub const SHALLOW: f64 = 1e-9;

/// Deep chains: chart round-trips, near-boundary cancellation.
pub const DEEP: f64 = 1e-6;

/// Plain arithmetic identities (associativity, norm multiplicativity).
pub const TIGHT: f64 = 1e-12;

/// Unit-norm defect of freshly sampled sphere points.
pub const UNIT_SAMPLE: f64 = 1e-15;

/// Drift allowed for the identity group element acting on a point.
pub const IDENTITY_DRIFT: f64 = 1e-15;

/// Floor under which a homotopy interpolant counts as degenerate.
pub const HOMOTOPY_FLOOR: f64 = 1e-6;

/// Required minimum of the un-normalized homotopy interpolant norm.
pub const HOMOTOPY_MIN_NORM: f64 = 0.5;
