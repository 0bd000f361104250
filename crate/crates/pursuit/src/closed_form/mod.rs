//! Closed formulas, recursions, generating functions and matrix forms for
//! the game on named graph families.
//!
//! Everything here is computed independently of the [`crate::chain`] engine
//! so the two can be cross-validated. Units are part of every contract: the
//! per-move and per-round quantities are different objects and are never
//! silently converted.

use thiserror::Error;

pub mod bipartite;
pub mod complete;
pub mod cycle;
pub mod friendship;

#[derive(Debug, Error)]
pub enum ClosedFormError {
    #[error(
        "position {position} is infeasible on K_{{{v},{w}}}: it needs two distinct vertices in a part of size 1"
    )]
    InfeasiblePosition { position: u8, v: usize, w: usize },
    #[error(
        "the round recursion applies to cycles with v >= 10 (got v = {v}); use the turn recursion for small cycles"
    )]
    OutOfRegime { v: usize },
    #[error("start distance {distance} out of range 1..={max}")]
    DistanceOutOfRange { distance: usize, max: usize },
    #[error("start position on the 5-cycle must be 1 or 2, got {position}")]
    BadC5Position { position: u8 },
}
