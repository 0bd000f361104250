//! Analysis engine for the tipsy-cop / drunken-robber pursuit game on finite
//! connected graphs.
//!
//! The robber performs a uniform random walk; the cop mixes a uniform random
//! move (probability theta, her "tipsiness") with a strategic move toward the
//! robber (probability 1 - theta). Either player stepping onto the other's
//! vertex ends the game.
//!
//! The crate computes survival probabilities and expected capture times three
//! independent ways and cross-validates them:
//!
//! * [`chain`] — the exact absorbing Markov chain over game states, the
//!   ground truth;
//! * [`closed_form`] — closed formulas, recursions, generating functions and
//!   matrix forms for complete, complete bipartite, cycle and friendship
//!   graphs;
//! * [`monte_carlo`] — reproducible stochastic simulation.
//!
//! Everything numeric is generic over [`prob::Prob`], so any computation can
//! be run in exact rational arithmetic as well as in `f64`.

pub mod chain;
pub mod closed_form;
pub mod graph;
pub mod monte_carlo;
pub mod prob;

pub use chain::{
    ChainError, ClassMassCurve, ExpectedCapture, GameState, Mover, SurvivalCurve, TimeUnit,
    Tipsiness, TransitionSystem,
};
pub use graph::{parse_edge_list, DistanceTable, Graph, GraphError, GraphFamily};
pub use prob::Prob;
