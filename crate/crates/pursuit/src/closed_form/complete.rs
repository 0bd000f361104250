//! Complete graphs `K_v`.
//!
//! On `K_v` the players are always at distance one, so each move survives
//! independently: the robber avoids the cop with probability `(v-2)/(v-1)`,
//! and the cop's move is survivable only on her random branch.

use crate::chain::TimeUnit;
use crate::prob::Prob;

/// Probability the robber is still free after `m` moves, robber moving first.
///
/// `theta^floor(m/2) * ((v-2)/(v-1))^m`, with `0^0 = 1`.
pub fn survival<P: Prob>(v: usize, theta: &P, m: u32) -> P {
    assert!(v >= 2, "complete graph needs v >= 2");
    let escape = P::ratio((v - 2) as u32, (v - 1) as u32);
    theta.powu(m / 2) * &escape.powu(m)
}

/// Expected capture time from any live start.
///
/// Moves: `(2v-3)(v-1) / ((v-1)^2 - theta (v-2)^2)`.
/// Rounds: `(v-1)^2 / ((v-1)^2 - theta (v-2)^2)` (capture per round is a
/// Bernoulli trial, so the expectation is the reciprocal of its success
/// probability).
pub fn expected<P: Prob>(v: usize, theta: &P, unit: TimeUnit) -> P {
    assert!(v >= 2, "complete graph needs v >= 2");
    let vm1_sq = P::from_usize((v - 1) * (v - 1));
    let vm2_sq = P::from_usize((v - 2) * (v - 2));
    let denom = vm1_sq.clone() - &(theta.clone() * &vm2_sq);
    let num = match unit {
        TimeUnit::Moves => P::from_usize((2 * v - 3) * (v - 1)),
        TimeUnit::Rounds => vm1_sq,
    };
    num / &denom
}
