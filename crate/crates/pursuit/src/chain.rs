//! Exact absorbing Markov chain of the pursuit game.
//!
//! A game state is `(cop, robber, mover)` with `cop != robber`; capture is
//! absorption. The robber moves to a uniformly random neighbor. The cop moves
//! to a uniformly random neighbor with probability theta, and otherwise to a
//! uniformly random element of her *strategic set* (the neighbors minimizing
//! hop distance to the robber; ties are uniform). Every transition flips the
//! mover.
//!
//! The chain is the ground truth the closed formulas are validated against:
//! survival curves are push-forward mass iterations, expected capture times
//! come from a linear solve over the transient states and are cross-checked
//! against the truncated survival series with a rigorous geometric tail
//! bound.

use crate::graph::{DistanceTable, Graph};
use crate::prob::Prob;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ChainError {
    #[error("tipsiness must lie in [0, 1], got {value}")]
    InvalidTipsiness { value: f64 },
    #[error("start state is not live: cop and robber both at vertex {vertex}")]
    StartNotLive { vertex: usize },
    #[error("start mover {start:?} does not match the chain's first mover {first:?}")]
    MoverMismatch { start: Mover, first: Mover },
    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("chain does not absorb: residual survival {residual:.3e} after {ticks} steps")]
    NonAbsorbing { residual: f64, ticks: usize },
    #[error("linear solve disagrees with survival series: |{solve} - {series}| > tail bound {bound}")]
    SolveSeriesMismatch { solve: f64, series: f64, bound: f64 },
    #[error("start distribution must sum to 1, got {sum}")]
    BadStartDistribution { sum: f64 },
    #[error("duplicate start state in distribution")]
    DuplicateStartState,
    #[error("classifier is not total: live state (cop={cop}, robber={robber}) unclassified")]
    ClassifierNotTotal { cop: usize, robber: usize },
    #[error("transient system too large for the dense solve: {states} states (limit {limit})")]
    TooLargeForSolve { states: usize, limit: usize },
}

/// Whose turn it is to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mover {
    Robber,
    Cop,
}

impl Mover {
    pub fn flipped(self) -> Mover {
        match self {
            Mover::Robber => Mover::Cop,
            Mover::Cop => Mover::Robber,
        }
    }
}

/// Live configuration of the game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cop: usize,
    pub robber: usize,
    pub mover: Mover,
}

/// Proportion of cop moves that are random, in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tipsiness(f64);

impl Tipsiness {
    pub fn new(theta: f64) -> Result<Self, ChainError> {
        if !(0.0..=1.0).contains(&theta) {
            return Err(ChainError::InvalidTipsiness { value: theta });
        }
        Ok(Tipsiness(theta))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Whether a time index counts single moves or full rounds (two moves).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TimeUnit {
    Moves,
    Rounds,
}

impl TimeUnit {
    fn moves_per_tick(self) -> usize {
        match self {
            TimeUnit::Moves => 1,
            TimeUnit::Rounds => 2,
        }
    }
}

/// Survival probabilities `P_0..P_M` in the given unit.
#[derive(Debug, Clone, PartialEq)]
pub struct SurvivalCurve<P> {
    pub unit: TimeUnit,
    pub values: Vec<P>,
}

/// Expected capture time from the transient linear solve, together with the
/// truncated-series cross-check.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedCapture<P> {
    pub value: P,
    pub unit: TimeUnit,
    /// Truncated series `sum_{t=0}^{horizon} P_t`.
    pub series: P,
    /// Rigorous geometric bound on the series tail beyond `horizon`.
    pub tail_bound: P,
    pub horizon: usize,
}

/// Unabsorbed probability mass per position class over time.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMassCurve<P> {
    /// Sorted class ids.
    pub class_ids: Vec<u32>,
    /// `masses[m][j]` is the mass in class `class_ids[j]` after `m` moves.
    pub masses: Vec<Vec<P>>,
}

impl<P: Prob> ClassMassCurve<P> {
    /// Total live mass per step (the survival curve of the start distribution).
    pub fn survival(&self) -> Vec<P> {
        self.masses
            .iter()
            .map(|row| row.iter().fold(P::zero(), |acc, x| acc + x))
            .collect()
    }
}

const MAX_DENSE_SOLVE_STATES: usize = 4096;

/// The indexed transient states of a game with sparse transition rows and
/// per-state absorption mass.
#[derive(Debug, Clone)]
pub struct TransitionSystem<P> {
    vertex_count: usize,
    theta: P,
    first_mover: Mover,
    states: Vec<GameState>,
    lookup: Vec<usize>, // dense (cop, robber, mover) -> index + 1; 0 = dead slot
    rows: Vec<Vec<(usize, P)>>,
    absorb: Vec<P>,
}

impl<P: Prob> TransitionSystem<P> {
    /// Builds the chain for a graph and tipsiness.
    ///
    /// All live states of both parities are materialized; `first_mover` is
    /// recorded and enforced on query starts.
    pub fn build(graph: &Graph, theta: P, first_mover: Mover) -> Result<Self, ChainError> {
        if theta < P::zero() || theta > P::one() {
            return Err(ChainError::InvalidTipsiness {
                value: theta.to_f64(),
            });
        }
        let dist = graph.distances();
        Self::build_with_distances(graph, &dist, theta, first_mover)
    }

    pub fn build_with_distances(
        graph: &Graph,
        dist: &DistanceTable,
        theta: P,
        first_mover: Mover,
    ) -> Result<Self, ChainError> {
        if theta < P::zero() || theta > P::one() {
            return Err(ChainError::InvalidTipsiness {
                value: theta.to_f64(),
            });
        }
        let n = graph.vertex_count();
        let mut states = Vec::with_capacity(2 * n * (n - 1));
        let mut lookup = vec![0usize; 2 * n * n];
        for cop in 0..n {
            for robber in 0..n {
                if cop == robber {
                    continue;
                }
                for mover in [Mover::Robber, Mover::Cop] {
                    let state = GameState { cop, robber, mover };
                    lookup[slot(n, state)] = states.len() + 1;
                    states.push(state);
                }
            }
        }
        let one_minus_theta = P::one() - &theta;
        let mut rows = Vec::with_capacity(states.len());
        let mut absorb = Vec::with_capacity(states.len());
        for &GameState { cop, robber, mover } in &states {
            let mut row: Vec<(usize, P)> = Vec::new();
            let mut ab = P::zero();
            match mover {
                Mover::Robber => {
                    let nb = graph.neighbors(robber);
                    let p = P::ratio(1, nb.len() as u32);
                    for &x in nb {
                        if x == cop {
                            ab = ab + &p;
                        } else {
                            let j = lookup[slot(
                                n,
                                GameState {
                                    cop,
                                    robber: x,
                                    mover: Mover::Cop,
                                },
                            )] - 1;
                            row.push((j, p.clone()));
                        }
                    }
                }
                Mover::Cop => {
                    let nb = graph.neighbors(cop);
                    let dmin = nb.iter().map(|&x| dist.get(x, robber)).min().unwrap();
                    let strategic = nb.iter().filter(|&&x| dist.get(x, robber) == dmin).count();
                    let p_random = theta.clone() / &P::from_usize(nb.len());
                    let p_strategic = one_minus_theta.clone() / &P::from_usize(strategic);
                    for &x in nb {
                        let p = if dist.get(x, robber) == dmin {
                            p_random.clone() + &p_strategic
                        } else {
                            p_random.clone()
                        };
                        if x == robber {
                            ab = ab + &p;
                        } else {
                            let j = lookup[slot(
                                n,
                                GameState {
                                    cop: x,
                                    robber,
                                    mover: Mover::Robber,
                                },
                            )] - 1;
                            row.push((j, p));
                        }
                    }
                }
            }
            rows.push(row);
            absorb.push(ab);
        }
        Ok(TransitionSystem {
            vertex_count: n,
            theta,
            first_mover,
            states,
            lookup,
            rows,
            absorb,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn theta(&self) -> &P {
        &self.theta
    }

    pub fn first_mover(&self) -> Mover {
        self.first_mover
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[GameState] {
        &self.states
    }

    pub fn index_of(&self, state: GameState) -> Option<usize> {
        if state.cop >= self.vertex_count || state.robber >= self.vertex_count {
            return None;
        }
        match self.lookup[slot(self.vertex_count, state)] {
            0 => None,
            i => Some(i - 1),
        }
    }

    pub fn transitions(&self, index: usize) -> &[(usize, P)] {
        &self.rows[index]
    }

    pub fn absorption(&self, index: usize) -> &P {
        &self.absorb[index]
    }

    /// Largest deviation of `absorption + sum(transitions)` from 1 over all
    /// states (zero in rational mode).
    pub fn max_row_defect(&self) -> f64 {
        (0..self.states.len())
            .map(|i| {
                let sum = self.rows[i]
                    .iter()
                    .fold(self.absorb[i].clone(), |acc, (_, p)| acc + p);
                (sum - &P::one()).abs().to_f64()
            })
            .fold(0.0, f64::max)
    }

    fn check_start(&self, start: GameState) -> Result<usize, ChainError> {
        let n = self.vertex_count;
        for vertex in [start.cop, start.robber] {
            if vertex >= n {
                return Err(ChainError::VertexOutOfRange { vertex, count: n });
            }
        }
        if start.cop == start.robber {
            return Err(ChainError::StartNotLive { vertex: start.cop });
        }
        if start.mover != self.first_mover {
            return Err(ChainError::MoverMismatch {
                start: start.mover,
                first: self.first_mover,
            });
        }
        Ok(self.index_of(start).unwrap())
    }

    /// Applies one move to a mass vector.
    fn push_forward(&self, mass: &[P], out: &mut [P]) {
        for x in out.iter_mut() {
            *x = P::zero();
        }
        for (i, m) in mass.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (j, p) in &self.rows[i] {
                out[*j] = out[*j].clone() + &(m.clone() * p);
            }
        }
    }

    /// Survival probabilities `P_0..P_M` from a point start. For
    /// `TimeUnit::Rounds`, index `n` is the survival after `2n` moves.
    pub fn survival_curve(
        &self,
        start: GameState,
        horizon: usize,
        unit: TimeUnit,
    ) -> Result<SurvivalCurve<P>, ChainError> {
        let start_idx = self.check_start(start)?;
        let mut mass = vec![P::zero(); self.states.len()];
        mass[start_idx] = P::one();
        let mut scratch = vec![P::zero(); self.states.len()];
        let mut values = Vec::with_capacity(horizon + 1);
        values.push(P::one());
        let per_tick = unit.moves_per_tick();
        for _ in 0..horizon {
            for _ in 0..per_tick {
                self.push_forward(&mass, &mut scratch);
                std::mem::swap(&mut mass, &mut scratch);
            }
            values.push(mass.iter().fold(P::zero(), |acc, x| acc + x));
        }
        Ok(SurvivalCurve { unit, values })
    }

    /// Expected capture time from `start`, in the requested unit.
    ///
    /// The value is the linear solve of `(I - Q) t = 1` over the transient
    /// states reachable from `start` (for rounds, over the two-move chain).
    /// The truncated survival series and its geometric tail bound are
    /// computed alongside and the solve is required to agree with the series
    /// within the bound.
    pub fn expected_capture(
        &self,
        start: GameState,
        unit: TimeUnit,
    ) -> Result<ExpectedCapture<P>, ChainError> {
        let start_idx = self.check_start(start)?;

        // restrict to states reachable from the start
        let mut reach_flag = vec![false; self.states.len()];
        let mut order = vec![start_idx];
        reach_flag[start_idx] = true;
        let mut head = 0;
        while head < order.len() {
            let i = order[head];
            head += 1;
            for (j, _) in &self.rows[i] {
                if !reach_flag[*j] {
                    reach_flag[*j] = true;
                    order.push(*j);
                }
            }
        }
        order.sort_unstable();
        let mut pos = vec![usize::MAX; self.states.len()];
        for (a, &i) in order.iter().enumerate() {
            pos[i] = a;
        }
        let r = order.len();
        let rows: Vec<Vec<(usize, P)>> = order
            .iter()
            .map(|&i| {
                self.rows[i]
                    .iter()
                    .map(|(j, p)| (pos[*j], p.clone()))
                    .collect()
            })
            .collect();
        let apply_tick = |mass: &mut Vec<P>, scratch: &mut Vec<P>| {
            for _ in 0..unit.moves_per_tick() {
                for x in scratch.iter_mut() {
                    *x = P::zero();
                }
                for (i, m) in mass.iter().enumerate() {
                    if m.is_zero() {
                        continue;
                    }
                    for (j, p) in &rows[i] {
                        scratch[*j] = scratch[*j].clone() + &(m.clone() * p);
                    }
                }
                std::mem::swap(mass, scratch);
            }
        };

        // block contraction factor: iterate the all-ones vector until the
        // max entry drops to 1/2, proving ||T^H||_inf <= 1/2
        let half = P::ratio(1, 2);
        let mut u = vec![P::one(); r];
        let mut scratch = vec![P::zero(); r];
        let cap = 8 * r + 64;
        let mut block_len = 0usize;
        loop {
            apply_tick(&mut u, &mut scratch);
            block_len += 1;
            let rho = u
                .iter()
                .fold(P::zero(), |acc, x| if *x > acc { x.clone() } else { acc });
            if rho <= half {
                break;
            }
            if block_len >= cap {
                return Err(ChainError::NonAbsorbing {
                    residual: rho.to_f64(),
                    ticks: block_len,
                });
            }
        }

        // truncated series with tail bound H * P_t / (1 - rho) <= 2 H P_t
        let tol = P::ratio(1, 1_000_000) * &P::ratio(1, 1_000_000); // 1e-12
        let two_h = P::from_usize(2 * block_len);
        let mut mass = vec![P::zero(); r];
        mass[pos[start_idx]] = P::one();
        let mut series = P::one();
        let mut survival = P::one();
        let mut horizon = 0usize;
        let hard_cap = 80 * block_len + 80;
        loop {
            let tail_bound = two_h.clone() * &survival;
            if tail_bound <= tol || horizon >= hard_cap {
                let solve = solve_expected(&rows, r, pos[start_idx], unit)?;
                let diff = (solve.clone() - &series).abs();
                let allowed = tail_bound.clone()
                    + &(P::identity_slack() * &(P::one() + &solve.abs()));
                if diff > allowed {
                    return Err(ChainError::SolveSeriesMismatch {
                        solve: solve.to_f64(),
                        series: series.to_f64(),
                        bound: tail_bound.to_f64(),
                    });
                }
                return Ok(ExpectedCapture {
                    value: solve,
                    unit,
                    series,
                    tail_bound,
                    horizon,
                });
            }
            apply_tick(&mut mass, &mut scratch);
            survival = mass.iter().fold(P::zero(), |acc, x| acc + x);
            series = series + &survival;
            horizon += 1;
        }
    }

    /// Per-class unabsorbed mass over `0..=horizon` moves.
    ///
    /// Every start state must be live with the chain's first mover; the
    /// classifier must assign a class to every live state.
    pub fn class_mass_curve(
        &self,
        start: &[(GameState, P)],
        classify: &dyn Fn(GameState) -> Option<u32>,
        horizon: usize,
    ) -> Result<ClassMassCurve<P>, ChainError> {
        let mut mass = vec![P::zero(); self.states.len()];
        let mut sum = P::zero();
        for (state, p) in start {
            let idx = self.check_start(*state)?;
            if !mass[idx].is_zero() {
                return Err(ChainError::DuplicateStartState);
            }
            mass[idx] = p.clone();
            sum = sum + p;
        }
        if (sum - &P::one()).abs() > P::identity_slack() {
            let total: f64 = start.iter().map(|(_, p)| p.to_f64()).sum();
            return Err(ChainError::BadStartDistribution { sum: total });
        }
        let mut class_of = vec![0u32; self.states.len()];
        let mut class_ids = Vec::new();
        for (i, &state) in self.states.iter().enumerate() {
            match classify(state) {
                Some(c) => {
                    class_of[i] = c;
                    if !class_ids.contains(&c) {
                        class_ids.push(c);
                    }
                }
                None => {
                    return Err(ChainError::ClassifierNotTotal {
                        cop: state.cop,
                        robber: state.robber,
                    })
                }
            }
        }
        class_ids.sort_unstable();
        let col: Vec<usize> = class_of
            .iter()
            .map(|c| class_ids.iter().position(|x| x == c).unwrap())
            .collect();
        let mut scratch = vec![P::zero(); self.states.len()];
        let mut masses = Vec::with_capacity(horizon + 1);
        for step in 0..=horizon {
            if step > 0 {
                self.push_forward(&mass, &mut scratch);
                std::mem::swap(&mut mass, &mut scratch);
            }
            let mut row = vec![P::zero(); class_ids.len()];
            for (i, m) in mass.iter().enumerate() {
                if !m.is_zero() {
                    row[col[i]] = row[col[i]].clone() + m;
                }
            }
            masses.push(row);
        }
        Ok(ClassMassCurve { class_ids, masses })
    }
}

fn slot(n: usize, state: GameState) -> usize {
    let mv = match state.mover {
        Mover::Robber => 0,
        Mover::Cop => 1,
    };
    (state.cop * n + state.robber) * 2 + mv
}

/// Expected ticks to absorption from `start` on the one-move rows.
///
/// Moves: solves `(I - T) x = 1`. Rounds: `(I - T^2) = (I - T)(I + T)`, so
/// solve `(I - T) z = 1` and then `(I + T) x = z`.
fn solve_expected<P: Prob>(
    rows: &[Vec<(usize, P)>],
    r: usize,
    start: usize,
    unit: TimeUnit,
) -> Result<P, ChainError> {
    if r > MAX_DENSE_SOLVE_STATES {
        return Err(ChainError::TooLargeForSolve {
            states: r,
            limit: MAX_DENSE_SOLVE_STATES,
        });
    }
    let mut t_dense = vec![P::zero(); r * r];
    for (i, row) in rows.iter().enumerate() {
        for (j, p) in row {
            t_dense[i * r + j] = t_dense[i * r + j].clone() + p;
        }
    }
    let ones = vec![P::one(); r];
    let z = solve_dense(&t_dense, r, true, &ones)?;
    let x = match unit {
        TimeUnit::Moves => z,
        TimeUnit::Rounds => solve_dense(&t_dense, r, false, &z)?,
    };
    Ok(x[start].clone())
}

/// Solves `(I -/+ T) x = b` by Gaussian elimination with partial pivoting.
/// `minus` selects `I - T` (true) or `I + T` (false).
fn solve_dense<P: Prob>(
    t_dense: &[P],
    r: usize,
    minus: bool,
    b: &[P],
) -> Result<Vec<P>, ChainError> {
    let mut a = vec![P::zero(); r * r];
    for i in 0..r {
        for j in 0..r {
            let tij = &t_dense[i * r + j];
            a[i * r + j] = if minus {
                P::zero() - tij
            } else {
                tij.clone()
            };
        }
        a[i * r + i] = a[i * r + i].clone() + &P::one();
    }
    let mut x: Vec<P> = b.to_vec();
    for col in 0..r {
        let pivot = (col..r)
            .max_by(|&p, &q| {
                a[p * r + col]
                    .abs()
                    .partial_cmp(&a[q * r + col].abs())
                    .unwrap()
            })
            .unwrap();
        if a[pivot * r + col].is_zero() {
            return Err(ChainError::NonAbsorbing {
                residual: 1.0,
                ticks: 0,
            });
        }
        if pivot != col {
            for j in 0..r {
                a.swap(col * r + j, pivot * r + j);
            }
            x.swap(col, pivot);
        }
        let inv = P::one() / &a[col * r + col];
        for j in col..r {
            a[col * r + j] = a[col * r + j].clone() * &inv;
        }
        x[col] = x[col].clone() * &inv;
        for row in 0..r {
            if row == col || a[row * r + col].is_zero() {
                continue;
            }
            let f = a[row * r + col].clone();
            for j in col..r {
                let sub = f.clone() * &a[col * r + j];
                a[row * r + j] = a[row * r + j].clone() - &sub;
            }
            let sub = f * &x[col];
            x[row] = x[row].clone() - &sub;
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;
    use num_rational::BigRational;

    fn k(v: usize) -> Graph {
        GraphFamily::Complete { v }.generate().unwrap()
    }

    fn cyc(v: usize) -> Graph {
        GraphFamily::Cycle { v }.generate().unwrap()
    }

    #[test]
    fn k2_robber_always_captured() {
        for theta in [0.0, 0.3, 1.0] {
            let ts = TransitionSystem::build(&k(2), theta, Mover::Robber).unwrap();
            let i = ts
                .index_of(GameState { cop: 0, robber: 1, mover: Mover::Robber })
                .unwrap();
            assert_eq!(ts.absorption(i), &1.0);
            assert!(ts.transitions(i).is_empty());
            let e = ts
                .expected_capture(GameState { cop: 0, robber: 1, mover: Mover::Robber }, TimeUnit::Moves)
                .unwrap();
            assert_eq!(e.value, 1.0);
        }
    }

    #[test]
    fn c5_cop_row_at_distance_one() {
        let theta = 0.6;
        let ts = TransitionSystem::build(&cyc(5), theta, Mover::Cop).unwrap();
        let i = ts
            .index_of(GameState { cop: 0, robber: 1, mover: Mover::Cop })
            .unwrap();
        assert!((ts.absorption(i) - (1.0 - theta / 2.0)).abs() < 1e-15);
        let row = ts.transitions(i);
        assert_eq!(row.len(), 1);
        let (j, p) = &row[0];
        assert!((p - theta / 2.0).abs() < 1e-15);
        let succ = ts.states()[*j];
        assert_eq!(succ.mover, Mover::Robber);
        assert_eq!(succ.robber, 1);
        assert_eq!(succ.cop, 4); // distance 2 from the robber
    }

    #[test]
    fn bipartite_same_part_cop_cannot_capture() {
        let g = GraphFamily::CompleteBipartite { v: 3, w: 2 }.generate().unwrap();
        for theta in [0.0, 0.5, 1.0] {
            let ts = TransitionSystem::build(&g, theta, Mover::Cop).unwrap();
            let i = ts
                .index_of(GameState { cop: 0, robber: 1, mover: Mover::Cop })
                .unwrap();
            assert_eq!(ts.absorption(i), &0.0);
        }
    }

    #[test]
    fn k3_drunk_cop_survival() {
        let ts = TransitionSystem::build(&k(3), 1.0, Mover::Robber).unwrap();
        let curve = ts
            .survival_curve(GameState { cop: 0, robber: 1, mover: Mover::Robber }, 2, TimeUnit::Moves)
            .unwrap();
        assert_eq!(curve.values[0], 1.0);
        assert!((curve.values[2] - 0.25).abs() < 1e-15);
    }

    #[test]
    fn c5_strategic_round_survival() {
        let ts = TransitionSystem::build(&cyc(5), 0.0, Mover::Robber).unwrap();
        let curve = ts
            .survival_curve(GameState { cop: 0, robber: 1, mover: Mover::Robber }, 1, TimeUnit::Rounds)
            .unwrap();
        assert!((curve.values[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn k3_expected_times() {
        let ts = TransitionSystem::build(&k(3), 1.0, Mover::Robber).unwrap();
        let start = GameState { cop: 0, robber: 1, mover: Mover::Robber };
        let moves = ts.expected_capture(start, TimeUnit::Moves).unwrap();
        assert!((moves.value - 2.0).abs() < 1e-12);
        let rounds = ts.expected_capture(start, TimeUnit::Rounds).unwrap();
        assert!((rounds.value - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn k3_expected_exact_rational() {
        let one = BigRational::ratio(1, 1);
        let ts = TransitionSystem::build(&k(3), one, Mover::Robber).unwrap();
        let start = GameState { cop: 0, robber: 1, mover: Mover::Robber };
        let moves = ts.expected_capture(start, TimeUnit::Moves).unwrap();
        assert_eq!(moves.value, BigRational::ratio(2, 1));
        let rounds = ts.expected_capture(start, TimeUnit::Rounds).unwrap();
        assert_eq!(rounds.value, BigRational::ratio(4, 3));
        assert_eq!(ts.max_row_defect(), 0.0);
    }

    #[test]
    fn friendship_class_flow_from_cop_center() {
        // uniform start over all (cop at center, robber outer) states;
        // after one cop move, the same-triangle class holds theta/(2k) mass
        let k2 = GraphFamily::Friendship { k: 2 }.generate().unwrap();
        let ts = TransitionSystem::build(&k2, 1.0, Mover::Cop).unwrap();
        let start: Vec<(GameState, f64)> = (1..5)
            .map(|r| (GameState { cop: 0, robber: r, mover: Mover::Cop }, 0.25))
            .collect();
        let classify = |s: GameState| -> Option<u32> {
            Some(if s.robber == 0 {
                3
            } else if s.cop == 0 {
                4
            } else if (s.cop - 1) / 2 == (s.robber - 1) / 2 {
                1
            } else {
                2
            })
        };
        let curve = ts.class_mass_curve(&start, &classify, 1).unwrap();
        assert_eq!(curve.class_ids, vec![1, 2, 3, 4]);
        let m0 = &curve.masses[0];
        assert_eq!(m0[3], 1.0); // all mass in class 4 at time 0
        let m1 = &curve.masses[1];
        assert!((m1[0] - 0.25).abs() < 1e-15); // class 1: theta/(2k) = 1/4
        assert!((m1[1] - 0.5).abs() < 1e-15); // class 2: (2k-2)/(2k)
        assert_eq!(m1[2], 0.0);
        assert_eq!(m1[3], 0.0);
    }

    #[test]
    fn single_class_curve_equals_survival() {
        let ts = TransitionSystem::build(&k(3), 0.5, Mover::Robber).unwrap();
        let start = GameState { cop: 0, robber: 1, mover: Mover::Robber };
        let one_class = |_: GameState| Some(0u32);
        let classes = ts
            .class_mass_curve(&[(start, 1.0)], &one_class, 10)
            .unwrap();
        let curve = ts.survival_curve(start, 10, TimeUnit::Moves).unwrap();
        for (m, p) in curve.values.iter().enumerate() {
            assert!((classes.masses[m][0] - p).abs() < 1e-15);
        }
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let g = k(3);
        assert!(matches!(
            TransitionSystem::build(&g, -0.1, Mover::Robber),
            Err(ChainError::InvalidTipsiness { .. })
        ));
        assert!(matches!(
            TransitionSystem::build(&g, 1.5, Mover::Robber),
            Err(ChainError::InvalidTipsiness { .. })
        ));
        let ts = TransitionSystem::build(&g, 0.5, Mover::Robber).unwrap();
        assert!(matches!(
            ts.survival_curve(GameState { cop: 1, robber: 1, mover: Mover::Robber }, 5, TimeUnit::Moves),
            Err(ChainError::StartNotLive { vertex: 1 })
        ));
        assert!(matches!(
            ts.survival_curve(GameState { cop: 0, robber: 1, mover: Mover::Cop }, 5, TimeUnit::Moves),
            Err(ChainError::MoverMismatch { .. })
        ));
        assert!(matches!(
            ts.survival_curve(GameState { cop: 0, robber: 7, mover: Mover::Robber }, 5, TimeUnit::Moves),
            Err(ChainError::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn non_absorbing_chain_is_detected() {
        // hand-built two-state ping-pong with no absorption mass
        let states = vec![
            GameState { cop: 0, robber: 1, mover: Mover::Robber },
            GameState { cop: 0, robber: 1, mover: Mover::Cop },
        ];
        let mut lookup = vec![0usize; 8];
        lookup[slot(2, states[0])] = 1;
        lookup[slot(2, states[1])] = 2;
        let ts = TransitionSystem {
            vertex_count: 2,
            theta: 0.5f64,
            first_mover: Mover::Robber,
            states,
            lookup,
            rows: vec![vec![(1, 1.0)], vec![(0, 1.0)]],
            absorb: vec![0.0, 0.0],
        };
        assert!(matches!(
            ts.expected_capture(
                GameState { cop: 0, robber: 1, mover: Mover::Robber },
                TimeUnit::Moves
            ),
            Err(ChainError::NonAbsorbing { .. })
        ));
    }

    #[test]
    fn bad_start_distribution_rejected() {
        let ts = TransitionSystem::build(&k(3), 0.5, Mover::Robber).unwrap();
        let s = GameState { cop: 0, robber: 1, mover: Mover::Robber };
        let one_class = |_: GameState| Some(0u32);
        assert!(matches!(
            ts.class_mass_curve(&[(s, 0.7)], &one_class, 2),
            Err(ChainError::BadStartDistribution { .. })
        ));
        assert!(matches!(
            ts.class_mass_curve(&[(s, 0.5), (s, 0.5)], &one_class, 2),
            Err(ChainError::DuplicateStartState)
        ));
        let partial = |st: GameState| (st.cop == 0).then_some(0u32);
        assert!(matches!(
            ts.class_mass_curve(&[(s, 1.0)], &partial, 2),
            Err(ChainError::ClassifierNotTotal { .. })
        ));
    }
}
