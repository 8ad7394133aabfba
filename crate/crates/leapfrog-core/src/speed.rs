//! Configuration speed via maximum mean cycles on the quotient graph.
//!
//! The L1 displacement of a translation `a` equals the maximum of
//! `sigma . a` over sign vectors `sigma`, so sweeping an exact
//! maximum-mean-cycle computation over sign vectors yields the fastest
//! closed walk in the bounded quotient graph. The result is a certified
//! lower bound on the configuration speed and, within the stated bounds,
//! the exact bounded-graph optimum.

use crate::bounds::SearchBounds;
use crate::error::Result;
use crate::lattice::{Placement, Point};
use crate::mmc::{howard_max_mean, HowardResult, MeanCycle};
use crate::moves::{apply_move, Move};
use crate::quotient::{build_full, build_reachable, QuotientGraph};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};

/// All sign vectors in `{+1,-1}^n`; with `half`, only those with a leading
/// +1, which suffices for symmetric (reversible-move) graphs.
pub fn sign_vectors(n: usize, half: bool) -> Vec<Vec<i64>> {
    let count = 1usize << (n - if half { 1 } else { 0 });
    (0..count)
        .map(|mask| {
            (0..n)
                .map(|i| {
                    if i == 0 && half {
                        1
                    } else {
                        let bit = if half { i - 1 } else { i };
                        if mask >> bit & 1 == 0 {
                            1
                        } else {
                            -1
                        }
                    }
                })
                .collect()
        })
        .collect()
}

/// A configuration-speed answer with a replayable witness.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpeedResult {
    /// Exact bounded-graph maximum speed: best cycle mean divided by the
    /// piece count. Zero with an empty witness when the seed's component has
    /// no cycle at all.
    pub value: Rational,
    /// The sign vector achieving the maximum.
    pub direction: Vec<i64>,
    /// Canonical placement the witness cycle starts from.
    pub witness_start: Option<Placement>,
    /// Moves of the witness cycle, each in the coordinate frame of the
    /// placement it is applied to, starting at `witness_start`.
    pub witness_moves: Vec<Move>,
    /// Nodes explored in the reachable quotient graph.
    pub nodes_explored: usize,
    /// The same maximum when jumps are restricted to forward-only hop
    /// chains; reported so a stricter reading of the hop rule is visible.
    pub forward_only_value: Option<Rational>,
}

impl SpeedResult {
    /// Replay the witness, returning the placements it visits.
    pub fn replay(&self) -> Result<Vec<Placement>> {
        let Some(start) = &self.witness_start else {
            return Ok(Vec::new());
        };
        let mut placements = vec![start.clone()];
        for m in &self.witness_moves {
            let cur = placements.last().unwrap();
            let next = apply_move(cur, m, None)?;
            placements.push(next);
        }
        Ok(placements)
    }
}

/// Analysis of one quotient graph over every sign vector.
pub struct GraphSpeeds {
    pub graph: QuotientGraph,
    /// Sign vectors paired with converged policy-iteration results.
    pub per_sigma: Vec<(Vec<i64>, HowardResult)>,
}

impl GraphSpeeds {
    /// Best cycle mean over all sign vectors, with the achieving index.
    pub fn global_best(&self) -> Option<(usize, Rational)> {
        let mut best: Option<(usize, Rational)> = None;
        for (i, (_, how)) in self.per_sigma.iter().enumerate() {
            if let Some(m) = how.max_mean() {
                if best.map_or(true, |(_, b)| m > b) {
                    best = Some((i, m));
                }
            }
        }
        best
    }

    /// Exact bounded maximum speed of the configuration at `node`.
    pub fn node_speed(&self, node: usize) -> Rational {
        let mut best = Rational::ZERO;
        for (_, how) in &self.per_sigma {
            if let Some(eta) = how.eta[node] {
                if eta > best {
                    best = eta;
                }
            }
        }
        best * Rational::new(1, self.graph.p as i128)
    }

    /// Global bounded maximum speed over the whole graph.
    pub fn max_speed(&self) -> Rational {
        match self.global_best() {
            Some((_, mean)) => mean * Rational::new(1, self.graph.p as i128),
            None => Rational::ZERO,
        }
    }
}

/// Build the full bounded quotient graph for `p` pieces and run the
/// mean-cycle analysis for every needed sign vector.
pub fn analyze_full(p: usize, bounds: &SearchBounds) -> GraphSpeeds {
    let graph = build_full(p, bounds);
    analyze_graph(graph)
}

/// Run the per-sign-vector analysis on an already built graph.
pub fn analyze_graph(graph: QuotientGraph) -> GraphSpeeds {
    // Moves are reversible, so the quotient graph is symmetric and opposite
    // sign vectors give equal maxima; half the sweep suffices.
    let sigmas = sign_vectors(graph.n, true);
    let per_sigma = sigmas
        .into_iter()
        .map(|s| {
            let how = howard_max_mean(&graph.weighted(&s));
            (s, how)
        })
        .collect();
    GraphSpeeds { graph, per_sigma }
}

/// Recover the witness moves of a cycle, re-anchored so they apply in
/// sequence starting from the cycle's first canonical placement.
pub fn cycle_witness(graph: &QuotientGraph, cycle: &MeanCycle) -> (Placement, Vec<Move>) {
    let start = graph.nodes[cycle.nodes[0] as usize].clone();
    let mut moves = Vec::with_capacity(cycle.edges.len());
    let mut current = start.clone();
    for (i, &e) in cycle.edges.iter().enumerate() {
        let u = cycle.nodes[i] as usize;
        let m = graph.edge_move(u, e as usize);
        // The stored move lives in the canonical frame; shift it to the
        // frame of the placement being extended.
        let offset = current.canonicalize().offset().clone();
        let shifted = shift_move(&m, &offset);
        current = apply_move(&current, &shifted, None).expect("witness edge replays");
        moves.push(shifted);
    }
    (start, moves)
}

fn shift_move(m: &Move, offset: &Point) -> Move {
    let by = &offset.coords;
    Move {
        origin: m.origin.translated(by),
        destination: m.destination.translated(by),
        hops: m.hops.iter().map(|h| h.translated(by)).collect(),
    }
}

/// The exact bounded maximum speed attainable from `seed`'s configuration:
/// builds the quotient graph reachable from the seed within bounds and
/// sweeps sign vectors with an exact maximum-mean-cycle pass.
pub fn max_speed_bounded(seed: &Placement, bounds: &SearchBounds) -> Result<SpeedResult> {
    let graph = build_reachable(seed, bounds)?;
    let nodes_explored = graph.node_count();
    let p = graph.p as i128;
    let speeds = analyze_graph(graph);

    let forward_only_value = forward_only_max(&speeds.graph);

    match speeds.global_best() {
        Some((idx, mean)) => {
            let (sigma, how) = &speeds.per_sigma[idx];
            let cyc = how.best.as_ref().expect("mean implies a cycle");
            let (start, moves) = cycle_witness(&speeds.graph, cyc);
            Ok(SpeedResult {
                value: mean * Rational::new(1, p),
                direction: sigma.clone(),
                witness_start: Some(start),
                witness_moves: moves,
                nodes_explored,
                forward_only_value,
            })
        }
        None => Ok(SpeedResult {
            value: Rational::ZERO,
            direction: vec![1; seed.dim()],
            witness_start: None,
            witness_moves: Vec::new(),
            nodes_explored,
            forward_only_value,
        }),
    }
}

/// Maximum speed when jumps must keep to forward hops. The restricted graph
/// is not symmetric, so all sign vectors are swept.
pub fn forward_only_max(graph: &QuotientGraph) -> Option<Rational> {
    let mut best: Option<Rational> = None;
    for sigma in sign_vectors(graph.n, false) {
        let how = howard_max_mean(&graph.weighted_forward_only(&sigma));
        if let Some(m) = how.max_mean() {
            if best.map_or(true, |b| m > b) {
                best = Some(m);
            }
        }
    }
    best.map(|m| m * Rational::new(1, graph.p as i128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::SearchBounds;
    use crate::lattice::displacement;

    fn speed_of(seed: &Placement, box_size: i64) -> SpeedResult {
        max_speed_bounded(seed, &SearchBounds::square(2, box_size)).unwrap()
    }

    #[test]
    fn atom_speed_is_one() {
        let r = speed_of(&Placement::from_xy(&[(0, 0)]), 2);
        assert_eq!(r.value, Rational::ONE);
    }

    #[test]
    fn frog_speed_is_one() {
        let r = speed_of(&Placement::from_xy(&[(0, 0), (1, 0)]), 3);
        assert_eq!(r.value, Rational::ONE);
    }

    #[test]
    fn serpent_speed_is_one() {
        let r = speed_of(&Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)]), 4);
        assert_eq!(r.value, Rational::ONE);
    }

    #[test]
    fn snake3_speed_is_two_thirds() {
        let r = speed_of(&Placement::from_xy(&[(0, 0), (1, 1), (2, 2)]), 5);
        assert_eq!(r.value, Rational::new(2, 3));
    }

    #[test]
    fn witness_replays_to_translate_with_claimed_speed() {
        for seed in [
            Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)]),
            Placement::from_xy(&[(0, 0), (1, 1), (2, 2)]),
            Placement::from_xy(&[(0, 0), (2, 1)]),
        ] {
            let r = speed_of(&seed, 4);
            let placements = r.replay().unwrap();
            if placements.is_empty() {
                continue;
            }
            let first = placements.first().unwrap();
            let last = placements.last().unwrap();
            assert!(first.translation_to(last).is_some(), "cycle ends on a translate");
            let d = displacement(first, last).unwrap();
            assert_eq!(
                d * Rational::new(1, r.witness_moves.len() as i128),
                r.value
            );
        }
    }

    #[test]
    fn sign_vector_sets() {
        assert_eq!(sign_vectors(2, false).len(), 4);
        assert_eq!(sign_vectors(2, true), vec![vec![1, 1], vec![1, -1]]);
    }
}
