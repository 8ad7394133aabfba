//! Breadth-first optimal-trajectory search between exact placements.

use crate::bounds::SearchBounds;
use crate::error::{Error, Result};
use crate::lattice::{Coord, Placement, Point};
use crate::moves::{apply_move, legal_moves};
use crate::trajectory::Trajectory;
use std::collections::HashMap;

/// Result of a bounded shortest-trajectory search. A search that exhausts its
/// caps reports that explicitly; it never returns a wrong count.
#[derive(Clone, Debug)]
pub enum SolveOutcome {
    Found {
        /// `moves + 1` placements, start first, goal last.
        placements: Vec<Placement>,
    },
    NotFoundWithinBounds {
        explored: usize,
        reason: String,
    },
}

impl SolveOutcome {
    pub fn moves(&self) -> Option<usize> {
        match self {
            SolveOutcome::Found { placements } => Some(placements.len() - 1),
            SolveOutcome::NotFoundWithinBounds { .. } => None,
        }
    }

    /// The witness as a validated trajectory; `None` for the zero-move case
    /// and for unsolved searches.
    pub fn trajectory(&self) -> Option<Trajectory> {
        match self {
            SolveOutcome::Found { placements } if placements.len() >= 2 => {
                Some(Trajectory::validate(placements.clone(), None).expect("witness replays"))
            }
            _ => None,
        }
    }
}

struct Packer {
    lo: Vec<Coord>,
    bits: u32,
}

impl Packer {
    fn new(bounds: &SearchBounds) -> Packer {
        let sizes = bounds.bbox.sizes();
        let max = sizes.iter().copied().max().unwrap_or(1) - 1;
        Packer {
            lo: bounds.bbox.lo.clone(),
            bits: crate::enumerate::bits_for(max),
        }
    }

    fn key(&self, x: &Placement) -> u128 {
        let mut key: u128 = 0;
        for p in x.points() {
            for (i, &c) in p.coords.iter().enumerate() {
                key = (key << self.bits) | (c - self.lo[i]) as u128;
            }
        }
        key
    }
}

/// Minimal move count from `start` to `goal` (exact positions, not
/// translates), by breadth-first search over the bounded board, plus one
/// witness trajectory.
pub fn shortest_trajectory(
    start: &Placement,
    goal: &Placement,
    bounds: &SearchBounds,
) -> Result<SolveOutcome> {
    if start.size() != goal.size() {
        return Err(Error::SizeMismatch {
            left: start.size(),
            right: goal.size(),
        });
    }
    if start.dim() != goal.dim() {
        return Err(Error::DimensionMismatch {
            left: start.dim(),
            right: goal.dim(),
        });
    }
    for x in [start, goal] {
        if !bounds.bbox.contains_placement(x) {
            return Err(Error::IllegalMove(format!(
                "placement {x:?} is outside the box {}",
                bounds.bbox
            )));
        }
    }
    let key_bits_needed = start.size() as u32
        * start.dim() as u32
        * Packer::new(bounds).bits;
    if key_bits_needed > 128 {
        return Err(Error::IllegalMove(
            "board too large to pack search states".to_string(),
        ));
    }

    let packer = Packer::new(bounds);
    let goal_key = packer.key(goal);

    // node: (placement, parent index, depth)
    let mut nodes: Vec<(Placement, usize, usize)> = vec![(start.clone(), usize::MAX, 0)];
    let mut seen: HashMap<u128, usize> = HashMap::new();
    seen.insert(packer.key(start), 0);

    if packer.key(start) == goal_key {
        return Ok(SolveOutcome::Found {
            placements: vec![start.clone()],
        });
    }

    let mut head = 0;
    while head < nodes.len() {
        let (x, _, depth) = nodes[head].clone();
        if let Some(cap) = bounds.max_depth {
            if depth >= cap {
                head += 1;
                continue;
            }
        }
        for m in legal_moves(&x, Some(&bounds.bbox)) {
            let next = apply_move(&x, &m, Some(&bounds.bbox)).expect("generated move is legal");
            if !bounds.admits_width(&next) {
                continue;
            }
            let key = packer.key(&next);
            if seen.contains_key(&key) {
                continue;
            }
            if let Some(cap) = bounds.node_cap {
                if nodes.len() >= cap {
                    return Ok(SolveOutcome::NotFoundWithinBounds {
                        explored: nodes.len(),
                        reason: format!("node cap {cap} exhausted"),
                    });
                }
            }
            let idx = nodes.len();
            nodes.push((next, head, depth + 1));
            seen.insert(key, idx);
            if key == goal_key {
                let mut chain = Vec::new();
                let mut at = idx;
                while at != usize::MAX {
                    chain.push(nodes[at].0.clone());
                    at = nodes[at].1;
                }
                chain.reverse();
                return Ok(SolveOutcome::Found { placements: chain });
            }
        }
        head += 1;
    }

    Ok(SolveOutcome::NotFoundWithinBounds {
        explored: nodes.len(),
        reason: match bounds.max_depth {
            Some(d) => format!("no trajectory within depth {d}"),
            None => "goal unreachable within the box".to_string(),
        },
    })
}

/// Positions of the square and serpent examples, handy across tests and the
/// command line.
pub fn square_placement(offset: Coord) -> Placement {
    Placement::new(vec![
        Point::xy(offset, offset),
        Point::xy(offset + 1, offset),
        Point::xy(offset, offset + 1),
        Point::xy(offset + 1, offset + 1),
    ])
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::BoundingBox;

    #[test]
    fn zero_moves_for_identical_endpoints() {
        let x = Placement::from_xy(&[(0, 0), (1, 0)]);
        let out = shortest_trajectory(&x, &x, &SearchBounds::square(2, 5)).unwrap();
        assert_eq!(out.moves(), Some(0));
    }

    #[test]
    fn serpent_translate_in_two_moves() {
        let serpent = Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)]);
        let goal = serpent.translated(&[1, 1]);
        let out = shortest_trajectory(&serpent, &goal, &SearchBounds::square(2, 5)).unwrap();
        assert_eq!(out.moves(), Some(2));
        let t = out.trajectory().unwrap();
        assert_eq!(t.start(), &serpent);
        assert_eq!(t.end(), &goal);
    }

    #[test]
    fn atom_walks_distance() {
        let a = Placement::from_xy(&[(0, 0)]);
        let b = Placement::from_xy(&[(2, 1)]);
        let out = shortest_trajectory(&a, &b, &SearchBounds::square(2, 4)).unwrap();
        assert_eq!(out.moves(), Some(3));
    }

    #[test]
    fn depth_cap_reports_not_found() {
        let a = Placement::from_xy(&[(0, 0)]);
        let b = Placement::from_xy(&[(3, 3)]);
        let bounds = SearchBounds::square(2, 4).with_max_depth(2);
        match shortest_trajectory(&a, &b, &bounds).unwrap() {
            SolveOutcome::NotFoundWithinBounds { reason, .. } => {
                assert!(reason.contains("depth"));
            }
            other => panic!("expected bounded failure, got {other:?}"),
        }
    }

    #[test]
    fn node_cap_reports_not_found() {
        let a = square_placement(0);
        let b = square_placement(4);
        let bounds = SearchBounds::boxed(BoundingBox::square(2, 7)).with_node_cap(10);
        match shortest_trajectory(&a, &b, &bounds).unwrap() {
            SolveOutcome::NotFoundWithinBounds { reason, explored } => {
                assert!(reason.contains("node cap"));
                assert!(explored <= 10);
            }
            other => panic!("expected bounded failure, got {other:?}"),
        }
    }

    #[test]
    fn rejects_mismatched_endpoints() {
        let a = Placement::from_xy(&[(0, 0)]);
        let b = Placement::from_xy(&[(0, 0), (1, 0)]);
        assert!(shortest_trajectory(&a, &b, &SearchBounds::square(2, 4)).is_err());
    }
}
