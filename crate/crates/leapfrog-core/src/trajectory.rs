//! Trajectories, movesets, the weight function and isolating partitions.

use crate::bounds::BoundingBox;
use crate::error::{Error, Result};
use crate::lattice::{displacement, Placement};
use crate::moves::{classify_transition, reconstruct_move, Move, MoveClass};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};

/// Per-class counts of a moveset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub ascents: u32,
    pub front_pushes: u32,
    pub back_pushes: u32,
    pub dead_moves: u32,
    pub front_retreats: u32,
    pub back_retreats: u32,
    pub reverse_ascents: u32,
}

impl ClassCounts {
    pub fn of(classes: &[MoveClass]) -> ClassCounts {
        let mut c = ClassCounts::default();
        for cl in classes {
            match cl {
                MoveClass::Ascent => c.ascents += 1,
                MoveClass::FrontPush => c.front_pushes += 1,
                MoveClass::BackPush => c.back_pushes += 1,
                MoveClass::DeadMove => c.dead_moves += 1,
                MoveClass::FrontRetreat => c.front_retreats += 1,
                MoveClass::BackRetreat => c.back_retreats += 1,
                MoveClass::ReverseAscent => c.reverse_ascents += 1,
            }
        }
        c
    }

    pub fn total(&self) -> u32 {
        self.ascents
            + self.front_pushes
            + self.back_pushes
            + self.dead_moves
            + self.front_retreats
            + self.back_retreats
            + self.reverse_ascents
    }
}

/// The classified move sequence of a trajectory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Moveset {
    pub classes: Vec<MoveClass>,
}

impl Moveset {
    pub fn new(classes: Vec<MoveClass>) -> Moveset {
        Moveset { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn counts(&self) -> ClassCounts {
        ClassCounts::of(&self.classes)
    }

    pub fn weight(&self) -> Rational {
        weight(&self.classes)
    }
}

/// Twice the weight, always an integer.
pub fn weight_x2(classes: &[MoveClass]) -> i64 {
    classes.iter().map(|c| c.weight_x2()).sum()
}

/// `A - (FP+BP)/2 - 2 DM - 7(FR+BR)/2 - 5 RA`, exactly.
pub fn weight(classes: &[MoveClass]) -> Rational {
    Rational::new(weight_x2(classes) as i128, 2)
}

/// One block of an isolating partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub classes: Vec<MoveClass>,
    /// The number of ascents the block begins with.
    pub leading_ascents: usize,
    /// Whether this is prefix material preceding the first double-ascent run.
    pub is_prefix: bool,
}

impl Block {
    pub fn weight(&self) -> Rational {
        weight(&self.classes)
    }
}

/// Split a moveset at every position where a run of two or more consecutive
/// ascents begins. Material before the first such run forms a prefix block;
/// an empty prefix is omitted. Concatenating the blocks restores the input,
/// and the weight is additive across blocks.
pub fn isolating_partition(classes: &[MoveClass]) -> Vec<Block> {
    let n = classes.len();
    let mut starts = Vec::new();
    let mut i = 0;
    while i < n {
        if classes[i] == MoveClass::Ascent {
            let mut j = i;
            while j < n && classes[j] == MoveClass::Ascent {
                j += 1;
            }
            if j - i >= 2 {
                starts.push(i);
            }
            i = j;
        } else {
            i += 1;
        }
    }

    let mut blocks = Vec::new();
    let mut cut_points = Vec::new();
    if starts.first() != Some(&0) {
        cut_points.push(0);
    }
    cut_points.extend_from_slice(&starts);
    cut_points.push(n);
    for w in cut_points.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a == b {
            continue;
        }
        let slice = classes[a..b].to_vec();
        let leading = slice
            .iter()
            .take_while(|c| **c == MoveClass::Ascent)
            .count();
        // A prefix block never begins with two ascents, so its leading count
        // is at most one by construction.
        let is_prefix = !starts.contains(&a);
        blocks.push(Block {
            classes: slice,
            leading_ascents: leading,
            is_prefix,
        });
    }
    blocks
}

/// Suboptimality data for one block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub weight: Rational,
    /// `weight <= 0`.
    pub suboptimal: bool,
    /// Half-open index range of the first consecutive subsequence `S` with
    /// `weight(S) + leading_ascents <= 0`, when one exists.
    pub witness: Option<(usize, usize)>,
}

/// Whether a block is suboptimal, plus the witness subsequence of the
/// `weight(S) + L <= 0` kind when present.
pub fn block_suboptimality(block: &Block) -> BlockReport {
    let w = block.weight();
    let suboptimal = !w.is_positive();
    let l2 = 2 * block.leading_ascents as i64;
    let mut witness = None;
    'outer: for i in 0..block.classes.len() {
        let mut acc = 0i64;
        for j in i..block.classes.len() {
            acc += block.classes[j].weight_x2();
            if acc + l2 <= 0 {
                witness = Some((i, j + 1));
                break 'outer;
            }
        }
    }
    BlockReport {
        weight: w,
        suboptimal,
        witness,
    }
}

/// For each maximal gap between consecutive ascents, the number of pushes and
/// retreats (the width-parity-changing classes) inside the gap.
pub fn parity_counts_between_ascents(classes: &[MoveClass]) -> Vec<usize> {
    let ascent_positions: Vec<usize> = classes
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == MoveClass::Ascent)
        .map(|(i, _)| i)
        .collect();
    ascent_positions
        .windows(2)
        .map(|w| {
            classes[w[0] + 1..w[1]]
                .iter()
                .filter(|c| {
                    matches!(
                        c,
                        MoveClass::FrontPush
                            | MoveClass::BackPush
                            | MoveClass::FrontRetreat
                            | MoveClass::BackRetreat
                    )
                })
                .count()
        })
        .collect()
}

/// A validated sequence of placements one legal move apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trajectory {
    placements: Vec<Placement>,
    moves: Vec<Move>,
    classes: Vec<MoveClass>,
}

impl Trajectory {
    /// Reconstruct and validate the move taken at every step. Errors carry
    /// the failing step index and the violated rule.
    pub fn validate(placements: Vec<Placement>, bounds: Option<&BoundingBox>) -> Result<Trajectory> {
        if placements.len() < 2 {
            return Err(Error::InvalidTrajectory {
                step: 0,
                reason: "a trajectory needs at least two placements".to_string(),
            });
        }
        if let Some(b) = bounds {
            for (i, x) in placements.iter().enumerate() {
                if !b.contains_placement(x) {
                    return Err(Error::InvalidTrajectory {
                        step: i,
                        reason: format!("placement leaves the box {b}"),
                    });
                }
            }
        }
        let mut moves = Vec::with_capacity(placements.len() - 1);
        let mut classes = Vec::with_capacity(placements.len() - 1);
        for u in 0..placements.len() - 1 {
            let m = reconstruct_move(&placements[u], &placements[u + 1], bounds).map_err(|e| {
                Error::InvalidTrajectory {
                    step: u,
                    reason: e.to_string(),
                }
            })?;
            classes.push(classify_transition(&placements[u], &placements[u + 1]));
            moves.push(m);
        }
        Ok(Trajectory {
            placements,
            moves,
            classes,
        })
    }

    /// Build a trajectory by applying moves from a start placement.
    pub fn from_moves(
        start: Placement,
        moves: &[Move],
        bounds: Option<&BoundingBox>,
    ) -> Result<Trajectory> {
        let mut placements = vec![start];
        for (u, m) in moves.iter().enumerate() {
            let next = crate::moves::apply_move(placements.last().unwrap(), m, bounds).map_err(
                |e| Error::InvalidTrajectory {
                    step: u,
                    reason: e.to_string(),
                },
            )?;
            placements.push(next);
        }
        Trajectory::validate(placements, bounds)
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn classes(&self) -> &[MoveClass] {
        &self.classes
    }

    pub fn start(&self) -> &Placement {
        &self.placements[0]
    }

    pub fn end(&self) -> &Placement {
        self.placements.last().unwrap()
    }

    /// Number of moves.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn moveset(&self) -> Moveset {
        Moveset::new(self.classes.clone())
    }

    pub fn displacement(&self) -> Rational {
        displacement(self.start(), self.end()).expect("endpoints are size-matched")
    }

    /// Displacement over move count, exactly.
    pub fn speed(&self) -> Rational {
        self.displacement() * Rational::new(1, self.len() as i128)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Point;
    use crate::moves::MoveClass::*;

    fn serpent() -> Placement {
        Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)])
    }

    #[test]
    fn validates_serpent_cycle() {
        let x0 = serpent();
        let x1 = Placement::from_xy(&[(1, 0), (1, 1), (2, 1), (2, 2)]);
        let x2 = Placement::from_xy(&[(1, 1), (2, 1), (2, 2), (3, 2)]);
        let t = Trajectory::validate(vec![x0.clone(), x1, x2.clone()], None).unwrap();
        assert_eq!(t.classes(), &[Ascent, Ascent]);
        assert_eq!(x2, x0.translated(&[1, 1]));
        assert_eq!(t.speed(), Rational::ONE);
    }

    #[test]
    fn rejects_unmoved_step() {
        let x = serpent();
        let err = Trajectory::validate(vec![x.clone(), x], None).unwrap_err();
        match err {
            Error::InvalidTrajectory { step, .. } => assert_eq!(step, 0),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn snake_cycle_classes_and_speed() {
        let snake = Placement::from_xy(&[(0, 0), (1, 1), (2, 2), (3, 3)]);
        let steps = vec![
            snake.clone(),
            Placement::from_xy(&[(1, 0), (1, 1), (2, 2), (3, 3)]),
            Placement::from_xy(&[(1, 1), (2, 2), (3, 3), (3, 4)]),
            Placement::from_xy(&[(1, 1), (2, 2), (3, 3), (4, 4)]),
        ];
        let t = Trajectory::validate(steps, None).unwrap();
        assert_eq!(t.classes(), &[BackPush, Ascent, FrontPush]);
        assert_eq!(t.speed(), Rational::new(2, 3));
        assert_eq!(t.moveset().weight(), Rational::ZERO);
    }

    #[test]
    fn zero_speed_on_return() {
        let frog = Placement::from_xy(&[(0, 0), (1, 0)]);
        let up = Placement::from_xy(&[(0, 1), (1, 0)]);
        let t = Trajectory::validate(vec![frog.clone(), up, frog.clone()], None).unwrap();
        assert_eq!(t.speed(), Rational::ZERO);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&[BackPush, Ascent, FrontPush]), Rational::ZERO);
        assert_eq!(weight(&[Ascent]), Rational::ONE);
        assert_eq!(weight(&[DeadMove, DeadMove]), Rational::from_int(-4));
    }

    #[test]
    fn partition_paper_example() {
        let classes = vec![
            Ascent, Ascent, Ascent, FrontPush, DeadMove, BackPush, Ascent, Ascent, DeadMove,
            DeadMove, Ascent, FrontPush, BackPush,
        ];
        let blocks = isolating_partition(&classes);
        assert_eq!(blocks.len(), 2);
        assert_eq!(
            blocks[0].classes,
            vec![Ascent, Ascent, Ascent, FrontPush, DeadMove, BackPush]
        );
        assert_eq!(
            blocks[1].classes,
            vec![Ascent, Ascent, DeadMove, DeadMove, Ascent, FrontPush, BackPush]
        );
        assert_eq!(blocks[0].leading_ascents, 3);
        assert_eq!(blocks[1].leading_ascents, 2);
        assert!(!blocks[0].is_prefix);
    }

    #[test]
    fn partition_without_double_ascent() {
        let classes = vec![FrontPush, FrontPush, FrontPush];
        let blocks = isolating_partition(&classes);
        assert_eq!(blocks.len(), 1);
        assert!(blocks[0].is_prefix);
        assert_eq!(blocks[0].classes, classes);
    }

    #[test]
    fn partition_concatenation_and_weight_additivity() {
        let classes = vec![
            FrontPush, Ascent, Ascent, BackPush, Ascent, FrontPush, Ascent, Ascent, DeadMove,
        ];
        let blocks = isolating_partition(&classes);
        let concat: Vec<MoveClass> = blocks.iter().flat_map(|b| b.classes.clone()).collect();
        assert_eq!(concat, classes);
        let total: i64 = blocks.iter().map(|b| weight_x2(&b.classes)).sum();
        assert_eq!(total, weight_x2(&classes));
        assert!(blocks[0].is_prefix);
    }

    #[test]
    fn block_suboptimality_examples() {
        let b = Block {
            classes: vec![Ascent, Ascent, FrontPush, FrontPush, FrontPush, FrontPush],
            leading_ascents: 2,
            is_prefix: false,
        };
        let r = block_suboptimality(&b);
        assert!(r.suboptimal);
        assert_eq!(r.weight, Rational::ZERO);
        // The four pushes are a witness subsequence.
        assert_eq!(r.witness, Some((2, 6)));

        let b2 = Block {
            classes: vec![Ascent, Ascent],
            leading_ascents: 2,
            is_prefix: false,
        };
        let r2 = block_suboptimality(&b2);
        assert!(!r2.suboptimal);
        assert_eq!(r2.weight, Rational::from_int(2));
        assert_eq!(r2.witness, None);

        let b3 = Block {
            classes: vec![
                Ascent, Ascent, Ascent, FrontPush, FrontPush, FrontPush, FrontPush, Ascent,
                DeadMove, DeadMove,
            ],
            leading_ascents: 3,
            is_prefix: false,
        };
        let r3 = block_suboptimality(&b3);
        assert!(r3.suboptimal);
        assert_eq!(r3.weight, Rational::from_int(-2));
    }

    #[test]
    fn parity_count_examples() {
        assert_eq!(
            parity_counts_between_ascents(&[Ascent, FrontPush, BackPush, Ascent]),
            vec![2]
        );
        assert_eq!(
            parity_counts_between_ascents(&[Ascent, FrontPush, DeadMove, BackPush, Ascent]),
            vec![2]
        );
        assert_eq!(parity_counts_between_ascents(&[Ascent, Ascent]), vec![0]);
        assert!(parity_counts_between_ascents(&[FrontPush]).is_empty());
    }

    #[test]
    fn builds_from_moves() {
        let t = Trajectory::from_moves(
            serpent(),
            &[Move::jump(
                Point::xy(0, 0),
                Point::xy(2, 2),
                vec![Point::xy(1, 0), Point::xy(2, 1)],
            )],
            None,
        )
        .unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.classes(), &[Ascent]);
    }
}
