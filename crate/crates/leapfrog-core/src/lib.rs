//! Engine and verification suite for the lattice leapfrogging game.
//!
//! Pieces live on `Z^n` and move like Chinese checkers pieces: one unit shift
//! or one chain of hops over adjacent pieces. The crate provides the exact
//! geometry of placements, legal-move generation, trajectory analysis with
//! the seven-way move classification and its weight function, optimal-move
//! search, configuration-speed analysis on the translation-quotient graph,
//! and a set of named exhaustive checks over desk-scale instances.
//!
//! Everything arithmetic is exact; speeds and weights are rationals, never
//! floats. All bounded results are labeled with the bounds they were
//! computed under.

pub mod ascent;
pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod lattice;
pub mod mmc;
pub mod moves;
pub mod quotient;
pub mod rational;
pub mod render;
pub mod solver;
pub mod speed;
pub mod sweep;
pub mod textio;
pub mod trajectory;
pub mod verify;

pub use bounds::{BoundingBox, SearchBounds};
pub use error::{Error, Result};
pub use lattice::{displacement, Canonical, Coord, Measure, Placement, Point};
pub use moves::{
    apply_move, classify_move, find_true_ladders, has_ascent, jump_targets, legal_moves,
    legal_shifts, Ladder, Move, MoveClass, MoveKind,
};
pub use rational::{Rational, RationalVec};
pub use trajectory::{
    block_suboptimality, isolating_partition, parity_counts_between_ascents, weight, Block,
    Moveset, Trajectory,
};
