//! Legal moves: unit shifts and hop-chain jumps, their classification by
//! tail/head effect, and ladder detection.
//!
//! Pieces move in all `2n` signed unit directions. A hop goes over one
//! adjacent occupied square to the empty square beyond; a jump is a chain of
//! hops by one piece. The mover's own starting square is vacated for the
//! duration of the jump and is never a landing.

use crate::bounds::BoundingBox;
use crate::error::{Error, Result};
use crate::lattice::{Coord, Placement, Point};
use serde::{Deserialize, Serialize};
use std::fmt;

/// One legal action: a shift or a jump.
///
/// `hops` lists the pieces hopped over, in order; it is empty exactly for
/// shifts. Successive landing squares are reflections through the rungs, so
/// the chain of landings is recoverable from the origin and the rungs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Move {
    pub origin: Point,
    pub destination: Point,
    pub hops: Vec<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveKind {
    Shift,
    Jump,
}

impl Move {
    pub fn shift(origin: Point, destination: Point) -> Move {
        Move {
            origin,
            destination,
            hops: Vec::new(),
        }
    }

    pub fn jump(origin: Point, destination: Point, hops: Vec<Point>) -> Move {
        Move {
            origin,
            destination,
            hops,
        }
    }

    pub fn kind(&self) -> MoveKind {
        if self.hops.is_empty() {
            MoveKind::Shift
        } else {
            MoveKind::Jump
        }
    }

    /// The landing squares of the hop chain, ending at the destination.
    pub fn landings(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.hops.len());
        let mut cur = self.origin.clone();
        for rung in &self.hops {
            let land = reflect(&cur, rung);
            out.push(land.clone());
            cur = land;
        }
        out
    }

    /// Whether any hop goes in a negative unit direction. Forward-only
    /// analyses filter on this.
    pub fn has_negative_hop(&self) -> bool {
        let mut cur = self.origin.clone();
        for rung in &self.hops {
            let step: Coord = rung
                .coords
                .iter()
                .zip(&cur.coords)
                .map(|(r, c)| r - c)
                .sum();
            if step < 0 {
                return true;
            }
            cur = reflect(&cur, rung);
        }
        false
    }
}

impl fmt::Debug for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            MoveKind::Shift => write!(f, "S {} -> {}", self.origin, self.destination),
            MoveKind::Jump => {
                write!(f, "J {} -> {} via ", self.origin, self.destination)?;
                for (i, h) in self.hops.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{h}")?;
                }
                Ok(())
            }
        }
    }
}

/// The seven move categories, by the signs of the tail and head changes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveClass {
    Ascent,
    FrontPush,
    BackPush,
    DeadMove,
    FrontRetreat,
    BackRetreat,
    ReverseAscent,
}

impl MoveClass {
    pub const ALL: [MoveClass; 7] = [
        MoveClass::Ascent,
        MoveClass::FrontPush,
        MoveClass::BackPush,
        MoveClass::DeadMove,
        MoveClass::FrontRetreat,
        MoveClass::BackRetreat,
        MoveClass::ReverseAscent,
    ];

    pub fn abbrev(&self) -> &'static str {
        match self {
            MoveClass::Ascent => "A",
            MoveClass::FrontPush => "FP",
            MoveClass::BackPush => "BP",
            MoveClass::DeadMove => "DM",
            MoveClass::FrontRetreat => "FR",
            MoveClass::BackRetreat => "BR",
            MoveClass::ReverseAscent => "RA",
        }
    }

    /// Twice the move weight, an integer: A=+2, FP/BP=-1, DM=-4, FR/BR=-7,
    /// RA=-10.
    pub fn weight_x2(&self) -> i64 {
        match self {
            MoveClass::Ascent => 2,
            MoveClass::FrontPush | MoveClass::BackPush => -1,
            MoveClass::DeadMove => -4,
            MoveClass::FrontRetreat | MoveClass::BackRetreat => -7,
            MoveClass::ReverseAscent => -10,
        }
    }
}

impl fmt::Display for MoveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbrev())
    }
}

/// A hop chain from a base over rungs, each hop gaining border +2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ladder {
    pub base: Point,
    pub rungs: Vec<Point>,
    pub landing: Point,
}

impl Ladder {
    /// The jump performed by climbing the whole ladder.
    pub fn climb(&self) -> Move {
        Move::jump(self.base.clone(), self.landing.clone(), self.rungs.clone())
    }
}

fn reflect(from: &Point, over: &Point) -> Point {
    Point::new(
        over.coords
            .iter()
            .zip(&from.coords)
            .map(|(o, f)| 2 * o - f)
            .collect(),
    )
}

fn unit_directions(n: usize) -> Vec<Vec<Coord>> {
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        for sign in [1, -1] {
            let mut d = vec![0; n];
            d[i] = sign;
            out.push(d);
        }
    }
    out
}

fn in_bounds(bounds: Option<&BoundingBox>, p: &Point) -> bool {
    bounds.map_or(true, |b| b.contains(p))
}

/// All single unit-step moves into unoccupied (and in-bounds) squares.
pub fn legal_shifts(x: &Placement, bounds: Option<&BoundingBox>) -> Vec<Move> {
    let n = x.dim();
    let dirs = unit_directions(n);
    let mut out = Vec::new();
    for p in x.points() {
        for d in &dirs {
            let q = p.translated(d);
            if !x.contains(&q) && in_bounds(bounds, &q) {
                out.push(Move::shift(p.clone(), q));
            }
        }
    }
    out.sort();
    out
}

/// Breadth-first closure of single hops starting at `mover`, with visited
/// landing deduplication. The mover's origin is excluded from the result.
pub fn jump_targets(
    x: &Placement,
    mover: &Point,
    bounds: Option<&BoundingBox>,
) -> Result<Vec<Point>> {
    Ok(jump_moves(x, mover, bounds)?
        .into_iter()
        .map(|m| m.destination)
        .collect())
}

/// One jump `Move` per reachable landing square: the shortest hop chain,
/// breaking ties by the lexicographically least rung sequence.
pub fn jump_moves(
    x: &Placement,
    mover: &Point,
    bounds: Option<&BoundingBox>,
) -> Result<Vec<Move>> {
    if !x.contains(mover) {
        return Err(Error::MoverNotInPlacement(mover.clone()));
    }
    let n = x.dim();
    let dirs = unit_directions(n);
    // The mover is airborne: its own square does not block or support hops.
    let occupied = |p: &Point| p != mover && x.contains(p);

    let mut visited: Vec<Point> = vec![mover.clone()];
    // (position, chain of rungs so far)
    let mut frontier: Vec<(Point, Vec<Point>)> = vec![(mover.clone(), Vec::new())];
    let mut out: Vec<Move> = Vec::new();

    while !frontier.is_empty() {
        let mut layer: Vec<(Point, Vec<Point>)> = Vec::new();
        for (pos, chain) in &frontier {
            for d in &dirs {
                let rung = pos.translated(d);
                if !occupied(&rung) {
                    continue;
                }
                let land = rung.translated(d);
                if occupied(&land) || !in_bounds(bounds, &land) {
                    continue;
                }
                let mut c = chain.clone();
                c.push(rung);
                layer.push((land, c));
            }
        }
        // Shortest chain wins; within a layer the lexicographically least
        // chain is kept for each newly reached landing.
        layer.sort();
        frontier = Vec::new();
        for (land, chain) in layer {
            if visited.contains(&land) {
                continue;
            }
            visited.push(land.clone());
            out.push(Move::jump(mover.clone(), land.clone(), chain.clone()));
            frontier.push((land, chain));
        }
    }
    out.sort();
    Ok(out)
}

/// Shifts plus one jump per reachable landing, for every piece.
pub fn legal_moves(x: &Placement, bounds: Option<&BoundingBox>) -> Vec<Move> {
    let mut out = legal_shifts(x, bounds);
    for p in x.points() {
        out.extend(jump_moves(x, p, bounds).expect("mover is in placement"));
    }
    out.sort();
    out
}

/// Validate `m` against `x` and apply it. Errors name the violated rule.
pub fn apply_move(x: &Placement, m: &Move, bounds: Option<&BoundingBox>) -> Result<Placement> {
    if !x.contains(&m.origin) {
        return Err(Error::MoverNotInPlacement(m.origin.clone()));
    }
    if m.origin.dim() != x.dim() || m.destination.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: m.origin.dim(),
        });
    }
    let occupied = |p: &Point| *p != m.origin && x.contains(p);
    match m.kind() {
        MoveKind::Shift => {
            let diff: Vec<Coord> = m
                .destination
                .coords
                .iter()
                .zip(&m.origin.coords)
                .map(|(d, o)| d - o)
                .collect();
            let l1: Coord = diff.iter().map(|c| c.abs()).sum();
            if l1 != 1 {
                return Err(Error::IllegalMove(format!(
                    "shift {} -> {} is not a unit step",
                    m.origin, m.destination
                )));
            }
            if occupied(&m.destination) {
                return Err(Error::IllegalMove(format!(
                    "destination {} is occupied",
                    m.destination
                )));
            }
            if !in_bounds(bounds, &m.destination) {
                return Err(Error::IllegalMove(format!(
                    "destination {} is out of bounds",
                    m.destination
                )));
            }
        }
        MoveKind::Jump => {
            if m.destination == m.origin {
                return Err(Error::IllegalMove(
                    "jump returns to its origin".to_string(),
                ));
            }
            let mut cur = m.origin.clone();
            for rung in &m.hops {
                let step: Vec<Coord> = rung
                    .coords
                    .iter()
                    .zip(&cur.coords)
                    .map(|(r, c)| r - c)
                    .collect();
                if step.iter().map(|c| c.abs()).sum::<Coord>() != 1 {
                    return Err(Error::IllegalMove(format!(
                        "hop chain breaks at {cur}: rung {rung} is not adjacent"
                    )));
                }
                if !occupied(rung) {
                    return Err(Error::IllegalMove(format!(
                        "missing hopped piece at {rung}"
                    )));
                }
                let land = reflect(&cur, rung);
                if occupied(&land) {
                    return Err(Error::IllegalMove(format!("landing {land} is occupied")));
                }
                if !in_bounds(bounds, &land) {
                    return Err(Error::IllegalMove(format!(
                        "landing {land} is out of bounds"
                    )));
                }
                cur = land;
            }
            if cur != m.destination {
                return Err(Error::IllegalMove(format!(
                    "hop chain ends at {cur}, not at destination {}",
                    m.destination
                )));
            }
        }
    }
    let mut pts: Vec<Point> = x.points().to_vec();
    let idx = pts.binary_search(&m.origin).expect("origin checked");
    pts.remove(idx);
    pts.push(m.destination.clone());
    Placement::new(pts)
}

/// Classify a transition by the signs of the tail and head changes.
///
/// The two remaining sign patterns (tail up with head down and vice versa)
/// cannot arise from a single-piece move.
pub fn classify_transition(before: &Placement, after: &Placement) -> MoveClass {
    let dt = (after.tail() - before.tail()).signum();
    let dh = (after.head() - before.head()).signum();
    match (dt, dh) {
        (1, 1) => MoveClass::Ascent,
        (0, 1) => MoveClass::FrontPush,
        (1, 0) => MoveClass::BackPush,
        (0, 0) => MoveClass::DeadMove,
        (0, -1) => MoveClass::FrontRetreat,
        (-1, 0) => MoveClass::BackRetreat,
        (-1, -1) => MoveClass::ReverseAscent,
        _ => unreachable!("single-piece move cannot move tail and head in opposite directions"),
    }
}

/// Validate the move and classify it.
pub fn classify_move(x: &Placement, m: &Move) -> Result<MoveClass> {
    let after = apply_move(x, m, None)?;
    Ok(classify_transition(x, &after))
}

/// All true ladders: hop chains of the unique back-border piece gaining
/// border +2 per hop and landing one past the head. Empty when the back
/// border holds more than one piece.
pub fn find_true_ladders(x: &Placement) -> Vec<Ladder> {
    let back = x.back_border();
    if back.len() != 1 || x.size() < 2 {
        return Vec::new();
    }
    let base = back[0].clone();
    let head = x.head();
    let n = x.dim();
    let occupied = |p: &Point| *p != base && x.contains(p);

    let mut out = Vec::new();
    // Border +2 hops go over +e_i rungs only, so chains strictly ascend and
    // cannot revisit a square.
    let mut stack: Vec<(Point, Vec<Point>)> = vec![(base.clone(), Vec::new())];
    while let Some((pos, chain)) = stack.pop() {
        for i in 0..n {
            let mut d = vec![0; n];
            d[i] = 1;
            let rung = pos.translated(&d);
            if !occupied(&rung) {
                continue;
            }
            let land = rung.translated(&d);
            if occupied(&land) {
                continue;
            }
            let mut c = chain.clone();
            c.push(rung);
            if land.border_index() == head + 1 {
                out.push(Ladder {
                    base: base.clone(),
                    rungs: c,
                    landing: land,
                });
            } else {
                stack.push((land, c));
            }
        }
    }
    out.sort_by(|a, b| (&a.rungs, &a.landing).cmp(&(&b.rungs, &b.landing)));
    out
}

/// Whether some legal move is an ascent, decided through classification of
/// the full move list. Cross-checked against `find_true_ladders` by the
/// verification suite.
pub fn has_ascent(x: &Placement) -> bool {
    legal_moves(x, None)
        .iter()
        .any(|m| classify_move(x, m).map_or(false, |c| c == MoveClass::Ascent))
}

/// Successor placements reachable by one ascent.
///
/// For multi-piece placements ascents are exactly true-ladder climbs; for a
/// single piece every positive unit shift raises both tail and head.
pub fn ascent_successors(x: &Placement) -> Vec<Placement> {
    if x.size() == 1 {
        let n = x.dim();
        let mut out = Vec::new();
        for i in 0..n {
            let mut d = vec![0; n];
            d[i] = 1;
            out.push(x.translated(&d));
        }
        return out;
    }
    let mut out: Vec<Placement> = find_true_ladders(x)
        .iter()
        .map(|l| apply_move(x, &l.climb(), None).expect("ladder climb is legal"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The single (origin, destination) pair by which `after` differs from
/// `before`, when exactly one piece moved.
pub fn moved_piece(before: &Placement, after: &Placement) -> Option<(Point, Point)> {
    let gone: Vec<&Point> = before
        .points()
        .iter()
        .filter(|p| !after.contains(p))
        .collect();
    let new: Vec<&Point> = after
        .points()
        .iter()
        .filter(|p| !before.contains(p))
        .collect();
    if gone.len() == 1 && new.len() == 1 {
        Some((gone[0].clone(), new[0].clone()))
    } else {
        None
    }
}

/// Reconstruct the unique legal move taking `before` to `after`, if any.
pub fn reconstruct_move(
    before: &Placement,
    after: &Placement,
    bounds: Option<&BoundingBox>,
) -> Result<Move> {
    if before.size() != after.size() {
        return Err(Error::SizeMismatch {
            left: before.size(),
            right: after.size(),
        });
    }
    let (origin, dest) = moved_piece(before, after).ok_or_else(|| {
        Error::IllegalMove("transition does not move exactly one piece".to_string())
    })?;
    let diff: Coord = dest
        .coords
        .iter()
        .zip(&origin.coords)
        .map(|(d, o)| (d - o).abs())
        .sum();
    if diff == 1 {
        let m = Move::shift(origin, dest);
        apply_move(before, &m, bounds)?;
        return Ok(m);
    }
    for m in jump_moves(before, &origin, bounds)? {
        if m.destination == dest {
            return Ok(m);
        }
    }
    Err(Error::IllegalMove(format!(
        "no legal jump takes {origin} to {dest}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn serpent() -> Placement {
        Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)])
    }

    #[test]
    fn atom_shifts() {
        let atom = Placement::from_xy(&[(0, 0)]);
        assert_eq!(legal_shifts(&atom, None).len(), 4);
        let boxed = BoundingBox::square(2, 3);
        assert_eq!(legal_shifts(&atom, Some(&boxed)).len(), 2);
        assert_eq!(legal_moves(&atom, None).len(), 4);
    }

    #[test]
    fn frog_moves() {
        let frog = Placement::from_xy(&[(0, 0), (1, 0)]);
        let shifts = legal_shifts(&frog, None);
        assert_eq!(shifts.len(), 6);
        let origin_shifts: Vec<&Move> = shifts
            .iter()
            .filter(|m| m.origin == Point::xy(0, 0))
            .collect();
        let dests: Vec<&Point> = origin_shifts.iter().map(|m| &m.destination).collect();
        assert_eq!(
            dests,
            vec![&Point::xy(-1, 0), &Point::xy(0, -1), &Point::xy(0, 1)]
        );
        assert_eq!(
            jump_targets(&frog, &Point::xy(0, 0), None).unwrap(),
            vec![Point::xy(2, 0)]
        );
        assert_eq!(legal_moves(&frog, None).len(), 8);
    }

    #[test]
    fn serpent_jump_targets() {
        let targets = jump_targets(&serpent(), &Point::xy(0, 0), None).unwrap();
        assert_eq!(targets, vec![Point::xy(2, 0), Point::xy(2, 2)]);
    }

    #[test]
    fn snake_jump_after_shift() {
        let x = Placement::from_xy(&[(1, 0), (1, 1), (2, 2), (3, 3)]);
        let targets = jump_targets(&x, &Point::xy(1, 0), None).unwrap();
        assert!(targets.contains(&Point::xy(3, 4)));
    }

    #[test]
    fn jump_requires_mover_in_placement() {
        let frog = Placement::from_xy(&[(0, 0), (1, 0)]);
        assert!(jump_targets(&frog, &Point::xy(5, 5), None).is_err());
    }

    #[test]
    fn saturated_box_has_no_moves() {
        let full = Placement::from_xy(&[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let tight = BoundingBox::square(2, 2);
        assert!(legal_moves(&full, Some(&tight)).is_empty());
    }

    #[test]
    fn apply_serpent_jump() {
        let m = Move::jump(
            Point::xy(0, 0),
            Point::xy(2, 2),
            vec![Point::xy(1, 0), Point::xy(2, 1)],
        );
        let after = apply_move(&serpent(), &m, None).unwrap();
        assert_eq!(after, Placement::from_xy(&[(1, 0), (1, 1), (2, 1), (2, 2)]));
    }

    #[test]
    fn apply_shift_and_errors() {
        let atom = Placement::from_xy(&[(0, 0)]);
        let m = Move::shift(Point::xy(0, 0), Point::xy(1, 0));
        assert_eq!(
            apply_move(&atom, &m, None).unwrap(),
            Placement::from_xy(&[(1, 0)])
        );

        let frog = Placement::from_xy(&[(0, 0), (1, 0)]);
        let bad = Move::shift(Point::xy(0, 0), Point::xy(1, 0));
        let err = apply_move(&frog, &bad, None).unwrap_err();
        assert!(err.to_string().contains("occupied"));

        let missing = Move::jump(Point::xy(0, 0), Point::xy(0, 2), vec![Point::xy(0, 1)]);
        let err = apply_move(&frog, &missing, None).unwrap_err();
        assert!(err.to_string().contains("missing hopped piece"));

        let boxed = BoundingBox::square(2, 2);
        let out = Move::shift(Point::xy(1, 0), Point::xy(2, 0));
        let err = apply_move(&frog, &out, Some(&boxed)).unwrap_err();
        assert!(err.to_string().contains("out of bounds"));
    }

    #[test]
    fn classify_ladder_figure() {
        let fig = Placement::from_xy(&[(0, 0), (1, 0), (2, 1), (2, 3), (3, 4), (4, 0)]);
        // Full climb is an ascent.
        let climb = Move::jump(
            Point::xy(0, 0),
            Point::xy(4, 4),
            vec![
                Point::xy(1, 0),
                Point::xy(2, 1),
                Point::xy(2, 3),
                Point::xy(3, 4),
            ],
        );
        assert_eq!(classify_move(&fig, &climb).unwrap(), MoveClass::Ascent);
        // Front piece shifting right pushes the front.
        let fp = Move::shift(Point::xy(3, 4), Point::xy(4, 4));
        assert_eq!(classify_move(&fig, &fp).unwrap(), MoveClass::FrontPush);
        // Jumping over the first two rungs only pushes the back.
        let bp = Move::jump(
            Point::xy(0, 0),
            Point::xy(2, 2),
            vec![Point::xy(1, 0), Point::xy(2, 1)],
        );
        assert_eq!(classify_move(&fig, &bp).unwrap(), MoveClass::BackPush);
        // The stray piece moves without touching either end.
        for dest in [(4, 1), (5, 0), (4, -1), (3, 0)] {
            let dm = Move::shift(Point::xy(4, 0), Point::xy(dest.0, dest.1));
            assert_eq!(classify_move(&fig, &dm).unwrap(), MoveClass::DeadMove);
        }
    }

    #[test]
    fn classify_snake_cycle() {
        let snake = Placement::from_xy(&[(0, 0), (1, 1), (2, 2), (3, 3)]);
        let bp = Move::shift(Point::xy(0, 0), Point::xy(1, 0));
        assert_eq!(classify_move(&snake, &bp).unwrap(), MoveClass::BackPush);
        let x1 = apply_move(&snake, &bp, None).unwrap();
        let asc = Move::jump(
            Point::xy(1, 0),
            Point::xy(3, 4),
            vec![Point::xy(1, 1), Point::xy(2, 2), Point::xy(3, 3)],
        );
        assert_eq!(classify_move(&x1, &asc).unwrap(), MoveClass::Ascent);
        let x2 = apply_move(&x1, &asc, None).unwrap();
        let fp = Move::shift(Point::xy(3, 4), Point::xy(4, 4));
        assert_eq!(classify_move(&x2, &fp).unwrap(), MoveClass::FrontPush);
        let x3 = apply_move(&x2, &fp, None).unwrap();
        assert_eq!(x3, snake.translated(&[1, 1]));
    }

    #[test]
    fn true_ladders_figure() {
        let fig = Placement::from_xy(&[(0, 0), (1, 0), (2, 1), (2, 3), (3, 4), (4, 0)]);
        let ladders = find_true_ladders(&fig);
        assert_eq!(ladders.len(), 1);
        assert_eq!(
            ladders[0].rungs,
            vec![
                Point::xy(1, 0),
                Point::xy(2, 1),
                Point::xy(2, 3),
                Point::xy(3, 4),
            ]
        );
        assert_eq!(ladders[0].landing, Point::xy(4, 4));
    }

    #[test]
    fn true_ladders_serpent() {
        let ladders = find_true_ladders(&serpent());
        assert_eq!(ladders.len(), 1);
        assert_eq!(ladders[0].rungs, vec![Point::xy(1, 0), Point::xy(2, 1)]);
        assert_eq!(ladders[0].landing, Point::xy(2, 2));
    }

    #[test]
    fn no_ladder_when_back_border_shared() {
        let x = Placement::from_xy(&[(0, 0), (1, -1)]);
        assert!(find_true_ladders(&x).is_empty());
    }

    #[test]
    fn ascent_detection() {
        assert!(has_ascent(&serpent()));
        let isolated = Placement::from_xy(&[(1, 0), (2, 1), (2, 2)]);
        assert!(!has_ascent(&isolated));
        let flat = Placement::from_xy(&[(0, 0), (1, -1)]);
        assert!(!has_ascent(&flat));
    }

    #[test]
    fn hop_parity_and_measure_conservation() {
        for m in legal_moves(&serpent(), None) {
            if m.kind() == MoveKind::Jump {
                let delta = m.destination.border_index() - m.origin.border_index();
                assert_eq!(delta.rem_euclid(2), 0);
                assert_eq!(m.origin.measure(), m.destination.measure());
            } else {
                assert_ne!(m.origin.measure(), m.destination.measure());
            }
        }
    }

    #[test]
    fn reconstructs_moves() {
        let s = serpent();
        let after = Placement::from_xy(&[(1, 0), (1, 1), (2, 1), (2, 2)]);
        let m = reconstruct_move(&s, &after, None).unwrap();
        assert_eq!(m.destination, Point::xy(2, 2));
        assert_eq!(m.kind(), MoveKind::Jump);
        assert!(reconstruct_move(&s, &s, None).is_err());
    }
}
