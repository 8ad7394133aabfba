//! Bit-packed trajectory enumeration for the exhaustive property sweeps.
//!
//! Sweeps over all bounded trajectories visit hundreds of millions of states,
//! so this module keeps boards in a `u64` occupancy mask and pieces as sorted
//! cell indices. Move generation here must agree exactly with the generic
//! engine; the test suite compares the two move by move over exhaustive
//! state enumerations.

use crate::lattice::{Coord, Placement, Point};
use crate::moves::MoveClass;

/// Enumerator of all bounded trajectories of limited length from one start.
pub struct Sweep {
    pub width: i64,
    pub height: i64,
    pub max_len: usize,
}

/// A trajectory prefix handed to the visitor at every enumeration node.
pub struct Prefix<'a> {
    /// Number of moves taken; at least 1.
    pub depth: usize,
    pub classes: &'a [MoveClass],
    /// Twice the weight of the moveset so far.
    pub weight2: i64,
    /// Whether two consecutive ascents occur anywhere in the prefix.
    pub has_double_ascent: bool,
    /// When the current placement is a translate of the start, the vector.
    pub translation: Option<(i64, i64)>,
    /// Per-move `(from, to)` cells, for counterexample reconstruction.
    pub steps: &'a [(u8, u8)],
}

struct State {
    width: i64,
    height: i64,
    mask: u64,
    pieces: Vec<u8>,
    start_pieces: Vec<u8>,
    classes: Vec<MoveClass>,
    steps: Vec<(u8, u8)>,
    weight2: Vec<i64>,
    double_ascent: Vec<bool>,
    move_buf: Vec<Vec<(u8, u8)>>,
}

impl State {
    #[inline]
    fn xy(&self, cell: u8) -> (i64, i64) {
        ((cell as i64) / self.height, (cell as i64) % self.height)
    }

    #[inline]
    fn cell(&self, x: i64, y: i64) -> u8 {
        (x * self.height + y) as u8
    }

    #[inline]
    fn border(&self, cell: u8) -> i64 {
        let (x, y) = self.xy(cell);
        x + y
    }

    fn tail_head(&self) -> (i64, i64) {
        let mut t = i64::MAX;
        let mut h = i64::MIN;
        for &c in &self.pieces {
            let b = self.border(c);
            t = t.min(b);
            h = h.max(b);
        }
        (t, h)
    }

    /// All legal moves as `(from, to)` cells, sorted. One entry per jump
    /// landing, matching the engine's one-move-per-target rule.
    fn gen_moves(&self, out: &mut Vec<(u8, u8)>) {
        out.clear();
        let dirs = [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)];
        for &from in &self.pieces {
            let (x, y) = self.xy(from);
            let occ_wo = self.mask & !(1u64 << from);
            // Shifts.
            for (dx, dy) in dirs {
                let (nx, ny) = (x + dx, y + dy);
                if nx < 0 || ny < 0 || nx >= self.width || ny >= self.height {
                    continue;
                }
                let to = self.cell(nx, ny);
                if occ_wo >> to & 1 == 0 {
                    out.push((from, to));
                }
            }
            // Jump closure: breadth-first with visited-landing dedup; the
            // origin square is vacated and never re-landed.
            let mut visited: u64 = 1u64 << from;
            let mut frontier = [0u8; 64];
            frontier[0] = from;
            let mut flen = 1usize;
            while flen > 0 {
                let mut next = [0u8; 64];
                let mut nlen = 0usize;
                for &pos in &frontier[..flen] {
                    let (px, py) = self.xy(pos);
                    for (dx, dy) in dirs {
                        let (rx, ry) = (px + dx, py + dy);
                        let (lx, ly) = (px + 2 * dx, py + 2 * dy);
                        if lx < 0 || ly < 0 || lx >= self.width || ly >= self.height {
                            continue;
                        }
                        let rung = self.cell(rx, ry);
                        if occ_wo >> rung & 1 == 0 {
                            continue;
                        }
                        let land = self.cell(lx, ly);
                        if occ_wo >> land & 1 == 1 || visited >> land & 1 == 1 {
                            continue;
                        }
                        visited |= 1u64 << land;
                        out.push((from, land));
                        next[nlen] = land;
                        nlen += 1;
                    }
                }
                frontier = next;
                flen = nlen;
            }
        }
        out.sort_unstable();
    }

    fn apply(&mut self, from: u8, to: u8) {
        self.mask = (self.mask & !(1u64 << from)) | 1u64 << to;
        let at = self.pieces.iter().position(|&c| c == from).unwrap();
        self.pieces.remove(at);
        let ins = self.pieces.partition_point(|&c| c < to);
        self.pieces.insert(ins, to);
    }

    fn translation(&self) -> Option<(i64, i64)> {
        let (sx, sy) = self.xy(self.start_pieces[0]);
        let (cx, cy) = self.xy(self.pieces[0]);
        let (dx, dy) = (cx - sx, cy - sy);
        for i in 1..self.pieces.len() {
            let (ax, ay) = self.xy(self.start_pieces[i]);
            let (bx, by) = self.xy(self.pieces[i]);
            if bx != ax + dx || by != ay + dy {
                return None;
            }
        }
        Some((dx, dy))
    }
}

impl Sweep {
    pub fn new(width: i64, height: i64, max_len: usize) -> Sweep {
        assert!(width * height <= 64, "sweep boards are capped at 64 cells");
        Sweep {
            width,
            height,
            max_len,
        }
    }

    /// Convert a placement inside the box to sorted cell indices.
    pub fn cells_of(&self, x: &Placement) -> Vec<u8> {
        let mut cells: Vec<u8> = x
            .points()
            .iter()
            .map(|p| (p.coords[0] * self.height + p.coords[1]) as u8)
            .collect();
        cells.sort_unstable();
        cells
    }

    /// Rebuild a placement from cell indices.
    pub fn placement_of(&self, cells: &[u8]) -> Placement {
        Placement::new(
            cells
                .iter()
                .map(|&c| {
                    Point::xy(
                        (c as i64) / self.height as Coord,
                        (c as i64) % self.height as Coord,
                    )
                })
                .collect(),
        )
        .expect("cells are distinct")
    }

    /// Enumerate every trajectory of length 1..=max_len from `start`,
    /// depth-first in sorted move order, invoking the visitor at every
    /// prefix.
    pub fn run<F: FnMut(&Prefix)>(&self, start: &Placement, visit: &mut F) {
        let pieces = self.cells_of(start);
        let mask = pieces.iter().fold(0u64, |m, &c| m | 1u64 << c);
        let mut st = State {
            width: self.width,
            height: self.height,
            mask,
            pieces: pieces.clone(),
            start_pieces: pieces,
            classes: Vec::with_capacity(self.max_len),
            steps: Vec::with_capacity(self.max_len),
            weight2: vec![0],
            double_ascent: vec![false],
            move_buf: (0..=self.max_len).map(|_| Vec::new()).collect(),
        };
        self.dfs(&mut st, 0, visit);
    }

    fn dfs<F: FnMut(&Prefix)>(&self, st: &mut State, depth: usize, visit: &mut F) {
        if depth == self.max_len {
            return;
        }
        let (t0, h0) = st.tail_head();
        let mut moves = std::mem::take(&mut st.move_buf[depth]);
        st.gen_moves(&mut moves);
        for &(from, to) in &moves {
            st.apply(from, to);
            let (t1, h1) = st.tail_head();
            let class = match ((t1 - t0).signum(), (h1 - h0).signum()) {
                (1, 1) => MoveClass::Ascent,
                (0, 1) => MoveClass::FrontPush,
                (1, 0) => MoveClass::BackPush,
                (0, 0) => MoveClass::DeadMove,
                (0, -1) => MoveClass::FrontRetreat,
                (-1, 0) => MoveClass::BackRetreat,
                (-1, -1) => MoveClass::ReverseAscent,
                _ => unreachable!("tail and head cannot move in opposite directions"),
            };
            let double = st.double_ascent[depth]
                || (class == MoveClass::Ascent
                    && depth > 0
                    && st.classes[depth - 1] == MoveClass::Ascent);
            st.classes.push(class);
            st.steps.push((from, to));
            st.weight2.push(st.weight2[depth] + class.weight_x2());
            st.double_ascent.push(double);

            visit(&Prefix {
                depth: depth + 1,
                classes: &st.classes,
                weight2: st.weight2[depth + 1],
                has_double_ascent: double,
                translation: st.translation(),
                steps: &st.steps,
            });
            self.dfs(st, depth + 1, visit);

            st.classes.pop();
            st.steps.pop();
            st.weight2.pop();
            st.double_ascent.pop();
            st.apply(to, from);
        }
        st.move_buf[depth] = moves;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::BoundingBox;
    use crate::enumerate::CanonicalPlacements;
    use crate::moves::{apply_move, classify_transition, legal_moves};

    /// The bit-packed move generator agrees with the engine, exhaustively,
    /// on every 3-or-fewer-piece state of a 4x4 board.
    #[test]
    fn move_generation_matches_engine() {
        let bbox = BoundingBox::square(2, 4);
        let sweep = Sweep::new(4, 4, 1);
        for p in 1..=3 {
            // All placements, not only canonical ones: enumerate canonical
            // and retranslate across the box.
            for canon in CanonicalPlacements::new(p, &[4, 4]) {
                let ext = canon.extent();
                for dx in 0..=(4 - ext[0]) {
                    for dy in 0..=(4 - ext[1]) {
                        let x = canon.translated(&[dx, dy]);
                        let engine: Vec<((i64, i64), (i64, i64), MoveClass)> =
                            legal_moves(&x, Some(&bbox))
                                .iter()
                                .map(|m| {
                                    let after = apply_move(&x, m, Some(&bbox)).unwrap();
                                    (
                                        (m.origin.coords[0], m.origin.coords[1]),
                                        (m.destination.coords[0], m.destination.coords[1]),
                                        classify_transition(&x, &after),
                                    )
                                })
                                .collect();
                        let mut fast = Vec::new();
                        sweep.run(&x, &mut |pfx: &Prefix| {
                            if pfx.depth == 1 {
                                let (from, to) = pfx.steps[0];
                                fast.push((
                                    (from as i64 / 4, from as i64 % 4),
                                    (to as i64 / 4, to as i64 % 4),
                                    pfx.classes[0],
                                ));
                            }
                        });
                        assert_eq!(engine, fast, "state {x:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn translation_detection_matches_engine() {
        let sweep = Sweep::new(4, 4, 3);
        let start = Placement::from_xy(&[(0, 0), (1, 0)]);
        let mut seen_translate = false;
        sweep.run(&start, &mut |pfx: &Prefix| {
            if let Some((dx, dy)) = pfx.translation {
                seen_translate = true;
                let cur = sweep.placement_of(
                    &pfx.steps
                        .iter()
                        .fold(sweep.cells_of(&start), |mut cells, &(f, t)| {
                            let at = cells.iter().position(|&c| c == f).unwrap();
                            cells.remove(at);
                            let ins = cells.partition_point(|&c| c < t);
                            cells.insert(ins, t);
                            cells
                        }),
                );
                assert_eq!(start.translation_to(&cur), Some(vec![dx, dy]));
            }
        });
        assert!(seen_translate);
    }

    #[test]
    fn weight_accumulates() {
        let sweep = Sweep::new(3, 3, 2);
        let start = Placement::from_xy(&[(0, 0)]);
        sweep.run(&start, &mut |pfx: &Prefix| {
            let direct: i64 = pfx.classes.iter().map(|c| c.weight_x2()).sum();
            assert_eq!(direct, pfx.weight2);
        });
    }
}
