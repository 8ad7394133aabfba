//! Longest chains of consecutive ascents.
//!
//! Start placements are enumerated inside the bounds; the ascent chains
//! themselves are free to grow past the box (an ascent can land one border
//! beyond the head, so successors may exceed the start extent). Chains are
//! memoized on canonical states; a cycle of ascents, like the serpent's,
//! means the chain is unbounded and is reported as hitting the cap.

use crate::bounds::SearchBounds;
use crate::enumerate::{bits_for, CanonicalPlacements};
use crate::lattice::Placement;
use crate::moves::ascent_successors;
use std::collections::HashMap;

/// Exact maximum, or a cap hit (the true value is at least the cap).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscentCount {
    Exact(u32),
    AtLeast(u32),
}

impl AscentCount {
    pub fn is_at_least(&self, k: u32) -> bool {
        match *self {
            AscentCount::Exact(v) => v >= k,
            AscentCount::AtLeast(v) => v >= k,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AscentSweep {
    pub result: AscentCount,
    /// Canonical start placements examined.
    pub starts_examined: u64,
    /// First enumerated start attaining the maximum.
    pub best_start: Option<Placement>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Memo {
    /// True value, independent of budget.
    Exact(u32),
    /// True value is at least this; recorded when a budget ran out.
    AtLeast(u32),
    /// On the current DFS stack; reaching it again closes an ascent cycle.
    Gray,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Val {
    Exact(u32),
    AtLeast(u32),
}

impl Val {
    fn bump(self) -> Val {
        match self {
            Val::Exact(v) => Val::Exact(v + 1),
            Val::AtLeast(v) => Val::AtLeast(v.saturating_add(1)),
        }
    }

    fn value(&self) -> u32 {
        match *self {
            Val::Exact(v) | Val::AtLeast(v) => v,
        }
    }

    fn max(self, other: Val) -> Val {
        if other.value() > self.value() {
            other
        } else if other.value() == self.value() {
            // An open bound dominates an exact value of the same size.
            match (self, other) {
                (Val::Exact(_), Val::AtLeast(v)) => Val::AtLeast(v),
                _ => self,
            }
        } else {
            self
        }
    }
}

struct Dfs {
    memo: HashMap<u128, Memo>,
    bits: u32,
    cap: u32,
}

impl Dfs {
    fn key(&self, canonical: &Placement) -> u128 {
        crate::enumerate::pack_placement(canonical, self.bits)
    }

    fn run(&mut self, canonical: &Placement, budget: u32) -> Val {
        let key = self.key(canonical);
        match self.memo.get(&key) {
            Some(Memo::Exact(v)) => return Val::Exact(*v),
            // A cycle of ascents repeats forever.
            Some(Memo::Gray) => return Val::AtLeast(u32::MAX),
            Some(Memo::AtLeast(t)) if *t >= budget => return Val::AtLeast(*t),
            _ => {}
        }
        if budget == 0 {
            return Val::AtLeast(0);
        }
        let successors = ascent_successors(canonical);
        if successors.is_empty() {
            // The common case; skipping the memo keeps the table small on
            // multi-million-placement sweeps.
            return Val::Exact(0);
        }
        self.memo.insert(key, Memo::Gray);
        let mut best = Val::Exact(0);
        for succ in successors {
            let c = succ.canonicalize().into_placement();
            best = best.max(self.run(&c, budget - 1).bump());
            if best.value() >= self.cap {
                break;
            }
        }
        let entry = match best {
            Val::Exact(v) => Memo::Exact(v),
            Val::AtLeast(v) => Memo::AtLeast(v),
        };
        self.memo.insert(key, entry);
        best
    }
}

/// Maximum number of consecutive ascents available from any canonical
/// placement of `p` pieces within the bounds, depth-first with memoization,
/// truncated at `cap`.
pub fn max_consecutive_ascents(p: usize, bounds: &SearchBounds, cap: u32) -> AscentSweep {
    let sizes = bounds.bbox.sizes();
    let n = sizes.len();
    // Chains grow at most two cells per ascent in any direction.
    let max_coord = sizes.iter().copied().max().unwrap() - 1 + 2 * cap as i64;
    let bits = bits_for(max_coord);
    assert!(
        p as u32 * n as u32 * bits <= 128,
        "state space too large to pack"
    );

    let mut dfs = Dfs {
        memo: HashMap::new(),
        bits,
        cap,
    };
    let mut best = Val::Exact(0);
    let mut best_start = None;
    let mut examined = 0u64;
    for start in CanonicalPlacements::new(p, &sizes) {
        if !bounds.admits_width(&start) {
            continue;
        }
        examined += 1;
        let v = dfs.run(&start, cap);
        let improves = v.value() > best.value()
            || (v.value() == best.value()
                && matches!((best, v), (Val::Exact(_), Val::AtLeast(_))));
        if improves {
            best = v;
            best_start = Some(start);
        }
    }
    let result = match best {
        Val::Exact(v) => AscentCount::Exact(v),
        Val::AtLeast(v) => AscentCount::AtLeast(v.min(cap)),
    };
    AscentSweep {
        result,
        starts_examined: examined,
        best_start,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_pieces_cannot_double_ascend() {
        let sweep = max_consecutive_ascents(3, &SearchBounds::square(2, 4), 6);
        assert_eq!(sweep.result, AscentCount::Exact(1));
    }

    #[test]
    fn serpent_ascends_forever() {
        let sweep = max_consecutive_ascents(4, &SearchBounds::square(2, 4), 10);
        assert_eq!(sweep.result, AscentCount::AtLeast(10));
    }

    #[test]
    fn atom_ascends_forever() {
        let sweep = max_consecutive_ascents(1, &SearchBounds::square(2, 2), 5);
        assert_eq!(sweep.result, AscentCount::AtLeast(5));
    }

    #[test]
    fn two_pieces_in_tiny_box() {
        // The frog ascends by jumping forever.
        let sweep = max_consecutive_ascents(2, &SearchBounds::square(2, 3), 7);
        assert_eq!(sweep.result, AscentCount::AtLeast(7));
    }
}
