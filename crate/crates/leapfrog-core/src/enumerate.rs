//! Exhaustive enumeration of canonical placements.
//!
//! A canonical placement of `p` pieces fits an extent box when every
//! coordinate lies in `[0, size_i)` and every coordinate's minimum over the
//! placement is zero. Enumeration walks cell-index combinations in
//! lexicographic order, which makes every sweep in the crate deterministic.

use crate::lattice::{Coord, Placement, Point};

/// Iterator over all canonical placements of `p` points inside the extent,
/// each exactly once, in lexicographic order of their sorted point lists.
pub struct CanonicalPlacements {
    sizes: Vec<Coord>,
    p: usize,
    total: usize,
    // Current combination of cell indices, ascending; empty when done.
    combo: Vec<usize>,
    started: bool,
}

impl CanonicalPlacements {
    pub fn new(p: usize, sizes: &[Coord]) -> CanonicalPlacements {
        assert!(p >= 1, "placement size must be at least 1");
        assert!(!sizes.is_empty() && sizes.iter().all(|&s| s >= 1), "empty box");
        let total: usize = sizes.iter().map(|&s| s as usize).product();
        CanonicalPlacements {
            sizes: sizes.to_vec(),
            p,
            total,
            combo: (0..p).collect(),
            started: false,
        }
    }

    fn cell_to_point(&self, mut idx: usize) -> Point {
        // Row-major with dimension 0 most significant, matching point order.
        let n = self.sizes.len();
        let mut coords = vec![0; n];
        for i in (0..n).rev() {
            let s = self.sizes[i] as usize;
            coords[i] = (idx % s) as Coord;
            idx /= s;
        }
        Point::new(coords)
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return self.p <= self.total;
        }
        let p = self.p;
        let n = self.total;
        let mut i = p as isize - 1;
        while i >= 0 && self.combo[i as usize] == n - p + i as usize {
            i -= 1;
        }
        if i < 0 {
            return false;
        }
        let i = i as usize;
        self.combo[i] += 1;
        for j in i + 1..p {
            self.combo[j] = self.combo[j - 1] + 1;
        }
        true
    }

    fn is_canonical(&self, points: &[Point]) -> bool {
        let n = self.sizes.len();
        (0..n).all(|i| points.iter().map(|p| p.coords[i]).min() == Some(0))
    }
}

impl Iterator for CanonicalPlacements {
    type Item = Placement;

    fn next(&mut self) -> Option<Placement> {
        loop {
            if !self.advance() {
                return None;
            }
            let points: Vec<Point> = self
                .combo
                .iter()
                .map(|&c| self.cell_to_point(c))
                .collect();
            if self.is_canonical(&points) {
                return Some(Placement::new(points).expect("cells are distinct"));
            }
        }
    }
}

/// Number of canonical placements of `p` points inside the extent.
pub fn count_canonical(p: usize, sizes: &[Coord]) -> u64 {
    CanonicalPlacements::new(p, sizes).count() as u64
}

/// Pack a placement whose coordinates fit `[0, 2^bits)` into one integer key.
/// Positional, not hashed: distinct placements get distinct keys.
pub fn pack_placement(x: &Placement, bits: u32) -> u128 {
    debug_assert!(x.size() as u32 * x.dim() as u32 * bits <= 128, "key overflow");
    let mut key: u128 = 0;
    for p in x.points() {
        for &c in &p.coords {
            debug_assert!(0 <= c && (c as u128) < (1u128 << bits));
            key = (key << bits) | c as u128;
        }
    }
    key
}

/// Smallest bit width that can hold coordinates in `[0, max_coord]`.
pub fn bits_for(max_coord: Coord) -> u32 {
    debug_assert!(max_coord >= 0);
    (64 - (max_coord as u64).leading_zeros()).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_in_two_by_two() {
        let all: Vec<Placement> = CanonicalPlacements::new(1, &[2, 2]).collect();
        assert_eq!(all, vec![Placement::from_xy(&[(0, 0)])]);
    }

    #[test]
    fn pairs_in_two_by_two() {
        let all: Vec<Placement> = CanonicalPlacements::new(2, &[2, 2]).collect();
        // Of the six 2-subsets, the canonical ones have min 0 in both axes.
        assert_eq!(
            all,
            vec![
                Placement::from_xy(&[(0, 0), (0, 1)]),
                Placement::from_xy(&[(0, 0), (1, 0)]),
                Placement::from_xy(&[(0, 0), (1, 1)]),
                Placement::from_xy(&[(0, 1), (1, 0)]),
            ]
        );
    }

    #[test]
    fn counts_match_brute_filter() {
        // Independent oracle: filter all subsets by the canonical predicate.
        fn brute(p: usize, w: i64, h: i64) -> u64 {
            let cells: Vec<(i64, i64)> = (0..w).flat_map(|x| (0..h).map(move |y| (x, y))).collect();
            let mut count = 0;
            let mut pick = vec![0usize; p];
            fn rec(
                cells: &[(i64, i64)],
                pick: &mut Vec<usize>,
                depth: usize,
                start: usize,
                count: &mut u64,
            ) {
                if depth == pick.len() {
                    let min_x = pick.iter().map(|&i| cells[i].0).min().unwrap();
                    let min_y = pick.iter().map(|&i| cells[i].1).min().unwrap();
                    if min_x == 0 && min_y == 0 {
                        *count += 1;
                    }
                    return;
                }
                for i in start..cells.len() {
                    pick[depth] = i;
                    rec(cells, pick, depth + 1, i + 1, count);
                }
            }
            rec(&cells, &mut pick, 0, 0, &mut count);
            count
        }

        for (p, w, h) in [(1, 3, 3), (2, 3, 3), (3, 3, 3), (2, 4, 2), (3, 4, 4)] {
            assert_eq!(
                count_canonical(p, &[w, h]),
                brute(p, w, h),
                "p={p} box {w}x{h}"
            );
        }
    }

    #[test]
    fn counts_match_inclusion_exclusion() {
        // Second oracle: #canonical = C(WH,p) - C((W-1)H,p) - C(W(H-1),p)
        //                             + C((W-1)(H-1),p).
        fn binom(n: u64, k: u64) -> u64 {
            if k > n {
                return 0;
            }
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        fn incl_excl(p: u64, w: u64, h: u64) -> u64 {
            (binom(w * h, p) as i128 - binom((w - 1) * h, p) as i128
                - binom(w * (h - 1), p) as i128
                + binom((w - 1) * (h - 1), p) as i128) as u64
        }
        for (p, w, h) in [(2u64, 5i64, 5i64), (3, 5, 5), (4, 4, 4), (5, 4, 4)] {
            assert_eq!(
                count_canonical(p as usize, &[w, h]),
                incl_excl(p, w as u64, h as u64)
            );
        }
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let all: Vec<Placement> = CanonicalPlacements::new(3, &[4, 4]).collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn packing_is_injective_on_small_box() {
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        for x in CanonicalPlacements::new(3, &[4, 4]) {
            assert!(seen.insert(pack_placement(&x, 3)));
        }
    }

    #[test]
    fn bit_widths() {
        assert_eq!(bits_for(0), 1);
        assert_eq!(bits_for(1), 1);
        assert_eq!(bits_for(4), 3);
        assert_eq!(bits_for(63), 6);
    }
}
