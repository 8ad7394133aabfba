//! Search bounds: boxes, depth caps, node caps.
//!
//! Every bounded result carries the bounds it was computed under. A verdict
//! obtained inside a box is only ever reported "within bounds"; nothing here
//! claims anything about the unbounded lattice.

use crate::lattice::{Coord, Placement, Point};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An inclusive integer box, one `[lo, hi]` range per dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundingBox {
    pub lo: Vec<Coord>,
    pub hi: Vec<Coord>,
}

impl BoundingBox {
    pub fn new(lo: Vec<Coord>, hi: Vec<Coord>) -> BoundingBox {
        assert_eq!(lo.len(), hi.len());
        assert!(lo.iter().zip(&hi).all(|(a, b)| a <= b), "empty box");
        BoundingBox { lo, hi }
    }

    /// A `sizes[0] x sizes[1] x ...` box anchored at the origin.
    pub fn at_origin(sizes: &[Coord]) -> BoundingBox {
        BoundingBox::new(vec![0; sizes.len()], sizes.iter().map(|s| s - 1).collect())
    }

    pub fn square(n: usize, size: Coord) -> BoundingBox {
        BoundingBox::at_origin(&vec![size; n])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn sizes(&self) -> Vec<Coord> {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(a, b)| b - a + 1)
            .collect()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.coords
            .iter()
            .enumerate()
            .all(|(i, &c)| self.lo[i] <= c && c <= self.hi[i])
    }

    pub fn contains_placement(&self, x: &Placement) -> bool {
        x.points().iter().all(|p| self.contains(p))
    }

    /// Whether a canonical placement fits the box extent, i.e. its points fit
    /// a box of the same sizes anchored at the origin.
    pub fn fits_extent(&self, canonical_points: &Placement) -> bool {
        let sizes = self.sizes();
        canonical_points
            .points()
            .iter()
            .all(|p| p.coords.iter().enumerate().all(|(i, &c)| 0 <= c && c < sizes[i]))
    }

    pub fn cell_count(&self) -> u64 {
        self.sizes().iter().map(|&s| s as u64).product()
    }
}

impl fmt::Display for BoundingBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.lo.iter().zip(&self.hi).enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "[{lo},{hi}]")?;
        }
        Ok(())
    }
}

/// Bounds for searches and verification sweeps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    /// The board (for absolute searches) or the extent cap on configurations
    /// (for translation-quotient analyses).
    pub bbox: BoundingBox,
    /// Optional cap on trajectory length / search depth.
    pub max_depth: Option<usize>,
    /// Optional cap on placement width (head - tail + 1).
    pub width_cap: Option<Coord>,
    /// Optional cap on explored states; exceeding it is reported, never
    /// silently truncated.
    pub node_cap: Option<usize>,
}

impl SearchBounds {
    pub fn boxed(bbox: BoundingBox) -> SearchBounds {
        SearchBounds {
            bbox,
            max_depth: None,
            width_cap: None,
            node_cap: None,
        }
    }

    pub fn square(n: usize, size: Coord) -> SearchBounds {
        SearchBounds::boxed(BoundingBox::square(n, size))
    }

    pub fn with_max_depth(mut self, d: usize) -> SearchBounds {
        self.max_depth = Some(d);
        self
    }

    pub fn with_node_cap(mut self, cap: usize) -> SearchBounds {
        self.node_cap = Some(cap);
        self
    }

    pub fn with_width_cap(mut self, cap: Coord) -> SearchBounds {
        self.width_cap = Some(cap);
        self
    }

    pub fn admits_width(&self, x: &Placement) -> bool {
        match self.width_cap {
            Some(cap) => x.width() <= cap,
            None => true,
        }
    }
}

impl fmt::Display for SearchBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "box {}", self.bbox)?;
        if let Some(d) = self.max_depth {
            write!(f, ", max depth {d}")?;
        }
        if let Some(w) = self.width_cap {
            write!(f, ", width cap {w}")?;
        }
        if let Some(n) = self.node_cap {
            write!(f, ", node cap {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_membership() {
        let b = BoundingBox::square(2, 5);
        assert!(b.contains(&Point::xy(0, 4)));
        assert!(!b.contains(&Point::xy(5, 0)));
        assert!(!b.contains(&Point::xy(-1, 0)));
        assert_eq!(b.sizes(), vec![5, 5]);
        assert_eq!(b.cell_count(), 25);
    }

    #[test]
    fn extent_fit_ignores_anchor() {
        let b = BoundingBox::new(vec![2, 2], vec![4, 4]);
        let canon = Placement::from_xy(&[(0, 0), (2, 2)]);
        assert!(b.fits_extent(&canon));
        let wide = Placement::from_xy(&[(0, 0), (3, 0)]);
        assert!(!b.fits_extent(&wide));
    }
}
