//! Placements on the integer lattice and their exact geometry.
//!
//! A placement is a finite set of distinct lattice points; all higher layers
//! (moves, trajectories, quotient graphs) are built on the operations here.
//! Points are kept sorted lexicographically so that placements have one
//! canonical in-memory form and occupancy tests are binary searches.

use crate::error::{Error, Result};
use crate::rational::{Rational, RationalVec};
use serde::{Deserialize, Serialize};
use std::fmt;

pub type Coord = i64;

/// A lattice point in `Z^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    pub coords: Vec<Coord>,
}

impl Point {
    pub fn new(coords: Vec<Coord>) -> Point {
        Point { coords }
    }

    pub fn xy(x: Coord, y: Coord) -> Point {
        Point { coords: vec![x, y] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// The border index: the (signed) sum of coordinates. Borders are the
    /// anti-diagonal level sets of this index.
    pub fn border_index(&self) -> Coord {
        self.coords.iter().sum()
    }

    /// Coordinates modulo 2, mapped into {0,1} for negative values too.
    pub fn measure(&self) -> Measure {
        Measure(self.coords.iter().map(|c| (c.rem_euclid(2)) as u8).collect())
    }

    pub fn translated(&self, by: &[Coord]) -> Point {
        Point {
            coords: self
                .coords
                .iter()
                .zip(by)
                .map(|(c, d)| c + d)
                .collect(),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A piece location taken modulo 2 in every coordinate. Jumps preserve it,
/// shifts never do.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Measure(pub Vec<u8>);

/// A finite set of distinct lattice points, the game state.
///
/// Points are stored sorted; two equal placements are representationally
/// identical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Placement {
    points: Vec<Point>,
}

impl Placement {
    pub fn new(mut points: Vec<Point>) -> Result<Placement> {
        if points.is_empty() {
            return Err(Error::EmptyPlacement);
        }
        let dim = points[0].dim();
        if dim == 0 {
            return Err(Error::DimensionMismatch { left: 0, right: 0 });
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: p.dim(),
                });
            }
        }
        points.sort();
        for w in points.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicatePoint(w[0].clone()));
            }
        }
        Ok(Placement { points })
    }

    /// Convenience constructor for 2-d placements in tests and examples.
    pub fn from_xy(pts: &[(Coord, Coord)]) -> Placement {
        Placement::new(pts.iter().map(|&(x, y)| Point::xy(x, y)).collect())
            .expect("valid 2-d placement")
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Exact centroid: coordinate sums over the placement size.
    pub fn centroid(&self) -> RationalVec {
        let n = self.dim();
        let mut sums = vec![0i128; n];
        for p in &self.points {
            for (i, c) in p.coords.iter().enumerate() {
                sums[i] += *c as i128;
            }
        }
        RationalVec::new(sums, self.size() as i128)
    }

    /// Sum of coordinates over all points, one integer per dimension. The
    /// centroid is this divided by the size; keeping the integer form around
    /// avoids rationals in the hot paths.
    pub fn coordinate_sums(&self) -> Vec<i128> {
        let mut sums = vec![0i128; self.dim()];
        for p in &self.points {
            for (i, c) in p.coords.iter().enumerate() {
                sums[i] += *c as i128;
            }
        }
        sums
    }

    /// Minimum occupied border index.
    pub fn tail(&self) -> Coord {
        self.points.iter().map(Point::border_index).min().unwrap()
    }

    /// Maximum occupied border index.
    pub fn head(&self) -> Coord {
        self.points.iter().map(Point::border_index).max().unwrap()
    }

    /// `head - tail + 1`; at least 1.
    pub fn width(&self) -> Coord {
        self.head() - self.tail() + 1
    }

    /// All points on the border with the given index.
    pub fn border(&self, index: Coord) -> Vec<Point> {
        self.points
            .iter()
            .filter(|p| p.border_index() == index)
            .cloned()
            .collect()
    }

    pub fn back_border(&self) -> Vec<Point> {
        self.border(self.tail())
    }

    pub fn front_border(&self) -> Vec<Point> {
        self.border(self.head())
    }

    pub fn translated(&self, by: &[Coord]) -> Placement {
        debug_assert_eq!(by.len(), self.dim());
        Placement {
            points: self.points.iter().map(|p| p.translated(by)).collect(),
        }
    }

    /// If `other` is a translate of `self`, the translation vector.
    pub fn translation_to(&self, other: &Placement) -> Option<Vec<Coord>> {
        if self.size() != other.size() || self.dim() != other.dim() {
            return None;
        }
        let a: Vec<Coord> = other.points[0]
            .coords
            .iter()
            .zip(&self.points[0].coords)
            .map(|(b, a)| b - a)
            .collect();
        // Sorted order is translation invariant, so a pointwise check works.
        for (p, q) in self.points.iter().zip(&other.points) {
            for i in 0..self.dim() {
                if p.coords[i] + a[i] != q.coords[i] {
                    return None;
                }
            }
        }
        Some(a)
    }

    /// Translate so that every coordinate's minimum is zero.
    pub fn canonicalize(&self) -> Canonical {
        let n = self.dim();
        let mut mins = self.points[0].coords.clone();
        for p in &self.points[1..] {
            for i in 0..n {
                if p.coords[i] < mins[i] {
                    mins[i] = p.coords[i];
                }
            }
        }
        let shift: Vec<Coord> = mins.iter().map(|m| -m).collect();
        Canonical {
            placement: self.translated(&shift),
            offset: Point::new(mins),
        }
    }

    /// Componentwise extent: `max - min + 1` per dimension.
    pub fn extent(&self) -> Vec<Coord> {
        let n = self.dim();
        let mut mins = self.points[0].coords.clone();
        let mut maxs = self.points[0].coords.clone();
        for p in &self.points[1..] {
            for i in 0..n {
                mins[i] = mins[i].min(p.coords[i]);
                maxs[i] = maxs[i].max(p.coords[i]);
            }
        }
        (0..n).map(|i| maxs[i] - mins[i] + 1).collect()
    }
}

impl fmt::Debug for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// A placement translated to the all-minima-zero representative, plus the
/// subtracted offset. Two placements are translates exactly when their
/// canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Canonical {
    placement: Placement,
    offset: Point,
}

impl Canonical {
    pub fn placement(&self) -> &Placement {
        &self.placement
    }

    /// The translation that was removed: `original = canonical + offset`.
    pub fn offset(&self) -> &Point {
        &self.offset
    }

    pub fn into_placement(self) -> Placement {
        self.placement
    }
}

/// `sum_i |c_i(X) - c_i(Y)|` over the exact centroids.
pub fn displacement(x: &Placement, y: &Placement) -> Result<Rational> {
    if x.size() != y.size() {
        return Err(Error::SizeMismatch {
            left: x.size(),
            right: y.size(),
        });
    }
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    Ok(x.centroid().l1_distance(&y.centroid()))
}
