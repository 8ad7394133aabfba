//! Fixed-width character rendering of placements and trajectories.
//!
//! The origin sits at the lower left, pieces print as `●`, empty cells as
//! `.`, and the optional guides mode marks the occupied border band with `/`
//! along the anti-diagonals.

use crate::error::{Error, Result};
use crate::lattice::{Coord, Placement, Point};

#[derive(Clone, Copy, Debug, Default)]
pub struct RenderOptions {
    /// Draw `/` on empty cells whose border index lies between tail and head.
    pub guides: bool,
}

/// Render onto a `width x height` grid anchored at the origin. Points must
/// fit the grid.
pub fn render_placement(
    x: &Placement,
    width: Coord,
    height: Coord,
    opts: RenderOptions,
) -> Result<String> {
    if x.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: 2,
            right: x.dim(),
        });
    }
    for p in x.points() {
        let (px, py) = (p.coords[0], p.coords[1]);
        if px < 0 || py < 0 || px >= width || py >= height {
            return Err(Error::IllegalMove(format!(
                "point {p} does not fit a {width}x{height} grid"
            )));
        }
    }
    let (tail, head) = (x.tail(), x.head());
    let mut out = String::new();
    for y in (0..height).rev() {
        for px in 0..width {
            if x.contains(&Point::xy(px, y)) {
                out.push('●');
            } else if opts.guides && tail <= px + y && px + y <= head {
                out.push('/');
            } else {
                out.push('.');
            }
        }
        out.push('\n');
    }
    Ok(out)
}

/// Smallest origin-anchored grid that holds the placement.
pub fn grid_extent(x: &Placement) -> (Coord, Coord) {
    let w = x.points().iter().map(|p| p.coords[0]).max().unwrap() + 1;
    let h = x.points().iter().map(|p| p.coords[1]).max().unwrap() + 1;
    (w, h)
}

/// Parse a rendered grid back into a placement (origin at lower left).
pub fn parse_rendered(text: &str) -> Result<Placement> {
    let rows: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let height = rows.len() as Coord;
    let mut points = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let y = height - 1 - i as Coord;
        for (j, ch) in row.chars().enumerate() {
            if ch == '●' {
                points.push(Point::xy(j as Coord, y));
            }
        }
    }
    Placement::new(points)
}

/// Render every placement of a trajectory as one frame per placement.
pub fn render_frames(
    placements: &[Placement],
    width: Coord,
    height: Coord,
    opts: RenderOptions,
) -> Result<String> {
    let mut out = String::new();
    for (i, x) in placements.iter().enumerate() {
        out.push_str(&format!("frame {i}\n"));
        out.push_str(&render_placement(x, width, height, opts)?);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serpent_marks() {
        let serpent = Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)]);
        let grid = render_placement(&serpent, 3, 3, RenderOptions::default()).unwrap();
        assert_eq!(grid.matches('●').count(), 4);
        assert_eq!(grid, "...\n.●●\n●●.\n");
    }

    #[test]
    fn ladder_figure_marks() {
        let fig = Placement::from_xy(&[(0, 0), (1, 0), (2, 1), (2, 3), (3, 4), (4, 0)]);
        let grid = render_placement(&fig, 5, 5, RenderOptions::default()).unwrap();
        assert_eq!(grid.matches('●').count(), 6);
    }

    #[test]
    fn round_trip() {
        let x = Placement::from_xy(&[(0, 0), (2, 1), (1, 3)]);
        let (w, h) = grid_extent(&x);
        let grid = render_placement(&x, w, h, RenderOptions::default()).unwrap();
        assert_eq!(parse_rendered(&grid).unwrap(), x);
    }

    #[test]
    fn round_trip_with_guides() {
        let x = Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)]);
        let grid = render_placement(&x, 4, 4, RenderOptions { guides: true }).unwrap();
        assert!(grid.contains('/'));
        assert_eq!(parse_rendered(&grid).unwrap(), x);
    }

    #[test]
    fn rejects_out_of_grid() {
        let x = Placement::from_xy(&[(0, 0), (5, 0)]);
        assert!(render_placement(&x, 3, 3, RenderOptions::default()).is_err());
    }
}
