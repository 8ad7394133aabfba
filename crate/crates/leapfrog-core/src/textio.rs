//! Text formats for placements, trajectories and moves.
//!
//! Placements: one point per line as whitespace-separated integers, `#`
//! starts a comment line, blank lines are skipped, and the dimension is
//! inferred from the first point and enforced afterwards.
//!
//! Trajectories: placements in the same format separated by lines containing
//! only `--`.
//!
//! Moves (logs and goldens): `S x,y -> x',y'` for shifts and
//! `J x,y -> x',y' via a,b;c,d;...` for jumps, with the class appended as
//! `[A]`, `[FP]`, and so on.

use crate::error::{Error, Result};
use crate::lattice::{Placement, Point};
use crate::moves::{Move, MoveClass, MoveKind};

fn parse_point(line: &str, lineno: usize, expect_dim: Option<usize>) -> Result<Point> {
    let mut coords = Vec::new();
    for tok in line.split_whitespace() {
        let c = tok.parse::<i64>().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("not an integer: {tok:?}"),
        })?;
        coords.push(c);
    }
    if coords.is_empty() {
        return Err(Error::Parse {
            line: lineno,
            msg: "empty point".to_string(),
        });
    }
    if let Some(d) = expect_dim {
        if coords.len() != d {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected {d} coordinates, found {}", coords.len()),
            });
        }
    }
    Ok(Point::new(coords))
}

/// Parse one placement from text.
pub fn parse_placement(text: &str) -> Result<Placement> {
    let mut points: Vec<Point> = Vec::new();
    let mut dim = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = parse_point(line, lineno, dim)?;
        dim = Some(p.dim());
        points.push(p);
    }
    match Placement::new(points) {
        Ok(x) => Ok(x),
        Err(Error::EmptyPlacement) => Err(Error::Parse {
            line: last_line,
            msg: "no points in placement".to_string(),
        }),
        Err(Error::DuplicatePoint(p)) => Err(Error::Parse {
            line: last_line,
            msg: format!("duplicate point {p}"),
        }),
        Err(e) => Err(e),
    }
}

pub fn format_placement(x: &Placement) -> String {
    let mut out = String::new();
    for p in x.points() {
        let coords: Vec<String> = p.coords.iter().map(|c| c.to_string()).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

/// Parse a trajectory: placements separated by `--` lines.
pub fn parse_trajectory_placements(text: &str) -> Result<Vec<Placement>> {
    let mut chunks: Vec<String> = vec![String::new()];
    for raw in text.lines() {
        if raw.trim() == "--" {
            chunks.push(String::new());
        } else {
            let cur = chunks.last_mut().unwrap();
            cur.push_str(raw);
            cur.push('\n');
        }
    }
    chunks
        .iter()
        .filter(|c| {
            c.lines()
                .any(|l| !l.trim().is_empty() && !l.trim().starts_with('#'))
        })
        .map(|c| parse_placement(c))
        .collect()
}

pub fn format_trajectory_placements(placements: &[Placement]) -> String {
    placements
        .iter()
        .map(format_placement)
        .collect::<Vec<_>>()
        .join("--\n")
}

fn fmt_coords(p: &Point) -> String {
    p.coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_move(m: &Move) -> String {
    match m.kind() {
        MoveKind::Shift => format!("S {} -> {}", fmt_coords(&m.origin), fmt_coords(&m.destination)),
        MoveKind::Jump => {
            let via = m
                .hops
                .iter()
                .map(fmt_coords)
                .collect::<Vec<_>>()
                .join(";");
            format!(
                "J {} -> {} via {}",
                fmt_coords(&m.origin),
                fmt_coords(&m.destination),
                via
            )
        }
    }
}

pub fn format_move_with_class(m: &Move, class: MoveClass) -> String {
    format!("{} [{}]", format_move(m), class.abbrev())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_placement_with_comments() {
        let text = "# a serpent\n0 0\n1 0\n\n1 1\n2 1\n";
        let x = parse_placement(text).unwrap();
        assert_eq!(x, Placement::from_xy(&[(0, 0), (1, 0), (1, 1), (2, 1)]));
    }

    #[test]
    fn rejects_ragged_dimensions() {
        let err = parse_placement("0 0\n1 2 3\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn rejects_garbage_with_line_number() {
        let err = parse_placement("0 0\nx y\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn placement_roundtrip() {
        let x = Placement::from_xy(&[(0, 0), (2, -1), (1, 4)]);
        assert_eq!(parse_placement(&format_placement(&x)).unwrap(), x);
    }

    #[test]
    fn trajectory_roundtrip() {
        let a = Placement::from_xy(&[(0, 0), (1, 0)]);
        let b = Placement::from_xy(&[(1, 0), (2, 0)]);
        let text = format_trajectory_placements(&[a.clone(), b.clone()]);
        assert_eq!(parse_trajectory_placements(&text).unwrap(), vec![a, b]);
    }

    #[test]
    fn move_text_forms() {
        let s = Move::shift(Point::xy(0, 0), Point::xy(1, 0));
        assert_eq!(format_move(&s), "S 0,0 -> 1,0");
        let j = Move::jump(
            Point::xy(0, 0),
            Point::xy(2, 2),
            vec![Point::xy(1, 0), Point::xy(2, 1)],
        );
        assert_eq!(format_move(&j), "J 0,0 -> 2,2 via 1,0;2,1");
        assert_eq!(
            format_move_with_class(&j, MoveClass::Ascent),
            "J 0,0 -> 2,2 via 1,0;2,1 [A]"
        );
    }
}
