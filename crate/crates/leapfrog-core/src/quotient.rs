//! The translation-quotient graph.
//!
//! Nodes are canonical placements whose extent fits the bounds box; edges are
//! legal moves on the unbounded lattice whose successors, re-canonicalized,
//! still fit. Each edge keeps the mover's displacement vector (the change of
//! the placement's coordinate sums), taken before canonicalization discards
//! the offset, so cycles accumulate true translation.
//!
//! A trajectory between two translates of a configuration is exactly a closed
//! walk at that configuration's node, which reduces configuration-speed
//! questions to maximum-mean-cycle questions.

use crate::bounds::SearchBounds;
use crate::enumerate::{bits_for, pack_placement, CanonicalPlacements};
use crate::error::{Error, Result};
use crate::lattice::{Coord, Placement};
use crate::mmc::EdgeGraph;
use crate::moves::{apply_move, legal_moves, Move};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct QuotientGraph {
    /// Canonical placements, indexed by node id, in deterministic order.
    pub nodes: Vec<Placement>,
    /// CSR offsets: edges of node `u` are `off[u]..off[u+1]`.
    pub off: Vec<u32>,
    /// Edge targets.
    pub dst: Vec<u32>,
    /// Per-edge displacement vectors, flattened with stride `n`.
    pub dsum: Vec<i64>,
    /// Per-edge ordinal of the move in `legal_moves(nodes[u], None)`.
    pub move_ordinal: Vec<u16>,
    /// Per-edge flag: the jump chain contains a negative-direction hop.
    pub mixed_chain: Vec<bool>,
    pub p: usize,
    pub n: usize,
    pub sizes: Vec<Coord>,
}

impl QuotientGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.dst.len()
    }

    pub fn edge_dsum(&self, e: usize) -> &[i64] {
        &self.dsum[e * self.n..(e + 1) * self.n]
    }

    /// The move realizing edge `e`, in the coordinate frame of the canonical
    /// source placement.
    pub fn edge_move(&self, u: usize, e: usize) -> Move {
        legal_moves(&self.nodes[u], None)[self.move_ordinal[e] as usize].clone()
    }

    /// Scalar weights `sigma . dsum` for a sign vector.
    pub fn weighted(&self, sigma: &[i64]) -> EdgeGraph {
        debug_assert_eq!(sigma.len(), self.n);
        let w: Vec<i64> = (0..self.edge_count())
            .map(|e| {
                self.edge_dsum(e)
                    .iter()
                    .zip(sigma)
                    .map(|(d, s)| d * s)
                    .sum()
            })
            .collect();
        EdgeGraph {
            off: self.off.clone(),
            dst: self.dst.clone(),
            w,
        }
    }

    /// Same, restricted to moves whose hop chains never step in a negative
    /// direction. Excluded edges are dropped and offsets rebuilt.
    pub fn weighted_forward_only(&self, sigma: &[i64]) -> EdgeGraph {
        let v = self.node_count();
        let mut edges: Vec<(u32, u32, i64)> = Vec::new();
        for u in 0..v {
            for e in self.off[u] as usize..self.off[u + 1] as usize {
                if self.mixed_chain[e] {
                    continue;
                }
                let w: i64 = self
                    .edge_dsum(e)
                    .iter()
                    .zip(sigma)
                    .map(|(d, s)| d * s)
                    .sum();
                edges.push((u as u32, self.dst[e], w));
            }
        }
        EdgeGraph::from_edges(v, &edges)
    }

    /// Connected components (moves are reversible, so weak components are
    /// reachability classes). Returns per-node component ids.
    pub fn components(&self) -> Vec<u32> {
        let v = self.node_count();
        let mut comp = vec![u32::MAX; v];
        let mut next = 0u32;
        let mut stack = Vec::new();
        // Reverse adjacency matches forward adjacency in this graph, but
        // build it anyway rather than rely on symmetry.
        let mut rev: Vec<Vec<u32>> = vec![Vec::new(); v];
        for u in 0..v {
            for e in self.off[u] as usize..self.off[u + 1] as usize {
                rev[self.dst[e] as usize].push(u as u32);
            }
        }
        for s in 0..v {
            if comp[s] != u32::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s as u32);
            while let Some(u) = stack.pop() {
                let u = u as usize;
                for e in self.off[u] as usize..self.off[u + 1] as usize {
                    let t = self.dst[e] as usize;
                    if comp[t] == u32::MAX {
                        comp[t] = next;
                        stack.push(t as u32);
                    }
                }
                for &t in &rev[u] {
                    if comp[t as usize] == u32::MAX {
                        comp[t as usize] = next;
                        stack.push(t);
                    }
                }
            }
            next += 1;
        }
        comp
    }
}

fn key_bits(sizes: &[Coord]) -> u32 {
    bits_for(sizes.iter().copied().max().unwrap() - 1)
}

struct Builder {
    sizes: Vec<Coord>,
    bits: u32,
    nodes: Vec<Placement>,
    index: HashMap<u128, u32>,
    off: Vec<u32>,
    dst: Vec<u32>,
    dsum: Vec<i64>,
    move_ordinal: Vec<u16>,
    mixed_chain: Vec<bool>,
}

impl Builder {
    fn fits(&self, canonical: &Placement) -> bool {
        canonical.points().iter().all(|pt| {
            pt.coords
                .iter()
                .enumerate()
                .all(|(i, &c)| c < self.sizes[i])
        })
    }

    /// Generate all edges of node `u`; `discover` maps a canonical successor
    /// to a node id (or rejects it with `None`).
    fn expand(&mut self, u: usize, mut discover: impl FnMut(&mut Self, Placement) -> Option<u32>) {
        let x = self.nodes[u].clone();
        let n = x.dim();
        for (ord, m) in legal_moves(&x, None).iter().enumerate() {
            let next = apply_move(&x, m, None).expect("generated move is legal");
            let canonical = next.canonicalize().into_placement();
            if !self.fits(&canonical) {
                continue;
            }
            let Some(t) = discover(self, canonical) else {
                continue;
            };
            self.dst.push(t);
            for i in 0..n {
                self.dsum
                    .push(m.destination.coords[i] - m.origin.coords[i]);
            }
            self.move_ordinal.push(ord as u16);
            self.mixed_chain.push(m.has_negative_hop());
        }
        self.off.push(self.dst.len() as u32);
    }
}

/// Build the quotient graph over every canonical placement fitting the
/// bounds, in enumeration order.
pub fn build_full(p: usize, bounds: &SearchBounds) -> QuotientGraph {
    let sizes = bounds.bbox.sizes();
    let n = sizes.len();
    let bits = key_bits(&sizes);
    let mut b = Builder {
        sizes: sizes.clone(),
        bits,
        nodes: Vec::new(),
        index: HashMap::new(),
        off: vec![0],
        dst: Vec::new(),
        dsum: Vec::new(),
        move_ordinal: Vec::new(),
        mixed_chain: Vec::new(),
    };
    for x in CanonicalPlacements::new(p, &sizes) {
        if !bounds.admits_width(&x) {
            continue;
        }
        let key = pack_placement(&x, bits);
        b.index.insert(key, b.nodes.len() as u32);
        b.nodes.push(x);
    }
    for u in 0..b.nodes.len() {
        expand_known(&mut b, u, bounds);
    }
    finish(b, p, n, sizes)
}

fn expand_known(b: &mut Builder, u: usize, bounds: &SearchBounds) {
    b.expand(u, |b, canonical| {
        if !bounds.admits_width(&canonical) {
            return None;
        }
        let key = pack_placement(&canonical, b.bits);
        Some(
            *b.index
                .get(&key)
                .expect("successor inside the box was enumerated"),
        )
    });
}

/// Build the subgraph reachable from a seed configuration, breadth-first in
/// deterministic move order. Errors when a node cap is exceeded.
pub fn build_reachable(seed: &Placement, bounds: &SearchBounds) -> Result<QuotientGraph> {
    let sizes = bounds.bbox.sizes();
    let n = sizes.len();
    if n != seed.dim() {
        return Err(Error::DimensionMismatch {
            left: n,
            right: seed.dim(),
        });
    }
    let canonical = seed.canonicalize().into_placement();
    let bits = key_bits(&sizes);
    let mut b = Builder {
        sizes: sizes.clone(),
        bits,
        nodes: Vec::new(),
        index: HashMap::new(),
        off: vec![0],
        dst: Vec::new(),
        dsum: Vec::new(),
        move_ordinal: Vec::new(),
        mixed_chain: Vec::new(),
    };
    if !b.fits(&canonical) {
        return Err(Error::IllegalMove(format!(
            "seed extent exceeds the box {}",
            bounds.bbox
        )));
    }
    if !bounds.admits_width(&canonical) {
        return Err(Error::IllegalMove("seed exceeds the width cap".to_string()));
    }
    b.index.insert(pack_placement(&canonical, bits), 0);
    b.nodes.push(canonical);

    let mut head = 0usize;
    let mut cap_hit = None;
    while head < b.nodes.len() {
        let bounds_ref = bounds;
        b.expand(head, |b, canonical| {
            if !bounds_ref.admits_width(&canonical) {
                return None;
            }
            let key = pack_placement(&canonical, b.bits);
            if let Some(&t) = b.index.get(&key) {
                return Some(t);
            }
            if let Some(cap) = bounds_ref.node_cap {
                if b.nodes.len() >= cap {
                    cap_hit = Some(cap);
                    return None;
                }
            }
            let t = b.nodes.len() as u32;
            b.index.insert(key, t);
            b.nodes.push(canonical);
            Some(t)
        });
        if let Some(cap) = cap_hit {
            return Err(Error::NodeCapExceeded {
                cap,
                explored: b.nodes.len(),
            });
        }
        head += 1;
    }
    Ok(finish(b, seed.size(), n, sizes))
}

fn finish(b: Builder, p: usize, n: usize, sizes: Vec<Coord>) -> QuotientGraph {
    QuotientGraph {
        nodes: b.nodes,
        off: b.off,
        dst: b.dst,
        dsum: b.dsum,
        move_ordinal: b.move_ordinal,
        mixed_chain: b.mixed_chain,
        p,
        n,
        sizes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::SearchBounds;

    #[test]
    fn frog_reachable_graph_has_jump_self_loop() {
        let frog = Placement::from_xy(&[(0, 0), (1, 0)]);
        let g = build_reachable(&frog, &SearchBounds::square(2, 3)).unwrap();
        assert_eq!(g.nodes[0], frog);
        // The frog's jump lands on a translate of itself.
        let frog_edges = g.off[0] as usize..g.off[1] as usize;
        assert!(frog_edges
            .clone()
            .any(|e| g.dst[e] == 0 && g.edge_dsum(e) == [2, 0]));
        assert!(frog_edges
            .clone()
            .any(|e| g.dst[e] == 0 && g.edge_dsum(e) == [-2, 0]));
    }

    #[test]
    fn full_graph_matches_reachable_component() {
        let bounds = SearchBounds::square(2, 3);
        let full = build_full(2, &bounds);
        let frog = Placement::from_xy(&[(0, 0), (1, 0)]);
        let reach = build_reachable(&frog, &bounds).unwrap();
        // Reachable node set is a subset of the full enumeration.
        assert!(reach.node_count() <= full.node_count());
        for x in &reach.nodes {
            assert!(full.nodes.contains(x));
        }
    }

    #[test]
    fn edges_come_in_reverse_pairs() {
        // Every legal move is reversible, so the quotient graph is symmetric
        // with negated displacement vectors.
        let bounds = SearchBounds::square(2, 4);
        for p in 1..=3 {
            let g = build_full(p, &bounds);
            for u in 0..g.node_count() {
                for e in g.off[u] as usize..g.off[u + 1] as usize {
                    let t = g.dst[e] as usize;
                    let want: Vec<i64> = g.edge_dsum(e).iter().map(|d| -d).collect();
                    let found = (g.off[t] as usize..g.off[t + 1] as usize)
                        .any(|f| g.dst[f] as usize == u && g.edge_dsum(f) == want.as_slice());
                    assert!(found, "p={p} edge {u}->{t} lacks a reverse");
                }
            }
        }
    }

    #[test]
    fn node_cap_errors() {
        let square = Placement::from_xy(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let bounds = SearchBounds::square(2, 5).with_node_cap(3);
        match build_reachable(&square, &bounds) {
            Err(Error::NodeCapExceeded { cap: 3, .. }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }
}
