//! Simple undirected graphs on at most [`MAX_N`] vertices.
//!
//! Adjacency is stored as one `u32` neighbour bitset per vertex, so a
//! [`Graph`] is a small `Copy` value and every kernel in the crate runs
//! without heap allocation on the graph itself.

mod clique;
pub mod family;
pub mod graph6;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use clique::{clique_number, clique_number_brute_force};
pub use family::{make_family, make_kite, Family};
pub use graph6::{decode_graph6, encode_graph6};

/// Hard cap on the vertex count of any [`Graph`].
pub const MAX_N: usize = 24;

/// Undirected simple graph as a symmetric adjacency bit-matrix with zero diagonal.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: [u32; MAX_N],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::CapExceeded { n, cap: MAX_N });
        }
        Ok(Graph { n, rows: [0; MAX_N] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParams(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParams(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbour rows, validating symmetry and the zero diagonal.
    pub fn from_rows(n: usize, rows: &[u32]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        if rows.len() != n {
            return Err(Error::InvalidParams(format!(
                "expected {n} adjacency rows, got {}",
                rows.len()
            )));
        }
        let mask = full_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidParams(format!("row {i} has bits beyond n")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::InvalidParams(format!("self-loop at vertex {i}")));
            }
            g.rows[i] = row;
        }
        for i in 0..n {
            for j in 0..n {
                if g.has_edge(i, j) != g.has_edge(j, i) {
                    return Err(Error::InvalidParams(format!(
                        "adjacency not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows[..self.n]
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let higher = self.rows[u] & !full_mask(u + 1);
            bits(higher).map(move |v| (u, v))
        })
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Number of 3-vertex complete subgraphs.
    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for (u, v) in self.edges() {
            // count common neighbours w > v so each triangle u < v < w is seen once
            let common = self.rows[u] & self.rows[v] & !full_mask(v + 1);
            t += common.count_ones() as usize;
        }
        t
    }

    /// True iff the graph has a single component; the graph on 0 vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all = full_mask(self.n);
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    pub fn clique_stats(&self) -> CliqueStats {
        CliqueStats {
            clique_number: clique_number(self),
            triangle_count: self.triangle_count(),
            edge_count: self.edge_count(),
        }
    }

    /// Graph induced on the vertices in `mask`, relabelled in ascending order.
    pub fn induced(&self, mask: u32) -> Graph {
        let keep: Vec<usize> = bits(mask & full_mask(self.n)).collect();
        let mut g = Graph { n: keep.len(), rows: [0; MAX_N] };
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.rows[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, rows: [0; MAX_N] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Adds a new vertex adjacent to the vertices in `neighbors`.
    pub fn with_vertex(&self, neighbors: u32) -> Result<Graph> {
        if self.n + 1 > MAX_N {
            return Err(Error::CapExceeded { n: self.n + 1, cap: MAX_N });
        }
        let mut g = *self;
        let v = self.n;
        g.n += 1;
        g.rows[v] = neighbors & full_mask(self.n);
        for u in bits(g.rows[v]) {
            g.rows[u] |= 1 << v;
        }
        Ok(g)
    }

    /// Disjoint union, with `other`'s vertices numbered after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.rows[..self.n].copy_from_slice(self.rows());
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Adjacency matrix as 0/1 integers.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.has_edge(i, j) as i64).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph").field("n", &self.n).field("edges", &edges).finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

/// Kite parameters: clique size `p` and path length `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KiteParams {
    pub p: usize,
    pub q: usize,
}

impl KiteParams {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidParams(format!("kite needs p >= 1, got p = {p}")));
        }
        Ok(KiteParams { p, q })
    }

    /// Stricter domain used by the theorem-level checks.
    pub fn require_theorem_domain(&self) -> Result<()> {
        if self.p < 3 || self.q < 1 {
            return Err(Error::OutOfRange(format!(
                "theorem checks need p >= 3 and q >= 1, got p = {}, q = {}",
                self.p, self.q
            )));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.p + self.q
    }

    pub fn edge_count(&self) -> usize {
        binomial(self.p, 2) + self.q
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueStats {
    pub clique_number: usize,
    pub triangle_count: usize,
    pub edge_count: usize,
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates over the set bit positions of `mask`, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_conventions() {
        assert!(Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        let k3_k1 = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!k3_k1.is_connected());
        assert!(make_kite(KiteParams::new(5, 3).unwrap()).unwrap().is_connected());
    }

    #[test]
    fn triangles() {
        let kite = make_kite(KiteParams::new(4, 2).unwrap()).unwrap();
        assert_eq!(kite.triangle_count(), 4);
        assert_eq!(make_family(&Family::Complete(5)).unwrap().triangle_count(), 10);
        assert_eq!(make_family(&Family::Path(7)).unwrap().triangle_count(), 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Graph::empty(25), Err(Error::CapExceeded { .. })));
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_rows(2, &[0b10, 0]).is_err());
        assert!(Graph::from_rows(2, &[0b11, 0b01]).is_err());
        assert!(Graph::from_rows(2, &[0b10, 0b01]).is_ok());
    }

    #[test]
    fn induced_and_permuted() {
        let p4 = make_family(&Family::Path(4)).unwrap();
        let mid = p4.induced(0b0110);
        assert_eq!(mid.order(), 2);
        assert_eq!(mid.edge_count(), 1);
        let rev = p4.permuted(&[3, 2, 1, 0]);
        assert_eq!(rev, p4);
        let shifted = p4.permuted(&[1, 0, 2, 3]);
        assert_ne!(shifted, p4);
        assert_eq!(shifted.degree_sequence(), p4.degree_sequence());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(9, 3), 84);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
