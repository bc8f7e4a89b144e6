//! Canonical labelling by individualisation–refinement.
//!
//! The search tree branches on the vertices of the first smallest
//! non-singleton cell of an equitable ordered partition. Leaves are compared
//! by the upper-triangle bit string of the relabelled graph and the minimum
//! wins. Automorphisms found from equal leaves prune siblings in the same
//! orbit and let the search jump back to the level where two equivalent
//! paths diverge.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{bits, full_mask, Graph, MAX_N};

const KEY_WORDS: usize = (MAX_N * (MAX_N - 1) / 2).div_ceil(64);
const MAX_GENERATORS: usize = 128;

/// Isomorphism-invariant encoding: the upper triangle of the canonically
/// relabelled adjacency matrix in graph6 column order, packed MSB first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey {
    n: u8,
    bits: [u64; KEY_WORDS],
}

impl CanonicalKey {
    fn from_relabelled(g: &Graph, inv: &[usize]) -> Self {
        let n = g.order();
        let mut pos = [0usize; MAX_N];
        for (i, &v) in inv.iter().enumerate() {
            pos[v] = i;
        }
        let mut rows = [0u32; MAX_N];
        for (i, &v) in inv.iter().enumerate() {
            for u in bits(g.neighbors(v)) {
                rows[i] |= 1 << pos[u];
            }
        }
        Self::from_rows(n, &rows)
    }

    fn from_rows(n: usize, rows: &[u32]) -> Self {
        let mut key = CanonicalKey { n: n as u8, bits: [0; KEY_WORDS] };
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if rows[i] >> j & 1 == 1 {
                    key.bits[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        key
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("key decodes to a valid graph")
    }

    /// Upper-triangle bits as a '0'/'1' string.
    pub fn bit_string(&self) -> String {
        let n = self.order();
        let len = n * n.saturating_sub(1) / 2;
        (0..len)
            .map(|k| if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey(n={}, {})", self.n, self.bit_string())
    }
}

/// Canonical key plus the labelling that realises it.
#[derive(Clone, Debug)]
pub struct Canon {
    pub key: CanonicalKey,
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

impl Canon {
    /// Vertex at the last canonical position; its orbit is an isomorphism invariant.
    pub fn last_vertex(&self) -> Option<usize> {
        self.order.last().copied()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalKey {
    canonical_labeling(g).key
}

pub fn canonical_labeling(g: &Graph) -> Canon {
    let n = g.order();
    if n == 0 {
        return Canon { key: CanonicalKey::from_rows(0, &[]), order: Vec::new() };
    }
    let mut cells = vec![full_mask(n)];
    refine(g, &mut cells);
    let mut search = Search { g, n, first: None, best: None, generators: Vec::new() };
    search.descend(cells, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    Canon { key: best.key, order: best.order }
}

/// Minimum key over all `n!` relabellings. Test oracle only.
pub fn canonical_form_exhaustive(g: &Graph) -> CanonicalKey {
    let n = g.order();
    assert!(n <= 10, "exhaustive canonical form is limited to 10 vertices");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = CanonicalKey::from_relabelled(g, &perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(CanonicalKey::from_relabelled(g, &perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Refines an ordered partition to the coarsest equitable one below it.
/// Fragments are ordered by neighbour count into the splitter cell, so the
/// result commutes with relabelling.
fn refine(g: &Graph, cells: &mut Vec<u32>) {
    let n = g.order();
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() == 1 {
                    i += 1;
                    continue;
                }
                let mut by_count = [0u32; MAX_N + 1];
                for v in bits(cell) {
                    by_count[(g.neighbors(v) & splitter).count_ones() as usize] |= 1 << v;
                }
                let fragments: Vec<u32> =
                    by_count[..=n].iter().copied().filter(|&m| m != 0).collect();
                if fragments.len() > 1 {
                    let len = fragments.len();
                    cells.splice(i..=i, fragments);
                    changed = true;
                    i += len;
                } else {
                    i += 1;
                }
            }
            si += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Leaf {
    key: CanonicalKey,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as vertex maps.
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree; `Some(level)` asks every node deeper than `level`
    /// to return immediately.
    fn descend(&mut self, cells: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cells[target]) {
            if !explored.is_empty() && self.in_explored_orbit(path, v, &explored) {
                continue;
            }
            let mut child = cells.clone();
            child[target] = 1 << v;
            child.insert(target + 1, cells[target] & !(1 << v));
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u32], path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let key = CanonicalKey::from_relabelled(self.g, &order);
        let Some(first) = &self.first else {
            let leaf = Leaf { key, order, path: path.to_vec() };
            self.best = Some(Leaf { key, order: leaf.order.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if key == first.key {
            let level = common_prefix(path, &first.path);
            let auto = automorphism(&first.order, &order);
            self.push_generator(auto);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match key.cmp(&best.key) {
            Ordering::Less => {
                self.best = Some(Leaf { key, order, path: path.to_vec() });
                None
            }
            Ordering::Equal => {
                let level = common_prefix(path, &best.path);
                let auto = automorphism(&best.order, &order);
                self.push_generator(auto);
                Some(level)
            }
            Ordering::Greater => None,
        }
    }

    fn push_generator(&mut self, auto: Vec<usize>) {
        if self.generators.len() < MAX_GENERATORS {
            self.generators.push(auto);
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix `path` pointwise.
    fn in_explored_orbit(&self, path: &[usize], v: usize, explored: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if path.iter().any(|&p| gen[p] != p) {
                continue;
            }
            any = true;
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gen[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// `γ` with `γ(from[i]) = to[i]`, an automorphism when both orders give the same key.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&f, &t) in from.iter().zip(to) {
        gamma[f] = t;
    }
    gamma
}
