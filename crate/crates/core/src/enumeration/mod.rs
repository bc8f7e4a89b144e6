//! Isomorph-free generation of graphs on `n` vertices by canonical
//! augmentation, with optional edge-count, triangle-count and connectivity
//! constraints, deterministic work partitioning and an on-disk graph6 cache.
//!
//! Graphs grow one vertex at a time from `K_1`. A child `H` of the parent `G`
//! (a canonical representative on `k` vertices) is `G` plus vertex `k` joined
//! to a neighbour set; children are tried in ascending neighbour-mask order.
//! `H` is kept iff deleting the vertex at the last canonical position of `H`
//! gives a graph isomorphic to `G`, and `H` is not isomorphic to an earlier
//! child of the same `G`. Every class therefore has exactly one parent class
//! and is emitted once.

mod cache;
mod canon;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{binomial, Graph};

pub use cache::{cache_load, cache_path, cache_store, enumerate_cached, CacheManifest};
pub use canon::{
    canonical_form, canonical_form_exhaustive, canonical_labeling, Canon, CanonicalKey,
};

/// Largest `n` enumerated without an edge-count constraint.
pub const MAX_UNCONSTRAINED_N: usize = 9;
/// Largest `n` enumerated at all.
pub const MAX_CONSTRAINED_N: usize = 11;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumConstraints {
    pub n: usize,
    pub edges: Option<usize>,
    pub connected_only: bool,
    pub triangle_count: Option<usize>,
}

impl EnumConstraints {
    pub fn all(n: usize) -> Self {
        EnumConstraints { n, ..Default::default() }
    }

    pub fn connected(n: usize) -> Self {
        EnumConstraints { n, connected_only: true, ..Default::default() }
    }

    pub fn with_edges(mut self, m: usize) -> Self {
        self.edges = Some(m);
        self
    }

    pub fn with_triangles(mut self, t: usize) -> Self {
        self.triangle_count = Some(t);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n > MAX_CONSTRAINED_N || (self.edges.is_none() && n > MAX_UNCONSTRAINED_N) {
            return Err(Error::SpaceTooLarge(format!(
                "n = {n} exceeds the enumeration cap ({MAX_UNCONSTRAINED_N} unconstrained, \
                 {MAX_CONSTRAINED_N} with an edge count)"
            )));
        }
        if let Some(m) = self.edges {
            if m > binomial(n, 2) {
                return Err(Error::InvalidParams(format!(
                    "{m} edges do not fit on {n} vertices"
                )));
            }
        }
        Ok(())
    }

    /// Whether a graph on `k` vertices with `e` edges and `t` triangles can
    /// still grow into one that satisfies the constraints.
    fn viable(&self, k: usize, e: usize, t: usize) -> bool {
        if let Some(m) = self.edges {
            // vertex i can bring at most i new edges
            let room: usize = (k..self.n).sum();
            if e > m || e + room < m {
                return false;
            }
        }
        self.triangle_count.map_or(true, |target| t <= target)
    }

    fn accepts(&self, g: &Graph) -> bool {
        self.edges.map_or(true, |m| g.edge_count() == m)
            && self.triangle_count.map_or(true, |t| g.triangle_count() == t)
            && (!self.connected_only || g.is_connected())
    }
}

/// Worker `index` of `count` owns the subtrees below every `count`-th node
/// (in depth-first order) at the partition level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Partition {
    pub index: usize,
    pub count: usize,
}

impl Partition {
    pub const WHOLE: Partition = Partition { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Self> {
        if count == 0 || index >= count {
            return Err(Error::InvalidParams(format!("bad partition {index} of {count}")));
        }
        Ok(Partition { index, count })
    }
}

fn partition_level(n: usize) -> usize {
    n.saturating_sub(2).max(1)
}

struct Frame {
    graph: Graph,
    key: CanonicalKey,
    next_mask: u32,
    seen: HashSet<CanonicalKey>,
    /// Depth-first index of the partition-level ancestor.
    subtree: usize,
}

/// Depth-first canonical-augmentation stream.
pub struct Enumerator {
    constraints: EnumConstraints,
    partition: Partition,
    stack: Vec<Frame>,
    level_counter: usize,
    pending: Option<(usize, Graph)>,
}

impl Enumerator {
    pub fn new(constraints: EnumConstraints, partition: Partition) -> Result<Self> {
        constraints.validate()?;
        let mut e = Enumerator {
            constraints,
            partition,
            stack: Vec::new(),
            level_counter: 0,
            pending: None,
        };
        let c = &e.constraints;
        if c.n == 0 {
            let empty = Graph::empty(0)?;
            if partition.index == 0 && c.accepts(&empty) {
                e.pending = Some((0, empty));
            }
        } else if c.viable(1, 0, 0) {
            let root = Graph::empty(1)?;
            e.pending = e.visit(root, canonical_form(&root));
        }
        Ok(e)
    }

    /// Handles a freshly accepted node: claims a partition-level index and
    /// pushes a frame when the node has children to explore. Returns the node
    /// itself when it sits at the target level and passes every constraint.
    fn visit(&mut self, graph: Graph, key: CanonicalKey) -> Option<(usize, Graph)> {
        let k = graph.order();
        let level = partition_level(self.constraints.n);
        let subtree = if k == level {
            let i = self.level_counter;
            self.level_counter += 1;
            if i % self.partition.count != self.partition.index {
                return None;
            }
            i
        } else {
            self.stack.last().map_or(0, |f| f.subtree)
        };
        if k == self.constraints.n {
            return self.constraints.accepts(&graph).then_some((subtree, graph));
        }
        self.stack.push(Frame { graph, key, next_mask: 0, seen: HashSet::new(), subtree });
        None
    }

    fn next_tagged(&mut self) -> Option<(usize, Graph)> {
        if let Some(out) = self.pending.take() {
            return Some(out);
        }
        loop {
            let frame = self.stack.last_mut()?;
            let k = frame.graph.order();
            if frame.next_mask >> k != 0 {
                self.stack.pop();
                continue;
            }
            let mask = frame.next_mask;
            frame.next_mask += 1;
            let e = frame.graph.edge_count() + mask.count_ones() as usize;
            let t = frame.graph.triangle_count() + triangles_through(&frame.graph, mask);
            if !self.constraints.viable(k + 1, e, t) {
                continue;
            }
            let child = frame.graph.with_vertex(mask).expect("order stays below the cap");
            let canon = canonical_labeling(&child);
            if !frame.seen.insert(canon.key) {
                continue;
            }
            let last = canon.last_vertex().expect("child is nonempty");
            let canonical_parent =
                last == k || canonical_form(&child.induced(!(1u32 << last))) == frame.key;
            if !canonical_parent {
                continue;
            }
            let rep = canon.key.to_graph();
            if let Some(out) = self.visit(rep, canon.key) {
                return Some(out);
            }
        }
    }
}

impl Iterator for Enumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_tagged().map(|(_, g)| g)
    }
}

/// Edges among `mask`, i.e. the triangles a new vertex joined to `mask` closes.
fn triangles_through(g: &Graph, mask: u32) -> usize {
    crate::graph::bits(mask)
        .map(|v| (g.neighbors(v) & mask).count_ones() as usize)
        .sum::<usize>()
        / 2
}

/// One representative per isomorphism class satisfying `constraints`, in
/// deterministic depth-first order.
pub fn enumerate(constraints: &EnumConstraints) -> Result<Enumerator> {
    Enumerator::new(constraints.clone(), Partition::WHOLE)
}

/// The share of the stream owned by `partition`.
pub fn enumerate_partition(constraints: &EnumConstraints, partition: Partition) -> Result<Enumerator> {
    Enumerator::new(constraints.clone(), partition)
}

/// Runs `workers` partitions on scoped threads and merges them back into the
/// exact sequential order.
pub fn enumerate_parallel(constraints: &EnumConstraints, workers: usize) -> Result<Vec<Graph>> {
    let workers = workers.max(1);
    if workers == 1 {
        return Ok(enumerate(constraints)?.collect());
    }
    let parts: Vec<Enumerator> = (0..workers)
        .map(|i| Enumerator::new(constraints.clone(), Partition::new(i, workers)?))
        .collect::<Result<_>>()?;
    let mut tagged: Vec<(usize, Graph)> = std::thread::scope(|s| {
        let handles: Vec<_> = parts
            .into_iter()
            .map(|mut part| s.spawn(move || std::iter::from_fn(|| part.next_tagged()).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    // each subtree is produced whole by a single worker, so a stable sort restores DFS order
    tagged.sort_by_key(|(subtree, _)| *subtree);
    Ok(tagged.into_iter().map(|(_, g)| g).collect())
}

/// Brute force over all `2^{C(n,2)}` labelled graphs, deduplicated by
/// canonical form, returned sorted by key. Reference for small `n`.
pub fn enumerate_brute_force(constraints: &EnumConstraints) -> Result<Vec<CanonicalKey>> {
    let n = constraints.n;
    if n > 7 {
        return Err(Error::SpaceTooLarge(format!("brute force is limited to n <= 7, got {n}")));
    }
    constraints.validate()?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut keys = HashSet::new();
    for subset in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| subset >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges)?;
        if constraints.accepts(&g) {
            keys.insert(canonical_form(&g));
        }
    }
    let mut keys: Vec<_> = keys.into_iter().collect();
    keys.sort();
    Ok(keys)
}
