use super::{bits, full_mask, Graph};

/// Size of the largest clique, by Bron–Kerbosch with Tomita pivoting on bitsets.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    expand(g, 0, full_mask(g.order()), 0, &mut best);
    best
}

fn expand(g: &Graph, size: usize, mut cand: u32, mut excluded: u32, best: &mut usize) {
    if cand == 0 {
        if excluded == 0 {
            *best = (*best).max(size);
        }
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // pivot maximising |cand ∩ N(u)| over cand ∪ excluded
    let pivot = bits(cand | excluded)
        .max_by_key(|&u| (cand & g.neighbors(u)).count_ones())
        .expect("cand is nonempty");
    for v in bits(cand & !g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        expand(g, size + 1, cand & nv, excluded & nv, best);
        cand &= !(1 << v);
        excluded |= 1 << v;
    }
}

/// Exhaustive check over all vertex subsets; test oracle for small graphs.
pub fn clique_number_brute_force(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16, "brute force is limited to 16 vertices");
    (0u32..1 << n)
        .filter(|&s| bits(s).all(|v| (g.neighbors(v) | 1 << v) & s == s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
