#![allow(dead_code)]

use kitespec::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Random spanning tree plus random extra edges, so always connected.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        edges.push((order[rng.gen_range(0..k)], order[k]));
    }
    let density = rng.gen_range(0.0..0.7);
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(density) && !edges.contains(&(i, j)) && !edges.contains(&(j, i)) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn relabelled<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}
