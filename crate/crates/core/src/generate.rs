//! Seeded random instance generators.
//!
//! All generators draw from ChaCha8 seeded with `seed_from_u64(seed)`, so a
//! seed reproduces the same instance with this crate. Streams are not meant
//! to match other implementations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::interval::{Interval, IntervalRep};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, edge_probability: f64, seed: u64) -> Graph {
    let p = edge_probability.clamp(0.0, 1.0);
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("in range")
}

/// Random closed intervals with integer endpoints in `0..=coordinate_range`,
/// with the matching intersection graph.
pub fn random_interval_graph(n: usize, coordinate_range: i64, seed: u64) -> (Graph, IntervalRep) {
    let mut rng = rng(seed);
    let range = coordinate_range.max(0);
    let intervals = (0..n)
        .map(|_| {
            let a = rng.random_range(0..=range);
            let b = rng.random_range(0..=range);
            Interval::from_ints(a.min(b), a.max(b))
        })
        .collect();
    let rep = IntervalRep::new(intervals).expect("begin <= end");
    (rep.graph(), rep)
}

/// Random bipartite graph with sides `0..left` and `left..left+right`.
pub fn random_bipartite_graph(left: usize, right: usize, p: f64, seed: u64) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..left {
        for v in left..left + right {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(left + right, edges).expect("in range")
}

/// Unit-disk graph of `n` random centers in a `side × side` square (in disk
/// radii, on a grid of step 1/10); two disks meet when their centers are at
/// distance at most 2.
pub fn random_unit_disk_graph(n: usize, side: usize, seed: u64) -> Graph {
    const STEP: i64 = 10;
    let mut rng = rng(seed);
    let extent = side as i64 * STEP;
    let points: Vec<(i64, i64)> = (0..n)
        .map(|_| (rng.random_range(0..=extent), rng.random_range(0..=extent)))
        .collect();
    let mut edges = Vec::new();
    for (u, &(ux, uy)) in points.iter().enumerate() {
        for (v, &(vx, vy)) in points.iter().enumerate().skip(u + 1) {
            let (dx, dy) = (ux - vx, uy - vy);
            if dx * dx + dy * dy <= (2 * STEP) * (2 * STEP) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("in range")
}

/// Undirected path graph: `n` random paths in a random tree on `tree_size`
/// nodes, adjacent when they share a node.
pub fn random_path_graph(n: usize, tree_size: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let t = tree_size.max(1);
    let parent: Vec<usize> = (0..t)
        .map(|i| if i == 0 { 0 } else { rng.random_range(0..i) })
        .collect();
    let depth = {
        let mut d = vec![0usize; t];
        for i in 1..t {
            d[i] = d[parent[i]] + 1;
        }
        d
    };
    let tree_path = |mut a: usize, mut b: usize| {
        let mut nodes = Vec::new();
        while a != b {
            if depth[a] >= depth[b] {
                nodes.push(a);
                a = parent[a];
            } else {
                nodes.push(b);
                b = parent[b];
            }
        }
        nodes.push(a);
        nodes
    };
    let paths: Vec<Vec<bool>> = (0..n)
        .map(|_| {
            let mut on = vec![false; t];
            for node in tree_path(rng.random_range(0..t), rng.random_range(0..t)) {
                on[node] = true;
            }
            on
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if paths[u].iter().zip(&paths[v]).any(|(a, b)| *a && *b) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("in range")
}

/// Random graph with girth at least 5: a random edge order, keeping each
/// edge that closes no cycle shorter than 5.
pub fn random_girth5_graph(n: usize, edge_probability: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let p = edge_probability.clamp(0.0, 1.0);
    let mut adjacency = vec![Vec::<usize>::new(); n];
    for (u, v) in pairs {
        if !rng.random_bool(p) {
            continue;
        }
        // Adding uv closes a cycle of length dist(u, v) + 1; need dist >= 4.
        if within_distance(&adjacency, u, v, 3) {
            continue;
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let edges = adjacency
        .iter()
        .enumerate()
        .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect::<Vec<_>>();
    Graph::from_edges(n, edges).expect("in range")
}

fn within_distance(adjacency: &[Vec<usize>], from: usize, to: usize, limit: usize) -> bool {
    let mut frontier = vec![from];
    let mut seen = vec![false; adjacency.len()];
    seen[from] = true;
    for _ in 0..limit {
        let mut next = Vec::new();
        for u in frontier {
            for &w in &adjacency[u] {
                if w == to {
                    return true;
                }
                if !seen[w] {
                    seen[w] = true;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        assert_eq!(random_graph(1, 0.5, 3).edge_count(), 0);
        assert_eq!(random_graph(4, 1.0, 3).edge_count(), 6);
        assert_eq!(random_graph(7, 0.0, 3).edge_count(), 0);
    }

    #[test]
    fn seeds_reproduce() {
        assert_eq!(random_graph(12, 0.4, 9), random_graph(12, 0.4, 9));
        assert_eq!(random_interval_graph(9, 20, 2), random_interval_graph(9, 20, 2));
    }

    #[test]
    fn interval_graph_matches_coordinates() {
        for seed in 0..20 {
            let (g, rep) = random_interval_graph(10, 15, seed);
            for u in 0..10 {
                for v in u + 1..10 {
                    let meet = rep.intervals()[u].intersects(&rep.intervals()[v]);
                    assert_eq!(g.has_edge(u, v), meet);
                }
            }
        }
    }

    #[test]
    fn girth5_generator() {
        for seed in 0..20 {
            let g = random_girth5_graph(12, 0.5, seed);
            assert!(g.girth().is_none_or(|l| l >= 5));
        }
    }
}
