//! Brute-force oracles written straight from the definitions. They share no
//! code with the library beyond reading adjacency.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use idcode::graph::Graph;
use idcode::interval::IntervalRep;

pub fn closed(g: &Graph, v: usize) -> BTreeSet<usize> {
    let mut s: BTreeSet<usize> = g.neighbors(v).iter().copied().collect();
    s.insert(v);
    s
}

pub fn trace(g: &Graph, v: usize, code: &BTreeSet<usize>) -> BTreeSet<usize> {
    closed(g, v).intersection(code).copied().collect()
}

/// Every vertex has a nonempty trace and traces are pairwise distinct.
pub fn is_identifying(g: &Graph, code: &BTreeSet<usize>) -> bool {
    let mut seen = HashSet::new();
    (0..g.n()).all(|v| {
        let t = trace(g, v, code);
        !t.is_empty() && seen.insert(t)
    })
}

pub fn has_twins(g: &Graph) -> bool {
    (0..g.n()).any(|u| (u + 1..g.n()).any(|v| closed(g, u) == closed(g, v)))
}

fn subset(mask: u64) -> BTreeSet<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Smallest identifying code by enumerating subsets by size.
pub fn brute_gamma_id(g: &Graph) -> Option<usize> {
    let n = g.n();
    assert!(n <= 20);
    (0..=n).find(|&k| {
        (0u64..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .any(|m| is_identifying(g, &subset(m)))
    })
}

/// Whether every subset of `xs` is `N[w] ∩ X` for some `w`.
pub fn shattered(g: &Graph, xs: &[usize]) -> bool {
    let x: BTreeSet<usize> = xs.iter().copied().collect();
    let traces: HashSet<BTreeSet<usize>> = (0..g.n()).map(|w| trace(g, w, &x)).collect();
    traces.len() == 1 << xs.len()
}

/// All shattered sets of size `k`, by plain enumeration.
pub fn shattered_sets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| subset(m).into_iter().collect::<Vec<_>>())
        .filter(|xs| shattered(g, xs))
        .collect()
}

/// Largest shattered set size over all subsets. A shattered `X` needs
/// `2^|X|` distinct traces, hence `2^|X| ≤ n`; larger subsets are skipped.
pub fn brute_vc_dim(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    (0u64..1 << n)
        .filter(|m| 1usize << m.count_ones() <= n.max(1))
        .filter(|&m| shattered(g, &subset(m).into_iter().collect::<Vec<_>>()))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Some 4-cycle `a-b-c-d-a` on distinct vertices.
pub fn has_c4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = [a, b, c, d].iter().collect::<HashSet<_>>().len() == 4;
                    if distinct
                        && g.has_edge(a, b)
                        && g.has_edge(b, c)
                        && g.has_edge(c, d)
                        && g.has_edge(d, a)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Shortest cycle: for each edge `uv`, one plus the `u`–`v` distance
/// without that edge.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for u in 0..n {
        for &v in g.neighbors(u) {
            if v < u {
                continue;
            }
            let mut dist = vec![usize::MAX; n];
            dist[u] = 0;
            let mut q = VecDeque::from([u]);
            while let Some(x) = q.pop_front() {
                for &y in g.neighbors(x) {
                    if (x == u && y == v) || (x == v && y == u) {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                let len = dist[v] + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
    }
    best
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut color = vec![None; g.n()];
    for s in 0..g.n() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in g.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some(!color[x].unwrap());
                        q.push_back(y);
                    }
                    Some(c) if c == color[x].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Adjacency from the intervals themselves: closed intervals meet.
pub fn interval_adjacent(rep: &IntervalRep, u: usize, v: usize) -> bool {
    let (a, b) = (&rep.intervals()[u], &rep.intervals()[v]);
    a.begin <= b.end && b.begin <= a.end
}

/// Minimum set cover size by subset enumeration; sets hold 0-based elements.
pub fn brute_set_cover(n: usize, sets: &[Vec<usize>]) -> Option<usize> {
    let k = sets.len();
    (0..=k).find(|&size| {
        (0u64..1 << k)
            .filter(|m| m.count_ones() as usize == size)
            .any(|m| {
                let covered: BTreeSet<usize> = (0..k)
                    .filter(|t| m >> t & 1 == 1)
                    .flat_map(|t| sets[t].iter().copied())
                    .collect();
                covered.len() == n
            })
    })
}

pub fn is_cover(n: usize, sets: &[Vec<usize>], chosen: &[usize]) -> bool {
    let covered: BTreeSet<usize> = chosen.iter().flat_map(|&t| sets[t].iter().copied()).collect();
    covered.len() == n
}

/// Discriminating code check: `code ⊆ Y` and the traces of `X`-vertices on
/// `code` are nonempty and distinct.
pub fn is_discriminating(g: &Graph, xs: &[usize], ys: &[usize], code: &BTreeSet<usize>) -> bool {
    let y: BTreeSet<usize> = ys.iter().copied().collect();
    if !code.is_subset(&y) {
        return false;
    }
    let mut seen = HashSet::new();
    xs.iter().all(|&x| {
        let t = trace(g, x, code);
        !t.is_empty() && seen.insert(t)
    })
}

pub fn set_of(ids: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    ids.into_iter().collect()
}
