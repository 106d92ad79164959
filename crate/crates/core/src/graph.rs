//! Simple undirected graphs over dense vertex ids, closed neighborhoods and
//! the class-membership checks used by the VC-dimension and reduction code.
//!
//! Adjacency is kept as sorted neighbor lists. For graphs with at most
//! [`MAX_BITSET_VERTICES`] vertices every closed neighborhood is also stored
//! as a bitset; above that, [`Graph::closed_bits`] builds the bitset on
//! demand instead of storing an n×n matrix.

use std::borrow::Cow;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// Largest vertex count for which closed neighborhoods are stored as bitsets.
pub const MAX_BITSET_VERTICES: usize = 4096;

/// Largest graph accepted by [`Graph::is_chordal_bipartite`].
pub const CHORDAL_BIPARTITE_CAP: usize = 20;

/// A sorted, duplicate-free set of vertex ids of a graph on `universe_size`
/// vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<usize>,
    universe_size: usize,
}

impl VertexSet {
    pub fn new(universe_size: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= universe_size) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: universe_size,
            });
        }
        Ok(VertexSet {
            members,
            universe_size,
        })
    }

    pub fn empty(universe_size: usize) -> Self {
        VertexSet {
            members: Vec::new(),
            universe_size,
        }
    }

    pub fn all(universe_size: usize) -> Self {
        VertexSet {
            members: (0..universe_size).collect(),
            universe_size,
        }
    }

    pub(crate) fn from_bitset(bits: &Bitset) -> Self {
        VertexSet {
            members: bits.to_vec(),
            universe_size: bits.len(),
        }
    }

    pub fn to_bitset(&self) -> Bitset {
        Bitset::from_indices(self.universe_size, self.members.iter().copied())
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.members
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A 4-cycle `u–x–v–y–u` found as two vertices `u`, `v` sharing the two
/// common neighbors `x` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct C4Witness {
    pub u: usize,
    pub v: usize,
    pub common: (usize, usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    closed: Option<Vec<Bitset>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph::from_lists(vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list. Self-loops are rejected and parallel
    /// edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph::from_lists(adjacency))
    }

    fn from_lists(adjacency: Vec<Vec<usize>>) -> Self {
        let n = adjacency.len();
        let closed = (n <= MAX_BITSET_VERTICES).then(|| {
            adjacency
                .iter()
                .enumerate()
                .map(|(v, list)| {
                    let mut b = Bitset::from_indices(n, list.iter().copied());
                    b.insert(v);
                    b
                })
                .collect()
        });
        Graph { adjacency, closed }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.closed {
            Some(rows) => u != v && rows[u].contains(v),
            None => self.adjacency[u].binary_search(&v).is_ok(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// `N[v]` as a bitset over the vertex set.
    pub fn closed_bits(&self, v: usize) -> Cow<'_, Bitset> {
        match &self.closed {
            Some(rows) => Cow::Borrowed(&rows[v]),
            None => {
                let mut b = Bitset::from_indices(self.n(), self.adjacency[v].iter().copied());
                b.insert(v);
                Cow::Owned(b)
            }
        }
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut members = self.adjacency[v].clone();
        let at = members.partition_point(|&w| w < v);
        members.insert(at, v);
        Ok(VertexSet {
            members,
            universe_size: self.n(),
        })
    }

    /// `N[j] △ N[k]`.
    pub fn neighborhood_symmetric_difference(&self, j: usize, k: usize) -> Result<VertexSet> {
        self.check_vertex(j)?;
        self.check_vertex(k)?;
        if j == k {
            return Err(Error::SameVertex(j));
        }
        Ok(VertexSet::from_bitset(
            &self.closed_bits(j).xor(&self.closed_bits(k)),
        ))
    }

    /// All pairs `(u, v)`, `u < v`, with `N[u] = N[v]`, in lexicographic order.
    pub fn find_twins(&self) -> Vec<(usize, usize)> {
        let mut groups: HashMap<Cow<'_, Bitset>, Vec<usize>> = HashMap::new();
        for v in 0..self.n() {
            groups.entry(self.closed_bits(v)).or_default().push(v);
        }
        let mut pairs: Vec<(usize, usize)> = groups
            .values()
            .flat_map(|members| {
                members
                    .iter()
                    .enumerate()
                    .flat_map(move |(i, &u)| members[i + 1..].iter().map(move |&v| (u, v)))
            })
            .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn is_twin_free(&self) -> bool {
        self.first_twins().is_none()
    }

    pub(crate) fn first_twins(&self) -> Option<(usize, usize)> {
        self.find_twins().into_iter().next()
    }

    /// A proper 2-coloring as `(A, B)` with vertex 0 of every component in
    /// `A`, or `None` when the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &w in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let a = (0..n).filter(|&v| side[v] == Some(false));
        let b = (0..n).filter(|&v| side[v] == Some(true));
        Some((
            VertexSet {
                members: a.collect(),
                universe_size: n,
            },
            VertexSet {
                members: b.collect(),
                universe_size: n,
            },
        ))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// First pair (lexicographic) of distinct vertices with two common
    /// neighbors, i.e. a (not necessarily induced) 4-cycle.
    pub fn c4_witness(&self) -> Option<C4Witness> {
        let n = self.n();
        for u in 0..n {
            let nu = Bitset::from_indices(n, self.adjacency[u].iter().copied());
            for v in u + 1..n {
                let mut common = self.adjacency[v].iter().filter(|&&w| nu.contains(w));
                if let (Some(&x), Some(&y)) = (common.next(), common.next()) {
                    return Some(C4Witness {
                        u,
                        v,
                        common: (x, y),
                    });
                }
            }
        }
        None
    }

    pub fn is_c4_free(&self) -> bool {
        self.c4_witness().is_none()
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] >= b) {
                    break;
                }
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Bipartite with no induced cycle of length at least 6. Induced cycles
    /// are enumerated, so the graph size is capped at
    /// [`CHORDAL_BIPARTITE_CAP`].
    pub fn is_chordal_bipartite(&self) -> Result<bool> {
        if self.n() > CHORDAL_BIPARTITE_CAP {
            return Err(Error::CapExceeded {
                size: self.n(),
                cap: CHORDAL_BIPARTITE_CAP,
            });
        }
        if !self.is_bipartite() {
            return Ok(false);
        }
        Ok(!self.has_long_induced_cycle(6))
    }

    /// Whether some induced cycle has at least `min_len` vertices. Each cycle
    /// is grown as an induced path from its smallest vertex.
    fn has_long_induced_cycle(&self, min_len: usize) -> bool {
        let n = self.n();
        let mut path = Vec::with_capacity(n);
        for start in 0..n {
            path.clear();
            path.push(start);
            for &second in &self.adjacency[start] {
                if second < start {
                    continue;
                }
                path.push(second);
                if self.extend_induced_path(&mut path, min_len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    fn extend_induced_path(&self, path: &mut Vec<usize>, min_len: usize) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        'candidates: for &w in &self.adjacency[last] {
            if w <= start || path.contains(&w) {
                continue;
            }
            // No chord to interior path vertices.
            for &p in &path[1..path.len() - 1] {
                if self.has_edge(w, p) {
                    continue 'candidates;
                }
            }
            if self.has_edge(w, start) {
                if path.len() + 1 >= min_len {
                    return true;
                }
                continue;
            }
            path.push(w);
            if self.extend_induced_path(path, min_len) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// The subgraph induced by `vertices`, relabeled `0..k` in ascending
    /// order of the original ids. Returns the graph and the original ids.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> (Graph, Vec<usize>) {
        let ids = vertices.members().to_vec();
        let index: HashMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let lists = ids
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|w| index.get(w).copied())
                    .collect()
            })
            .collect();
        (Graph::from_lists(lists), ids)
    }
}

pub mod named {
    //! Small named graphs.

    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }
}
