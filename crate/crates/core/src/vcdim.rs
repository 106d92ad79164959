//! VC-dimension of the closed-neighborhood hypergraph `{N[v] : v ∈ V}`.
//!
//! A vertex set `X` is shattered when every subset of `X` is the trace
//! `N[w] ∩ X` of some vertex `w`. Graphs whose VC-dimension is at most `d`
//! need identifying codes of size at least `(n−1)^(1/d)`; graphs with a
//! shattered set of size `k` contain an induced subgraph on at least `2^k−1`
//! vertices with an identifying code of size at most `2k`.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{verify_identifying_code, Code};
use crate::error::{Error, Result};
use crate::generate;
use crate::graph::{Graph, VertexSet};

/// Largest set accepted by [`is_shattered`] (its trace table has `2^|X|`
/// entries).
pub const MAX_SHATTER_SIZE: usize = 25;

/// Proof that a set is shattered: `witnesses[mask]` is a vertex `w` with
/// `N[w] ∩ X = {shattered_set[i] : bit i of mask}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShatterCertificate {
    pub shattered_set: VertexSet,
    pub witnesses: Vec<usize>,
}

impl ShatterCertificate {
    pub fn size(&self) -> usize {
        self.shattered_set.len()
    }

    /// The subset of the shattered set encoded by `mask`.
    pub fn subset(&self, mask: usize) -> Vec<usize> {
        self.shattered_set
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v)
            .collect()
    }

    /// Re-checks every witness against the graph.
    pub fn check(&self, g: &Graph) -> bool {
        let xs = self.shattered_set.members();
        self.witnesses.len() == 1 << xs.len()
            && self
                .witnesses
                .iter()
                .enumerate()
                .all(|(mask, &w)| w < g.n() && trace_mask(g, w, xs) == mask)
    }
}

/// `N[w] ∩ X` as a bitmask over positions in `xs`.
fn trace_mask(g: &Graph, w: usize, xs: &[usize]) -> usize {
    let nw = g.closed_bits(w);
    xs.iter()
        .enumerate()
        .filter(|(_, &x)| nw.contains(x))
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Lowest-id witness for every trace on `xs`, stopping early once all are
/// found. `None` if some trace is missing.
fn shatter_witnesses(g: &Graph, xs: &[usize]) -> Option<Vec<usize>> {
    let full = 1usize << xs.len();
    if g.n() < full {
        return None;
    }
    let mut witnesses = vec![usize::MAX; full];
    let mut found = 0;
    for w in 0..g.n() {
        let m = trace_mask(g, w, xs);
        if witnesses[m] == usize::MAX {
            witnesses[m] = w;
            found += 1;
            if found == full {
                return Some(witnesses);
            }
        }
    }
    None
}

pub fn is_shattered(g: &Graph, x: &VertexSet) -> Result<Option<ShatterCertificate>> {
    if x.len() > MAX_SHATTER_SIZE {
        return Err(Error::CapExceeded {
            size: x.len(),
            cap: MAX_SHATTER_SIZE,
        });
    }
    if let Some(&v) = x.members().last().filter(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(shatter_witnesses(g, x.members()).map(|witnesses| ShatterCertificate {
        shattered_set: VertexSet::new(g.n(), x.iter()).expect("checked"),
        witnesses,
    }))
}

/// First shattered set of size `d` in lexicographic order.
pub fn find_shattered(g: &Graph, d: usize) -> Option<ShatterCertificate> {
    if d > MAX_SHATTER_SIZE || g.n() < 1 << d {
        return None;
    }
    (0..g.n()).combinations(d).find_map(|xs| {
        shatter_witnesses(g, &xs).map(|witnesses| ShatterCertificate {
            shattered_set: VertexSet::new(g.n(), xs).expect("in range"),
            witnesses,
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcDimension {
    pub dimension: usize,
    pub certificate: ShatterCertificate,
    /// The search stopped at `max_d`, so `dimension` is only a lower bound.
    pub lower_bound_only: bool,
}

/// Largest `d ≤ max_d` with a shattered set of size `d`. Sizes are tried in
/// ascending order; since subsets of shattered sets are shattered, the
/// search stops at the first size with no shattered set.
pub fn vc_dimension(g: &Graph, max_d: usize) -> VcDimension {
    let mut best = ShatterCertificate {
        shattered_set: VertexSet::empty(g.n()),
        witnesses: vec![0],
    };
    if g.n() == 0 {
        return VcDimension {
            dimension: 0,
            certificate: ShatterCertificate {
                shattered_set: VertexSet::empty(0),
                witnesses: Vec::new(),
            },
            lower_bound_only: false,
        };
    }
    let max_d = max_d.min(MAX_SHATTER_SIZE);
    for d in 1..=max_d {
        match find_shattered(g, d) {
            Some(cert) => best = cert,
            None => {
                return VcDimension {
                    dimension: d - 1,
                    certificate: best,
                    lower_bound_only: false,
                }
            }
        }
    }
    // Reaching max_d is conclusive only if no larger set can fit.
    let lower_bound_only = max_d < MAX_SHATTER_SIZE && g.n() >= 1 << (max_d + 1);
    VcDimension {
        dimension: best.size(),
        certificate: best,
        lower_bound_only,
    }
}

/// Smallest `c` with `c^d ≥ n − 1`, i.e. `⌈(n−1)^(1/d)⌉`, in integer
/// arithmetic.
pub fn sauer_lower_bound(n: u64, d: u32) -> Result<u64> {
    if n < 2 || d < 1 {
        return Err(Error::InvalidInput(format!(
            "lower bound needs n >= 2 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    let target = u128::from(n - 1);
    let reaches = |c: u64| -> bool {
        let mut acc: u128 = 1;
        for _ in 0..d {
            acc = acc.saturating_mul(u128::from(c));
            if acc >= target {
                return true;
            }
        }
        acc >= target
    };
    let (mut lo, mut hi) = (1u64, n - 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if reaches(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// A shattered set turned into a small identifying code: the induced
/// subgraph on `X ∪ Y` (one witness per nonempty trace on `X`, preferring
/// witnesses inside `X`) with the code `X ∪ {y_x : x ∈ X}`.
#[derive(Debug, Clone)]
pub struct ShatteredCode {
    pub graph: Graph,
    /// `original_ids[i]` is the vertex of the input graph behind vertex `i`.
    pub original_ids: Vec<usize>,
    pub code: Code,
}

pub fn code_from_shattered(g: &Graph, x: &VertexSet) -> Result<ShatteredCode> {
    if x.is_empty() {
        return Err(Error::InvalidInput("shattered set must be nonempty".into()));
    }
    let cert = is_shattered(g, x)?.ok_or(Error::NotShattered)?;
    let xs = x.members();
    let k = xs.len();
    let full = 1usize << k;

    // Per nonempty trace, a member of X realizing it if any, else the
    // lowest-id witness.
    let mut chosen = vec![usize::MAX; full];
    for &v in xs {
        let m = trace_mask(g, v, xs);
        if chosen[m] == usize::MAX {
            chosen[m] = v;
        }
    }
    for (slot, &w) in chosen.iter_mut().zip(&cert.witnesses).skip(1) {
        if *slot == usize::MAX {
            *slot = w;
        }
    }
    let ys = &chosen[1..];
    let vertices = VertexSet::new(g.n(), xs.iter().chain(ys).copied())?;
    let singles = (0..k).map(|i| chosen[1 << i]);
    let code_original = VertexSet::new(g.n(), xs.iter().copied().chain(singles))?;

    let (graph, original_ids) = g.induced_subgraph(&vertices);
    let local = |v: usize| original_ids.binary_search(&v).expect("code lies in X ∪ Y");
    let code = Code::identifying(VertexSet::new(
        graph.n(),
        code_original.iter().map(local),
    )?);
    let verdict = verify_identifying_code(&graph, &code)?;
    if !verdict.is_valid() {
        return Err(Error::Internal(format!("shattered-set code failed: {verdict}")));
    }
    Ok(ShatteredCode {
        graph,
        original_ids,
        code,
    })
}

/// Graph classes searched by [`witness_search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    GirthAtLeast5,
    ChordalBipartite,
    Interval,
    C4FreeBipartite,
    UnitDisk,
    UndirectedPath,
}

impl GraphClass {
    /// Membership test for classes that can be recognized from adjacency.
    /// Interval, unit-disk and undirected-path graphs are only produced from
    /// their geometric models, so membership holds by construction.
    pub fn contains(&self, g: &Graph) -> bool {
        match self {
            GraphClass::GirthAtLeast5 => g.girth().is_none_or(|l| l >= 5),
            GraphClass::ChordalBipartite => g.is_chordal_bipartite().unwrap_or(false),
            GraphClass::C4FreeBipartite => g.is_bipartite() && g.is_c4_free(),
            GraphClass::Interval | GraphClass::UnitDisk | GraphClass::UndirectedPath => true,
        }
    }
}

/// Budget and seed for [`witness_search`].
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Largest vertex count considered.
    pub max_n: usize,
    /// Number of candidate graphs examined.
    pub trials: usize,
    pub seed: u64,
}

/// Every simple graph on up to this many vertices is tried before random
/// sampling starts.
const EXHAUSTIVE_UP_TO: usize = 6;

/// Looks for a graph of `class` with a shattered set of size `target_dim`.
///
/// Small vertex counts are enumerated exhaustively for classes recognizable
/// from adjacency; the rest of the budget samples random members of the
/// class (random bipartite graphs, random interval models, random points for
/// unit disks, random paths in random trees).
pub fn witness_search(
    class: GraphClass,
    target_dim: usize,
    budget: SearchBudget,
) -> Option<(Graph, ShatterCertificate)> {
    let min_n = 1usize << target_dim;
    if min_n > budget.max_n {
        return None;
    }
    let mut trials = 0;
    let check = |g: &Graph| -> Option<ShatterCertificate> {
        if class.contains(g) {
            find_shattered(g, target_dim)
        } else {
            None
        }
    };

    if !matches!(
        class,
        GraphClass::Interval | GraphClass::UnitDisk | GraphClass::UndirectedPath
    ) {
        for n in min_n..=budget.max_n.min(EXHAUSTIVE_UP_TO) {
            let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
            for mask in 0u64..1 << pairs.len() {
                if trials >= budget.trials {
                    return None;
                }
                trials += 1;
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).expect("valid pairs");
                if let Some(cert) = check(&g) {
                    return Some((g, cert));
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let lo = min_n.max(EXHAUSTIVE_UP_TO + 1).min(budget.max_n);
    while trials < budget.trials {
        trials += 1;
        let n = rng.random_range(lo..=budget.max_n);
        let seed = rng.random();
        let g = match class {
            GraphClass::Interval => {
                let range = rng.random_range(n as i64..=4 * n as i64);
                generate::random_interval_graph(n, range, seed).0
            }
            GraphClass::UnitDisk => generate::random_unit_disk_graph(n, 2 + n / 3, seed),
            GraphClass::UndirectedPath => {
                let tree = rng.random_range(3..=2 * n);
                generate::random_path_graph(n, tree, seed)
            }
            _ => {
                let p = rng.random_range(0.15..0.6);
                let left = rng.random_range(1..n);
                generate::random_bipartite_graph(left, n - left, p, seed)
            }
        };
        if let Some(cert) = check(&g) {
            return Some((g, cert));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::new(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn p6_shatters_two_inner_vertices() {
        let g = path(6);
        let cert = is_shattered(&g, &set(6, &[1, 3])).unwrap().unwrap();
        // Masks: bit 0 = vertex 1, bit 1 = vertex 3.
        assert_eq!(cert.witnesses, vec![5, 0, 3, 2]);
        assert!(cert.check(&g));
    }

    #[test]
    fn empty_trace_missing_in_k1() {
        let g = Graph::empty(1);
        assert!(is_shattered(&g, &set(1, &[0])).unwrap().is_none());
        assert!(is_shattered(&g, &VertexSet::empty(1)).unwrap().is_some());
    }

    #[test]
    fn dimensions() {
        assert_eq!(vc_dimension(&path(6), 10).dimension, 2);
        assert_eq!(vc_dimension(&star(3), 10).dimension, 2);
        assert_eq!(vc_dimension(&Graph::empty(1), 10).dimension, 0);
        let capped = vc_dimension(&path(6), 1);
        assert_eq!(capped.dimension, 1);
        assert!(capped.lower_bound_only);
    }

    #[test]
    fn sauer_examples() {
        assert_eq!(sauer_lower_bound(10, 2).unwrap(), 3);
        assert_eq!(sauer_lower_bound(2, 5).unwrap(), 1);
        assert_eq!(sauer_lower_bound(1_000_001, 3).unwrap(), 100);
        assert_eq!(sauer_lower_bound(1_000_002, 3).unwrap(), 101);
        assert_eq!(sauer_lower_bound(15, 2).unwrap(), 4);
        assert!(sauer_lower_bound(1, 2).is_err());
        assert_eq!(sauer_lower_bound(u64::MAX, 1).unwrap(), u64::MAX - 1);
    }

    #[test]
    fn star_code_from_two_leaves() {
        let g = star(3);
        let out = code_from_shattered(&g, &set(4, &[1, 2])).unwrap();
        assert_eq!(out.original_ids, vec![0, 1, 2]);
        assert_eq!(out.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(out.code.vertices, set(3, &[1, 2]));
    }

    #[test]
    fn p6_code_from_shattered() {
        let g = path(6);
        let out = code_from_shattered(&g, &set(6, &[1, 3])).unwrap();
        assert!(out.graph.n() >= 3);
        assert!(out.code.len() <= 4);
        assert!(verify_identifying_code(&out.graph, &out.code).unwrap().is_valid());
    }

    #[test]
    fn code_from_shattered_rejects() {
        let g = path(3);
        assert!(matches!(
            code_from_shattered(&g, &VertexSet::empty(3)),
            Err(Error::InvalidInput(_))
        ));
        assert_eq!(
            code_from_shattered(&g, &set(3, &[0, 2])).unwrap_err(),
            Error::NotShattered
        );
    }

    #[test]
    fn girth_five_witness_is_small_path() {
        let budget = SearchBudget {
            max_n: 8,
            trials: 100_000,
            seed: 1,
        };
        let (g, cert) = witness_search(GraphClass::GirthAtLeast5, 2, budget).unwrap();
        assert!(g.girth().is_none_or(|l| l >= 5));
        assert!(cert.check(&g));
        assert_eq!(cert.size(), 2);
    }
}
