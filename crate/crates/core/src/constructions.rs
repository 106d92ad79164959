//! Explicit extremal families with small identifying codes.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::graph::{named, Graph, VertexSet};
use crate::interval::IntervalRep;

/// Bipartite, C4-free graph with `|Y| = n` and one `X`-vertex per unordered
/// pair of `Y`, adjacent to exactly that pair. `Y` is an identifying code of
/// size `n` on `n + n(n−1)/2` vertices.
///
/// Numbering: `Y = 0..n`, then `X` in lexicographic pair order.
pub fn c4_free_bipartite_family(n: usize) -> Result<(Graph, Code)> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("family needs n >= 3, got {n}")));
    }
    let mut edges = Vec::with_capacity(n * (n - 1));
    let mut next = n;
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, next));
            edges.push((v, next));
            next += 1;
        }
    }
    let g = Graph::from_edges(next, edges)?;
    let code = Code::identifying(VertexSet::new(next, 0..n)?);
    Ok((g, code))
}

pub const MAX_VC_FAMILY_D: usize = 10;

/// Stable set `A` of size `d` plus one `B`-vertex per subset of `A` of size
/// at least 2, adjacent to exactly that subset. `A` is an identifying code
/// and `n = 2^d − 1`.
///
/// Numbering: `A = 0..d`, then `B` by ascending subset bitmask.
pub fn vc_d_bipartite_family(d: usize) -> Result<(Graph, Code)> {
    if !(2..=MAX_VC_FAMILY_D).contains(&d) {
        return Err(Error::InvalidInput(format!(
            "family needs 2 <= d <= {MAX_VC_FAMILY_D}, got {d}"
        )));
    }
    let mut edges = Vec::new();
    let mut next = d;
    for mask in 1usize..1 << d {
        if mask.count_ones() < 2 {
            continue;
        }
        for a in (0..d).filter(|a| mask >> a & 1 == 1) {
            edges.push((a, next));
        }
        next += 1;
    }
    let g = Graph::from_edges(next, edges)?;
    let code = Code::identifying(VertexSet::new(next, 0..d)?);
    Ok((g, code))
}

/// Path `0–1–…–(n−1)` with interval `[i, i+1]` for vertex `i`.
pub fn path_graph(n: usize) -> Result<(Graph, IntervalRep)> {
    if n == 0 {
        return Err(Error::InvalidInput("path needs at least one vertex".into()));
    }
    let pairs: Vec<(i64, i64)> = (0..n as i64).map(|i| (i, i + 1)).collect();
    Ok((named::path(n), IntervalRep::from_ints(&pairs)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{exact_min_id_code, verify_identifying_code};
    use crate::vcdim::{sauer_lower_bound, vc_dimension};

    #[test]
    fn c4_free_sizes() {
        let (g, code) = c4_free_bipartite_family(3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(code.len(), 3);
        assert!(verify_identifying_code(&g, &code).unwrap().is_valid());
        let (g, code) = c4_free_bipartite_family(4).unwrap();
        assert_eq!((g.n(), code.len()), (10, 4));
        assert!(c4_free_bipartite_family(2).is_err());
    }

    #[test]
    fn c4_free_n5_against_sauer() {
        let (g, code) = c4_free_bipartite_family(5).unwrap();
        assert_eq!(g.n(), 15);
        let opt = exact_min_id_code(&g, 20).unwrap().len();
        assert!(opt <= code.len());
        let lower = sauer_lower_bound(15, 2).unwrap();
        assert_eq!(lower, 4);
        assert!(opt as u64 >= lower);
    }

    #[test]
    fn vc_family_sizes() {
        let (g, code) = vc_d_bipartite_family(2).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        assert!(verify_identifying_code(&g, &code).unwrap().is_valid());
        let (g, code) = vc_d_bipartite_family(3).unwrap();
        assert_eq!((g.n(), code.len()), (7, 3));
        assert!(verify_identifying_code(&g, &code).unwrap().is_valid());
        assert!(vc_d_bipartite_family(1).is_err());
        assert!(vc_d_bipartite_family(11).is_err());
    }

    #[test]
    fn paths() {
        let (g, rep) = path_graph(6).unwrap();
        assert_eq!(rep.graph(), g);
        assert_eq!(vc_dimension(&g, 10).dimension, 2);
        assert_eq!(exact_min_id_code(&g, 20).unwrap().len(), 4);
        let (g, _) = path_graph(1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }
}
