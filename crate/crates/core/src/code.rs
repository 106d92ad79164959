//! Identifying and discriminating codes: verification, exact minimum
//! solvers and the greedy logarithmic approximation.
//!
//! A code `C` of a graph is identifying when every trace `N[v] ∩ C` is
//! nonempty and no two traces coincide. Each of those conditions is a
//! [`Requirement`]: a set of vertices of which `C` must contain at least one.
//! Finding a minimum code is therefore a hitting-set problem over the
//! requirements, which is how both solvers here work.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hitting::HittingSet;
use crate::reductions::SetCover1Instance;

/// Default vertex cap for [`exact_min_id_code`].
pub const DEFAULT_EXACT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeKind {
    Identifying,
    Discriminating,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    pub vertices: VertexSet,
    pub kind: CodeKind,
}

impl Code {
    pub fn identifying(vertices: VertexSet) -> Self {
        Code {
            vertices,
            kind: CodeKind::Identifying,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RequirementKind {
    Domination(usize),
    /// `u < v`.
    Separation(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Requirement {
    pub kind: RequirementKind,
    pub covered_by: VertexSet,
}

/// All requirements of an identifying code: domination of each vertex in
/// ascending order, then separation of each pair in lexicographic order.
/// These are exactly the rows of the covering integer program.
pub fn requirements(g: &Graph) -> Vec<Requirement> {
    requirement_rows(g)
        .into_iter()
        .map(|(kind, bits)| Requirement {
            kind,
            covered_by: VertexSet::from_bitset(&bits),
        })
        .collect()
}

fn requirement_rows(g: &Graph) -> Vec<(RequirementKind, Bitset)> {
    let n = g.n();
    let mut rows = Vec::with_capacity(n + n * n.saturating_sub(1) / 2);
    for v in 0..n {
        rows.push((RequirementKind::Domination(v), g.closed_bits(v).into_owned()));
    }
    for u in 0..n {
        let nu = g.closed_bits(u);
        for v in u + 1..n {
            rows.push((RequirementKind::Separation(u, v), nu.xor(&g.closed_bits(v))));
        }
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    NotDominating(usize),
    NotSeparating(usize, usize),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => write!(f, "valid"),
            Verdict::NotDominating(v) => write!(f, "not_dominating({v})"),
            Verdict::NotSeparating(u, v) => write!(f, "not_separating({u},{v})"),
        }
    }
}

/// Checks domination of `targets` in ascending order, then separation of
/// pairs of `targets` in lexicographic order, reporting the first failure.
fn first_violation(
    g: &Graph,
    targets: impl Iterator<Item = usize>,
    code: &Bitset,
) -> Verdict {
    let mut traces: HashMap<Bitset, Vec<usize>> = HashMap::new();
    for v in targets {
        let trace = g.closed_bits(v).and(code);
        if trace.is_empty() {
            return Verdict::NotDominating(v);
        }
        traces.entry(trace).or_default().push(v);
    }
    traces
        .values()
        .filter(|group| group.len() > 1)
        .map(|group| (group[0], group[1]))
        .min()
        .map_or(Verdict::Valid, |(u, v)| Verdict::NotSeparating(u, v))
}

pub fn verify_identifying_code(g: &Graph, code: &Code) -> Result<Verdict> {
    check_universe(g, &code.vertices)?;
    Ok(first_violation(g, 0..g.n(), &code.vertices.to_bitset()))
}

fn check_universe(g: &Graph, set: &VertexSet) -> Result<()> {
    match set.members().last() {
        Some(&v) if v >= g.n() => Err(Error::VertexOutOfRange { vertex: v, n: g.n() }),
        _ if set.universe_size() != g.n() => Err(Error::InvalidInput(format!(
            "vertex set over {} vertices used with a graph on {}",
            set.universe_size(),
            g.n()
        ))),
        _ => Ok(()),
    }
}

/// Checks that `(x_side, y_side)` partitions the vertices with every edge
/// crossing between the sides.
pub fn check_bipartition(g: &Graph, x_side: &VertexSet, y_side: &VertexSet) -> Result<()> {
    check_universe(g, x_side)?;
    check_universe(g, y_side)?;
    let x = x_side.to_bitset();
    let y = y_side.to_bitset();
    if x.intersects(&y) {
        return Err(Error::InvalidBipartition("sides overlap".into()));
    }
    if x.count() + y.count() != g.n() {
        return Err(Error::InvalidBipartition("sides do not cover every vertex".into()));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| x.contains(u) == x.contains(v)) {
        return Err(Error::InvalidBipartition(format!("edge {u}-{v} inside one side")));
    }
    Ok(())
}

/// Whether `code ⊆ Y` dominates every vertex of `X` and separates every pair
/// of vertices of `X`.
pub fn verify_discriminating_code(
    g: &Graph,
    x_side: &VertexSet,
    y_side: &VertexSet,
    code: &VertexSet,
) -> Result<Verdict> {
    check_bipartition(g, x_side, y_side)?;
    check_universe(g, code)?;
    if let Some(v) = code.iter().find(|&v| !y_side.contains(v)) {
        return Err(Error::InvalidCode(format!("vertex {v} is not on the Y side")));
    }
    Ok(first_violation(g, x_side.iter(), &code.to_bitset()))
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}

fn id_code_rows(g: &Graph) -> Result<Vec<Bitset>> {
    if let Some((u, v)) = g.first_twins() {
        return Err(Error::Twins(u, v));
    }
    Ok(requirement_rows(g).into_iter().map(|(_, b)| b).collect())
}

/// A minimum identifying code, so `|C| = γ^ID(g)`. Fails when `g` has twins
/// (no identifying code exists) or more than `cap` vertices.
pub fn exact_min_id_code(g: &Graph, cap: usize) -> Result<Code> {
    check_cap(g.n(), cap)?;
    let rows = id_code_rows(g)?;
    let best = HittingSet::new(g.n(), rows).exact();
    Ok(Code::identifying(VertexSet::new(g.n(), best)?))
}

/// Greedy identifying code: repeatedly adds the vertex satisfying the most
/// unsatisfied requirements (lowest id on ties). Its size is at most
/// `(ln R + 1)·γ^ID` with `R = n + n(n−1)/2`.
pub fn greedy_id_code(g: &Graph) -> Result<Code> {
    let rows = id_code_rows(g)?;
    let chosen = HittingSet::new(g.n(), rows).greedy();
    Ok(Code::identifying(VertexSet::new(g.n(), chosen)?))
}

/// `(ln R + 1)` for `R = n + n(n−1)/2`, the greedy guarantee factor.
pub fn greedy_ratio_bound(n: usize) -> f64 {
    let r = n + n * n.saturating_sub(1) / 2;
    (r.max(1) as f64).ln() + 1.0
}

/// A minimum discriminating code `C ⊆ Y` for the sides `(X, Y)`; `cap`
/// bounds `|Y|`.
pub fn exact_min_discriminating_code(
    g: &Graph,
    x_side: &VertexSet,
    y_side: &VertexSet,
    cap: usize,
) -> Result<VertexSet> {
    check_bipartition(g, x_side, y_side)?;
    check_cap(y_side.len(), cap)?;
    let ys = y_side.members();
    // Rows restricted to Y, re-indexed by position in Y.
    let project = |bits: &Bitset| {
        Bitset::from_indices(
            ys.len(),
            ys.iter().enumerate().filter(|(_, &y)| bits.contains(y)).map(|(i, _)| i),
        )
    };
    let xs = x_side.members();
    let mut rows = Vec::new();
    for &x in xs {
        let row = project(&g.closed_bits(x));
        if row.is_empty() {
            return Err(Error::Infeasible(format!("{x} has no neighbor in Y")));
        }
        rows.push(row);
    }
    for (i, &a) in xs.iter().enumerate() {
        let na = g.closed_bits(a);
        for &b in &xs[i + 1..] {
            let row = project(&na.xor(&g.closed_bits(b)));
            if row.is_empty() {
                return Err(Error::Infeasible(format!(
                    "{a} and {b} have the same neighborhood in Y"
                )));
            }
            rows.push(row);
        }
    }
    let best = HittingSet::new(ys.len(), rows).exact();
    VertexSet::new(g.n(), best.into_iter().map(|i| ys[i]))
}

/// A minimum set cover as ascending set indices; `cap` bounds the number of
/// sets.
pub fn exact_min_set_cover(inst: &SetCover1Instance, cap: usize) -> Result<Vec<usize>> {
    check_cap(inst.sets().len(), cap)?;
    let k = inst.sets().len();
    let mut rows: Vec<Bitset> = vec![Bitset::new(k); inst.ground_size()];
    for (t, set) in inst.sets().iter().enumerate() {
        for &e in set {
            rows[e].insert(t);
        }
    }
    if let Some(e) = rows.iter().position(Bitset::is_empty) {
        return Err(Error::NotACover { element: e + 1 });
    }
    Ok(HittingSet::new(k, rows).exact())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn code(n: usize, v: &[usize]) -> Code {
        Code::identifying(VertexSet::new(n, v.iter().copied()).unwrap())
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::new(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn verifier_examples() {
        let p4 = path(4);
        assert_eq!(verify_identifying_code(&p4, &code(4, &[0, 1, 2])).unwrap(), Verdict::Valid);
        assert_eq!(
            verify_identifying_code(&p4, &code(4, &[1, 2])).unwrap(),
            Verdict::NotSeparating(1, 2)
        );
        assert_eq!(
            verify_identifying_code(&p4, &code(4, &[0])).unwrap(),
            Verdict::NotDominating(2)
        );
        assert_eq!(
            verify_identifying_code(&p4, &code(4, &[0, 1, 2, 3])).unwrap(),
            Verdict::Valid
        );
        assert_eq!(
            verify_identifying_code(&complete(2), &code(2, &[0, 1])).unwrap(),
            Verdict::NotSeparating(0, 1)
        );
    }

    #[test]
    fn verifier_reports_lexicographically_first_pair() {
        // Traces on {0}: every vertex of K4 sees {0}.
        let k4 = complete(4);
        assert_eq!(
            verify_identifying_code(&k4, &code(4, &[0])).unwrap(),
            Verdict::NotSeparating(0, 1)
        );
        // P5 with C = {2}: 1, 2, 3 share trace {2}; 0 and 4 are undominated.
        assert_eq!(
            verify_identifying_code(&path(5), &code(5, &[2])).unwrap(),
            Verdict::NotDominating(0)
        );
    }

    #[test]
    fn discriminating_examples() {
        let k2 = complete(2);
        assert_eq!(
            verify_discriminating_code(&k2, &set(2, &[0]), &set(2, &[1]), &set(2, &[1])).unwrap(),
            Verdict::Valid
        );
        // Star with center 0 on the Y side.
        let star = star(2);
        assert_eq!(
            verify_discriminating_code(&star, &set(3, &[1, 2]), &set(3, &[0]), &set(3, &[0]))
                .unwrap(),
            Verdict::NotSeparating(1, 2)
        );
        assert!(matches!(
            verify_discriminating_code(&star, &set(3, &[1, 2]), &set(3, &[0]), &set(3, &[1])),
            Err(Error::InvalidCode(_))
        ));
        assert!(matches!(
            verify_discriminating_code(&star, &set(3, &[0, 1]), &set(3, &[2]), &set(3, &[2])),
            Err(Error::InvalidBipartition(_))
        ));
    }

    #[test]
    fn exact_examples() {
        assert_eq!(exact_min_id_code(&Graph::empty(1), 20).unwrap(), code(1, &[0]));
        assert_eq!(exact_min_id_code(&complete(2), 20), Err(Error::Twins(0, 1)));
        assert_eq!(exact_min_id_code(&path(6), 20).unwrap().len(), 4);
        assert_eq!(exact_min_id_code(&path(4), 20).unwrap().len(), 3);
        assert!(matches!(
            exact_min_id_code(&path(21), 20),
            Err(Error::CapExceeded { size: 21, cap: 20 })
        ));
    }

    #[test]
    fn exact_discriminating_and_set_cover() {
        let k2 = complete(2);
        assert_eq!(
            exact_min_discriminating_code(&k2, &set(2, &[0]), &set(2, &[1]), 20).unwrap(),
            set(2, &[1])
        );
        let sc = SetCover1Instance::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert_eq!(exact_min_set_cover(&sc, 20).unwrap(), vec![0, 1]);
        let sc = SetCover1Instance::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(exact_min_set_cover(&sc, 20).unwrap(), vec![0]);
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_id_code(&Graph::empty(1)).unwrap(), code(1, &[0]));
        let c = greedy_id_code(&path(4)).unwrap();
        assert!(verify_identifying_code(&path(4), &c).unwrap().is_valid());
        assert!(c.len() <= 4);
        let star = star(3);
        let c = greedy_id_code(&star).unwrap();
        assert!(verify_identifying_code(&star, &c).unwrap().is_valid());
        let opt = exact_min_id_code(&star, 20).unwrap().len();
        assert_eq!(opt, 3);
        assert!(c.len() as f64 <= greedy_ratio_bound(4) * opt as f64);
        assert!(matches!(greedy_id_code(&complete(3)), Err(Error::Twins(0, 1))));
    }

    #[test]
    fn requirement_supports() {
        let reqs = requirements(&path(3));
        assert_eq!(reqs.len(), 3 + 3);
        assert_eq!(reqs[0].kind, RequirementKind::Domination(0));
        assert_eq!(reqs[0].covered_by, set(3, &[0, 1]));
        assert_eq!(reqs[3].kind, RequirementKind::Separation(0, 1));
        assert_eq!(reqs[3].covered_by, set(3, &[2]));
        assert_eq!(reqs[4].kind, RequirementKind::Separation(0, 2));
        assert_eq!(reqs[4].covered_by, set(3, &[0, 2]));
    }
}
