//! Reductions from set cover with pairwise intersections of size at most one
//! to discriminating codes and to identifying codes in C4-free bipartite
//! graphs, with solution maps in both directions.
//!
//! For a set-cover instance `(X, S)` with `|X| = n`, the discriminating-code
//! instance `G_DC` takes `ℓ = 2n² − 1` disjoint copies `X_i ∪ S_i` of the
//! element/set membership graph plus two extra copies `X'1`, `X'2` of `X`.
//! Each `x'' ∈ X'2` is joined to its copy in `X'1` and to its copy in every
//! `X_i`. The sides are `X_1 ∪ … ∪ X_ℓ ∪ X'1` and `S_1 ∪ … ∪ S_ℓ ∪ X'2`.
//!
//! The identifying-code instance `G_IC` adds `Z = {z_0, …, z_{2n²−1}}` on the
//! first side. The edges of `K_{2n²}` split into `ℓ` perfect matchings; the
//! `t`-th set copy in `S_i` gets the `t`-th pair `{a, b}` of matching `i`
//! and is joined to `z_a` and `z_b`. No two copies in the same `S_i` then
//! share a `Z`-neighbor, which keeps the graph C4-free.
//!
//! Vertex layout: block `i` (for `i < ℓ`) holds `X_i` then `S_i`; after the
//! blocks come `X'1`, `X'2` and, for `G_IC`, `Z`.

use std::fmt;

use crate::bitset::Bitset;
use crate::code::{verify_discriminating_code, verify_identifying_code, Code};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Ground set `0..n` and a family of subsets, any two sharing at most one
/// element. Elements are 0-based here and 1-based in files and messages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCover1Instance {
    ground_size: usize,
    sets: Vec<Vec<usize>>,
}

impl SetCover1Instance {
    pub fn new(ground_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(sets.len());
        for (t, mut set) in sets.into_iter().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(Error::InvalidInput(format!("set {} is empty", t + 1)));
            }
            if let Some(&e) = set.iter().find(|&&e| e >= ground_size) {
                return Err(Error::InvalidInput(format!(
                    "set {} has element {} outside 1..={ground_size}",
                    t + 1,
                    e + 1
                )));
            }
            normalized.push(set);
        }
        let max_sets = ground_size * (ground_size + 1) / 2;
        if normalized.len() > max_sets {
            return Err(Error::InvalidInput(format!(
                "{} sets exceed the bound n(n+1)/2 = {max_sets}",
                normalized.len()
            )));
        }
        let bits: Vec<Bitset> = normalized
            .iter()
            .map(|s| Bitset::from_indices(ground_size, s.iter().copied()))
            .collect();
        for a in 0..bits.len() {
            for b in a + 1..bits.len() {
                if bits[a].intersection_count(&bits[b]) > 1 {
                    return Err(Error::InvalidInput(format!(
                        "sets {} and {} share more than one element",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        let mut covered = Bitset::new(ground_size);
        bits.iter().for_each(|b| covered.union_with(b));
        if let Some(e) = (0..ground_size).find(|&e| !covered.contains(e)) {
            return Err(Error::NotACover { element: e + 1 });
        }
        Ok(SetCover1Instance {
            ground_size,
            sets: normalized,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Errors with the first uncovered element unless `cover` (set indices)
    /// is a set cover.
    pub fn check_cover(&self, cover: &[usize]) -> Result<()> {
        let mut covered = vec![false; self.ground_size];
        for &t in cover {
            let set = self.sets.get(t).ok_or_else(|| {
                Error::InvalidInput(format!("no set {} in the instance", t + 1))
            })?;
            for &e in set {
                covered[e] = true;
            }
        }
        match covered.iter().position(|c| !c) {
            Some(e) => Err(Error::NotACover { element: e + 1 }),
            None => Ok(()),
        }
    }

    /// Rejects the cases the reductions exclude: `n < 2` or a set equal to
    /// the whole ground set (then one set is an optimal cover).
    pub fn check_reducible(&self) -> Result<()> {
        if self.ground_size < 2 {
            return Err(Error::Degenerate(format!(
                "ground set has {} element(s); need at least 2",
                self.ground_size
            )));
        }
        if let Some(t) = self.sets.iter().position(|s| s.len() == self.ground_size) {
            return Err(Error::Degenerate(format!(
                "set {} covers the whole ground set",
                t + 1
            )));
        }
        Ok(())
    }
}

/// Round-robin (circle method) 1-factorization of `K_{2m}`: `2m − 1` perfect
/// matchings on `0..2m`, each with its pairs `(a, b)`, `a < b`, in
/// lexicographic order.
pub fn one_factorization(m: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(m >= 1, "K_2m needs m >= 1");
    let rounds = 2 * m - 1;
    let fixed = 2 * m - 1;
    (0..rounds)
        .map(|r| {
            let mut matching = vec![(r.min(fixed), r.max(fixed))];
            for k in 1..m {
                let a = (r + k) % rounds;
                let b = (r + rounds - k) % rounds;
                matching.push((a.min(b), a.max(b)));
            }
            matching.sort_unstable();
            matching
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    /// Copy of an element in block `copy`.
    XCopy { copy: usize, element: usize },
    /// Copy of a set in block `copy`.
    SCopy { copy: usize, set: usize },
    XPrime1 { element: usize },
    XPrime2 { element: usize },
    Z { index: usize },
}

impl fmt::Display for VertexRole {
    /// One-based fields: `X <copy> <element>`, `S <copy> <set>`,
    /// `X1 <element>`, `X2 <element>`, `Z <index>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexRole::XCopy { copy, element } => write!(f, "X {} {}", copy + 1, element + 1),
            VertexRole::SCopy { copy, set } => write!(f, "S {} {}", copy + 1, set + 1),
            VertexRole::XPrime1 { element } => write!(f, "X1 {}", element + 1),
            VertexRole::XPrime2 { element } => write!(f, "X2 {}", element + 1),
            VertexRole::Z { index } => write!(f, "Z {}", index + 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionTarget {
    DiscriminatingCode,
    IdentifyingCode,
}

/// A reduced instance with its vertex roles.
#[derive(Debug, Clone)]
pub struct ReducedInstance {
    pub source: SetCover1Instance,
    pub target: ReductionTarget,
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    /// `ℓ = 2n² − 1`, the number of copies.
    pub ell: usize,
    /// `|Z|`: `2n²` for identifying codes, 0 otherwise.
    pub z_count: usize,
    /// The `Z`-pair of each set copy (identifying-code instances only).
    pub pair_numbering: Vec<Option<(usize, usize)>>,
}

impl ReducedInstance {
    fn n(&self) -> usize {
        self.source.ground_size
    }

    fn k(&self) -> usize {
        self.source.sets.len()
    }

    pub fn x_copy(&self, copy: usize, element: usize) -> usize {
        copy * (self.n() + self.k()) + element
    }

    pub fn s_copy(&self, copy: usize, set: usize) -> usize {
        copy * (self.n() + self.k()) + self.n() + set
    }

    pub fn x_prime1(&self, element: usize) -> usize {
        self.ell * (self.n() + self.k()) + element
    }

    pub fn x_prime2(&self, element: usize) -> usize {
        self.ell * (self.n() + self.k()) + self.n() + element
    }

    pub fn z(&self, index: usize) -> usize {
        self.ell * (self.n() + self.k()) + 2 * self.n() + index
    }

    /// `X_DC`: all element copies, `X'1` and `Z`.
    pub fn x_side(&self) -> VertexSet {
        let members = self.roles.iter().enumerate().filter_map(|(v, r)| {
            matches!(
                r,
                VertexRole::XCopy { .. } | VertexRole::XPrime1 { .. } | VertexRole::Z { .. }
            )
            .then_some(v)
        });
        VertexSet::new(self.graph.n(), members).expect("in range")
    }

    /// `Y_DC`: all set copies and `X'2`.
    pub fn y_side(&self) -> VertexSet {
        let members = self.roles.iter().enumerate().filter_map(|(v, r)| {
            matches!(r, VertexRole::SCopy { .. } | VertexRole::XPrime2 { .. }).then_some(v)
        });
        VertexSet::new(self.graph.n(), members).expect("in range")
    }

    /// Vertex-count formula `ℓ(n + |S|) + 2n (+ 2n²)`.
    pub fn expected_vertex_count(&self) -> usize {
        self.ell * (self.n() + self.k()) + 2 * self.n() + self.z_count
    }

    /// `D_i`: sets whose copy in block `copy` lies in `code`.
    fn sets_in_copy(&self, code: &Bitset, copy: usize) -> Vec<usize> {
        (0..self.k())
            .filter(|&t| code.contains(self.s_copy(copy, t)))
            .collect()
    }

    fn copies_of_cover(&self, cover: &[usize]) -> impl Iterator<Item = usize> + '_ {
        let cover = cover.to_vec();
        (0..self.ell).flat_map(move |i| {
            cover
                .iter()
                .map(move |&t| self.s_copy(i, t))
                .collect::<Vec<_>>()
        })
    }

    /// Smallest `D_i` that is a set cover, lowest `i` on ties.
    fn smallest_cover(&self, code: &Bitset) -> Option<Vec<usize>> {
        (0..self.ell)
            .map(|i| self.sets_in_copy(code, i))
            .filter(|d| self.source.check_cover(d).is_ok())
            .min_by_key(Vec::len)
    }
}

fn build(sc: &SetCover1Instance, target: ReductionTarget) -> Result<ReducedInstance> {
    sc.check_reducible()?;
    let n = sc.ground_size;
    let k = sc.sets.len();
    let ell = 2 * n * n - 1;
    let z_count = match target {
        ReductionTarget::DiscriminatingCode => 0,
        ReductionTarget::IdentifyingCode => 2 * n * n,
    };
    let total = ell * (n + k) + 2 * n + z_count;
    let mut red = ReducedInstance {
        source: sc.clone(),
        target,
        graph: Graph::empty(0),
        roles: Vec::with_capacity(total),
        ell,
        z_count,
        pair_numbering: vec![None; total],
    };
    for copy in 0..ell {
        red.roles
            .extend((0..n).map(|element| VertexRole::XCopy { copy, element }));
        red.roles.extend((0..k).map(|set| VertexRole::SCopy { copy, set }));
    }
    red.roles.extend((0..n).map(|element| VertexRole::XPrime1 { element }));
    red.roles.extend((0..n).map(|element| VertexRole::XPrime2 { element }));
    red.roles.extend((0..z_count).map(|index| VertexRole::Z { index }));

    let mut edges = Vec::new();
    for copy in 0..ell {
        for (t, set) in sc.sets.iter().enumerate() {
            for &e in set {
                edges.push((red.x_copy(copy, e), red.s_copy(copy, t)));
            }
        }
    }
    for e in 0..n {
        edges.push((red.x_prime1(e), red.x_prime2(e)));
        for copy in 0..ell {
            edges.push((red.x_copy(copy, e), red.x_prime2(e)));
        }
    }
    if target == ReductionTarget::IdentifyingCode {
        // ℓ = 2n² − 1 matchings of n² pairs each, and |S| ≤ n(n+1)/2 ≤ n².
        for (copy, matching) in one_factorization(n * n).into_iter().enumerate() {
            for (t, &(a, b)) in matching.iter().take(k).enumerate() {
                let s = red.s_copy(copy, t);
                red.pair_numbering[s] = Some((a, b));
                edges.push((red.z(a), s));
                edges.push((red.z(b), s));
            }
        }
    }
    red.graph = Graph::from_edges(total, edges)?;
    Ok(red)
}

/// `G_DC` for the discriminating-code reduction.
pub fn build_dc_instance(sc: &SetCover1Instance) -> Result<ReducedInstance> {
    build(sc, ReductionTarget::DiscriminatingCode)
}

/// `G_IC` for the identifying-code reduction.
pub fn build_ic_instance(sc: &SetCover1Instance) -> Result<ReducedInstance> {
    build(sc, ReductionTarget::IdentifyingCode)
}

fn expect_target(red: &ReducedInstance, target: ReductionTarget) -> Result<()> {
    if red.target == target {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "expected a {target:?} instance, got {:?}",
            red.target
        )))
    }
}

/// Copies of the cover in every block plus `X'2`: a discriminating code of
/// size `n + ℓ·|D|`.
pub fn setcover_to_dc_solution(red: &ReducedInstance, cover: &[usize]) -> Result<VertexSet> {
    expect_target(red, ReductionTarget::DiscriminatingCode)?;
    red.source.check_cover(cover)?;
    let x2 = (0..red.n()).map(|e| red.x_prime2(e));
    VertexSet::new(red.graph.n(), red.copies_of_cover(cover).chain(x2))
}

/// The smallest `D_i = C ∩ S_i`, each of which is a set cover when `C` is a
/// discriminating code; `|D| ≤ (|C| − n)/ℓ`.
pub fn dc_solution_to_setcover(red: &ReducedInstance, code: &VertexSet) -> Result<Vec<usize>> {
    expect_target(red, ReductionTarget::DiscriminatingCode)?;
    let verdict = verify_discriminating_code(&red.graph, &red.x_side(), &red.y_side(), code)?;
    if !verdict.is_valid() {
        return Err(Error::InvalidCode(verdict.to_string()));
    }
    red.smallest_cover(&code.to_bitset())
        .ok_or_else(|| Error::Internal("no copy of the code restricts to a set cover".into()))
}

/// Copies of the cover in every block plus `X_1 ∪ X'2 ∪ Z`: an identifying
/// code of size `ℓ·|D| + 2n + 2n²`.
pub fn setcover_to_ic_solution(red: &ReducedInstance, cover: &[usize]) -> Result<Code> {
    expect_target(red, ReductionTarget::IdentifyingCode)?;
    red.source.check_cover(cover)?;
    let n = red.n();
    let fixed = (0..n)
        .map(|e| red.x_copy(0, e))
        .chain((0..n).map(|e| red.x_prime2(e)))
        .chain((0..red.z_count).map(|a| red.z(a)));
    Ok(Code::identifying(VertexSet::new(
        red.graph.n(),
        red.copies_of_cover(cover).chain(fixed),
    )?))
}

/// Result of mapping an identifying code back to a set cover.
#[derive(Debug, Clone)]
pub struct IcMapBack {
    pub cover: Vec<usize>,
    /// The repaired code `C' ∪ Z ∪ X_1 ∪ X'2`, whose every block restricts to
    /// a set cover.
    pub repaired: Code,
    /// Number of swaps performed.
    pub swaps: usize,
}

/// Repairs an identifying code of `G_IC` block by block, from the first
/// block on, until every `D_i = C' ∩ S_i` is a set cover, and returns the
/// smallest `D_i`; `|D| ≤ |C|/ℓ`.
///
/// For an element `x` missed by `D_i`, its copy `x_i` must be separated from
/// `x' ∈ X'1`, so `x_i ∈ C'` or `x' ∈ C'` (the first is preferred). That
/// vertex is swapped for the lowest-index set copy in `S_i` containing `x`.
pub fn ic_solution_to_setcover(red: &ReducedInstance, code: &Code) -> Result<IcMapBack> {
    expect_target(red, ReductionTarget::IdentifyingCode)?;
    let verdict = verify_identifying_code(&red.graph, code)?;
    if !verdict.is_valid() {
        return Err(Error::InvalidCode(verdict.to_string()));
    }
    let n = red.n();
    let mut current = code.vertices.to_bitset();
    let mut swaps = 0;
    for copy in 0..red.ell {
        loop {
            let d = red.sets_in_copy(&current, copy);
            let Err(Error::NotACover { element }) = red.source.check_cover(&d) else {
                break;
            };
            let e = element - 1;
            let (xi, xp) = (red.x_copy(copy, e), red.x_prime1(e));
            let removed = if current.contains(xi) {
                xi
            } else if current.contains(xp) {
                xp
            } else {
                return Err(Error::Internal(format!(
                    "element copy {xi} is not separated from {xp}"
                )));
            };
            let t = red
                .source
                .sets
                .iter()
                .position(|s| s.contains(&e))
                .expect("every element lies in some set");
            current.insert(red.s_copy(copy, t));
            current.remove(removed);
            swaps += 1;
        }
    }
    for e in 0..n {
        current.insert(red.x_copy(0, e));
        current.insert(red.x_prime2(e));
    }
    for a in 0..red.z_count {
        current.insert(red.z(a));
    }
    let repaired = Code::identifying(VertexSet::from_bitset(&current));
    let verdict = verify_identifying_code(&red.graph, &repaired)?;
    if !verdict.is_valid() {
        return Err(Error::Internal(format!("repaired code failed: {verdict}")));
    }
    let cover = red
        .smallest_cover(&current)
        .ok_or_else(|| Error::Internal("repair left a block without a cover".into()))?;
    Ok(IcMapBack {
        cover,
        repaired,
        swaps,
    })
}
