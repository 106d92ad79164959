//! Constant-factor approximation of minimum identifying codes on interval
//! graphs by LP rounding.
//!
//! The covering program `P` (one domination row per vertex, one separation
//! row per pair) splits into `P_inter`, the separation rows of adjacent
//! pairs, and `P_disj`, the separation rows of non-adjacent pairs plus the
//! domination rows.
//!
//! * `P_inter`: for an edge `jk`, `N[j] △ N[k]` splits into the intervals
//!   ending between the begin points of `j` and `k` (left window) and those
//!   beginning between their end points (right window). After solving the
//!   relaxation, each edge is assigned to whichever window carries at least
//!   half of its fractional mass. Each side then has the consecutive-ones
//!   property and is solved exactly by interval stabbing. Doubling the
//!   fractional point is feasible for both sides, so the result is at most
//!   `4·OPT(P_inter*)`.
//! * `P_disj`: the greedy "earliest end first" maximal independent set is
//!   feasible and has size at most `2·OPT(P_disj*)`.
//!
//! The union is an identifying code of size at most `6·OPT(P*)`.
//!
//! Endpoints are compared through canonical ranks: all `2n` endpoints in a
//! strict order that refines coordinate order, with begin points before end
//! points at equal coordinates (so touching closed intervals still meet) and
//! vertex id breaking the remaining ties.

use std::fmt;

use num_traits::{One, Zero};

use crate::code::{verify_identifying_code, Code};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::lp::{ratio, solve_lp, LinearProgram, LpSolution, LpStatus, Rational};

/// A closed interval `[begin, end]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub begin: Rational,
    pub end: Rational,
}

impl Interval {
    pub fn new(begin: Rational, end: Rational) -> Self {
        Interval { begin, end }
    }

    pub fn from_ints(begin: i64, end: i64) -> Self {
        Interval::new(crate::lp::rational(begin), crate::lp::rational(end))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.begin <= other.end && other.begin <= self.end
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.begin, self.end)
    }
}

/// Intervals with their canonical endpoint ranks (a permutation of `1..=2n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRep {
    intervals: Vec<Interval>,
    begin_rank: Vec<usize>,
    end_rank: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum EndpointKind {
    Begin,
    End,
}

impl IntervalRep {
    /// Validates the intervals and assigns canonical ranks.
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        if let Some((v, iv)) = intervals.iter().enumerate().find(|(_, iv)| iv.begin > iv.end) {
            return Err(Error::InvalidInput(format!(
                "interval {v} is malformed: begin {} > end {}",
                iv.begin, iv.end
            )));
        }
        let n = intervals.len();
        let mut events: Vec<(&Rational, EndpointKind, usize)> = Vec::with_capacity(2 * n);
        for (v, iv) in intervals.iter().enumerate() {
            events.push((&iv.begin, EndpointKind::Begin, v));
            events.push((&iv.end, EndpointKind::End, v));
        }
        events.sort();
        let mut begin_rank = vec![0; n];
        let mut end_rank = vec![0; n];
        for (i, &(_, kind, v)) in events.iter().enumerate() {
            match kind {
                EndpointKind::Begin => begin_rank[v] = i + 1,
                EndpointKind::End => end_rank[v] = i + 1,
            }
        }
        Ok(IntervalRep {
            intervals,
            begin_rank,
            end_rank,
        })
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Result<Self> {
        IntervalRep::new(pairs.iter().map(|&(b, e)| Interval::from_ints(b, e)).collect())
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn begin_rank(&self, v: usize) -> usize {
        self.begin_rank[v]
    }

    pub fn end_rank(&self, v: usize) -> usize {
        self.end_rank[v]
    }

    /// Rank-based adjacency; agrees with closed-interval intersection.
    pub fn ranks_intersect(&self, u: usize, v: usize) -> bool {
        self.begin_rank[u] < self.end_rank[v] && self.begin_rank[v] < self.end_rank[u]
    }

    /// The intersection graph.
    pub fn graph(&self) -> Graph {
        let n = self.len();
        let mut by_begin: Vec<usize> = (0..n).collect();
        by_begin.sort_by_key(|&v| self.begin_rank[v]);
        let mut edges = Vec::new();
        for (i, &u) in by_begin.iter().enumerate() {
            for &v in &by_begin[i + 1..] {
                if self.begin_rank[v] > self.end_rank[u] {
                    break;
                }
                edges.push((u.min(v), u.max(v)));
            }
        }
        Graph::from_edges(n, edges).expect("edges are in range")
    }

    /// Errors unless `g` is exactly the intersection graph.
    pub fn check_matches(&self, g: &Graph) -> Result<()> {
        if g.n() != self.len() {
            return Err(Error::InvalidInput(format!(
                "graph has {} vertices but the representation has {} intervals",
                g.n(),
                self.len()
            )));
        }
        let h = self.graph();
        if let Some((u, v)) = first_difference(g, &h) {
            return Err(Error::InvalidInput(format!(
                "interval representation does not match the graph at pair {u},{v}"
            )));
        }
        Ok(())
    }
}

fn first_difference(g: &Graph, h: &Graph) -> Option<(usize, usize)> {
    (0..g.n()).find_map(|u| {
        let a = g.neighbors(u);
        let b = h.neighbors(u);
        if a == b {
            return None;
        }
        let v = a
            .iter()
            .zip(b)
            .find(|(x, y)| x != y)
            .map(|(x, y)| *x.min(y))
            .unwrap_or_else(|| if a.len() > b.len() { a[b.len()] } else { b[a.len()] });
        Some((u.min(v), u.max(v)))
    })
}

/// Recomputes canonical ranks. Idempotent; adjacency is unchanged.
pub fn canonicalize(rep: &IntervalRep) -> Result<IntervalRep> {
    IntervalRep::new(rep.intervals.clone())
}

/// The window split of `N[j] △ N[k]` for an edge `jk`.
///
/// `left` is the half-open range `[b1, b2)` of END ranks, where `b1 < b2` are
/// the begin ranks of `j` and `k`; `right` is the half-open range `(e1, e2]`
/// of BEGIN ranks, where `e1 < e2` are their end ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowPair {
    pub edge: (usize, usize),
    pub left: (usize, usize),
    pub right: (usize, usize),
}

impl WindowPair {
    /// `L_jk`: vertices whose end rank lies in the left window.
    pub fn left_members(&self, rep: &IntervalRep) -> VertexSet {
        let (lo, hi) = self.left;
        members(rep.len(), |v| (lo..hi).contains(&rep.end_rank(v)))
    }

    /// `R_jk`: vertices whose begin rank lies in the right window.
    pub fn right_members(&self, rep: &IntervalRep) -> VertexSet {
        let (lo, hi) = self.right;
        members(rep.len(), |v| lo < rep.begin_rank(v) && rep.begin_rank(v) <= hi)
    }
}

fn members(n: usize, keep: impl Fn(usize) -> bool) -> VertexSet {
    VertexSet::new(n, (0..n).filter(|&v| keep(v))).expect("in range")
}

pub fn windows(rep: &IntervalRep, j: usize, k: usize) -> Result<WindowPair> {
    for v in [j, k] {
        if v >= rep.len() {
            return Err(Error::VertexOutOfRange { vertex: v, n: rep.len() });
        }
    }
    if j == k {
        return Err(Error::SameVertex(j));
    }
    if !rep.ranks_intersect(j, k) {
        return Err(Error::NotAdjacent(j, k));
    }
    let (bj, bk) = (rep.begin_rank(j), rep.begin_rank(k));
    let (ej, ek) = (rep.end_rank(j), rep.end_rank(k));
    Ok(WindowPair {
        edge: (j.min(k), j.max(k)),
        left: (bj.min(bk), bj.max(bk)),
        right: (ej.min(ek), ej.max(ek)),
    })
}

/// Which covering program to build or solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProgramKind {
    Full,
    Inter,
    Disj,
}

/// `P`, `P_inter` and `P_disj` over variables `0..n` (variable `i` is vertex
/// `i`).
#[derive(Debug, Clone)]
pub struct Programs {
    pub full: LinearProgram,
    pub inter: LinearProgram,
    pub disj: LinearProgram,
    /// The edge behind each row of `inter`.
    pub inter_edges: Vec<(usize, usize)>,
}

impl Programs {
    pub fn get(&self, which: ProgramKind) -> &LinearProgram {
        match which {
            ProgramKind::Full => &self.full,
            ProgramKind::Inter => &self.inter,
            ProgramKind::Disj => &self.disj,
        }
    }
}

fn check_instance(g: &Graph, rep: &IntervalRep) -> Result<()> {
    rep.check_matches(g)?;
    if let Some((u, v)) = g.first_twins() {
        return Err(Error::Twins(u, v));
    }
    Ok(())
}

/// Builds the three programs. `P` lists domination rows first, then
/// separation rows by lexicographic pair; `P_inter` and `P_disj` keep that
/// order within their share of the rows.
pub fn build_programs(g: &Graph, rep: &IntervalRep) -> Result<Programs> {
    check_instance(g, rep)?;
    let n = g.n();
    let mut full = LinearProgram::new(n);
    let mut inter = LinearProgram::new(n);
    let mut disj = LinearProgram::new(n);
    let mut inter_edges = Vec::new();
    for v in 0..n {
        let row: Vec<usize> = g.closed_bits(v).iter().collect();
        full.add_covering_row(row.iter().copied());
        disj.add_covering_row(row);
    }
    for j in 0..n {
        for k in j + 1..n {
            let row = g.closed_bits(j).xor(&g.closed_bits(k)).to_vec();
            full.add_covering_row(row.iter().copied());
            if g.has_edge(j, k) {
                inter.add_covering_row(row);
                inter_edges.push((j, k));
            } else {
                disj.add_covering_row(row);
            }
        }
    }
    Ok(Programs {
        full,
        inter,
        disj,
        inter_edges,
    })
}

fn solve_optimal(lp: &LinearProgram) -> Result<LpSolution> {
    let s = solve_lp(lp)?;
    match s.status {
        LpStatus::Optimal => Ok(s),
        _ => Err(Error::Infeasible("covering program has an empty row".into())),
    }
}

/// Exact optimum of the relaxation of `P`, `P_inter` or `P_disj`.
pub fn opt_fractional(g: &Graph, rep: &IntervalRep, which: ProgramKind) -> Result<Rational> {
    let programs = build_programs(g, rep)?;
    Ok(solve_optimal(programs.get(which))?.value)
}

/// A minimum set of positions hitting every inclusive range `(lo, hi)`:
/// sort by right end and stab the right end of each range not yet hit.
/// Returned ascending.
pub fn greedy_stab(ranges: &[(usize, usize)]) -> Result<Vec<usize>> {
    if let Some(&(lo, hi)) = ranges.iter().find(|(lo, hi)| lo > hi) {
        return Err(Error::Infeasible(format!("empty range [{lo}, {hi}]")));
    }
    let mut sorted = ranges.to_vec();
    sorted.sort_unstable_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    let mut stabs: Vec<usize> = Vec::new();
    for (lo, hi) in sorted {
        if stabs.last().is_some_and(|&s| s >= lo) {
            continue;
        }
        stabs.push(hi);
    }
    Ok(stabs)
}

/// One side (left or right) of the rounded `P_inter` solution.
#[derive(Debug, Clone)]
pub struct StabbingSide {
    /// Edges assigned to this side.
    pub edges: Vec<(usize, usize)>,
    /// Distinct window rows `L_jk` (or `R_jk`) of those edges.
    pub rows: Vec<VertexSet>,
    /// Vertices chosen by stabbing the rows in endpoint order.
    pub chosen: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct InterSolution {
    pub vertices: VertexSet,
    /// Optimal point of `P_inter*`; empty when there are no edges.
    pub fractional: Vec<Rational>,
    pub lp_value: Rational,
    pub left: StabbingSide,
    pub right: StabbingSide,
}

/// Vertices sorted by `key`, with each vertex's position in that order.
fn order_by(n: usize, key: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<usize>) {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    (order, position)
}

/// Stabs the window rows of one side. Each row is contiguous in `order`, so
/// it is passed to [`greedy_stab`] as the range of its positions.
fn stab_side(
    rows_by_edge: Vec<((usize, usize), VertexSet)>,
    order: &[usize],
    position: &[usize],
) -> Result<StabbingSide> {
    let edges = rows_by_edge.iter().map(|(e, _)| *e).collect();
    let mut rows: Vec<VertexSet> = rows_by_edge.into_iter().map(|(_, r)| r).collect();
    rows.sort();
    rows.dedup();
    let mut ranges = Vec::with_capacity(rows.len());
    for row in &rows {
        let lo = row.iter().map(|v| position[v]).min();
        let hi = row.iter().map(|v| position[v]).max();
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return Err(Error::Internal("window row selected with no members".into()));
        };
        if hi - lo + 1 != row.len() {
            return Err(Error::Internal("window row is not contiguous".into()));
        }
        ranges.push((lo, hi));
    }
    let mut chosen: Vec<usize> = greedy_stab(&ranges)?.into_iter().map(|p| order[p]).collect();
    chosen.sort_unstable();
    Ok(StabbingSide {
        edges,
        rows,
        chosen,
    })
}

/// Solution of `P_inter` of size at most `4·OPT(P_inter*)`.
pub fn solve_inter(g: &Graph, rep: &IntervalRep) -> Result<InterSolution> {
    let programs = build_programs(g, rep)?;
    let n = g.n();
    if programs.inter_edges.is_empty() {
        let empty = StabbingSide {
            edges: Vec::new(),
            rows: Vec::new(),
            chosen: Vec::new(),
        };
        return Ok(InterSolution {
            vertices: VertexSet::empty(n),
            fractional: Vec::new(),
            lp_value: Rational::zero(),
            left: empty.clone(),
            right: empty,
        });
    }
    let relaxed = solve_optimal(&programs.inter)?;
    let x = &relaxed.point;
    let half = ratio(1, 2);
    let mass = |set: &VertexSet| set.iter().fold(Rational::zero(), |acc, v| acc + &x[v]);

    let mut left_rows = Vec::new();
    let mut right_rows = Vec::new();
    for &(j, k) in &programs.inter_edges {
        let w = windows(rep, j, k)?;
        let l = w.left_members(rep);
        let r = w.right_members(rep);
        let (in_left, in_right) = (mass(&l) >= half, mass(&r) >= half);
        if !in_left && !in_right {
            return Err(Error::Internal(format!(
                "edge {j}-{k} has less than 1/2 on both windows"
            )));
        }
        if in_left {
            left_rows.push(((j, k), l));
        }
        if in_right {
            right_rows.push(((j, k), r));
        }
    }

    let (by_end, end_pos) = order_by(n, |v| rep.end_rank(v));
    let (by_begin, begin_pos) = order_by(n, |v| rep.begin_rank(v));
    let left = stab_side(left_rows, &by_end, &end_pos)?;
    let right = stab_side(right_rows, &by_begin, &begin_pos)?;
    let vertices = VertexSet::new(n, left.chosen.iter().chain(&right.chosen).copied())?;
    Ok(InterSolution {
        vertices,
        fractional: relaxed.point,
        lp_value: relaxed.value,
        left,
        right,
    })
}

/// Greedy maximal independent set by earliest end: take the remaining
/// interval that ends first and delete its closed neighborhood. Returned in
/// selection order (ascending end rank).
pub fn solve_disj(g: &Graph, rep: &IntervalRep) -> Result<Vec<usize>> {
    rep.check_matches(g)?;
    let (by_end, _) = order_by(g.n(), |v| rep.end_rank(v));
    let mut removed = vec![false; g.n()];
    let mut selected = Vec::new();
    for v in by_end {
        if removed[v] {
            continue;
        }
        selected.push(v);
        removed[v] = true;
        for &w in g.neighbors(v) {
            removed[w] = true;
        }
    }
    Ok(selected)
}

/// Output of the full approximation with the quantities of its guarantee.
#[derive(Debug, Clone)]
pub struct IntervalApprox {
    pub code: Code,
    pub inter: InterSolution,
    pub disj: Vec<usize>,
    pub opt_full: Rational,
    pub opt_inter: Rational,
    pub opt_disj: Rational,
}

/// One link of the bound chain `|C| ≤ 4·OPT(P_inter*) + 2·OPT(P_disj*) ≤
/// 6·OPT(P*)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

impl IntervalApprox {
    pub fn bound_chain(&self) -> Vec<BoundCheck> {
        let r = |n: usize| Rational::from_integer(n.into());
        let four = r(4);
        let two = r(2);
        let six = r(6);
        let combined = &four * &self.opt_inter + &two * &self.opt_disj;
        vec![
            BoundCheck {
                name: "|C| <= |S_inter| + |S_disj|",
                lhs: r(self.code.len()),
                rhs: r(self.inter.vertices.len() + self.disj.len()),
            },
            BoundCheck {
                name: "|S_inter| <= 4*OPT(P_inter*)",
                lhs: r(self.inter.vertices.len()),
                rhs: &four * &self.opt_inter,
            },
            BoundCheck {
                name: "|S_disj| <= 2*OPT(P_disj*)",
                lhs: r(self.disj.len()),
                rhs: &two * &self.opt_disj,
            },
            BoundCheck {
                name: "4*OPT(P_inter*) + 2*OPT(P_disj*) <= 6*OPT(P*)",
                lhs: combined,
                rhs: &six * &self.opt_full,
            },
            BoundCheck {
                name: "|C| <= 6*OPT(P*)",
                lhs: r(self.code.len()),
                rhs: &six * &self.opt_full,
            },
        ]
    }

    /// `|C| / OPT(P*)`, or `None` for the empty graph.
    pub fn ratio_to_fractional(&self) -> Option<Rational> {
        (!self.opt_full.is_zero())
            .then(|| Rational::from_integer(self.code.len().into()) / &self.opt_full)
    }
}

/// Identifying code of an interval graph of size at most `6·OPT(P*)`.
pub fn approx_id_code_interval(g: &Graph, rep: &IntervalRep) -> Result<IntervalApprox> {
    let programs = build_programs(g, rep)?;
    let opt_full = solve_optimal(&programs.full)?.value;
    let opt_disj = solve_optimal(&programs.disj)?.value;
    let inter = solve_inter(g, rep)?;
    let opt_inter = inter.lp_value.clone();
    let disj = solve_disj(g, rep)?;
    let code = Code::identifying(VertexSet::new(
        g.n(),
        inter.vertices.iter().chain(disj.iter().copied()),
    )?);
    let verdict = verify_identifying_code(g, &code)?;
    if !verdict.is_valid() {
        return Err(Error::Internal(format!("approximate code failed: {verdict}")));
    }
    Ok(IntervalApprox {
        code,
        inter,
        disj,
        opt_full,
        opt_inter,
        opt_disj,
    })
}

/// Whether a rational is an integer.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::exact_min_id_code;
    use crate::lp::rational;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::new(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn touching_intervals_stay_adjacent() {
        let rep = IntervalRep::from_ints(&[(1, 2), (2, 3)]).unwrap();
        assert!(rep.ranks_intersect(0, 1));
        assert_eq!(rep.begin_rank(1), 2);
        assert_eq!(rep.end_rank(0), 3);
        assert_eq!(rep.graph().edge_count(), 1);
    }

    #[test]
    fn distinct_endpoints_follow_coordinates() {
        let rep = IntervalRep::from_ints(&[(0, 5), (2, 7), (6, 9)]).unwrap();
        assert_eq!(
            (0..3).map(|v| (rep.begin_rank(v), rep.end_rank(v))).collect::<Vec<_>>(),
            vec![(1, 3), (2, 5), (4, 6)]
        );
        assert_eq!(canonicalize(&rep).unwrap(), rep);
    }

    #[test]
    fn identical_intervals_rank_by_id() {
        let rep = IntervalRep::from_ints(&[(1, 2), (1, 2)]).unwrap();
        assert!(rep.begin_rank(0) < rep.begin_rank(1));
        assert!(rep.end_rank(0) < rep.end_rank(1));
        let g = rep.graph();
        assert_eq!(build_programs(&g, &rep).unwrap_err(), Error::Twins(0, 1));
    }

    #[test]
    fn malformed_interval() {
        assert!(matches!(
            IntervalRep::from_ints(&[(3, 1)]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn window_examples() {
        // j = [1,6], k = [3,8] with probes.
        let rep = IntervalRep::from_ints(&[(1, 6), (3, 8), (0, 2), (7, 9)]).unwrap();
        let w = windows(&rep, 0, 1).unwrap();
        assert_eq!(w.left_members(&rep), set(4, &[2]));
        assert_eq!(w.right_members(&rep), set(4, &[3]));
        // Containment: j = [1,10], k = [3,5], i = [6,8].
        let rep = IntervalRep::from_ints(&[(1, 10), (3, 5), (6, 8)]).unwrap();
        let w = windows(&rep, 0, 1).unwrap();
        assert!(w.left_members(&rep).is_empty());
        assert_eq!(w.right_members(&rep), set(3, &[2]));
        assert_eq!(
            rep.graph().neighborhood_symmetric_difference(0, 1).unwrap(),
            set(3, &[2])
        );
        let rep = IntervalRep::from_ints(&[(0, 1), (2, 3)]).unwrap();
        assert_eq!(windows(&rep, 0, 1), Err(Error::NotAdjacent(0, 1)));
    }

    #[test]
    fn program_shapes() {
        let rep = IntervalRep::from_ints(&[(0, 1), (2, 3)]).unwrap();
        let p = build_programs(&rep.graph(), &rep).unwrap();
        assert_eq!(p.inter.constraints.len(), 0);
        assert_eq!(p.disj.constraints.len(), 3);
        assert_eq!(p.full.constraints.len(), 3);

        let rep = IntervalRep::from_ints(&[(0, 2), (1, 4), (3, 5)]).unwrap();
        let p = build_programs(&rep.graph(), &rep).unwrap();
        assert_eq!(p.inter_edges, vec![(0, 1), (1, 2)]);
        assert_eq!(p.disj.constraints.len(), 1 + 3);

        let rep = IntervalRep::from_ints(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(build_programs(&rep.graph(), &rep).unwrap_err(), Error::Twins(0, 1));
    }

    #[test]
    fn stabbing_examples() {
        assert_eq!(greedy_stab(&[(1, 3), (2, 4), (5, 5)]).unwrap(), vec![3, 5]);
        assert_eq!(greedy_stab(&[(2, 7)]).unwrap(), vec![7]);
        assert_eq!(greedy_stab(&[(1, 9), (4, 5)]).unwrap(), vec![5]);
        assert!(greedy_stab(&[]).unwrap().is_empty());
        assert!(matches!(greedy_stab(&[(3, 2)]), Err(Error::Infeasible(_))));
    }

    #[test]
    fn disjoint_greedy_examples() {
        let rep = IntervalRep::from_ints(&[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(solve_disj(&rep.graph(), &rep).unwrap(), vec![0, 1, 2]);
        let rep = IntervalRep::from_ints(&[(1, 4), (2, 3), (5, 6)]).unwrap();
        assert_eq!(solve_disj(&rep.graph(), &rep).unwrap(), vec![1, 2]);
        let rep = IntervalRep::from_ints(&[(1, 4)]).unwrap();
        assert_eq!(solve_disj(&rep.graph(), &rep).unwrap(), vec![0]);
    }

    #[test]
    fn inter_single_edge_with_left_probe() {
        // j = [1,6], k = [3,8] and i = [0,2] only meets j.
        let rep = IntervalRep::from_ints(&[(1, 6), (3, 8), (0, 2)]).unwrap();
        let g = rep.graph();
        let s = solve_inter(&g, &rep).unwrap();
        // N[0] △ N[1] = {2} and N[0] △ N[2] = {1}.
        assert_eq!(s.vertices, set(3, &[1, 2]));
        let no_edges = IntervalRep::from_ints(&[(0, 1), (2, 3)]).unwrap();
        assert!(solve_inter(&no_edges.graph(), &no_edges).unwrap().vertices.is_empty());
    }

    #[test]
    fn fractional_optima() {
        let k1 = IntervalRep::from_ints(&[(0, 1)]).unwrap();
        let g = k1.graph();
        assert_eq!(opt_fractional(&g, &k1, ProgramKind::Full).unwrap(), rational(1));
        assert_eq!(opt_fractional(&g, &k1, ProgramKind::Inter).unwrap(), rational(0));
    }

    #[test]
    fn path_of_six() {
        let rep = IntervalRep::from_ints(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let g = rep.graph();
        let approx = approx_id_code_interval(&g, &rep).unwrap();
        assert!(approx.bound_chain().iter().all(BoundCheck::holds));
        let opt = exact_min_id_code(&g, 20).unwrap().len();
        assert_eq!(opt, 4);
        assert!(approx.code.len() <= 6 * opt);
    }

    #[test]
    fn single_vertex() {
        let rep = IntervalRep::from_ints(&[(0, 0)]).unwrap();
        let approx = approx_id_code_interval(&rep.graph(), &rep).unwrap();
        assert_eq!(approx.code.vertices, set(1, &[0]));
    }

    #[test]
    fn representation_must_match() {
        let rep = IntervalRep::from_ints(&[(0, 1), (2, 3)]).unwrap();
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(matches!(rep.check_matches(&g), Err(Error::InvalidInput(_))));
    }
}
