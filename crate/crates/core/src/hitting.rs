//! Minimum hitting set over bitset rows: the common engine behind the exact
//! identifying-code, discriminating-code and set-cover solvers, and the
//! greedy logarithmic approximation.

use crate::bitset::Bitset;

pub(crate) struct HittingSet {
    universe: usize,
    rows: Vec<Bitset>,
}

impl HittingSet {
    /// Every row must be a bitset over `0..universe`.
    pub fn new(universe: usize, rows: Vec<Bitset>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == universe));
        HittingSet { universe, rows }
    }

    /// Repeatedly takes the element hitting the most unhit rows, lowest index
    /// on ties. Requires every row to be nonempty.
    pub fn greedy(&self) -> Vec<usize> {
        let mut active: Vec<usize> = (0..self.rows.len()).collect();
        let mut chosen = Vec::new();
        while !active.is_empty() {
            let mut counts = vec![0usize; self.universe];
            for &r in &active {
                for e in self.rows[r].iter() {
                    counts[e] += 1;
                }
            }
            let best = (0..self.universe)
                .max_by_key(|&e| (counts[e], std::cmp::Reverse(e)))
                .expect("nonempty universe");
            debug_assert!(counts[best] > 0);
            chosen.push(best);
            active.retain(|&r| !self.rows[r].contains(best));
        }
        chosen.sort_unstable();
        chosen
    }

    /// A minimum hitting set by branch and bound. Requires every row to be
    /// nonempty.
    ///
    /// Branching takes the unhit row with the fewest admissible elements and
    /// tries each of them in ascending order, forbidding the earlier ones in
    /// later branches. The bound is a greedy packing of unhit rows whose
    /// admissible elements are pairwise disjoint.
    pub fn exact(&self) -> Vec<usize> {
        let incumbent = self.greedy();
        let mut search = Search {
            rows: &self.rows,
            best: incumbent,
            chosen: Vec::new(),
        };
        let active: Vec<usize> = (0..self.rows.len()).collect();
        search.branch(&active, Bitset::full(self.universe));
        let mut best = search.best;
        best.sort_unstable();
        best
    }
}

struct Search<'a> {
    rows: &'a [Bitset],
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn branch(&mut self, active: &[usize], allowed: Bitset) {
        if active.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        // Admissible elements per unhit row, smallest first.
        let mut options: Vec<(usize, usize, Bitset)> = Vec::with_capacity(active.len());
        for &r in active {
            let opts = self.rows[r].and(&allowed);
            let count = opts.count();
            if count == 0 {
                return;
            }
            options.push((count, r, opts));
        }
        options.sort_unstable_by_key(|(count, r, _)| (*count, *r));

        let mut used = Bitset::new(allowed.len());
        let mut bound = 0;
        for (_, _, opts) in &options {
            if !opts.intersects(&used) {
                bound += 1;
                used.union_with(opts);
            }
        }
        if self.chosen.len() + bound >= self.best.len() {
            return;
        }

        let (_, _, pivot) = &options[0];
        let mut allowed = allowed;
        for e in pivot.iter() {
            allowed.remove(e);
            let rest: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&r| !self.rows[r].contains(e))
                .collect();
            self.chosen.push(e);
            self.branch(&rest, allowed.clone());
            self.chosen.pop();
            if self.chosen.len() + 1 >= self.best.len() {
                return;
            }
        }
    }
}
