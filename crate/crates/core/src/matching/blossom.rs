//! Edmonds' blossom algorithm over bit-row adjacency, restricted to an
//! `alive` vertex mask so that `G - S` never has to be materialized.

use crate::graph::{bit, Bits};

pub(crate) const NONE: usize = usize::MAX;

pub(crate) struct Blossom<'a> {
    rows: &'a [u64],
    alive: u64,
    pub(crate) mate: [usize; 64],
    parent: [usize; 64],
    base: [usize; 64],
    queue: [usize; 64],
    head: usize,
    tail: usize,
    used: u64,
    in_blossom: u64,
}

impl<'a> Blossom<'a> {
    pub(crate) fn new(rows: &'a [u64], alive: u64) -> Self {
        Blossom {
            rows,
            alive,
            mate: [NONE; 64],
            parent: [NONE; 64],
            base: [0; 64],
            queue: [0; 64],
            head: 0,
            tail: 0,
            used: 0,
            in_blossom: 0,
        }
    }

    /// Matches each vertex, in ascending order, to its lowest free neighbor.
    pub(crate) fn greedy(&mut self) {
        for v in Bits(self.alive) {
            if self.mate[v] != NONE {
                continue;
            }
            let mut free = self.rows[v] & self.alive;
            while free != 0 {
                let w = free.trailing_zeros() as usize;
                free &= free - 1;
                if self.mate[w] == NONE {
                    self.mate[v] = w;
                    self.mate[w] = v;
                    break;
                }
            }
        }
    }

    fn push(&mut self, v: usize) {
        self.used |= bit(v);
        self.queue[self.tail] = v;
        self.tail += 1;
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= bit(a);
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen & bit(b) != 0 {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom |= bit(self.base[v]) | bit(self.base[self.mate[v]]);
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from the exposed vertex `root`,
    /// returning the exposed vertex it ends at.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used = 0;
        self.parent = [NONE; 64];
        for v in Bits(self.alive) {
            self.base[v] = v;
        }
        self.head = 0;
        self.tail = 0;
        self.push(root);
        while self.head < self.tail {
            let v = self.queue[self.head];
            self.head += 1;
            for to in Bits(self.rows[v] & self.alive) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom onto its base
                    let cur = self.lca(v, to);
                    self.in_blossom = 0;
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in Bits(self.alive) {
                        if self.in_blossom & bit(self.base[i]) != 0 {
                            self.base[i] = cur;
                            if self.used & bit(i) == 0 {
                                self.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut to: usize) {
        while to != NONE {
            let pv = self.parent[to];
            let ppv = self.mate[pv];
            self.mate[to] = pv;
            self.mate[pv] = to;
            to = ppv;
        }
    }

    /// Tries to cover `root` by augmenting; returns whether it succeeded.
    pub(crate) fn grow_from(&mut self, root: usize) -> bool {
        match self.find_path(root) {
            Some(end) => {
                self.augment(end);
                true
            }
            None => false,
        }
    }

    /// Runs to a maximum matching.
    pub(crate) fn solve(&mut self) {
        self.greedy();
        for v in Bits(self.alive) {
            if self.mate[v] == NONE {
                self.grow_from(v);
            }
        }
    }

    pub(crate) fn size(&self) -> usize {
        Bits(self.alive).filter(|&v| self.mate[v] != NONE).count() / 2
    }
}

/// Whether the subgraph induced by `alive` has a perfect matching.
///
/// An exposed vertex with no augmenting path stays exposed in every maximum
/// matching, so the search stops at the first such vertex.
pub(crate) fn perfect_matching_exists(rows: &[u64], alive: u64) -> bool {
    if alive.count_ones() % 2 == 1 {
        return false;
    }
    if Bits(alive).any(|v| rows[v] & alive == 0) {
        return false;
    }
    let mut b = Blossom::new(rows, alive);
    b.greedy();
    for v in Bits(alive) {
        if b.mate[v] == NONE && !b.grow_from(v) {
            return false;
        }
    }
    true
}
