//! HLT coset enumeration with coincidence handling and lookahead.

use std::collections::VecDeque;

use serde::Serialize;

use super::presentation::{Presentation, Word};

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CosetStatus {
    Complete,
    Overflowed,
}

/// A coset table. Column `2i` is generator `i`, column `2i+1` its inverse.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub status: CosetStatus,
    pub num_generators: usize,
    /// Rows of live cosets; coset 0 is the subgroup itself.
    pub rows: Vec<Vec<u32>>,
    /// Largest number of cosets alive at once.
    pub peak: usize,
}

impl CosetTable {
    /// Index of the subgroup, when the table is complete.
    pub fn index(&self) -> Option<usize> {
        (self.status == CosetStatus::Complete).then_some(self.rows.len())
    }

    pub fn is_complete(&self) -> bool {
        self.status == CosetStatus::Complete
    }

    /// Coset reached from `c` by reading `w`.
    pub fn trace(&self, c: usize, w: &[i32]) -> usize {
        w.iter().fold(c, |c, &x| self.rows[c][column(x)] as usize)
    }

    /// Every relator closes at every coset and the generators act as permutations.
    pub fn check(&self, p: &Presentation, subgroup: &[Word]) -> bool {
        if !self.is_complete() {
            return false;
        }
        let n = self.rows.len();
        for (c, row) in self.rows.iter().enumerate() {
            for (x, &d) in row.iter().enumerate() {
                if d as usize >= n || self.rows[d as usize][x ^ 1] as usize != c {
                    return false;
                }
            }
        }
        (0..n).all(|c| p.relators.iter().all(|r| self.trace(c, r) == c))
            && subgroup.iter().all(|w| self.trace(0, w) == 0)
    }

    /// For a complete table over the trivial subgroup: a word reaching each
    /// coset, found breadth-first (coset `c` is the group element it represents).
    pub fn coset_words(&self) -> Vec<Word> {
        let n = self.rows.len();
        let mut words: Vec<Option<Word>> = vec![None; n];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for x in 0..2 * self.num_generators {
                let d = self.rows[c][x] as usize;
                if words[d].is_none() {
                    let mut w = words[c].clone().expect("visited");
                    w.push(letter(x));
                    words[d] = Some(w);
                    queue.push_back(d);
                }
            }
        }
        words.into_iter().map(|w| w.expect("connected table")).collect()
    }

    /// Multiplication table `mul[a][b]`, reading cosets of the trivial subgroup as elements.
    pub fn multiplication_table(&self) -> Vec<Vec<u32>> {
        let words = self.coset_words();
        (0..self.rows.len())
            .map(|a| words.iter().map(|w| self.trace(a, w) as u32).collect())
            .collect()
    }
}

fn column(x: i32) -> usize {
    let g = (x.unsigned_abs() - 1) as usize;
    if x > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

fn letter(col: usize) -> i32 {
    let g = (col / 2) as i32 + 1;
    if col % 2 == 0 {
        g
    } else {
        -g
    }
}

struct Enumerator {
    width: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    peak: usize,
    max: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.width + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.width + x] = d;
    }

    fn count(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn new_coset(&mut self) -> Option<u32> {
        if self.live >= self.max {
            return None;
        }
        let d = self.count() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat(UNDEF).take(self.width));
        self.live += 1;
        self.peak = self.peak.max(self.live);
        Some(d)
    }

    fn define(&mut self, c: u32, x: usize) -> bool {
        match self.new_coset() {
            Some(d) => {
                self.set(c, x, d);
                self.set(d, x ^ 1, c);
                true
            }
            None => false,
        }
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.width {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                if self.get(f, x ^ 1) == e {
                    self.set(f, x ^ 1, UNDEF);
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let ex = self.get(e1, x);
                if ex != UNDEF {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, x ^ 1);
                    if fx != UNDEF {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` from `c` in both directions; when `fill` is set, defines new
    /// cosets to complete the scan. Returns false only if a definition was refused.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> bool {
        if w.is_empty() {
            return true;
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                let next = self.get(f, w[i]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j >= i as isize {
                let next = self.get(b, w[j as usize] ^ 1);
                if next == UNDEF {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return true;
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return true;
            }
            if !fill {
                return true;
            }
            if !self.define(f, w[i]) {
                return false;
            }
        }
    }

    /// Renumbers live cosets in order; returns the old-to-new map.
    fn compact(&mut self) -> Vec<u32> {
        let n = self.count();
        let mut map = vec![UNDEF; n];
        let mut next = 0u32;
        for c in 0..n as u32 {
            if self.is_live(c) {
                map[c as usize] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.width);
        for c in 0..n as u32 {
            if self.is_live(c) {
                for x in 0..self.width {
                    let d = self.get(c, x);
                    table.push(if d == UNDEF { UNDEF } else { map[d as usize] });
                }
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.live = next as usize;
        map
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `p`, keeping at most `max_cosets` live cosets. When space runs
/// out a lookahead pass scans every relator at every coset without defining,
/// then compacts; if that frees nothing the table is reported as overflowed.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> CosetTable {
    let width = 2 * p.num_generators();
    let rels: Vec<Vec<usize>> = p.relators.iter().map(|r| r.iter().map(|&x| column(x)).collect()).collect();
    let sub: Vec<Vec<usize>> = subgroup.iter().map(|r| r.iter().map(|&x| column(x)).collect()).collect();
    let mut e = Enumerator {
        width,
        table: Vec::new(),
        parent: Vec::new(),
        live: 0,
        peak: 0,
        max: max_cosets.max(1),
        queue: Vec::new(),
    };
    e.new_coset();
    let overflow = |e: &Enumerator| CosetTable {
        status: CosetStatus::Overflowed,
        num_generators: p.num_generators(),
        rows: Vec::new(),
        peak: e.peak,
    };
    for w in &sub {
        if !e.scan(0, w, true) {
            return overflow(&e);
        }
    }
    let mut c: u32 = 0;
    while (c as usize) < e.count() {
        if e.is_live(c) {
            let mut stuck = false;
            for r in &rels {
                if !e.is_live(c) {
                    break;
                }
                if !e.scan(c, r, true) {
                    stuck = true;
                    break;
                }
            }
            if !stuck && e.is_live(c) {
                for x in 0..width {
                    if e.get(c, x) == UNDEF && !e.define(c, x) {
                        stuck = true;
                        break;
                    }
                }
            }
            if stuck {
                let before = e.live;
                lookahead(&mut e, &rels);
                if e.live == before {
                    return overflow(&e);
                }
                let map = e.compact();
                // resume at the first live coset at or after c
                c = (c as usize..map.len())
                    .find_map(|k| (map[k] != UNDEF).then_some(map[k]))
                    .unwrap_or(e.count() as u32);
                continue;
            }
        }
        c += 1;
    }
    e.compact();
    let rows = (0..e.count() as u32).map(|c| (0..width).map(|x| e.get(c, x)).collect()).collect();
    CosetTable {
        status: CosetStatus::Complete,
        num_generators: p.num_generators(),
        rows,
        peak: e.peak,
    }
}

fn lookahead(e: &mut Enumerator, rels: &[Vec<usize>]) {
    let mut c = 0u32;
    while (c as usize) < e.count() {
        for r in rels {
            if !e.is_live(c) {
                break;
            }
            e.scan(c, r, false);
        }
        c += 1;
    }
}
