//! Oracles written independently of the library's elimination, nerve and
//! presentation code. Only the public data (simplex lists, hom-sets,
//! composition) is read from the library.
#![allow(dead_code)]

use std::collections::HashMap;

use properclass::category::FiniteCategory;
use properclass::simplicial::SimplicialComplex;

pub const LARGE_PRIME: u64 = 1_000_000_007;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank over F_p by dense Gaussian elimination. `entries` are `(row, col, value)`.
pub fn rank_mod_p(rows: usize, cols: usize, entries: &[(usize, usize, i64)], p: u64) -> usize {
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut m = vec![vec![0u64; cols]; rows];
    for &(r, c, v) in entries {
        m[r][c] = (m[r][c] + v.rem_euclid(p as i64) as u64) % p;
    }
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        let pivot_row = m[rank].clone();
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % p;
                for k in c..cols {
                    m[r][k] = (m[r][k] + p - f * pivot_row[k] % p) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Chain groups and boundary entries of an abstract chain complex, degree by degree.
pub struct Chains {
    pub dims: Vec<usize>,
    /// `boundaries[n]` maps degree `n` to `n - 1` (empty for `n = 0`).
    pub boundaries: Vec<Vec<(usize, usize, i64)>>,
}

impl Chains {
    /// Betti numbers over F_p in degrees `0..top`.
    pub fn betti_mod_p(&self, p: u64, top: usize) -> Vec<usize> {
        let rank = |n: usize| -> usize {
            if n == 0 || n >= self.dims.len() {
                0
            } else {
                rank_mod_p(self.dims[n - 1], self.dims[n], &self.boundaries[n], p)
            }
        };
        (0..top).map(|n| self.dims[n] - rank(n) - rank(n + 1)).collect()
    }

    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..self.dims.len()).all(|n| {
            let mut by_col: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
            for &(r, c, v) in &self.boundaries[n - 1] {
                by_col.entry(c).or_default().push((r, v));
            }
            let mut prod: HashMap<(usize, usize), i64> = HashMap::new();
            for &(mid, c, v) in &self.boundaries[n] {
                for &(r, w) in by_col.get(&mid).map_or(&[][..], Vec::as_slice) {
                    *prod.entry((r, c)).or_default() += v * w;
                }
            }
            prod.values().all(|&x| x == 0)
        })
    }
}

/// Simplicial chains built straight from the simplex lists.
pub fn simplicial_chains(x: &SimplicialComplex) -> Chains {
    let top = x.dim();
    let mut index: Vec<HashMap<Vec<usize>, usize>> = Vec::new();
    for d in 0..=top {
        index.push(x.simplices(d).iter().enumerate().map(|(i, s)| (s.clone(), i)).collect());
    }
    let mut dims = Vec::new();
    let mut boundaries = Vec::new();
    for d in 0..=top {
        dims.push(x.simplices(d).len());
        let mut entries = Vec::new();
        if d > 0 {
            for (j, s) in x.simplices(d).iter().enumerate() {
                let mut s = s.clone();
                s.sort_unstable();
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    let r = index[d - 1][&face];
                    entries.push((r, j, if i % 2 == 0 { 1 } else { -1 }));
                }
            }
        }
        boundaries.push(entries);
    }
    Chains { dims, boundaries }
}

pub fn betti_mod_p(x: &SimplicialComplex, p: u64) -> Vec<usize> {
    simplicial_chains(x).betti_mod_p(p, x.dim() + 1)
}

/// Nondegenerate chains `x0 -> x1 -> ... -> xn` of non-identity morphisms.
/// Degree 0 holds one-element vectors of objects, higher degrees morphism lists.
pub fn nerve_cells(c: &FiniteCategory, top: usize) -> Vec<Vec<Vec<usize>>> {
    let mut cells = vec![(0..c.num_objects()).map(|o| vec![o]).collect::<Vec<_>>()];
    let non_id: Vec<usize> = (0..c.num_morphisms()).filter(|&f| !c.is_identity(f)).collect();
    if top >= 1 {
        cells.push(non_id.iter().map(|&f| vec![f]).collect());
    }
    for _ in 2..=top {
        let prev = cells.last().unwrap();
        let mut next = Vec::new();
        for chain in prev {
            let end = c.target(*chain.last().unwrap());
            for &g in c.out_of(end) {
                if !c.is_identity(g) {
                    let mut longer = chain.clone();
                    longer.push(g);
                    next.push(longer);
                }
            }
        }
        cells.push(next);
    }
    cells
}

/// Face `d_i` of a chain of degree `n >= 1`; `None` when degenerate.
pub fn nerve_face(c: &FiniteCategory, chain: &[usize], i: usize) -> Option<Vec<usize>> {
    let n = chain.len();
    if n == 1 {
        return Some(vec![if i == 0 { c.target(chain[0]) } else { c.source(chain[0]) }]);
    }
    if i == 0 {
        return Some(chain[1..].to_vec());
    }
    if i == n {
        return Some(chain[..n - 1].to_vec());
    }
    let comp = c.then(chain[i - 1], chain[i]).expect("composable chain");
    if c.is_identity(comp) {
        return None;
    }
    let mut out = chain[..i - 1].to_vec();
    out.push(comp);
    out.extend_from_slice(&chain[i + 1..]);
    Some(out)
}

/// Normalized chains of the nerve through degree `top`.
pub fn nerve_chains(c: &FiniteCategory, top: usize) -> Chains {
    let cells = nerve_cells(c, top);
    let index: Vec<HashMap<&Vec<usize>, usize>> =
        cells.iter().map(|cs| cs.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    let mut boundaries = vec![Vec::new()];
    for n in 1..=top {
        let mut entries = Vec::new();
        for (j, chain) in cells[n].iter().enumerate() {
            for i in 0..=n {
                if let Some(face) = nerve_face(c, chain, i) {
                    entries.push((index[n - 1][&face], j, if i % 2 == 0 { 1 } else { -1 }));
                }
            }
        }
        boundaries.push(entries);
    }
    Chains {
        dims: cells.iter().map(Vec::len).collect(),
        boundaries,
    }
}

/// Checks the cone contraction onto a terminal object `t`: with `h` appending
/// the unique morphism to `t`, `∂h - h∂ = (-1)^(n+1) id` on every nondegenerate
/// chain of degree `1..=top`. That identity kills homology in those degrees.
pub fn cone_contraction_holds(c: &FiniteCategory, t: usize, top: usize) -> bool {
    let to_t = |o: usize| -> Option<usize> {
        let h = c.hom(o, t);
        assert_eq!(h.len(), 1, "object {o} has {} morphisms to the terminal object", h.len());
        (!c.is_identity(h[0])).then_some(h[0])
    };
    let end = |chain: &[usize]| c.target(*chain.last().unwrap());
    let h = |chain: &[usize]| -> Option<Vec<usize>> {
        let f = to_t(end(chain))?;
        let mut out = chain.to_vec();
        out.push(f);
        Some(out)
    };
    let cells = nerve_cells(c, top);
    for n in 1..=top {
        for chain in &cells[n] {
            let mut sum: HashMap<Vec<usize>, i64> = HashMap::new();
            if let Some(hc) = h(chain) {
                for i in 0..=n + 1 {
                    if let Some(f) = nerve_face(c, &hc, i) {
                        *sum.entry(f).or_default() += if i % 2 == 0 { 1 } else { -1 };
                    }
                }
            }
            for i in 0..=n {
                if let Some(face) = nerve_face(c, chain, i) {
                    let hf = if n == 1 {
                        to_t(face[0]).map(|f| vec![f])
                    } else {
                        h(&face)
                    };
                    if let Some(hf) = hf {
                        *sum.entry(hf).or_default() -= if i % 2 == 0 { 1 } else { -1 };
                    }
                }
            }
            sum.retain(|_, v| *v != 0);
            let sign = if n % 2 == 1 { 1 } else { -1 };
            if sum.len() != 1 || sum.get(chain) != Some(&sign) {
                return false;
            }
        }
    }
    true
}

/// Result of eliminating edge-path generators through relators of length <= 2.
#[derive(Debug, PartialEq, Eq)]
pub struct Pi1Reduction {
    pub generators: usize,
    pub relators: Vec<Vec<i64>>,
}

impl Pi1Reduction {
    pub fn is_trivial(&self) -> bool {
        self.generators == 0
    }

    /// Free of rank `k`: `k` generators survive and every relator cancels.
    pub fn is_free_of_rank(&self, k: usize) -> bool {
        self.generators == k && self.relators.is_empty()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Val {
    One,
    Gen(usize, i64),
}

/// Edge-path group of the 2-skeleton with a BFS spanning tree, reduced by
/// repeatedly solving relators of length one and two for a generator.
pub fn reduce_pi1(x: &SimplicialComplex) -> Pi1Reduction {
    let n = x.num_vertices();
    let edges: Vec<(usize, usize)> = x.simplices(1).iter().map(|e| (e[0].min(e[1]), e[0].max(e[1]))).collect();
    let edge_id: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut parent = vec![Val::Gen(0, 1); edges.len()];
    for (i, p) in parent.iter_mut().enumerate() {
        *p = Val::Gen(i, 1);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                parent[edge_id[&(u.min(v), u.max(v))]] = Val::One;
                queue.push_back(v);
            }
        }
    }
    fn find(parent: &mut [Val], e: usize) -> Val {
        match parent[e] {
            Val::One => Val::One,
            Val::Gen(r, s) if r == e => {
                debug_assert_eq!(s, 1);
                Val::Gen(e, 1)
            }
            Val::Gen(r, s) => {
                let v = match find(parent, r) {
                    Val::One => Val::One,
                    Val::Gen(rr, ss) => Val::Gen(rr, s * ss),
                };
                parent[e] = v;
                v
            }
        }
    }
    let relator = |t: &[usize]| -> Vec<(usize, i64)> {
        let (a, b, c) = (t[0], t[1], t[2]);
        vec![(edge_id[&(a, b)], 1), (edge_id[&(b, c)], 1), (edge_id[&(a, c)], -1)]
    };
    let rels: Vec<Vec<(usize, i64)>> = x.simplices(2).iter().map(|t| {
        let mut t = t.clone();
        t.sort_unstable();
        relator(&t)
    }).collect();
    let reduce = |parent: &mut Vec<Val>, r: &[(usize, i64)]| -> Vec<i64> {
        let mut word: Vec<i64> = Vec::new();
        for &(e, s) in r {
            if let Val::Gen(g, t) = find(parent, e) {
                let letter = (g as i64 + 1) * s * t;
                if word.last() == Some(&-letter) {
                    word.pop();
                } else {
                    word.push(letter);
                }
            }
        }
        while word.len() >= 2 && word[0] == -word[word.len() - 1] {
            word.remove(0);
            word.pop();
        }
        word
    };
    loop {
        let mut changed = false;
        for r in &rels {
            let w = reduce(&mut parent, r);
            match w.as_slice() {
                [a] => {
                    parent[(a.unsigned_abs() - 1) as usize] = Val::One;
                    changed = true;
                }
                [a, b] if a.unsigned_abs() != b.unsigned_abs() => {
                    // a b = 1, so a = b^-1
                    let (ga, gb) = ((a.unsigned_abs() - 1) as usize, (b.unsigned_abs() - 1) as usize);
                    parent[ga] = Val::Gen(gb, -a.signum() * b.signum());
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let generators = (0..edges.len()).filter(|&e| find(&mut parent, e) == Val::Gen(e, 1)).count();
    let relators = rels.iter().map(|r| reduce(&mut parent, r)).filter(|w| !w.is_empty()).collect();
    Pi1Reduction { generators, relators }
}

/// Invariant factors by naive elimination over i128: move the smallest entry to
/// the corner, clear its row and column, repeat; then repair divisibility.
pub fn naive_invariant_factors(rows: &[Vec<i64>]) -> Vec<i128> {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut diag = Vec::new();
    for k in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = (k..r)
                .flat_map(|i| (k..c).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
            else {
                return finish(diag);
            };
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let p = m[k][k];
            let mut clean = true;
            for i in k + 1..r {
                let q = m[i][k] / p;
                for j in k..c {
                    m[i][j] -= q * m[k][j];
                }
                clean &= m[i][k] == 0;
            }
            for j in k + 1..c {
                let q = m[k][j] / p;
                for i in k..r {
                    m[i][j] -= q * m[i][k];
                }
                clean &= m[k][j] == 0;
            }
            if clean {
                diag.push(p.abs());
                break;
            }
        }
    }
    finish(diag)
}

fn finish(mut d: Vec<i128>) -> Vec<i128> {
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 { a.abs() } else { gcd(b, a % b) }
    }
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = gcd(d[i], d[j]);
            let l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
