//! Column-sparse integer matrices and the unit-pivot reduction used for homology.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::{self, IntMatrix};

/// Matrices up to this many rows and columns skip the sparse phase.
pub const DENSE_THRESHOLD: usize = 64;

/// Largest leftover non-unit block handed to dense Smith form without echelon reduction.
const DENSE_BLOCK_CELLS: usize = 200 * 200;

/// Integer matrix stored as sorted `(row, value)` lists per column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from unsorted `(row, value)` pairs per column; duplicate rows are summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by_key(|e| e.0);
                let mut out: Vec<(u32, i64)> = Vec::with_capacity(c.len());
                for (r, v) in c {
                    assert!((r as usize) < rows, "row index out of range");
                    match out.last_mut() {
                        Some(last) if last.0 == r => last.1 += v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|e| e.1 != 0);
                out
            })
            .collect();
        SparseMatrix { rows, columns }
    }

    pub fn from_dense(m: &IntMatrix) -> Self {
        let columns = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter_map(|i| {
                        let v = m.get(i, j);
                        (!v.is_zero()).then(|| (i as u32, v.to_i64().expect("entry fits in i64")))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows(),
            columns,
        }
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, c) in self.columns.iter().enumerate() {
            for &(i, v) in c {
                m.set(i as usize, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// True when `self * rhs` (self applied after rhs) vanishes.
    pub fn composes_to_zero(&self, rhs: &SparseMatrix) -> bool {
        assert_eq!(self.cols(), rhs.rows, "dimension mismatch");
        let mut acc: Vec<i128> = vec![0; self.rows];
        let mut touched: Vec<u32> = Vec::new();
        for col in &rhs.columns {
            for &(k, b) in col {
                for &(i, a) in &self.columns[k as usize] {
                    if acc[i as usize] == 0 {
                        touched.push(i);
                    }
                    acc[i as usize] += a as i128 * b as i128;
                }
            }
            let mut ok = true;
            for &i in &touched {
                if acc[i as usize] != 0 {
                    ok = false;
                }
                acc[i as usize] = 0;
            }
            touched.clear();
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Rank and invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
    /// Row indices that became unit pivots (used for clearing in the next degree).
    pub pivot_rows: Vec<usize>,
}

trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `a - q * b`, `None` on overflow.
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self>;
    /// `q` with `v - q * u == 0` for a unit `u`.
    fn quotient_by_unit(v: &Self, u: &Self) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        a.checked_sub(q.checked_mul(*b)?)
    }
    fn quotient_by_unit(v: &Self, u: &Self) -> Self {
        v * u
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        Some(a - q * b)
    }
    fn quotient_by_unit(v: &Self, u: &Self) -> Self {
        v * u
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Overflow;

type Col<T> = Vec<(u32, T)>;

/// `a - q * b` on sorted sparse columns.
fn axpy<T: Coeff>(a: &Col<T>, q: &T, b: &Col<T>) -> Result<Col<T>, Overflow> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(u32::MAX, |e| e.0);
        let rb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ra < rb {
            out.push(a[i].clone());
            i += 1;
        } else if rb < ra {
            let v = T::sub_mul(&zero, q, &b[j].1).ok_or(Overflow)?;
            out.push((rb, v));
            j += 1;
        } else {
            let v = T::sub_mul(&a[i].1, q, &b[j].1).ok_or(Overflow)?;
            if !v.is_nil() {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// Integer elimination of `m`, skipping the columns listed in `cleared`
/// (known to lie in the span of earlier columns).
pub fn eliminate(m: &SparseMatrix, cleared: &[bool]) -> Elimination {
    if m.rows() <= DENSE_THRESHOLD && m.cols() <= DENSE_THRESHOLD {
        return dense_elimination(m, cleared);
    }
    match eliminate_with::<i64>(m, cleared) {
        Ok(e) => e,
        Err(Overflow) => match eliminate_with::<BigInt>(m, cleared) {
            Ok(e) => e,
            Err(Overflow) => unreachable!("arbitrary precision cannot overflow"),
        },
    }
}

fn dense_elimination(m: &SparseMatrix, cleared: &[bool]) -> Elimination {
    let mut d = m.to_dense();
    for (j, &c) in cleared.iter().enumerate() {
        if c {
            for i in 0..d.rows() {
                d.set(i, j, BigInt::zero());
            }
        }
    }
    let factors = matrix::invariant_factors(&d);
    Elimination {
        rank: factors.len(),
        torsion: factors.into_iter().filter(|f| !f.is_one()).collect(),
        pivot_rows: Vec::new(),
    }
}

fn eliminate_with<T: Coeff>(m: &SparseMatrix, cleared: &[bool]) -> Result<Elimination, Overflow> {
    let mut pivot_of_row: Vec<Option<u32>> = vec![None; m.rows()];
    let mut pivots: Vec<Col<T>> = Vec::new();
    let mut hard: Vec<Col<T>> = Vec::new();

    for (j, src) in m.columns.iter().enumerate() {
        if cleared.get(j).copied().unwrap_or(false) || src.is_empty() {
            continue;
        }
        let mut col: Col<T> = src.iter().map(|&(r, v)| (r, T::from_i64(v))).collect();
        loop {
            let Some((low, v)) = col.last().cloned() else { break };
            if let Some(p) = pivot_of_row[low as usize] {
                let piv = &pivots[p as usize];
                let u = &piv.last().expect("pivot column nonempty").1;
                let q = T::quotient_by_unit(&v, u);
                col = axpy(&col, &q, piv)?;
                continue;
            }
            if v.is_unit() {
                pivot_of_row[low as usize] = Some(pivots.len() as u32);
                pivots.push(col);
            } else {
                hard.push(col);
            }
            break;
        }
    }

    let rank_units = pivots.len();
    let mut torsion = Vec::new();
    let mut hard_rank = 0;
    if !hard.is_empty() {
        // project the hard columns onto the complement of the unit pivots
        let mut reduced: Vec<Col<T>> = Vec::with_capacity(hard.len());
        for mut col in hard {
            let mut idx = col.len();
            while idx > 0 {
                idx -= 1;
                let (r, v) = col[idx].clone();
                if let Some(p) = pivot_of_row[r as usize] {
                    let piv = &pivots[p as usize];
                    let u = &piv.last().expect("pivot column nonempty").1;
                    let q = T::quotient_by_unit(&v, u);
                    col = axpy(&col, &q, piv)?;
                    idx = col.partition_point(|e| e.0 < r);
                }
            }
            if !col.is_empty() {
                reduced.push(col);
            }
        }
        let mut rows: Vec<u32> = reduced.iter().flat_map(|c| c.iter().map(|e| e.0)).collect();
        rows.sort_unstable();
        rows.dedup();
        let big: Vec<Col<BigInt>> = reduced.iter().map(|c| c.iter().map(|(r, v)| (*r, v.to_big())).collect()).collect();
        // small blocks go straight to the dense form; large ones are first cut
        // down to at most rank-many columns, which is cheap for sparse boundaries
        let echelon = if rows.len() * big.len() <= DENSE_BLOCK_CELLS { big } else { gcd_echelon(big) };
        let mut rows: Vec<u32> = echelon.iter().flat_map(|c| c.iter().map(|e| e.0)).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut d = IntMatrix::zeros(rows.len(), echelon.len());
        for (j, col) in echelon.into_iter().enumerate() {
            for (r, v) in col {
                let i = rows.binary_search(&r).expect("row present");
                d.set(i, j, v);
            }
        }
        let factors = matrix::invariant_factors(&d);
        hard_rank = factors.len();
        torsion = factors.into_iter().filter(|f| !f.is_one()).collect();
    }
    let pivot_rows = pivot_of_row
        .iter()
        .enumerate()
        .filter_map(|(r, p)| p.map(|_| r))
        .collect();
    Ok(Elimination {
        rank: rank_units + hard_rank,
        torsion,
        pivot_rows,
    })
}

/// Column echelon form by unimodular column operations: whenever two columns
/// share a lowest row, they are replaced by a gcd combination and a column
/// with a strictly higher low. The surviving columns span the same lattice.
fn gcd_echelon(columns: Vec<Col<BigInt>>) -> Vec<Col<BigInt>> {
    use num_integer::Integer;
    let mut pivots: Vec<Col<BigInt>> = Vec::new();
    let mut pivot_of_row: HashMap<u32, usize> = HashMap::new();
    for mut col in columns {
        while let Some((low, v)) = col.last().cloned() {
            let Some(&p) = pivot_of_row.get(&low) else {
                pivot_of_row.insert(low, pivots.len());
                pivots.push(col);
                break;
            };
            let u = pivots[p].last().expect("nonempty pivot").1.clone();
            if (&v % &u).is_zero() {
                let q = &v / &u;
                col = axpy(&col, &q, &pivots[p]).unwrap_or_else(|_| unreachable!());
                continue;
            }
            let e = u.extended_gcd(&v);
            // new pivot a*p + b*col has low entry gcd; (v/g)*p - (u/g)*col has none
            let (a, b, g) = (e.x, e.y, e.gcd);
            let piv = std::mem::take(&mut pivots[p]);
            let new_piv = combine(&a, &piv, &b, &col);
            col = combine(&(&v / &g), &piv, &(-(&u / &g)), &col);
            pivots[p] = new_piv;
        }
    }
    pivots
}

/// `a * x + b * y` on sorted sparse columns.
fn combine(a: &BigInt, x: &Col<BigInt>, b: &BigInt, y: &Col<BigInt>) -> Col<BigInt> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let rx = x.get(i).map_or(u32::MAX, |e| e.0);
        let ry = y.get(j).map_or(u32::MAX, |e| e.0);
        let (r, v) = if rx < ry {
            i += 1;
            (rx, a * &x[i - 1].1)
        } else if ry < rx {
            j += 1;
            (ry, b * &y[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (rx, a * &x[i - 1].1 + b * &y[j - 1].1)
        };
        if !v.is_zero() {
            out.push((r, v));
        }
    }
    out
}

/// Rank over the prime field `F_p`, with the same clearing convention as [`eliminate`].
pub fn rank_mod_p(m: &SparseMatrix, p: u64, cleared: &[bool]) -> (usize, Vec<usize>) {
    assert!(p >= 2, "modulus must be at least 2");
    let norm = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let inv = |a: u64| -> u64 { pow_mod(a, p - 2, p) };
    let mut pivot_of_row: Vec<Option<u32>> = vec![None; m.rows()];
    let mut pivots: Vec<Vec<(u32, u64)>> = Vec::new();
    for (j, src) in m.columns.iter().enumerate() {
        if cleared.get(j).copied().unwrap_or(false) {
            continue;
        }
        let mut col: Vec<(u32, u64)> = src
            .iter()
            .map(|&(r, v)| (r, norm(v)))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(low, v)) = col.last() {
            match pivot_of_row[low as usize] {
                Some(pi) => {
                    let piv = &pivots[pi as usize];
                    let u = piv.last().expect("pivot column nonempty").1;
                    let q = v * inv(u) % p;
                    col = axpy_mod(&col, q, piv, p);
                }
                None => {
                    pivot_of_row[low as usize] = Some(pivots.len() as u32);
                    pivots.push(col);
                    break;
                }
            }
        }
    }
    let rows = pivot_of_row
        .iter()
        .enumerate()
        .filter_map(|(r, x)| x.map(|_| r))
        .collect();
    (pivots.len(), rows)
}

fn axpy_mod(a: &[(u32, u64)], q: u64, b: &[(u32, u64)], p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(u32::MAX, |e| e.0);
        let rb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ra < rb {
            out.push(a[i]);
            i += 1;
        } else if rb < ra {
            out.push((rb, (p - q * b[j].1 % p) % p));
            j += 1;
        } else {
            let v = (a[i].1 + p - q * b[j].1 % p) % p;
            if v != 0 {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_non_unit_block_uses_echelon_reduction() {
        let blocks = 150;
        let mut cols = Vec::new();
        for b in 0..blocks as u32 {
            cols.push(vec![(2 * b, 2), (2 * b + 1, 6)]);
            cols.push(vec![(2 * b, 4), (2 * b + 1, 8)]);
        }
        let m = SparseMatrix::from_columns(2 * blocks, cols);
        let e = eliminate(&m, &[]);
        assert_eq!(e.rank, 2 * blocks);
        let mut expect = vec![BigInt::from(2); blocks];
        expect.extend(vec![BigInt::from(4); blocks]);
        assert_eq!(e.torsion, expect);
    }

    #[test]
    fn non_unit_pivots_match_dense_smith_form() {
        // pseudo-random entries in {-2,0,2,3}: few unit pivots, many shared lows
        let (rows, cols) = (80, 90);
        let mut state = 12345u64;
        let mut columns = Vec::new();
        for _ in 0..cols {
            let mut c = Vec::new();
            for r in 0..rows {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let v = [0, 0, 0, 0, 0, 0, 2, -2, 3, 0][(state >> 33) as usize % 10];
                if v != 0 {
                    c.push((r as u32, v));
                }
            }
            columns.push(c);
        }
        let m = SparseMatrix::from_columns(rows, columns);
        let e = eliminate(&m, &[]);
        let factors = matrix::invariant_factors(&m.to_dense());
        assert_eq!(e.rank, factors.len());
        let torsion: Vec<BigInt> = factors.into_iter().filter(|f| !f.is_one()).collect();
        assert_eq!(e.torsion, torsion);
    }

    fn big_diag(n: usize, entries: &[i64]) -> SparseMatrix {
        // block diagonal padded with an identity block so the sparse path is used
        let size = n + entries.len();
        let mut cols = Vec::new();
        for i in 0..n {
            cols.push(vec![(i as u32, 1)]);
        }
        for (k, &e) in entries.iter().enumerate() {
            cols.push(vec![((n + k) as u32, e)]);
        }
        SparseMatrix::from_columns(size, cols)
    }

    #[test]
    fn sparse_path_matches_dense() {
        let m = big_diag(70, &[2, 3, 0, 4]);
        let e = eliminate(&m, &[]);
        assert_eq!(e.rank, 73);
        assert_eq!(e.torsion, vec![BigInt::from(2), BigInt::from(12)]);
        let d = matrix::invariant_factors(&m.to_dense());
        assert_eq!(d.len(), 73);
    }

    #[test]
    fn rank_mod_two_drops_even_factors() {
        let m = big_diag(70, &[2, 3, 4]);
        assert_eq!(rank_mod_p(&m, 2, &[]).0, 71);
        assert_eq!(rank_mod_p(&m, 3, &[]).0, 72);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let mut cols: Vec<Vec<(u32, i64)>> = (10..80u32).map(|i| vec![(i, 1)]).collect();
        cols.push(vec![(0, big), (5, 1)]);
        cols.push(vec![(0, big), (5, 3)]);
        let m = SparseMatrix::from_columns(80, cols);
        let e = eliminate(&m, &[]);
        assert_eq!(e.rank, 72);
        assert_eq!(e.torsion, vec![BigInt::from(big) * 2]);
    }

    #[test]
    fn composes_to_zero_detects_failure() {
        let a = SparseMatrix::from_columns(1, vec![vec![(0, 1)], vec![(0, 1)]]);
        let b = SparseMatrix::from_columns(2, vec![vec![(0, 1), (1, -1)]]);
        assert!(a.composes_to_zero(&b));
        let c = SparseMatrix::from_columns(2, vec![vec![(0, 1), (1, 1)]]);
        assert!(!a.composes_to_zero(&c));
    }
}
