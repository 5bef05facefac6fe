//! Smith normal form of sparse integer matrices.
//!
//! Boundary matrices of cubical complexes are huge, extremely sparse and
//! almost always reducible with unit pivots alone. The elimination here runs
//! in two phases:
//!
//! 1. greedy unit-pivot elimination (Markowitz-style pivot choice, least
//!    fill-in first) in machine integers with overflow checks;
//! 2. a classical arbitrary-precision reduction of whatever residual is
//!    left, which is where torsion would surface.
//!
//! Every unit pivot contributes an invariant factor 1, and the residual's
//! factors extend the divisibility chain, so the combined result is the
//! Smith normal form of the original matrix.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rustc_hash::{FxHashMap, FxHashSet};

/// Rank and invariant factors (full divisibility chain, length == rank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub rank: usize,
    pub invariant_factors: Vec<BigUint>,
}

impl SnfResult {
    /// Invariant factors greater than 1; the torsion coefficients of the
    /// cokernel.
    pub fn nontrivial_factors(&self) -> Vec<BigUint> {
        self.invariant_factors
            .iter()
            .filter(|f| !f.is_one())
            .cloned()
            .collect()
    }
}

/// Column-major sparse integer matrix.
#[derive(Debug, Clone, Default)]
pub struct SparseIntMat {
    pub nrows: usize,
    pub ncols: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseIntMat {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseIntMat { nrows, ncols, cols: vec![Vec::new(); ncols] }
    }

    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        debug_assert!(row < self.nrows && col < self.ncols);
        if value != 0 {
            self.cols[col].push((row as u32, value));
        }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseIntMat::new(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.push(i, j, v);
            }
        }
        m
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, col: usize) -> &[(u32, i64)] {
        &self.cols[col]
    }

    /// y += M x over i64; used by the `d∘d = 0` checks in tests.
    pub fn apply_to_basis_vector(&self, col: usize) -> &[(u32, i64)] {
        self.column(col)
    }
}

trait ElimInt: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn elim_is_zero(&self) -> bool;
    /// True when the value is +1 or -1.
    fn is_unit(&self) -> bool;
    fn elim_is_negative(&self) -> bool;
    fn elim_neg(&self) -> Self;
    /// `a - f * x`, None on overflow.
    fn mul_sub(a: &Self, f: &Self, x: &Self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl ElimInt for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn elim_is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn elim_is_negative(&self) -> bool {
        *self < 0
    }
    fn elim_neg(&self) -> Self {
        -*self
    }
    fn mul_sub(a: &Self, f: &Self, x: &Self) -> Option<Self> {
        f.checked_mul(*x).and_then(|p| a.checked_sub(p))
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ElimInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn elim_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn elim_is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn elim_neg(&self) -> Self {
        -self
    }
    fn mul_sub(a: &Self, f: &Self, x: &Self) -> Option<Self> {
        Some(a - f * x)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct Overflow;

struct Elim<T> {
    cols: Vec<FxHashMap<u32, T>>,
    rows: Vec<FxHashSet<u32>>,
    heap: BinaryHeap<Reverse<(u32, u32)>>,
}

impl<T: ElimInt> Elim<T> {
    fn new(mat: &SparseIntMat) -> Self {
        let mut cols: Vec<FxHashMap<u32, T>> = vec![FxHashMap::default(); mat.ncols];
        let mut rows: Vec<FxHashSet<u32>> = vec![FxHashSet::default(); mat.nrows];
        for (c, entries) in mat.cols.iter().enumerate() {
            for &(r, v) in entries {
                cols[c].insert(r, T::from_i64(v));
                rows[r as usize].insert(c as u32);
            }
        }
        let mut heap = BinaryHeap::new();
        for (c, col) in cols.iter().enumerate() {
            if !col.is_empty() {
                heap.push(Reverse((col.len() as u32, c as u32)));
            }
        }
        Elim { cols, rows, heap }
    }

    /// Best unit pivot in column `c`: the one touching the sparsest row,
    /// ties broken by row index for determinism.
    fn unit_pivot(&self, c: u32) -> Option<u32> {
        self.cols[c as usize]
            .iter()
            .filter(|(_, v)| v.is_unit())
            .map(|(&r, _)| (self.rows[r as usize].len(), r))
            .min()
            .map(|(_, r)| r)
    }

    fn eliminate(&mut self, r: u32, c: u32) -> Result<(), Overflow> {
        let pivot_col: Vec<(u32, T)> = {
            let mut v: Vec<(u32, T)> =
                self.cols[c as usize].iter().map(|(&r2, x)| (r2, x.clone())).collect();
            v.sort_by_key(|(r2, _)| *r2);
            v
        };
        let pivot = self.cols[c as usize].get(&r).expect("pivot entry").clone();
        let pivot_neg = pivot.elim_is_negative();

        let touched: Vec<u32> =
            self.rows[r as usize].iter().copied().filter(|&c2| c2 != c).collect();
        for c2 in touched {
            let w = self.cols[c2 as usize].get(&r).expect("row index entry").clone();
            // factor = w / pivot with pivot = ±1
            let factor = if pivot_neg { w.elim_neg() } else { w };
            for (r2, x) in &pivot_col {
                let col2 = &mut self.cols[c2 as usize];
                let current = col2.get(r2).cloned().unwrap_or_else(|| T::from_i64(0));
                let updated = T::mul_sub(&current, &factor, x).ok_or(Overflow)?;
                if updated.elim_is_zero() {
                    if col2.remove(r2).is_some() {
                        self.rows[*r2 as usize].remove(&c2);
                    }
                } else {
                    if col2.insert(*r2, updated).is_none() {
                        self.rows[*r2 as usize].insert(c2);
                    }
                }
            }
            debug_assert!(!self.cols[c2 as usize].contains_key(&r));
            let nnz = self.cols[c2 as usize].len() as u32;
            if nnz > 0 {
                self.heap.push(Reverse((nnz, c2)));
            }
        }

        for (r2, _) in &pivot_col {
            self.rows[*r2 as usize].remove(&c);
        }
        self.cols[c as usize].clear();
        Ok(())
    }

    /// Runs unit-pivot elimination to exhaustion. Returns the number of
    /// pivots and the residual entries (which contain no ±1).
    fn run(mut self) -> Result<(usize, Vec<(u32, u32, BigInt)>), Overflow> {
        let mut rank = 0usize;
        loop {
            while let Some(Reverse((nnz, c))) = self.heap.pop() {
                if self.cols[c as usize].len() as u32 != nnz || nnz == 0 {
                    continue; // stale key
                }
                if let Some(r) = self.unit_pivot(c) {
                    self.eliminate(r, c)?;
                    rank += 1;
                }
            }
            // Columns without unit entries were dropped from the heap; a
            // later elimination may have created new units in them.
            let mut revived = false;
            for (c, col) in self.cols.iter().enumerate() {
                if !col.is_empty() && col.values().any(|v| v.is_unit()) {
                    self.heap.push(Reverse((col.len() as u32, c as u32)));
                    revived = true;
                }
            }
            if !revived {
                break;
            }
        }
        let mut residual = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, v) in col {
                residual.push((r, c as u32, v.to_bigint()));
            }
        }
        residual.sort_by_key(|(r, c, _)| (*r, *c));
        Ok((rank, residual))
    }
}

/// Smith normal form: rank and the full invariant-factor chain.
pub fn smith_normal_form(mat: &SparseIntMat) -> SnfResult {
    let (unit_rank, residual) = match Elim::<i64>::new(mat).run() {
        Ok(out) => out,
        // Entries outgrew i64 during elimination; redo in big integers.
        Err(Overflow) => Elim::<BigInt>::new(mat).run().unwrap_or_else(|_| unreachable!()),
    };
    let mut invariant_factors = vec![BigUint::one(); unit_rank];
    if !residual.is_empty() {
        invariant_factors.extend(dense_snf(residual));
    }
    SnfResult { rank: invariant_factors.len(), invariant_factors }
}

/// Rank only. Same elimination; kept as a named entry point because rank is
/// all the Betti-number computation needs when the factor chain is trivial.
pub fn rank(mat: &SparseIntMat) -> usize {
    smith_normal_form(mat).rank
}

/// Classical Smith reduction of a small dense residual.
fn dense_snf(entries: Vec<(u32, u32, BigInt)>) -> Vec<BigUint> {
    let mut row_ids: Vec<u32> = entries.iter().map(|(r, _, _)| *r).collect();
    let mut col_ids: Vec<u32> = entries.iter().map(|(_, c, _)| *c).collect();
    row_ids.sort_unstable();
    row_ids.dedup();
    col_ids.sort_unstable();
    col_ids.dedup();
    let nrows = row_ids.len();
    let ncols = col_ids.len();
    assert!(
        nrows.saturating_mul(ncols) <= 16_000_000,
        "residual after unit elimination unexpectedly large: {nrows} x {ncols}"
    );
    let mut m = vec![vec![BigInt::zero(); ncols]; nrows];
    for (r, c, v) in entries {
        let i = row_ids.binary_search(&r).unwrap();
        let j = col_ids.binary_search(&c).unwrap();
        m[i][j] = v;
    }

    let mut factors = Vec::new();
    let mut t = 0usize;
    'outer: while t < nrows && t < ncols {
        // smallest nonzero entry of the trailing submatrix as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero()
                    && best
                        .map(|(bi, bj)| m[i][j].magnitude() < m[bi][bj].magnitude())
                        .unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = rounded_div(&m[i][t], &m[t][t]);
                if !q.is_zero() {
                    for j in t..ncols {
                        let sub = &q * &m[t][j];
                        m[i][j] -= sub;
                    }
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    clean = false;
                }
            }
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = rounded_div(&m[t][j], &m[t][t]);
                if !q.is_zero() {
                    for row in m.iter_mut().skip(t) {
                        let sub = &q * &row[t];
                        row[j] -= sub;
                    }
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }

        // pivot must divide the rest of the submatrix for the chain property
        for i in t + 1..nrows {
            for j in t + 1..ncols {
                if !(&m[i][j] % &m[t][t]).is_zero() {
                    for jj in t..ncols {
                        let add = m[i][jj].clone();
                        m[t][jj] += add;
                    }
                    continue 'outer;
                }
            }
        }
        factors.push(m[t][t].magnitude().clone());
        t += 1;
    }
    factors
}

/// Division rounded to nearest, so remainders shrink as fast as possible.
fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = num_integer::Integer::div_rem(a, b);
    if r.magnitude() * 2u32 > *b.magnitude() {
        if Signed::is_negative(a) == Signed::is_negative(b) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors_u64(res: &SnfResult) -> Vec<u64> {
        res.invariant_factors
            .iter()
            .map(|f| u64::try_from(f).unwrap())
            .collect()
    }

    #[test]
    fn snf_of_diag_2_3() {
        let res = smith_normal_form(&SparseIntMat::from_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(res.rank, 2);
        assert_eq!(factors_u64(&res), vec![1, 6]);
    }

    #[test]
    fn snf_of_zero_matrix() {
        let res = smith_normal_form(&SparseIntMat::new(3, 2));
        assert_eq!(res.rank, 0);
        assert!(res.invariant_factors.is_empty());
    }

    #[test]
    fn snf_of_partial_identity() {
        let res = smith_normal_form(&SparseIntMat::from_rows(&[&[1, 0], &[0, 0]]));
        assert_eq!(res.rank, 1);
        assert_eq!(factors_u64(&res), vec![1]);
    }

    #[test]
    fn snf_with_torsion_two_and_four() {
        // det = -8, entry gcd 2 -> chain (2, 4)
        let res = smith_normal_form(&SparseIntMat::from_rows(&[&[2, 4], &[6, 8]]));
        assert_eq!(factors_u64(&res), vec![2, 4]);
    }

    #[test]
    fn snf_single_entry_two() {
        let res = smith_normal_form(&SparseIntMat::from_rows(&[&[2]]));
        assert_eq!(factors_u64(&res), vec![2]);
        assert_eq!(res.nontrivial_factors().len(), 1);
    }

    #[test]
    fn residual_without_units_still_finds_unit_factors() {
        // gcd(2, 3) = 1 even though no entry is a unit
        let res = smith_normal_form(&SparseIntMat::from_rows(&[&[2, 3]]));
        assert_eq!(factors_u64(&res), vec![1]);
    }

    /// Independent oracle: the product of the first i invariant factors
    /// equals the gcd of all i x i minors.
    #[test]
    fn invariant_factors_match_minor_gcds() {
        use num_integer::Integer;

        fn det(m: &[Vec<i64>]) -> BigInt {
            let n = m.len();
            if n == 1 {
                return BigInt::from(m[0][0]);
            }
            let mut acc = BigInt::zero();
            for j in 0..n {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(jj, _)| *jj != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let term = BigInt::from(m[0][j]) * det(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }

        fn minor_gcd(m: &[Vec<i64>], size: usize) -> BigInt {
            let rows = m.len();
            let cols = m[0].len();
            let mut g = BigInt::zero();
            let row_sets = subsets_of_size(rows, size);
            let col_sets = subsets_of_size(cols, size);
            for rs in &row_sets {
                for cs in &col_sets {
                    let sub: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| m[i][j]).collect())
                        .collect();
                    g = g.gcd(&det(&sub));
                }
            }
            g
        }

        fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            for mask in 0u32..1 << n {
                if mask.count_ones() as usize == k {
                    out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
                }
            }
            out
        }

        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![4, 6], vec![10, 14]],
            vec![vec![0, 2, 4], vec![2, 0, 6], vec![4, 6, 0]],
            vec![vec![3, 0, -9], vec![0, 12, 6]],
            vec![vec![5, 10], vec![15, 20], vec![25, 35]],
            vec![vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]],
        ];
        for m in cases {
            let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
            let res = smith_normal_form(&SparseIntMat::from_rows(&rows));
            let mut product = BigInt::one();
            for (i, f) in res.invariant_factors.iter().enumerate() {
                product *= BigInt::from(f.clone());
                let expected = minor_gcd(&m, i + 1);
                assert_eq!(
                    product.magnitude(),
                    expected.magnitude(),
                    "minor gcd mismatch at size {} for {m:?}",
                    i + 1
                );
            }
            let next = minor_gcd(&m, res.rank + 1);
            assert!(next.is_zero(), "rank too small for {m:?}");
        }
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // eliminating the unit pivot multiplies 2^62 by itself, which
        // cannot stay in i64
        let a = 1i64 << 62;
        let res = smith_normal_form(&SparseIntMat::from_rows(&[&[1, a], &[a, 0]]));
        assert_eq!(res.rank, 2);
        let expected = BigUint::from(a as u64) * BigUint::from(a as u64);
        assert_eq!(res.invariant_factors[0], BigUint::one());
        assert_eq!(res.invariant_factors[1], expected);
    }

    #[test]
    fn divisibility_chain_holds() {
        let res =
            smith_normal_form(&SparseIntMat::from_rows(&[&[6, 4, 2], &[4, 8, 12], &[2, 12, 6]]));
        for pair in res.invariant_factors.windows(2) {
            use num_integer::Integer;
            assert!(pair[1].is_multiple_of(&pair[0]), "{:?}", res.invariant_factors);
        }
    }
}
