//! Brute-force homology oracle on a discretized k-torus.
//!
//! The motion space of a k-edge arm is the k-torus of edge angles. The
//! constrained space at height `h` is the level set of
//! `s2 = sum_i l_i sin(theta_i)`; a thickened slab `s2^-1[h - delta, h + delta]`
//! with `delta` half the exact gap to the nearest other critical value
//! deformation-retracts onto it. That slab is approximated by the grid cubes
//! whose exact `s2` range meets the window, closed under faces, and its
//! integral homology is computed by Smith normal form of the boundary
//! matrices. Nothing here trusts the combinatorial rank formulas, which is
//! the point: it is the independent check.

pub mod snf;

use num_traits::Signed;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::arm::{spectrum, Linkage};
use crate::betti::{BettiVector, TorsionSummand};
use crate::error::{Error, Result};
use crate::rational::{rational_to_f64, Rational};
use snf::{smith_normal_form, SparseIntMat};

/// Hard ceiling on the number of angular factors the oracle supports.
pub const MAX_K: usize = 6;

/// Default cap on the number of cells a complex may hold.
pub const DEFAULT_CELL_BUDGET: usize = 50_000_000;

/// Slack added to floating cube ranges before comparing against the exact
/// rational window; over-inclusion of a boundary cube is harmless,
/// under-inclusion is not.
const RANGE_WIDENING: f64 = 1e-12;

/// Validated parameters of one oracle run, in normalized units.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub k: usize,
    pub n: u32,
    pub h: Rational,
    pub delta: Rational,
}

impl GridSpec {
    pub fn new(k: usize, n: u32, h: Rational, delta: Rational) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return Err(Error::InvalidGrid(format!("k = {k} outside 1..={MAX_K}")));
        }
        if n < 8 {
            return Err(Error::InvalidGrid(format!("n = {n} below the minimum of 8")));
        }
        if !delta.is_positive() {
            return Err(Error::InvalidDelta("delta must be positive".into()));
        }
        Ok(GridSpec { k, n, h, delta })
    }
}

/// An elementary cube on the grid torus: a base vertex (grid indices mod n)
/// and a bitmask of the directions in which the cube extends one grid step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cube {
    pub base: [u16; MAX_K],
    pub extent: u8,
}

impl Cube {
    pub fn vertex(base: [u16; MAX_K]) -> Self {
        Cube { base, extent: 0 }
    }

    pub fn dim(&self) -> usize {
        self.extent.count_ones() as usize
    }

    /// Codimension-1 faces with boundary signs. Collapsing the i-th
    /// extended direction (in increasing order) to its far end carries sign
    /// (-1)^i, to the near end -(-1)^i; this is the alternating-sign cubical
    /// boundary, and `d∘d = 0` is asserted in the tests.
    pub fn faces(&self, n: u32) -> Vec<(Cube, i64)> {
        let mut out = Vec::with_capacity(2 * self.dim());
        let mut sign = 1i64;
        for d in 0..MAX_K {
            if self.extent >> d & 1 == 0 {
                continue;
            }
            let reduced = self.extent & !(1 << d);
            let mut far = self.base;
            far[d] = ((far[d] as u32 + 1) % n) as u16;
            out.push((Cube { base: far, extent: reduced }, sign));
            out.push((Cube { base: self.base, extent: reduced }, -sign));
            sign = -sign;
        }
        out
    }

    /// All cubes of one dimension higher that have this cube as a face.
    pub fn cofaces(&self, k: usize, n: u32) -> Vec<Cube> {
        let mut out = Vec::with_capacity(2 * (k - self.dim()));
        for d in 0..k {
            if self.extent >> d & 1 == 1 {
                continue;
            }
            let grown = self.extent | 1 << d;
            out.push(Cube { base: self.base, extent: grown });
            let mut shifted = self.base;
            shifted[d] = ((shifted[d] as u32 + n - 1) % n) as u16;
            out.push(Cube { base: shifted, extent: grown });
        }
        out
    }
}

/// Per-axis sine ranges: exact min/max of sin over each grid vertex and
/// each grid arc, with the quarter-turn points included when they lie in
/// the arc interior (decided in integer arithmetic, not floats).
struct AxisTable {
    vertex: Vec<f64>,
    arc_min: Vec<f64>,
    arc_max: Vec<f64>,
}

impl AxisTable {
    fn new(n: u32) -> Self {
        let step = std::f64::consts::TAU / n as f64;
        let vertex: Vec<f64> = (0..n).map(|a| (a as f64 * step).sin()).collect();
        let mut arc_min = Vec::with_capacity(n as usize);
        let mut arc_max = Vec::with_capacity(n as usize);
        let n64 = n as u64;
        for a in 0..n64 {
            let s0 = vertex[a as usize];
            let s1 = vertex[((a + 1) % n64) as usize];
            let mut lo = s0.min(s1);
            let mut hi = s0.max(s1);
            // pi/2 interior to arc (a, a+1) iff 4a < n < 4(a+1)
            if 4 * a < n64 && n64 < 4 * (a + 1) {
                hi = 1.0;
            }
            // 3pi/2 interior iff 4a < 3n < 4(a+1)
            if 4 * a < 3 * n64 && 3 * n64 < 4 * (a + 1) {
                lo = -1.0;
            }
            arc_min.push(lo);
            arc_max.push(hi);
        }
        AxisTable { vertex, arc_min, arc_max }
    }
}

/// Exact min/max of `s2` over a cube, computed per axis thanks to the
/// separable form of the sum.
pub fn s2_range_on_cube(lengths: &[f64], cube: &Cube, n: u32) -> (f64, f64) {
    let table = AxisTable::new(n);
    s2_range(lengths, cube, &table)
}

fn s2_range(lengths: &[f64], cube: &Cube, table: &AxisTable) -> (f64, f64) {
    let mut lo = 0.0;
    let mut hi = 0.0;
    for (i, l) in lengths.iter().enumerate() {
        let a = cube.base[i] as usize;
        if cube.extent >> i & 1 == 1 {
            lo += l * table.arc_min[a];
            hi += l * table.arc_max[a];
        } else {
            let s = table.vertex[a];
            lo += l * s;
            hi += l * s;
        }
    }
    (lo, hi)
}

/// Graded cell sets over a periodic grid, closed under faces, with
/// deterministic (lexicographic) cell ordering.
#[derive(Debug, Clone)]
pub struct CubicalComplex {
    pub k: usize,
    pub n: u32,
    cells: Vec<Vec<Cube>>,
    index: Vec<FxHashMap<Cube, u32>>,
}

impl CubicalComplex {
    fn from_sets(k: usize, n: u32, sets: Vec<FxHashSet<Cube>>) -> Self {
        let mut cells: Vec<Vec<Cube>> = sets
            .into_iter()
            .map(|s| {
                let mut v: Vec<Cube> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        cells.resize(k + 1, Vec::new());
        let index = cells
            .iter()
            .map(|v| v.iter().enumerate().map(|(i, c)| (*c, i as u32)).collect())
            .collect();
        CubicalComplex { k, n, cells, index }
    }

    pub fn cells(&self, dim: usize) -> &[Cube] {
        &self.cells[dim]
    }

    pub fn cells_per_dim(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total_cells() == 0
    }

    /// Alternating sum of cell counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, v)| if d % 2 == 0 { v.len() as i64 } else { -(v.len() as i64) })
            .sum()
    }

    /// Boundary matrix from d-cells (columns) to (d-1)-cells (rows).
    pub fn boundary_matrix(&self, d: usize) -> SparseIntMat {
        assert!(d >= 1 && d <= self.k);
        let mut m = SparseIntMat::new(self.cells[d - 1].len(), self.cells[d].len());
        for (j, cube) in self.cells[d].iter().enumerate() {
            for (face, sign) in cube.faces(self.n) {
                let i = *self.index[d - 1]
                    .get(&face)
                    .expect("complex not closed under faces");
                m.push(i as usize, j, sign);
            }
        }
        m
    }
}

/// Grid heights of the thickened window in floats, pre-widened.
struct Window {
    lo: f64,
    hi: f64,
}

impl Window {
    fn new(h: &Rational, delta: &Rational) -> Self {
        Window {
            lo: rational_to_f64(&(h - delta)),
            hi: rational_to_f64(&(h + delta)),
        }
    }

    fn meets(&self, lo: f64, hi: f64) -> bool {
        lo - RANGE_WIDENING <= self.hi && hi + RANGE_WIDENING >= self.lo
    }
}

fn check_scan_budget(k: usize, n: u32, budget: usize) -> Result<()> {
    let mut total: u128 = 1;
    for _ in 0..k {
        total *= n as u128;
    }
    if total > budget as u128 {
        return Err(Error::CellBudgetExceeded { budget });
    }
    Ok(())
}

/// Iterates all grid base points, yielding each as an index array.
fn for_each_base(k: usize, n: u32, mut visit: impl FnMut(&[u16; MAX_K])) {
    let mut base = [0u16; MAX_K];
    loop {
        visit(&base);
        let mut d = 0;
        loop {
            if d == k {
                return;
            }
            base[d] += 1;
            if (base[d] as u32) < n {
                break;
            }
            base[d] = 0;
            d += 1;
        }
    }
}

fn closure_insert(
    top: &Cube,
    k: usize,
    n: u32,
    sets: &mut [FxHashSet<Cube>],
    total: &mut usize,
    budget: usize,
) -> Result<()> {
    let full = top.extent;
    let mut sub = full;
    loop {
        let free = full & !sub;
        let mut off = free;
        loop {
            let mut base = top.base;
            for d in 0..k {
                if off >> d & 1 == 1 {
                    base[d] = ((base[d] as u32 + 1) % n) as u16;
                }
            }
            let cell = Cube { base, extent: sub };
            if sets[cell.dim()].insert(cell) {
                *total += 1;
                if *total > budget {
                    return Err(Error::CellBudgetExceeded { budget });
                }
            }
            if off == 0 {
                break;
            }
            off = (off - 1) & free;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full;
    }
    Ok(())
}

/// The complete grid complex of the k-torus: every cube of every dimension.
pub fn full_torus_complex(k: usize, n: u32, budget: usize) -> Result<CubicalComplex> {
    if k == 0 || k > MAX_K {
        return Err(Error::InvalidGrid(format!("k = {k} outside 1..={MAX_K}")));
    }
    if n < 8 {
        return Err(Error::InvalidGrid(format!("n = {n} below the minimum of 8")));
    }
    check_scan_budget(k, n, budget)?;
    let mut total_cells: u128 = 1;
    for _ in 0..k {
        total_cells *= 2 * n as u128;
    }
    if total_cells > budget as u128 {
        return Err(Error::CellBudgetExceeded { budget });
    }
    let mut sets: Vec<FxHashSet<Cube>> = vec![FxHashSet::default(); k + 1];
    for extent in 0u8..1 << k {
        let dim = extent.count_ones() as usize;
        for_each_base(k, n, |base| {
            sets[dim].insert(Cube { base: *base, extent });
        });
    }
    Ok(CubicalComplex::from_sets(k, n, sets))
}

/// Builds the cubical approximation of `s2^-1[h - delta, h + delta]` for a
/// normalized linkage: every top cube whose exact `s2` range meets the
/// window, closed under faces.
pub fn build_thickened_complex(
    link: &Linkage,
    grid: &GridSpec,
    budget: usize,
) -> Result<CubicalComplex> {
    let k = link.k();
    assert_eq!(k, grid.k);
    check_scan_budget(k, grid.n, budget)?;
    let lengths = link.lengths_f64();
    let table = AxisTable::new(grid.n);
    let window = Window::new(&grid.h, &grid.delta);
    let full: u8 = ((1u16 << k) - 1) as u8;

    let mut tops: Vec<Cube> = Vec::new();
    for_each_base(k, grid.n, |base| {
        let cube = Cube { base: *base, extent: full };
        let (lo, hi) = s2_range(&lengths, &cube, &table);
        if window.meets(lo, hi) {
            tops.push(cube);
        }
    });

    let mut sets: Vec<FxHashSet<Cube>> = vec![FxHashSet::default(); k + 1];
    let mut total = 0usize;
    for top in &tops {
        closure_insert(top, k, grid.n, &mut sets, &mut total, budget)?;
    }
    let complex = CubicalComplex::from_sets(k, grid.n, sets);
    if complex.is_empty() && grid.h.abs() <= Rational::from_integer(1.into()) {
        return Err(Error::ResolutionTooCoarse { n: grid.n });
    }
    Ok(complex)
}

/// One sampled top cube of the thickened band: center angles and the value
/// of `s2` there. Raw data for plotting outside this tool.
#[derive(Debug, Clone)]
pub struct BandSample {
    pub angles: Vec<f64>,
    pub s2: f64,
}

pub fn band_samples(link: &Linkage, grid: &GridSpec, budget: usize) -> Result<Vec<BandSample>> {
    let k = link.k();
    check_scan_budget(k, grid.n, budget)?;
    let lengths = link.lengths_f64();
    let table = AxisTable::new(grid.n);
    let window = Window::new(&grid.h, &grid.delta);
    let full: u8 = ((1u16 << k) - 1) as u8;
    let step = std::f64::consts::TAU / grid.n as f64;

    let mut samples = Vec::new();
    for_each_base(k, grid.n, |base| {
        let cube = Cube { base: *base, extent: full };
        let (lo, hi) = s2_range(&lengths, &cube, &table);
        if window.meets(lo, hi) {
            let angles: Vec<f64> =
                (0..k).map(|d| (base[d] as f64 + 0.5) * step).collect();
            let s2 = lengths
                .iter()
                .zip(&angles)
                .map(|(l, t)| l * t.sin())
                .sum();
            samples.push(BandSample { angles, s2 });
        }
    });
    Ok(samples)
}

/// Removes free face pairs (a cell with exactly one coface, together with
/// that coface). Each removal is an elementary collapse, so the homotopy
/// type survives; the point is to shrink the complex before the integer
/// elimination.
fn collapse(cx: &CubicalComplex) -> Vec<FxHashSet<Cube>> {
    let k = cx.k;
    let n = cx.n;
    let mut live: Vec<FxHashSet<Cube>> =
        cx.cells.iter().map(|v| v.iter().copied().collect()).collect();

    let unique_coface = |live: &[FxHashSet<Cube>], cell: &Cube| -> Option<Cube> {
        let dim = cell.dim();
        if dim == k {
            return None;
        }
        let mut found = None;
        for cf in cell.cofaces(k, n) {
            if live[dim + 1].contains(&cf) {
                if found.is_some() {
                    return None;
                }
                found = Some(cf);
            }
        }
        found
    };

    let mut stack: Vec<Cube> = Vec::new();
    for d in 0..k {
        for cell in &cx.cells[d] {
            if unique_coface(&live, cell).is_some() {
                stack.push(*cell);
            }
        }
    }

    while let Some(cell) = stack.pop() {
        let dim = cell.dim();
        if !live[dim].contains(&cell) {
            continue;
        }
        let Some(coface) = unique_coface(&live, &cell) else {
            continue;
        };
        live[dim].remove(&cell);
        live[dim + 1].remove(&coface);
        for (face, _) in coface.faces(n) {
            if live[dim].contains(&face) && unique_coface(&live, &face).is_some() {
                stack.push(face);
            }
        }
        if dim > 0 {
            for (face, _) in cell.faces(n) {
                if live[dim - 1].contains(&face) && unique_coface(&live, &face).is_some() {
                    stack.push(face);
                }
            }
        }
    }
    live
}

fn homology_of(cx: &CubicalComplex, reduce: bool) -> BettiVector {
    let k = cx.k;
    if cx.is_empty() {
        return BettiVector::free(vec![0; k + 1]);
    }
    let work = if reduce {
        CubicalComplex::from_sets(k, cx.n, collapse(cx))
    } else {
        cx.clone()
    };

    let snfs: Vec<snf::SnfResult> =
        (1..=k).map(|d| smith_normal_form(&work.boundary_matrix(d))).collect();
    let rank_d = |d: usize| -> usize {
        if d == 0 || d > k {
            0
        } else {
            snfs[d - 1].rank
        }
    };

    let mut ranks = Vec::with_capacity(k + 1);
    for d in 0..=k {
        let cells = work.cells(d).len() as i64;
        let beta = cells - rank_d(d) as i64 - rank_d(d + 1) as i64;
        assert!(beta >= 0, "negative rank in degree {d}");
        ranks.push(beta as u64);
    }
    let mut torsion = Vec::new();
    for d in 0..k {
        let factors = snfs[d].nontrivial_factors();
        if !factors.is_empty() {
            torsion.push(TorsionSummand { degree: d, factors });
        }
    }
    BettiVector { ranks, torsion }
}

/// Integral homology of a face-closed cubical complex.
pub fn homology(cx: &CubicalComplex) -> BettiVector {
    homology_of(cx, true)
}

/// Everything one oracle run produces, for reporting.
#[derive(Debug, Clone)]
pub struct OracleRun {
    pub n: u32,
    /// Thickening half-width, in normalized units.
    pub delta: Rational,
    pub cells_per_dim: Vec<usize>,
    pub betti: BettiVector,
    /// Euler characteristic from raw cell counts; must equal the
    /// alternating rank sum.
    pub euler_cells: i64,
}

/// Normalizes the linkage, rescales `h`, picks `delta` (half the gap to the
/// nearest other critical value unless overridden), builds the thickened
/// complex and computes its homology.
pub fn run_thickened(
    link: &Linkage,
    h: &Rational,
    n: u32,
    budget: usize,
    delta_override: Option<&Rational>,
    cap: usize,
) -> Result<OracleRun> {
    let (normalized, alpha) = link.normalize();
    let h = h * &alpha;
    let spec = spectrum(&normalized, cap)?;
    let delta = match delta_override {
        Some(d) => {
            let d = d * &alpha;
            if !d.is_positive() {
                return Err(Error::InvalidDelta("delta must be positive".into()));
            }
            let clear = spec
                .critical_values()
                .iter()
                .all(|v| v == &h || (v - &h).abs() > d);
            if !clear {
                return Err(Error::InvalidDelta(
                    "window [h - delta, h + delta] contains a critical value other than h".into(),
                ));
            }
            d
        }
        None => spec.half_gap(&h).expect("at least two critical values"),
    };
    let grid = GridSpec::new(normalized.k(), n, h, delta)?;
    let complex = build_thickened_complex(&normalized, &grid, budget)?;
    let betti = homology(&complex);
    Ok(OracleRun {
        n,
        delta: grid.delta.clone(),
        cells_per_dim: complex.cells_per_dim(),
        betti,
        euler_cells: complex.euler_characteristic(),
    })
}

/// An oracle run plus the same computation at doubled resolution. `stable`
/// means the two agree, which is the precondition for treating the oracle
/// as ground truth.
#[derive(Debug, Clone)]
pub struct StabilizedRun {
    pub coarse: OracleRun,
    pub fine: Option<OracleRun>,
    pub stable: bool,
}

pub fn run_stabilized(
    link: &Linkage,
    h: &Rational,
    n: u32,
    budget: usize,
    delta_override: Option<&Rational>,
    cap: usize,
) -> Result<StabilizedRun> {
    let coarse = run_thickened(link, h, n, budget, delta_override, cap)?;
    match run_thickened(link, h, n * 2, budget, delta_override, cap) {
        Ok(fine) => {
            let stable = coarse.betti == fine.betti;
            Ok(StabilizedRun { coarse, fine: Some(fine), stable })
        }
        // Refusing the doubled grid only downgrades confidence.
        Err(Error::CellBudgetExceeded { .. }) => {
            Ok(StabilizedRun { coarse, fine: None, stable: false })
        }
        Err(e) => Err(e),
    }
}
