//! Exact reduced simplicial homology over the integers.
//!
//! Boundary matrices are signed incidence matrices over the board's canonical
//! square order (which keeps orientation independent of any Morse ordering).
//! Smith normal form runs in two phases: a sparse phase that eliminates with
//! `±1` pivots chosen from low-population columns, which disposes of almost
//! everything in an incidence matrix, and a dense arbitrary-precision phase
//! on whatever residue is left, with minimal-absolute-value pivoting and
//! content extraction to keep entries small.  Invariant factors come out in
//! divisibility order, so torsion is read off directly.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bitset;
use crate::board::Board;
use crate::complex::{f_vector_formula, ComplexView, FacesByCard};
use crate::error::{Error, Result};

/// The boundary operator from `k`-dimensional chains to `(k-1)`-dimensional
/// chains; `k = 0` is the reduced augmentation onto the empty face.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub k: i64,
    /// Rows: faces with `k` squares ((k-1)-dimensional).
    pub nrows: usize,
    /// Columns: faces with `k + 1` squares (k-dimensional).
    pub ncols: usize,
    pub entries: Vec<(u32, u32, i8)>,
}

/// Build the boundary operator of dimension `k` from an enumerated face set.
pub fn boundary_matrix_from_faces(faces: &FacesByCard, k: i64) -> BoundaryMatrix {
    assert!(k >= 0, "boundary dimension must be non-negative");
    let rows = faces.level(k as usize);
    let cols = faces.level(k as usize + 1);
    let mut entries = Vec::with_capacity(cols.len() * (k as usize + 1));
    for (j, &face) in cols.iter().enumerate() {
        for (t, pos) in bitset::iter(face).enumerate() {
            let sub = face & !bitset::bit(pos);
            let i = rows.binary_search(&sub).expect("boundary face missing from enumeration");
            let sign = if t % 2 == 0 { 1i8 } else { -1i8 };
            entries.push((i as u32, j as u32, sign));
        }
    }
    BoundaryMatrix { k, nrows: rows.len(), ncols: cols.len(), entries }
}

pub fn boundary_matrix(board: &Board, k: i64) -> Result<BoundaryMatrix> {
    let faces = ComplexView::full(board)?.enumerate(None)?;
    Ok(boundary_matrix_from_faces(&faces, k))
}

/// Check `∂_k ∘ ∂_{k+1} = 0` by expanding each column of the higher matrix.
pub fn composition_is_zero(lower: &BoundaryMatrix, upper: &BoundaryMatrix) -> bool {
    assert_eq!(lower.k + 1, upper.k);
    assert_eq!(lower.ncols, upper.nrows);
    // Column-major view of both.
    let mut lower_cols: Vec<Vec<(u32, i8)>> = alloc::vec![Vec::new(); lower.ncols];
    for &(i, j, s) in &lower.entries {
        lower_cols[j as usize].push((i, s));
    }
    let mut upper_cols: Vec<Vec<(u32, i8)>> = alloc::vec![Vec::new(); upper.ncols];
    for &(i, j, s) in &upper.entries {
        upper_cols[j as usize].push((i, s));
    }
    let mut acc: Vec<i64> = alloc::vec![0; lower.nrows];
    for col in &upper_cols {
        let mut touched = Vec::new();
        for &(mid, s1) in col {
            for &(row, s2) in &lower_cols[mid as usize] {
                if acc[row as usize] == 0 {
                    touched.push(row);
                }
                acc[row as usize] += s1 as i64 * s2 as i64;
            }
        }
        let ok = touched.iter().all(|&r| acc[r as usize] == 0);
        for r in touched {
            acc[r as usize] = 0;
        }
        if !ok {
            return false;
        }
    }
    true
}

/// Rank and invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub rank: usize,
    /// Nonzero invariant factors `d_1 | d_2 | ...`; `rank` of them.
    pub factors: Vec<BigUint>,
}

impl SnfResult {
    /// Invariant factors greater than one, i.e. the torsion coefficients of
    /// the cokernel.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.factors.iter().filter(|f| **f > BigUint::one()).cloned().collect()
    }
}

const DENSE_CELL_LIMIT: usize = 4_000_000;

/// Smith normal form of a sparse integer matrix given as (row, col, value)
/// triplets with no duplicate positions.
pub fn smith_normal_form(nrows: usize, ncols: usize, entries: &[(u32, u32, i64)]) -> Result<SnfResult> {
    let mut sparse = SparseMatrix::new(nrows, ncols, entries);
    let unit_rank = sparse.eliminate_units();
    let residual = sparse.residual();
    let mut factors = alloc::vec![BigUint::one(); unit_rank];
    let mut rank = unit_rank;
    if !residual.is_empty() {
        let cells = residual.len() * residual[0].len();
        if cells > DENSE_CELL_LIMIT {
            return Err(Error::ResourceLimit(alloc::format!(
                "Smith normal form residual of {cells} cells exceeds the dense limit"
            )));
        }
        let (extra_rank, extra_factors) = dense_snf(residual);
        rank += extra_rank;
        factors.extend(extra_factors);
    }
    Ok(SnfResult { rank, factors })
}

struct SparseMatrix {
    rows: Vec<Option<Vec<(u32, i64)>>>,
    col_count: Vec<u32>,
    col_rows: Vec<Vec<u32>>,
    /// (population, column) pairs for min-population pivot search.
    queue: BTreeSet<(u32, u32)>,
    overflowed: bool,
}

impl SparseMatrix {
    fn new(nrows: usize, ncols: usize, entries: &[(u32, u32, i64)]) -> SparseMatrix {
        let mut rows: Vec<Vec<(u32, i64)>> = alloc::vec![Vec::new(); nrows];
        let mut col_count = alloc::vec![0u32; ncols];
        let mut col_rows: Vec<Vec<u32>> = alloc::vec![Vec::new(); ncols];
        for &(i, j, v) in entries {
            if v != 0 {
                rows[i as usize].push((j, v));
                col_count[j as usize] += 1;
                col_rows[j as usize].push(i);
            }
        }
        let mut queue = BTreeSet::new();
        for (j, &c) in col_count.iter().enumerate() {
            if c > 0 {
                queue.insert((c, j as u32));
            }
        }
        for row in rows.iter_mut() {
            row.sort_unstable_by_key(|&(j, _)| j);
        }
        SparseMatrix { rows: rows.into_iter().map(Some).collect(), col_count, col_rows, queue, overflowed: false }
    }

    fn value_at(&self, rid: u32, col: u32) -> Option<i64> {
        let row = self.rows[rid as usize].as_ref()?;
        row.binary_search_by_key(&col, |&(j, _)| j).ok().map(|pos| row[pos].1)
    }

    fn bump_col(&mut self, col: u32, delta: i32) {
        let old = self.col_count[col as usize];
        let new = (old as i64 + delta as i64) as u32;
        self.queue.remove(&(old, col));
        self.col_count[col as usize] = new;
        if new > 0 {
            self.queue.insert((new, col));
        }
    }

    /// Pick a `±1` entry in a lowest-population column, preferring sparse rows.
    fn find_unit_pivot(&mut self) -> Option<(u32, u32)> {
        let cols: Vec<(u32, u32)> = self.queue.iter().copied().collect();
        for (count, col) in cols {
            if self.col_count[col as usize] != count || count == 0 {
                continue;
            }
            // Compact stale row references while scanning.
            let mut live = Vec::with_capacity(count as usize);
            let mut best: Option<(usize, u32)> = None;
            let rids = core::mem::take(&mut self.col_rows[col as usize]);
            for rid in rids {
                if let Some(v) = self.value_at(rid, col) {
                    live.push(rid);
                    if v == 1 || v == -1 {
                        let nnz = self.rows[rid as usize].as_ref().unwrap().len();
                        if best.is_none_or(|(bn, _)| nnz < bn) {
                            best = Some((nnz, rid));
                        }
                    }
                }
            }
            self.col_rows[col as usize] = live;
            if let Some((_, rid)) = best {
                return Some((rid, col));
            }
        }
        None
    }

    /// Eliminate with unit pivots until none remain (or arithmetic would
    /// overflow); returns the number of unit pivots, each an invariant
    /// factor 1.
    fn eliminate_units(&mut self) -> usize {
        let mut rank = 0;
        while !self.overflowed {
            let Some((rid, col)) = self.find_unit_pivot() else { break };
            let pivot_row = self.rows[rid as usize].take().expect("pivot row is live");
            for &(j, _) in &pivot_row {
                self.bump_col(j, -1);
            }
            let pv = pivot_row[pivot_row.binary_search_by_key(&col, |&(j, _)| j).unwrap()].1;
            let victims = core::mem::take(&mut self.col_rows[col as usize]);
            for victim in victims {
                if self.overflowed {
                    break;
                }
                let Some(v) = self.value_at(victim, col) else { continue };
                // pv is ±1 so the multiplier is exact.
                let factor = -v * pv;
                let old = self.rows[victim as usize].take().unwrap();
                match merge_rows(&old, &pivot_row, factor) {
                    Some(new_row) => {
                        self.apply_count_diff(victim, &old, &new_row);
                        self.rows[victim as usize] = Some(new_row);
                    }
                    None => {
                        // Overflow: leave the row as it was and fall back to
                        // the dense phase with the pivot row restored.
                        self.rows[victim as usize] = Some(old);
                        self.overflowed = true;
                    }
                }
            }
            if self.overflowed {
                for &(j, _) in &pivot_row {
                    self.bump_col(j, 1);
                }
                self.rows[rid as usize] = Some(pivot_row);
                for &(j, _) in self.rows[rid as usize].as_ref().unwrap() {
                    self.col_rows[j as usize].push(rid);
                }
                break;
            }
            rank += 1;
        }
        rank
    }

    fn apply_count_diff(&mut self, rid: u32, old: &[(u32, i64)], new: &[(u32, i64)]) {
        let (mut a, mut b) = (0usize, 0usize);
        while a < old.len() || b < new.len() {
            match (old.get(a), new.get(b)) {
                (Some(&(ja, _)), Some(&(jb, _))) if ja == jb => {
                    a += 1;
                    b += 1;
                }
                (Some(&(ja, _)), Some(&(jb, _))) if ja < jb => {
                    self.bump_col(ja, -1);
                    a += 1;
                }
                (Some(_), Some(&(jb, _))) => {
                    self.bump_col(jb, 1);
                    self.col_rows[jb as usize].push(rid);
                    b += 1;
                }
                (Some(&(ja, _)), None) => {
                    self.bump_col(ja, -1);
                    a += 1;
                }
                (None, Some(&(jb, _))) => {
                    self.bump_col(jb, 1);
                    self.col_rows[jb as usize].push(rid);
                    b += 1;
                }
                (None, None) => unreachable!(),
            }
        }
    }

    /// Remaining live entries as a dense matrix over compacted column ids.
    fn residual(&self) -> Vec<Vec<BigInt>> {
        let mut live_cols: Vec<u32> = self
            .col_count
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(j, _)| j as u32)
            .collect();
        live_cols.sort_unstable();
        let col_pos = |j: u32| live_cols.binary_search(&j).unwrap();
        let mut out = Vec::new();
        for row in self.rows.iter().flatten() {
            if row.is_empty() {
                continue;
            }
            let mut dense = alloc::vec![BigInt::zero(); live_cols.len()];
            for &(j, v) in row {
                dense[col_pos(j)] = BigInt::from(v);
            }
            out.push(dense);
        }
        out
    }
}

/// `a + factor * b` over sorted sparse rows with checked arithmetic.
fn merge_rows(a: &[(u32, i64)], b: &[(u32, i64)], factor: i64) -> Option<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ja, va)), Some(&(jb, vb))) if ja == jb => {
                let v = va.checked_add(vb.checked_mul(factor)?)?;
                if v != 0 {
                    out.push((ja, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(ja, va)), Some(&(jb, _))) if ja < jb => {
                out.push((ja, va));
                i += 1;
            }
            (Some(_), Some(&(jb, vb))) => {
                out.push((jb, vb.checked_mul(factor)?));
                j += 1;
            }
            (Some(&(ja, va)), None) => {
                out.push((ja, va));
                i += 1;
            }
            (None, Some(&(jb, vb))) => {
                out.push((jb, vb.checked_mul(factor)?));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Some(out)
}

/// Rounded division: the quotient minimizing the remainder's absolute value.
/// The divisor must be positive.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    let mut q = a.div_floor(b);
    let r = a - &q * b;
    if &r * 2 > *b {
        q += 1;
    }
    q
}

/// Classical Smith normal form on a dense matrix: minimal-absolute-value
/// pivoting, Euclidean reduction of the pivot row and column, a divisibility
/// fix-up so factors come out chained, and periodic extraction of the global
/// content (valid because scaling the whole residual block scales each of its
/// invariant factors).
#[allow(clippy::needless_range_loop)] // matrix elimination reads clearest indexed
fn dense_snf(mut m: Vec<Vec<BigInt>>) -> (usize, Vec<BigUint>) {
    let nr = m.len();
    let nc = if nr == 0 { 0 } else { m[0].len() };
    let limit = nr.min(nc);
    let mut factors = Vec::new();
    let mut acc = BigUint::one();
    let mut k = 0;
    while k < limit {
        // Locate a minimal nonzero entry; bail out if the block is zero.
        let mut best: Option<(usize, usize)> = None;
        for i in k..nr {
            for j in k..nc {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| m[i][j].magnitude() < m[bi][bj].magnitude())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        // Content extraction.
        let mut g = BigUint::zero();
        'content: for i in k..nr {
            for j in k..nc {
                g = g.gcd(m[i][j].magnitude());
                if g.is_one() {
                    break 'content;
                }
            }
        }
        if !g.is_zero() && !g.is_one() {
            let gb = BigInt::from(g.clone());
            for row in m.iter_mut().take(nr).skip(k) {
                for cell in row.iter_mut().take(nc).skip(k) {
                    if !cell.is_zero() {
                        *cell /= &gb;
                    }
                }
            }
            acc *= g;
        }
        m.swap(k, bi);
        for row in m.iter_mut() {
            row.swap(k, bj);
        }
        loop {
            if m[k][k].is_negative() {
                for cell in m[k].iter_mut() {
                    *cell = -core::mem::take(cell);
                }
            }
            let mut swapped = false;
            for i in k + 1..nr {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = round_div(&m[i][k], &m[k][k]);
                if !q.is_zero() {
                    for j in k..nc {
                        let t = &m[k][j] * &q;
                        m[i][j] -= t;
                    }
                }
                if !m[i][k].is_zero() {
                    m.swap(i, k);
                    swapped = true;
                    break;
                }
            }
            if swapped {
                continue;
            }
            for j in k + 1..nc {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = round_div(&m[k][j], &m[k][k]);
                if !q.is_zero() {
                    for i in k..nr {
                        let t = &m[i][k] * &q;
                        m[i][j] -= t;
                    }
                }
                if !m[k][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(j, k);
                    }
                    swapped = true;
                    break;
                }
            }
            if swapped {
                continue;
            }
            // Pivot row and column are clear; enforce divisibility.
            let mut offender = None;
            'scan: for i in k + 1..nr {
                for j in k + 1..nc {
                    if !(&m[i][j] % &m[k][k]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    for j in k..nc {
                        let t = m[i][j].clone();
                        m[k][j] += t;
                    }
                }
                None => break,
            }
        }
        factors.push(m[k][k].magnitude() * &acc);
        k += 1;
    }
    (k, factors)
}

/// Reduced Betti numbers and torsion coefficients per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiResult {
    /// Reduced homology in dimension -1 (1 only for the complex `{∅}`).
    pub betti_neg1: u64,
    /// `betti[d]` is the reduced Betti number in dimension `d`.
    pub betti: Vec<u64>,
    /// `torsion[d]` lists torsion coefficients in divisibility order.
    pub torsion: Vec<Vec<BigUint>>,
}

impl BettiResult {
    pub fn reduced_euler(&self) -> BigInt {
        let mut acc = -BigInt::from(self.betti_neg1);
        for (d, &b) in self.betti.iter().enumerate() {
            let term = BigInt::from(b);
            if d % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    pub fn torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }
}

#[derive(Clone, Debug)]
pub struct HomologyOptions {
    /// Refuse complexes with more faces than this.
    pub max_faces: u64,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        HomologyOptions { max_faces: 2_000_000 }
    }
}

/// Assemble Betti numbers from face counts per cardinality and the SNF of
/// each boundary operator (`snfs[k]` for `∂_k`, `k = 0..=dim+1`).
pub fn betti_from_parts(counts: &[u64], snfs: &[SnfResult]) -> BettiResult {
    let dim = counts.len() as i64 - 2;
    let rank = |k: i64| -> u64 {
        if k < 0 {
            0
        } else {
            snfs.get(k as usize).map(|s| s.rank as u64).unwrap_or(0)
        }
    };
    let betti_neg1 = 1 - rank(0);
    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    for d in 0..=dim {
        let faces = counts[(d + 1) as usize];
        let b = faces - rank(d) - rank(d + 1);
        betti.push(b);
        let t = snfs.get((d + 1) as usize).map(|s| s.torsion()).unwrap_or_default();
        torsion.push(t);
    }
    BettiResult { betti_neg1, betti, torsion }
}

/// Exact reduced integer homology of a board's rook complex.
pub fn betti(board: &Board, options: &HomologyOptions) -> Result<BettiResult> {
    let predicted = f_vector_formula(board).total_faces();
    if predicted > BigUint::from(options.max_faces) {
        return Err(Error::ResourceLimit(alloc::format!(
            "complex has {predicted} faces, above the ceiling of {}",
            options.max_faces
        )));
    }
    let faces = ComplexView::full(board)?.enumerate(Some(options.max_faces))?;
    let counts = faces.counts();
    let dim = faces.dim();
    let mut snfs = Vec::new();
    for k in 0..=dim + 1 {
        let bm = boundary_matrix_from_faces(&faces, k);
        let entries: Vec<(u32, u32, i64)> =
            bm.entries.iter().map(|&(i, j, s)| (i, j, s as i64)).collect();
        snfs.push(smith_normal_form(bm.nrows, bm.ncols, &entries)?);
    }
    Ok(betti_from_parts(&counts, &snfs))
}

/// For boards meeting the shedding hypotheses the complex is a wedge of
/// top-dimensional spheres (or contractible); the count is `|reduced Euler|`.
pub fn wedge_count_vd(board: &Board) -> Result<BigUint> {
    if !board.meets_vd_hypotheses() {
        return Err(Error::HypothesesUnmet(alloc::format!(
            "board {} does not satisfy a_1 >= 1, a_n >= n, a_i >= i-1",
            board.spec_string()
        )));
    }
    Ok(crate::complex::reduced_euler(board).magnitude().clone())
}
