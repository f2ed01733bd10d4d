//! Set partitions, Stirling numbers, the rook/partition correspondence, and
//! intertwined-partition counting.
//!
//! Faces of the staircase complex of size `n` correspond to partitions of
//! `[n+1]`: a rook on square `(i, j)` merges `i` and `j + 1`.  Maximal
//! placements correspond to the partitions in which every pair of blocks is
//! intertwined, and those are counted by products of Stirling numbers.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::board::{Board, Square};
use crate::complex::{ComplexView, Placement};
use crate::error::{Error, Result};

/// A partition of `{1..m}` into disjoint nonempty blocks.  Blocks are sorted
/// internally and ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SetPartition {
    m: u32,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(m: u32, blocks: Vec<Vec<u32>>) -> Result<SetPartition> {
        let mut seen = alloc::vec![false; m as usize + 1];
        let mut blocks: Vec<Vec<u32>> = blocks;
        for block in blocks.iter_mut() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x < 1 || x > m {
                    return Err(Error::InvalidPartition(format!("element {x} outside 1..={m}")));
                }
                if seen[x as usize] {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x as usize] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(Error::InvalidPartition("blocks do not cover the ground set".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { m, blocks })
    }

    pub fn singletons(m: u32) -> SetPartition {
        SetPartition { m, blocks: (1..=m).map(|x| alloc::vec![x]).collect() }
    }

    pub fn ground_size(&self) -> u32 {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Every pair of blocks intertwined (vacuously true with one block).
    pub fn is_intertwined(&self) -> bool {
        for i in 0..self.blocks.len() {
            for j in i + 1..self.blocks.len() {
                // Blocks are ordered by minima, so block i holds the pair's minimum.
                if !(self.blocks[i].last().unwrap() > &self.blocks[j][0]) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{{")?;
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Iterator over all partitions of `{1..m}` via restricted growth strings.
pub struct SetPartitions {
    m: u32,
    rgs: Vec<u32>,
    prefix_max: Vec<u32>,
    done: bool,
}

impl SetPartitions {
    pub fn new(m: u32) -> SetPartitions {
        SetPartitions { m, rgs: alloc::vec![0; m as usize], prefix_max: alloc::vec![0; m as usize], done: false }
    }

    fn current(&self) -> SetPartition {
        let k = if self.m == 0 { 0 } else { self.prefix_max[self.m as usize - 1] + 1 };
        let mut blocks: Vec<Vec<u32>> = alloc::vec![Vec::new(); k as usize];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b as usize].push(i as u32 + 1);
        }
        // RGS blocks are already ordered by their minima.
        SetPartition { m: self.m, blocks }
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = self.current();
        // Advance: rightmost position that can grow gets incremented,
        // everything after it resets to zero.
        let m = self.m as usize;
        let mut i = m;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                for j in i + 1..m {
                    self.rgs[j] = 0;
                }
                for j in i..m {
                    self.prefix_max[j] = self.prefix_max[j - 1].max(self.rgs[j]);
                }
                break;
            }
        }
        Some(out)
    }
}

/// Stirling numbers of the second kind `S(n, k)`, memoized row by row.
/// The table is filled once at construction and immutable afterwards, so
/// concurrent lookups are safe.
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn up_to(n: usize) -> StirlingTable {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
        rows.push(alloc::vec![BigUint::one()]);
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = alloc::vec![BigUint::zero(); i + 1];
            for k in 1..=i {
                let mut v = if k < i { &prev[k] * BigUint::from(k as u64) } else { BigUint::zero() };
                v += &prev[k - 1];
                row[k] = v;
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.rows.get(n).and_then(|r| r.get(k)).cloned().unwrap_or_else(BigUint::zero)
    }
}

/// `S(n, k)`: the number of partitions of an `n`-set into `k` blocks.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    StirlingTable::up_to(n).get(n, k)
}

/// The partition of `[n + 1]` induced by a placement on the staircase of size
/// `n`: a rook at `(i, j)` puts `i` and `j + 1` in the same block.
pub fn rook_to_partition(board: &Board, placement: &Placement) -> Result<SetPartition> {
    let n = board.staircase_n().ok_or(Error::NotStaircase)?;
    if !crate::complex::is_face(board, placement.squares()) {
        return Err(Error::NotAFace);
    }
    let mut dsu = Dsu::new(n as usize + 1);
    for sq in placement.squares() {
        dsu.union(sq.col as usize - 1, sq.row as usize);
    }
    let mut blocks_by_root: Vec<Vec<u32>> = alloc::vec![Vec::new(); n as usize + 1];
    for x in 0..=n as usize {
        blocks_by_root[dsu.find(x)].push(x as u32 + 1);
    }
    let blocks: Vec<Vec<u32>> = blocks_by_root.into_iter().filter(|b| !b.is_empty()).collect();
    SetPartition::new(n + 1, blocks)
}

/// Inverse of [`rook_to_partition`]: each block `{b_1 < ... < b_q}` yields the
/// rooks `(b_t, b_{t+1} - 1)`.
pub fn partition_to_rooks(partition: &SetPartition) -> Result<Placement> {
    let n = partition.ground_size().saturating_sub(1);
    let board = Board::stirling(n);
    let mut squares = Vec::new();
    for block in partition.blocks() {
        for w in block.windows(2) {
            squares.push(Square::new(w[0], w[1] - 1));
        }
    }
    Placement::new(&board, squares)
}

fn check_pair(b: &[u32], c: &[u32]) -> Result<()> {
    if b.is_empty() || c.is_empty() {
        return Err(Error::InvalidPartition("intertwining needs nonempty sets".into()));
    }
    let bs: BTreeSet<u32> = b.iter().copied().collect();
    if c.iter().any(|x| bs.contains(x)) {
        return Err(Error::InvalidPartition("sets overlap".into()));
    }
    Ok(())
}

/// Whether two disjoint nonempty sets are intertwined.  The pair is relabeled
/// internally so the set holding the overall minimum plays the first role;
/// then the test is `max(B) > min(C)`.
pub fn is_intertwined_pair(b: &[u32], c: &[u32]) -> Result<bool> {
    check_pair(b, c)?;
    let (bmin, bmax) = (*b.iter().min().unwrap(), *b.iter().max().unwrap());
    let (cmin, cmax) = (*c.iter().min().unwrap(), *c.iter().max().unwrap());
    Ok(if bmin < cmin { bmax > cmin } else { cmax > bmin })
}

/// The intertwining number: pairs `(b, c)` with no element of either set
/// strictly between them.
pub fn intertwining_number(b: &[u32], c: &[u32]) -> Result<u64> {
    check_pair(b, c)?;
    let union: BTreeSet<u32> = b.iter().chain(c.iter()).copied().collect();
    let mut count = 0;
    for &x in b {
        for &y in c {
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            if union.range(lo + 1..hi).next().is_none() {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Whether every pair of blocks of a partition is intertwined.
pub fn is_intertwined_partition(p: &SetPartition) -> bool {
    p.is_intertwined()
}

/// The closed-form count of partitions of `[n]` into `k` intertwined blocks:
/// `(k-1)! * sum_{i=k-1}^{n-k} S(i, k-1) S(n-i, k)`.  With the convention
/// `S(0, 0) = 1` the `i = 0` term makes this `1` at `k = 1`, agreeing with
/// the vacuous intertwinedness of a single block.
pub fn intertwined_formula(n: u64, k: u64) -> BigUint {
    if k == 0 || k > n {
        return BigUint::zero();
    }
    let table = StirlingTable::up_to(n as usize);
    let mut sum = BigUint::zero();
    let mut i = k - 1;
    while i + k <= n {
        sum += table.get(i as usize, k as usize - 1) * table.get((n - i) as usize, k as usize);
        i += 1;
    }
    sum * factorial(k - 1)
}

/// Number of partitions of `[n]` into `k` intertwined blocks.  Same as
/// [`intertwined_formula`]; kept separate so the definition-level count and
/// the closed form stay independently addressable.
pub fn count_intertwined(n: u64, k: u64) -> BigUint {
    intertwined_formula(n, k)
}

/// Brute-force count over all partitions, for cross-checks.
pub fn count_intertwined_bruteforce(n: u32, k: usize) -> BigUint {
    let mut count = 0u64;
    for p in SetPartitions::new(n) {
        if p.block_count() == k && p.is_intertwined() {
            count += 1;
        }
    }
    BigUint::from(count)
}

fn factorial(k: u64) -> BigUint {
    let mut out = BigUint::one();
    for i in 2..=k {
        out *= BigUint::from(i);
    }
    out
}

/// Number of maximal placements of `n - k` rooks on the staircase of size `n`:
/// `F^n_{n-k} = k! * sum_{i=k}^{n-k} S(i, k) S(n+1-i, k+1)`.
pub fn facet_count(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let table = StirlingTable::up_to(n as usize + 1);
    let mut sum = BigUint::zero();
    let mut i = k;
    while i + k <= n {
        sum += table.get(i as usize, k as usize) * table.get((n + 1 - i) as usize, k as usize + 1);
        i += 1;
    }
    sum * factorial(k)
}

/// Coefficients of `x^0..x^max_power` of the facet generating function
/// `k! x^{2k} / ((prod_{i=1}^{k} (1 - i x))^2 (1 - (k+1) x))`, so the
/// coefficient of `x^n` is `F^n_{n-k}`.
pub fn gf_coefficients(k: u64, max_power: usize) -> Vec<BigUint> {
    // Denominator as an exact polynomial, truncated to the needed degree.
    let mut den: Vec<BigInt> = alloc::vec![BigInt::one()];
    let mul_linear = |den: &mut Vec<BigInt>, c: i64| {
        // multiply by (1 - c x)
        let mut next = alloc::vec![BigInt::zero(); (den.len() + 1).min(max_power + 1)];
        for (d, coeff) in den.iter().enumerate() {
            if d < next.len() {
                next[d] += coeff;
            }
            if d + 1 < next.len() {
                let t = coeff * BigInt::from(-c);
                next[d + 1] += t;
            }
        }
        *den = next;
    };
    for i in 1..=k {
        mul_linear(&mut den, i as i64);
        mul_linear(&mut den, i as i64);
    }
    mul_linear(&mut den, k as i64 + 1);
    // Numerator: k! x^{2k}.
    let mut num = alloc::vec![BigInt::zero(); max_power + 1];
    let shift = (2 * k) as usize;
    if shift <= max_power {
        num[shift] = BigInt::from(factorial(k));
    }
    // Series division; the constant term of the denominator is 1.
    let mut coeffs: Vec<BigInt> = alloc::vec![BigInt::zero(); max_power + 1];
    for m in 0..=max_power {
        let mut acc = num[m].clone();
        for t in 1..=m.min(den.len() - 1) {
            acc -= &den[t] * &coeffs[m - t];
        }
        coeffs[m] = acc;
    }
    coeffs
        .into_iter()
        .map(|c| {
            debug_assert!(!c.is_negative(), "facet series coefficients are counts");
            c.magnitude().clone()
        })
        .collect()
}

/// One checked size class in a [`BijectionReport`].
#[derive(Clone, Debug)]
pub struct BijectionSizeReport {
    /// Number of rooks in the maximal placements of this class.
    pub rooks: u64,
    pub maximal_placements: u64,
    pub intertwined_partitions: u64,
    pub formula_count: BigUint,
    pub ok: bool,
}

/// Outcome of checking that the rook/partition map restricts to a bijection
/// between maximal placements and intertwined partitions.
#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub n: u32,
    pub per_size: Vec<BijectionSizeReport>,
    pub errors: Vec<String>,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.errors.is_empty() && self.per_size.iter().all(|r| r.ok)
    }
}

/// Verify that maximal placements with `k` rooks on the staircase of size `n`
/// map bijectively onto intertwined partitions of `[n+1]` into `n+1-k` blocks.
pub fn bijection_check(n: u32) -> Result<BijectionReport> {
    let board = Board::stirling(n);
    let view = ComplexView::full(&board)?;
    let mut errors = Vec::new();

    let mut maximal_by_size: Vec<Vec<SetPartition>> = alloc::vec![Vec::new(); n as usize + 1];
    for p in view.facets() {
        let image = rook_to_partition(&board, &p)?;
        if partition_to_rooks(&image)? != p {
            errors.push(format!("round trip failed for {p}"));
        }
        maximal_by_size[p.len()].push(image);
    }

    let mut intertwined_by_blocks: Vec<BTreeSet<SetPartition>> =
        alloc::vec![BTreeSet::new(); n as usize + 2];
    for p in SetPartitions::new(n + 1) {
        if p.is_intertwined() {
            intertwined_by_blocks[p.block_count()].insert(p);
        }
    }

    let mut per_size = Vec::new();
    for (rooks, images) in maximal_by_size.iter().enumerate() {
        let blocks = n as usize + 1 - rooks;
        let intertwined = &intertwined_by_blocks[blocks];
        if images.is_empty() && intertwined.is_empty() {
            continue;
        }
        let image_set: BTreeSet<&SetPartition> = images.iter().collect();
        if image_set.len() != images.len() {
            errors.push(format!("map not injective on maximal placements of {rooks} rooks"));
        }
        let onto = intertwined.iter().all(|p| image_set.contains(p));
        let into = images.iter().all(|p| intertwined.contains(p));
        let formula = count_intertwined(n as u64 + 1, blocks as u64);
        let ok = onto
            && into
            && image_set.len() == intertwined.len()
            && formula == BigUint::from(intertwined.len() as u64);
        per_size.push(BijectionSizeReport {
            rooks: rooks as u64,
            maximal_placements: images.len() as u64,
            intertwined_partitions: intertwined.len() as u64,
            formula_count: formula,
            ok,
        });
    }
    Ok(BijectionReport { n, per_size, errors })
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(stirling2(3, 3), BigUint::one());
        for n in 1..=6 {
            assert_eq!(stirling2(n, 1), BigUint::one());
        }
        assert_eq!(stirling2(0, 0), BigUint::one());
        assert_eq!(stirling2(3, 0), BigUint::zero());
        assert_eq!(stirling2(2, 5), BigUint::zero());
    }

    #[test]
    fn stirling_matches_partition_enumeration() {
        for n in 0..=9u32 {
            let mut by_blocks = alloc::vec![0u64; n as usize + 2];
            for p in SetPartitions::new(n) {
                by_blocks[p.block_count()] += 1;
            }
            for (k, &count) in by_blocks.iter().enumerate() {
                assert_eq!(stirling2(n as usize, k), BigUint::from(count), "S({n},{k})");
            }
        }
    }

    #[test]
    fn partition_count_is_bell() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &want) in bell.iter().enumerate() {
            assert_eq!(SetPartitions::new(n as u32).count() as u64, want);
        }
    }

    #[test]
    fn rook_partition_correspondence() {
        let b = Board::stirling(5);
        let p = Placement::new(
            &b,
            vec![Square::new(1, 2), Square::new(2, 5), Square::new(3, 3), Square::new(4, 4)],
        )
        .unwrap();
        let part = rook_to_partition(&b, &p).unwrap();
        assert_eq!(part, SetPartition::new(6, vec![vec![1, 3, 4, 5], vec![2, 6]]).unwrap());
        assert_eq!(partition_to_rooks(&part).unwrap(), p);

        let empty = rook_to_partition(&b, &Placement::empty()).unwrap();
        assert_eq!(empty, SetPartition::singletons(6));

        let single = Placement::new(&b, vec![Square::new(2, 5)]).unwrap();
        assert_eq!(
            rook_to_partition(&b, &single).unwrap(),
            SetPartition::new(6, vec![vec![1], vec![2, 6], vec![3], vec![4], vec![5]]).unwrap()
        );
    }

    #[test]
    fn one_block_partition_maps_to_diagonal_chain() {
        let p = SetPartition::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        let rooks = partition_to_rooks(&p).unwrap();
        let b = Board::stirling(3);
        assert_eq!(
            rooks,
            Placement::new(&b, vec![Square::new(1, 1), Square::new(2, 2), Square::new(3, 3)]).unwrap()
        );
    }

    #[test]
    fn round_trip_all_partitions() {
        for m in 1..=7u32 {
            for p in SetPartitions::new(m) {
                let rooks = partition_to_rooks(&p).unwrap();
                let board = Board::stirling(m - 1);
                assert_eq!(rook_to_partition(&board, &rooks).unwrap(), p);
            }
        }
    }

    #[test]
    fn intertwined_pair_examples() {
        assert!(is_intertwined_pair(&[1, 3], &[2, 4]).unwrap());
        assert!(!is_intertwined_pair(&[1, 2], &[3, 4]).unwrap());
        assert!(is_intertwined_pair(&[1, 2, 4], &[3]).unwrap());
        // Order of arguments must not matter.
        assert!(is_intertwined_pair(&[2, 4], &[1, 3]).unwrap());
        assert!(is_intertwined_pair(&[1], &[2]).is_ok());
        assert!(is_intertwined_pair(&[1, 2], &[2, 3]).is_err());
        assert!(is_intertwined_pair(&[], &[1]).is_err());
    }

    #[test]
    fn intertwining_number_examples() {
        assert_eq!(intertwining_number(&[1, 3], &[2, 4]).unwrap(), 3);
        assert_eq!(intertwining_number(&[1, 2], &[3, 4]).unwrap(), 1);
        assert_eq!(intertwining_number(&[1], &[2]).unwrap(), 1);
    }

    #[test]
    fn intertwined_partition_examples() {
        let yes = SetPartition::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert!(yes.is_intertwined());
        let no = SetPartition::new(4, vec![vec![1, 2, 3], vec![4]]).unwrap();
        assert!(!no.is_intertwined());
        let single = SetPartition::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert!(single.is_intertwined());
    }

    #[test]
    fn intertwined_counts() {
        assert_eq!(count_intertwined(4, 2), BigUint::from(4u32));
        assert_eq!(count_intertwined(5, 3), BigUint::from(2u32));
        // With S(0,0) = 1 the formula's i = 0 term covers the single-block case.
        for n in 1..=6 {
            assert_eq!(count_intertwined(n, 1), BigUint::one());
            assert_eq!(intertwined_formula(n, 1), BigUint::one());
        }
        for n in 1..=9u32 {
            for k in 2..=n as usize {
                assert_eq!(
                    count_intertwined(n as u64, k as u64),
                    count_intertwined_bruteforce(n, k),
                    "I({n},{k})"
                );
            }
            assert_eq!(count_intertwined_bruteforce(n, 1), BigUint::one());
        }
    }

    #[test]
    fn facet_count_examples() {
        assert_eq!(facet_count(4, 2), BigUint::from(2u32));
        assert_eq!(facet_count(4, 1), BigUint::from(11u32));
        for n in 1..=8 {
            assert_eq!(facet_count(n, 0), BigUint::one());
        }
        // Equality with the intertwined count at shifted arguments.
        for n in 1..=9u64 {
            for k in 0..=n {
                assert_eq!(facet_count(n, k), count_intertwined(n + 1, k + 1), "F^{n} k={k}");
            }
        }
    }

    #[test]
    fn gf_examples() {
        let k1 = gf_coefficients(1, 5);
        assert_eq!(
            k1,
            vec![
                BigUint::zero(),
                BigUint::zero(),
                BigUint::one(),
                BigUint::from(4u32),
                BigUint::from(11u32),
                BigUint::from(26u32)
            ]
        );
        let k2 = gf_coefficients(2, 4);
        assert_eq!(k2[4], BigUint::from(2u32));
        let k0 = gf_coefficients(0, 3);
        assert_eq!(k0, vec![BigUint::one(); 4]);
    }

    #[test]
    fn gf_matches_facet_count() {
        for k in 0..=3u64 {
            let coeffs = gf_coefficients(k, 12);
            for n in 0..=12u64 {
                let want = if n >= k { facet_count(n, k) } else { BigUint::zero() };
                assert_eq!(coeffs[n as usize], want, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn bijection_small() {
        let r = bijection_check(3).unwrap();
        assert!(r.ok(), "{:?}", r.errors);
        let two_rooks = r.per_size.iter().find(|s| s.rooks == 2).unwrap();
        assert_eq!(two_rooks.maximal_placements, 4);
        assert_eq!(two_rooks.intertwined_partitions, 4);

        let r4 = bijection_check(4).unwrap();
        assert!(r4.ok());
        let sizes: Vec<(u64, u64)> =
            r4.per_size.iter().map(|s| (s.rooks, s.maximal_placements)).collect();
        assert!(sizes.contains(&(2, 2)));
        assert!(sizes.contains(&(3, 11)));

        let r1 = bijection_check(1).unwrap();
        assert!(r1.ok());
        assert_eq!(r1.per_size.len(), 1);
        assert_eq!(r1.per_size[0].maximal_placements, 1);
    }

    #[test]
    fn partition_validation() {
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![4]]).is_err());
    }

    #[test]
    fn display_forms() {
        let p = SetPartition::new(6, vec![vec![2, 6], vec![1, 3, 4, 5]]).unwrap();
        assert_eq!(alloc::format!("{p}"), "{1,3,4,5}{2,6}");
    }
}
