//! Ferrers boards: row/column geometry, canonical square order, Durfee squares.
//!
//! A board is stored by its multiplicity vector `a_1..a_n`, where `a_i` counts
//! rows of length `i`.  Rows are numbered bottom to top and are nondecreasing
//! in length, so column `i` occupies the top `l(i)` rows where
//! `l(i) = a_i + a_{i+1} + ... + a_n`.  Zero multiplicities are allowed; the
//! all-zero (or empty) multiplicity vector is the empty board.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{self, MAX_SQUARES};
use crate::error::{Error, Result};

/// A board square: `col` counts from the left, `row` from the bottom, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub col: u32,
    pub row: u32,
}

impl Square {
    pub fn new(col: u32, row: u32) -> Self {
        Square { col, row }
    }

    /// Two distinct squares attack each other when they share a row or a column.
    pub fn attacks(self, other: Square) -> bool {
        self != other && (self.col == other.col || self.row == other.row)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Masks {
    /// Per square index: all other squares sharing its row or column.
    attack: Vec<u128>,
    /// Per row (index `row - 1`): squares in that row.
    row: Vec<u128>,
    /// Per column (index `col - 1`): squares in that column.
    col: Vec<u128>,
}

/// A left-justified Ferrers board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Board {
    mult: Vec<u32>,
    row_lengths: Vec<u32>,
    col_lengths: Vec<u32>,
    /// Prefix sums of column lengths; `col_offsets[i]` is the canonical index
    /// of the first square of column `i + 1`.
    col_offsets: Vec<u64>,
    masks: Option<Masks>,
}

impl Board {
    /// Build a board from multiplicities in ascending length order `a_1..a_n`.
    pub fn new(multiplicities: &[u32]) -> Board {
        let n = multiplicities.len();
        let mut row_lengths = Vec::new();
        for (i, &a) in multiplicities.iter().enumerate() {
            for _ in 0..a {
                row_lengths.push(i as u32 + 1);
            }
        }
        let p = row_lengths.len();
        assert!(p <= u32::MAX as usize, "row count exceeds u32");
        let mut col_lengths = Vec::with_capacity(n);
        let mut suffix: u64 = 0;
        let mut rev = Vec::with_capacity(n);
        for &a in multiplicities.iter().rev() {
            suffix += a as u64;
            rev.push(suffix);
        }
        for &l in rev.iter().rev() {
            assert!(l <= u32::MAX as u64, "column length exceeds u32");
            col_lengths.push(l as u32);
        }
        let mut col_offsets = Vec::with_capacity(n + 1);
        let mut acc: u64 = 0;
        col_offsets.push(0);
        for &l in &col_lengths {
            acc += l as u64;
            col_offsets.push(acc);
        }
        let mut board = Board { mult: multiplicities.to_vec(), row_lengths, col_lengths, col_offsets, masks: None };
        if board.square_count() <= MAX_SQUARES {
            board.masks = Some(board.build_masks());
        }
        board
    }

    /// Build a board from multiplicities in the conventional subscript order
    /// `a_n,...,a_1` (largest row length first).
    pub fn from_paper_order(multiplicities: &[u32]) -> Board {
        let rev: Vec<u32> = multiplicities.iter().rev().copied().collect();
        Board::new(&rev)
    }

    /// The staircase board with rows of lengths `1, 2, ..., n`.
    pub fn stirling(n: u32) -> Board {
        Board::new(&alloc::vec![1; n as usize])
    }

    /// Parse `stirling:<n>` or `psi:<a_n>,...,<a_1>`.
    pub fn parse_spec(spec: &str) -> Result<Board> {
        if let Some(rest) = spec.strip_prefix("stirling:") {
            let n: u32 = rest
                .parse()
                .map_err(|_| Error::SpecParse(format!("bad staircase size {rest:?}")))?;
            return Ok(Board::stirling(n));
        }
        if let Some(rest) = spec.strip_prefix("psi:") {
            if rest.is_empty() {
                return Err(Error::SpecParse("psi: needs a multiplicity list".to_string()));
            }
            let mut mult = Vec::new();
            for part in rest.split(',') {
                let a: u32 = part
                    .parse()
                    .map_err(|_| Error::SpecParse(format!("bad multiplicity {part:?}")))?;
                mult.push(a);
            }
            return Ok(Board::from_paper_order(&mult));
        }
        Err(Error::SpecParse(format!("unknown board spec {spec:?}")))
    }

    /// Spec string, re-parseable by [`Board::parse_spec`].
    pub fn spec_string(&self) -> String {
        if self.mult.iter().all(|&a| a == 1) {
            return format!("stirling:{}", self.mult.len());
        }
        let parts: Vec<String> = self.mult.iter().rev().map(|a| a.to_string()).collect();
        format!("psi:{}", parts.join(","))
    }

    /// Canonical serialization: the list `a_1..a_n`, comma-separated.
    pub fn canonical_key(&self) -> String {
        let parts: Vec<String> = self.mult.iter().map(|a| a.to_string()).collect();
        parts.join(",")
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    /// Declared maximum row length (the length of the multiplicity vector).
    pub fn n(&self) -> usize {
        self.mult.len()
    }

    /// Total number of rows `p`.
    pub fn row_count(&self) -> u32 {
        self.row_lengths.len() as u32
    }

    /// Row lengths bottom to top (nondecreasing).
    pub fn row_lengths(&self) -> &[u32] {
        &self.row_lengths
    }

    pub fn row_length(&self, row: u32) -> u32 {
        if row == 0 || row as usize > self.row_lengths.len() {
            0
        } else {
            self.row_lengths[row as usize - 1]
        }
    }

    /// Column length `l(col) = a_col + ... + a_n`; zero outside `1..=n`.
    pub fn column_length(&self, col: u32) -> u32 {
        if col == 0 || col as usize > self.col_lengths.len() {
            0
        } else {
            self.col_lengths[col as usize - 1]
        }
    }

    pub fn square_count(&self) -> u64 {
        *self.col_offsets.last().unwrap_or(&0)
    }

    /// Lowest row of a column; column `col` spans rows `first_row(col)..=p`.
    fn first_row(&self, col: u32) -> u32 {
        self.row_count() - self.column_length(col) + 1
    }

    pub fn contains(&self, sq: Square) -> bool {
        sq.col >= 1 && sq.row >= 1 && sq.row <= self.row_count() && sq.col <= self.row_length(sq.row)
    }

    /// All squares in the canonical order: lexicographic by (column, row).
    pub fn squares(&self) -> Vec<Square> {
        let mut out = Vec::with_capacity(self.square_count() as usize);
        for col in 1..=self.n() as u32 {
            for row in self.first_row(col)..=self.row_count() {
                out.push(Square::new(col, row));
            }
        }
        out
    }

    pub fn square_index(&self, sq: Square) -> Option<usize> {
        if !self.contains(sq) {
            return None;
        }
        let base = self.col_offsets[sq.col as usize - 1];
        Some((base + (sq.row - self.first_row(sq.col)) as u64) as usize)
    }

    /// Inverse of [`Board::square_index`]; panics out of range.
    pub fn square_at(&self, index: usize) -> Square {
        let idx = index as u64;
        assert!(idx < self.square_count(), "square index out of range");
        let col = match self.col_offsets.binary_search(&idx) {
            Ok(mut c) => {
                // Skip empty columns sharing the same offset.
                while self.col_offsets[c + 1] == idx {
                    c += 1;
                }
                c + 1
            }
            Err(c) => c,
        } as u32;
        let row = self.first_row(col) + (idx - self.col_offsets[col as usize - 1]) as u32;
        Square::new(col, row)
    }

    /// Whether face-level bitset operations are available (≤ 128 squares).
    pub fn enumeration_supported(&self) -> bool {
        self.masks.is_some()
    }

    pub(crate) fn require_masks(&self) -> Result<()> {
        if self.masks.is_some() {
            Ok(())
        } else {
            Err(Error::BoardTooLarge { squares: self.square_count(), max: MAX_SQUARES })
        }
    }

    pub(crate) fn attack_mask(&self, index: usize) -> u128 {
        self.masks.as_ref().expect("board too large for masks").attack[index]
    }

    pub(crate) fn row_mask(&self, row: u32) -> u128 {
        self.masks.as_ref().expect("board too large for masks").row[row as usize - 1]
    }

    pub(crate) fn col_mask(&self, col: u32) -> u128 {
        self.masks.as_ref().expect("board too large for masks").col[col as usize - 1]
    }

    /// Bitmask of every square on the board.
    pub(crate) fn full_mask(&self) -> u128 {
        let count = self.square_count();
        if count == 0 {
            0
        } else if count == MAX_SQUARES {
            u128::MAX
        } else {
            (1u128 << count) - 1
        }
    }

    fn build_masks(&self) -> Masks {
        let squares = self.squares();
        let p = self.row_count() as usize;
        let n = self.n();
        let mut row = alloc::vec![0u128; p];
        let mut col = alloc::vec![0u128; n];
        for (i, sq) in squares.iter().enumerate() {
            row[sq.row as usize - 1] |= bitset::bit(i);
            col[sq.col as usize - 1] |= bitset::bit(i);
        }
        let attack = squares
            .iter()
            .enumerate()
            .map(|(i, sq)| (row[sq.row as usize - 1] | col[sq.col as usize - 1]) & !bitset::bit(i))
            .collect();
        Masks { attack, row, col }
    }

    /// Side of the largest contiguous square sub-board.  Left justification
    /// makes the column test sufficient: a `d x d` block exists iff
    /// `l(d) >= d`.
    pub fn durfee_size(&self) -> u32 {
        (1..=self.n() as u32).filter(|&d| self.column_length(d) >= d).max().unwrap_or(0)
    }

    pub fn is_staircase(&self) -> bool {
        self.mult.iter().all(|&a| a == 1)
    }

    /// `Some(n)` when the board is the staircase with rows `1..=n`.
    pub fn staircase_n(&self) -> Option<u32> {
        if self.is_staircase() {
            Some(self.mult.len() as u32)
        } else {
            None
        }
    }

    /// The hypotheses under which the rook complex is pure and admits a
    /// first-column shedding order: `a_1 >= 1`, `a_n >= n`, and
    /// `a_i >= i - 1` for `2 <= i <= n - 1`.
    pub fn meets_vd_hypotheses(&self) -> bool {
        let n = self.mult.len();
        if n == 0 || self.mult[0] < 1 || (self.mult[n - 1] as usize) < n {
            return false;
        }
        (2..n).all(|i| self.mult[i - 1] as usize >= i - 1)
    }

    /// The Ferrers board left after deleting one row and one column, with the
    /// remaining rows and columns renumbered contiguously.
    pub fn delete_row_col(&self, row: u32, col: u32) -> Board {
        let mut counts: Vec<u32> = Vec::new();
        for (w, &len) in self.row_lengths.iter().enumerate() {
            if w as u32 + 1 == row {
                continue;
            }
            let new_len = if len >= col && col >= 1 { len - 1 } else { len };
            if new_len >= 1 {
                if counts.len() < new_len as usize {
                    counts.resize(new_len as usize, 0);
                }
                counts[new_len as usize - 1] += 1;
            }
        }
        Board::new(&counts)
    }

    /// Where a square of this board lands under [`Board::delete_row_col`];
    /// `None` when the square lies on the deleted row or column.  Rows whose
    /// length drops to zero vanish, so surviving rows are renumbered by their
    /// rank among the survivors.
    pub fn relabel_after_delete(&self, row: u32, col: u32, sq: Square) -> Option<Square> {
        if sq.row == row || sq.col == col {
            return None;
        }
        let new_col = if sq.col > col { sq.col - 1 } else { sq.col };
        let mut new_row = 1;
        for w in 1..sq.row {
            if w == row {
                continue;
            }
            let len = self.row_length(w);
            let new_len = if len >= col { len - 1 } else { len };
            if new_len >= 1 {
                new_row += 1;
            }
        }
        Some(Square::new(new_col, new_row))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn psi_342_shape() {
        // Subscript order psi:3,4,2 means a_3 = 3, a_2 = 4, a_1 = 2.
        let b = Board::from_paper_order(&[3, 4, 2]);
        assert_eq!(b.row_count(), 9);
        assert_eq!(b.row_lengths(), &[1, 1, 2, 2, 2, 2, 3, 3, 3]);
        assert_eq!(b.square_count(), 19);
        assert_eq!(b.column_length(1), 9);
        assert_eq!(b.column_length(2), 7);
        assert_eq!(b.column_length(3), 3);
        assert_eq!(b.spec_string(), "psi:3,4,2");
        assert_eq!(b.canonical_key(), "2,4,3");
    }

    #[test]
    fn stirling_shape() {
        let b = Board::stirling(5);
        assert_eq!(b.row_lengths(), &[1, 2, 3, 4, 5]);
        assert_eq!(b.square_count(), 15);
        assert!(b.is_staircase());
        assert_eq!(b.staircase_n(), Some(5));
        assert_eq!(b.spec_string(), "stirling:5");
    }

    #[test]
    fn empty_board() {
        let b = Board::new(&[]);
        assert_eq!(b.row_count(), 0);
        assert_eq!(b.square_count(), 0);
        assert_eq!(b.squares(), vec![]);
        assert_eq!(b.durfee_size(), 0);
        assert_eq!(b.canonical_key(), "");
    }

    #[test]
    fn squares_canonical_order() {
        let b = Board::stirling(2);
        assert_eq!(b.squares(), vec![Square::new(1, 1), Square::new(1, 2), Square::new(2, 2)]);
        for (i, sq) in b.squares().into_iter().enumerate() {
            assert_eq!(b.square_index(sq), Some(i));
            assert_eq!(b.square_at(i), sq);
        }
    }

    #[test]
    fn square_membership() {
        let b = Board::from_paper_order(&[3, 4, 2]);
        assert!(b.contains(Square::new(1, 1)));
        assert!(b.contains(Square::new(3, 9)));
        assert!(!b.contains(Square::new(2, 1)));
        assert!(!b.contains(Square::new(3, 6)));
        assert!(!b.contains(Square::new(4, 9)));
        let total: u32 = (1..=3).map(|c| b.column_length(c)).sum();
        assert_eq!(total as u64, b.square_count());
    }

    #[test]
    fn attacks_examples() {
        assert!(!Square::new(1, 1).attacks(Square::new(2, 2)));
        assert!(Square::new(1, 2).attacks(Square::new(2, 2)));
        assert!(Square::new(1, 2).attacks(Square::new(1, 5)));
        // Irreflexive by definition.
        assert!(!Square::new(1, 2).attacks(Square::new(1, 2)));
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(Board::stirling(5).durfee_size(), 3);
        assert_eq!(Board::stirling(1).durfee_size(), 1);
        for n in 1..=8u32 {
            assert_eq!(Board::stirling(2 * n).durfee_size(), n, "staircase {}", 2 * n);
            assert_eq!(Board::stirling(2 * n - 1).durfee_size(), n);
        }
        // 3 columns x 4 rows rectangle: the whole 3x3 top block fits.
        assert_eq!(Board::from_paper_order(&[4, 0, 0]).durfee_size(), 3);
    }

    #[test]
    fn durfee_matches_direct_scan() {
        // Independent oracle: try every d and every column window directly.
        let boards = [
            Board::stirling(6),
            Board::from_paper_order(&[3, 4, 2]),
            Board::from_paper_order(&[4, 0, 0]),
            Board::from_paper_order(&[2, 1]),
            Board::new(&[]),
            Board::from_paper_order(&[1, 0, 3]),
        ];
        for b in boards {
            let n = b.n() as u32;
            let p = b.row_count();
            let mut best = 0;
            for d in 1..=n.min(p) {
                let mut fits = false;
                for c0 in 1..=(n.saturating_sub(d - 1)) {
                    for r0 in 1..=(p.saturating_sub(d - 1)) {
                        let mut all = true;
                        'block: for c in c0..c0 + d {
                            for r in r0..r0 + d {
                                if !b.contains(Square::new(c, r)) {
                                    all = false;
                                    break 'block;
                                }
                            }
                        }
                        if all {
                            fits = true;
                        }
                    }
                }
                if fits {
                    best = d;
                }
            }
            assert_eq!(b.durfee_size(), best, "board {}", b.spec_string());
        }
    }

    #[test]
    fn parse_spec_round_trips() {
        for spec in ["stirling:5", "psi:3,4,2", "psi:4,0,0", "stirling:0"] {
            let b = Board::parse_spec(spec).unwrap();
            assert_eq!(b.spec_string(), spec);
        }
        assert!(Board::parse_spec("psi:").is_err());
        assert!(Board::parse_spec("psi:1,x").is_err());
        assert!(Board::parse_spec("stirling:-1").is_err());
        assert!(Board::parse_spec("chess:3").is_err());
    }

    #[test]
    fn vd_hypotheses() {
        assert!(Board::from_paper_order(&[3, 4, 2]).meets_vd_hypotheses());
        assert!(Board::from_paper_order(&[2, 1]).meets_vd_hypotheses());
        assert!(Board::from_paper_order(&[3, 1, 1]).meets_vd_hypotheses());
        assert!(!Board::from_paper_order(&[4, 0, 0]).meets_vd_hypotheses());
        assert!(!Board::stirling(3).meets_vd_hypotheses());
        assert!(Board::stirling(1).meets_vd_hypotheses());
        assert!(!Board::new(&[]).meets_vd_hypotheses());
    }

    #[test]
    fn delete_row_col_top_left() {
        // Deleting the top row and first column of psi:3,4,2 leaves psi:2,4.
        let b = Board::from_paper_order(&[3, 4, 2]);
        let l = b.delete_row_col(9, 1);
        assert_eq!(l, Board::from_paper_order(&[2, 4]));
        // Rows 1 and 2 had length 1 and vanish with column 1, so row 3 becomes row 1.
        assert_eq!(b.relabel_after_delete(9, 1, Square::new(2, 3)), Some(Square::new(1, 1)));
        assert_eq!(b.relabel_after_delete(9, 1, Square::new(3, 8)), Some(Square::new(2, 6)));
        assert_eq!(b.relabel_after_delete(9, 1, Square::new(1, 4)), None);
        assert_eq!(b.relabel_after_delete(9, 1, Square::new(3, 9)), None);
    }

    #[test]
    fn relabel_is_a_bijection_onto_the_smaller_board() {
        let boards = [Board::from_paper_order(&[3, 4, 2]), Board::stirling(5), Board::from_paper_order(&[1, 0, 3])];
        for b in boards {
            for sq in b.squares() {
                let small = b.delete_row_col(sq.row, sq.col);
                let mut images: Vec<Square> = b
                    .squares()
                    .into_iter()
                    .filter_map(|s| b.relabel_after_delete(sq.row, sq.col, s))
                    .collect();
                images.sort();
                images.dedup();
                assert_eq!(images.len() as u64, small.square_count());
                assert!(images.iter().all(|&s| small.contains(s)));
            }
        }
    }

    #[test]
    fn trailing_zero_multiplicities() {
        // psi:0,2 declares a column that no row reaches.
        let b = Board::from_paper_order(&[0, 2]);
        assert_eq!(b.n(), 2);
        assert_eq!(b.row_lengths(), &[1, 1]);
        assert_eq!(b.column_length(2), 0);
        assert_eq!(b.squares(), vec![Square::new(1, 1), Square::new(1, 2)]);
        assert!(!b.contains(Square::new(2, 2)));
        for (i, sq) in b.squares().into_iter().enumerate() {
            assert_eq!(b.square_at(i), sq);
            assert_eq!(b.square_index(sq), Some(i));
        }
        assert_eq!(b.spec_string(), "psi:0,2");
    }

    #[test]
    fn column_lengths_vs_row_lengths() {
        let b = Board::from_paper_order(&[1, 0, 3]);
        let by_cols: u64 = (1..=b.n() as u32).map(|c| b.column_length(c) as u64).sum();
        let by_rows: u64 = b.row_lengths().iter().map(|&l| l as u64).sum();
        assert_eq!(by_cols, by_rows);
        assert_eq!(by_cols, b.square_count());
    }
}
