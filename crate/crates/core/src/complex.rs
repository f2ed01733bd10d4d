//! The simplicial complex of non-attacking rook placements on a board.
//!
//! Faces are kept as `u128` bitsets over the board's canonical square order,
//! so a board must have at most 128 squares for enumeration-level work (the
//! closed-form f-vector has no such bound).  Links and deletions are cheap
//! views: a board reference plus a set of removed squares.  A link removes
//! every square attacked by the face, so one view shape covers both.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bitset;
use crate::board::{Board, Square};
use crate::error::{Error, Result};

/// A set of pairwise non-attacking squares on some board, kept sorted in the
/// canonical (column, row) order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    squares: Vec<Square>,
}

impl Placement {
    pub fn empty() -> Placement {
        Placement { squares: Vec::new() }
    }

    /// Validate against a board: all squares on it, pairwise non-attacking.
    pub fn new(board: &Board, mut squares: Vec<Square>) -> Result<Placement> {
        squares.sort();
        squares.dedup();
        for &sq in &squares {
            if !board.contains(sq) {
                return Err(Error::InvalidPlacement(alloc::format!("square {sq} is off the board")));
            }
        }
        for i in 0..squares.len() {
            for j in i + 1..squares.len() {
                if squares[i].attacks(squares[j]) {
                    return Err(Error::InvalidPlacement(alloc::format!(
                        "squares {} and {} attack each other",
                        squares[i], squares[j]
                    )));
                }
            }
        }
        Ok(Placement { squares })
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    /// Dimension as a face: one less than the number of rooks.
    pub fn dim(&self) -> i64 {
        self.squares.len() as i64 - 1
    }

    pub(crate) fn to_bits(&self, board: &Board) -> Result<u128> {
        let mut bits = 0u128;
        for &sq in &self.squares {
            let idx = board
                .square_index(sq)
                .ok_or_else(|| Error::InvalidPlacement(alloc::format!("square {sq} is off the board")))?;
            bits |= bitset::bit(idx);
        }
        Ok(bits)
    }

    pub(crate) fn from_bits(board: &Board, bits: u128) -> Placement {
        Placement { squares: bitset::iter(bits).map(|i| board.square_at(i)).collect() }
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, sq) in self.squares.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{sq}")?;
        }
        write!(f, "}}")
    }
}

/// True iff every square is on the board and no two attack each other.
pub fn is_face(board: &Board, squares: &[Square]) -> bool {
    squares.iter().all(|&s| board.contains(s))
        && squares.iter().enumerate().all(|(i, &s)| squares[i + 1..].iter().all(|&t| !s.attacks(t)))
}

/// All faces of a complex, grouped by cardinality (level `c` holds the faces
/// with `c` rooks; level 0 is the empty face).  Levels are sorted by bitset
/// value, so positions within a level are a stable face index.
#[derive(Clone, Debug)]
pub struct FacesByCard {
    levels: Vec<Vec<u128>>,
}

impl FacesByCard {
    pub fn levels(&self) -> &[Vec<u128>] {
        &self.levels
    }

    pub fn level(&self, card: usize) -> &[u128] {
        self.levels.get(card).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn max_card(&self) -> usize {
        self.levels.len() - 1
    }

    /// Dimension of the complex: `max_card - 1` (`-1` for the complex `{∅}`).
    pub fn dim(&self) -> i64 {
        self.levels.len() as i64 - 2
    }

    pub fn total(&self) -> u64 {
        self.levels.iter().map(|l| l.len() as u64).sum()
    }

    pub fn counts(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.len() as u64).collect()
    }

    pub fn index_of(&self, card: usize, bits: u128) -> Option<usize> {
        self.level(card).binary_search(&bits).ok()
    }
}

/// A sub-complex view: the rook complex on the board's squares minus a removed
/// set.  Deletion removes the face's squares; link removes everything its
/// squares attack as well.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexView<'a> {
    board: &'a Board,
    removed: u128,
}

impl<'a> ComplexView<'a> {
    /// The whole complex of a board.  Fails on boards with more than 128
    /// squares, which have no bitset representation.
    pub fn full(board: &'a Board) -> Result<ComplexView<'a>> {
        board.require_masks()?;
        Ok(ComplexView { board, removed: 0 })
    }

    pub fn board(&self) -> &'a Board {
        self.board
    }

    pub(crate) fn with_removed(board: &'a Board, removed: u128) -> Result<ComplexView<'a>> {
        board.require_masks()?;
        Ok(ComplexView { board, removed })
    }

    pub(crate) fn allowed_bits(&self) -> u128 {
        self.board.full_mask() & !self.removed
    }

    /// The vertices of the view: every allowed square is a face on its own.
    pub fn vertices(&self) -> Vec<Square> {
        bitset::iter(self.allowed_bits()).map(|i| self.board.square_at(i)).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.allowed_bits().count_ones() as usize
    }

    pub(crate) fn is_face_bits(&self, bits: u128) -> bool {
        if bits & !self.allowed_bits() != 0 {
            return false;
        }
        bitset::iter(bits).all(|i| self.board.attack_mask(i) & bits == 0)
    }

    pub fn is_face(&self, p: &Placement) -> bool {
        match p.to_bits(self.board) {
            Ok(bits) => self.is_face_bits(bits),
            Err(_) => false,
        }
    }

    /// Squares attacked by (or belonging to) a face.
    fn closed_attack_bits(&self, bits: u128) -> u128 {
        bitset::iter(bits).fold(bits, |acc, i| acc | self.board.attack_mask(i))
    }

    pub(crate) fn deletion_bits(&self, bits: u128) -> ComplexView<'a> {
        ComplexView { board: self.board, removed: self.removed | bits }
    }

    pub(crate) fn link_bits(&self, bits: u128) -> ComplexView<'a> {
        ComplexView { board: self.board, removed: self.removed | self.closed_attack_bits(bits) }
    }

    /// The deletion `del(σ)`: faces disjoint from `σ`.
    pub fn deletion(&self, face: &Placement) -> Result<ComplexView<'a>> {
        let bits = face.to_bits(self.board)?;
        if !self.is_face_bits(bits) {
            return Err(Error::NotAFace);
        }
        Ok(self.deletion_bits(bits))
    }

    /// The link `lk(σ)`: faces `τ` disjoint from `σ` with `τ ∪ σ` a face.  For
    /// rook complexes this is the complex on the squares not attacked by `σ`.
    pub fn link(&self, face: &Placement) -> Result<ComplexView<'a>> {
        let bits = face.to_bits(self.board)?;
        if !self.is_face_bits(bits) {
            return Err(Error::NotAFace);
        }
        Ok(self.link_bits(bits))
    }

    /// Every face, grouped by cardinality, each level sorted.  Faces are grown
    /// by appending squares above the face's maximum, so each face is produced
    /// exactly once.
    pub fn enumerate(&self, max_faces: Option<u64>) -> Result<FacesByCard> {
        let allowed: Vec<usize> = bitset::iter(self.allowed_bits()).collect();
        let mut levels: Vec<Vec<u128>> = alloc::vec![alloc::vec![0u128]];
        let mut total: u64 = 1;
        loop {
            let last = levels.last().unwrap();
            let mut next: Vec<u128> = Vec::new();
            for &face in last {
                let start = match bitset::max_bit(face) {
                    None => 0,
                    Some(m) => match allowed.binary_search(&(m + 1)) {
                        Ok(pos) => pos,
                        Err(pos) => pos,
                    },
                };
                for &s in &allowed[start..] {
                    if self.board.attack_mask(s) & face == 0 {
                        next.push(face | bitset::bit(s));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            total += next.len() as u64;
            if let Some(cap) = max_faces {
                if total > cap {
                    return Err(Error::ResourceLimit(alloc::format!(
                        "complex exceeds the face ceiling of {cap}"
                    )));
                }
            }
            next.sort_unstable();
            levels.push(next);
        }
        Ok(FacesByCard { levels })
    }

    pub(crate) fn facets_bits(&self) -> Vec<u128> {
        let allowed = self.allowed_bits();
        let faces = self.enumerate(None).expect("view construction checked the square bound");
        let mut out = Vec::new();
        for level in faces.levels() {
            for &face in level {
                if allowed & !self.closed_attack_bits(face) == 0 {
                    out.push(face);
                }
            }
        }
        out
    }

    /// The maximal placements: no allowed square can be added.
    pub fn facets(&self) -> Vec<Placement> {
        self.facets_bits().into_iter().map(|bits| Placement::from_bits(self.board, bits)).collect()
    }

    /// Whether the whole view is a single simplex (every pair of allowed
    /// squares is non-attacking); covers `{∅}` as the empty simplex.
    pub fn is_simplex(&self) -> bool {
        let allowed = self.allowed_bits();
        bitset::iter(allowed).all(|i| self.board.attack_mask(i) & allowed == 0)
    }

    pub fn f_vector_enumerated(&self) -> Result<FVector> {
        let faces = self.enumerate(None)?;
        Ok(FVector { counts: faces.counts().into_iter().map(BigUint::from).collect() })
    }
}

/// Face counts by dimension; entry 0 is `f_{-1} = 1` for the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<BigUint>,
}

impl FVector {
    /// `counts[c]` = number of faces with `c` rooks.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn dim(&self) -> i64 {
        self.counts.len() as i64 - 2
    }

    /// `f_d`, zero outside the complex's range.
    pub fn f(&self, d: i64) -> BigUint {
        let idx = d + 1;
        if idx < 0 || idx as usize >= self.counts.len() {
            BigUint::zero()
        } else {
            self.counts[idx as usize].clone()
        }
    }

    pub fn total_faces(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Reduced Euler characteristic `-1 + f_0 - f_1 + ...`.
    pub fn reduced_euler(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (c, count) in self.counts.iter().enumerate() {
            let term = BigInt::from(count.clone());
            // cardinality c has dimension c - 1; sign (-1)^(c-1) = -(-1)^c
            if c % 2 == 0 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        acc
    }
}

/// Closed-form f-vector: the number of ways to place `i + 1` rooks is a sum
/// over column subsets `s_0 > s_1 > ... > s_i` of products `l(s_j) - j`.
/// Processing columns right to left turns that into a DP over the number of
/// columns already chosen.  Works for boards of any size.
pub fn f_vector_formula(board: &Board) -> FVector {
    let n = board.n();
    let mut dp: Vec<BigUint> = alloc::vec![BigUint::zero(); n + 1];
    dp[0] = BigUint::one();
    let mut max_reached = 0usize;
    for col in (1..=n as u32).rev() {
        let len = board.column_length(col) as u64;
        let hi = max_reached.min(n - 1);
        for t in (0..=hi).rev() {
            if dp[t].is_zero() {
                continue;
            }
            // Choosing this column as the (t+1)-st from the right blocks t rows.
            let factor = len.saturating_sub(t as u64);
            if factor > 0 {
                let add = &dp[t] * BigUint::from(factor);
                dp[t + 1] += add;
                max_reached = max_reached.max(t + 1);
            }
        }
    }
    let mut counts = alloc::vec![BigUint::one()];
    for item in dp.iter().skip(1) {
        counts.push(item.clone());
    }
    while counts.len() > 1 && counts.last().map(BigUint::is_zero).unwrap_or(false) {
        counts.pop();
    }
    FVector { counts }
}

/// Convenience: exhaustive f-vector of a whole board.
pub fn f_vector_enumerated(board: &Board) -> Result<FVector> {
    ComplexView::full(board)?.f_vector_enumerated()
}

/// Reduced Euler characteristic from the closed-form f-vector.
pub fn reduced_euler(board: &Board) -> BigInt {
    f_vector_formula(board).reduced_euler()
}

/// All faces of a board's complex, grouped by cardinality ascending.
pub fn enumerate_faces(board: &Board) -> Result<Vec<Placement>> {
    let view = ComplexView::full(board)?;
    let faces = view.enumerate(None)?;
    let mut out = Vec::with_capacity(faces.total() as usize);
    for level in faces.levels() {
        for &bits in level {
            out.push(Placement::from_bits(board, bits));
        }
    }
    Ok(out)
}

/// The maximal placements of a board.
pub fn facets(board: &Board) -> Result<Vec<Placement>> {
    Ok(ComplexView::full(board)?.facets())
}
