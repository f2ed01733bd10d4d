//! A discrete Morse matching on the face poset of the staircase complex.
//!
//! Squares of the staircase of size `n` are totally ordered by `Q`: first by
//! diagonal `j - i`, ties broken by where the coordinate sum sits in the
//! zigzag order `P` (even sums ride the chain `2n < 2 < 2(n-1) < 4 < ...`,
//! odd sums a companion chain built by the alternating recurrence
//! `k_{i+1} = k_i + (-1)^{n+i+1} * 2i` starting at `2*ceil(n/2) + 1`).
//!
//! The matching is assembled fiberwise.  A first poset map sends a placement
//! to the `Q`-least diagonal square whose row and column are free of
//! off-diagonal rooks; its fibers are matched perfectly by toggling that
//! diagonal square.  Placements with no such diagonal square form the set
//! gamma; a second map sends those to the `Q`-least off-diagonal square
//! `(i,j)` such that some rook sits in row `i` and some rook sits in column
//! `j` (the pair that keeps both indices covered when `(i,j)` is toggled).
//! Witnesses only grow with the placement, so this map is order-reversing.
//! Its fibers are matched by toggling the fiber's square where that is legal
//! — the square is present, or addable — and both endpoints carry the same
//! label.  The fiber rounds are iterated to a fixed point: once a face's
//! would-be partner is claimed, the face is relabeled among the surviving
//! candidate squares.  Everything left unmatched is critical, and acyclicity
//! is checked, not assumed.

use alloc::vec::Vec;

use crate::bitset;
use crate::board::{Board, Square};
use crate::complex::{ComplexView, FacesByCard, Placement};
use crate::error::{Error, Result};

/// An element of one of the square chains, or the adjoined maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QLabel {
    Square(Square),
    Top,
}

/// Diagonal indices in zigzag order: `n, 1, n-1, 2, ...` ending at `ceil(n/2)`.
fn zigzag(n: u32) -> Vec<u32> {
    let (mut lo, mut hi) = (1, n);
    let mut take_hi = true;
    let mut out = Vec::with_capacity(n as usize);
    while lo <= hi {
        if take_hi {
            out.push(hi);
            hi -= 1;
        } else {
            out.push(lo);
            lo += 1;
        }
        take_hi = !take_hi;
    }
    out
}

/// The chain of odd coordinate sums in `{2,...,2n}`, bottom to top.
fn odd_chain(n: u32) -> Vec<i64> {
    if n < 2 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n as usize - 1);
    let mut k = 2 * n.div_ceil(2) as i64 + 1;
    out.push(k);
    for i in 1..n as i64 - 1 {
        let step = 2 * i * if (n as i64 + i + 1) % 2 == 0 { 1 } else { -1 };
        k += step;
        out.push(k);
    }
    out
}

/// Rank of each coordinate sum `2..=2n` in the parity-split order `P`.
fn sum_ranks(n: u32) -> Vec<u32> {
    let mut rank = alloc::vec![0u32; 2 * n as usize + 1];
    for (r, d) in zigzag(n).into_iter().enumerate() {
        rank[2 * d as usize] = r as u32;
    }
    let odds = odd_chain(n);
    debug_assert_eq!(odds.len(), n.saturating_sub(1) as usize);
    for (r, s) in odds.into_iter().enumerate() {
        debug_assert!((3..2 * n as i64).contains(&s) && s % 2 == 1, "odd chain out of range");
        rank[s as usize] = r as u32;
    }
    rank
}

fn q_sorted(n: u32, diagonal: bool) -> Vec<Square> {
    let ranks = sum_ranks(n);
    let mut squares = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if (i == j) == diagonal {
                squares.push(Square::new(i, j));
            }
        }
    }
    squares.sort_by_key(|sq| (sq.row - sq.col, ranks[(sq.col + sq.row) as usize]));
    squares
}

/// The diagonal squares in ascending `Q` order, then the adjoined maximum.
pub fn q1_chain(n: u32) -> Vec<QLabel> {
    let mut out: Vec<QLabel> = q_sorted(n, true).into_iter().map(QLabel::Square).collect();
    out.push(QLabel::Top);
    out
}

/// The off-diagonal squares in ascending `Q` order, then the adjoined maximum.
pub fn q2_chain(n: u32) -> Vec<QLabel> {
    let mut out: Vec<QLabel> = q_sorted(n, false).into_iter().map(QLabel::Square).collect();
    out.push(QLabel::Top);
    out
}

/// Precomputed per-size context for the two poset maps.
struct StairCtx {
    board: Board,
    /// Diagonal squares in chain order with their blocking masks: the squares
    /// in the same row or column, which must all be absent.
    diag: Vec<(usize, u128)>,
    /// Off-diagonal squares in chain order with (bit, row mask, col mask,
    /// attack mask).
    offdiag: Vec<(usize, u128, u128, u128)>,
}

const TOP: u16 = u16::MAX;
const NOT_GAMMA: u16 = u16::MAX - 1;
const UNMATCHED: u32 = u32::MAX;

impl StairCtx {
    fn new(n: u32) -> Result<StairCtx> {
        let board = Board::stirling(n);
        board.require_masks()?;
        let diag = q_sorted(n, true)
            .into_iter()
            .map(|sq| {
                let idx = board.square_index(sq).unwrap();
                (idx, board.attack_mask(idx))
            })
            .collect();
        let offdiag = q_sorted(n, false)
            .into_iter()
            .map(|sq| {
                let idx = board.square_index(sq).unwrap();
                (idx, board.row_mask(sq.col), board.col_mask(sq.row), board.attack_mask(idx))
            })
            .collect();
        Ok(StairCtx { board, diag, offdiag })
    }

    /// Chain position of the first qualifying diagonal square, or `TOP`.
    fn phi(&self, face: u128) -> u16 {
        for (pos, &(_, blocked)) in self.diag.iter().enumerate() {
            if face & blocked == 0 {
                return pos as u16;
            }
        }
        TOP
    }

    /// Chain position of the first off-diagonal square whose row and column
    /// are both witnessed by rooks of the face, or `TOP`.  Only meaningful on
    /// faces with `phi == TOP`; witnesses grow with the face, so the map is
    /// order-reversing.
    fn psi(&self, face: u128) -> u16 {
        for (pos, &(_, row_entered, col_exited, _)) in self.offdiag.iter().enumerate() {
            if face & row_entered != 0 && face & col_exited != 0 {
                return pos as u16;
            }
        }
        TOP
    }
}

/// A partial matching on the face poset, with the fiber labels that produced
/// it and the resulting critical cells.
pub struct MorseMatching {
    n: u32,
    board: Board,
    faces: FacesByCard,
    /// Flat face id = offsets[card] + position within the level.
    offsets: Vec<usize>,
    /// Flat id of the partner, or `UNMATCHED`.
    partner: Vec<u32>,
    /// Position in the diagonal chain, or `TOP`.
    phi: Vec<u16>,
    /// Position in the off-diagonal chain, `TOP`, or `NOT_GAMMA`.
    psi: Vec<u16>,
    critical: Vec<u32>,
}

impl MorseMatching {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn faces(&self) -> &FacesByCard {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.partner.len()
    }

    fn flat_id(&self, card: usize, bits: u128) -> Option<usize> {
        self.faces.index_of(card, bits).map(|pos| self.offsets[card] + pos)
    }

    fn bits_of(&self, flat: usize) -> (usize, u128) {
        let card = match self.offsets.binary_search(&flat) {
            Ok(c) => c,
            Err(c) => c - 1,
        };
        (card, self.faces.level(card)[flat - self.offsets[card]])
    }

    pub fn partner_of(&self, p: &Placement) -> Result<Option<Placement>> {
        let bits = p
            .squares()
            .iter()
            .map(|&s| self.board.square_index(s).map(bitset::bit).ok_or(Error::NotAFace))
            .try_fold(0u128, |acc, b| b.map(|b| acc | b))?;
        let flat = self.flat_id(bits.count_ones() as usize, bits).ok_or(Error::NotAFace)?;
        Ok(match self.partner[flat] {
            UNMATCHED => None,
            q => {
                let (_, qbits) = self.bits_of(q as usize);
                Some(Placement::from_bits(&self.board, qbits))
            }
        })
    }

    /// Critical cells as placements, ascending by dimension.
    pub fn critical_cells(&self) -> Vec<Placement> {
        self.critical.iter().map(|&f| Placement::from_bits(&self.board, self.bits_of(f as usize).1)).collect()
    }

    /// Number of critical cells per dimension (index = dimension, from 0).
    /// The built matchings always match the empty face; a hand-assembled
    /// matching may leave it critical, which shows up via
    /// [`MorseMatching::empty_face_critical`] rather than here.
    pub fn critical_counts_by_dim(&self) -> Vec<u64> {
        let top_dim = self.faces.dim().max(0) as usize;
        let mut out = alloc::vec![0u64; top_dim + 1];
        for &f in &self.critical {
            let (card, _) = self.bits_of(f as usize);
            if card >= 1 {
                out[card - 1] += 1;
            }
        }
        out
    }

    pub fn empty_face_critical(&self) -> bool {
        self.partner.first().is_some_and(|&p| p == UNMATCHED)
    }

    pub fn matched_pair_count(&self) -> u64 {
        self.partner.iter().filter(|&&p| p != UNMATCHED).count() as u64 / 2
    }

    pub fn gamma_size(&self) -> u64 {
        self.psi.iter().filter(|&&v| v != NOT_GAMMA).count() as u64
    }

    /// Unordered pairs of critical cells differing by a single square: the
    /// places where the matching could conceivably be extended.
    pub fn critical_adjacent_pairs(&self) -> u64 {
        let mut count = 0;
        for &f in &self.critical {
            let (card, bits) = self.bits_of(f as usize);
            if card == 0 {
                continue;
            }
            for pos in bitset::iter(bits) {
                let sub = bits & !bitset::bit(pos);
                if let Some(sub_flat) = self.flat_id(card - 1, sub) {
                    if self.partner[sub_flat] == UNMATCHED {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// The fiber label of a face under the diagonal map.
    pub fn phi_label(&self, p: &Placement) -> Result<QLabel> {
        let chain = q1_chain(self.n);
        let bits = p.to_bits(&self.board)?;
        let flat = self.flat_id(bits.count_ones() as usize, bits).ok_or(Error::NotAFace)?;
        let pos = (self.phi[flat] as usize).min(chain.len() - 1);
        Ok(chain[pos])
    }

    /// Acyclicity of the matching: orient matched edges up and the rest down;
    /// directed paths alternate between consecutive ranks, so it suffices to
    /// find cycles in the per-rank digraph on upward-matched faces.
    pub fn verify_acyclic(&self) -> bool {
        for card in 0..self.faces.max_card() {
            let level = self.faces.level(card);
            let mut matched_up: Vec<(u128, u128)> = Vec::new();
            for (pos, &bits) in level.iter().enumerate() {
                let flat = self.offsets[card] + pos;
                let q = self.partner[flat];
                if q != UNMATCHED {
                    let (qcard, qbits) = self.bits_of(q as usize);
                    if qcard == card + 1 {
                        matched_up.push((bits, qbits));
                    }
                }
            }
            if matched_up.is_empty() {
                continue;
            }
            matched_up.sort_unstable();
            let index_of = |bits: u128| matched_up.binary_search_by_key(&bits, |&(b, _)| b).ok();
            // Edges: x -> x' when x' != x is a facet of u(x) and x' is also
            // matched upward.
            let mut adj: Vec<Vec<u32>> = alloc::vec![Vec::new(); matched_up.len()];
            for (v, &(bits, up)) in matched_up.iter().enumerate() {
                for pos in bitset::iter(up) {
                    let sub = up & !bitset::bit(pos);
                    if sub != bits {
                        if let Some(w) = index_of(sub) {
                            adj[v].push(w as u32);
                        }
                    }
                }
            }
            // Iterative three-color DFS.
            let mut color = alloc::vec![0u8; matched_up.len()];
            for start in 0..matched_up.len() {
                if color[start] != 0 {
                    continue;
                }
                let mut stack: Vec<(u32, usize)> = alloc::vec![(start as u32, 0)];
                color[start] = 1;
                while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                    if *next < adj[v as usize].len() {
                        let w = adj[v as usize][*next];
                        *next += 1;
                        match color[w as usize] {
                            0 => {
                                color[w as usize] = 1;
                                stack.push((w, 0));
                            }
                            1 => return false,
                            _ => {}
                        }
                    } else {
                        color[v as usize] = 2;
                        stack.pop();
                    }
                }
            }
        }
        true
    }

    /// Build a matching from explicit pairs (mainly to exercise the
    /// acyclicity checker on adversarial inputs).
    pub fn from_pairs(board: &Board, pairs: &[(Placement, Placement)]) -> Result<MorseMatching> {
        let n = board.staircase_n().ok_or(Error::NotStaircase)?;
        let faces = ComplexView::full(board)?.enumerate(None)?;
        let mut offsets = Vec::with_capacity(faces.levels().len());
        let mut acc = 0usize;
        for level in faces.levels() {
            offsets.push(acc);
            acc += level.len();
        }
        let mut partner = alloc::vec![UNMATCHED; acc];
        let flat = |faces: &FacesByCard, offs: &[usize], p: &Placement| -> Result<usize> {
            let bits = p.to_bits(board)?;
            let card = bits.count_ones() as usize;
            faces.index_of(card, bits).map(|pos| offs[card] + pos).ok_or(Error::NotAFace)
        };
        for (a, b) in pairs {
            let (fa, fb) = (flat(&faces, &offsets, a)?, flat(&faces, &offsets, b)?);
            if a.len().abs_diff(b.len()) != 1 {
                return Err(Error::InvalidPlacement("matched pair must differ by one square".into()));
            }
            let (low, high) = if a.len() < b.len() { (a, b) } else { (b, a) };
            let low_bits = low.to_bits(board)?;
            let high_bits = high.to_bits(board)?;
            if low_bits & !high_bits != 0 {
                return Err(Error::InvalidPlacement("matched pair must be nested".into()));
            }
            if partner[fa] != UNMATCHED || partner[fb] != UNMATCHED {
                return Err(Error::InvalidPlacement("face matched twice".into()));
            }
            partner[fa] = fb as u32;
            partner[fb] = fa as u32;
        }
        let critical =
            (0..acc).filter(|&f| partner[f] == UNMATCHED).map(|f| f as u32).collect();
        Ok(MorseMatching {
            n,
            board: board.clone(),
            faces,
            offsets,
            partner,
            phi: alloc::vec![0; acc],
            psi: alloc::vec![NOT_GAMMA; acc],
            critical,
        })
    }
}

fn build_matching(n: u32, with_gamma_stage: bool) -> Result<MorseMatching> {
    if n < 1 {
        return Err(Error::HypothesesUnmet("the matching needs a staircase of size >= 1".into()));
    }
    let ctx = StairCtx::new(n)?;
    let faces = ComplexView::full(&ctx.board)?.enumerate(None)?;
    let mut offsets = Vec::with_capacity(faces.levels().len());
    let mut acc = 0usize;
    for level in faces.levels() {
        offsets.push(acc);
        acc += level.len();
    }
    let flat = |card: usize, bits: u128| -> usize {
        offsets[card] + faces.index_of(card, bits).expect("face enumerated")
    };

    let mut phi = alloc::vec![TOP; acc];
    let mut psi = alloc::vec![NOT_GAMMA; acc];
    let mut partner = alloc::vec![UNMATCHED; acc];

    // Stage one: perfect matchings on the diagonal-map fibers.
    let mut gamma: Vec<(usize, u128)> = Vec::new();
    for (card, level) in faces.levels().iter().enumerate() {
        for &bits in level {
            let id = flat(card, bits);
            let label = ctx.phi(bits);
            phi[id] = label;
            if label == TOP {
                gamma.push((id, bits));
            } else {
                let diag_bit = bitset::bit(ctx.diag[label as usize].0);
                let other = bits ^ diag_bit;
                let other_id = flat(other.count_ones() as usize, other);
                partner[id] = other_id as u32;
            }
        }
    }
    debug_assert!(gamma.iter().all(|&(id, _)| partner[id] == UNMATCHED));

    // The formal off-diagonal labels, kept for reporting and the public map.
    for &(id, bits) in &gamma {
        psi[id] = ctx.psi(bits);
    }

    // Stage two: fiber matchings on gamma, run in rounds.  Within a round a
    // candidate square only counts while its toggle partner is unmatched, and
    // a pair forms when both endpoints carry the same (restricted) label; a
    // face whose fiber partner was claimed elsewhere is relabeled in the next
    // round.  One round is the plain fiber matching; iterating it to a fixed
    // point is what realizes the expected critical-cell counts.  Witnesses
    // guarantee toggle partners stay inside gamma, and acyclicity is verified
    // rather than assumed.
    if with_gamma_stage {
        loop {
            let round_label = |bits: u128, partner: &[u32]| -> u16 {
                for (pos, &(bit_idx, row_entered, col_exited, attack)) in ctx.offdiag.iter().enumerate() {
                    if bits & row_entered == 0 || bits & col_exited == 0 {
                        continue;
                    }
                    let sq_bit = bitset::bit(bit_idx);
                    let present = bits & sq_bit != 0;
                    if !present && bits & attack != 0 {
                        continue;
                    }
                    let other = bits ^ sq_bit;
                    let other_id = flat(other.count_ones() as usize, other);
                    if partner[other_id] == UNMATCHED {
                        return pos as u16;
                    }
                }
                TOP
            };
            let labels: Vec<(usize, u128, u16)> = gamma
                .iter()
                .filter(|&&(id, _)| partner[id] == UNMATCHED)
                .map(|&(id, bits)| (id, bits, round_label(bits, &partner)))
                .collect();
            let label_of = |id: usize, labels: &[(usize, u128, u16)]| -> Option<u16> {
                labels.binary_search_by_key(&id, |&(i, _, _)| i).ok().map(|p| labels[p].2)
            };
            let mut progress = false;
            for &(id, bits, label) in &labels {
                if label == TOP || partner[id] != UNMATCHED {
                    continue;
                }
                let sq_bit = bitset::bit(ctx.offdiag[label as usize].0);
                if bits & sq_bit != 0 {
                    continue; // pairs form from the smaller endpoint
                }
                let upper = bits | sq_bit;
                let upper_id = flat(upper.count_ones() as usize, upper);
                debug_assert_eq!(phi[upper_id], TOP, "gamma is upward closed");
                if partner[upper_id] == UNMATCHED && label_of(upper_id, &labels) == Some(label) {
                    partner[id] = upper_id as u32;
                    partner[upper_id] = id as u32;
                    progress = true;
                }
            }
            if !progress {
                break;
            }
        }
    }

    let critical = (0..acc).filter(|&f| partner[f] == UNMATCHED).map(|f| f as u32).collect();
    Ok(MorseMatching { n, board: ctx.board, faces, offsets, partner, phi, psi, critical })
}

/// Stage one only: the perfect fiber matchings of the diagonal map, leaving
/// all of gamma untouched (critical).
pub fn q1_matching(n: u32) -> Result<MorseMatching> {
    build_matching(n, false)
}

/// The full patchwork matching: stage one plus the fiber matchings on gamma.
pub fn full_matching(n: u32) -> Result<MorseMatching> {
    build_matching(n, true)
}

/// The label of a placement under the diagonal poset map.
pub fn phi(n: u32, placement: &Placement) -> Result<QLabel> {
    let ctx = StairCtx::new(n)?;
    let bits = placement.to_bits(&ctx.board)?;
    let view = ComplexView::full(&ctx.board)?;
    if !view.is_face_bits(bits) {
        return Err(Error::NotAFace);
    }
    let pos = ctx.phi(bits);
    Ok(q1_chain(n)[(pos as usize).min(ctx.diag.len())])
}

/// The label of a gamma placement under the off-diagonal poset map.
pub fn psi(n: u32, placement: &Placement) -> Result<QLabel> {
    let ctx = StairCtx::new(n)?;
    let bits = placement.to_bits(&ctx.board)?;
    let view = ComplexView::full(&ctx.board)?;
    if !view.is_face_bits(bits) {
        return Err(Error::NotAFace);
    }
    if ctx.phi(bits) != TOP {
        return Err(Error::NotInGamma);
    }
    let pos = ctx.psi(bits);
    Ok(q2_chain(n)[(pos as usize).min(ctx.offdiag.len())])
}

/// Membership in gamma: every index's row or column holds an off-diagonal rook.
pub fn in_gamma(n: u32, placement: &Placement) -> Result<bool> {
    let ctx = StairCtx::new(n)?;
    let bits = placement.to_bits(&ctx.board)?;
    Ok(ctx.phi(bits) == TOP)
}

/// Summary of the matching's critical cells and what they imply.
#[derive(Clone, Debug)]
pub struct CriticalSummary {
    pub n: u32,
    /// Critical cells per dimension (index = dimension).
    pub counts_by_dim: Vec<u64>,
    pub acyclic: bool,
    pub contractible: bool,
    pub min_critical_dim: Option<i64>,
    /// Whether every critical cell of minimal dimension is a facet, which
    /// lets those cells split off as a wedge of spheres.
    pub min_dim_all_facets: bool,
    /// Number of spheres in that wedge when the facet condition holds.
    pub sphere_count: Option<u64>,
    pub durfee: u32,
    pub gamma_size: u64,
    pub matched_pairs: u64,
    /// Critical pairs one square apart; zero means the matching is maximal.
    pub critical_adjacent_pairs: u64,
}

pub fn critical_summary(n: u32) -> Result<(MorseMatching, CriticalSummary)> {
    let matching = full_matching(n)?;
    let board = matching.board().clone();
    let view = ComplexView::full(&board)?;
    let counts = matching.critical_counts_by_dim();
    let cells = matching.critical_cells();
    let min_critical_dim = cells.iter().map(Placement::dim).min();
    let min_dim_all_facets = match min_critical_dim {
        None => false,
        Some(d) => {
            let facets = view.facets();
            cells.iter().filter(|c| c.dim() == d).all(|c| facets.contains(c))
        }
    };
    let sphere_count = match (min_critical_dim, min_dim_all_facets) {
        (Some(d), true) => Some(counts[d as usize]),
        _ => None,
    };
    let summary = CriticalSummary {
        n,
        acyclic: matching.verify_acyclic(),
        contractible: cells.is_empty(),
        min_critical_dim,
        min_dim_all_facets,
        sphere_count,
        durfee: board.durfee_size(),
        gamma_size: matching.gamma_size(),
        matched_pairs: matching.matched_pair_count(),
        critical_adjacent_pairs: matching.critical_adjacent_pairs(),
        counts_by_dim: counts,
    };
    Ok((matching, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sq(c: u32, r: u32) -> Square {
        Square::new(c, r)
    }

    fn chain_squares(chain: &[QLabel]) -> Vec<Square> {
        chain
            .iter()
            .filter_map(|l| match l {
                QLabel::Square(s) => Some(*s),
                QLabel::Top => None,
            })
            .collect()
    }

    fn pl(n: u32, squares: &[(u32, u32)]) -> Placement {
        let b = Board::stirling(n);
        Placement::new(&b, squares.iter().map(|&(c, r)| sq(c, r)).collect()).unwrap()
    }

    #[test]
    fn q1_chain_examples() {
        assert_eq!(
            chain_squares(&q1_chain(5)),
            vec![sq(5, 5), sq(1, 1), sq(4, 4), sq(2, 2), sq(3, 3)]
        );
        assert_eq!(chain_squares(&q1_chain(4)), vec![sq(4, 4), sq(1, 1), sq(3, 3), sq(2, 2)]);
        assert_eq!(chain_squares(&q1_chain(1)), vec![sq(1, 1)]);
        assert_eq!(*q1_chain(1).last().unwrap(), QLabel::Top);
    }

    #[test]
    fn q2_chain_examples() {
        assert_eq!(
            chain_squares(&q2_chain(4)),
            vec![sq(2, 3), sq(3, 4), sq(1, 2), sq(2, 4), sq(1, 3), sq(1, 4)]
        );
        assert_eq!(
            chain_squares(&q2_chain(5)),
            vec![
                sq(3, 4),
                sq(2, 3),
                sq(4, 5),
                sq(1, 2),
                sq(3, 5),
                sq(1, 3),
                sq(2, 4),
                sq(2, 5),
                sq(1, 4),
                sq(1, 5)
            ]
        );
        assert_eq!(chain_squares(&q2_chain(2)), vec![sq(1, 2)]);
        assert_eq!(chain_squares(&q2_chain(1)), vec![]);
    }

    #[test]
    fn full_q_order_matches_size_five_figure() {
        // The labels 1..15 of the staircase of size five.
        let ranks = sum_ranks(5);
        let mut squares = Vec::new();
        for i in 1..=5u32 {
            for j in i..=5 {
                squares.push(sq(i, j));
            }
        }
        squares.sort_by_key(|s| (s.row - s.col, ranks[(s.col + s.row) as usize]));
        assert_eq!(
            squares,
            vec![
                sq(5, 5),
                sq(1, 1),
                sq(4, 4),
                sq(2, 2),
                sq(3, 3),
                sq(3, 4),
                sq(2, 3),
                sq(4, 5),
                sq(1, 2),
                sq(3, 5),
                sq(1, 3),
                sq(2, 4),
                sq(2, 5),
                sq(1, 4),
                sq(1, 5)
            ]
        );
    }

    #[test]
    fn chains_partition_the_board() {
        for n in 1..=12u32 {
            let d = chain_squares(&q1_chain(n));
            let o = chain_squares(&q2_chain(n));
            assert_eq!(d.len() as u32, n);
            assert_eq!((d.len() + o.len()) as u64, Board::stirling(n).square_count());
            if n >= 2 {
                let start = o[0];
                assert_eq!(start, sq(n.div_ceil(2), n.div_ceil(2) + 1));
            }
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(5, &pl(5, &[])).unwrap(), QLabel::Square(sq(5, 5)));
        assert_eq!(phi(3, &pl(3, &[])).unwrap(), QLabel::Square(sq(3, 3)));
        assert_eq!(phi(5, &pl(5, &[(1, 5)])).unwrap(), QLabel::Square(sq(4, 4)));
        assert_eq!(phi(4, &pl(4, &[(1, 3), (2, 4)])).unwrap(), QLabel::Top);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(4, &pl(4, &[(1, 2), (2, 3), (3, 4)])).unwrap(), QLabel::Square(sq(2, 3)));
        assert_eq!(psi(4, &pl(4, &[(1, 2), (3, 4)])).unwrap(), QLabel::Square(sq(2, 3)));
        assert_eq!(psi(4, &pl(4, &[(1, 3), (2, 4)])).unwrap(), QLabel::Top);
        // Placements outside gamma are rejected.
        assert_eq!(psi(4, &pl(4, &[(1, 2)])), Err(Error::NotInGamma));
    }

    #[test]
    fn gamma_membership() {
        assert!(in_gamma(2, &pl(2, &[(1, 2)])).unwrap());
        assert!(!in_gamma(2, &pl(2, &[(1, 1)])).unwrap());
        assert!(in_gamma(3, &pl(3, &[(1, 2), (2, 3)])).unwrap());
        // Direct statement of the membership test: every index has a rook in
        // its row or column.
        for n in 1..=5u32 {
            let b = Board::stirling(n);
            let faces = crate::complex::enumerate_faces(&b).unwrap();
            for f in faces {
                let covered = (1..=n).all(|i| {
                    f.squares().iter().any(|s| (s.col == i || s.row == i) && s.col != s.row)
                });
                assert_eq!(in_gamma(n, &f).unwrap(), covered, "n={n} face {f}");
            }
        }
    }

    #[test]
    fn stage_one_matches_small_case() {
        let m = q1_matching(2).unwrap();
        let b = Board::stirling(2);
        let empty = Placement::empty();
        let d22 = Placement::new(&b, vec![sq(2, 2)]).unwrap();
        let d11 = Placement::new(&b, vec![sq(1, 1)]).unwrap();
        let both = Placement::new(&b, vec![sq(1, 1), sq(2, 2)]).unwrap();
        assert_eq!(m.partner_of(&empty).unwrap(), Some(d22.clone()));
        assert_eq!(m.partner_of(&d22).unwrap(), Some(empty));
        assert_eq!(m.partner_of(&d11).unwrap(), Some(both));
        // Gamma is left untouched by stage one.
        let off = Placement::new(&b, vec![sq(1, 2)]).unwrap();
        assert_eq!(m.partner_of(&off).unwrap(), None);
        assert_eq!(m.gamma_size(), 1);
    }

    #[test]
    fn full_matching_small_cases() {
        let m1 = full_matching(1).unwrap();
        assert!(m1.critical_cells().is_empty());

        let m2 = full_matching(2).unwrap();
        let crit = m2.critical_cells();
        assert_eq!(crit.len(), 1);
        assert_eq!(crit[0], pl(2, &[(1, 2)]));
        assert_eq!(m2.critical_counts_by_dim(), vec![1, 0]);

        let m4 = full_matching(4).unwrap();
        let crit4 = m4.critical_cells();
        assert_eq!(m4.critical_counts_by_dim(), vec![0, 2, 0, 0]);
        assert!(crit4.contains(&pl(4, &[(1, 3), (2, 4)])));
        assert!(crit4.contains(&pl(4, &[(1, 4), (2, 3)])));

        let m6 = full_matching(6).unwrap();
        assert_eq!(m6.critical_counts_by_dim(), vec![0, 0, 6, 15, 0, 0]);
    }

    #[test]
    fn full_matching_needs_the_cascade() {
        // A single fiber round leaves extra critical pairs from size seven on;
        // the iterated rounds land exactly on the known Betti numbers.
        let m7 = full_matching(7).unwrap();
        assert_eq!(m7.critical_counts_by_dim(), vec![0, 0, 0, 58, 8, 0, 0]);
        assert_eq!(m7.critical_adjacent_pairs(), 0);
        assert!(m7.verify_acyclic());
    }

    #[test]
    fn matchings_are_acyclic() {
        for n in 1..=6 {
            let m = full_matching(n).unwrap();
            assert!(m.verify_acyclic(), "n={n}");
            let q1 = q1_matching(n).unwrap();
            assert!(q1.verify_acyclic(), "stage one, n={n}");
        }
    }

    #[test]
    fn matched_pairs_differ_by_one_square() {
        for n in 1..=6u32 {
            let m = full_matching(n).unwrap();
            let b = Board::stirling(n);
            for f in crate::complex::enumerate_faces(&b).unwrap() {
                if let Some(p) = m.partner_of(&f).unwrap() {
                    assert_eq!(f.len().abs_diff(p.len()), 1);
                    let (small, large) = if f.len() < p.len() { (&f, &p) } else { (&p, &f) };
                    assert!(small.squares().iter().all(|s| large.squares().contains(s)));
                    // Symmetry.
                    assert_eq!(m.partner_of(&p).unwrap(), Some(f.clone()));
                }
            }
        }
    }

    #[test]
    fn adversarial_cycle_is_detected() {
        // Match the three vertices of a triangle to its three edges in a
        // rotating pattern; the alternating path loops.
        let b = Board::stirling(3);
        let v = |c, r| Placement::new(&b, vec![sq(c, r)]).unwrap();
        let e = |a: (u32, u32), bb: (u32, u32)| {
            Placement::new(&b, vec![sq(a.0, a.1), sq(bb.0, bb.1)]).unwrap()
        };
        let pairs = vec![
            (v(1, 1), e((1, 1), (2, 2))),
            (v(2, 2), e((2, 2), (3, 3))),
            (v(3, 3), e((1, 1), (3, 3))),
        ];
        let m = MorseMatching::from_pairs(&b, &pairs).unwrap();
        assert!(!m.verify_acyclic());

        // The same pairs minus one leave an acyclic matching.
        let m_ok = MorseMatching::from_pairs(&b, &pairs[..2]).unwrap();
        assert!(m_ok.verify_acyclic());

        // Empty matching is acyclic.
        let m_empty = MorseMatching::from_pairs(&b, &[]).unwrap();
        assert!(m_empty.verify_acyclic());
    }

    #[test]
    fn phi_is_order_preserving_psi_order_reversing() {
        for n in 1..=5u32 {
            let ctx = StairCtx::new(n).unwrap();
            let faces = ComplexView::full(&ctx.board).unwrap().enumerate(None).unwrap();
            let all: Vec<u128> = faces.levels().iter().flatten().copied().collect();
            for &y in &all {
                // Walk all subsets of y.
                let mut x = y;
                loop {
                    assert!(ctx.phi(x) <= ctx.phi(y), "phi order, n={n}");
                    if ctx.phi(x) == TOP && ctx.phi(y) == TOP {
                        assert!(ctx.psi(x) >= ctx.psi(y), "psi order, n={n}");
                    }
                    if x == 0 {
                        break;
                    }
                    x = (x - 1) & y;
                }
            }
        }
    }

    #[test]
    fn matching_exposes_fiber_labels() {
        let m = full_matching(3).unwrap();
        assert_eq!(m.phi_label(&pl(3, &[])).unwrap(), QLabel::Square(sq(3, 3)));
        assert_eq!(m.phi_label(&pl(3, &[(1, 2), (2, 3)])).unwrap(), QLabel::Top);
        assert!(!m.empty_face_critical());
        assert_eq!(m.face_count(), 15);
    }

    #[test]
    fn stage_one_fibers_are_perfect() {
        for n in 1..=5u32 {
            let m = q1_matching(n).unwrap();
            // Everything outside gamma is matched.
            let crit = m.critical_cells();
            for c in &crit {
                assert!(in_gamma(n, c).unwrap(), "n={n}: {c} unmatched outside gamma");
            }
        }
    }

    #[test]
    fn summary_reports_wedges() {
        let (_, s8) = critical_summary(8).unwrap();
        assert_eq!(s8.counts_by_dim, vec![0, 0, 0, 24, 292, 1, 0, 0]);
        assert!(s8.acyclic);
        assert_eq!(s8.min_critical_dim, Some(3));
        assert!(s8.min_dim_all_facets);
        assert_eq!(s8.sphere_count, Some(24));
        assert_eq!(s8.durfee, 4);

        let (_, s1) = critical_summary(1).unwrap();
        assert!(s1.contractible);
        assert_eq!(s1.min_critical_dim, None);

        let (_, s2) = critical_summary(2).unwrap();
        assert_eq!(s2.counts_by_dim, vec![1, 0]);
        assert_eq!(s2.sphere_count, Some(1));
    }

    #[test]
    fn even_staircase_critical_cells_fill_the_durfee_square() {
        for half in 1..=3u32 {
            let n = 2 * half;
            let m = full_matching(n).unwrap();
            let cells = m.critical_cells();
            let d = n / 2;
            let min_dim = d as i64 - 1;
            let at_min: Vec<&Placement> = cells.iter().filter(|c| c.dim() == min_dim).collect();
            let expected: u64 = (1..=d as u64).product();
            assert_eq!(at_min.len() as u64, expected, "n={n}");
            for c in &at_min {
                for s in c.squares() {
                    assert!(s.col <= d && s.row > n - d, "n={n} cell {c} outside the Durfee square");
                }
            }
            assert!(cells.iter().all(|c| c.dim() >= n.div_ceil(2) as i64 - 1));
            assert!(cells.iter().all(|c| c.dim() < n as i64 - 1));
        }
    }
}
