//! Purity, vertex decomposability, and constructive shedding certificates.
//!
//! A complex is vertex decomposable when it is a simplex, or pure with some
//! vertex whose deletion and link are both vertex decomposable.  For boards
//! with `a_1 >= 1`, `a_n >= n`, `a_i >= i-1` the rook complex admits a
//! shedding order that walks down the first column; each link is the rook
//! complex of a smaller board (delete the vertex's row and column, renumber),
//! and each deletion stays on the same board with one more square removed.
//! Rectangular two-column sub-boards reached through links with no length-1
//! rows break the first-column pattern partway down, so the builder falls
//! back to trying other vertices there; the verifier re-checks everything
//! independently, so the fallback never weakens the certificate.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset;
use crate::board::{Board, Square};
use crate::complex::ComplexView;
use crate::error::{Error, Result};

/// Facets all share one cardinality.  A complex with at most one facet
/// (including `{∅}`) is trivially pure.
pub fn is_pure(view: &ComplexView) -> bool {
    let facets = view.facets_bits();
    facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
}

/// Dimension of a pure complex's facets, `None` when impure.
pub fn pure_dim(view: &ComplexView) -> Option<i64> {
    let facets = view.facets_bits();
    let first = facets.first().map(|f| f.count_ones()).unwrap_or(0);
    if facets.iter().all(|f| f.count_ones() == first) {
        Some(first as i64 - 1)
    } else {
        None
    }
}

#[derive(Clone, Debug)]
pub struct VdOptions {
    /// Refuse complexes with more vertices than this.
    pub max_vertices: usize,
}

impl Default for VdOptions {
    fn default() -> Self {
        VdOptions { max_vertices: 16 }
    }
}

/// Exhaustive, memoized test of the recursive definition: a simplex, or pure
/// with a vertex whose deletion and link are both vertex decomposable.
pub fn vd_bruteforce(view: &ComplexView, options: &VdOptions) -> Result<bool> {
    let vertices = view.vertex_count();
    if vertices > options.max_vertices {
        return Err(Error::ResourceLimit(alloc::format!(
            "vertex-decomposability search limited to {} vertices, complex has {vertices}",
            options.max_vertices
        )));
    }
    let mut memo: BTreeMap<Vec<u128>, bool> = BTreeMap::new();
    Ok(vd_search(view, &mut memo))
}

fn vd_search(view: &ComplexView, memo: &mut BTreeMap<Vec<u128>, bool>) -> bool {
    let facets = view.facets_bits();
    if facets.len() <= 1 {
        return true; // a simplex, possibly {∅}
    }
    if let Some(&known) = memo.get(&facets) {
        return known;
    }
    let card = facets[0].count_ones();
    let answer = if facets.iter().any(|f| f.count_ones() != card) {
        false
    } else {
        bitset::iter(view.allowed_bits()).any(|v| {
            let bit = bitset::bit(v);
            vd_search(&view.deletion_bits(bit), memo) && vd_search(&view.link_bits(bit), memo)
        })
    };
    memo.insert(facets, answer);
    answer
}

/// A recorded shedding recursion.  Every node names its complex as a board
/// plus removed squares; a `Node` claims its shedding vertex and carries the
/// link (on the smaller, renumbered board) and the deletion (same board, one
/// more removed square).  Leaves are simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VdCertificate {
    Leaf {
        board: Board,
        removed: Vec<Square>,
    },
    Node {
        board: Board,
        removed: Vec<Square>,
        shedding: Square,
        link: Box<VdCertificate>,
        deletion: Box<VdCertificate>,
    },
}

impl VdCertificate {
    pub fn board(&self) -> &Board {
        match self {
            VdCertificate::Leaf { board, .. } => board,
            VdCertificate::Node { board, .. } => board,
        }
    }

    pub fn removed(&self) -> &[Square] {
        match self {
            VdCertificate::Leaf { removed, .. } => removed,
            VdCertificate::Node { removed, .. } => removed,
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            VdCertificate::Leaf { .. } => 1,
            VdCertificate::Node { link, deletion, .. } => 1 + link.node_count() + deletion.node_count(),
        }
    }
}

/// Build a shedding certificate for a board satisfying the purity hypotheses.
pub fn vd_certificate(board: &Board) -> Result<VdCertificate> {
    if !board.meets_vd_hypotheses() {
        return Err(Error::HypothesesUnmet(alloc::format!(
            "board {} does not satisfy a_1 >= 1, a_n >= n, a_i >= i-1",
            board.spec_string()
        )));
    }
    board.require_masks()?;
    let mut failed: BTreeSet<(String, Vec<Square>)> = BTreeSet::new();
    build(board, 0, &mut failed).ok_or_else(|| {
        Error::CertificateNotFound(alloc::format!("no shedding order found for {}", board.spec_string()))
    })
}

fn build(board: &Board, removed: u128, failed: &mut BTreeSet<(String, Vec<Square>)>) -> Option<VdCertificate> {
    let view = ComplexView::with_removed(board, removed).ok()?;
    let removed_squares: Vec<Square> = bitset::iter(removed).map(|i| board.square_at(i)).collect();
    if view.is_simplex() {
        return Some(VdCertificate::Leaf { board: board.clone(), removed: removed_squares });
    }
    let key = (board.canonical_key(), removed_squares.clone());
    if failed.contains(&key) {
        return None;
    }
    if !is_pure(&view) {
        failed.insert(key);
        return None;
    }
    // Preferred vertex: the topmost remaining square of the leftmost nonempty
    // column, which realizes the first-column shedding order; fall back to the
    // other vertices when a descendant turns impure.
    let allowed = view.allowed_bits();
    let mut candidates: Vec<usize> = Vec::new();
    'outer: for col in 1..=board.n() as u32 {
        let in_col = allowed & board.col_mask(col);
        if let Some(top) = bitset::max_bit(in_col) {
            candidates.push(top);
            break 'outer;
        }
    }
    for v in bitset::iter(allowed) {
        if Some(&v) != candidates.first() {
            candidates.push(v);
        }
    }
    for v in candidates {
        let sq = board.square_at(v);
        let link = build_link(board, removed, sq, failed);
        let Some(link) = link else { continue };
        let Some(deletion) = build(board, removed | bitset::bit(v), failed) else { continue };
        return Some(VdCertificate::Node {
            board: board.clone(),
            removed: removed_squares,
            shedding: sq,
            link: Box::new(link),
            deletion: Box::new(deletion),
        });
    }
    failed.insert((board.canonical_key(), bitset::iter(removed).map(|i| board.square_at(i)).collect()));
    None
}

fn build_link(
    board: &Board,
    removed: u128,
    shedding: Square,
    failed: &mut BTreeSet<(String, Vec<Square>)>,
) -> Option<VdCertificate> {
    let small = board.delete_row_col(shedding.row, shedding.col);
    let mut small_removed = 0u128;
    for i in bitset::iter(removed) {
        if let Some(mapped) = board.relabel_after_delete(shedding.row, shedding.col, board.square_at(i)) {
            small_removed |= bitset::bit(small.square_index(mapped).expect("relabel lands on the smaller board"));
        }
    }
    build(&small, small_removed, failed)
}

/// Outcome of re-checking a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertCheck {
    pub ok: bool,
    /// Path (e.g. `root/del/link`) and reason of the first failure.
    pub failure: Option<String>,
}

impl CertCheck {
    fn good() -> CertCheck {
        CertCheck { ok: true, failure: None }
    }

    fn bad(path: &str, reason: &str) -> CertCheck {
        CertCheck { ok: false, failure: Some(alloc::format!("{path}: {reason}")) }
    }
}

/// Independently re-check a certificate: leaves are simplices, internal nodes
/// are pure, shedding vertices exist, the deletion child names the same board
/// with exactly the shedding square added to the removed set, and the link
/// child's complex equals the actual link face-for-face under the row/column
/// relabeling.
pub fn verify_certificate(cert: &VdCertificate) -> CertCheck {
    verify_at(cert, "root")
}

fn removed_mask(board: &Board, removed: &[Square]) -> core::result::Result<u128, String> {
    let mut mask = 0u128;
    for &sq in removed {
        match board.square_index(sq) {
            Some(i) => mask |= bitset::bit(i),
            None => return Err(alloc::format!("removed square {sq} is off the board")),
        }
    }
    Ok(mask)
}

fn verify_at(cert: &VdCertificate, path: &str) -> CertCheck {
    let board = cert.board();
    if board.require_masks().is_err() {
        return CertCheck::bad(path, "board too large to verify");
    }
    let removed = match removed_mask(board, cert.removed()) {
        Ok(mask) => mask,
        Err(msg) => return CertCheck::bad(path, &msg),
    };
    let view = ComplexView::with_removed(board, removed).expect("masks checked");
    match cert {
        VdCertificate::Leaf { .. } => {
            if view.is_simplex() {
                CertCheck::good()
            } else {
                CertCheck::bad(path, "leaf complex is not a simplex")
            }
        }
        VdCertificate::Node { shedding, link, deletion, .. } => {
            if view.is_simplex() {
                // A simplex never needs a shedding vertex; flag it so builders
                // cannot hide vacuous nodes.
                return CertCheck::bad(path, "simplex written as an internal node");
            }
            if !is_pure(&view) {
                return CertCheck::bad(path, "internal node is not pure");
            }
            let Some(v) = board.square_index(*shedding) else {
                return CertCheck::bad(path, "shedding square is off the board");
            };
            if removed & bitset::bit(v) != 0 {
                return CertCheck::bad(path, "shedding square was already removed");
            }

            // Deletion child: same board, removed set grown by the vertex.
            if deletion.board() != board {
                return CertCheck::bad(path, "deletion child names a different board");
            }
            let expect_removed = removed | bitset::bit(v);
            match removed_mask(board, deletion.removed()) {
                Ok(mask) if mask == expect_removed => {}
                _ => return CertCheck::bad(path, "deletion child removed-set mismatch"),
            }

            // Link child: the renumbered smaller board, faces equal to the
            // actual link's faces.
            let small = board.delete_row_col(shedding.row, shedding.col);
            if *link.board() != small {
                return CertCheck::bad(path, "link child names the wrong board");
            }
            if small.require_masks().is_err() {
                return CertCheck::bad(path, "link board too large to verify");
            }
            let link_removed = match removed_mask(&small, link.removed()) {
                Ok(mask) => mask,
                Err(msg) => return CertCheck::bad(path, &msg),
            };
            let actual = view.link_bits(bitset::bit(v));
            let actual_faces = match actual.enumerate(None) {
                Ok(f) => f,
                Err(_) => return CertCheck::bad(path, "link enumeration failed"),
            };
            let child_view = ComplexView::with_removed(&small, link_removed).expect("masks checked");
            let child_faces = match child_view.enumerate(None) {
                Ok(f) => f,
                Err(_) => return CertCheck::bad(path, "link child enumeration failed"),
            };
            if actual_faces.counts() != child_faces.counts() {
                return CertCheck::bad(path, "link child has wrong face counts");
            }
            for level in actual_faces.levels() {
                for &bits in level {
                    let mut mapped = 0u128;
                    for i in bitset::iter(bits) {
                        match board
                            .relabel_after_delete(shedding.row, shedding.col, board.square_at(i))
                            .and_then(|sq| small.square_index(sq))
                        {
                            Some(j) => mapped |= bitset::bit(j),
                            None => return CertCheck::bad(path, "link face does not map to the smaller board"),
                        }
                    }
                    if !child_view.is_face_bits(mapped) {
                        return CertCheck::bad(path, "link face missing from the link child");
                    }
                }
            }

            let sub = verify_at(link, &alloc::format!("{path}/link"));
            if !sub.ok {
                return sub;
            }
            verify_at(deletion, &alloc::format!("{path}/del"))
        }
    }
}

/// Render a certificate as indented text: one node per line with its board
/// spec, removed squares, and shedding square, then the link and deletion
/// subtrees.
pub fn serialize_certificate(cert: &VdCertificate) -> String {
    let mut out = String::new();
    write_node(cert, 0, None, &mut out);
    out
}

fn write_node(cert: &VdCertificate, depth: usize, role: Option<&str>, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    if let Some(role) = role {
        out.push_str(role);
        out.push_str(": ");
    }
    let removed = |squares: &[Square]| -> String {
        let mut s = String::from("[");
        for (i, sq) in squares.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{sq}"));
        }
        s.push(']');
        s
    };
    match cert {
        VdCertificate::Leaf { board, removed: rem } => {
            out.push_str(&alloc::format!("leaf board={} removed={}\n", board.spec_string(), removed(rem)));
        }
        VdCertificate::Node { board, removed: rem, shedding, link, deletion } => {
            out.push_str(&alloc::format!(
                "node board={} removed={} shed={}\n",
                board.spec_string(),
                removed(rem),
                shedding
            ));
            write_node(link, depth + 1, Some("link"), out);
            write_node(deletion, depth + 1, Some("del"), out);
        }
    }
}
