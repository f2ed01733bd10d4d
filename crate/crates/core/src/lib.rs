//! Simplicial complexes of non-attacking rook placements on Ferrers boards.
//!
//! A Ferrers board is a left-justified board with nondecreasing row lengths
//! (bottom to top).  The placements of pairwise non-attacking rooks on such a
//! board form a simplicial complex; a placement of `k` rooks is a face of
//! dimension `k - 1`.  This crate builds those complexes and computes:
//!
//! * face and facet enumeration, f-vectors (by closed formula and by exhaustive
//!   enumeration), reduced Euler characteristics, links and deletions
//!   ([`complex`]);
//! * Stirling numbers, set partitions, the rook/partition correspondence on
//!   staircase boards, intertwined-partition counts, and facet generating
//!   functions ([`partitions`]);
//! * a discrete Morse matching on the face poset of the staircase (Stirling)
//!   complex, built fiberwise from two poset maps and verified acyclic
//!   ([`morse`]);
//! * exact reduced integer homology via sparse Smith normal form, including
//!   torsion ([`homology`]);
//! * purity checks, vertex-decomposability search, and constructive
//!   shedding-order certificates ([`decompose`]).
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats, and the command
//! line live in the companion `ferrers-cli` crate.
//!
//! ```
//! use ferrers_core::{complex, homology, Board};
//!
//! let board = Board::parse_spec("psi:3,1,1")?;
//! let f = complex::f_vector_formula(&board);
//! assert_eq!(f.reduced_euler(), 1.into());
//!
//! let hom = homology::betti(&board, &homology::HomologyOptions::default())?;
//! assert_eq!(hom.betti, vec![0, 0, 1]); // one top-dimensional sphere
//! # Ok::<(), ferrers_core::Error>(())
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod board;
pub mod complex;
pub mod decompose;
pub mod error;
pub mod homology;
pub mod morse;
pub mod partitions;

pub(crate) mod bitset;

pub use board::{Board, Square};
pub use complex::{ComplexView, FVector, FacesByCard, Placement};
pub use error::{Error, Result};
