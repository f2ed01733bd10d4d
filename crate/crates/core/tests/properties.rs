//! Property suites over randomized boards, partitions, and matrices.

use ferrers_core::board::{Board, Square};
use ferrers_core::complex::{self, ComplexView};
use ferrers_core::homology;
use ferrers_core::partitions::{self, SetPartition};

use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

/// Multiplicity vectors whose boards have at most 20 squares.
fn small_board() -> impl Strategy<Value = Board> {
    prop::collection::vec(0u32..=4, 0..=5).prop_map(|mult| {
        let mut mult = mult;
        loop {
            let squares: u64 = mult
                .iter()
                .enumerate()
                .map(|(i, &a)| (i as u64 + 1) * a as u64)
                .sum();
            if squares <= 20 {
                return Board::new(&mult);
            }
            // Trim from the long rows down until the board is small enough.
            for a in mult.iter_mut().rev() {
                if *a > 0 {
                    *a -= 1;
                    break;
                }
            }
        }
    })
}

fn partition_of(m: u32) -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(0u8..=7, m as usize).prop_map(move |seed| {
        let mut rgs = vec![0u32; m as usize];
        let mut max = 0u32;
        for i in 1..m as usize {
            rgs[i] = seed[i] as u32 % (max + 2);
            max = max.max(rgs[i]);
        }
        let blocks = (0..=max)
            .map(|b| {
                (0..m)
                    .filter(|&x| rgs[x as usize] == b)
                    .map(|x| x + 1)
                    .collect::<Vec<u32>>()
            })
            .collect();
        SetPartition::new(m, blocks).expect("restricted growth strings are valid partitions")
    })
}

proptest! {
    #[test]
    fn formula_and_enumeration_agree(board in small_board()) {
        let by_formula = complex::f_vector_formula(&board);
        let by_enumeration = complex::f_vector_enumerated(&board).unwrap();
        prop_assert_eq!(by_formula, by_enumeration);
    }

    #[test]
    fn column_and_row_sums_count_squares(board in small_board()) {
        let by_cols: u64 = (1..=board.n() as u32).map(|c| board.column_length(c) as u64).sum();
        let by_rows: u64 = board.row_lengths().iter().map(|&l| l as u64).sum();
        prop_assert_eq!(by_cols, board.square_count());
        prop_assert_eq!(by_rows, board.square_count());
        // Column lengths nonincreasing, row lengths nondecreasing.
        prop_assert!((1..board.n() as u32).all(|c| board.column_length(c) >= board.column_length(c + 1)));
        prop_assert!(board.row_lengths().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn attacks_is_symmetric_and_irreflexive(c1 in 1u32..9, r1 in 1u32..9, c2 in 1u32..9, r2 in 1u32..9) {
        let (s, t) = (Square::new(c1, r1), Square::new(c2, r2));
        prop_assert_eq!(s.attacks(t), t.attacks(s));
        prop_assert!(!s.attacks(s));
    }

    #[test]
    fn facets_are_exactly_the_maximal_faces(board in small_board()) {
        // Definition-level oracle: a face is a facet iff no proper superset
        // among the enumerated faces contains it.
        let view = ComplexView::full(&board).unwrap();
        let faces = complex::enumerate_faces(&board).unwrap();
        let facets = view.facets();
        for face in &faces {
            let has_proper_superset = faces.iter().any(|other| {
                other.len() > face.len()
                    && face.squares().iter().all(|s| other.squares().contains(s))
            });
            prop_assert_eq!(!has_proper_superset, facets.contains(face));
        }
    }

    #[test]
    fn rook_partition_round_trip(p in (1u32..=8).prop_flat_map(partition_of)) {
        let rooks = partitions::partition_to_rooks(&p).unwrap();
        let board = Board::stirling(p.ground_size() - 1);
        let back = partitions::rook_to_partition(&board, &rooks).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn euler_matches_homology(board in small_board()) {
        let opts = homology::HomologyOptions::default();
        let result = homology::betti(&board, &opts).unwrap();
        prop_assert_eq!(result.reduced_euler(), complex::reduced_euler(&board));
    }

    #[test]
    fn snf_factors_and_rank(rows in 1usize..7, cols in 1usize..7, seed in prop::collection::vec(-9i64..=9, 36)) {
        let entries: Vec<(u32, u32, i64)> = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .enumerate()
            .filter_map(|(k, (i, j))| {
                let v = seed[k % seed.len()].wrapping_add(k as i64 % 3);
                if v != 0 { Some((i as u32, j as u32, v)) } else { None }
            })
            .collect();
        let snf = homology::smith_normal_form(rows, cols, &entries).unwrap();
        prop_assert_eq!(snf.rank, snf.factors.len());
        prop_assert!(snf.factors.iter().all(|f| !f.is_zero()));
        // Divisibility chain.
        prop_assert!(snf.factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        // Rank oracle: fraction-free elimination over the rationals.
        prop_assert_eq!(snf.rank, rational_rank(rows, cols, &entries));
    }
}

/// Independent rank oracle via exact fraction-free elimination.
#[allow(clippy::needless_range_loop)]
fn rational_rank(rows: usize, cols: usize, entries: &[(u32, u32, i64)]) -> usize {
    let mut m = vec![vec![0i128; cols]; rows];
    for &(i, j, v) in entries {
        m[i as usize][j as usize] = v as i128;
    }
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..rows).find(|&i| m[i][col] != 0) else { continue };
        m.swap(row, pivot);
        for i in 0..rows {
            if i != row && m[i][col] != 0 {
                let (a, b) = (m[i][col], m[row][col]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * b - m[row][j] * a;
                }
                // Keep entries in range: divide the row by its gcd.
                let mut g = 0i128;
                for j in 0..cols {
                    g = gcd(g, m[i][j].abs());
                }
                if g > 1 {
                    for j in 0..cols {
                        m[i][j] /= g;
                    }
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn stirling_face_counts_are_stirling_numbers() {
    for n in 0..=8u32 {
        let board = Board::stirling(n);
        let faces = ComplexView::full(&board).unwrap().enumerate(None).unwrap();
        for (k, &count) in faces.counts().iter().enumerate() {
            let expected = partitions::stirling2(n as usize + 1, n as usize + 1 - k);
            assert_eq!(BigUint::from(count), expected, "n={n} rooks={k}");
        }
    }
}

#[test]
fn wedge_boards_have_top_concentrated_homology() {
    for mult in [vec![1u32, 2], vec![2, 3], vec![1, 1, 3], vec![2, 4, 3]] {
        let board = Board::new(&mult);
        assert!(board.meets_vd_hypotheses(), "{:?}", mult);
        let hom = homology::betti(&board, &homology::HomologyOptions::default()).unwrap();
        let wedge = homology::wedge_count_vd(&board).unwrap();
        let n = board.n();
        for (d, &b) in hom.betti.iter().enumerate() {
            if d == n - 1 {
                assert_eq!(BigUint::from(b), wedge, "{:?}", mult);
            } else {
                assert_eq!(b, 0, "{:?} dim {d}", mult);
            }
        }
        assert!(hom.torsion_free());
    }
}
