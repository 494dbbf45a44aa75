//! Shared scenario builders for the benchmarks: a spread of (move,
//! board, pieces) triples covering axis, diagonal and knight-like
//! slopes at sizes where the route costs start to separate.

use riders::{Board, Move};

pub fn mv(c: i64, d: i64) -> Move {
    Move::new(c, d).expect("benchmark moves are basic")
}

pub fn board(m: u64, n: u64) -> Board {
    Board::new(m, n).expect("benchmark boards are nonempty")
}

/// (label, move, board, pieces) triples benchmarked per counting route.
pub fn counting_cases() -> Vec<(&'static str, Move, Board, u64)> {
    vec![
        ("semibishop_12x12_q4", mv(1, 1), board(12, 12), 4),
        ("slope12_16x16_q6", mv(1, 2), board(16, 16), 6),
        ("slope23_24x24_q8", mv(2, 3), board(24, 24), 8),
    ]
}
