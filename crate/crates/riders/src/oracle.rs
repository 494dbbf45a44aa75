//! Ground-truth enumeration of nonattacking configurations by direct
//! placement search. Deliberately shares no geometry with the
//! line-multiset machinery: attacks are decided by a cross-product test
//! on cell differences, and configurations are walked one by one.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::board_lines::Board;
use crate::counting::Moveset;
use crate::error::{Error, Result};

/// A board cell, 1-based in both coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub x: u64,
    pub y: u64,
}

/// Cap on the search-space size C(mn, q) for a brute-force run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_configurations: BigInt,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_configurations: BigInt::from(2_000_000u64),
        }
    }
}

impl OracleBudget {
    pub fn new(max_configurations: BigInt) -> OracleBudget {
        OracleBudget { max_configurations }
    }
}

/// True iff b - a is a nonzero integer multiple of some move in the set.
/// Slopes are tested exactly as supplied: a signed move attacks only
/// along its own slope, so two cells are collinear for (c,d) iff
/// d*dx = c*dy. Coprimality of the move guarantees the multiple is
/// integral whenever the cross product vanishes.
pub fn attacks(a: Cell, b: Cell, moves: &Moveset) -> bool {
    let dx = b.x as i64 - a.x as i64;
    let dy = b.y as i64 - a.y as i64;
    if dx == 0 && dy == 0 {
        return false;
    }
    moves.moves().iter().any(|mv| mv.d() * dx == mv.c() * dy)
}

/// Count q-subsets of cells with no attacking pair, by depth-first
/// enumeration in lexicographic cell order.
pub fn brute_force_count(
    q: u64,
    moves: &Moveset,
    board: &Board,
    budget: &OracleBudget,
) -> Result<BigInt> {
    let cells_total = board.cells();
    let space = subset_count(cells_total, q);
    if space > budget.max_configurations {
        return Err(Error::BudgetExceeded {
            cells: cells_total,
            q,
            required: space,
            budget: budget.max_configurations.clone(),
        });
    }
    let cells: Vec<Cell> = (1..=board.m())
        .flat_map(|x| (1..=board.n()).map(move |y| Cell { x, y }))
        .collect();
    let mut placed: Vec<Cell> = Vec::with_capacity(q as usize);
    let mut total = BigInt::zero();
    place(&cells, 0, q as usize, moves, &mut placed, &mut total);
    Ok(total)
}

fn place(
    cells: &[Cell],
    from: usize,
    remaining: usize,
    moves: &Moveset,
    placed: &mut Vec<Cell>,
    total: &mut BigInt,
) {
    if remaining == 0 {
        *total += BigInt::one();
        return;
    }
    // Leave room for the pieces still to be placed.
    for i in from..=cells.len().saturating_sub(remaining) {
        let candidate = cells[i];
        if placed.iter().any(|&p| attacks(p, candidate, moves)) {
            continue;
        }
        placed.push(candidate);
        place(cells, i + 1, remaining - 1, moves, placed, total);
        placed.pop();
    }
}

/// C(n, q) computed locally so the budget check stays self-contained.
fn subset_count(n: u64, q: u64) -> BigInt {
    if q > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..q.min(n - q) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
