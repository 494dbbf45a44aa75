//! Board and move geometry: move canonicalization, orientation
//! normalization, and the multiset of line sizes for a slope on a
//! rectangular board, computed both by closed form and by direct
//! geometric enumeration.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer as _;

use crate::error::{Error, Result};

/// A basic rider move: a coprime direction (c,d), stored in canonical
/// (reflected) form with both components nonnegative. On a rectangle,
/// lines of slope -d/c are the mirror image of lines of slope d/c, so
/// every line-size computation is insensitive to the reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    c: u64,
    d: u64,
}

impl Move {
    /// Canonicalize a signed move to (|c|,|d|). Components must be
    /// coprime and not both zero.
    pub fn new(c: i64, d: i64) -> Result<Move> {
        if c == 0 && d == 0 {
            return Err(Error::ZeroMove);
        }
        if c.unsigned_abs().gcd(&d.unsigned_abs()) != 1 {
            return Err(Error::NonBasicMove { c, d });
        }
        Ok(Move {
            c: c.unsigned_abs(),
            d: d.unsigned_abs(),
        })
    }

    /// Horizontal step.
    pub fn c(&self) -> u64 {
        self.c
    }

    /// Vertical step.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// The transposed move (d,c).
    pub fn transposed(&self) -> Move {
        Move {
            c: self.d,
            d: self.c,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c, self.d)
    }
}

/// An m x n rectangular board, both dimensions at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Board {
    m: u64,
    n: u64,
}

impl Board {
    pub fn new(m: u64, n: u64) -> Result<Board> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyBoard { m, n });
        }
        Ok(Board { m, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cells(&self) -> u64 {
        self.m * self.n
    }

    pub fn transposed(&self) -> Board {
        Board {
            m: self.n,
            n: self.m,
        }
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// A (move, board) pair normalized so the line-size formula applies:
/// floor(n/d) <= floor(m/c), with c = 0 read as floor(m/0) = infinity,
/// and axis moves normalized so the nonzero component plays the role
/// of d. Caches s = floor(n/d) and nbar = n mod d.
///
/// s = 0 (board shorter than one vertical step in both orientations) is
/// the degenerate regime in which every line is a single cell; the
/// closed-form constructions treat the empty size-0 bucket accordingly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientedInstance {
    c: u64,
    d: u64,
    m: u64,
    n: u64,
    s: u64,
    nbar: u64,
}

impl OrientedInstance {
    /// Build from raw components, checking the orientation hypothesis.
    /// Prefer [`orient`], which always produces a satisfying orientation.
    pub fn new(c: u64, d: u64, m: u64, n: u64) -> Result<OrientedInstance> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyBoard { m, n });
        }
        if d == 0 || c.gcd(&d) != 1 {
            return Err(Error::HypothesisViolated { c, d, m, n });
        }
        let s = n / d;
        let bound = m.checked_div(c).unwrap_or(u64::MAX);
        if s > bound {
            return Err(Error::HypothesisViolated { c, d, m, n });
        }
        Ok(OrientedInstance {
            c,
            d,
            m,
            n,
            s,
            nbar: n - d * s,
        })
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// floor(n/d) in the oriented frame.
    pub fn s(&self) -> u64 {
        self.s
    }

    /// n mod d in the oriented frame.
    pub fn nbar(&self) -> u64 {
        self.nbar
    }

    /// True when s = 0: every line is a single cell.
    pub fn is_degenerate(&self) -> bool {
        self.s == 0
    }
}

/// Normalize a (move, board) pair so the line-size formula applies,
/// exchanging (c,m) with (d,n) if necessary. When both orientations
/// qualify the input orientation is kept.
pub fn orient(mv: &Move, board: &Board) -> OrientedInstance {
    // Axis moves: let the nonzero component play the role of d.
    let (c, d, m, n) = if mv.d == 0 {
        (0, mv.c, board.n, board.m)
    } else {
        (mv.c, mv.d, board.m, board.n)
    };
    let u = n / d;
    let v = m.checked_div(c).unwrap_or(u64::MAX);
    let (c, d, m, n) = if u <= v { (c, d, m, n) } else { (d, c, n, m) };
    let s = n / d;
    OrientedInstance {
        c,
        d,
        m,
        n,
        s,
        nbar: n - d * s,
    }
}

/// Multiset of line sizes, stored as size -> multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineMultiset {
    entries: BTreeMap<u64, u64>,
}

impl LineMultiset {
    /// Build from (size, multiplicity) pairs, merging equal sizes and
    /// dropping zero multiplicities. This is also the entry point for
    /// callers supplying line multisets of non-rectangular boards.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> LineMultiset {
        let mut entries = BTreeMap::new();
        for (size, mult) in pairs {
            if mult == 0 {
                continue;
            }
            assert!(size >= 1, "line sizes must be positive");
            *entries.entry(size).or_insert(0) += mult;
        }
        LineMultiset { entries }
    }

    /// (size, multiplicity) pairs in increasing size order.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&size, &mult)| (size, mult))
    }

    /// Number of lines.
    pub fn num_lines(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Number of cells covered: sum of size * multiplicity. Equals m*n
    /// for any multiset generated from a board.
    pub fn num_cells(&self) -> u64 {
        self.entries.iter().map(|(&size, &mult)| size * mult).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Line-size multiplicities from the closed form:
/// sizes 1 <= l < s each occur 2cd times, size s occurs
/// (d-nbar)(m-cs) + c(nbar+d) times, and size s+1 occurs
/// nbar(m-cs) times. In the degenerate s = 0 regime the size-0 bucket
/// is empty and the remaining bucket degenerates to mn single cells.
pub fn line_multiset_closed(inst: &OrientedInstance) -> LineMultiset {
    let (c, d, m, n, s, nbar) = (inst.c, inst.d, inst.m, inst.n, inst.s, inst.nbar);
    let mut pairs = Vec::new();
    let small = 2 * c * d;
    if small > 0 {
        for l in 1..s {
            pairs.push((l, small));
        }
    }
    if s >= 1 {
        pairs.push((s, (d - nbar) * (m - c * s) + c * (nbar + d)));
    }
    pairs.push((s + 1, nbar * (m - c * s)));
    let lines = LineMultiset::from_pairs(pairs);
    debug_assert_eq!(lines.num_cells(), m * n);
    lines
}

/// Line-size multiplicities by direct enumeration: partition the cells
/// into maximal lines by walking in steps of (c,d) and collect the
/// component sizes. Independent of the closed form and of orientation.
pub fn line_multiset_geometric(mv: &Move, board: &Board) -> LineMultiset {
    let (c, d) = (mv.c, mv.d);
    let (m, n) = (board.m, board.n);
    let mut pairs = Vec::new();
    for x in 1..=m {
        for y in 1..=n {
            // A cell starts a line iff stepping backwards exits the board.
            let has_predecessor = x > c && y > d;
            if has_predecessor {
                continue;
            }
            let forward_x = (m - x).checked_div(c).unwrap_or(u64::MAX);
            let forward_y = (n - y).checked_div(d).unwrap_or(u64::MAX);
            pairs.push((1 + forward_x.min(forward_y), 1));
        }
    }
    LineMultiset::from_pairs(pairs)
}
