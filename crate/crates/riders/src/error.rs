use num_bigint::BigInt;

use crate::counting::CountResult;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The components of a move must be coprime; a rider's moveset is
    /// generated by basic moves only.
    #[error("move ({c},{d}) must be a basic move: components must be coprime")]
    NonBasicMove { c: i64, d: i64 },

    /// (0,0) does not define a direction.
    #[error("move (0,0) is not a valid move")]
    ZeroMove,

    /// Boards must have at least one cell in each dimension.
    #[error("board dimensions must be positive, got {m}x{n}")]
    EmptyBoard { m: u64, n: u64 },

    /// A raw (c,d,m,n) tuple that does not satisfy the line-size
    /// hypothesis floor(n/d) <= floor(m/c). `orient` always produces a
    /// satisfying orientation.
    #[error(
        "line-size hypothesis violated for move ({c},{d}) on {m}x{n}: \
         floor(n/d) > floor(m/c); use orient() to normalize first"
    )]
    HypothesisViolated { c: u64, d: u64, m: u64, n: u64 },

    /// Interpolation requires pairwise distinct abscissas.
    #[error("duplicate abscissa {x} in interpolation sample set")]
    DuplicateAbscissa { x: BigInt },

    /// Interpolation requires at least one point.
    #[error("interpolation requires at least one sample point")]
    EmptySampleSet,

    /// The semibishop closed form is stated for m >= n.
    #[error("semibishop closed form requires m >= n, got {m}x{n}; transpose the board")]
    TransposeRequired { m: u64, n: u64 },

    /// Two moves in a moveset resolved to the same slope.
    #[error("duplicate slope ({c},{d}) in moveset")]
    DuplicateSlope { c: i64, d: i64 },

    /// A moveset must contain at least one move.
    #[error("moveset must be nonempty")]
    EmptyMoveset,

    /// Cross-method check failed: the per-method values are the diagnostic.
    #[error("{0}")]
    MethodDisagreement(DisagreementReport),

    /// The brute-force search space exceeds the configured budget.
    #[error("oracle budget exceeded: C({cells},{q}) = {required} > budget {budget}")]
    BudgetExceeded {
        cells: u64,
        q: u64,
        required: BigInt,
        budget: BigInt,
    },

    /// A holdback sample disagreed with the interpolated constituent.
    #[error(
        "quasipolynomial regime not reached: residue {residue} verification sample \
         at n={n} gave {actual}, constituent predicts {predicted}; raise valid_from"
    )]
    RegimeNotReached {
        residue: u64,
        n: u64,
        predicted: BigInt,
        actual: BigInt,
    },

    /// Evaluation requested below the fitted window.
    #[error("n={n} is below the quasipolynomial's valid_from={valid_from}")]
    BelowValidFrom { n: u64, valid_from: u64 },
}

/// Full diagnostic for a method disagreement: the inputs and every
/// per-method value, so a failure is reproducible from the message alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisagreementReport {
    pub q: u64,
    pub move_c: u64,
    pub move_d: u64,
    pub board_m: u64,
    pub board_n: u64,
    pub results: Vec<CountResult>,
}

impl std::fmt::Display for DisagreementReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "counting methods disagree for q={} move ({},{}) on {}x{}:",
            self.q, self.move_c, self.move_d, self.board_m, self.board_n
        )?;
        for r in &self.results {
            write!(f, " {}={}", r.method, r.value)?;
        }
        Ok(())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
