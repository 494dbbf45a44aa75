//! Command-line interface for exact nonattacking-rider counting.
//!
//! Exit codes: 0 success, 1 verification sweep found disagreements,
//! 2 input error, 3 method disagreement, 4 unsupported query,
//! 5 quasipolynomial regime failure.

mod output;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use riders::{
    brute_force_count, count, count_all_methods, count_two_pieces, fit_square_board,
    fit_square_board_from, line_multiset_closed, minimal_period, orient, BigInt, Board,
    DisagreementReport, Error, Move, Moveset, OracleBudget, SlopeMove,
};

use output::{csv_table, rational_string, write_rendered, Format, OutputDoc};

const ENV_ORACLE_BUDGET: &str = "RIDER_ORACLE_BUDGET";

const ERRATA_ALPHA2: &str = "alpha(2) closed form evaluated with first-term denominator 3d^2; \
     the d^2 variant contradicts the defining power sum (move (1,1) on 3x3 gives 19, not 55)";
const ERRATA_TWO_PIECE: &str =
    "two-piece count evaluated as (m^2n^2 + (|M|-1)mn - sum alpha(2))/2; \
     subtracting (|M|-1)mn/2 outside the halved bracket contradicts brute force \
     (bishop moveset on 3x3 gives 26)";

#[derive(Parser)]
#[command(
    name = "riders",
    version,
    about = "Exact counts of nonattacking rider configurations on rectangular chessboards"
)]
struct Cli {
    /// Output format for the result document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the document to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Line-size multiset of a move on a board, with its cell checksum.
    Lines {
        #[arg(long = "move", value_name = "C,D")]
        mv: String,
        #[arg(long, value_name = "M,N")]
        board: String,
    },
    /// Count nonattacking configurations of identical riders.
    Count {
        /// Number of pieces q.
        #[arg(long)]
        pieces: u64,
        /// Single basic move, e.g. "1,2" (signs allowed).
        #[arg(long = "move", value_name = "C,D", conflicts_with = "moves")]
        mv: Option<String>,
        /// Semicolon-separated moveset, e.g. "1,1;1,-1" (q = 2 only).
        #[arg(long, value_name = "C1,D1;C2,D2")]
        moves: Option<String>,
        #[arg(long, value_name = "M,N")]
        board: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Fit the quasipolynomial of n -> u(q;n,n) and report its period.
    Period {
        #[arg(long = "move", value_name = "C,D")]
        mv: String,
        #[arg(long)]
        pieces: u64,
        /// Start of the sampling window (default (q+1)*max(c,d)).
        #[arg(long, value_name = "N")]
        valid_from: Option<u64>,
    },
    /// Cross-method and oracle sweep; exits 0 iff every check agrees.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_c: u64,
        #[arg(long, default_value_t = 3)]
        max_d: u64,
        #[arg(long, default_value_t = 6)]
        max_m: u64,
        #[arg(long, default_value_t = 6)]
        max_n: u64,
        #[arg(long, default_value_t = 6)]
        max_q: u64,
        /// Search-space cap for the brute-force oracle; overrides the
        /// RIDER_ORACLE_BUDGET environment variable (default 2000000).
        #[arg(long, value_name = "N")]
        oracle_budget: Option<String>,
        /// Negative-control fixture: corrupt one method on purpose.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Grid of u(q;m,n) over ranges of board dimensions.
    Table {
        #[arg(long = "move", value_name = "C,D")]
        mv: String,
        #[arg(long)]
        pieces: u64,
        /// Inclusive range of m, e.g. "1..4".
        #[arg(long = "m", value_name = "A..B")]
        m_range: String,
        /// Inclusive range of n, e.g. "1..4".
        #[arg(long = "n", value_name = "A..B")]
        n_range: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum MethodArg {
    Auto,
    Elementary,
    Partition,
    Stirling,
    All,
}

/// An error carrying its process exit code.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> CliError {
        CliError::new(2, message)
    }

    fn unsupported(message: impl Into<String>) -> CliError {
        CliError::new(4, message)
    }
}

/// Map library errors onto the exit-code contract.
fn core_error(e: Error) -> CliError {
    let code = match &e {
        Error::MethodDisagreement(_) => 3,
        Error::RegimeNotReached { .. } => 5,
        _ => 2,
    };
    CliError::new(code, e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let doc = match cli.command {
        Command::Lines { mv, board } => cmd_lines(&mv, &board)?,
        Command::Count {
            pieces,
            mv,
            moves,
            board,
            method,
        } => cmd_count(pieces, mv.as_deref(), moves.as_deref(), &board, method)?,
        Command::Period {
            mv,
            pieces,
            valid_from,
        } => cmd_period(&mv, pieces, valid_from)?,
        Command::Table {
            mv,
            pieces,
            m_range,
            n_range,
        } => cmd_table(&mv, pieces, &m_range, &n_range)?,
        Command::Verify {
            max_c,
            max_d,
            max_m,
            max_n,
            max_q,
            oracle_budget,
            inject_fault,
        } => {
            // Verify prints progress lines, not a document.
            return cmd_verify(
                max_c,
                max_d,
                max_m,
                max_n,
                max_q,
                oracle_budget,
                inject_fault,
            );
        }
    };
    write_rendered(&doc.render(cli.format), cli.output.as_deref())
}

// ---- argument parsing ----

fn parse_pair(s: &str, what: &str) -> Result<(i64, i64), CliError> {
    let err = || CliError::input(format!("{what} must be \"A,B\", got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(err)?;
    Ok((
        a.trim().parse().map_err(|_| err())?,
        b.trim().parse().map_err(|_| err())?,
    ))
}

/// Parse a signed move, canonicalize it, and note the reflection when
/// one was applied.
fn parse_move(s: &str) -> Result<(Move, Option<String>), CliError> {
    let (c, d) = parse_pair(s, "move")?;
    let mv = Move::new(c, d).map_err(core_error)?;
    let note = (c < 0 || d < 0).then(|| {
        format!(
            "move ({c},{d}) canonicalized to ({},{}) by reflection symmetry of the rectangle",
            c.abs(),
            d.abs()
        )
    });
    Ok((mv, note))
}

fn parse_board(s: &str) -> Result<Board, CliError> {
    let (m, n) = parse_pair(s, "board")?;
    if m <= 0 || n <= 0 {
        return Err(CliError::input(format!(
            "board dimensions must be positive, got {s:?}"
        )));
    }
    Board::new(m as u64, n as u64).map_err(core_error)
}

fn parse_moveset(s: &str) -> Result<(Moveset, Vec<String>), CliError> {
    let mut moves = Vec::new();
    let mut notes = Vec::new();
    for part in s.split(';') {
        let (c, d) = parse_pair(part.trim(), "move")?;
        let sm = SlopeMove::new(c, d).map_err(core_error)?;
        if sm.is_reflected() {
            let refl = sm.reflected();
            notes.push(format!(
                "slope ({},{}) measured via its reflection ({},{}); \
                 line sizes coincide on rectangles",
                sm.c(),
                sm.d(),
                refl.c(),
                refl.d()
            ));
        }
        moves.push(sm);
    }
    let moveset = Moveset::new(moves).map_err(core_error)?;
    Ok((moveset, notes))
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, CliError> {
    let err = || CliError::input(format!("range must be \"A..B\" with A <= B, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(err)?;
    let a: u64 = a.trim().parse().map_err(|_| err())?;
    let b: u64 = b.trim().parse().map_err(|_| err())?;
    if a == 0 || a > b {
        return Err(err());
    }
    Ok(a..=b)
}

// ---- commands ----

fn cmd_lines(move_str: &str, board_str: &str) -> Result<OutputDoc, CliError> {
    let (mv, note) = parse_move(move_str)?;
    let board = parse_board(board_str)?;
    let lines = line_multiset_closed(&orient(&mv, &board));

    let entries: Vec<_> = lines
        .entries()
        .map(|(size, mult)| json!({ "size": size, "multiplicity": mult }))
        .collect();
    let mut rows: Vec<Vec<String>> = lines
        .entries()
        .map(|(size, mult)| vec![size.to_string(), mult.to_string()])
        .collect();
    rows.push(vec!["checksum".into(), lines.num_cells().to_string()]);

    Ok(OutputDoc {
        query: json!({
            "command": "lines",
            "move": move_str,
            "board": board_str,
        }),
        method: "closed_form".into(),
        result: json!({
            "lines": entries,
            "checksum": lines.num_cells().to_string(),
        }),
        errata_notes: note.into_iter().collect(),
        csv: csv_table(&["size", "multiplicity"], &rows),
    })
}

fn cmd_count(
    pieces: u64,
    move_str: Option<&str>,
    moves_str: Option<&str>,
    board_str: &str,
    method: MethodArg,
) -> Result<OutputDoc, CliError> {
    let board = parse_board(board_str)?;
    let query = json!({
        "command": "count",
        "pieces": pieces,
        "move": move_str,
        "moves": moves_str,
        "board": board_str,
        "method": format!("{method:?}").to_lowercase(),
    });

    if let Some(moves_str) = moves_str {
        let (moveset, mut notes) = parse_moveset(moves_str)?;
        if moveset.len() == 1 {
            // A singleton moveset is an ordinary one-move rider.
            let mv = moveset.moves()[0].reflected();
            return count_single(query, pieces, &mv, &board, method, notes);
        }
        if pieces != 2 {
            return Err(CliError::unsupported(format!(
                "multi-move movesets support --pieces 2 only (got {pieces})"
            )));
        }
        let value = count_two_pieces(&moveset, &board);
        notes.push(ERRATA_ALPHA2.into());
        notes.push(ERRATA_TWO_PIECE.into());
        let rows = vec![vec!["two_piece".to_string(), value.to_string()]];
        return Ok(OutputDoc {
            query,
            method: "two_piece".into(),
            result: json!({ "count": value.to_string() }),
            errata_notes: notes,
            csv: csv_table(&["method", "count"], &rows),
        });
    }

    let move_str =
        move_str.ok_or_else(|| CliError::input("provide --move C,D or --moves \"C,D;...\""))?;
    let (mv, note) = parse_move(move_str)?;
    count_single(
        query,
        pieces,
        &mv,
        &board,
        method,
        note.into_iter().collect(),
    )
}

fn count_single(
    query: serde_json::Value,
    pieces: u64,
    mv: &Move,
    board: &Board,
    method: MethodArg,
    notes: Vec<String>,
) -> Result<OutputDoc, CliError> {
    if method == MethodArg::All {
        let results = count_all_methods(pieces, mv, board);
        let agree = results.windows(2).all(|w| w[0].value == w[1].value);
        if !agree {
            let report = DisagreementReport {
                q: pieces,
                move_c: mv.c(),
                move_d: mv.d(),
                board_m: board.m(),
                board_n: board.n(),
                results,
            };
            return Err(CliError::new(3, report.to_string()));
        }
        let per_method: serde_json::Map<String, serde_json::Value> = results
            .iter()
            .map(|r| (r.method.to_string(), json!(r.value.to_string())))
            .collect();
        let rows: Vec<Vec<String>> = results
            .iter()
            .map(|r| vec![r.method.to_string(), r.value.to_string()])
            .collect();
        return Ok(OutputDoc {
            query,
            method: "all".into(),
            result: json!({
                "count": results[0].value.to_string(),
                "per_method": per_method,
                "agreement": true,
            }),
            errata_notes: notes,
            csv: csv_table(&["method", "count"], &rows),
        });
    }

    let choice = match method {
        MethodArg::Auto => riders::MethodChoice::Auto,
        MethodArg::Elementary => riders::MethodChoice::Elementary,
        MethodArg::Partition => riders::MethodChoice::Partition,
        MethodArg::Stirling => riders::MethodChoice::Stirling,
        MethodArg::All => unreachable!(),
    };
    let result = count(pieces, mv, board, choice).map_err(core_error)?;
    let rows = vec![vec![result.method.to_string(), result.value.to_string()]];
    Ok(OutputDoc {
        query,
        method: result.method.to_string(),
        result: json!({ "count": result.value.to_string() }),
        errata_notes: notes,
        csv: csv_table(&["method", "count"], &rows),
    })
}

fn cmd_period(move_str: &str, pieces: u64, valid_from: Option<u64>) -> Result<OutputDoc, CliError> {
    if pieces == 0 {
        return Err(CliError::input("--pieces must be at least 1 for period"));
    }
    let (mv, note) = parse_move(move_str)?;
    let qp = match valid_from {
        Some(from) => fit_square_board_from(&mv, pieces, from),
        None => fit_square_board(&mv, pieces),
    }
    .map_err(core_error)?;
    let minimal = minimal_period(&qp);
    let exact = minimal == mv.c().max(mv.d());

    let constituents: Vec<_> = qp
        .constituents()
        .iter()
        .enumerate()
        .map(|(r, poly)| {
            let coefficients: Vec<String> = poly.coeffs().iter().map(rational_string).collect();
            json!({ "residue": r, "coefficients": coefficients })
        })
        .collect();

    let mut rows = vec![
        vec!["period".to_string(), qp.period().to_string()],
        vec!["minimal_period".to_string(), minimal.to_string()],
        vec!["degree".to_string(), qp.degree().to_string()],
        vec!["valid_from".to_string(), qp.valid_from().to_string()],
        vec!["exact_max_cd".to_string(), exact.to_string()],
    ];
    for (r, poly) in qp.constituents().iter().enumerate() {
        let coeffs: Vec<String> = poly.coeffs().iter().map(rational_string).collect();
        rows.push(vec![format!("constituent_{r}"), coeffs.join(";")]);
    }

    Ok(OutputDoc {
        query: json!({
            "command": "period",
            "move": move_str,
            "pieces": pieces,
            "valid_from": valid_from,
        }),
        method: "quasipolynomial_fit".into(),
        result: json!({
            "period": qp.period(),
            "minimal_period": minimal,
            "degree": qp.degree(),
            "valid_from": qp.valid_from(),
            "exact_max_cd": exact,
            "constituents": constituents,
        }),
        errata_notes: note.into_iter().collect(),
        csv: csv_table(&["key", "value"], &rows),
    })
}

fn cmd_table(
    move_str: &str,
    pieces: u64,
    m_range_str: &str,
    n_range_str: &str,
) -> Result<OutputDoc, CliError> {
    let (mv, note) = parse_move(move_str)?;
    let m_range = parse_range(m_range_str)?;
    let n_range = parse_range(n_range_str)?;

    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for m in m_range {
        for n in n_range.clone() {
            let board = Board::new(m, n).map_err(core_error)?;
            let value = count(pieces, &mv, &board, riders::MethodChoice::Auto)
                .map_err(core_error)?
                .value;
            entries.push(json!({ "m": m, "n": n, "count": value.to_string() }));
            rows.push(vec![m.to_string(), n.to_string(), value.to_string()]);
        }
    }

    Ok(OutputDoc {
        query: json!({
            "command": "table",
            "move": move_str,
            "pieces": pieces,
            "m": m_range_str,
            "n": n_range_str,
        }),
        method: "elementary".into(),
        result: json!({ "entries": entries }),
        errata_notes: note.into_iter().collect(),
        csv: csv_table(&["m", "n", "count"], &rows),
    })
}

fn resolve_budget(flag: Option<String>) -> Result<OracleBudget, CliError> {
    let from_text = |text: &str, origin: &str| -> Result<OracleBudget, CliError> {
        let value: BigInt = text
            .trim()
            .parse()
            .map_err(|_| CliError::input(format!("{origin} must be an integer, got {text:?}")))?;
        if value <= BigInt::from(0) {
            return Err(CliError::input(format!("{origin} must be positive")));
        }
        Ok(OracleBudget::new(value))
    };
    if let Some(text) = flag {
        return from_text(&text, "--oracle-budget");
    }
    if let Ok(text) = std::env::var(ENV_ORACLE_BUDGET) {
        return from_text(&text, ENV_ORACLE_BUDGET);
    }
    Ok(OracleBudget::default())
}

fn cmd_verify(
    max_c: u64,
    max_d: u64,
    max_m: u64,
    max_n: u64,
    max_q: u64,
    oracle_budget: Option<String>,
    inject_fault: bool,
) -> Result<(), CliError> {
    let budget = resolve_budget(oracle_budget)?;
    let mut checks = 0u64;
    let mut failures = 0u64;
    let mut oracle_runs = 0u64;

    for c in 0..=max_c {
        for d in 0..=max_d {
            let Ok(mv) = Move::new(c as i64, d as i64) else {
                continue;
            };
            let slope = SlopeMove::new(c as i64, d as i64).expect("canonical move is basic");
            let moveset = Moveset::single(slope);
            for m in 1..=max_m {
                for n in 1..=max_n {
                    let board = Board::new(m, n).expect("dimensions are positive");
                    for q in 0..=max_q {
                        let mut values: Vec<(String, BigInt)> = count_all_methods(q, &mv, &board)
                            .into_iter()
                            .map(|r| (r.method.to_string(), r.value))
                            .collect();
                        if inject_fault {
                            // Negative control: break the last method.
                            values[2].1 += 1;
                        }
                        match brute_force_count(q, &moveset, &board, &budget) {
                            Ok(oracle) => {
                                oracle_runs += 1;
                                values.push(("oracle".into(), oracle));
                            }
                            Err(Error::BudgetExceeded { .. }) => {}
                            Err(other) => return Err(core_error(other)),
                        }
                        checks += 1;
                        if values.windows(2).any(|w| w[0].1 != w[1].1) {
                            failures += 1;
                            let detail: Vec<String> = values
                                .iter()
                                .map(|(name, v)| format!("{name}={v}"))
                                .collect();
                            println!(
                                "FAIL q={q} move ({c},{d}) board {m}x{n}: {}",
                                detail.join(" ")
                            );
                        }
                    }
                }
            }
        }
    }

    println!(
        "verify: {checks} checks, {oracle_runs} oracle runs, {failures} failures \
         (c<={max_c} d<={max_d} m<={max_m} n<={max_n} q<={max_q})"
    );
    if failures > 0 {
        return Err(CliError::new(1, format!("{failures} checks disagreed")));
    }
    Ok(())
}
