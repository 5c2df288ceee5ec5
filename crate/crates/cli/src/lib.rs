//! Command implementations for the `flagdist` binary. Every command returns
//! its complete output as a string so it can be tested without a process.

pub mod document;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use flagdist::bijection::{elevated_factorization, strip_decomposition};
use flagdist::{
    area_distribution, catalan_number, collapse_points, disjoint_vector_count, elevated_number,
    enumerate_paths, flag_distance, motzkin_number, phi, potential_vector_count, psi, realize,
    riordan_number, validate_distance_vector, validate_word, verify_pair, MotzkinWord, PathClass,
    PrimeField,
};

use crate::document::{pair_document, FlagCodeDocument};

/// Largest `--max-n` accepted by `table`.
pub const MAX_TABLE_N: usize = 20;
/// Largest `--n` accepted by `enum` without `--limit`.
pub const MAX_UNLIMITED_ENUM_N: usize = 18;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
        }
    }
}

impl From<flagdist::Error> for CliError {
    fn from(e: flagdist::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "flagdist", version, about = "Distance vectors of flag codes and Motzkin paths")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CountKind {
    Motzkin,
    Catalan,
    Elevated,
    Riordan,
    /// T(n, d): distance vectors (paths) of length n with distance (area) d
    Area,
    /// T(n-2, d-n+1): zero-free distance vectors with distance d
    Disjoint,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TableKind {
    Area,
    Disjoint,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Direction {
    ToPath,
    ToVector,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PathView {
    Area,
    Strips,
    Decompose,
    Draw,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClassArg {
    All,
    Elevated,
    Riordan,
}

impl From<ClassArg> for PathClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::All => PathClass::All,
            ClassArg::Elevated => PathClass::Elevated,
            ClassArg::Riordan => PathClass::Riordan,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an exact count
    Count {
        kind: CountKind,
        #[arg(long)]
        n: usize,
        /// Flag distance (area); required for `area` and `disjoint`
        #[arg(long)]
        d: Option<usize>,
    },
    /// Print the area or disjoint-code count table
    Table {
        kind: TableKind,
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Convert between a distance vector ("1,2,1") and a Motzkin word ("UUDD")
    Convert {
        direction: Direction,
        #[arg(allow_hyphen_values = true)]
        payload: String,
    },
    /// Inspect a Motzkin word
    Path { view: PathView, word: String },
    /// List Motzkin words of length n, one per line
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
        #[arg(long)]
        area: Option<usize>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Build two full flags with a given distance vector
    Realize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Report statistics of a flag code document
    Analyze {
        path: std::path::PathBuf,
        /// Also list the distance vector of every pair
        #[arg(long)]
        all_pairs: bool,
    },
}

pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Count { kind, n, d } => cmd_count(kind, n, d),
        Command::Table { kind, max_n } => cmd_table(kind, max_n),
        Command::Convert { direction, payload } => cmd_convert(direction, &payload),
        Command::Path { view, word } => cmd_path(view, &word),
        Command::Enum {
            n,
            class,
            area,
            limit,
        } => cmd_enum(n, class.into(), area, limit),
        Command::Realize { n, q, vector } => cmd_realize(n, q, &vector),
        Command::Analyze { path, all_pairs } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
            cmd_analyze(&text, all_pairs)
        }
    }
}

pub fn cmd_count(kind: CountKind, n: usize, d: Option<usize>) -> Result<String, CliError> {
    let need_d = || d.ok_or_else(|| CliError::Usage("this count needs --d".into()));
    let value = match kind {
        CountKind::Motzkin => motzkin_number(n),
        CountKind::Catalan => catalan_number(n),
        CountKind::Elevated => elevated_number(n),
        CountKind::Riordan => riordan_number(n),
        CountKind::Area => potential_vector_count(n, need_d()?),
        CountKind::Disjoint => disjoint_vector_count(n, need_d()?),
    };
    Ok(format!("{value}\n"))
}

fn render_table(header: &str, columns: usize, rows: &[(usize, Vec<String>)]) -> String {
    let mut widths: Vec<usize> = (0..columns).map(|k| k.to_string().len()).collect();
    for (_, cells) in rows {
        for (k, c) in cells.iter().enumerate() {
            widths[k] = widths[k].max(c.len());
        }
    }
    let label_width = rows
        .iter()
        .map(|(n, _)| n.to_string().len())
        .max()
        .unwrap_or(0)
        .max(header.len());
    let mut out = String::new();
    let mut line = format!("{header:<label_width$} |");
    for (k, w) in widths.iter().enumerate() {
        let _ = write!(line, " {k:>w$}");
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for (n, cells) in rows {
        let mut line = format!("{n:<label_width$} |");
        for (k, w) in widths.iter().enumerate() {
            let cell = cells.get(k).map(String::as_str).unwrap_or("");
            let _ = write!(line, " {cell:>w$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn cmd_table(kind: TableKind, max_n: usize) -> Result<String, CliError> {
    if max_n > MAX_TABLE_N {
        return Err(CliError::Usage(format!("--max-n must be at most {MAX_TABLE_N}")));
    }
    let columns = max_n * max_n / 4 + 1;
    let out = match kind {
        TableKind::Area => {
            let rows: Vec<(usize, Vec<String>)> = (0..=max_n)
                .map(|n| (n, area_distribution(n).iter().map(|t| t.to_string()).collect()))
                .collect();
            render_table("n\\k", columns, &rows)
        }
        TableKind::Disjoint => {
            let rows: Vec<(usize, Vec<String>)> = (2..=max_n)
                .map(|n| {
                    let cells = (0..=n * n / 4)
                        .map(|d| {
                            if d + 1 < n {
                                "-".to_string()
                            } else {
                                disjoint_vector_count(n, d).to_string()
                            }
                        })
                        .collect();
                    (n, cells)
                })
                .collect();
            render_table("n\\d", columns, &rows)
        }
    };
    Ok(out)
}

/// Parses comma-separated integers; an empty payload is the empty vector.
pub fn parse_vector(payload: &str) -> Result<Vec<i64>, CliError> {
    let trimmed = payload.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .enumerate()
        .map(|(i, part)| {
            part.trim().parse::<i64>().map_err(|_| {
                CliError::Validation(format!(
                    "component {} ({:?}) is not an integer",
                    i + 1,
                    part.trim()
                ))
            })
        })
        .collect()
}

fn parse_word(word: &str) -> Result<MotzkinWord, CliError> {
    validate_word(word.trim()).map_err(|e| CliError::Validation(format!("not a Motzkin word: {e}")))
}

pub fn cmd_convert(direction: Direction, payload: &str) -> Result<String, CliError> {
    match direction {
        Direction::ToPath => {
            let comps = parse_vector(payload)?;
            let v = validate_distance_vector(&comps, comps.len() + 1)?;
            Ok(format!("{}\n", psi(&v)))
        }
        Direction::ToVector => {
            let w = parse_word(payload)?;
            Ok(format!("{}\n", phi(&w)))
        }
    }
}

/// ASCII drawing: `/` for up, `_` for flat, `\` for down steps, highest
/// level first.
pub fn draw(word: &MotzkinWord) -> String {
    let heights = word.heights();
    let marks: Vec<(usize, char)> = word
        .steps()
        .iter()
        .enumerate()
        .map(|(i, step)| match step {
            flagdist::Step::U => (heights[i], '/'),
            flagdist::Step::H => (heights[i], '_'),
            flagdist::Step::D => (heights[i + 1], '\\'),
        })
        .collect();
    let levels = marks.iter().map(|&(r, _)| r + 1).max().unwrap_or(1);
    let mut grid = vec![vec![' '; word.len()]; levels];
    for (i, &(row, ch)) in marks.iter().enumerate() {
        grid[row][i] = ch;
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn cmd_path(view: PathView, word: &str) -> Result<String, CliError> {
    let w = parse_word(word)?;
    let out = match view {
        PathView::Area => format!("{}\n", w.area()),
        PathView::Strips => {
            let parts: Vec<String> = strip_decomposition(&w)
                .pairs()
                .iter()
                .map(|&(i, j)| format!("({i},{j}):{}", j - i))
                .collect();
            format!("{}\n", parts.join(" "))
        }
        PathView::Decompose => {
            let mut parts: Vec<String> = elevated_factorization(&w)
                .iter()
                .map(|f| format!("{f}:{}", f.area()))
                .collect();
            parts.push(format!("total:{}", w.area()));
            format!("{}\n", parts.join(" "))
        }
        PathView::Draw => draw(&w),
    };
    Ok(out)
}

pub fn cmd_enum(
    n: usize,
    class: PathClass,
    area: Option<usize>,
    limit: Option<usize>,
) -> Result<String, CliError> {
    if limit.is_none() && n > MAX_UNLIMITED_ENUM_N {
        return Err(CliError::Usage(format!(
            "--n above {MAX_UNLIMITED_ENUM_N} needs --limit"
        )));
    }
    let mut out = String::new();
    for w in enumerate_paths(n, class, area).take(limit.unwrap_or(usize::MAX)) {
        let _ = writeln!(out, "{w}");
    }
    Ok(out)
}

pub fn cmd_realize(n: usize, q: u64, vector: &str) -> Result<String, CliError> {
    let field = PrimeField::new(q)?;
    let comps = parse_vector(vector)?;
    let v = validate_distance_vector(&comps, n)?;
    let pair = realize(&v, field)?;
    if !verify_pair(&pair, &v) {
        return Err(CliError::Validation(format!(
            "internal error: realized pair does not reproduce {v}"
        )));
    }
    // Recomputed from the flags, not copied from the input.
    let recomputed = flagdist::distance_vector(&pair.first, &pair.second)?;
    let rendered: Vec<String> = recomputed.iter().map(|d| d.to_string()).collect();
    let distance = flag_distance(&pair.first, &pair.second)?;
    let collapses: Vec<usize> = collapse_points(&pair.first, &pair.second)?.into_iter().collect();
    Ok(pair_document(&pair, &rendered.join(","), distance, &collapses))
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn cmd_analyze(text: &str, all_pairs: bool) -> Result<String, CliError> {
    let code = FlagCodeDocument::parse(text)
        .and_then(FlagCodeDocument::into_code)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let n = code.ambient();
    let min = code.min_distance();
    let mut out = String::new();
    let _ = writeln!(out, "size: {}", code.len());
    let _ = writeln!(out, "n: {n}");
    let _ = writeln!(out, "q: {}", code.field().order());
    let _ = writeln!(
        out,
        "type: {}{}",
        code.type_vector(),
        if code.is_full() { " (full)" } else { "" }
    );
    let _ = writeln!(out, "min distance: {min}");
    let _ = writeln!(out, "max distance bound: {}", code.max_distance_bound());
    match code.distance_vector_set() {
        Ok(set) => {
            let parts: Vec<String> = set.iter().map(|v| tuple(v)).collect();
            let _ = writeln!(out, "distance vectors at min distance: {}", parts.join(" "));
        }
        Err(_) => {
            let _ = writeln!(out, "distance vectors at min distance: none (single flag)");
        }
    }
    let sizes: Vec<String> = code.projected_sizes().iter().map(|s| s.to_string()).collect();
    let _ = writeln!(out, "projected sizes: {}", sizes.join(","));
    let disjoint = code.len() >= 2 && code.is_disjoint();
    let _ = writeln!(out, "disjoint: {}", if disjoint { "yes" } else { "no" });
    if code.is_full() {
        let _ = writeln!(
            out,
            "potential vectors T({n},{min}): {}",
            potential_vector_count(n, min)
        );
        if disjoint {
            let _ = writeln!(
                out,
                "potential disjoint vectors T({},{}): {}",
                n - 2,
                min as i64 - n as i64 + 1,
                disjoint_vector_count(n, min)
            );
        }
    }
    if all_pairs {
        let _ = writeln!(out, "pairs:");
        for p in code.pairwise() {
            let _ = writeln!(
                out,
                "  {}-{}: {} distance {}",
                p.first + 1,
                p.second + 1,
                tuple(&p.vector),
                p.distance
            );
        }
    }
    Ok(out)
}
