//! Command-line driver for the face-algebra toolkit.
//!
//! Subcommands: `table` (grid of composition multiplicities), `verify`
//! (idempotent-family axioms plus the generating-function identity),
//! `cartan` (invariants by two methods), `lie` (higher Lie character
//! expansions), `lyndon` (Duval factorization), and `sign`
//! (sign-isotypic dimension and label).  Output is text, JSON, or CSV,
//! always assembled in deterministic order; `--out` redirects the
//! payload to a file.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails or an
//! output file cannot be written, 2 for usage errors including degree
//! caps.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use num::{BigInt, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use facealg::characters::dimension;
use facealg::combinatorics::{partitions_of, Composition, Partition};
use facealg::genfunc::{cartan_matrix, rhs_series, verify_main_theorem, BivariateSeries};
use facealg::idempotents::IdempotentFamily;
use facealg::jsonio::{
    cartan_to_dto, symfunc_to_dto, theorem_report_to_dto, Basis, SymFuncDto,
};
use facealg::lyndon::{duval_factorization, lyndon_type};
use facealg::repanalysis::{longest_element_cycle_type, sign_isotypic_dimension};
use facealg::symfunc::{higher_lie, SymFunc};

/// Default degree cap for `verify`; raised with `--cap-faces`, never
/// beyond [`HARD_VERIFY_CAP`].
const DEFAULT_VERIFY_CAP: u32 = 5;
/// Largest degree the verifier will attempt at all.
const HARD_VERIFY_CAP: u32 = 6;
/// Largest degree for the series-backed `table` and `cartan` commands.
const SERIES_CAP: u32 = 8;
/// Largest degree for `sign` (enumerates faces, no idempotents).
const SIGN_CAP: u32 = 6;
/// Largest partition size for `lie`.
const LIE_CAP: u32 = 10;

#[derive(Parser)]
#[command(
    name = "facealg",
    version,
    about = "Exact computations in the braid-arrangement face algebra",
    long_about = "Exact computations in the braid-arrangement face algebra: orbit idempotents, \
                  two-sided projected modules, Cartan invariants, higher Lie characters, and the \
                  Lyndon-word generating-function identity tying them together."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "FACEALG_FORMAT")]
    format: Format,
    /// Write the payload to this file instead of stdout.
    #[arg(long, global = true, env = "FACEALG_OUT")]
    out: Option<PathBuf>,
    /// Worker threads for parallel phases (default: one per core).
    #[arg(long, global = true, env = "FACEALG_JOBS")]
    jobs: Option<usize>,
    /// Degree cap for `verify` (default 5; hard maximum 6 — expect a
    /// long run and several GiB of memory at 6).
    #[arg(long, global = true, env = "FACEALG_CAP_FACES")]
    cap_faces: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Grid of composition multiplicities: rows ν, columns μ, entries
    /// listing λ with the multiplicity of the simple M_λ in (ℂF_nE_μ)^ν.
    Table {
        /// Degree (1 ≤ n ≤ 8).
        #[arg(long)]
        n: u32,
    },
    /// Build the idempotent family with all axiom checks, then verify
    /// the generating-function identity coefficient by coefficient.
    Verify {
        /// Degree (1 ≤ n ≤ cap; see --cap-faces).
        #[arg(long)]
        n: u32,
    },
    /// Cartan invariants at degree n, computed from the series and by
    /// counting Lyndon types, cross-checked.
    Cartan {
        /// Degree (1 ≤ n ≤ 8).
        #[arg(long)]
        n: u32,
    },
    /// Expand the higher Lie character L_λ.
    Lie {
        /// Partition, comma-separated parts (e.g. "2,1,1").
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Expansion basis.
        #[arg(long, value_enum, default_value_t = BasisArg::S)]
        basis: BasisArg,
    },
    /// Duval factorization and Lyndon type of a composition.
    Lyndon {
        /// Composition, comma-separated letters in order (e.g. "1,2,1").
        #[arg(long, value_parser = parse_composition)]
        word: Composition,
    },
    /// Sign-isotypic dimension of the face algebra and the label of its
    /// unique simple composition factor.
    Sign {
        /// Degree (1 ≤ n ≤ 6).
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    /// Schur basis.
    S,
    /// Power-sum basis.
    P,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::S => Basis::S,
            BasisArg::P => Basis::P,
        }
    }
}

/// Marker for errors that should exit with code 2.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let mut parts = Vec::new();
    for piece in s.split(',') {
        let p: u32 = piece
            .trim()
            .parse()
            .map_err(|_| format!("invalid partition part {piece:?}"))?;
        if p == 0 {
            return Err("partition parts must be positive".into());
        }
        parts.push(p);
    }
    if parts.is_empty() {
        return Err("empty partition".into());
    }
    Ok(Partition::from_unsorted(parts))
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    let mut parts = Vec::new();
    for piece in s.split(',') {
        let p: u32 = piece
            .trim()
            .parse()
            .map_err(|_| format!("invalid composition letter {piece:?}"))?;
        if p == 0 {
            return Err("composition letters must be positive".into());
        }
        parts.push(p);
    }
    if parts.is_empty() {
        return Err("empty composition".into());
    }
    Ok(Composition::new(parts))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    configure_jobs(cli.common.jobs)?;
    let format = cli.common.format;
    let payload = match cli.command {
        Command::Table { n } => cmd_table(n, format)?,
        Command::Verify { n } => cmd_verify(n, cli.common.cap_faces, format)?,
        Command::Cartan { n } => cmd_cartan(n, format)?,
        Command::Lie { lambda, basis } => cmd_lie(&lambda, basis, format)?,
        Command::Lyndon { word } => cmd_lyndon(&word, format)?,
        Command::Sign { n } => cmd_sign(n, format)?,
    };
    emit(&payload, &cli.common.out)
}

#[cfg(feature = "parallel")]
fn configure_jobs(jobs: Option<usize>) -> Result<()> {
    if let Some(j) = jobs {
        if j == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .context("configuring the worker pool")?;
    }
    Ok(())
}

#[cfg(not(feature = "parallel"))]
fn configure_jobs(jobs: Option<usize>) -> Result<()> {
    if jobs.is_some() {
        eprintln!("warning: built without the parallel feature; --jobs is ignored");
    }
    Ok(())
}

fn emit(payload: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, payload)
                .with_context(|| format!("writing {}", path.display()))?;
            println!("wrote {}", path.display());
        }
        None => print!("{payload}"),
    }
    Ok(())
}

/// Render partition parts as "2,1,1".
fn parts_string(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Quote a CSV field (partition strings contain commas).
fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

// ---------------------------------------------------------------- table

#[derive(Serialize, Deserialize)]
struct TableEntryDto {
    lambda: Vec<u32>,
    multiplicity: u64,
}

#[derive(Serialize, Deserialize)]
struct TableCellDto {
    nu: Vec<u32>,
    mu: Vec<u32>,
    entries: Vec<TableEntryDto>,
}

#[derive(Serialize, Deserialize)]
struct TableDto {
    n: u32,
    cells: Vec<TableCellDto>,
}

/// The multiplicity of M_λ in (ℂF_nE_μ)^ν from the series coefficient:
/// f^ν · ⟨s_ν, coefficient(λ, μ)⟩.
fn table_multiplicity(
    series: &BivariateSeries,
    nu: &Partition,
    lam: &Partition,
    mu: &Partition,
) -> Result<u64> {
    let value = BigRational::from(BigInt::from(dimension(nu)))
        * SymFunc::s(nu).hall_inner(&series.coefficient(lam, mu));
    if value.is_integer() && !value.is_negative() {
        Ok(value.to_integer().to_u64().unwrap())
    } else {
        Err(anyhow::anyhow!(
            "multiplicity at (nu={nu}, mu={mu}, lambda={lam}) is not a nonnegative integer"
        ))
    }
}

fn cmd_table(n: u32, format: Format) -> Result<String> {
    if n < 1 || n > SERIES_CAP {
        return Err(usage(format!("table supports 1 <= n <= {SERIES_CAP}, got {n}")));
    }
    let series = rhs_series(n);
    let columns = partitions_of(n);
    let mut rows = partitions_of(n);
    rows.reverse();

    let mut cells: Vec<TableCellDto> = Vec::new();
    for nu in &rows {
        for mu in &columns {
            let mut entries = Vec::new();
            for lam in &columns {
                let m = table_multiplicity(&series, nu, lam, mu)?;
                if m > 0 {
                    entries.push(TableEntryDto { lambda: lam.parts().to_vec(), multiplicity: m });
                }
            }
            cells.push(TableCellDto {
                nu: nu.parts().to_vec(),
                mu: mu.parts().to_vec(),
                entries,
            });
        }
    }
    let dto = TableDto { n, cells };

    Ok(match format {
        Format::Json => to_json(&dto)?,
        Format::Csv => {
            let mut out = String::from("nu,mu,lambda,multiplicity\n");
            for cell in &dto.cells {
                for e in &cell.entries {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        csv_quote(&join_u32(&cell.nu)),
                        csv_quote(&join_u32(&cell.mu)),
                        csv_quote(&join_u32(&e.lambda)),
                        e.multiplicity
                    ));
                }
            }
            out
        }
        Format::Text => {
            let headers: Vec<String> = columns.iter().map(parts_string).collect();
            let mut grid: Vec<Vec<String>> = Vec::new();
            let mut header_row = vec!["nu \\ mu".to_string()];
            header_row.extend(headers.iter().cloned());
            grid.push(header_row);
            for (i, nu) in rows.iter().enumerate() {
                let mut row = vec![parts_string(nu)];
                for (j, _) in columns.iter().enumerate() {
                    let cell = &dto.cells[i * columns.len() + j];
                    let text = cell
                        .entries
                        .iter()
                        .map(|e| format!("{} ({})", join_u32(&e.lambda), e.multiplicity))
                        .collect::<Vec<_>>()
                        .join("; ");
                    row.push(text);
                }
                grid.push(row);
            }
            render_grid(&grid)
        }
    })
}

fn join_u32(parts: &[u32]) -> String {
    parts.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Pad a rectangular grid of strings into aligned columns with a rule
/// under the header row.
fn render_grid(grid: &[Vec<String>]) -> String {
    let cols = grid[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|j| grid.iter().map(|row| row[j].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (i, row) in grid.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, cell)| format!("{:width$}", cell, width = widths[j]))
            .collect();
        out.push_str(line.join(" | ").trim_end());
        out.push('\n');
        if i == 0 {
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            out.push_str(&rule.join("-+-"));
            out.push('\n');
        }
    }
    out
}

// --------------------------------------------------------------- verify

fn cmd_verify(n: u32, cap_faces: Option<u32>, format: Format) -> Result<String> {
    let cap = cap_faces.unwrap_or(DEFAULT_VERIFY_CAP);
    if cap > HARD_VERIFY_CAP {
        return Err(usage(format!(
            "--cap-faces {cap} exceeds the hard maximum {HARD_VERIFY_CAP}"
        )));
    }
    if n < 1 || n > cap {
        return Err(usage(format!(
            "verify supports 1 <= n <= {cap} (raise with --cap-faces, hard maximum \
             {HARD_VERIFY_CAP}), got {n}"
        )));
    }
    if n > DEFAULT_VERIFY_CAP {
        eprintln!(
            "warning: degree {n} builds {} faces and verifies every axiom on them; \
             expect a very long single-threaded run and several GiB of memory",
            facealg::faces::enumerate_faces(n).len()
        );
    }
    let family = IdempotentFamily::build_with(n, true)?;
    let report = verify_main_theorem(&family)?;
    let dto = theorem_report_to_dto(&report, Basis::S);

    Ok(match format {
        Format::Json => to_json(&dto)?,
        Format::Csv => {
            let mut out = String::from("left,right,dimension\n");
            for p in &dto.pairs {
                out.push_str(&format!(
                    "{},{},{}\n",
                    csv_quote(&join_u32(&p.left)),
                    csv_quote(&join_u32(&p.right)),
                    p.dimension
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "degree {}: idempotent family verified; checking {} coefficient pairs\n",
                dto.n,
                dto.pairs.len()
            ));
            for p in &report.pairs {
                out.push_str(&format!(
                    "  ({}, {}): dim {:3}  ch = {}\n",
                    parts_string(&p.left),
                    parts_string(&p.right),
                    p.dimension,
                    p.character.schur_string()
                ));
            }
            out.push_str(&format!(
                "all pairs match the series; total dimension {} = number of faces\n",
                dto.total_dimension
            ));
            out
        }
    })
}

// --------------------------------------------------------------- cartan

fn cmd_cartan(n: u32, format: Format) -> Result<String> {
    if n < 1 || n > SERIES_CAP {
        return Err(usage(format!("cartan supports 1 <= n <= {SERIES_CAP}, got {n}")));
    }
    let matrix = cartan_matrix(n)?;
    let dto = cartan_to_dto(&matrix);

    Ok(match format {
        Format::Json => to_json(&dto)?,
        Format::Csv => {
            let mut out = String::from("lambda,mu,value\n");
            for e in &dto {
                out.push_str(&format!(
                    "{},{},{}\n",
                    csv_quote(&join_u32(&e.lambda)),
                    csv_quote(&join_u32(&e.mu)),
                    e.value
                ));
            }
            out
        }
        Format::Text => {
            let labels = partitions_of(n);
            let mut grid: Vec<Vec<String>> = Vec::new();
            let mut header = vec!["mu \\ lambda".to_string()];
            header.extend(labels.iter().map(parts_string));
            grid.push(header);
            for mu in &labels {
                let mut row = vec![parts_string(mu)];
                for lam in &labels {
                    row.push(match matrix.get(&(lam.clone(), mu.clone())) {
                        Some(c) => c.to_string(),
                        None => String::new(),
                    });
                }
                grid.push(row);
            }
            let mut out = render_grid(&grid);
            out.push_str("rows are mu (projective), columns lambda (simple); both routes agree\n");
            out
        }
    })
}

// ------------------------------------------------------------------ lie

#[derive(Serialize, Deserialize)]
struct LieDto {
    lambda: Vec<u32>,
    expansion: SymFuncDto,
}

fn cmd_lie(lambda: &Partition, basis: BasisArg, format: Format) -> Result<String> {
    if lambda.size() > LIE_CAP {
        return Err(usage(format!(
            "lie supports partitions of size at most {LIE_CAP}, got size {}",
            lambda.size()
        )));
    }
    let f = higher_lie(lambda);
    let dto = LieDto {
        lambda: lambda.parts().to_vec(),
        expansion: symfunc_to_dto(&f, basis.into()),
    };

    Ok(match format {
        Format::Json => to_json(&dto)?,
        Format::Csv => {
            let mut out = String::from("index,numerator,denominator\n");
            for t in &dto.expansion.terms {
                out.push_str(&format!(
                    "{},{},{}\n",
                    csv_quote(&join_u32(&t.index)),
                    t.numerator,
                    t.denominator
                ));
            }
            out
        }
        Format::Text => match basis {
            BasisArg::S => format!("{}\n", f.schur_string()),
            BasisArg::P => format!("{f}\n"),
        },
    })
}

// --------------------------------------------------------------- lyndon

#[derive(Serialize, Deserialize)]
struct LyndonDto {
    word: Vec<u32>,
    factors: Vec<Vec<u32>>,
    lyndon_type: Vec<u32>,
}

fn cmd_lyndon(word: &Composition, format: Format) -> Result<String> {
    let factors = duval_factorization(word.parts());
    let ty = lyndon_type(word);
    let dto = LyndonDto {
        word: word.parts().to_vec(),
        factors: factors.clone(),
        lyndon_type: ty.parts().to_vec(),
    };

    Ok(match format {
        Format::Json => to_json(&dto)?,
        Format::Csv => {
            let mut out = String::from("kind,value\n");
            out.push_str(&format!("word,{}\n", csv_quote(&join_u32(&dto.word))));
            for f in &dto.factors {
                out.push_str(&format!("factor,{}\n", csv_quote(&join_u32(f))));
            }
            out.push_str(&format!("type,{}\n", csv_quote(&join_u32(&dto.lyndon_type))));
            out
        }
        Format::Text => {
            let rendered: String =
                factors.iter().map(|f| format!("({})", join_u32(f))).collect();
            format!("factors: {rendered}\ntype: {}\n", parts_string(&ty))
        }
    })
}

// ----------------------------------------------------------------- sign

#[derive(Serialize, Deserialize)]
struct SignDto {
    n: u32,
    dimension: u64,
    label: Vec<u32>,
}

fn cmd_sign(n: u32, format: Format) -> Result<String> {
    if n < 1 || n > SIGN_CAP {
        return Err(usage(format!("sign supports 1 <= n <= {SIGN_CAP}, got {n}")));
    }
    let dim = sign_isotypic_dimension(n)?;
    let sign = SymFunc::s(&Partition::rectangular(1, n));
    let mut labels: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for lam in partitions_of(n) {
        let value = sign.hall_inner(&higher_lie(&lam));
        if !num::Zero::is_zero(&value) {
            labels.insert(lam, value);
        }
    }
    if labels.len() != 1 {
        return Err(anyhow::anyhow!(
            "expected a unique sign-carrying Lie character at degree {n}, found {}",
            labels.len()
        ));
    }
    let (label, multiplicity) = labels.into_iter().next().unwrap();
    let expected = longest_element_cycle_type(n);
    if label != expected {
        return Err(anyhow::anyhow!(
            "sign-isotypic label at degree {n} is {label}, but the longest element has \
             cycle type {expected}"
        ));
    }
    if multiplicity != BigRational::from(BigInt::from(1)) || dim != 1 {
        return Err(anyhow::anyhow!(
            "sign-isotypic dimension at degree {n} should be 1 (multiplicity {multiplicity}, \
             fixed-face dimension {dim})"
        ));
    }
    let dto = SignDto { n, dimension: dim, label: label.parts().to_vec() };

    Ok(match format {
        Format::Json => to_json(&dto)?,
        Format::Csv => format!(
            "n,dimension,label\n{},{},{}\n",
            dto.n,
            dto.dimension,
            csv_quote(&join_u32(&dto.label))
        ),
        Format::Text => format!(
            "degree {}: sign-isotypic dimension {}, simple label {}\n",
            dto.n,
            dto.dimension,
            parts_string(&label)
        ),
    })
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).context("serializing output")?;
    s.push('\n');
    Ok(s)
}
