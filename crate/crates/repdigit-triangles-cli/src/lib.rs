//! Command-line surface over the repdigit-triangles library: single checks,
//! theorem verification, range searches, family generation, and the digit
//! corollaries, all reported as line-delimited records.
//!
//! Exit codes: 0 success/consistent, 1 checked-and-absent, 2 usage or
//! constraint error, 3 theorem violation (a would-be counterexample).

mod record;

pub use record::{Format, ReportRecord, CSV_HEADER};

use clap::{Parser, Subcommand, ValueEnum};
use record::write_records;
use repdigit_triangles::families::{
    corollary_base, enumerate_family, generate_family, FamilyId, FamilyParams,
};
use repdigit_triangles::search::{search, verify_theorem, SearchRange, TheoremBounds, Verdict};
use repdigit_triangles::triples::{check_type1, check_type2, TriangleType};
use repdigit_triangles::RepdigitSpec;
use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ABSENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "repdigit-triangles",
    version,
    about = "Classify and search Pythagorean triangles built from base-b repdigits"
)]
pub struct Cli {
    /// Output format for report records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Jsonl)]
    pub format: Format,

    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true, env = "REPDIGIT_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test one (k, b, d) candidate for a triangle of the given type.
    Check {
        /// Number of repeated digits (at least 2).
        #[arg(long)]
        k: u32,
        /// Base (at least 3).
        #[arg(long)]
        b: u64,
        /// Repeated digit, between 2 and b - 1.
        #[arg(long)]
        d: u64,
        #[arg(long = "type", value_enum, ignore_case = true)]
        r#type: TypeArg,
    },
    /// Scan the range a theorem covers and compare against its prediction.
    VerifyTheorem {
        /// Theorem number, 1 through 5.
        #[arg(long)]
        id: u8,
        /// Largest digit count scanned (theorems 1-4).
        #[arg(long, default_value_t = 64)]
        k_max: u32,
        /// Largest base scanned (theorem 5).
        #[arg(long, default_value_t = 10_000)]
        b_max: u64,
    },
    /// Exhaustive scan over bases, digits, and digit counts.
    Search {
        /// Inclusive base interval, e.g. 3..20 (or a single base).
        #[arg(long)]
        bases: BaseRange,
        /// Restrict to these digits (default: every 2..=b-1).
        #[arg(long, value_delimiter = ',')]
        digits: Option<Vec<u64>>,
        /// Largest digit count scanned.
        #[arg(long, default_value_t = 64)]
        k_max: u32,
        /// Triangle types to scan, e.g. t1,t2.
        #[arg(long, value_enum, ignore_case = true, value_delimiter = ',',
              default_values_t = [TypeArg::T1, TypeArg::T2])]
        types: Vec<TypeArg>,
    },
    /// Generate one family instance, or a whole parameter grid.
    Family {
        #[arg(long, value_enum, ignore_case = true)]
        name: FamilyArg,
        /// Parameter l (families F1, F2).
        #[arg(long)]
        l: Option<u64>,
        /// Parameter q (families F1, F2, S1, S2).
        #[arg(long)]
        q: Option<u64>,
        /// Parameter r (families S1, S2).
        #[arg(long)]
        r: Option<u64>,
        /// Parameter t (family U).
        #[arg(long)]
        t: Option<u64>,
        /// Enumerate every instance with parameters up to this bound.
        #[arg(long)]
        grid: Option<u64>,
    },
    /// The guaranteed base for a digit, from the matching family corollary.
    Corollary {
        /// Repeated digit.
        #[arg(long)]
        d: u64,
        #[arg(long = "type", value_enum, ignore_case = true)]
        r#type: TypeArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    T1,
    T2,
}

impl From<TypeArg> for TriangleType {
    fn from(arg: TypeArg) -> Self {
        match arg {
            TypeArg::T1 => TriangleType::Type1,
            TypeArg::T2 => TriangleType::Type2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    F1,
    F2,
    S1,
    S2,
    U,
}

impl From<FamilyArg> for FamilyId {
    fn from(arg: FamilyArg) -> Self {
        match arg {
            FamilyArg::F1 => FamilyId::F1,
            FamilyArg::F2 => FamilyId::F2,
            FamilyArg::S1 => FamilyId::S1,
            FamilyArg::S2 => FamilyId::S2,
            FamilyArg::U => FamilyId::U,
        }
    }
}

/// Inclusive base interval parsed from `A..B` (or a bare `A`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseRange {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for BaseRange {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected A..B or a single base, got {text:?}");
        if let Some((lo, hi)) = text.split_once("..") {
            let lo = lo.trim().parse().map_err(|_| bad())?;
            let hi = hi.trim().parse().map_err(|_| bad())?;
            Ok(BaseRange { lo, hi })
        } else {
            let single = text.trim().parse().map_err(|_| bad())?;
            Ok(BaseRange {
                lo: single,
                hi: single,
            })
        }
    }
}

/// Parses arguments, runs the command, and writes records to `out`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    let (records, code) = with_thread_pool(cli.threads, || dispatch(cli.command));
    if let Err(err) = write_records(out, cli.format, &records) {
        eprintln!("failed to write records: {err}");
        return EXIT_USAGE;
    }
    code
}

/// Searches run inside a dedicated pool when --threads is given; the merge
/// step is order-independent, so output never depends on the count.
fn with_thread_pool<R: Send>(threads: Option<usize>, job: impl FnOnce() -> R + Send) -> R {
    match threads {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("worker pool")
            .install(job),
        _ => job(),
    }
}

fn dispatch(command: Command) -> (Vec<ReportRecord>, i32) {
    match command {
        Command::Check { k, b, d, r#type } => cmd_check(k, b, d, r#type.into()),
        Command::VerifyTheorem { id, k_max, b_max } => cmd_verify_theorem(id, k_max, b_max),
        Command::Search {
            bases,
            digits,
            k_max,
            types,
        } => cmd_search(bases, digits, k_max, &types),
        Command::Family {
            name,
            l,
            q,
            r,
            t,
            grid,
        } => cmd_family(name, l, q, r, t, grid),
        Command::Corollary { d, r#type } => cmd_corollary(d, r#type.into()),
    }
}

fn usage_error(err: impl std::fmt::Display) -> (Vec<ReportRecord>, i32) {
    (vec![ReportRecord::error(err.to_string())], EXIT_USAGE)
}

fn cmd_check(k: u32, b: u64, d: u64, triangle: TriangleType) -> (Vec<ReportRecord>, i32) {
    let spec = match RepdigitSpec::new(k, b, d) {
        Ok(spec) => spec,
        Err(err) => return usage_error(err),
    };
    let witness = match triangle {
        TriangleType::Type1 => check_type1(&spec),
        TriangleType::Type2 => check_type2(&spec),
    };
    match witness {
        Some(w) => (vec![ReportRecord::hit(&w)], EXIT_OK),
        None => (vec![ReportRecord::absent(&spec, triangle)], EXIT_ABSENT),
    }
}

fn cmd_verify_theorem(id: u8, k_max: u32, b_max: u64) -> (Vec<ReportRecord>, i32) {
    let bounds = TheoremBounds { k_max, b_max };
    let verification = match verify_theorem(id, &bounds) {
        Ok(v) => v,
        Err(err) => return usage_error(err),
    };
    let mut records: Vec<ReportRecord> = verification
        .report
        .hits
        .iter()
        .map(ReportRecord::hit)
        .collect();
    records.push(ReportRecord::theorem_verdict(&verification));
    let code = match verification.verdict {
        Verdict::Consistent => EXIT_OK,
        Verdict::Violation => EXIT_VIOLATION,
    };
    (records, code)
}

fn cmd_search(
    bases: BaseRange,
    digits: Option<Vec<u64>>,
    k_max: u32,
    types: &[TypeArg],
) -> (Vec<ReportRecord>, i32) {
    let types: Vec<TriangleType> = types.iter().map(|&t| t.into()).collect();
    let range = match SearchRange::new(bases.lo, bases.hi, digits, k_max, &types) {
        Ok(range) => range,
        Err(err) => return usage_error(err),
    };
    let report = search(&range, true);
    let mut records: Vec<ReportRecord> = report.hits.iter().map(ReportRecord::hit).collect();
    records.push(ReportRecord::summary(&report));
    (records, EXIT_OK)
}

fn cmd_family(
    name: FamilyArg,
    l: Option<u64>,
    q: Option<u64>,
    r: Option<u64>,
    t: Option<u64>,
    grid: Option<u64>,
) -> (Vec<ReportRecord>, i32) {
    let id: FamilyId = name.into();
    if let Some(bound) = grid {
        let records: Vec<ReportRecord> = enumerate_family(id, bound)
            .map(|(params, _, witness)| ReportRecord::family_instance(&params, &witness))
            .collect();
        return (records, EXIT_OK);
    }
    let missing = |flags: &str| usage_error(format!("family {id} needs {flags} (or --grid N)"));
    let params = match id {
        FamilyId::F1 => match (l, q) {
            (Some(l), Some(q)) => FamilyParams::F1 { l, q },
            _ => return missing("--l and --q"),
        },
        FamilyId::F2 => match (l, q) {
            (Some(l), Some(q)) => FamilyParams::F2 { l, q },
            _ => return missing("--l and --q"),
        },
        FamilyId::S1 => match (r, q) {
            (Some(r), Some(q)) => FamilyParams::S1 { r, q },
            _ => return missing("--r and --q"),
        },
        FamilyId::S2 => match (r, q) {
            (Some(r), Some(q)) => FamilyParams::S2 { r, q },
            _ => return missing("--r and --q"),
        },
        FamilyId::U => match t {
            Some(t) => FamilyParams::U { t },
            None => return missing("--t"),
        },
    };
    match generate_family(&params) {
        Ok((_, witness)) => (
            vec![ReportRecord::family_instance(&params, &witness)],
            EXIT_OK,
        ),
        Err(err) => usage_error(err),
    }
}

fn cmd_corollary(d: u64, triangle: TriangleType) -> (Vec<ReportRecord>, i32) {
    let params = match corollary_base(d, triangle) {
        Ok((_, params)) => params,
        Err(err) => return usage_error(err),
    };
    let (_, witness) = generate_family(&params).expect("corollary parameters generate");
    (
        vec![ReportRecord::family_instance(&params, &witness)],
        EXIT_OK,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_range_parses_both_forms() {
        assert_eq!("3..20".parse(), Ok(BaseRange { lo: 3, hi: 20 }));
        assert_eq!("10".parse(), Ok(BaseRange { lo: 10, hi: 10 }));
        assert!("x..y".parse::<BaseRange>().is_err());
        assert!("".parse::<BaseRange>().is_err());
    }

    #[test]
    fn check_exit_codes() {
        let (_, code) = cmd_check(3, 10, 6, TriangleType::Type1);
        assert_eq!(code, EXIT_OK);
        let (_, code) = cmd_check(2, 3, 2, TriangleType::Type1);
        assert_eq!(code, EXIT_ABSENT);
        let (_, code) = cmd_check(2, 4, 5, TriangleType::Type1);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn verify_theorem_exit_codes() {
        let (records, code) = cmd_verify_theorem(2, 16, 100);
        assert_eq!(code, EXIT_OK);
        assert_eq!(records.len(), 2); // one hit plus the verdict
        let (_, code) = cmd_verify_theorem(9, 16, 100);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn family_flag_validation() {
        let (_, code) = cmd_family(FamilyArg::F1, Some(1), Some(2), None, None, None);
        assert_eq!(code, EXIT_OK);
        let (records, code) = cmd_family(FamilyArg::F2, Some(1), Some(1), None, None, None);
        assert_eq!(code, EXIT_USAGE);
        assert!(records[0]
            .message
            .as_deref()
            .unwrap()
            .contains("l^2 >= 2*q^2 + 2"));
        let (_, code) = cmd_family(FamilyArg::U, None, None, None, None, None);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn corollary_codes() {
        let (records, code) = cmd_corollary(5, TriangleType::Type1);
        assert_eq!(code, EXIT_OK);
        assert_eq!(records[0].b, Some(12));
        let (_, code) = cmd_corollary(4, TriangleType::Type1);
        assert_eq!(code, EXIT_USAGE);
    }
}
