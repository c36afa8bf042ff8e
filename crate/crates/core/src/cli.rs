//! Command-line front end: argument definitions and output rendering.
//!
//! Rendering is a pure function of the parsed arguments so the binary only has to
//! print what [`execute`] returns.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::fib::FibTable;
use crate::rep::decompose;
use crate::sets::{elements_up_to, first_elements, membership, SetId};
use crate::step::{classify_step, step};
use crate::verify::{
    check_bound, check_extrema, check_partition, check_table1, check_zk, check_zpair,
    classify_extremum, density_gap_from, sweep_counts, DensityGap, Mismatch, SweepReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "zeckstep",
    version,
    about = "Zeckendorf summand counts of consecutive integers"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    pub format: OutputFormat,

    /// Omit the CSV header row
    #[arg(long, global = true)]
    pub no_header: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zeckendorf decomposition of N
    Decompose { n: u64 },
    /// f(n), its sign, the shape of L at n+1 and the closed-form sets holding n
    Classify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Enumerate a closed-form set
    Sets {
        set: SetKind,
        /// Parameter of zk / zpair (k >= 2)
        #[arg(long)]
        k: Option<u32>,
        /// Largest element to list
        #[arg(long, conflicts_with = "count")]
        limit: Option<u64>,
        /// Number of elements to list
        #[arg(long)]
        count: Option<u64>,
    },
    /// Run a verification sweep over [1, N]
    Verify {
        check: CheckName,
        #[arg(long = "n", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Density tolerance (default 2/sqrt(N))
        #[arg(long)]
        tolerance: Option<f64>,
        /// Restrict zk / zpair to a single k
        #[arg(long)]
        k: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetKind {
    S1,
    S2,
    S3,
    Zk,
    Zpair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Table1,
    Partition,
    Extrema,
    Bound,
    Density,
    Zk,
    Zpair,
    All,
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(e)
    }
}

/// Runs a parsed command. `progress` enables start/finish notes for sweeps on stderr.
pub fn execute(cli: &Cli, progress: bool) -> Outcome {
    let out = Output {
        format: cli.format,
        header: !cli.no_header,
    };
    let result = match &cli.command {
        Command::Decompose { n } => out.decompose(*n),
        Command::Classify { n } => out.classify(*n),
        Command::Sets {
            set,
            k,
            limit,
            count,
        } => out.sets(*set, *k, *limit, *count),
        Command::Verify {
            check,
            n,
            tolerance,
            k,
        } => return out.verify(*check, *n, *tolerance, *k, progress),
    };
    result.unwrap_or_else(Outcome::from)
}

struct Output {
    format: OutputFormat,
    header: bool,
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("records serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct DecomposeRecord {
    n: u64,
    indices: Vec<u32>,
    values: Vec<u64>,
    #[serde(rename = "L")]
    l: usize,
}

#[derive(Serialize)]
struct ClassifyRecord {
    n: u64,
    f: i32,
    step_class: &'static str,
    extremum: &'static str,
    sets: Vec<String>,
}

#[derive(Serialize)]
struct SetRecord {
    set: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    elements: Vec<u64>,
}

#[derive(Serialize)]
struct CheckRecord {
    check: &'static str,
    n: u64,
    up: u64,
    down: u64,
    flat: u64,
    density_up: String,
    density_down: String,
    density_flat: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    gaps: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tolerance: Option<f64>,
    mismatch_total: u64,
    mismatches: Vec<Mismatch>,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyRecord {
    passed: bool,
    checks: Vec<CheckRecord>,
}

impl CheckRecord {
    fn from_report(r: SweepReport) -> Self {
        let passed = r.passed();
        CheckRecord {
            check: r.check,
            n: r.limit,
            up: r.count_up,
            down: r.count_down,
            flat: r.count_flat,
            density_up: r.density_up.to_string(),
            density_down: r.density_down.to_string(),
            density_flat: r.density_flat.to_string(),
            gaps: None,
            tolerance: None,
            mismatch_total: r.mismatch_total,
            mismatches: r.mismatches,
            passed,
        }
    }

    fn with_density(mut self, gap: &DensityGap, tolerance: f64) -> Self {
        self.check = "density";
        self.gaps = Some(gap.gaps_f64());
        self.tolerance = Some(tolerance);
        self.passed = self.passed && gap.within_f64(tolerance);
        self
    }
}

impl Output {
    fn csv_header(&self, s: &mut String, header: &str) {
        if self.header {
            s.push_str(header);
            s.push('\n');
        }
    }

    fn decompose(&self, n: u64) -> Result<Outcome, Error> {
        let table = FibTable::shared();
        let rep = decompose(n, table)?;
        let values: Vec<u64> = rep
            .indices()
            .iter()
            .map(|&k| table.values()[k as usize])
            .collect();
        let rec = DecomposeRecord {
            n,
            indices: rep.indices().to_vec(),
            values,
            l: rep.len(),
        };
        let mut s = String::new();
        match self.format {
            OutputFormat::Plain => {
                let _ = writeln!(s, "n: {}", rec.n);
                let _ = writeln!(s, "indices: {}", join(&rec.indices));
                let _ = writeln!(s, "values: {}", join(&rec.values));
                let _ = writeln!(s, "L: {}", rec.l);
            }
            OutputFormat::Csv => {
                self.csv_header(&mut s, "n,indices,values,L");
                let _ = writeln!(
                    s,
                    "{},\"{}\",\"{}\",{}",
                    rec.n,
                    join(&rec.indices),
                    join(&rec.values),
                    rec.l
                );
            }
            OutputFormat::Json => s = json_line(&rec),
        }
        Ok(Outcome::ok(s))
    }

    fn classify(&self, n: u64) -> Result<Outcome, Error> {
        let f = step(n)?;
        let class = classify_step(n)?;
        let shape = classify_extremum(n + 1)?;
        let mut sets = Vec::new();
        for set in [SetId::S1, SetId::S2, SetId::S3] {
            if membership(set, n)? {
                sets.push(set.to_string());
            }
        }
        let rec = ClassifyRecord {
            n,
            f,
            step_class: class.as_str(),
            extremum: shape.as_str(),
            sets,
        };
        let mut s = String::new();
        match self.format {
            OutputFormat::Plain => {
                let _ = writeln!(s, "n: {}", rec.n);
                let _ = writeln!(s, "f: {}", rec.f);
                let _ = writeln!(s, "step_class: {}", rec.step_class);
                let _ = writeln!(s, "extremum: {} at {}", rec.extremum, n + 1);
                let sets = if rec.sets.is_empty() {
                    "none".to_string()
                } else {
                    join(&rec.sets)
                };
                let _ = writeln!(s, "sets: {sets}");
            }
            OutputFormat::Csv => {
                self.csv_header(&mut s, "n,f,step_class,extremum,sets");
                let _ = writeln!(
                    s,
                    "{},{},{},{},\"{}\"",
                    rec.n,
                    rec.f,
                    rec.step_class,
                    rec.extremum,
                    join(&rec.sets)
                );
            }
            OutputFormat::Json => s = json_line(&rec),
        }
        Ok(Outcome::ok(s))
    }

    fn sets(
        &self,
        kind: SetKind,
        k: Option<u32>,
        limit: Option<u64>,
        count: Option<u64>,
    ) -> Result<Outcome, Error> {
        let set = match (kind, k) {
            (SetKind::S1, None) => SetId::S1,
            (SetKind::S2, None) => SetId::S2,
            (SetKind::S3, None) => SetId::S3,
            (SetKind::Zk, Some(k)) => SetId::Z(k),
            (SetKind::Zpair, Some(k)) => SetId::Zpair(k),
            (SetKind::Zk | SetKind::Zpair, None) => {
                return Ok(Outcome::usage("--k is required for zk and zpair"))
            }
            (_, Some(_)) => return Ok(Outcome::usage("--k only applies to zk and zpair")),
        };
        let elements = match (limit, count) {
            (Some(limit), None) => elements_up_to(set, limit)?,
            (None, Some(count)) => {
                let count = usize::try_from(count)
                    .map_err(|_| Error::range("--count", count, usize::MAX as u64))?;
                first_elements(set, count)?
            }
            _ => {
                return Ok(Outcome::usage(
                    "exactly one of --limit or --count is required",
                ))
            }
        };
        let rec = SetRecord {
            set: set.to_string(),
            k,
            elements,
        };
        let mut s = String::new();
        match self.format {
            OutputFormat::Plain => {
                let _ = writeln!(s, "{}", join(&rec.elements));
            }
            OutputFormat::Csv => {
                self.csv_header(&mut s, "element");
                for e in &rec.elements {
                    let _ = writeln!(s, "{e}");
                }
            }
            OutputFormat::Json => s = json_line(&rec),
        }
        Ok(Outcome::ok(s))
    }

    fn verify(
        &self,
        check: CheckName,
        n: u64,
        tolerance: Option<f64>,
        k: Option<u32>,
        progress: bool,
    ) -> Outcome {
        let checks: &[CheckName] = match check {
            CheckName::All => &[
                CheckName::Table1,
                CheckName::Partition,
                CheckName::Extrema,
                CheckName::Bound,
                CheckName::Density,
                CheckName::Zk,
                CheckName::Zpair,
            ],
            _ => std::slice::from_ref(&check),
        };
        if k.is_some() && !matches!(check, CheckName::Zk | CheckName::Zpair) {
            return Outcome::usage("--k only applies to the zk and zpair checks");
        }
        let tolerance = tolerance.unwrap_or_else(|| DensityGap::default_tolerance(n));
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Outcome::usage("--tolerance must be a positive number");
        }
        let mut records = Vec::new();
        let mut stderr = String::new();
        for &c in checks {
            let name = format!("{c:?}").to_lowercase();
            if progress {
                eprintln!("zeckstep: {name} over [1, {n}]...");
            }
            let report = match c {
                CheckName::Table1 => check_table1(n).map(CheckRecord::from_report),
                CheckName::Partition => check_partition(n).map(CheckRecord::from_report),
                CheckName::Extrema => check_extrema(n).map(CheckRecord::from_report),
                CheckName::Bound => check_bound(n).map(CheckRecord::from_report),
                CheckName::Density => sweep_counts(n).map(|r| {
                    let gap = density_gap_from(&r);
                    CheckRecord::from_report(r).with_density(&gap, tolerance)
                }),
                CheckName::Zk => {
                    check_zk(n, k.map_or(2..=15, |k| k..=k)).map(CheckRecord::from_report)
                }
                CheckName::Zpair => {
                    check_zpair(n, k.map_or(2..=12, |k| k..=k)).map(CheckRecord::from_report)
                }
                CheckName::All => unreachable!(),
            };
            match report {
                Ok(r) => records.push(r),
                Err(e) => return Outcome::from(e),
            }
            if progress {
                eprintln!("zeckstep: {name} done");
            }
        }
        let passed = records.iter().all(|r| r.passed);
        let mut s = String::new();
        match self.format {
            OutputFormat::Plain => {
                for r in &records {
                    let _ = write!(
                        s,
                        "{} n={} up={} down={} flat={}",
                        r.check, r.n, r.up, r.down, r.flat
                    );
                    if let (Some(g), Some(t)) = (r.gaps, r.tolerance) {
                        let _ = write!(
                            s,
                            " gap_up={:e} gap_down={:e} gap_flat={:e} tolerance={:e}",
                            g[0], g[1], g[2], t
                        );
                    }
                    let verdict = if r.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, " mismatches={} {verdict}", r.mismatch_total);
                    for m in &r.mismatches {
                        let _ =
                            writeln!(s, "  n={}: expected {}, got {}", m.n, m.expected, m.actual);
                    }
                }
            }
            OutputFormat::Csv => {
                self.csv_header(
                    &mut s,
                    "check,n,up,down,flat,gap_up,gap_down,gap_flat,tolerance,mismatches,passed",
                );
                for r in &records {
                    let (g, t) = match (r.gaps, r.tolerance) {
                        (Some(g), Some(t)) => (
                            [g[0], g[1], g[2]].map(|x| format!("{x:e}")),
                            format!("{t:e}"),
                        ),
                        _ => (Default::default(), String::new()),
                    };
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{},{},{},{},{},{},{}",
                        r.check,
                        r.n,
                        r.up,
                        r.down,
                        r.flat,
                        g[0],
                        g[1],
                        g[2],
                        t,
                        r.mismatch_total,
                        r.passed
                    );
                }
            }
            OutputFormat::Json => {
                s = json_line(&VerifyRecord {
                    passed,
                    checks: records,
                })
            }
        }
        if !passed {
            stderr.push_str("verification failed\n");
        }
        Outcome {
            stdout: s,
            stderr,
            code: if passed { EXIT_OK } else { EXIT_MISMATCH },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("zeckstep").chain(args.iter().copied()))
            .expect("valid arguments");
        execute(&cli, false)
    }

    #[test]
    fn decompose_csv() {
        let out = run(&["decompose", "100", "--format", "csv"]);
        assert_eq!(
            out.stdout,
            "n,indices,values,L\n100,\"4 6 11\",\"3 8 89\",3\n"
        );
        assert_eq!(out.code, 0);
        let out = run(&["decompose", "13", "--format", "csv", "--no-header"]);
        assert_eq!(out.stdout, "13,\"7\",\"13\",1\n");
    }

    #[test]
    fn decompose_zero() {
        let out = run(&["decompose", "0", "--format", "json"]);
        assert_eq!(
            out.stdout,
            "{\"n\":0,\"indices\":[],\"values\":[],\"L\":0}\n"
        );
        let out = run(&["decompose", "0"]);
        assert_eq!(out.stdout, "n: 0\nindices: \nvalues: \nL: 0\n");
    }

    #[test]
    fn classify_records() {
        let out = run(&["classify", "3", "--format", "json"]);
        assert_eq!(
            out.stdout,
            "{\"n\":3,\"f\":1,\"step_class\":\"up\",\"extremum\":\"peak\",\"sets\":[\"S1\",\"S3\"]}\n"
        );
        let out = run(&["classify", "4", "--format", "csv", "--no-header"]);
        assert_eq!(out.stdout, "4,-1,down,divot,\"S2\"\n");
        let out = run(&["classify", "1"]);
        assert_eq!(
            out.stdout,
            "n: 1\nf: 0\nstep_class: flat\nextremum: none at 2\nsets: none\n"
        );
    }

    #[test]
    fn sets_lists() {
        assert_eq!(run(&["sets", "s1", "--limit", "10"]).stdout, "3 5 8\n");
        assert_eq!(
            run(&["sets", "zk", "--k", "3", "--limit", "10"]).stdout,
            "2 7 10\n"
        );
        assert_eq!(run(&["sets", "s3", "--count", "3"]).stdout, "3 11 16\n");
        assert_eq!(
            run(&["sets", "zpair", "--k", "2", "--limit", "20", "--format", "json"]).stdout,
            "{\"set\":\"Z(2,4)\",\"k\":2,\"elements\":[4,12,17]}\n"
        );
        assert_eq!(
            run(&["sets", "s2", "--limit", "12", "--format", "csv"]).stdout,
            "element\n4\n7\n12\n"
        );
    }

    #[test]
    fn sets_usage_errors() {
        assert_eq!(run(&["sets", "zk", "--limit", "10"]).code, EXIT_USAGE);
        assert_eq!(
            run(&["sets", "s1", "--k", "3", "--limit", "10"]).code,
            EXIT_USAGE
        );
        assert_eq!(run(&["sets", "s1"]).code, EXIT_USAGE);
        assert_eq!(
            run(&["sets", "zk", "--k", "1", "--limit", "10"]).code,
            EXIT_USAGE
        );
        assert!(
            Cli::try_parse_from(["zeckstep", "sets", "s1", "--limit", "3", "--count", "3"])
                .is_err()
        );
    }

    #[test]
    fn verify_runs() {
        let out = run(&["verify", "table1", "--n", "1000"]);
        assert_eq!(out.code, 0);
        assert_eq!(
            out.stdout,
            "table1 n=1000 up=382 down=236 flat=382 mismatches=0 PASS\n"
        );
        let out = run(&["verify", "all", "--n", "2000", "--format", "csv"]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert_eq!(out.stdout.lines().count(), 8);
        let out = run(&["verify", "density", "--n", "10", "--tolerance", "0.07"]);
        assert_eq!(out.code, EXIT_MISMATCH);
        let out = run(&["verify", "table1", "--n", "10000", "--format", "json"]);
        assert_eq!(out.code, EXIT_MISMATCH);
        assert!(out.stdout.contains("\"mismatch_total\":1"));
    }

    #[test]
    fn verify_usage_errors() {
        assert!(Cli::try_parse_from(["zeckstep", "verify", "partition", "--n", "0"]).is_err());
        assert!(Cli::try_parse_from(["zeckstep", "verify", "nonsense", "--n", "5"]).is_err());
        assert_eq!(run(&["verify", "extrema", "--n", "2"]).code, EXIT_USAGE);
        assert_eq!(
            run(&["verify", "bound", "--n", "5", "--k", "3"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            run(&["verify", "density", "--n", "5", "--tolerance=-1"]).code,
            EXIT_USAGE
        );
    }

    #[test]
    fn output_is_deterministic() {
        let a = run(&["verify", "all", "--n", "5000", "--format", "json"]);
        let b = run(&["verify", "all", "--n", "5000", "--format", "json"]);
        assert_eq!(a, b);
    }
}
