//! `abelquad` command-line front end.
//!
//! Exit codes: 0 on success, 2 for argument errors, 3 when the engine reports
//! an internal invariant violation. Output goes to the supplied writer,
//! diagnostics to the error writer; nothing depends on the environment.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::chow::{chern_total_tangent_quadric, f_closed};
use crate::error::Error;
use crate::feasibility::{
    circle_solutions, eliminate, elimination_table, explain, EliminationRecord, Point,
};
use crate::sequences::fine_comparison_report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Hard cap on `d` for `fd`, `table` and `eliminate`.
pub const MAX_D: u32 = 10_000;
pub const MAX_CHERN_DIM: u32 = 1_000;
pub const MAX_CIRCLE_D: u32 = 200;
pub const MAX_FINE: u32 = 1_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "abelquad",
    version,
    about = "Abelian varieties in even-dimensional quadrics, by exact computation"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Top normal-bundle Chern coefficient F_d
    Fd {
        #[arg(long, conflicts_with = "range", required_unless_present = "range")]
        d: Option<u32>,
        /// Inclusive range, e.g. 1..5
        #[arg(long)]
        range: Option<String>,
    },
    /// Total Chern class of the tangent bundle of the n-dimensional quadric
    Chern {
        #[arg(long)]
        dim: u32,
    },
    /// Integer solutions of a^2 + b^2 = F_d (a + b)
    Circle {
        #[arg(long)]
        d: u32,
    },
    /// Elimination verdicts for d = 1..=max-d
    Table {
        #[arg(long = "max-d")]
        max_d: u32,
    },
    /// Elimination record for one dimension
    Eliminate {
        #[arg(long)]
        d: u32,
        /// Print the step-by-step trail instead of the record
        #[arg(long)]
        explain: bool,
    },
    /// F_d next to the Fine numbers
    Fine {
        #[arg(long = "max")]
        n_max: u32,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

/// Process exit code for an engine error: bad input maps to 2, anything else
/// is an internal invariant violation.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_) | Error::Budget { .. } => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match exit_code(&e) {
            EXIT_USAGE => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(format!("write failed: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(format!("csv: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(format!("json: {e}"))
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Fd { d, range } => {
            let (lo, hi) = match (d, range) {
                (Some(d), _) => (*d, *d),
                (None, Some(r)) => parse_range(r)?,
                (None, None) => {
                    return Err(Failure::Usage("one of --d or --range is required".into()))
                }
            };
            check_bounds("d", lo, 1, MAX_D)?;
            check_bounds("d", hi, 1, MAX_D)?;
            cmd_fd(lo, hi, fmt, out)
        }
        Command::Chern { dim } => {
            check_bounds("--dim", *dim, 1, MAX_CHERN_DIM)?;
            cmd_chern(*dim, fmt, out)
        }
        Command::Circle { d } => {
            check_bounds("--d", *d, 1, MAX_CIRCLE_D)?;
            cmd_circle(*d, fmt, out)
        }
        Command::Table { max_d } => {
            check_bounds("--max-d", *max_d, 3, MAX_D)?;
            cmd_table(*max_d, fmt, out)
        }
        Command::Eliminate { d, explain } => {
            check_bounds("--d", *d, 1, MAX_D)?;
            cmd_eliminate(*d, *explain, fmt, out)
        }
        Command::Fine { n_max } => {
            check_bounds("--max", *n_max, 1, MAX_FINE)?;
            cmd_fine(*n_max, fmt, out)
        }
    }
}

fn check_bounds(name: &str, v: u32, lo: u32, hi: u32) -> CmdResult {
    if v < lo || v > hi {
        return Err(Failure::Usage(format!(
            "{name} must lie in {lo}..={hi}, got {v}"
        )));
    }
    Ok(())
}

fn parse_range(s: &str) -> std::result::Result<(u32, u32), Failure> {
    let bad = || Failure::Usage(format!("bad range {s:?}, expected A..B with A <= B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// Writes rows as aligned text, json (one document) or csv.
struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: Vec<&'static str>) -> Self {
        Table {
            header,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn write_text(&self, out: &mut dyn Write) -> CmdResult {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|i| {
                self.rows
                    .iter()
                    .map(|r| r[i].len())
                    .chain(std::iter::once(self.header[i].len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: Vec<&str>| {
            let mut s = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            s.push('\n');
            s
        };
        out.write_all(line(self.header.clone()).as_bytes())?;
        for r in &self.rows {
            out.write_all(line(r.iter().map(String::as_str).collect()).as_bytes())?;
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut dyn Write) -> CmdResult {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn write_json(value: &impl serde::Serialize, out: &mut dyn Write) -> CmdResult {
    serde_json::to_writer_pretty(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn num(v: &BigInt) -> serde_json::Value {
    // arbitrary_precision keeps every digit
    serde_json::Value::Number(
        v.to_string()
            .parse()
            .expect("integers are valid JSON numbers"),
    )
}

fn cmd_fd(lo: u32, hi: u32, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let values = crate::par::map_range(lo..=hi, f_closed)
        .into_iter()
        .collect::<crate::Result<Vec<_>>>()?;
    let rows = (lo..=hi).zip(values);
    match fmt {
        OutputFormat::Json => {
            let doc: Vec<_> = rows
                .map(|(d, f)| json!({ "d": d, "f_d": num(&f) }))
                .collect();
            write_json(&doc, out)
        }
        _ => {
            let mut t = Table::new(vec!["d", "F_d"]);
            for (d, f) in rows {
                t.push(vec![d.to_string(), f.to_string()]);
            }
            emit(&t, fmt, out)
        }
    }
}

fn emit(t: &Table, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    match fmt {
        OutputFormat::Csv => t.write_csv(out),
        _ => t.write_text(out),
    }
}

fn cmd_chern(n: u32, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let c = chern_total_tangent_quadric(n)?;
    match fmt {
        OutputFormat::Json => {
            let coeffs: Vec<_> = c.coeffs().iter().map(num).collect();
            write_json(&json!({ "n": n, "coefficients": coeffs }), out)
        }
        _ => {
            let mut t = Table::new(vec!["k", "c_k"]);
            for (k, v) in c.coeffs().iter().enumerate() {
                t.push(vec![k.to_string(), v.to_string()]);
            }
            emit(&t, fmt, out)
        }
    }
}

fn cmd_circle(d: u32, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let f = f_closed(d)?;
    let sols = circle_solutions(&f)?;
    match fmt {
        OutputFormat::Json => {
            let rows: Vec<_> = sols
                .iter()
                .map(|p| {
                    json!({
                        "a": num(&p.a),
                        "b": num(&p.b),
                        "degree": num(&p.degree()),
                        "effective": p.is_effective(),
                        "positive": p.is_positive(),
                    })
                })
                .collect();
            write_json(&json!({ "d": d, "f_d": num(&f), "solutions": rows }), out)
        }
        _ => {
            let mut t = Table::new(vec!["a", "b", "degree", "effective", "positive"]);
            for p in &sols {
                t.push(vec![
                    p.a.to_string(),
                    p.b.to_string(),
                    p.degree().to_string(),
                    p.is_effective().to_string(),
                    p.is_positive().to_string(),
                ]);
            }
            emit(&t, fmt, out)
        }
    }
}

const TABLE_HEADER: [&str; 6] = ["d", "F_d", "2F_d", "2(d+1)!", "verdict", "rules"];

fn summary_row(r: &EliminationRecord) -> Vec<String> {
    let rules = r
        .rules_applied
        .iter()
        .map(|a| a.rule_id.as_str())
        .collect::<Vec<_>>()
        .join(";");
    vec![
        r.d.to_string(),
        r.f_d.to_string(),
        r.max_degree.to_string(),
        r.min_degree.to_string(),
        r.verdict.as_str().to_string(),
        if rules.is_empty() {
            "-".to_string()
        } else {
            rules
        },
    ]
}

fn cmd_table(max_d: u32, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let records = elimination_table(max_d)?;
    match fmt {
        OutputFormat::Json => write_json(&records, out),
        _ => {
            let mut t = Table::new(TABLE_HEADER.to_vec());
            for r in &records {
                t.push(summary_row(r));
            }
            emit(&t, fmt, out)
        }
    }
}

fn cmd_eliminate(d: u32, with_trail: bool, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let record = eliminate(d)?;
    if with_trail {
        let steps = explain(&record);
        return match fmt {
            OutputFormat::Json => write_json(&json!({ "d": d, "steps": steps }), out),
            OutputFormat::Csv => {
                let mut t = Table::new(vec!["step", "text"]);
                for (i, s) in steps.into_iter().enumerate() {
                    t.push(vec![(i + 1).to_string(), s]);
                }
                t.write_csv(out)
            }
            OutputFormat::Text => {
                for (i, s) in steps.iter().enumerate() {
                    writeln!(out, "{:>2}. {s}", i + 1)?;
                }
                Ok(())
            }
        };
    }
    match fmt {
        OutputFormat::Json => write_json(&record, out),
        OutputFormat::Csv => {
            let mut t = Table::new(TABLE_HEADER.to_vec());
            t.push(summary_row(&record));
            t.write_csv(out)
        }
        OutputFormat::Text => write_record_text(&record, out),
    }
}

fn points(v: &[Point]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(Point::to_string).collect::<Vec<_>>().join(" ")
}

fn write_record_text(r: &EliminationRecord, out: &mut dyn Write) -> CmdResult {
    writeln!(out, "d                     {}", r.d)?;
    writeln!(out, "F_d                   {}", r.f_d)?;
    writeln!(
        out,
        "solutions             {}{}",
        points(&r.all_solutions),
        if r.solutions_exhaustive {
            ""
        } else {
            "  (corners only)"
        }
    )?;
    writeln!(
        out,
        "effective             {}",
        points(&r.effective_solutions)
    )?;
    writeln!(out, "max degree            {}", r.max_degree)?;
    writeln!(
        out,
        "min degree            {}{}",
        r.min_degree,
        if r.min_degree_applies {
            ""
        } else {
            "  (not applied, needs d > 2)"
        }
    )?;
    for c in &r.surviving_candidates {
        let types = c
            .types
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(
            out,
            "candidate             {} degree {} h0 {} types {}",
            c.pair, c.degree, c.h0, types
        )?;
        for t in &c.paper_omitted {
            writeln!(out, "paper-omitted         {t}")?;
        }
    }
    for a in &r.rules_applied {
        let subject = match &a.subject {
            crate::feasibility::RuleSubject::Type(t) => t.to_string(),
            crate::feasibility::RuleSubject::Dimension(d) => format!("d={d}"),
        };
        writeln!(
            out,
            "rule                  {} on {subject}",
            a.rule_id.as_str()
        )?;
    }
    writeln!(out, "verdict               {}", r.verdict.as_str())?;
    Ok(())
}

fn cmd_fine(n_max: u32, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let rows = fine_comparison_report(n_max)?;
    match fmt {
        OutputFormat::Json => write_json(&rows, out),
        _ => {
            let mut t = Table::new(vec!["n", "F_n", "fine(n)"]);
            for r in &rows {
                t.push(vec![r.n.to_string(), r.f_d.to_string(), r.fine.to_string()]);
            }
            emit(&t, fmt, out)
        }
    }
}
