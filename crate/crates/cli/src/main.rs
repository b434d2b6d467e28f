mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use ramastir::algebra::Rat;
use ramastir::numeric::{self, Target, Verdict};
use ramastir::sequences::{cross_check, Sequence};
use ramastir::triangles::{Triangle, TriangleKind};
use ramastir::verifier::{self, CheckReport, Outcome};

use output::{write_records, Format, Record};

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;
const UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(name = "ramastir", version, about = "Exact tables and identity checks for Stirling-type coefficient sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a sequence over an index range
    Table {
        name: String,
        from: usize,
        to: usize,
        #[arg(value_enum, default_value_t)]
        format: Format,
        /// Method tag; the default method is used when absent
        #[arg(long)]
        method: Option<String>,
    },
    /// Print rows up to `rows` of a triangle
    Triangle {
        kind: String,
        rows: usize,
        #[arg(value_enum, default_value_t)]
        format: Format,
    },
    /// Run one identity check, or `all`
    Check {
        id: String,
        /// Largest index checked; overrides RAMASTIR_MAX_ORDER and the defaults
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Compare every method of a sequence up to an index
    Cross { name: String, max: usize },
    /// Compare an asymptotic expansion with an exact enclosure
    Validate {
        target: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        terms: usize,
        /// Enclosure width budget, e.g. 1e-40 or 1/1000
        #[arg(long)]
        eps: Option<String>,
    },
}

/// A message for stderr and the exit code that goes with it.
struct Exit(u8, String);

fn usage(msg: impl ToString) -> Exit {
    Exit(USAGE, msg.to_string())
}

fn io_err(e: io::Error) -> Exit {
    Exit(FAIL, format!("write failed: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Table { name, from, to, format, method } => {
            table(&mut out, &name, from, to, format, method.as_deref())
        }
        Command::Triangle { kind, rows, format } => triangle(&mut out, &kind, rows, format),
        Command::Check { id, max_order } => check(&mut out, &id, max_order),
        Command::Cross { name, max } => cross(&mut out, &name, max),
        Command::Validate { target, n, terms, eps } => validate(&mut out, &target, n, terms, eps.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("ramastir: {msg}");
            ExitCode::from(code)
        }
    }
}

fn table(
    out: &mut impl Write,
    name: &str,
    from: usize,
    to: usize,
    format: Format,
    method: Option<&str>,
) -> Result<u8, Exit> {
    let seq: Sequence = name.parse().map_err(usage)?;
    if from > to {
        return Err(usage(format!("empty range {from}..{to}")));
    }
    let mut records = Vec::with_capacity(to - from + 1);
    for n in from..=to {
        let v = seq.value(n, method).map_err(usage)?;
        records.push(Record {
            n,
            k: None,
            value: v.value.to_string(),
            method: method.map(|_| v.method.to_string()),
        });
    }
    write_records(out, &records, format).map_err(io_err)?;
    Ok(PASS)
}

fn triangle(out: &mut impl Write, kind: &str, rows: usize, format: Format) -> Result<u8, Exit> {
    let kind: TriangleKind = kind.parse().map_err(usage)?;
    let t = Triangle::new(kind);
    let mut records = Vec::new();
    for n in kind.first_row()..=rows {
        for (k, v) in t.row(n).map_err(usage)? {
            records.push(Record { n, k: Some(k), value: v.to_string(), method: None });
        }
    }
    write_records(out, &records, format).map_err(io_err)?;
    Ok(PASS)
}

fn env_max_order() -> Result<Option<usize>, Exit> {
    match std::env::var("RAMASTIR_MAX_ORDER") {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| usage(format!("RAMASTIR_MAX_ORDER={s:?} is not an index"))),
        Err(_) => Ok(None),
    }
}

fn print_report(out: &mut impl Write, r: &CheckReport) -> io::Result<()> {
    let ms = r.elapsed.as_secs_f64() * 1e3;
    match &r.outcome {
        Outcome::Pass => writeln!(out, "{}\tpass\tmax={}\t{ms:.1}ms", r.id, r.max_index),
        Outcome::Fail(f) => {
            let idx: Vec<String> = f.index.iter().map(i64::to_string).collect();
            writeln!(
                out,
                "{}\tfail\tmax={}\t{ms:.1}ms\tindex=({})\tlhs={}\trhs={}",
                r.id,
                r.max_index,
                idx.join(","),
                f.lhs,
                f.rhs
            )
        }
    }
}

fn check(out: &mut impl Write, id: &str, max_order: Option<usize>) -> Result<u8, Exit> {
    let max = match max_order {
        Some(m) => Some(m),
        None => env_max_order()?,
    };
    let reports = if id == "all" {
        match max {
            Some(m) => verifier::run_all(m),
            None => verifier::run_all_default(),
        }
    } else {
        let r = match max {
            Some(m) => verifier::run_check(id, m),
            None => verifier::run_check_default(id),
        };
        vec![r.map_err(usage)?]
    };
    for r in &reports {
        print_report(out, r).map_err(io_err)?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        eprintln!("ramastir: {failed} of {} checks failed", reports.len());
        return Ok(FAIL);
    }
    Ok(PASS)
}

fn cross(out: &mut impl Write, name: &str, max: usize) -> Result<u8, Exit> {
    let seq: Sequence = name.parse().map_err(usage)?;
    let methods = seq.methods();
    if methods.len() < 2 {
        return Err(usage(format!("{seq} has a single method ({})", methods[0])));
    }
    match cross_check(seq, max) {
        Ok(()) => {
            writeln!(out, "{seq}\tagree\tmax={max}\tmethods={}", methods.join(",")).map_err(io_err)?;
            Ok(PASS)
        }
        Err(d) => {
            writeln!(
                out,
                "{seq}\tdisagree\tindex={}\t{}={}\t{}={}",
                d.index, d.first.method, d.first.value, d.second.method, d.second.value
            )
            .map_err(io_err)?;
            Ok(FAIL)
        }
    }
}

/// Parses `p/q`, a decimal, or `m e x` scientific notation exactly.
fn parse_rat(s: &str) -> Option<Rat> {
    if let Ok(r) = s.parse::<Rat>() {
        return Some(r);
    }
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac) = mant.split_once('.').unwrap_or((mant, ""));
    let digits: BigInt = format!("{int_part}{frac}").parse().ok()?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    Some(if shift >= 0 {
        Rat::from_integer(digits * ten.pow(shift as u32))
    } else {
        Rat::new(digits, ten.pow((-shift) as u32))
    })
}

fn validate(out: &mut impl Write, target: &str, n: u32, terms: usize, eps: Option<&str>) -> Result<u8, Exit> {
    let target: Target = target.parse().map_err(usage)?;
    let eps = match eps {
        Some(s) => parse_rat(s).ok_or_else(|| usage(format!("cannot parse eps {s:?}")))?,
        None => numeric::default_eps(),
    };
    let rep = numeric::validate_expansion(target, n, terms, &eps).map_err(usage)?;
    let verdict = match rep.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Undecided => "undecided",
    };
    let write = |out: &mut dyn Write| -> io::Result<()> {
        writeln!(out, "target\t{}", rep.target)?;
        writeln!(out, "n\t{}", rep.n)?;
        writeln!(out, "terms\t{}", rep.terms)?;
        writeln!(out, "exact\t{}", rep.exact)?;
        writeln!(out, "exact_width\t{:.3e}", rep.exact.width_f64())?;
        writeln!(out, "error\t{}", rep.error)?;
        writeln!(out, "bound\t{:.17e}", num_traits::ToPrimitive::to_f64(&rep.bound).unwrap_or(f64::NAN))?;
        writeln!(out, "verdict\t{verdict}")
    };
    write(out).map_err(io_err)?;
    Ok(match rep.verdict {
        Verdict::Pass => PASS,
        Verdict::Fail => FAIL,
        Verdict::Undecided => {
            eprintln!("ramastir: enclosure too wide to decide; try a smaller --eps");
            UNDECIDED
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramastir::algebra::rat;

    #[test]
    fn eps_forms() {
        assert_eq!(parse_rat("1/1000"), Some(rat(1, 1000)));
        assert_eq!(parse_rat("1e-3"), Some(rat(1, 1000)));
        assert_eq!(parse_rat("2.5e-1"), Some(rat(1, 4)));
        assert_eq!(parse_rat("0.125"), Some(rat(1, 8)));
        assert_eq!(parse_rat("3e2"), Some(rat(300, 1)));
        assert_eq!(parse_rat("x"), None);
    }
}
