//! Command-line front end. [`run`] does all the work and returns what the
//! binary should print, so it can be driven from tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arithmetic;
use crate::error::Error;
use crate::finite_ring::{big_json, FiniteRing, StructureReport};
use crate::group_analysis;
use crate::ring_core::{derive_arities, PolyInt, RingDescriptor};
use crate::tables;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_FORBIDDEN: i32 = 2;
pub const EXIT_NOT_A_FIELD: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "polyadic", version, about = "Polyadic integer rings and finite polyadic fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
    Text,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Pair {
    #[arg(long, allow_negative_numbers = true)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Arities and the parameters I, J.
    Arity {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Descriptor of the infinite ring; classifies each `--x`.
    Ring {
        #[command(flatten)]
        pair: Pair,
        #[arg(long = "x", allow_negative_numbers = true)]
        xs: Vec<BigInt>,
        #[arg(long, default_value_t = 3)]
        lmax: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Polyadic primes in `[x_-kmax, x_kmax]` of a limiting ring.
    Primes {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        kmax: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Polyadic Euler function.
    Euler {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        kmax: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Polyadic division without remainder.
    Divide {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, allow_negative_numbers = true)]
        dividend: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        divisor: BigInt,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Polyadic division with remainder.
    Remainder {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, allow_negative_numbers = true)]
        dividend: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        divisor: BigInt,
        #[arg(long, default_value_t = 64)]
        radius: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Structure report of a finite ring.
    Finite {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Subgroup decomposition of a finite field.
    Group {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Regenerate a classification table, or every golden file with `--out`.
    Table {
        #[arg(long, default_value = "T2")]
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full listing of one exotic field.
    Appendix {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Structure reports of every allowed ring as JSON lines, ordered by `(b, a, q)`.
    Scan {
        #[arg(long)]
        bmax: u64,
        #[arg(long)]
        qmax: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ForbiddenPair { .. } => EXIT_FORBIDDEN,
        Error::NotAField { .. } => EXIT_NOT_A_FIELD,
        Error::InvalidClass { .. }
        | Error::NotInClass { .. }
        | Error::InvalidOrder { .. }
        | Error::UnknownFieldId { .. }
        | Error::NotLimiting { .. }
        | Error::ZeroElement
        | Error::InadmissibleLength { .. } => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

type CmdResult = std::result::Result<String, Outcome>;

fn lift<T>(r: crate::Result<T>) -> std::result::Result<T, Outcome> {
    r.map_err(|e| Outcome::fail(exit_code(&e), format!("error: {e}")))
}

fn descriptor(p: Pair) -> std::result::Result<RingDescriptor, Outcome> {
    lift(derive_arities(p.a, p.b).and_then(|_| RingDescriptor::new(p.a, p.b)))
}

fn line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(format: Format) -> std::result::Result<(), Outcome> {
    if format == Format::Csv {
        return Err(Outcome::fail(EXIT_USAGE, "error: csv output is only available for `table`"));
    }
    Ok(())
}

fn values(xs: &[PolyInt]) -> Vec<Value> {
    xs.iter().map(|x| big_json(&x.value)).collect()
}

fn joined(xs: &[PolyInt]) -> String {
    let v: Vec<String> = xs.iter().map(|x| x.value.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

/// Parse `argv` (including the program name) and execute.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(s) => Outcome::ok(s),
        Err(o) => o,
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Arity { pair, format } => arity(pair, format),
        Command::Ring { pair, xs, lmax, format } => ring(pair, &xs, lmax, format),
        Command::Primes { pair, kmax, format } => primes(pair, kmax, format),
        Command::Euler { pair, kmax, format } => euler(pair, kmax, format),
        Command::Divide { pair, dividend, divisor, format } => divide(pair, dividend, divisor, format),
        Command::Remainder { pair, dividend, divisor, radius, format } => {
            remainder(pair, dividend, divisor, radius, format)
        }
        Command::Finite { pair, q, format } => finite(pair, q, format),
        Command::Group { pair, q, format } => group(pair, q, format),
        Command::Table { name, format, out } => table(&name, format, out),
        Command::Appendix { pair, q, format } => appendix(pair, q, format),
        Command::Scan { bmax, qmax, out } => scan(bmax, qmax, out),
    }
}

fn arity(pair: Pair, format: Format) -> CmdResult {
    no_csv(format)?;
    let d = descriptor(pair)?;
    Ok(match format {
        Format::Json => line(&json!({"a": d.a, "b": d.b, "m": d.m, "n": d.n, "I": d.i, "J": big_json(&d.j)})),
        _ => format!("{{\"m\":{},\"n\":{},\"I\":{},\"J\":{}}}\n", d.m, d.n, d.i, d.j),
    })
}

fn ring(pair: Pair, xs: &[BigInt], lmax: u64, format: Format) -> CmdResult {
    no_csv(format)?;
    let d = descriptor(pair)?;
    let elems: Vec<PolyInt> = xs.iter().map(|x| lift(d.from_value(x.clone()))).collect::<Result<_, _>>()?;
    let kind = match arithmetic::primality_kind(&d) {
        arithmetic::Primality::Strict => "prime",
        arithmetic::Primality::Irreducible => "irreducible",
    };
    let units = arithmetic::units(&d);
    let mut rows = Vec::new();
    for x in &elems {
        let simple = lift(arithmetic::is_prime_or_irreducible(x))?;
        let factors = if x.value == BigInt::from(0) {
            Vec::new()
        } else {
            lift(arithmetic::composition_set(x, lmax))?.factors
        };
        rows.push((x, simple, factors));
    }
    let coprime = if elems.len() >= 2 { Some(lift(arithmetic::are_coprime(&elems, lmax))?) } else { None };
    match format {
        Format::Json => {
            let xs: Vec<Value> = rows
                .iter()
                .map(|(x, p, f)| json!({"x": big_json(&x.value), "k": big_json(&x.k), kind: p, "factors": values(f)}))
                .collect();
            let units: Vec<Value> = units.iter().map(big_json).collect();
            Ok(line(&json!({
                "a": d.a, "b": d.b, "m": d.m, "n": d.n, "I": d.i, "J": big_json(&d.j),
                "label": d.label(), "limiting": d.is_limiting(), "units": units,
                "elements": xs, "coprime": coprime,
            })))
        }
        _ => {
            let mut s = format!("{}\n", d.label());
            let u: Vec<String> = units.iter().map(BigInt::to_string).collect();
            let _ = writeln!(s, "I = {}, J = {}, units = {{{}}}, limiting = {}", d.i, d.j, u.join(", "), d.is_limiting());
            for (x, p, f) in &rows {
                let _ = writeln!(s, "x = {} (k = {}): {} = {}, D(x) = {}", x.value, x.k, kind, p, joined(f));
            }
            if let Some(c) = coprime {
                let _ = writeln!(s, "coprime = {c}");
            }
            Ok(s)
        }
    }
}

fn primes(pair: Pair, kmax: u64, format: Format) -> CmdResult {
    no_csv(format)?;
    let d = descriptor(pair)?;
    let scan = lift(arithmetic::prime_scan(&d, kmax))?;
    Ok(match format {
        Format::Json => line(&json!({
            "a": d.a, "b": d.b, "kmax": kmax, "pi": scan.pi,
            "primes": values(&scan.primes), "delta": values(&scan.delta),
        })),
        _ => format!(
            "{} kmax={}\npi = {}\nprimes = {}\ndelta = {}\n",
            d.label(),
            kmax,
            scan.pi,
            joined(&scan.primes),
            joined(&scan.delta)
        ),
    })
}

fn euler(pair: Pair, kmax: u64, format: Format) -> CmdResult {
    no_csv(format)?;
    let d = descriptor(pair)?;
    let scan = lift(arithmetic::euler_scan(&d, kmax))?;
    Ok(match format {
        Format::Json => line(&json!({"a": d.a, "b": d.b, "kmax": kmax, "phi": scan.phi, "set": values(&scan.set)})),
        _ => format!("{} kmax={}\nphi = {}\nset = {}\n", d.label(), kmax, scan.phi, joined(&scan.set)),
    })
}

fn divide(pair: Pair, dividend: BigInt, divisor: BigInt, format: Format) -> CmdResult {
    no_csv(format)?;
    let d = descriptor(pair)?;
    let x1 = lift(d.from_value(dividend))?;
    let x2 = lift(d.from_value(divisor))?;
    let q = lift(arithmetic::polyadic_divide(&x1, &x2))?;
    Ok(match format {
        Format::Json => line(&json!({"quotient": q.as_ref().map(|q| big_json(&q.value))})),
        _ => format!("{}\n", q.map(|q| q.value.to_string()).unwrap_or_else(|| "none".into())),
    })
}

fn remainder(pair: Pair, dividend: BigInt, divisor: BigInt, radius: u64, format: Format) -> CmdResult {
    no_csv(format)?;
    let d = descriptor(pair)?;
    let x1 = lift(d.from_value(dividend))?;
    let x2 = lift(d.from_value(divisor))?;
    let pairs = lift(arithmetic::divide_with_remainder(&x1, &x2, radius))?;
    Ok(match format {
        Format::Json => {
            let v: Vec<Value> = pairs.iter().map(|(q, r)| json!([big_json(&q.value), big_json(&r.value)])).collect();
            line(&json!({"pairs": v}))
        }
        _ => pairs.iter().map(|(q, r)| format!("{} {}\n", q.value, r.value)).collect(),
    })
}

fn finite_ring(pair: Pair, q: u64) -> std::result::Result<FiniteRing, Outcome> {
    let d = descriptor(pair)?;
    lift(FiniteRing::new(d, q))
}

fn report_text(r: &StructureReport) -> String {
    let ring = &r.ring;
    let reps = |ks: &[u64]| -> String {
        let v: Vec<String> = ks.iter().map(|&k| ring.rep(k).to_string()).collect();
        format!("{{{}}}", v.join(", "))
    };
    let opt = |o: Option<u64>| o.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
    let mut s = format!("{}\n", ring.label());
    let _ = writeln!(s, "elements = {}", reps(&ring.elements()));
    let _ = writeln!(s, "zero = {}", r.zero.map(|z| ring.rep(z).to_string()).unwrap_or_else(|| "none".into()));
    let _ = writeln!(s, "units = {}", reps(&r.units));
    let _ = writeln!(s, "field = {}", r.is_field);
    let _ = writeln!(s, "chi_p = {}", opt(r.chi_p));
    let _ = writeln!(s, "lambda_p = {}", opt(r.lambda_p));
    let _ = writeln!(s, "q* = {}, n-admissible = {}", r.q_star, r.n_admissible);
    let ords: Vec<String> = r.element_orders.iter().map(|(k, l)| format!("{}:{}", ring.rep(*k), l)).collect();
    let _ = writeln!(s, "orders = {}", ords.join(" "));
    s
}

fn finite(pair: Pair, q: u64, format: Format) -> CmdResult {
    no_csv(format)?;
    let ring = finite_ring(pair, q)?;
    let r = lift(ring.structure_report())?;
    Ok(match format {
        Format::Json => line(&r.to_json()),
        _ => report_text(&r),
    })
}

fn group(pair: Pair, q: u64, format: Format) -> CmdResult {
    no_csv(format)?;
    let ring = finite_ring(pair, q)?;
    let g = lift(group_analysis::decompose(&ring))?;
    Ok(match format {
        Format::Json => line(&g.to_json()),
        _ => {
            let reps = |ks: &[u64]| -> String {
                let v: Vec<String> = ks.iter().map(|&k| ring.rep(k).to_string()).collect();
                format!("{{{}}}", v.join(", "))
            };
            let mut s = format!("{}\n", ring.label());
            for (i, sg) in g.subgroups.iter().enumerate() {
                let _ = writeln!(s, "G{} = {}", i + 1, reps(sg));
            }
            let _ = writeln!(s, "E(G) = {}", reps(&g.unit_subgroup));
            let _ = writeln!(
                s,
                "split = {}, covers = {}, covers_with_units = {}, disjoint = {}",
                g.unit_subgroup_split, g.covers, g.covers_with_units, g.pairwise_disjoint
            );
            let _ = writeln!(s, "primitive = {} (kappa_prim = {})", reps(&g.primitive_elements), g.kappa_prim);
            s
        }
    })
}

fn write_file(path: &std::path::Path, text: &str) -> std::result::Result<(), Outcome> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Outcome::fail(EXIT_FAILURE, format!("error: {}: {e}", dir.display())))?;
    }
    std::fs::write(path, text).map_err(|e| Outcome::fail(EXIT_FAILURE, format!("error: {}: {e}", path.display())))
}

fn table(name: &str, format: Format, out: Option<PathBuf>) -> CmdResult {
    if let Some(dir) = out {
        let files = lift(tables::render_all())?;
        let mut listing = String::new();
        for (name, text) in &files {
            let p = dir.join(name);
            write_file(&p, text)?;
            let _ = writeln!(listing, "{}", p.display());
        }
        return Ok(listing);
    }
    let fmt = match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Md | Format::Text => "md",
    };
    match tables::render_table(name, fmt) {
        Some(r) => lift(r),
        None => Err(Outcome::fail(EXIT_USAGE, format!("error: unknown table `{name}` (expected T0, T1 or T2)"))),
    }
}

fn appendix(pair: Pair, q: u64, format: Format) -> CmdResult {
    no_csv(format)?;
    descriptor(pair)?;
    let l = lift(tables::generate_appendix(pair.a, pair.b, q))?;
    Ok(match format {
        Format::Json => {
            let products: Vec<Value> = l.products.iter().map(|(w, p)| json!({"factors": w, "product": p})).collect();
            let quer: Vec<Value> = l.mult_querelements.iter().map(|(x, qs)| json!({"x": x, "querelements": qs})).collect();
            let mut report = l.report.to_json();
            report["products"] = json!(products);
            report["mult_querelements"] = json!(quer);
            report["add_querelements"] = json!(l.add_querelements.iter().map(|(x, t)| json!([x, t])).collect::<Vec<_>>());
            report["decomposition"] = l.decomposition.to_json();
            line(&report)
        }
        _ => l.to_markdown(),
    })
}

/// JSON lines for every allowed `(a, b)` with `b <= bmax` and `2 <= q <= qmax`.
pub fn scan_lines(bmax: u64, qmax: u64) -> crate::Result<String> {
    let mut cells: Vec<(u64, u64, u64)> = tables::allowed_pairs(bmax)
        .into_iter()
        .flat_map(|(a, b)| (2..=qmax).map(move |q| (a, b, q)))
        .collect();
    cells.sort_by_key(|&(a, b, q)| (b, a, q));
    let lines: Vec<crate::Result<String>> = cells
        .par_iter()
        .map(|&(a, b, q)| Ok(line(&FiniteRing::from_pair(a, b, q)?.structure_report()?.to_json())))
        .collect();
    lines.into_iter().collect()
}

fn scan(bmax: u64, qmax: u64, out: Option<PathBuf>) -> CmdResult {
    let text = lift(scan_lines(bmax, qmax))?;
    match out {
        Some(p) => {
            write_file(&p, &text)?;
            Ok(format!("{}\n", p.display()))
        }
        None => Ok(text),
    }
}
