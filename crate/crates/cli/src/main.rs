//! `fflauricella`: evaluate period functions, count points, and run the
//! identity registry from the command line.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 usage or
//! precondition error. Every outcome, including errors, is one record on
//! standard output.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ff_lauricella::appell::{fdn, pdn, AppellParams};
use ff_lauricella::classical::hasse_invariant;
use ff_lauricella::curves::{count_points_formula, count_points_naive, genus_picard, CurveInstance, CurveSpec};
use ff_lauricella::verify::{sweep, IdentityId, Mode, Options, SweepEntry, DEFAULT_SEED, SAMPLE_SIZE};
use ff_lauricella::{Character, Error, PrimeField};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "fflauricella", version, about = "Finite-field Appell-Lauricella functions and identity checks")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sample,
    Auto,
}

#[derive(clap::Args)]
struct PdArgs {
    #[arg(long)]
    p: u64,
    /// Exponent of A against the fixed generator.
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Exponents of B_1, ..., B_n.
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    b: Vec<i64>,
    #[arg(long, allow_negative_numbers = true)]
    c: i64,
    #[arg(long, value_delimiter = ',', required = true)]
    lambda: Vec<u64>,
    /// Read every exponent in units of (p - 1) / N.
    #[arg(long)]
    order: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// P_D^(n)[A; B; C; λ] as a cyclotomic integer.
    EvalPd(PdArgs),
    /// F_D^(n)[A; B; C; λ] as numerator and denominator.
    EvalFd(PdArgs),
    /// Points of y^N = x^i (1-x)^j ∏ (1-λ_t x)^{k_t} over F_p.
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u64>,
        /// Enumerate instead of summing period functions.
        #[arg(long)]
        naive: bool,
    },
    /// Genus of the generalized Picard curve.
    Genus {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u64>,
    },
    /// Hasse invariant of y^3 = x^2 (1-x)(1-(1-s^3)x)(1-(1-t^3)x).
    Hasse {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
    },
    /// Check one identity over a range of primes.
    Verify {
        #[arg(long)]
        id: String,
        /// `A..B` (inclusive) or a single prime.
        #[arg(long)]
        primes: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Sample size for `--mode sample`.
        #[arg(long, default_value_t = SAMPLE_SIZE)]
        count: u64,
        /// Curve orders N used by the point-count identity.
        #[arg(long, value_delimiter = ',')]
        orders: Option<Vec<u64>>,
    },
}

/// A failed run: a library error or a malformed argument.
struct Failure {
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let debug = format!("{e:?}");
        let kind = debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string();
        Failure { kind, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { kind: "Usage".into(), message: message.into() }
}

/// The payload of a successful run; `passed = false` maps to exit 1.
struct Success {
    fields: Map<String, Value>,
    rows: Vec<Value>,
    passed: bool,
}

impl Success {
    fn single(fields: Value) -> Self {
        let Value::Object(fields) = fields else { unreachable!("payloads are objects") };
        Success { rows: vec![Value::Object(fields.clone())], fields, passed: true }
    }
}

fn characters<'f>(f: &'f PrimeField, args: &PdArgs) -> Result<(Character<'f>, Vec<Character<'f>>, Character<'f>), Failure> {
    let unit = match args.order {
        Some(n) if n == 0 || f.order() % n != 0 => return Err(Error::OrderDoesNotDivide { order: n, p: f.p() }.into()),
        Some(n) => (f.order() / n) as i64,
        None => 1,
    };
    let ch = |m: i64| Character::new(f, m * unit);
    Ok((ch(args.a), args.b.iter().map(|&m| ch(m)).collect(), ch(args.c)))
}

fn pd_inputs(args: &PdArgs) -> Value {
    json!({ "p": args.p, "a": args.a, "b": args.b, "c": args.c, "lambda": args.lambda, "order": args.order })
}

fn parse_primes(s: &str) -> Result<(u64, u64), Failure> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| usage(format!("bad prime range `{s}`")));
    match s.split_once("..") {
        Some((lo, hi)) => Ok((num(lo)?, num(hi.trim_start_matches('='))?)),
        None => num(s).map(|p| (p, p)),
    }
}

fn run(command: &Command) -> Result<(Value, Success), Failure> {
    match command {
        Command::EvalPd(args) => {
            let f = PrimeField::new(args.p)?;
            let (a, bs, c) = characters(&f, args)?;
            let value = pdn(&AppellParams::new(a, bs, c, args.lambda.clone())?)?;
            Ok((pd_inputs(args), Success::single(json!({ "value": value }))))
        }
        Command::EvalFd(args) => {
            let f = PrimeField::new(args.p)?;
            let (a, bs, c) = characters(&f, args)?;
            let value = fdn(&AppellParams::new(a, bs, c, args.lambda.clone())?)?;
            let payload = json!({ "numerator": value.numerator(), "denominator": value.denominator() });
            Ok((pd_inputs(args), Success::single(payload)))
        }
        Command::Count { p, n, i, j, k, lambda, naive } => {
            let f = PrimeField::new(*p)?;
            let inst = CurveInstance::new(&f, CurveSpec::new(*n, *i, *j, k.clone())?, lambda.clone())?;
            let count = if *naive { count_points_naive(&inst) } else { count_points_formula(&inst)? };
            let inputs = json!({ "p": p, "N": n, "i": i, "j": j, "k": k, "lambda": lambda, "naive": naive });
            Ok((inputs, Success::single(json!({ "count": count }))))
        }
        Command::Genus { n, i, j, k } => {
            let genus = genus_picard(&CurveSpec::new(*n, *i, *j, k.clone())?)?;
            Ok((json!({ "N": n, "i": i, "j": j, "k": k }), Success::single(json!({ "genus": genus }))))
        }
        Command::Hasse { p, s, t } => {
            let f = PrimeField::new(*p)?;
            let hasse = hasse_invariant(&f, *s, *t)?;
            Ok((json!({ "p": p, "s": s, "t": t }), Success::single(json!({ "hasse": hasse }))))
        }
        Command::Verify { id, primes, mode, seed, count, orders } => {
            let identity: IdentityId = id.parse()?;
            let (lo, hi) = parse_primes(primes)?;
            let mode = match mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Sample => Mode::Sampled { seed: *seed, count: *count },
                ModeArg::Auto => Mode::Auto,
            };
            let mut opts = Options::with_mode(mode);
            if let Some(orders) = orders {
                opts.orders = orders.clone();
            }
            let entries = sweep(identity, lo, hi, &opts)?;
            let passed = entries.iter().filter_map(SweepEntry::report).all(|r| r.passed());
            let rows = entries.iter().map(|e| serde_json::to_value(e).expect("reports serialize")).collect();
            let inputs = json!({ "id": identity, "primes": [lo, hi], "orders": opts.orders });
            let mut fields = Map::new();
            fields.insert("reports".into(), serde_json::to_value(&entries).expect("reports serialize"));
            Ok((inputs, Success { fields, rows, passed }))
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::EvalPd(_) => "eval-pd",
        Command::EvalFd(_) => "eval-fd",
        Command::Count { .. } => "count",
        Command::Genus { .. } => "genus",
        Command::Hasse { .. } => "hasse",
        Command::Verify { .. } => "verify",
    }
}

/// Nested objects become dotted columns; arrays stay as JSON text.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn write_csv(rows: &[Vec<(String, String)>]) -> std::io::Result<()> {
    let mut header: Vec<&str> = Vec::new();
    for (k, _) in rows.iter().flatten() {
        if !header.contains(&k.as_str()) {
            header.push(k);
        }
    }
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    w.write_record(&header)?;
    for row in rows {
        w.write_record(header.iter().map(|h| row.iter().find(|(k, _)| k == h).map_or("", |(_, v)| v.as_str())))?;
    }
    w.flush()
}

fn emit(format: Format, record: &Map<String, Value>, rows: &[Value]) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let mut out = std::io::stdout().lock();
            serde_json::to_writer(&mut out, record)?;
            writeln!(out)
        }
        Format::Csv => {
            let base: Map<String, Value> =
                record.iter().filter(|(k, _)| matches!(k.as_str(), "command" | "status")).map(|(k, v)| (k.clone(), v.clone())).collect();
            let flat: Vec<_> = rows
                .iter()
                .map(|row| {
                    let mut cells = Vec::new();
                    flatten("", &Value::Object(base.clone()), &mut cells);
                    flatten("", row, &mut cells);
                    cells
                })
                .collect();
            write_csv(&flat)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let format = if std::env::args().any(|a| a == "csv") { Format::Csv } else { Format::Json };
            let rendered = e.render().to_string();
            let message: Vec<&str> = rendered.lines().map(str::trim).take_while(|l| !l.starts_with("Usage:")).filter(|l| !l.is_empty()).collect();
            let error = json!({ "kind": "Usage", "message": message.join(" ") });
            let mut record = Map::new();
            record.insert("status".into(), json!("error"));
            record.insert("error".into(), error.clone());
            let _ = emit(format, &record, &[json!({ "error": error })]);
            return ExitCode::from(2);
        }
    };
    let name = command_name(&cli.command);
    let mut record = Map::new();
    record.insert("command".into(), json!(name));
    let (code, rows) = match run(&cli.command) {
        Ok((inputs, success)) => {
            record.insert("inputs".into(), inputs);
            record.extend(success.fields);
            let status = if success.passed { "ok" } else { "fail" };
            record.insert("status".into(), json!(status));
            (if success.passed { 0 } else { 1 }, success.rows)
        }
        Err(failure) => {
            let error = json!({ "kind": failure.kind, "message": failure.message });
            record.insert("status".into(), json!("error"));
            record.insert("error".into(), error.clone());
            (2, vec![json!({ "error": error })])
        }
    };
    if emit(cli.format, &record, &rows).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
