//! Command-line front end: parameter-grid computations and the verification
//! suites, with deterministic JSON/CSV/text output. Everything funnels
//! through [`run`], which returns captured output and an exit code so tests
//! can drive the CLI without spawning a process.
//!
//! Exit codes: 0 on success / all checks pass, 1 on a verification or table
//! mismatch, 2 on a usage error (bad flags or invalid field parameters).

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{APoly, Field, TPoly};
use crate::approximation::{gen_series, wagner_coeff, wagner_product};
use crate::powersums::{phi_degree, twisted_power_sum};
use crate::specialpolys::{l_value, trivial_zero_order, z_brute, z_recursive};
use crate::verify::{run_suites, VerifyParams};
use crate::Result;

/// Result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Parser, Debug)]
#[command(
    name = "pellarin",
    about = "Exact arithmetic for twisted power sums, special L-polynomials, \
             and Carlitz/Wagner interpolation over F_q[theta]",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Field selection, shared by every subcommand.
#[derive(Args, Debug)]
struct FieldArgs {
    /// Characteristic p (a prime)
    #[arg(long)]
    p: u64,
    /// Extension degree e, so q = p^e
    #[arg(long, default_value_t = 1)]
    e: usize,
    /// Modulus for F_{p^e} over F_p as a comma-separated low-to-high
    /// coefficient list, e.g. 1,1,1 for w^2+w+1; defaults to the
    /// lexicographically smallest monic irreducible
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
}

impl FieldArgs {
    fn field(&self) -> Result<Field> {
        Field::make(self.p, self.e, self.modulus.clone())
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Twisted power sum S_d(chi_t^beta, k) over the monic polynomials of
    /// degree d
    Powersum {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        beta: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Special polynomial z(chi_t^beta, x, -k) in u = x^{-1}, computed by
    /// the recursion and cross-checked against the brute-force sum
    Zpoly {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 0)]
        beta: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// L-value L(chi_t^beta, -k) = z(chi_t^beta, 1, -k), with trivial-zero
    /// classification
    Lvalue {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 0)]
        beta: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Scan the (beta, k) grid for trivial zeros and their orders
    Zeros {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 4)]
        max_beta: u64,
        #[arg(long, default_value_t = 6)]
        max_k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Wagner coefficients b_d(chi_t), checked against the closed product
    /// over (t - theta^{q^l})
    Wagner {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 3)]
        max_d: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Table of exact degrees: the digit formula phi(beta, k) against the
    /// brute-force degree of z(chi_t^beta, x, -k)
    DegreeTable {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 2)]
        max_beta: u64,
        #[arg(long, default_value_t = 2)]
        max_k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Power-sum generating series: coefficients of 1/z^{k+1} in
    /// M_d(chi_t^beta)(z) / e_shift(d)(z), checked against the direct sums
    Genseries {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        beta: u64,
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the invariant suites and report per-suite counts and failures
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 2)]
        max_d: usize,
        #[arg(long, default_value_t = 10)]
        max_k: u64,
        #[arg(long, default_value_t = 4)]
        max_beta: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Run the CLI on an argument vector (including the program name). Never
/// panics on bad input; parse and domain errors surface as exit code 2.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap uses "success" exits for --help/--version
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                return Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                };
            }
            return Outcome {
                stdout: String::new(),
                stderr: rendered,
                code,
            };
        }
    };
    match dispatch(cli.command) {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e),
            code: 2,
        },
    }
}

fn field_json(fd: &Field) -> Value {
    json!({"p": fd.p, "e": fd.e, "modulus": fd.modulus})
}

/// A flat table with a fixed column order, renderable in all three formats.
struct Table {
    command: &'static str,
    header: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    fn render(&self, fd: &Field, format: Format) -> String {
        match format {
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut obj = serde_json::Map::new();
                        for (key, value) in self.header.iter().zip(row) {
                            obj.insert((*key).to_string(), value.clone());
                        }
                        Value::Object(obj)
                    })
                    .collect();
                let doc = json!({
                    "field": field_json(fd),
                    "command": self.command,
                    "rows": rows,
                });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            }
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer.write_record(&self.header).expect("in-memory write");
                for row in &self.rows {
                    let record: Vec<String> = row.iter().map(csv_cell).collect();
                    writer.write_record(&record).expect("in-memory write");
                }
                String::from_utf8(writer.into_inner().expect("in-memory flush"))
                    .expect("utf8 output")
            }
            Format::Text => {
                let mut out = format!(
                    "{} over F_{} (p={}, e={})\n",
                    self.command,
                    fd.q(),
                    fd.p,
                    fd.e
                );
                for row in &self.rows {
                    let line: Vec<String> = self
                        .header
                        .iter()
                        .zip(row)
                        .map(|(key, value)| format!("{}={}", key, text_cell(value)))
                        .collect();
                    out.push_str(&line.join(" "));
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// CSV cells: scalars plain, everything structured as its JSON string.
fn csv_cell(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::Null => String::new(),
        other => serde_json::to_string(other).expect("serializable"),
    }
}

fn text_cell(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => serde_json::to_string(other).expect("serializable"),
    }
}

/// Human-readable polynomial in one variable with APoly coefficients,
/// highest term first, e.g. "(theta^2+2)*t^2 + theta*t + 1".
fn fmt_tpoly(f: &TPoly, var: &str, fd: &Field) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (i, coeff) in f.0.iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        let c = fmt_apoly(coeff, fd);
        let needs_parens = c.contains('+') || c.contains(' ');
        let term = match (i, c.as_str()) {
            (0, _) => c.clone(),
            (_, "1") => power(var, i),
            _ if needs_parens => format!("({})*{}", c, power(var, i)),
            _ => format!("{}*{}", c, power(var, i)),
        };
        terms.push(term);
    }
    terms.join(" + ")
}

fn fmt_apoly(f: &APoly, fd: &Field) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (i, coeff) in f.0.iter().enumerate().rev() {
        if fd.is_zero(coeff) {
            continue;
        }
        let c = fmt_fq(coeff, fd);
        let term = match (i, c.as_str()) {
            (0, _) => c.clone(),
            (_, "1") => power("theta", i),
            _ if c.contains('+') => format!("({})*{}", c, power("theta", i)),
            _ => format!("{}*{}", c, power("theta", i)),
        };
        terms.push(term);
    }
    terms.join("+")
}

fn fmt_fq(c: &crate::algebra::FqElem, fd: &Field) -> String {
    if fd.e == 1 {
        return c.0.first().copied().unwrap_or(0).to_string();
    }
    let mut terms = Vec::new();
    for (i, digit) in c.0.iter().enumerate().rev() {
        if *digit == 0 {
            continue;
        }
        let term = match (i, digit) {
            (0, d) => d.to_string(),
            (_, 1) => power("w", i),
            (_, d) => format!("{}*{}", d, power("w", i)),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn power(var: &str, i: usize) -> String {
    if i == 1 {
        var.to_string()
    } else {
        format!("{}^{}", var, i)
    }
}

fn poly_value(f: &TPoly) -> Value {
    serde_json::to_value(f).expect("serializable")
}

fn degree_value(d: Option<usize>) -> Value {
    match d {
        Some(n) => json!(n as i64),
        None => json!(-1),
    }
}

fn dispatch(command: Command) -> Result<(String, i32)> {
    match command {
        Command::Powersum {
            field,
            d,
            beta,
            k,
            format,
        } => {
            let fd = field.field()?;
            let s = twisted_power_sum(&fd, d, beta, k)?;
            let table = Table {
                command: "powersum",
                header: vec!["d", "beta", "k", "result", "pretty"],
                rows: vec![vec![
                    json!(d),
                    json!(beta),
                    json!(k),
                    poly_value(&s),
                    json!(fmt_tpoly(&s, "t", &fd)),
                ]],
            };
            Ok((table.render(&fd, format), 0))
        }
        Command::Zpoly {
            field,
            beta,
            k,
            format,
        } => {
            let fd = field.field()?;
            let rec = z_recursive(&fd, beta, k)?;
            let brute = z_brute(&fd, beta, k)?;
            let matches = rec.z == brute.z;
            let coeffs: Vec<Value> = rec.z.0.iter().map(poly_value).collect();
            let pretty: Vec<String> = rec
                .z
                .0
                .iter()
                .enumerate()
                .map(|(i, c)| format!("u^{}: {}", i, fmt_tpoly(c, "t", &fd)))
                .collect();
            let table = Table {
                command: "zpoly",
                header: vec!["beta", "k", "degree", "coeffs", "match", "pretty"],
                rows: vec![vec![
                    json!(beta),
                    json!(k),
                    degree_value(rec.z.degree_u()),
                    Value::Array(coeffs),
                    json!(matches),
                    json!(pretty.join("; ")),
                ]],
            };
            Ok((table.render(&fd, format), if matches { 0 } else { 1 }))
        }
        Command::Lvalue {
            field,
            beta,
            k,
            format,
        } => {
            let fd = field.field()?;
            let value = l_value(&fd, beta, k)?;
            // trivial zeros live at strictly negative integers -k
            let order = if k >= 1 { trivial_zero_order(&fd, beta, k)? } else { 0 };
            let table = Table {
                command: "lvalue",
                header: vec!["beta", "k", "value", "trivial_zero", "order", "pretty"],
                rows: vec![vec![
                    json!(beta),
                    json!(k),
                    poly_value(&value),
                    json!(value.is_zero()),
                    json!(order),
                    json!(fmt_tpoly(&value, "t", &fd)),
                ]],
            };
            Ok((table.render(&fd, format), 0))
        }
        Command::Zeros {
            field,
            max_beta,
            max_k,
            format,
        } => {
            let fd = field.field()?;
            let q = fd.q();
            let mut rows = Vec::new();
            let mut mismatch = false;
            for beta in 0..=max_beta {
                for k in 1..=max_k {
                    let value = l_value(&fd, beta, k)?;
                    let order = trivial_zero_order(&fd, beta, k)?;
                    let predicted = (beta + k) % (q - 1).max(1) == 0;
                    let agrees = predicted == value.is_zero() && (!predicted || order == 1);
                    mismatch |= !agrees;
                    rows.push(vec![
                        json!(beta),
                        json!(k),
                        json!(value.is_zero()),
                        json!(order),
                        json!(predicted),
                        json!(agrees),
                    ]);
                }
            }
            let table = Table {
                command: "zeros",
                header: vec!["beta", "k", "zero", "order", "predicted", "match"],
                rows,
            };
            Ok((table.render(&fd, format), i32::from(mismatch)))
        }
        Command::Wagner {
            field,
            max_d,
            format,
        } => {
            let fd = field.field()?;
            let mut rows = Vec::new();
            let mut mismatch = false;
            for d in 1..=max_d {
                let wd = wagner_coeff(&fd, d)?;
                let product = wagner_product(&fd, d);
                let matches = wd.b == product;
                mismatch |= !matches;
                rows.push(vec![
                    json!(d),
                    poly_value(&wd.b),
                    poly_value(&wd.m0),
                    json!(matches),
                    json!(fmt_tpoly(&wd.b, "t", &fd)),
                ]);
            }
            let table = Table {
                command: "wagner",
                header: vec!["d", "b", "m0", "match", "pretty"],
                rows,
            };
            Ok((table.render(&fd, format), i32::from(mismatch)))
        }
        Command::DegreeTable {
            field,
            max_beta,
            max_k,
            format,
        } => {
            let fd = field.field()?;
            let mut rows = Vec::new();
            let mut mismatch = false;
            for beta in 1..=max_beta {
                for k in 1..=max_k {
                    let phi = phi_degree(&fd, beta, k);
                    let brute = z_brute(&fd, beta, k)?.z.degree_u();
                    let matches = brute == Some(phi as usize);
                    mismatch |= !matches;
                    rows.push(vec![
                        json!(beta),
                        json!(k),
                        json!(phi),
                        degree_value(brute),
                        json!(matches),
                    ]);
                }
            }
            let table = Table {
                command: "degree-table",
                header: vec!["beta", "k", "phi", "brute", "match"],
                rows,
            };
            Ok((table.render(&fd, format), i32::from(mismatch)))
        }
        Command::Genseries {
            field,
            d,
            beta,
            n,
            format,
        } => {
            let fd = field.field()?;
            let series = gen_series(&fd, d, beta, n)?;
            let mut rows = Vec::new();
            let mut mismatch = false;
            for (k, coeff) in series.iter().enumerate() {
                let direct = twisted_power_sum(&fd, d, beta, k as u64)?;
                let matches = *coeff == direct;
                mismatch |= !matches;
                rows.push(vec![
                    json!(k),
                    poly_value(coeff),
                    json!(matches),
                    json!(fmt_tpoly(coeff, "t", &fd)),
                ]);
            }
            let table = Table {
                command: "genseries",
                header: vec!["k", "coeff", "match", "pretty"],
                rows,
            };
            Ok((table.render(&fd, format), i32::from(mismatch)))
        }
        Command::Verify {
            field,
            suite,
            max_d,
            max_k,
            max_beta,
            seed,
            format,
        } => {
            let fd = field.field()?;
            let params = VerifyParams {
                max_d,
                max_k,
                max_beta,
                seed,
            };
            let reports = run_suites(&fd, &suite, &params)?;
            let all_pass = reports.iter().all(|r| r.status == "pass");
            let out = match format {
                Format::Json => {
                    let doc = json!({
                        "field": field_json(&fd),
                        "command": "verify",
                        "suite": suite,
                        "seed": seed,
                        "reports": reports,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
                }
                Format::Csv => {
                    let mut writer = csv::Writer::from_writer(Vec::new());
                    writer
                        .write_record(["suite", "cases", "failures", "status"])
                        .expect("in-memory write");
                    for r in &reports {
                        writer
                            .write_record([
                                r.suite.clone(),
                                r.cases.to_string(),
                                r.failures.len().to_string(),
                                r.status.clone(),
                            ])
                            .expect("in-memory write");
                    }
                    String::from_utf8(writer.into_inner().expect("in-memory flush"))
                        .expect("utf8 output")
                }
                Format::Text => {
                    let mut out = format!(
                        "verify over F_{} (p={}, e={}), seed {}\n",
                        fd.q(),
                        fd.p,
                        fd.e,
                        seed
                    );
                    for r in &reports {
                        out.push_str(&format!(
                            "{}: {} cases, {} failures [{}]\n",
                            r.suite,
                            r.cases,
                            r.failures.len(),
                            r.status
                        ));
                        for f in &r.failures {
                            out.push_str(&format!(
                                "  FAIL {} expected={} actual={}\n",
                                f.inputs, f.expected, f.actual
                            ));
                        }
                    }
                    out.push_str(if all_pass { "overall: pass\n" } else { "overall: fail\n" });
                    out
                }
            };
            Ok((out, i32::from(!all_pass)))
        }
    }
}
