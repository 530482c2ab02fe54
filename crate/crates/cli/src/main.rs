use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qhodge_core::calculi;
use qhodge_core::exterior::Exterior;
use qhodge_core::hodge::{basis_label, Contraction, Family, Hodge};
use qhodge_core::scalars::{parse_gauss, GaussRat, RatFunc};
use qhodge_core::sphere;
use qhodge_core::verify::{self, Check, Status};

type R = RatFunc;

#[derive(Parser)]
#[command(name = "qhodge", version, about = "Exact Hodge theory on quantum SU(2) and the Podles sphere")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the acceptance checks
    Verify(VerifyArgs),
    /// Export a Hodge operator table as JSON
    Table {
        #[command(subcommand)]
        what: TableCmd,
    },
    /// Export sigma, A2 or A3 as a JSON matrix
    Matrix {
        #[arg(long, value_parser = calc_id)]
        calculus: u8,
        #[arg(long, value_enum)]
        object: Object,
        #[arg(long, default_value = "+", value_parser = one_sign)]
        sign: i8,
    },
    /// Sphere computations
    Sphere {
        #[command(subcommand)]
        what: SphereCmd,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// all or 1..7
    #[arg(long, default_value = "all", value_parser = calc_set)]
    calculus: CalcSet,
    /// both, + or -
    #[arg(long, default_value = "both", value_parser = sign_filter)]
    sign: SignFilter,
    /// evaluate at this q = p/r (s = q^(1/2) must be rational)
    #[arg(long, value_parser = q_point)]
    q: Option<QPoint>,
    /// criterion numbers or names, comma separated
    #[arg(long, value_delimiter = ',', value_parser = criterion)]
    check: Vec<u8>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum TableCmd {
    Hodge {
        #[arg(long, value_parser = calc_id)]
        calculus: u8,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, default_value = "+", value_parser = one_sign)]
        sign: i8,
    },
}

#[derive(Subcommand)]
enum SphereCmd {
    /// Whether the squared sphere Hodge operator is scalar on one-forms
    Probe {
        #[arg(long)]
        all: bool,
        #[arg(long, value_parser = calc_id)]
        calculus: Option<u8>,
        #[arg(long, default_value = "+", value_parser = one_sign)]
        sign: i8,
    },
    /// Matrix of the normalized sphere Laplacian on independent monomials
    Laplacian {
        #[arg(long, alias = "calculus", value_parser = calc_id)]
        calc: u8,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value = "+", value_parser = one_sign)]
        sign: i8,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Sigma,
    A2,
    A3,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    #[value(name = "S")]
    S,
    #[value(name = "T")]
    T,
}

#[derive(Clone)]
struct CalcSet(Vec<u8>);

#[derive(Clone, Copy)]
struct SignFilter(Option<i8>);

#[derive(Clone)]
struct QPoint {
    q: GaussRat,
    s: GaussRat,
}

fn calc_id(s: &str) -> Result<u8, String> {
    let id: u8 = s.parse().map_err(|_| format!("not a calculus id: {s}"))?;
    calculi::check(id).map_err(|e| e.to_string())?;
    Ok(id)
}

fn calc_set(s: &str) -> Result<CalcSet, String> {
    if s == "all" {
        return Ok(CalcSet(calculi::ALL.to_vec()));
    }
    Ok(CalcSet(vec![calc_id(s)?]))
}

fn one_sign(s: &str) -> Result<i8, String> {
    match s {
        "+" | "plus" | "1" => Ok(1),
        "-" | "minus" | "-1" => Ok(-1),
        _ => Err(format!("sign must be + or -, got {s}")),
    }
}

fn sign_filter(s: &str) -> Result<SignFilter, String> {
    if s == "both" {
        return Ok(SignFilter(None));
    }
    one_sign(s).map(|x| SignFilter(Some(x)))
}

fn criterion(s: &str) -> Result<u8, String> {
    verify::criterion_by_name(s).ok_or_else(|| format!("unknown check group: {s}"))
}

fn q_point(s: &str) -> Result<QPoint, String> {
    let q = parse_gauss(s).map_err(|e| e.to_string())?;
    if !q.is_real() || q.is_zero() || q.is_one() || (-&q).is_one() {
        return Err(format!("q must be a real rational other than 0 and ±1, got {s}"));
    }
    let s = q.sqrt().ok_or_else(|| format!("q = {q} has no rational square root"))?;
    Ok(QPoint { q, s })
}

#[derive(Serialize)]
struct Report<'a> {
    calculi: &'a [u8],
    sign: &'static str,
    q: Option<String>,
    passed: bool,
    summary: Vec<Value>,
    checks: &'a [Check],
    elapsed_ms: u128,
}

fn render_text(checks: &[Check], summary: &[(u8, usize, usize, usize)]) -> String {
    let mut out = String::new();
    for c in checks {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        let sign = verify::sign_name(c.sign);
        out += &format!("calc {} [{:>2}] {}{} {}: {}\n", c.calculus, c.criterion, c.name, if sign.is_empty() { String::new() } else { format!(" ({sign})") }, status, c.witness);
    }
    out += "\n";
    for (n, p, f, s) in summary {
        let name = verify::CRITERIA.iter().find(|(k, _)| k == n).map(|(_, x)| *x).unwrap_or("");
        let verdict = if *f == 0 { "PASS" } else { "FAIL" };
        out += &format!("criterion {n:>2} {name:<17} {verdict} ({p} passed, {f} failed, {s} skipped)\n");
    }
    out
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut o = std::io::stdout().lock();
            o.write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn cmd_verify(a: VerifyArgs) -> Result<bool, String> {
    let start = Instant::now();
    let criteria: Vec<u8> = if a.check.is_empty() { (1..=11).collect() } else { a.check.clone() };
    let checks = match &a.q {
        None => verify::run(&a.calculus.0, &criteria, &verify::default_points()),
        Some(p) => verify::run_at(&a.calculus.0, &criteria, &p.s).map_err(|e| e.to_string())?,
    };
    let checks = verify::keep_sign(checks, a.sign.0);
    let summary = verify::summary(&checks);
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    let text = match a.format {
        Format::Text => render_text(&checks, &summary),
        Format::Json => {
            let report = Report {
                calculi: &a.calculus.0,
                sign: match a.sign.0 {
                    None => "both",
                    Some(s) => verify::sign_name(Some(s)),
                },
                q: a.q.as_ref().map(|p| p.q.to_string()),
                passed,
                summary: summary
                    .iter()
                    .map(|(n, p, f, s)| json!({"criterion": n, "passed": p, "failed": f, "skipped": s}))
                    .collect(),
                checks: &checks,
                elapsed_ms: start.elapsed().as_millis(),
            };
            serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n"
        }
    };
    emit(&text, a.out.as_deref())?;
    Ok(passed)
}

fn cmd_table(id: u8, op: Op, sign: i8) -> Result<Value, String> {
    let h = Hodge::<R>::new(id, sign, Contraction::symbolic()).map_err(|e| e.to_string())?;
    let fam = match op {
        Op::S => Family::S,
        Op::T => Family::T,
    };
    let mut rows = Vec::new();
    for k in 0..=3 {
        let cols = h.op_matrix(fam, k).map_err(|e| e.to_string())?;
        for (i, col) in cols.iter().enumerate() {
            let output: Vec<Value> = col
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| json!({"form": basis_label(3 - k, j), "coefficient": c.render()}))
                .collect();
            rows.push(json!({"input": basis_label(k, i), "output": output}));
        }
    }
    Ok(json!({"calculus": id, "op": match op { Op::S => "S", Op::T => "T" }, "sign": verify::sign_name(Some(sign)), "rows": rows}))
}

fn cmd_matrix(id: u8, object: Object, sign: i8) -> Result<Value, String> {
    let e = Exterior::<R>::new(id, sign).map_err(|e| e.to_string())?;
    let (name, m) = match object {
        Object::Sigma => ("sigma", e.sigma.clone()),
        Object::A2 => ("a2", e.a2.clone()),
        Object::A3 => ("a3", e.a3.clone()),
    };
    // row i holds the image of the i-th basis tensor
    let rows: Vec<Vec<String>> = (0..m.cols()).map(|j| m.col(j).iter().map(|x| x.to_q_string()).collect()).collect();
    Ok(json!({"calculus": id, "object": name, "sign": verify::sign_name(Some(sign)), "matrix": rows}))
}

fn cmd_probe(ids: &[u8], sign: i8) -> Result<Value, String> {
    let mut map = serde_json::Map::new();
    for &id in ids {
        if !sphere::is_projectable(id).map_err(|e| e.to_string())? {
            continue;
        }
        let p = sphere::probe::<R>(id, sign).map_err(|e| e.to_string())?;
        map.insert(id.to_string(), Value::Bool(p));
    }
    Ok(Value::Object(map))
}

fn cmd_laplacian(id: u8, degree: u32, sign: i8) -> Result<Value, String> {
    if !matches!(id, 1 | 2 | 4 | 5) {
        return Err(format!("calculus {id}: the sphere Hodge operator needs a calculus in {{1, 2, 4, 5}}"));
    }
    let (lap, w) = sphere::normalized_laplacian::<R>(id, sign).map_err(|e| e.to_string())?;
    let basis = sphere::independent_monomials::<R>(degree);
    let elems: Vec<_> = basis.iter().map(|(_, f)| f.clone()).collect();
    let mut rows = Vec::new();
    for f in &elems {
        let img = lap.apply_weighted(&w, f).map_err(|e| e.to_string())?;
        let c = sphere::coordinates(&elems, &img).map_err(|e| e.to_string())?;
        rows.push(c.iter().map(|x| x.to_q_string()).collect::<Vec<_>>());
    }
    Ok(json!({
        "calculus": id,
        "sign": verify::sign_name(Some(sign)),
        "degree": degree,
        "basis": basis.iter().map(|(e, _)| sphere::monomial_label(*e)).collect::<Vec<_>>(),
        "matrix": rows,
    }))
}

fn print_json(v: &Value) -> Result<(), String> {
    emit(&(serde_json::to_string_pretty(v).map_err(|e| e.to_string())? + "\n"), None)
}

fn threads() {
    if let Some(n) = std::env::var("QHODGE_THREADS").ok().and_then(|s| s.parse::<usize>().ok()).filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    threads();
    let res = match cli.cmd {
        Cmd::Verify(a) => cmd_verify(a).map(|ok| if ok { 0 } else { 1 }),
        Cmd::Table { what: TableCmd::Hodge { calculus, op, sign } } => cmd_table(calculus, op, sign).and_then(|v| print_json(&v)).map(|_| 0),
        Cmd::Matrix { calculus, object, sign } => cmd_matrix(calculus, object, sign).and_then(|v| print_json(&v)).map(|_| 0),
        Cmd::Sphere { what: SphereCmd::Probe { all, calculus, sign } } => {
            let ids = match (all, calculus) {
                (_, Some(id)) => vec![id],
                (true, None) => calculi::ALL.to_vec(),
                (false, None) => {
                    eprintln!("error: pass --all or --calculus N");
                    return ExitCode::from(2);
                }
            };
            cmd_probe(&ids, sign).and_then(|v| print_json(&v)).map(|_| 0)
        }
        Cmd::Sphere { what: SphereCmd::Laplacian { calc, degree, sign } } => {
            cmd_laplacian(calc, degree, sign).and_then(|v| print_json(&v)).map(|_| 0)
        }
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
