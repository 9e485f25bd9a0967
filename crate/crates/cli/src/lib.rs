//! The `seriesforge` command line: exact counts, tables, generating
//! functions and b-file verification.

pub mod bfile;
pub mod grid;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use seriesforge::labeled::{
    a_polynomials, chain_increasing_polynomials, chain_increasing_series, g_polynomials,
    mobile_series, p_series, ultrametric_series, DegreeSpec,
};
use seriesforge::reference;
use seriesforge::ring::Ring;
use seriesforge::unlabeled::refined_polys;
use seriesforge::weight::json_int;

use crate::bfile::BFile;
use crate::grid::Grid;

pub const MAX_ORDER_ENV: &str = "SERIESFORGE_MAX_ORDER";
pub const DEFAULT_MAX_ORDER: usize = 16;
/// Largest `s` (or `n`) accepted by `count` and `table`.
pub const MAX_SIZE: usize = 40;
pub const MAX_COLORS: u64 = 1000;
/// Symbolic `P` grows quickly with the number of colors.
pub const MAX_P_COLORS: u64 = 16;

#[derive(Parser, Debug)]
#[command(name = "seriesforge", version, about = "Exact counts of multipartite series-reduced trees and related families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print one exact count
    Count {
        #[arg(value_enum)]
        family: Family,
        /// Number of leaves (or chains, or actions)
        #[arg(long)]
        s: usize,
        /// Number of colors
        #[arg(long)]
        m: Option<u64>,
    },
    /// Print a table of counts
    Table {
        #[arg(value_enum)]
        name: TableName,
        #[arg(long)]
        max_s: Option<usize>,
        #[arg(long)]
        max_m: Option<u64>,
        /// Largest leaf count for the triangle
        #[arg(long)]
        max_n: Option<usize>,
        /// Compare against the published values; exit 2 on any difference
        #[arg(long)]
        check_paper: bool,
    },
    /// Print generating-function coefficients up to t^order/order!
    Gf {
        #[arg(value_enum, ignore_case = true)]
        kind: GfKind,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        order: usize,
        /// Vertex weights for P
        #[arg(long, value_enum, default_value_t = WeightSpec::Symbolic)]
        spec: WeightSpec,
        /// Overrides SERIESFORGE_MAX_ORDER
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Compare a family against an OEIS b-file
    Verify {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        bfile: PathBuf,
        /// Overrides SERIESFORGE_MAX_ORDER
        #[arg(long)]
        max_order: Option<usize>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Family {
    Ultrametrics,
    FullyColoredLabeled,
    Mobiles,
    ChainIncreasing,
    Processes,
    Unlabeled,
    MultipartiteUnlabeled,
    FullyColoredUnlabeled,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum TableName {
    Symbolic,
    FullyColoredLabeled,
    Mobiles,
    RiordanTriangle,
    MultipartiteUnlabeled,
    FullyColoredUnlabeled,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum GfKind {
    #[value(name = "P")]
    P,
    #[value(name = "A")]
    A,
    #[value(name = "G")]
    G,
    #[value(name = "Y")]
    Y,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum WeightSpec {
    Symbolic,
    Ones,
    Factorial,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Mismatch(_) => 2,
        }
    }
}

impl From<seriesforge::Error> for CliError {
    fn from(e: seriesforge::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn name_of<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

impl Family {
    fn takes_m(self) -> bool {
        !matches!(self, Family::Processes | Family::Unlabeled)
    }

    fn min_m(self) -> u64 {
        if self == Family::ChainIncreasing {
            0
        } else {
            1
        }
    }

    fn check_m(self, m: Option<u64>) -> Result<u64, CliError> {
        let name = name_of(self);
        match (self.takes_m(), m) {
            (false, Some(_)) => Err(usage(format!("{name} does not take --m"))),
            (false, None) => Ok(0),
            (true, None) => Err(usage(format!("{name} needs --m"))),
            (true, Some(m)) if m < self.min_m() || m > MAX_COLORS => Err(usage(format!(
                "{name}: --m must be in {}..={MAX_COLORS}",
                self.min_m()
            ))),
            (true, Some(m)) => Ok(m),
        }
    }

    /// The family's values for `s = 1..=max_s`.
    pub fn values(self, m: u64, max_s: usize) -> Result<Vec<BigInt>, CliError> {
        let mb = BigInt::from(m);
        let eval = |polys: Vec<seriesforge::poly::PolyVar>, at: &BigInt| -> Vec<BigInt> {
            polys.iter().map(|p| p.eval(at)).collect()
        };
        Ok(match self {
            Family::Ultrametrics => eval(a_polynomials(max_s), &mb),
            Family::FullyColoredLabeled => {
                let m1 = mb.clone() - 1;
                eval(a_polynomials(max_s), &mb)
                    .into_iter()
                    .enumerate()
                    .map(|(i, a)| if i == 0 { mb.clone() } else { Ring::pow(&m1, i as u32 + 1) * a })
                    .collect()
            }
            Family::Mobiles => eval(g_polynomials(max_s), &mb),
            Family::ChainIncreasing => eval(chain_increasing_polynomials(max_s), &mb),
            Family::Processes => eval(chain_increasing_polynomials(max_s), &BigInt::from(2)),
            Family::Unlabeled => refined_polys(max_s)?.iter().map(|r| r.total()).collect(),
            Family::MultipartiteUnlabeled => refined_polys(max_s)?
                .iter()
                .map(|r| r.multipartite_polynomial().eval(&mb))
                .collect(),
            Family::FullyColoredUnlabeled => {
                refined_polys(max_s)?.iter().map(|r| r.fully_colored(m)).collect()
            }
        })
    }
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let env_cap = std::env::var(MAX_ORDER_ENV).ok();
    match execute(&cli, env_cap.as_deref(), stderr) {
        Ok(text) => match &cli.output.output {
            Some(path) => match fs::write(path, text) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    1
                }
            },
            None => {
                let _ = stdout.write_all(text.as_bytes());
                0
            }
        },
        Err(e) => {
            let _ = match &e {
                CliError::Usage(msg) => writeln!(stderr, "error: {msg}"),
                CliError::Mismatch(report) => write!(stderr, "{report}"),
            };
            e.exit_code()
        }
    }
}

/// Order cap from `--max-order`, else the environment, else 16.
pub fn max_order(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match env {
        None => Ok(DEFAULT_MAX_ORDER),
        Some(text) => text
            .trim()
            .parse()
            .map_err(|_| usage(format!("{MAX_ORDER_ENV} must be a nonnegative integer, got `{text}`"))),
    }
}

/// Runs the command and returns the text for standard output. Mismatches
/// carry their report; the table itself is still written by `--check-paper`
/// only when everything matches.
pub fn execute(cli: &Cli, env_cap: Option<&str>, stderr: &mut dyn Write) -> Result<String, CliError> {
    let format = cli.output.format;
    match &cli.command {
        Command::Count { family, s, m } => {
            let m = family.check_m(*m)?;
            if !(1..=MAX_SIZE).contains(s) {
                return Err(usage(format!("--s must be in 1..={MAX_SIZE}")));
            }
            let value = family.values(m, *s)?.pop().expect("s >= 1");
            Ok(render_count(*family, *s, family.takes_m().then_some(m), &value, format))
        }
        Command::Table {
            name,
            max_s,
            max_m,
            max_n,
            check_paper,
        } => {
            let computed = build_table(*name, *max_s, *max_m, *max_n)?;
            let text = match format {
                Format::Json => format!("{}\n", computed.to_json()),
                Format::Csv => computed.to_csv(),
                Format::Plain => computed.to_plain(),
            };
            if *check_paper {
                let (bad, compared) = computed.compare(&published_table(*name));
                if !bad.is_empty() {
                    let mut report = format!(
                        "{} of {compared} published cells differ:\n",
                        bad.len()
                    );
                    for b in &bad {
                        report.push_str(&format!(
                            "  {}={}, {}: published {}, computed {}\n",
                            corner_row(&computed.corner),
                            b.row,
                            corner_col(&computed.corner, &b.column),
                            b.published.as_ref().map_or("blank".into(), BigInt::to_string),
                            b.computed.as_ref().map_or("blank".into(), BigInt::to_string),
                        ));
                    }
                    return Err(CliError::Mismatch(report));
                }
                let _ = writeln!(stderr, "check: {compared} published cells match");
            }
            Ok(text)
        }
        Command::Gf {
            kind,
            m,
            order,
            spec,
            max_order: flag,
        } => {
            let cap = max_order(*flag, env_cap)?;
            if *order > cap {
                return Err(usage(format!(
                    "order {order} exceeds the maximum {cap} (raise with --max-order or {MAX_ORDER_ENV})"
                )));
            }
            render_gf(*kind, *m, *order, *spec, format)
        }
        Command::Verify {
            family,
            m,
            bfile,
            max_order: flag,
        } => {
            let m = family.check_m(*m)?;
            let cap = max_order(*flag, env_cap)?.min(MAX_SIZE);
            let text = fs::read_to_string(bfile)
                .map_err(|e| usage(format!("cannot read {}: {e}", bfile.display())))?;
            let parsed: BFile = text
                .parse()
                .map_err(|e| usage(format!("{}: {e}", bfile.display())))?;
            verify(*family, m, &parsed, cap, format)
        }
    }
}

fn corner_row(corner: &str) -> &str {
    corner.split('\\').next().unwrap_or(corner)
}

fn corner_col<'a>(corner: &'a str, column: &'a str) -> String {
    format!("{}={column}", corner.split('\\').nth(1).unwrap_or("col"))
}

fn render_count(family: Family, s: usize, m: Option<u64>, value: &BigInt, format: Format) -> String {
    let name = name_of(family);
    match format {
        Format::Plain => format!("{value}\n"),
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("family".into(), json!(name));
            obj.insert("s".into(), json!(s));
            if let Some(m) = m {
                obj.insert("m".into(), json!(m));
            }
            obj.insert("value".into(), json_int(value));
            format!("{}\n", Value::Object(obj))
        }
        Format::Csv => format!(
            "family,s,m,value\n{name},{s},{},{value}\n",
            m.map(|m| m.to_string()).unwrap_or_default()
        ),
    }
}

fn default_dims(name: TableName) -> (usize, u64) {
    match name {
        TableName::FullyColoredLabeled | TableName::FullyColoredUnlabeled => (6, 6),
        _ => (8, 8),
    }
}

fn family_of(name: TableName) -> Family {
    match name {
        TableName::Symbolic => Family::Ultrametrics,
        TableName::FullyColoredLabeled => Family::FullyColoredLabeled,
        TableName::Mobiles => Family::Mobiles,
        TableName::MultipartiteUnlabeled => Family::MultipartiteUnlabeled,
        TableName::FullyColoredUnlabeled => Family::FullyColoredUnlabeled,
        TableName::RiordanTriangle => Family::Unlabeled,
    }
}

pub fn build_table(
    name: TableName,
    max_s: Option<usize>,
    max_m: Option<u64>,
    max_n: Option<usize>,
) -> Result<Grid, CliError> {
    if name == TableName::RiordanTriangle {
        if max_s.is_some() || max_m.is_some() {
            return Err(usage("riordan-triangle takes --max-n only"));
        }
        let max_n = max_n.unwrap_or(10);
        if !(2..=MAX_SIZE).contains(&max_n) {
            return Err(usage(format!("--max-n must be in 2..={MAX_SIZE}")));
        }
        return riordan_grid(max_n);
    }
    if max_n.is_some() {
        return Err(usage("--max-n applies to riordan-triangle only"));
    }
    let (ds, dm) = default_dims(name);
    let max_s = max_s.unwrap_or(ds);
    let max_m = max_m.unwrap_or(dm);
    if !(1..=MAX_SIZE).contains(&max_s) || !(1..=MAX_COLORS).contains(&max_m) {
        return Err(usage(format!("--max-s must be in 1..={MAX_SIZE}, --max-m in 1..={MAX_COLORS}")));
    }
    let family = family_of(name);
    let mut rows = Vec::with_capacity(max_m as usize);
    for m in 1..=max_m {
        let values = family.values(m, max_s)?;
        rows.push((m.to_string(), values.into_iter().map(Some).collect()));
    }
    Ok(Grid {
        name: name_of(name),
        corner: "m\\s".into(),
        columns: (1..=max_s).map(|s| s.to_string()).collect(),
        rows,
    })
}

fn riordan_grid(max_n: usize) -> Result<Grid, CliError> {
    let polys = refined_polys(max_n)?;
    let mut rows: Vec<(String, Vec<Option<BigInt>>)> = (1..max_n)
        .map(|k| {
            let cells = (2..=max_n)
                .map(|n| (k < n).then(|| polys[n - 1].count(k)))
                .collect();
            (k.to_string(), cells)
        })
        .collect();
    rows.push((
        "sum".into(),
        (2..=max_n).map(|n| Some(polys[n - 1].total())).collect(),
    ));
    Ok(Grid {
        name: name_of(TableName::RiordanTriangle),
        corner: "k\\n".into(),
        columns: (2..=max_n).map(|n| n.to_string()).collect(),
        rows,
    })
}

fn square<const S: usize>(name: TableName, table: &[[u64; S]]) -> Grid {
    Grid {
        name: name_of(name),
        corner: "m\\s".into(),
        columns: (1..=S).map(|s| s.to_string()).collect(),
        rows: table
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let cells = row.iter().map(|&v| Some(BigInt::from(v))).collect();
                ((i + 1).to_string(), cells)
            })
            .collect(),
    }
}

/// The published values for `name`.
pub fn published_table(name: TableName) -> Grid {
    match name {
        TableName::Symbolic => square(name, &reference::SYMBOLIC),
        TableName::FullyColoredLabeled => square(name, &reference::FULLY_COLORED_LABELED),
        TableName::Mobiles => square(name, &reference::MOBILES),
        TableName::MultipartiteUnlabeled => square(name, &reference::MULTIPARTITE_UNLABELED),
        TableName::FullyColoredUnlabeled => square(name, &reference::FULLY_COLORED_UNLABELED),
        TableName::RiordanTriangle => {
            let mut rows: Vec<(String, Vec<Option<BigInt>>)> = reference::RIORDAN_TRIANGLE
                .iter()
                .enumerate()
                .map(|(k, row)| ((k + 1).to_string(), row.iter().map(|c| c.map(BigInt::from)).collect()))
                .collect();
            rows.push((
                "sum".into(),
                reference::RIORDAN_SUMS.iter().map(|&v| Some(BigInt::from(v))).collect(),
            ));
            Grid {
                name: name_of(name),
                corner: "k\\n".into(),
                columns: (2..=10).map(|n: usize| n.to_string()).collect(),
                rows,
            }
        }
    }
}

fn render_gf(kind: GfKind, m: u64, order: usize, spec: WeightSpec, format: Format) -> Result<String, CliError> {
    let kind_name = name_of(kind);
    if kind == GfKind::P {
        if m == 0 || m > MAX_P_COLORS {
            return Err(usage(format!("P needs --m in 1..={MAX_P_COLORS}")));
        }
        let colors = m as u32;
        let degree_spec = match spec {
            WeightSpec::Symbolic => DegreeSpec::symbolic(colors),
            WeightSpec::Ones => DegreeSpec::all_ones(colors),
            WeightSpec::Factorial => DegreeSpec::factorial(colors),
        };
        let series = p_series(&degree_spec, order)?;
        let coeffs: Vec<_> = (1..=order).map(|s| series.coeff(s)).collect();
        return Ok(match format {
            Format::Json => {
                let list: Vec<Value> = coeffs.iter().map(|c| c.to_json()).collect();
                format!(
                    "{}\n",
                    json!({"kind": kind_name, "m": m, "spec": name_of(spec), "order": order, "coeffs": list})
                )
            }
            Format::Csv => {
                let mut out = String::from("s,coefficient\n");
                for (i, c) in coeffs.iter().enumerate() {
                    out.push_str(&format!("{},\"{c}\"\n", i + 1));
                }
                out
            }
            Format::Plain => coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{} {c}\n", i + 1))
                .collect(),
        });
    }
    if m > MAX_COLORS || (m == 0 && kind != GfKind::Y) {
        return Err(usage(format!("{kind_name} needs --m in 1..={MAX_COLORS} (Y also allows 0)")));
    }
    let series = match kind {
        GfKind::A => ultrametric_series(m, order),
        GfKind::G => mobile_series(m, order),
        GfKind::Y => chain_increasing_series(m, order),
        GfKind::P => unreachable!("handled above"),
    };
    Ok(match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("kind".into(), json!(kind_name));
            obj.insert("m".into(), json!(m));
            if let Value::Object(inner) = series.to_json() {
                obj.extend(inner);
            }
            format!("{}\n", Value::Object(obj))
        }
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for n in 1..=order {
                out.push_str(&format!("{n},{}\n", series.coeff(n)));
            }
            out
        }
        Format::Plain => (1..=order).map(|n| format!("{n} {}\n", series.coeff(n))).collect(),
    })
}

fn verify(family: Family, m: u64, bfile: &BFile, cap: usize, format: Format) -> Result<String, CliError> {
    let in_range: Vec<&(i64, BigInt)> = bfile
        .entries
        .iter()
        .filter(|(n, _)| *n >= 1 && *n as usize <= cap)
        .collect();
    let Some(&&(last, _)) = in_range.last() else {
        return Err(usage(format!("b-file has no indices in 1..={cap}")));
    };
    let computed = family.values(m, last as usize)?;
    for (n, expected) in &in_range {
        let got = &computed[*n as usize - 1];
        if got != expected {
            return Err(CliError::Mismatch(format!(
                "MISMATCH at n={n}: b-file {expected}, computed {got}\n"
            )));
        }
    }
    let first = in_range[0].0;
    Ok(match format {
        Format::Json => format!(
            "{}\n",
            json!({"family": name_of(family), "status": "ok", "compared": in_range.len(), "first": first, "last": last})
        ),
        Format::Csv => format!(
            "family,status,compared,first,last\n{},ok,{},{first},{last}\n",
            name_of(family),
            in_range.len()
        ),
        Format::Plain => format!("OK: {} terms match (n = {first}..{last})\n", in_range.len()),
    })
}
