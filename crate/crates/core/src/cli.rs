//! Command-line front end. `run` is pure apart from reading `TRISPEC_CAP`,
//! so the binary and the tests share it.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, display_name, registry, CentralType, Side};
use crate::eigclass::{enumerate_min_eig, matsuo_candidates, EnumerationReport, GramStatus, MatsuoReport};
use crate::numbers::Rational;
use crate::oracle::{construct, exact_spectrum_capped, OracleError, DEFAULT_CAP};
use crate::spectrum::Spectrum;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dimacs,
    Edges,
}

#[derive(Debug, Parser)]
#[command(name = "trispec", version, about = "Spectra of diagrams of 3-transposition groups")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub format: Format,
    /// Largest diagram the oracle will build; defaults to TRISPEC_CAP or 2500.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Print nothing but errors; `verify` prints nothing at all.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, spectrum and minimal eigenvalue of a central type.
    Spectrum { central_type: String },
    /// Extended strongly regular parameters of a rank-3 diagram.
    Params {
        central_type: String,
        #[arg(long, default_value = "diagram")]
        side: String,
    },
    /// Builds the diagram and compares its exact spectrum with the catalog.
    Verify { central_type: String },
    /// Central types with minimal eigenvalue at least -t.
    Enumerate {
        #[arg(long)]
        t: u64,
    },
    /// Central types whose Matsuo Gram matrix at eta is positive (semi)definite.
    Matsuo {
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long)]
        symplectic: bool,
    },
    /// The family registry.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Writes the adjacency of a constructible diagram.
    ExportGraph {
        central_type: String,
        #[arg(long = "as", value_enum, default_value = "dimacs")]
        graph_format: GraphFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Serialize)]
struct SpectrumOut<'a> {
    central_type: String,
    name: String,
    size: u64,
    spectrum: &'a Spectrum,
    min_eigenvalue: &'a Rational,
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    central_type: String,
    n: u64,
    matches: bool,
    catalog: &'a Spectrum,
    oracle: &'a Spectrum,
}

#[derive(Serialize)]
struct GraphOut {
    central_type: String,
    n: usize,
    m: usize,
    edges: Vec<[usize; 2]>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_type(s: &str) -> Result<CentralType, Outcome> {
    s.parse::<CentralType>().map_err(Outcome::usage)
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, Outcome> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("TRISPEC_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Outcome::usage(format!("TRISPEC_CAP={v} is not a number"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn oracle_failure(e: OracleError) -> Outcome {
    match e {
        OracleError::CapExceeded { .. } => Outcome::usage(format!("no oracle at this scale: {e}")),
        e => Outcome::usage(e),
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let mut out = execute(&cli).unwrap_or_else(|o| o);
    if cli.quiet {
        out.stderr.clear();
        if matches!(cli.command, Command::Verify { .. }) {
            out.stdout.clear();
        }
    }
    out
}

fn execute(cli: &Cli) -> Result<Outcome, Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Spectrum { central_type } => {
            let c = parse_type(central_type)?;
            let (size, spec) = catalog::size_and_spectrum(&c).map_err(Outcome::usage)?;
            let o = SpectrumOut {
                central_type: c.to_string(),
                name: display_name(&c),
                size,
                spectrum: &spec,
                min_eigenvalue: spec.min_eigenvalue(),
            };
            Ok(Outcome::ok(match fmt {
                Format::Json => json(&o),
                Format::Table => format!(
                    "type      {}\nname      {}\nsize      {}\nspectrum  {}\nmin eig   {}\n",
                    o.central_type, o.name, o.size, o.spectrum, o.min_eigenvalue
                ),
            }))
        }
        Command::Params { central_type, side } => {
            let c = parse_type(central_type)?;
            let side: Side = side.parse().map_err(Outcome::usage)?;
            let p = catalog::extended_params(&c, side).map_err(Outcome::usage)?;
            Ok(Outcome::ok(match fmt {
                Format::Json => json(&p),
                Format::Table => format!(
                    "n {}  k {}  lambda {}  mu {}\nl {}  lambda' {}  mu' {}\nr {}  s {}  f {}  g {}\n",
                    p.n, p.k, p.lambda, p.mu, p.l, p.lambda_c, p.mu_c, p.r, p.s, p.f, p.g
                ),
            }))
        }
        Command::Verify { central_type } => {
            let c = parse_type(central_type)?;
            let cap = resolve_cap(cli.cap)?;
            let (n, expected) = catalog::size_and_spectrum(&c).map_err(Outcome::usage)?;
            if n > cap as u64 {
                return Err(oracle_failure(OracleError::CapExceeded { n, cap }));
            }
            let g = construct(&c, cap).map_err(oracle_failure)?;
            let got = exact_spectrum_capped(&g, cap).map_err(oracle_failure)?;
            let matches = got == expected && g.n() as u64 == n;
            let o = VerifyOut {
                central_type: c.to_string(),
                n: g.n() as u64,
                matches,
                catalog: &expected,
                oracle: &got,
            };
            let text = match fmt {
                Format::Json => json(&o),
                Format::Table if matches => format!("match  {} on {} vertices\n  {}\n", o.central_type, o.n, got),
                Format::Table => format!(
                    "MISMATCH  {} on {} vertices (catalog size {n})\n  catalog {}\n  oracle  {}\n",
                    o.central_type, o.n, expected, got
                ),
            };
            Ok(Outcome {
                code: if matches { EXIT_OK } else { EXIT_MISMATCH },
                stdout: text,
                stderr: String::new(),
            })
        }
        Command::Enumerate { t } => {
            let r = enumerate_min_eig(*t);
            Ok(Outcome::ok(match fmt {
                Format::Json => json(&r),
                Format::Table => enumeration_table(&r),
            }))
        }
        Command::Matsuo { eta, symplectic } => {
            let eta: Rational = eta.parse().map_err(Outcome::usage)?;
            let r = matsuo_candidates(&eta, *symplectic).map_err(Outcome::usage)?;
            Ok(Outcome::ok(match fmt {
                Format::Json => json(&r),
                Format::Table => matsuo_table(&r),
            }))
        }
        Command::Catalog { action: CatalogAction::List } => {
            let reg = registry();
            Ok(Outcome::ok(match fmt {
                Format::Json => json(&reg),
                Format::Table => {
                    let mut s = String::new();
                    for f in &reg {
                        let params = f.param_ranges.params.join(",");
                        writeln!(s, "{:<6} {:<22} [{}] symplectic: {}", f.family, f.name, params, f.symplectic_type)
                            .unwrap();
                    }
                    s
                }
            }))
        }
        Command::ExportGraph { central_type, graph_format } => {
            let c = parse_type(central_type)?;
            let cap = resolve_cap(cli.cap)?;
            let g = construct(&c, cap).map_err(oracle_failure)?;
            Ok(Outcome::ok(match (fmt, graph_format) {
                (Format::Json, _) => json(&GraphOut {
                    central_type: c.to_string(),
                    n: g.n(),
                    m: g.edge_count(),
                    edges: (0..g.n())
                        .flat_map(|i| g.neighbours(i).filter(move |&j| j > i).map(move |j| [i, j]))
                        .collect(),
                }),
                (Format::Table, GraphFormat::Dimacs) => g.to_dimacs(),
                (Format::Table, GraphFormat::Edges) => g.to_edge_list(),
            }))
        }
    }
}

fn join(list: &[CentralType]) -> String {
    list.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn enumeration_table(r: &EnumerationReport) -> String {
    let mut s = String::new();
    writeln!(s, "t = {}  S = {}  I = {}", r.t, r.s, r.i).unwrap();
    if r.moufang_class {
        writeln!(s, "rho = -1: Moufang class").unwrap();
    }
    let mut rhos: Vec<i64> = r
        .symmetric_families
        .iter()
        .map(|f| f.rho)
        .chain(r.individuals.keys().copied())
        .chain(r.exotics.keys().copied())
        .collect();
    rhos.sort_unstable_by(|a, b| b.cmp(a));
    rhos.dedup();
    for rho in rhos {
        writeln!(s, "rho = {rho}:").unwrap();
        let fams: Vec<&str> = r
            .symmetric_families
            .iter()
            .filter(|f| f.rho == rho)
            .map(|f| f.family.as_str())
            .collect();
        if !fams.is_empty() {
            writeln!(s, "  families  {}", fams.join(" ")).unwrap();
        }
        if let Some(l) = r.individuals.get(&rho) {
            writeln!(s, "  types     {}", join(l)).unwrap();
        }
        if let Some(l) = r.exotics.get(&rho) {
            writeln!(s, "  exotic    {}", join(l)).unwrap();
        }
    }
    s
}

fn status_word(s: GramStatus) -> &'static str {
    match s {
        GramStatus::PositiveDefinite => "definite",
        GramStatus::PositiveSemidefinite => "semidefinite",
        GramStatus::Indefinite => "indefinite",
    }
}

fn matsuo_table(r: &MatsuoReport) -> String {
    let mut s = String::new();
    writeln!(s, "eta = {}{}", r.eta, if r.symplectic_only { "  (symplectic)" } else { "" }).unwrap();
    for m in &r.moufang {
        writeln!(s, "  moufang   {m}").unwrap();
    }
    for f in &r.families {
        writeln!(s, "  family    {:<14} rho {:<5} {}", f.family.family, f.family.rho, status_word(f.status)).unwrap();
    }
    for (label, list) in [("type", &r.individuals), ("exotic", &r.exotics)] {
        for c in list {
            let rho = c.gram.rho.as_ref().map(|r| r.to_string()).unwrap_or_default();
            let radical = match c.gram.status {
                GramStatus::PositiveSemidefinite => format!(" radical {}", c.gram.radical_dim),
                _ => String::new(),
            };
            writeln!(
                s,
                "  {label:<9} {:<20} rho {:<5} {}{radical}",
                c.central_type.to_string(),
                rho,
                status_word(c.gram.status)
            )
            .unwrap();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("trispec").chain(args.iter().copied()))
    }

    #[test]
    fn spectrum_table() {
        let o = go(&["spectrum", "PR4(h=0,m=3)"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("size      63"));
        assert!(o.stdout.contains("<32; [4]^27, [-4]^35>"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(go(&["spectrum", "PR4(m=0)"]).code, EXIT_USAGE);
        assert_eq!(go(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(go(&["matsuo", "--eta", "1"]).code, EXIT_USAGE);
        assert_eq!(go(&["params", "PR1(h=2)", "--side", "sideways"]).code, EXIT_USAGE);
        assert_eq!(go(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn quiet_verify() {
        let o = go(&["verify", "PR2a(h=1,m=4)", "--quiet"]);
        assert_eq!(o, Outcome::default());
    }
}
