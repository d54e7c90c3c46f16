//! Command-line front end for the diagram algebra engine.

pub mod registry;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diagalg::algebra::{multiply, AlgebraElement, AlgebraSpec, GroupSpec, QuotientSpec};
use diagalg::coeff::RingSpec;
use diagalg::diagram::{enumerate_with_cap, Diagram, FamilyTag};
use diagalg::homology::{show_over, tor_ext, AugmentedAlgebra, HomologyReport};
use diagalg::idempotent::idempotent_reports;
use diagalg::linkstate::right_link_state;
use diagalg::tate::{tate_group, tate_table};
use itertools::Itertools;
use rayon::prelude::*;
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] diagalg::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for usage and configuration problems.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "diagalg",
    version,
    about = "Exact (co)homology of diagram algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(
        long,
        global = true,
        value_enum,
        default_value = "json",
        env = "DIAGALG_FORMAT"
    )]
    pub format: Format,
    #[arg(long, global = true, env = "DIAGALG_OUT")]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "DIAGALG_THREADS")]
    pub threads: Option<usize>,
    /// Largest chain group or basis the tool will build.
    #[arg(long, global = true, default_value_t = 250_000, env = "DIAGALG_BUDGET")]
    pub budget: usize,
}

/// Which algebra to work with. Parameters are integers or fractions `p/q`.
#[derive(Debug, Clone, Default, Args)]
pub struct AlgebraArgs {
    #[arg(long, env = "DIAGALG_FAMILY")]
    pub family: Option<String>,
    #[arg(long, env = "DIAGALG_N")]
    pub n: Option<usize>,
    #[arg(long, env = "DIAGALG_R")]
    pub r: Option<usize>,
    #[arg(long, env = "DIAGALG_S")]
    pub s: Option<usize>,
    #[arg(long, env = "DIAGALG_DELTA", allow_hyphen_values = true)]
    pub delta: Option<String>,
    #[arg(long, env = "DIAGALG_EPSILON", allow_hyphen_values = true)]
    pub epsilon: Option<String>,
    #[arg(long, env = "DIAGALG_GAMMA", allow_hyphen_values = true)]
    pub gamma: Option<String>,
    #[arg(long, env = "DIAGALG_RING")]
    pub ring: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the basis diagrams (or their right link states) of a family.
    Enumerate {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        link_states: bool,
    },
    /// Multiply two basis diagrams.
    Multiply {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Tor and Ext with trivial coefficients.
    Homology {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Use the group algebra of this group instead of a diagram algebra.
        #[arg(long, env = "DIAGALG_GROUP")]
        group: Option<String>,
        /// Quotient by the ideal of this level first.
        #[arg(long)]
        quotient: Option<i64>,
        #[arg(long = "D", default_value_t = 3, env = "DIAGALG_D")]
        degree: usize,
    },
    /// Tate table of an algebra against a group, or of the group alone.
    Tate {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, env = "DIAGALG_GROUP")]
        group: String,
        #[arg(long = "D", default_value_t = 3, env = "DIAGALG_D")]
        degree: usize,
    },
    /// Run one registry check.
    Verify {
        /// Registry id; `list` prints the registry.
        id: String,
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long = "D", env = "DIAGALG_D")]
        degree: Option<usize>,
        /// Run even when the hypotheses do not hold.
        #[arg(long)]
        force: bool,
    },
    /// Check the idempotent for every link state, one JSON line each.
    Idempotents {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Run every registry check with its defaults and tabulate the results.
    Table,
}

/// Text to emit and whether the run counts as passing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub pass: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, pass: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

impl AlgebraArgs {
    fn ring(&self, default: &str) -> Result<RingSpec, CliError> {
        Ok(self.ring.as_deref().unwrap_or(default).parse()?)
    }

    fn family(&self) -> Result<FamilyTag, CliError> {
        let name = self
            .family
            .as_deref()
            .ok_or_else(|| usage("--family is required"))?;
        Ok(FamilyTag::from_name(name, self.r, self.s)?)
    }

    fn size(&self, fam: FamilyTag) -> Result<usize, CliError> {
        match fam {
            FamilyTag::WalledBrauer { r, s } => {
                if let Some(n) = self.n.filter(|&n| n != r + s) {
                    return Err(usage(format!("--n {n} disagrees with r + s = {}", r + s)));
                }
                Ok(r + s)
            }
            _ => self.n.ok_or_else(|| usage("--n is required")),
        }
    }

    /// Builds a spec; parameters the family does not carry must be absent.
    pub fn spec(&self) -> Result<AlgebraSpec, CliError> {
        let fam = self.family()?;
        let n = self.size(fam)?;
        let ring = self.ring("z")?;
        let parse = |v: &Option<String>| v.as_deref().map(|t| ring.parse(t)).transpose();
        Ok(AlgebraSpec::new(
            fam,
            n,
            ring,
            parse(&self.delta)?,
            parse(&self.epsilon)?,
            parse(&self.gamma)?,
        )?)
    }

    /// Fills unset fields from a registry entry's defaults.
    fn with_defaults(&self, e: &registry::Entry) -> Result<AlgebraArgs, CliError> {
        if let Some(f) = self.family.as_deref().filter(|f| {
            FamilyTag::from_name(f, Some(0), Some(0)).ok()
                != FamilyTag::from_name(e.family, Some(0), Some(0)).ok()
        }) {
            return Err(usage(format!(
                "{} is a check on the {} family, not {f}",
                e.id, e.family
            )));
        }
        let d = e.defaults;
        let walled = e.family == "walled";
        Ok(AlgebraArgs {
            family: Some(e.family.to_string()),
            n: if walled { self.n } else { self.n.or(Some(d.n)) },
            r: self.r.or(walled.then_some(d.r)),
            s: self.s.or(walled.then_some(d.s)),
            delta: self.delta.clone().or_else(|| Some(d.delta.to_string())),
            epsilon: self.epsilon.clone().or_else(|| Some(d.epsilon.to_string())),
            gamma: self.gamma.clone().or_else(|| Some(d.gamma.to_string())),
            ring: self.ring.clone().or_else(|| Some(d.ring.to_string())),
        })
    }

    /// Like [`AlgebraArgs::spec`] but drops parameters the family ignores.
    fn lenient_spec(&self) -> Result<AlgebraSpec, CliError> {
        let fam = self.family()?;
        let n = self.size(fam)?;
        let ring = self.ring("z")?;
        let probe = AlgebraSpec::with_ints(fam, n, ring, 1, 1, 1)?;
        let keep = |v: &Option<String>, present: bool| if present { v.clone() } else { None };
        AlgebraArgs {
            delta: keep(&self.delta, probe.delta().is_some()),
            epsilon: keep(&self.epsilon, probe.epsilon().is_some()),
            gamma: keep(&self.gamma, probe.gamma().is_some()),
            ..self.clone()
        }
        .spec()
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let fmt = cli.output.format;
    let budget = cli.output.budget;
    match &cli.command {
        Command::Enumerate { alg, link_states } => cmd_enumerate(alg, *link_states, fmt, budget),
        Command::Multiply { alg, left, right } => cmd_multiply(alg, left, right, fmt),
        Command::Homology {
            alg,
            group,
            quotient,
            degree,
        } => cmd_homology(alg, group.as_deref(), *quotient, *degree, fmt, budget),
        Command::Tate { alg, group, degree } => cmd_tate(alg, group, *degree, fmt),
        Command::Verify {
            id,
            alg,
            degree,
            force,
        } => cmd_verify(id, alg, *degree, *force, fmt),
        Command::Idempotents { alg } => cmd_idempotents(alg),
        Command::Table => cmd_table(fmt),
    }
}

pub fn cmd_enumerate(
    alg: &AlgebraArgs,
    link_states: bool,
    fmt: Format,
    budget: usize,
) -> Result<Outcome, CliError> {
    let fam = alg.family()?;
    let n = alg.size(fam)?;
    let basis = enumerate_with_cap(fam, n, budget)?;
    let items: Vec<String> = if link_states {
        basis
            .iter()
            .map(right_link_state)
            .sorted()
            .dedup()
            .map(|p| p.to_string())
            .collect()
    } else {
        basis.iter().map(Diagram::to_string).collect()
    };
    let text = match fmt {
        Format::Json => to_json(&json!({
            "family": fam.to_string(),
            "n": n,
            "kind": if link_states { "link-states" } else { "diagrams" },
            "count": items.len(),
            "items": items,
        })),
        Format::Csv => format!(
            "index,item\n{}",
            items
                .iter()
                .enumerate()
                .map(|(i, x)| format!("{i},\"{x}\"\n"))
                .join("")
        ),
        Format::Pretty => format!(
            "{}count: {}\n",
            items.iter().map(|x| format!("{x}\n")).join(""),
            items.len()
        ),
    };
    Ok(Outcome::ok(text))
}

pub fn cmd_multiply(
    alg: &AlgebraArgs,
    left: &str,
    right: &str,
    fmt: Format,
) -> Result<Outcome, CliError> {
    let spec = alg.spec()?;
    let x = AlgebraElement::basis(&spec, Diagram::parse(spec.n(), left)?)?;
    let y = AlgebraElement::basis(&spec, Diagram::parse(spec.n(), right)?)?;
    let p = multiply(&x, &y)?;
    let terms: Vec<(String, String)> = p
        .terms()
        .iter()
        .map(|(d, c)| (c.to_string(), d.to_string()))
        .collect();
    let text = match fmt {
        Format::Json => to_json(&json!({
            "algebra": spec,
            "left": x.to_string(),
            "right": y.to_string(),
            "product": terms,
        })),
        Format::Csv => format!(
            "coefficient,diagram\n{}",
            terms.iter().map(|(c, d)| format!("{c},\"{d}\"\n")).join("")
        ),
        Format::Pretty => format!("{p}\n"),
    };
    Ok(Outcome::ok(text))
}

pub fn cmd_homology(
    alg: &AlgebraArgs,
    group: Option<&str>,
    quotient: Option<i64>,
    degree: usize,
    fmt: Format,
    budget: usize,
) -> Result<Outcome, CliError> {
    let (label, a) = match (group, &alg.family) {
        (Some(_), Some(_)) => return Err(usage("give either --family or --group, not both")),
        (Some(g), None) => {
            let g: GroupSpec = g.parse()?;
            let ring = alg.ring("z")?;
            (
                json!({ "group": g.to_string(), "ring": ring.to_string() }),
                AugmentedAlgebra::group(g, ring)?,
            )
        }
        (None, Some(_)) => {
            let spec = alg.spec()?;
            match quotient {
                Some(level) => {
                    let q = QuotientSpec::new(spec, level)?;
                    (
                        serde_json::to_value(&q).expect("specs serialize"),
                        AugmentedAlgebra::from_quotient(&q)?,
                    )
                }
                None => (
                    serde_json::to_value(&spec).expect("specs serialize"),
                    AugmentedAlgebra::from_spec(&spec)?,
                ),
            }
        }
        (None, None) => return Err(usage("--family or --group is required")),
    };
    let (t, e) = tor_ext(&a, degree, budget)?;
    let report = HomologyReport::new(label, &t, &e);
    let text = match fmt {
        Format::Json => to_json(&report),
        Format::Csv => report.to_csv(),
        Format::Pretty => format!("Tor: {t}\nExt: {e}\n"),
    };
    Ok(Outcome::ok(text))
}

pub fn cmd_tate(
    alg: &AlgebraArgs,
    group: &str,
    degree: usize,
    fmt: Format,
) -> Result<Outcome, CliError> {
    let g: GroupSpec = group.parse()?;
    let table = match alg.family {
        Some(_) => tate_table(&AugmentedAlgebra::from_spec(&alg.spec()?)?, g, degree)?,
        None => tate_group(g, degree, alg.ring("z")?)?,
    };
    let text = match fmt {
        Format::Json => to_json(&table),
        Format::Csv => format!(
            "degree,group\n{}",
            table
                .groups
                .iter()
                .map(|(p, h)| format!("{p},{}\n", show_over(h, &table.ring)))
                .join("")
        ),
        Format::Pretty => table.pretty(),
    };
    Ok(Outcome::ok(text))
}

fn registry_listing(fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(
            &registry::REGISTRY
                .iter()
                .map(|e| json!({ "id": e.id, "family": e.family, "statement": e.statement }))
                .collect::<Vec<_>>(),
        ),
        _ => registry::REGISTRY
            .iter()
            .map(|e| format!("{:<24} {}\n", e.id, e.statement))
            .join(""),
    }
}

pub fn cmd_verify(
    id: &str,
    alg: &AlgebraArgs,
    degree: Option<usize>,
    force: bool,
    fmt: Format,
) -> Result<Outcome, CliError> {
    if id == "list" {
        return Ok(Outcome::ok(registry_listing(fmt)));
    }
    let entry = registry::lookup(id)
        .ok_or_else(|| usage(format!("unknown check {id:?}; try `verify list`")))?;
    let spec = alg.with_defaults(entry)?.lenient_spec()?;
    let verdict = registry::run(entry, &spec, degree.unwrap_or(entry.defaults.degree), force)?;
    let text = match fmt {
        Format::Json => to_json(&verdict),
        Format::Csv => verdict_csv(std::slice::from_ref(&verdict)),
        Format::Pretty => verdict_line(&verdict),
    };
    Ok(Outcome {
        text,
        pass: verdict.pass,
    })
}

fn verdict_line(v: &registry::Verdict) -> String {
    let status = if v.pass { "PASS" } else { "FAIL" };
    format!("{status} {}: {}\n", v.id, v.statement)
}

fn verdict_csv(vs: &[registry::Verdict]) -> String {
    let mut out = String::from("id,algebra,pass\n");
    for v in vs {
        out.push_str(&format!(
            "{},\"{}\",{}\n",
            v.id,
            v.algebra.to_string().replace('"', "'"),
            v.pass
        ));
    }
    out
}

pub fn cmd_idempotents(alg: &AlgebraArgs) -> Result<Outcome, CliError> {
    let spec = alg.spec()?;
    let reports = idempotent_reports(&spec)?;
    let pass = reports.iter().all(|r| r.passes());
    let text = reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("reports serialize");
            v["passes"] = json!(r.passes());
            format!("{}\n", serde_json::to_string(&v).expect("values serialize"))
        })
        .join("");
    Ok(Outcome { text, pass })
}

pub fn cmd_table(fmt: Format) -> Result<Outcome, CliError> {
    let verdicts = registry::REGISTRY
        .par_iter()
        .map(|e| registry::run(e, &registry::default_spec(e)?, e.defaults.degree, false))
        .collect::<Result<Vec<_>, CliError>>()?;
    let pass = verdicts.iter().all(|v| v.pass);
    let text = match fmt {
        Format::Json => to_json(&verdicts),
        Format::Csv => verdict_csv(&verdicts),
        Format::Pretty => verdicts.iter().map(verdict_line).join(""),
    };
    Ok(Outcome { text, pass })
}

/// Applies the thread cap, runs, and writes the output.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    if let Some(t) = cli.output.threads {
        // Ignore the error when a pool already exists (repeated calls in tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global();
    }
    let outcome = run(cli)?;
    match &cli.output.out {
        Some(path) => std::fs::write(path, &outcome.text)?,
        None => print!("{}", outcome.text),
    }
    Ok(outcome)
}
