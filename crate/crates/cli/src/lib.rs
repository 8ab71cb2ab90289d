//! The `formata` command line, as a library so tests can drive it in-process.
//!
//! [`run_command`] parses an argument vector and returns the exit code together
//! with everything that would be written to standard output.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use formata::character::json::TableJson;
use formata::character::row_index;
use formata::formation::{projector, residual};
use formata::head::reports::{
    counterexample_report, counting_report, equivalence_report, kernel_report, mckay_report, pprime_kernel_report,
    restriction_report, transfer_report, Report,
};
use formata::head::{fprime_ascending_in, CanonicalSeries};
use formata::{cache, catalog, Error, Formation, Perm, PermGroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Formations swept by `verify all`.
pub const SWEEP_FORMATIONS: [&str; 4] = ["nilpotent", "supersolvable", "metanilpotent", "nilpotent-length:2"];

#[derive(Debug, Parser)]
#[command(name = "formata", version, about = "Head characters of finite solvable groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Opts {
    /// Formation name, e.g. `nilpotent` or `p-nilpotent:3`
    #[arg(long)]
    formation: Option<String>,
    /// Generators of a normal subgroup, separated by `;` (repeatable)
    #[arg(long)]
    normal: Vec<String>,
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character table
    Table {
        group: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// F-projector
    Projector {
        group: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// F-residual
    Residual {
        group: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Canonical series K_i, L_i
    Series {
        group: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Head characters
    Headchars {
        group: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run a verifier
    Verify {
        #[arg(value_enum)]
        check: Check,
        group: Option<String>,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    #[value(name = "thm-a")]
    Restriction,
    #[value(name = "thm-b")]
    Kernel,
    #[value(name = "thm-c")]
    PprimeKernel,
    #[value(name = "thm54")]
    Equivalence,
    Counting,
    #[value(name = "counterexample-2S4")]
    Counterexample,
    Mckay,
    ExtensionTransfer,
    All,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(bool, String), Failure>;

/// Runs one invocation. `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok((true, out)) => (EXIT_OK, out),
        Ok((false, out)) => (EXIT_FAILED, out),
        Err(Failure::Usage(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Internal(msg)) => (EXIT_FAILED, format!("error: {msg}\n")),
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Table { group, opts } => {
            reject_extra(&opts, false, false)?;
            table(&group, opts.json)
        }
        Command::Projector { group, opts } => {
            reject_extra(&opts, true, false)?;
            subgroup_command(&group, &opts, "projector")
        }
        Command::Residual { group, opts } => {
            reject_extra(&opts, true, false)?;
            subgroup_command(&group, &opts, "residual")
        }
        Command::Series { group, opts } => {
            reject_extra(&opts, true, false)?;
            series(&group, &opts)
        }
        Command::Headchars { group, opts } => {
            reject_extra(&opts, true, false)?;
            headchars(&group, &opts)
        }
        Command::Verify { check, group, opts } => verify(check, group.as_deref(), &opts),
    }
}

fn reject_extra(opts: &Opts, formation_ok: bool, normal_ok: bool) -> std::result::Result<(), Failure> {
    if !formation_ok && opts.formation.is_some() {
        return Err(Failure::Usage("--formation is not used by this command".into()));
    }
    if !normal_ok && !opts.normal.is_empty() {
        return Err(Failure::Usage("--normal is only used by `verify thm-a`".into()));
    }
    Ok(())
}

fn formation(opts: &Opts) -> std::result::Result<Formation, Failure> {
    let name = opts.formation.as_deref().unwrap_or("nilpotent");
    name.parse::<Formation>()
        .map_err(|e| Failure::Usage(format!("unknown formation {name:?}: {e}")))
}

fn load(group: &str) -> std::result::Result<(String, PermGroup), Failure> {
    catalog::resolve(group).map_err(|e| Failure::Usage(format!("unknown group {group:?}: {e}")))
}

fn subgroup_json(g: &PermGroup) -> Value {
    json!({ "order": g.order(), "generators": g.generator_strings() })
}

fn subgroup_text(g: &PermGroup) -> String {
    let gens = g.generator_strings();
    if gens.is_empty() {
        format!("order {}", g.order())
    } else {
        format!("order {}: {}", g.order(), gens.join(", "))
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn table(group: &str, as_json: bool) -> Outcome {
    let (name, g) = load(group)?;
    let t = cache::character_table(&g)?;
    t.verify()?;
    if as_json {
        let v = serde_json::to_value(TableJson::from_table(&name, &t)).expect("tables serialize");
        return Ok((true, pretty(&v)));
    }
    let info = t.class_info();
    let mut out = String::new();
    writeln!(out, "{name}: order {}, {} classes", g.order(), info.len()).unwrap();
    for (i, c) in info.classes().iter().enumerate() {
        writeln!(
            out,
            "class {i}: size {} order {} rep {}",
            c.size,
            c.element_order(),
            c.representative
        )
        .unwrap();
    }
    for (i, chi) in t.irreducibles().iter().enumerate() {
        let vals: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
        writeln!(out, "chi {i}: {}", vals.join(" | ")).unwrap();
    }
    Ok((true, out))
}

fn subgroup_command(group: &str, opts: &Opts, which: &str) -> Outcome {
    let (name, g) = load(group)?;
    let f = formation(opts)?;
    let s = if which == "projector" {
        projector(&g, &f)?
    } else {
        residual(&g, &f)?
    };
    if opts.json {
        let mut v = subgroup_json(&s);
        v["group"] = json!(name);
        v["formation"] = json!(f.to_string());
        v["index"] = json!(g.order() / s.order());
        return Ok((true, pretty(&v)));
    }
    Ok((true, format!("{which} of {name} for {f}: {}\n", subgroup_text(&s))))
}

fn series(group: &str, opts: &Opts) -> Outcome {
    let (name, g) = load(group)?;
    let f = formation(opts)?;
    let s = CanonicalSeries::new(&g, &f)?;
    if opts.json {
        let levels: Vec<Value> = s
            .pairs()
            .iter()
            .enumerate()
            .map(|(i, (k, l))| json!({ "index": i, "K": subgroup_json(k), "L": subgroup_json(l) }))
            .collect();
        let v = json!({
            "group": name,
            "formation": f.to_string(),
            "projector": subgroup_json(s.projector()),
            "m": s.m(),
            "levels": levels,
        });
        return Ok((true, pretty(&v)));
    }
    let mut out = format!("series of {name} for {f}: m = {}\n", s.m());
    writeln!(out, "H {}", subgroup_text(s.projector())).unwrap();
    for (i, (k, l)) in s.pairs().iter().enumerate() {
        writeln!(out, "K{i} {}", subgroup_text(k)).unwrap();
        writeln!(out, "L{i} {}", subgroup_text(l)).unwrap();
    }
    Ok((true, out))
}

fn headchars(group: &str, opts: &Opts) -> Outcome {
    let (name, g) = load(group)?;
    let f = formation(opts)?;
    let s = CanonicalSeries::new(&g, &f)?;
    let heads = fprime_ascending_in(&s)?;
    let t = cache::character_table(&g)?;
    let e = t.conductor();
    let mut rows = Vec::new();
    for chi in &heads {
        let r = row_index(chi)?.ok_or_else(|| Failure::Internal("head character missing from the table".into()))?;
        rows.push(r);
    }
    if opts.json {
        let chars: Vec<Value> = heads
            .iter()
            .zip(&rows)
            .map(|(chi, r)| {
                let values: Vec<_> = chi.values().iter().map(|v| v.lift(e)).collect();
                json!({ "row": r, "degree": chi.degree(), "values": values })
            })
            .collect();
        let v = json!({
            "group": name,
            "formation": f.to_string(),
            "projector_order": s.projector().order(),
            "count": heads.len(),
            "characters": chars,
        });
        return Ok((true, pretty(&v)));
    }
    let mut out = format!("{} head characters of {name} for {f}\n", heads.len());
    for (chi, r) in heads.iter().zip(&rows) {
        writeln!(out, "chi {r}: degree {}", chi.degree()).unwrap();
    }
    Ok((true, out))
}

fn parse_normals(g: &PermGroup, specs: &[String]) -> std::result::Result<Vec<PermGroup>, Failure> {
    let mut out = Vec::new();
    for spec in specs {
        let gens = spec
            .split(';')
            .map(str::trim)
            .filter(|w| !w.is_empty())
            .map(|w| Perm::parse(w, g.degree()))
            .collect::<formata::Result<Vec<_>>>()?;
        let n = g.subgroup(gens)?;
        if !n.is_normal_in(g) {
            return Err(Failure::Usage(format!("{spec:?} does not generate a normal subgroup")));
        }
        out.push(n);
    }
    Ok(out)
}

fn render(reports: &[Report], as_json: bool) -> (bool, String) {
    let pass = reports.iter().all(Report::passed);
    let out = if as_json {
        let v: Vec<Value> = reports
            .iter()
            .map(|r| serde_json::to_value(r).expect("reports serialize"))
            .collect();
        if v.len() == 1 {
            pretty(&v[0])
        } else {
            pretty(&Value::Array(v))
        }
    } else {
        let mut s = String::new();
        for r in reports {
            writeln!(s, "{r}").unwrap();
        }
        s
    };
    (pass, out)
}

fn verify(check: Check, group: Option<&str>, opts: &Opts) -> Outcome {
    if !opts.normal.is_empty() && check != Check::Restriction {
        return Err(Failure::Usage("--normal is only used by `verify thm-a`".into()));
    }
    if opts.prime.is_some() && check != Check::PprimeKernel {
        return Err(Failure::Usage("--prime is only used by `verify thm-c`".into()));
    }
    match check {
        Check::All => {
            if group.is_some() || opts.formation.is_some() {
                return Err(Failure::Usage("`verify all` takes no group or formation".into()));
            }
            let reports = verify_all()?;
            Ok(render(&reports, opts.json))
        }
        Check::Counterexample => {
            if group.is_some() || opts.formation.is_some() {
                return Err(Failure::Usage(
                    "`verify counterexample-2S4` takes no group or formation".into(),
                ));
            }
            Ok(render(&[counterexample_report()?], opts.json))
        }
        _ => {
            let group = group.ok_or_else(|| Failure::Usage("this check needs a group".into()))?;
            let (name, g) = load(group)?;
            let reports = match check {
                Check::PprimeKernel => {
                    if opts.formation.is_some() {
                        return Err(Failure::Usage("`verify thm-c` takes no formation".into()));
                    }
                    let primes = match opts.prime {
                        Some(p) if g.order() % p == 0 && formata::group::is_prime(p) => vec![p],
                        Some(p) => return Err(Failure::Usage(format!("{p} is not a prime dividing |G|"))),
                        None => g.prime_divisors(),
                    };
                    primes
                        .into_iter()
                        .map(|p| pprime_kernel_report(&name, &g, p))
                        .collect::<formata::Result<Vec<_>>>()?
                }
                Check::Mckay => {
                    if opts.formation.is_some() {
                        return Err(Failure::Usage("`verify mckay` uses the nilpotent formation".into()));
                    }
                    vec![mckay_report(&name, &g)?]
                }
                _ => {
                    let f = formation(opts)?;
                    let normals = parse_normals(&g, &opts.normal)?;
                    vec![per_formation(
                        check,
                        &name,
                        &g,
                        &f,
                        (!normals.is_empty()).then_some(&normals[..]),
                    )?]
                }
            };
            Ok(render(&reports, opts.json))
        }
    }
}

fn per_formation(
    check: Check,
    name: &str,
    g: &PermGroup,
    f: &Formation,
    normals: Option<&[PermGroup]>,
) -> formata::Result<Report> {
    match check {
        Check::Restriction => restriction_report(name, g, f, normals),
        Check::Kernel => kernel_report(name, g, f),
        Check::Equivalence => equivalence_report(name, g, f),
        Check::Counting => counting_report(name, g, f),
        Check::ExtensionTransfer => transfer_report(name, g, f),
        _ => unreachable!("handled by the caller"),
    }
}

#[derive(Debug, Clone)]
enum Task {
    PerFormation(Check, &'static str, Formation),
    Kernels(&'static str, u64),
    Mckay(&'static str),
    Counterexample,
}

/// Every verifier over the catalog, in a fixed order.
fn sweep_tasks() -> Vec<Task> {
    let formations: Vec<Formation> = SWEEP_FORMATIONS
        .iter()
        .map(|s| s.parse().expect("sweep formations parse"))
        .collect();
    let mut tasks = Vec::new();
    for entry in catalog::entries() {
        for f in &formations {
            for check in [
                Check::Counting,
                Check::Equivalence,
                Check::Restriction,
                Check::Kernel,
                Check::ExtensionTransfer,
            ] {
                tasks.push(Task::PerFormation(check, entry.name, f.clone()));
            }
        }
        for p in formata::group::prime_factors(entry.order) {
            tasks.push(Task::Kernels(entry.name, p));
        }
        tasks.push(Task::Mckay(entry.name));
    }
    tasks.push(Task::Counterexample);
    tasks
}

fn run_task(task: &Task) -> formata::Result<Report> {
    match task {
        Task::PerFormation(check, name, f) => per_formation(*check, name, &catalog::group(name)?, f, None),
        Task::Kernels(name, p) => pprime_kernel_report(name, &catalog::group(name)?, *p),
        Task::Mckay(name) => mckay_report(name, &catalog::group(name)?),
        Task::Counterexample => counterexample_report(),
    }
}

fn verify_all() -> formata::Result<Vec<Report>> {
    catalog::load_catalog()?;
    sweep_tasks().par_iter().map(run_task).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_has_a_fixed_shape() {
        let tasks = sweep_tasks();
        assert!(matches!(tasks.last(), Some(Task::Counterexample)));
        let per = tasks.iter().filter(|t| matches!(t, Task::PerFormation(..))).count();
        assert_eq!(per, catalog::entries().len() * SWEEP_FORMATIONS.len() * 5);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_command(["formata"]).0, EXIT_USAGE);
        assert_eq!(run_command(["formata", "table", "NoSuchGroup"]).0, EXIT_USAGE);
        assert_eq!(
            run_command(["formata", "headchars", "S4", "--formation", "bogus"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_command(["formata", "verify", "thm-a"]).0, EXIT_USAGE);
    }
}
