//! Acceptance sweep. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! All comparisons are exact. Time limits: 10 s per character table plus
//! oracle check, 300 s for two runs of `verify all`.

use std::time::{Duration, Instant};

use formata::character::irreducibles;
use formata::formation::projector;
use formata::head::reports::{
    counterexample_report, counting_report, equivalence_report, kernel_report, mckay_report, pprime_kernel_report,
    restriction_report, Report,
};
use formata::head::{fprime_ascending, is_head_character};
use formata::lattice::normal_subgroups;
use formata::oracle::{matches_table, ORACLE_MAX_ORDER};
use formata::{cache, catalog, ClassFunction, Formation, PermGroup};
use formata_cli::{run_command, EXIT_OK, SWEEP_FORMATIONS};
use serde_json::Value;

const TABLE_LIMIT: Duration = Duration::from_secs(10);
const SWEEP_LIMIT: Duration = Duration::from_secs(300);

type Check = Result<String, String>;

fn formations() -> Vec<Formation> {
    SWEEP_FORMATIONS.iter().map(|s| s.parse().unwrap()).collect()
}

fn groups() -> Vec<(&'static str, PermGroup)> {
    catalog::load_catalog()
        .unwrap()
        .into_iter()
        .map(|(e, g)| (e.name, g))
        .collect()
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok_report(r: formata::Result<Report>) -> Result<Report, String> {
    let r = r.map_err(|e| e.to_string())?;
    require(r.passed(), || r.to_string())?;
    Ok(r)
}

fn same_set(a: &[ClassFunction], b: &[ClassFunction]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.contains(x))
}

fn character_tables() -> Check {
    let mut with_oracle = 0;
    let mut slowest = Duration::ZERO;
    let all = groups();
    for (name, g) in &all {
        let start = Instant::now();
        let t = cache::character_table(g).map_err(|e| format!("{name}: {e}"))?;
        t.verify().map_err(|e| format!("{name}: {e}"))?;
        let squares: i64 = t.degrees().iter().map(|d| d * d).sum();
        require(squares as u64 == g.order(), || {
            format!("{name}: degrees square-sum to {squares}")
        })?;
        if g.order() <= ORACLE_MAX_ORDER {
            require(matches_table(&t).map_err(|e| format!("{name}: {e}"))?, || {
                format!("{name}: oracle disagrees")
            })?;
            with_oracle += 1;
        }
        let took = start.elapsed();
        require(took < TABLE_LIMIT, || format!("{name}: {took:?}"))?;
        slowest = slowest.max(took);
    }
    Ok(format!(
        "{} tables exact, {with_oracle} matched by the oracle, slowest {slowest:.2?}",
        all.len()
    ))
}

fn counting() -> Check {
    let mut n = 0;
    for (name, g) in groups() {
        for f in formations() {
            let heads = fprime_ascending(&g, &f).map_err(|e| e.to_string())?;
            let h = projector(&g, &f).map_err(|e| e.to_string())?;
            let lin = h.order() / h.derived_subgroup().unwrap().order();
            require(heads.len() as u64 == lin, || {
                format!("{name} {f}: {} vs {lin}", heads.len())
            })?;
            ok_report(counting_report(name, &g, &f))?;
            n += 1;
        }
    }
    Ok(format!("{n} instances"))
}

fn equivalence() -> Check {
    let mut n = 0;
    for (name, g) in groups() {
        for f in formations() {
            let heads = fprime_ascending(&g, &f).map_err(|e| e.to_string())?;
            let mut strong = Vec::new();
            for chi in irreducibles(&g).unwrap() {
                if is_head_character(&chi, &f).map_err(|e| e.to_string())? {
                    strong.push(chi);
                }
            }
            require(same_set(&heads, &strong), || format!("{name} {f}: sets differ"))?;
            ok_report(equivalence_report(name, &g, &f))?;
            n += 1;
        }
    }
    Ok(format!("{n} instances"))
}

fn part_c_checked(r: &Report) -> bool {
    r.instances
        .iter()
        .filter(|i| i.inputs.contains_key("part_b"))
        .all(|i| i.inputs.get("part_c") == Some(&Value::Bool(true)))
}

fn restriction() -> Check {
    let mut n = 0;
    let mut with_c = 0;
    for (name, g) in groups() {
        let normals = normal_subgroups(&g).unwrap();
        for f in formations() {
            let r = ok_report(restriction_report(name, &g, &f, None))?;
            n += r.instances.len();
            let expect_c = f == Formation::Nilpotent || g.order() % 2 == 1;
            if expect_c {
                require(part_c_checked(&r), || format!("{name} {f}: part (c) not checked"))?;
                with_c += 1;
            }
            let h = projector(&g, &f).unwrap();
            let index = g.order() / h.order();
            for chi in fprime_ascending(&g, &f).unwrap() {
                require(index % chi.degree() as u64 == 0, || {
                    format!("{name} {f}: degree {}", chi.degree())
                })?;
                for nn in normals.iter() {
                    let nilpotent_quotient = g.lower_central_series().unwrap().last().unwrap().is_subgroup_of(nn);
                    if nilpotent_quotient {
                        require(chi.restrict(nn).unwrap().is_irreducible().unwrap(), || {
                            format!("{name} {f}: reducible on N of order {}", nn.order())
                        })?;
                    }
                }
            }
        }
    }
    for name in ["C7:C3", "G75"] {
        let g = catalog::group(name).unwrap();
        for f in formations() {
            require(part_c_checked(&restriction_report(name, &g, &f, None).unwrap()), || {
                format!("{name} {f}: part (c) not checked")
            })?;
        }
    }
    Ok(format!(
        "{n} (chi, N) instances, part (c) on {with_c} group/formation pairs"
    ))
}

fn head_kernels() -> Check {
    let mut n = 0;
    for (name, g) in groups() {
        for f in formations() {
            ok_report(kernel_report(name, &g, &f))?;
            n += 1;
        }
    }
    let s4 = catalog::group("S4").unwrap();
    let r = kernel_report("S4", &s4, &Formation::Nilpotent).unwrap();
    let m = &r.instances[0].inputs["M_order"];
    require(*m == Value::from(1), || format!("S4 nilpotent: M of order {m}"))?;
    Ok(format!("{n} instances, S4 nilpotent M = 1"))
}

fn pprime_kernels() -> Check {
    let mut n = 0;
    for (name, g) in groups() {
        for p in g.prime_divisors() {
            ok_report(pprime_kernel_report(name, &g, p))?;
            n += 1;
        }
    }
    let s4 = catalog::group("S4").unwrap();
    let r = pprime_kernel_report("S4", &s4, 3).unwrap();
    let v4 = normal_subgroups(&s4)
        .unwrap()
        .iter()
        .find(|x| x.order() == 4)
        .unwrap()
        .clone();
    let k = r.instances[0].witnesses.subgroups["K_kernels"].join(";");
    let k = formata::groupfile::parse(&format!("degree 4\n{}", k.replace(';', "\n"))).unwrap();
    require(k == v4, || format!("S4 p=3: K of order {}", k.order()))?;
    Ok(format!("{n} (group, prime) instances, S4 p=3 gives V4"))
}

fn counterexample() -> Check {
    let r = counterexample_report().map_err(|e| e.to_string())?;
    let failure_observed = r
        .instances
        .iter()
        .find(|i| i.inputs.get("check") == Some(&Value::from("transfer fails")))
        .map(|i| i.pass)
        .ok_or("no transfer instance")?;
    require(r.passed() && failure_observed, || r.to_string())?;
    let (code, out) = run_command(["formata", "verify", "counterexample-2S4"]);
    require(code == EXIT_OK && out.starts_with("PASS"), || out)?;
    Ok("theta and phi extend, no extension of theta lies over one of phi".into())
}

fn mckay() -> Check {
    let s4 = catalog::group("S4").unwrap();
    let heads = fprime_ascending(&s4, &Formation::Nilpotent).unwrap();
    let mut degrees: Vec<i64> = heads.iter().map(|c| c.degree()).collect();
    degrees.sort();
    require(degrees == [1, 1, 3, 3], || format!("degrees {degrees:?}"))?;
    let odd: Vec<ClassFunction> = irreducibles(&s4)
        .unwrap()
        .into_iter()
        .filter(|c| c.degree() % 2 == 1)
        .collect();
    require(same_set(&heads, &odd), || "not the odd-degree characters".into())?;
    ok_report(mckay_report("S4", &s4))?;
    Ok("S4 head degrees 1,1,3,3".into())
}

fn determinism() -> Check {
    let start = Instant::now();
    let (c1, a) = run_command(["formata", "verify", "all"]);
    let (c2, b) = run_command(["formata", "verify", "all"]);
    let took = start.elapsed();
    require(c1 == EXIT_OK && c2 == EXIT_OK, || format!("exit codes {c1}, {c2}"))?;
    require(a == b, || "outputs differ".into())?;
    require(took < SWEEP_LIMIT, || format!("took {took:?}"))?;
    Ok(format!(
        "{} report lines, identical, two runs in {took:.2?}",
        a.lines().filter(|l| l.starts_with("PASS")).count()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("character tables", character_tables),
        ("counting", counting),
        ("equivalence", equivalence),
        ("restriction to normal subgroups", restriction),
        ("kernels of head characters", head_kernels),
        ("kernels of p'-degree characters", pprime_kernels),
        ("counterexample", counterexample),
        ("McKay specialization", mckay),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("PASS {} {label}: {detail}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL {} {label}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("FAIL {} {label}: panicked", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
