//! Mechanical checks of the restriction, kernel, counting and extension theorems.
//!
//! Every check returns a [`Report`]: one [`Instance`] per input tuple, each
//! with the characters (as table rows of their own groups) and subgroups (as
//! generator lists) that witness the verdict.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog;
use crate::character::{extensions, gallagher_family, irreducibles, row_index, ClassFunction};
use crate::error::{domain, inconsistent, Result};
use crate::formation::{navarro_condition_with, projector, residual, Formation};
use crate::group::{p_part, PermGroup};
use crate::head::ascent::{fprime_ascending, fprime_ascending_in, fprime_descending_test_in};
use crate::head::pairs::{diamond_exchange_check, is_head_character_in, series_independence_check};
use crate::head::series::CanonicalSeries;
use crate::head::{invariant_constituents, unique_invariant_above, unique_invariant_below, NavarroTriple};
use crate::hom::quotient;
use crate::lattice::normal_subgroups;

/// How many `H`-composition series the independence and diamond checks visit.
pub const SERIES_LIMIT: usize = 32;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Witnesses {
    pub characters: BTreeMap<String, Vec<usize>>,
    pub subgroups: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub inputs: BTreeMap<String, Value>,
    pub pass: bool,
    pub witnesses: Witnesses,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub theorem: String,
    pub group: String,
    pub formation: Option<String>,
    pub instances: Vec<Instance>,
    pub summary: Summary,
}

impl Report {
    fn new(
        theorem: &str,
        group: &str,
        formation: Option<&Formation>,
        instances: Vec<Instance>,
        notes: Vec<String>,
    ) -> Self {
        let passed = instances.iter().filter(|i| i.pass).count();
        let summary = Summary {
            instances: instances.len(),
            passed,
            failed: instances.len() - passed,
            pass: passed == instances.len(),
            notes,
        };
        Report {
            theorem: theorem.to_string(),
            group: group.to_string(),
            formation: formation.map(|f| f.to_string()),
            instances,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {}", self.theorem, self.group)?;
        if let Some(form) = &self.formation {
            write!(f, " {form}")?;
        }
        write!(f, " ({}/{} instances)", self.summary.passed, self.summary.instances)?;
        for note in &self.summary.notes {
            write!(f, "\n  note: {note}")?;
        }
        for inst in self.instances.iter().filter(|i| !i.pass) {
            let inputs = serde_json::to_string(&inst.inputs).expect("inputs serialize");
            write!(f, "\n  failed: {inputs}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Builder {
    inputs: BTreeMap<String, Value>,
    witnesses: Witnesses,
}

impl Builder {
    fn input(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), v.into());
        self
    }

    fn chars(mut self, key: &str, chars: &[ClassFunction]) -> Result<Self> {
        let rows = chars.iter().map(row).collect::<Result<Vec<_>>>()?;
        self.witnesses.characters.insert(key.to_string(), rows);
        Ok(self)
    }

    fn sub(mut self, key: &str, g: &PermGroup) -> Self {
        self.witnesses.subgroups.insert(key.to_string(), g.generator_strings());
        self
    }

    fn done(self, pass: bool) -> Instance {
        Instance {
            inputs: self.inputs,
            pass,
            witnesses: self.witnesses,
        }
    }
}

fn row(c: &ClassFunction) -> Result<usize> {
    row_index(c)?.ok_or_else(|| inconsistent("character is not a row of its table"))
}

/// The extra hypothesis for extension transfer: `F` is the nilpotent formation or `|G|` is odd.
pub fn hypothesis_holds(g: &PermGroup, f: &Formation) -> bool {
    *f == Formation::Nilpotent || g.order() % 2 == 1
}

fn same_set(a: &[ClassFunction], b: &[ClassFunction]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.contains(x))
}

/// `G/N` is nilpotent.
fn nilpotent_quotient(g: &PermGroup, n: &PermGroup) -> Result<bool> {
    Ok(g.lower_central_series()?.last().expect("nonempty").is_subgroup_of(n))
}

/// Unique invariant constituent, degree divisibility and (under the hypothesis)
/// the head characters of `NH` below `χ`, for every head character `χ` and every `N`.
///
/// `normals` defaults to all normal subgroups of `g`.
pub fn restriction_report(name: &str, g: &PermGroup, f: &Formation, normals: Option<&[PermGroup]>) -> Result<Report> {
    let series = CanonicalSeries::new(g, f)?;
    let h = series.projector().clone();
    let heads = fprime_ascending_in(&series)?;
    let all;
    let normals = match normals {
        Some(n) => n,
        None => {
            all = normal_subgroups(g)?;
            &all[..]
        }
    };
    let flag = hypothesis_holds(g, f);
    let mut instances = Vec::new();
    for n in normals {
        if !n.is_normal_in(g) {
            return Err(domain("the restriction check needs normal subgroups"));
        }
        let nh = n.join(&h);
        let index = g.order() / nh.order();
        let nh_heads = if flag {
            Some(fprime_ascending_in(&CanonicalSeries::with_projector(&nh, f, &h)?)?)
        } else {
            None
        };
        let nilp = nilpotent_quotient(g, n)?;
        for chi in &heads {
            let mut b = Builder::default()
                .input("N_order", n.order())
                .input("index_G_NH", index)
                .sub("N", n)
                .sub("NH", &nh)
                .sub("H", &h)
                .chars("chi", std::slice::from_ref(chi))?;
            let inv = invariant_constituents(chi, n, &h)?;
            b = b.chars("theta", &inv)?.input("part_a", inv.len() == 1);
            let mut pass = inv.len() == 1;
            if let [theta] = &inv[..] {
                let (cd, td) = (chi.degree() as u64, theta.degree() as u64);
                let part_b = cd % td == 0 && index % (cd / td) == 0;
                b = b.input("part_b", part_b);
                pass &= part_b;
                if nilp {
                    let irreducible = chi.restrict(n)?.is_irreducible()?;
                    b = b.input("nilpotent_quotient_irreducible", irreducible);
                    pass &= irreducible;
                }
                match &nh_heads {
                    Some(nh_heads) => {
                        let below: Vec<ClassFunction> = chi
                            .restrict(&nh)?
                            .constituent_characters()?
                            .into_iter()
                            .filter(|c| nh_heads.contains(c))
                            .collect();
                        let mut part_c = !below.is_empty();
                        for d in &below {
                            part_c &= d.restrict(n)? == *theta;
                        }
                        if part_c {
                            let family = gallagher_family(&below[0], n)?;
                            part_c = below.iter().all(|d| family.contains(d));
                        }
                        b = b.chars("gamma", &below)?.input("part_c", part_c);
                        pass &= part_c;
                    }
                    None => b = b.input("part_c", "hypothesis not met"),
                }
            }
            instances.push(b.done(pass));
        }
    }
    let mut notes = Vec::new();
    if !flag {
        notes.push("part (c) skipped: F is not nilpotent and |G| is even".into());
    }
    Ok(Report::new("thm-a", name, Some(f), instances, notes))
}

/// `∩ ker χ` over head characters equals the largest normal `M` with `M ∩ H ≤ H′`.
///
/// Also checks that every normal `N` with `N ∩ H ≤ H′` lies in every kernel, and
/// that inflation from `G/N` gives exactly the head characters with `N` in their kernel.
pub fn kernel_report(name: &str, g: &PermGroup, f: &Formation) -> Result<Report> {
    let series = CanonicalSeries::new(g, f)?;
    let h = series.projector().clone();
    let hp = h.derived_subgroup()?;
    let heads = fprime_ascending_in(&series)?;
    let mut m1 = g.clone();
    for chi in &heads {
        m1 = m1.intersection(&chi.kernel()?)?;
    }
    let normals = normal_subgroups(g)?;
    let mut candidates = Vec::new();
    for n in normals.iter() {
        if n.intersection(&h)?.is_subgroup_of(&hp) {
            candidates.push(n.clone());
        }
    }
    let m2 = candidates
        .iter()
        .max_by_key(|n| n.order())
        .expect("the trivial subgroup qualifies")
        .clone();
    let maximum = candidates.iter().all(|n| n.is_subgroup_of(&m2));
    let mut instances = vec![Builder::default()
        .input("check", "kernel intersection")
        .input("M_order", m1.order())
        .input("unique_maximum", maximum)
        .sub("M_kernels", &m1)
        .sub("M_largest", &m2)
        .sub("H", &h)
        .done(maximum && m1 == m2)];
    for n in &candidates {
        instances.push(
            Builder::default()
                .input("check", "kernel containment")
                .input("N_order", n.order())
                .sub("N", n)
                .done(n.is_subgroup_of(&m1)),
        );
    }
    for n in normals.iter() {
        let (q, map) = quotient(g, n)?;
        let inflated = fprime_ascending(&q, f)?
            .iter()
            .map(|c| c.inflate(&map))
            .collect::<Result<Vec<_>>>()?;
        let mut expected = Vec::new();
        for chi in &heads {
            if n.is_subgroup_of(&chi.kernel()?) {
                expected.push(chi.clone());
            }
        }
        instances.push(
            Builder::default()
                .input("check", "inflation")
                .input("N_order", n.order())
                .sub("N", n)
                .chars("inflated", &inflated)?
                .chars("expected", &expected)?
                .done(same_set(&inflated, &expected)),
        );
    }
    Ok(Report::new("thm-b", name, Some(f), instances, Vec::new()))
}

/// `∩ ker χ` over `p′`-degree irreducibles equals the largest normal `K` with `N_K(P) ≤ P′`.
pub fn pprime_kernel_report(name: &str, g: &PermGroup, p: u64) -> Result<Report> {
    g.require_solvable()?;
    let sylow = g.sylow(p)?;
    let pp = sylow.derived_subgroup()?;
    let npg = g.normalizer(&sylow)?;
    let pprime: Vec<ClassFunction> = irreducibles(g)?
        .into_iter()
        .filter(|c| c.degree() as u64 % p != 0)
        .collect();
    let mut k1 = g.clone();
    for chi in &pprime {
        k1 = k1.intersection(&chi.kernel()?)?;
    }
    let mut candidates = Vec::new();
    for n in normal_subgroups(g)?.iter() {
        if npg.intersection(n)?.is_subgroup_of(&pp) {
            candidates.push(n.clone());
        }
    }
    let k2 = candidates
        .iter()
        .max_by_key(|n| n.order())
        .expect("the trivial subgroup qualifies")
        .clone();
    let maximum = candidates.iter().all(|n| n.is_subgroup_of(&k2));
    let inst = Builder::default()
        .input("p", p)
        .input("K_order", k1.order())
        .input("unique_maximum", maximum)
        .sub("K_kernels", &k1)
        .sub("K_largest", &k2)
        .sub("P", &sylow)
        .chars("p_prime_degree", &pprime)?
        .done(maximum && k1 == k2);
    Ok(Report::new("thm-c", name, None, vec![inst], Vec::new()))
}

/// `|Irr_F′(G)| = |H/H′|`.
pub fn counting_report(name: &str, g: &PermGroup, f: &Formation) -> Result<Report> {
    let series = CanonicalSeries::new(g, f)?;
    let h = series.projector();
    let heads = fprime_ascending_in(&series)?;
    let lin = h.order() / h.derived_subgroup()?.order();
    let inst = Builder::default()
        .input("head_characters", heads.len())
        .input("index_H_H'", lin)
        .sub("H", h)
        .chars("heads", &heads)?
        .done(heads.len() as u64 == lin);
    Ok(Report::new("counting", name, Some(f), vec![inst], Vec::new()))
}

/// Ascending construction, descending test and strong pair series pick out the
/// same characters; strong series do not depend on the composition series chosen;
/// diamonds of composition factors admit the exchange of one middle term.
pub fn equivalence_report(name: &str, g: &PermGroup, f: &Formation) -> Result<Report> {
    let series = CanonicalSeries::new(g, f)?;
    let h = series.projector().clone();
    let heads = fprime_ascending_in(&series)?;
    let mut instances = Vec::new();
    for chi in irreducibles(g)? {
        let ascending = heads.contains(&chi);
        let descending = fprime_descending_test_in(&chi, &series)?.accepted;
        let strong = is_head_character_in(&chi, &series)?;
        let mut b = Builder::default()
            .input("check", "membership")
            .input("ascending", ascending)
            .input("descending", descending)
            .input("strong_series", strong)
            .chars("chi", std::slice::from_ref(&chi))?;
        let mut pass = ascending == descending && ascending == strong;
        if ascending {
            let ind = series_independence_check(&chi, &h, SERIES_LIMIT)?;
            b = b
                .input("series_checked", ind.series_checked)
                .input("independent", ind.passed());
            pass &= ind.passed();
        }
        instances.push(b.done(pass));
    }
    let diamonds = diamond_exchange_check(g, &h, SERIES_LIMIT)?;
    instances.push(
        Builder::default()
            .input("check", "diamond exchange")
            .input("diamonds", diamonds.diamonds)
            .input("chains", diamonds.chains)
            .input("failures", diamonds.failures)
            .sub("H", &h)
            .done(diamonds.passed()),
    );
    Ok(Report::new("thm54", name, Some(f), instances, Vec::new()))
}

/// When the Carter subgroup is a Sylow `p`-subgroup, head characters for the
/// nilpotent formation are exactly the irreducibles of `p′`-degree.
pub fn mckay_report(name: &str, g: &PermGroup) -> Result<Report> {
    let f = Formation::Nilpotent;
    let h = projector(g, &f)?;
    let sylow_prime = g
        .prime_divisors()
        .into_iter()
        .find(|&p| h.order() == p_part(g.order(), p) && h.order() > 1 && p_part(h.order(), p) == h.order());
    let inst = match sylow_prime {
        None => Builder::default().input("applicable", false).sub("H", &h).done(true),
        Some(p) => {
            let heads = fprime_ascending(g, &f)?;
            let pprime: Vec<ClassFunction> = irreducibles(g)?
                .into_iter()
                .filter(|c| c.degree() as u64 % p != 0)
                .collect();
            Builder::default()
                .input("applicable", true)
                .input("p", p)
                .sub("H", &h)
                .chars("heads", &heads)?
                .chars("p_prime_degree", &pprime)?
                .done(same_set(&heads, &pprime))
        }
    };
    Ok(Report::new("mckay", name, Some(&f), vec![inst], Vec::new()))
}

/// For `φ ∈ Irr_H(L)` and `θ ∈ Irr_H(K)` over it: which extensions `η` of `φ` to
/// `LH` lie under some extension of `θ` to `G`, and conversely.
#[derive(Debug, Clone)]
pub struct TransferReport {
    pub hypothesis: bool,
    pub phi_extensions: Vec<ClassFunction>,
    pub theta_extensions: Vec<ClassFunction>,
    /// Per `η`: some extension of `θ` lies over `η`.
    pub upward: Vec<bool>,
    /// Per extension `χ` of `θ`: some `η` lies under `χ`.
    pub downward: Vec<bool>,
    /// Number of pairs `(η, χ)` with `χ` over `η`.
    pub linked_pairs: usize,
}

impl TransferReport {
    pub fn all_true(&self) -> bool {
        self.upward.iter().all(|&b| b) && self.downward.iter().all(|&b| b)
    }
}

pub fn extension_transfer_check(
    triple: &NavarroTriple,
    f: &Formation,
    theta: &ClassFunction,
    phi: &ClassFunction,
) -> Result<TransferReport> {
    if unique_invariant_below(theta, triple)? != *phi {
        return Err(domain("φ is not the H-invariant character below θ"));
    }
    let lh = triple.lower_h();
    let etas = extensions(phi, &lh)?;
    let chis = extensions(theta, triple.top())?;
    let mut linked = vec![vec![false; chis.len()]; etas.len()];
    for (i, eta) in etas.iter().enumerate() {
        for (j, chi) in chis.iter().enumerate() {
            linked[i][j] = chi.lies_over(eta)?;
        }
    }
    Ok(TransferReport {
        hypothesis: hypothesis_holds(triple.top(), f),
        upward: linked.iter().map(|r| r.iter().any(|&b| b)).collect(),
        downward: (0..chis.len()).map(|j| linked.iter().any(|r| r[j])).collect(),
        linked_pairs: linked.iter().flatten().filter(|&&b| b).count(),
        phi_extensions: etas,
        theta_extensions: chis,
    })
}

/// Extension transfer over every Navarro triple `(G, K, L)` of normal subgroups
/// and every `φ ∈ Irr_H(L)`; asserted only when the hypothesis holds.
pub fn transfer_report(name: &str, g: &PermGroup, f: &Formation) -> Result<Report> {
    f.require_contains_nilpotent()?;
    let h = projector(g, f)?;
    let flag = hypothesis_holds(g, f);
    let normals = normal_subgroups(g)?;
    let mut instances = Vec::new();
    for k in normals.iter() {
        for l in normals.iter().filter(|l| l.is_subgroup_of(k)) {
            if !navarro_condition_with(g, k, l, &h)? {
                continue;
            }
            let triple = NavarroTriple::new(g, k, l, &h)?;
            for phi in irreducibles(l)? {
                if !phi.is_invariant_under(&h)? {
                    continue;
                }
                let theta = unique_invariant_above(&phi, &triple)?;
                let t = extension_transfer_check(&triple, f, &theta, &phi)?;
                let inst = Builder::default()
                    .input("K_order", k.order())
                    .input("L_order", l.order())
                    .input("hypothesis", flag)
                    .input("all_true", t.all_true())
                    .sub("K", k)
                    .sub("L", l)
                    .chars("theta", std::slice::from_ref(&theta))?
                    .chars("phi", std::slice::from_ref(&phi))?
                    .chars("eta", &t.phi_extensions)?
                    .chars("chi", &t.theta_extensions)?
                    .done(!flag || t.all_true());
                instances.push(inst);
            }
        }
    }
    let notes = if flag {
        Vec::new()
    } else {
        vec!["hypothesis not met: entries are informational".into()]
    };
    Ok(Report::new("extension-transfer", name, Some(f), instances, notes))
}

/// The order-48 binary octahedral group with the supersolvable formation: `θ`
/// and `φ` both extend, yet no extension of `θ` to `G` lies over an extension
/// of `φ` to `LH`. Passes when that failure is observed.
pub fn counterexample_report() -> Result<Report> {
    let name = "2S4";
    let g = catalog::group(name)?;
    let f = Formation::Supersolvable;
    let h = projector(&g, &f)?;
    let k = residual(&g, &f)?;
    let l = k.derived_subgroup()?;
    let navarro = navarro_condition_with(&g, &k, &l, &h)?;
    let quaternion = k.order() == 8 && k.elements()?.iter().filter(|x| x.order() == 2).count() == 1;
    let mut instances = vec![Builder::default()
        .input("check", "structure")
        .input("K_order", k.order())
        .input("L_order", l.order())
        .input("navarro_condition", navarro)
        .sub("H", &h)
        .sub("K", &k)
        .sub("L", &l)
        .done(navarro && quaternion && l.order() == 2)];
    if !navarro {
        return Ok(Report::new("counterexample-2S4", name, Some(&f), instances, Vec::new()));
    }
    let triple = NavarroTriple::new(&g, &k, &l, &h)?;
    let nonlinear: Vec<ClassFunction> = irreducibles(&k)?.into_iter().filter(|c| c.degree() > 1).collect();
    let nontrivial: Vec<ClassFunction> = irreducibles(&l)?
        .into_iter()
        .filter(|c| c.kernel().map(|x| x != l).unwrap_or(false))
        .collect();
    let (theta, phi) = match (&nonlinear[..], &nontrivial[..]) {
        ([t], [p]) => (t.clone(), p.clone()),
        _ => {
            instances.push(Builder::default().input("check", "characters").done(false));
            return Ok(Report::new("counterexample-2S4", name, Some(&f), instances, Vec::new()));
        }
    };
    let over = theta.lies_over(&phi)?;
    let above = unique_invariant_above(&phi, &triple)? == theta;
    let t = extension_transfer_check(&triple, &f, &theta, &phi)?;
    let extend = !t.theta_extensions.is_empty() && !t.phi_extensions.is_empty();
    instances.push(
        Builder::default()
            .input("check", "characters")
            .input("theta_over_phi", over)
            .input("unique_invariant_above", above)
            .input("theta_extends_to_G", !t.theta_extensions.is_empty())
            .input("phi_extends_to_LH", !t.phi_extensions.is_empty())
            .chars("theta", std::slice::from_ref(&theta))?
            .chars("phi", std::slice::from_ref(&phi))?
            .done(over && above && extend),
    );
    instances.push(
        Builder::default()
            .input("check", "transfer fails")
            .input("hypothesis", t.hypothesis)
            .input("linked_pairs", t.linked_pairs)
            .input("all_true", t.all_true())
            .chars("eta", &t.phi_extensions)?
            .chars("chi", &t.theta_extensions)?
            .done(!t.hypothesis && t.linked_pairs == 0),
    );
    Ok(Report::new("counterexample-2S4", name, Some(&f), instances, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        PermGroup::symmetric(4)
    }

    #[test]
    fn restriction_checks_on_s4() {
        let r = restriction_report("S4", &s4(), &Formation::Nilpotent, None).unwrap();
        assert!(r.passed(), "{r}");
        let v4 = normal_subgroups(&s4())
            .unwrap()
            .iter()
            .find(|n| n.order() == 4)
            .unwrap()
            .clone();
        let r = restriction_report("S4", &s4(), &Formation::Nilpotent, Some(&[v4])).unwrap();
        let deg3 = r
            .instances
            .iter()
            .find(|i| i.inputs["index_G_NH"] == 3 && i.witnesses.characters["chi"].len() == 1)
            .unwrap();
        assert!(deg3.pass);
    }

    #[test]
    fn kernel_spot_values() {
        let r = kernel_report("S4", &s4(), &Formation::Nilpotent).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.instances[0].inputs["M_order"], 1);
        let g75 = catalog::group("G75").unwrap();
        let r = kernel_report("G75", &g75, &Formation::Supersolvable).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.instances[0].inputs["M_order"], 25);
    }

    #[test]
    fn pprime_kernel_spot_values() {
        let r = pprime_kernel_report("S4", &s4(), 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances[0].inputs["K_order"], 4);
        let r = pprime_kernel_report("S4", &s4(), 2).unwrap();
        assert_eq!(r.instances[0].inputs["K_order"], 1);
        let c6 = PermGroup::cyclic(6);
        let r = pprime_kernel_report("C6", &c6, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances[0].inputs["K_order"], 1);
    }

    #[test]
    fn counting_and_equivalence_on_s4() {
        for f in [Formation::Nilpotent, Formation::Supersolvable] {
            assert!(counting_report("S4", &s4(), &f).unwrap().passed());
            let r = equivalence_report("S4", &s4(), &f).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn mckay_on_s4() {
        let r = mckay_report("S4", &s4()).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances[0].inputs["p"], 2);
    }

    #[test]
    fn transfer_holds_for_odd_order() {
        let g = catalog::group("G75").unwrap();
        let r = transfer_report("G75", &g, &Formation::Supersolvable).unwrap();
        assert!(!r.instances.is_empty());
        assert!(r.instances.iter().all(|i| i.inputs["hypothesis"] == true && i.pass));
    }

    #[test]
    fn counterexample_is_confirmed() {
        let r = counterexample_report().unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }

    #[test]
    fn report_json_round_trip() {
        let r = counting_report("S4", &s4(), &Formation::Nilpotent).unwrap();
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(
            r.to_string().lines().next().unwrap(),
            "PASS counting S4 nilpotent (1/1 instances)"
        );
    }
}
