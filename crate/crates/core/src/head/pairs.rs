//! Strong `H`-pair series over `H`-composition series.

use crate::character::{extensions, irreducibles, ClassFunction};
use crate::error::{domain, inconsistent, Result};
use crate::formation::Formation;
use crate::group::PermGroup;
use crate::head::invariant_constituents;
use crate::head::series::CanonicalSeries;
use crate::lattice::{all_h_composition_series, h_composition_series, is_h_simple_factor};

/// `(S_i, θ_i)` from `(1, 1)` up to `(G, χ)`, with an extension of each `θ_i` to `S_i H`.
#[derive(Debug, Clone)]
pub struct PairSeries {
    pub entries: Vec<(PermGroup, ClassFunction)>,
    pub extensions: Vec<ClassFunction>,
    pub projector: PermGroup,
}

impl PairSeries {
    pub fn top(&self) -> &ClassFunction {
        &self.entries.last().expect("nonempty series").1
    }

    /// The character attached to `s`, if `s` occurs in the series.
    pub fn character_at(&self, s: &PermGroup) -> Option<&ClassFunction> {
        self.entries.iter().find(|(x, _)| x == s).map(|(_, c)| c)
    }

    /// Re-checks every defining property of a strong `H`-pair series.
    pub fn is_strong(&self) -> Result<bool> {
        let h = &self.projector;
        for (i, (s, theta)) in self.entries.iter().enumerate() {
            if !s.is_invariant_under(h) || !theta.is_irreducible()? || !theta.is_invariant_under(h)? {
                return Ok(false);
            }
            let ext = &self.extensions[i];
            if *ext.group() != s.join(h) || ext.restrict(s)? != *theta || !ext.is_irreducible()? {
                return Ok(false);
            }
            if i > 0 && !theta.lies_over(&self.entries[i - 1].1)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Result of the top-down search for a strong series ending at `χ`.
#[derive(Debug, Clone)]
pub enum StrongSeries {
    Found(PairSeries),
    /// No strong series exists; `level` indexes the subgroup where the search stopped.
    Absent {
        level: usize,
        reason: String,
    },
}

impl StrongSeries {
    pub fn found(&self) -> Option<&PairSeries> {
        match self {
            StrongSeries::Found(p) => Some(p),
            StrongSeries::Absent { .. } => None,
        }
    }
}

fn validate_series(series: &[PermGroup], g: &PermGroup, h: &PermGroup) -> Result<()> {
    if series.len() < 1 || !series[0].is_trivial() || series.last() != Some(g) {
        return Err(domain("an H-composition series runs from 1 to G"));
    }
    for w in series.windows(2) {
        if !w[0].is_invariant_under(h) || !w[0].is_normal_in(&w[1]) || !is_h_simple_factor(&w[0], &w[1], h)? {
            return Err(domain("not an H-composition series"));
        }
    }
    Ok(())
}

fn first_extension(theta: &ClassFunction, over: &PermGroup) -> Result<Option<ClassFunction>> {
    Ok(extensions(theta, over)?.into_iter().next())
}

/// The unique strong `H`-pair series on `series` (bottom to top) with top `χ`.
///
/// Top-down: when `S_{i-1}H = S_iH` the next character is the restriction;
/// otherwise it is the only `H`-invariant constituent of the restriction
/// that extends to `S_{i-1}H`. Two invariant constituents alongside an
/// extendible one is reported as an inconsistency.
pub fn strong_series_for(chi: &ClassFunction, h: &PermGroup, series: &[PermGroup]) -> Result<StrongSeries> {
    let g = chi.group();
    validate_series(series, g, h)?;
    if !chi.is_irreducible()? {
        return Err(domain("strong series need an irreducible top character"));
    }
    let r = series.len() - 1;
    let mut entries = vec![(g.clone(), chi.clone())];
    let mut exts = vec![chi.clone()];
    for i in (1..=r).rev() {
        let s = &series[i];
        let u = &series[i - 1];
        let theta = &entries.last().unwrap().1;
        let uh = u.join(h);
        let (next, ext) = if uh == s.join(h) {
            let res = theta.restrict(u)?;
            if !res.is_irreducible()? {
                return Ok(StrongSeries::Absent {
                    level: i - 1,
                    reason: "restriction across a factor with S_{i-1}H = S_iH is reducible".into(),
                });
            }
            match first_extension(&res, &uh)? {
                Some(e) => (res, e),
                None => {
                    return Ok(StrongSeries::Absent {
                        level: i - 1,
                        reason: "the restriction does not extend to S_{i-1}H".into(),
                    })
                }
            }
        } else {
            let inv = invariant_constituents(theta, u, h)?;
            let mut ext = Vec::new();
            for c in &inv {
                if let Some(e) = first_extension(c, &uh)? {
                    ext.push((c.clone(), e));
                }
            }
            if ext.is_empty() {
                return Ok(StrongSeries::Absent {
                    level: i - 1,
                    reason: "no H-invariant constituent extends to S_{i-1}H".into(),
                });
            }
            if inv.len() > 1 {
                return Err(inconsistent(format!(
                    "{} H-invariant constituents below a strong level (expected exactly one)",
                    inv.len()
                )));
            }
            ext.remove(0)
        };
        entries.push((u.clone(), next));
        exts.push(ext);
    }
    entries.reverse();
    exts.reverse();
    let p = PairSeries {
        entries,
        extensions: exts,
        projector: h.clone(),
    };
    if !p.is_strong()? {
        return Err(inconsistent("constructed pair series failed its strongness check"));
    }
    Ok(StrongSeries::Found(p))
}

/// `χ` tops a strong pair series on the refinement of the canonical series.
pub fn is_head_character(chi: &ClassFunction, f: &Formation) -> Result<bool> {
    is_head_character_in(chi, &CanonicalSeries::new(chi.group(), f)?)
}

pub fn is_head_character_in(chi: &ClassFunction, series: &CanonicalSeries) -> Result<bool> {
    let h = series.projector();
    let comp = h_composition_series(series.group(), h, &series.anchors())?;
    Ok(strong_series_for(chi, h, &comp)?.found().is_some())
}

/// Strong series for one `χ` over many `H`-composition series.
#[derive(Debug, Clone)]
pub struct IndependenceReport {
    pub series_checked: usize,
    /// Every series admitted a strong pair series ending at `χ`.
    pub all_found: bool,
    /// Characters assigned to subgroups shared between series agree.
    pub consistent: bool,
}

impl IndependenceReport {
    pub fn passed(&self) -> bool {
        self.all_found && self.consistent
    }
}

/// Builds the strong series of `χ` on up to `limit` `H`-composition series and compares them.
pub fn series_independence_check(chi: &ClassFunction, h: &PermGroup, limit: usize) -> Result<IndependenceReport> {
    let all = all_h_composition_series(chi.group(), h, limit)?;
    let mut seen: Vec<(PermGroup, ClassFunction)> = Vec::new();
    let mut all_found = true;
    let mut consistent = true;
    for series in &all {
        match strong_series_for(chi, h, series)? {
            StrongSeries::Found(p) => {
                for (s, theta) in p.entries {
                    match seen.iter().find(|(x, _)| *x == s) {
                        Some((_, prev)) => consistent &= *prev == theta,
                        None => seen.push((s, theta)),
                    }
                }
            }
            StrongSeries::Absent { .. } => all_found = false,
        }
    }
    Ok(IndependenceReport {
        series_checked: all.len(),
        all_found,
        consistent,
    })
}

/// Outcome of the diamond exchange search.
#[derive(Debug, Clone, Default)]
pub struct DiamondReport {
    /// Distinct `(D, U, V, M)` configurations found.
    pub diamonds: usize,
    /// Chains `(D, γ) ◁ (U, θ) ◁ (M, α)` of extendible invariant characters examined.
    pub chains: usize,
    /// Chains with no matching `(V, β)`.
    pub failures: usize,
}

impl DiamondReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type Diamond = (PermGroup, PermGroup, PermGroup, PermGroup);

fn diamonds(g: &PermGroup, h: &PermGroup, limit: usize) -> Result<Vec<Diamond>> {
    let all = all_h_composition_series(g, h, limit)?;
    let mut factors: Vec<(PermGroup, PermGroup)> = Vec::new();
    for s in &all {
        for w in s.windows(2) {
            let f = (w[0].clone(), w[1].clone());
            if !factors.contains(&f) {
                factors.push(f);
            }
        }
    }
    let mut out: Vec<Diamond> = Vec::new();
    for (u, m) in &factors {
        for (v, m2) in &factors {
            if m2 != m || u == v || u.canonical_cmp(v) != std::cmp::Ordering::Less {
                continue;
            }
            let d = u.intersection(v)?;
            if factors.contains(&(d.clone(), u.clone())) && factors.contains(&(d.clone(), v.clone())) {
                out.push((d, u.clone(), v.clone(), m.clone()));
            }
        }
    }
    Ok(out)
}

fn extendible_invariant(n: &PermGroup, h: &PermGroup) -> Result<Vec<ClassFunction>> {
    let nh = n.join(h);
    let mut out = Vec::new();
    for c in irreducibles(n)? {
        if c.is_invariant_under(h)? && !extensions(&c, &nh)?.is_empty() {
            out.push(c);
        }
    }
    Ok(out)
}

/// For each diamond `D = U ∩ V < U, V < M` of `H`-composition factors and each
/// chain `(D, γ) ◁ (U, θ) ◁ (M, α)` of characters extending to `DH`, `UH`, `MH`,
/// looks for `β ∈ Irr_H(V)` extending to `VH` with `(D, γ) ◁ (V, β) ◁ (M, α)`.
/// Both orientations `U ↔ V` are checked.
pub fn diamond_exchange_check(g: &PermGroup, h: &PermGroup, limit: usize) -> Result<DiamondReport> {
    let mut report = DiamondReport::default();
    for (d, u, v, m) in diamonds(g, h, limit)? {
        report.diamonds += 1;
        let gammas = extendible_invariant(&d, h)?;
        let alphas = extendible_invariant(&m, h)?;
        for (a, b) in [(&u, &v), (&v, &u)] {
            let thetas = extendible_invariant(a, h)?;
            let betas = extendible_invariant(b, h)?;
            for gamma in &gammas {
                for theta in thetas.iter().filter(|t| t.lies_over(gamma).unwrap_or(false)) {
                    for alpha in alphas.iter().filter(|x| x.lies_over(theta).unwrap_or(false)) {
                        report.chains += 1;
                        let mut ok = false;
                        for beta in &betas {
                            if beta.lies_over(gamma)? && alpha.lies_over(beta)? {
                                ok = true;
                                break;
                            }
                        }
                        if !ok {
                            report.failures += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
