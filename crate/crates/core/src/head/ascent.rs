//! Ascending construction of `Irr_F′(G)` and the descending membership test.

use crate::character::{extensions, irr_over, irreducibles, linear_characters, row_index, ClassFunction};
use crate::error::{domain, Result};
use crate::formation::Formation;
use crate::group::PermGroup;
use crate::head::series::CanonicalSeries;
use crate::head::unique_invariant_below;

/// One step of the ascent: `Δ_i ⊆ Irr(L_i)` and the resulting `Irr_F′(K_i H)`.
#[derive(Debug, Clone)]
pub struct AscentLayer {
    pub index: usize,
    pub delta: Vec<ClassFunction>,
    pub level: Vec<ClassFunction>,
}

fn push_unique(out: &mut Vec<ClassFunction>, c: ClassFunction) {
    if !out.contains(&c) {
        out.push(c);
    }
}

/// Every layer of the ascent, from `i = m-1` down to `i = 0`.
pub fn ascent_layers(series: &CanonicalSeries) -> Result<Vec<AscentLayer>> {
    let h = series.projector();
    let mut current = linear_characters(h)?;
    let mut layers = Vec::new();
    for i in (0..series.m()).rev() {
        let l = series.l(i);
        let mut delta = Vec::new();
        for chi in &current {
            let d = chi.restrict(l)?;
            if !d.is_irreducible()? {
                return Err(crate::error::inconsistent(format!(
                    "a head character of L_{i}H restricts reducibly to L_{i}"
                )));
            }
            push_unique(&mut delta, d);
        }
        let k = series.k(i);
        let mut level = Vec::new();
        for chi in irr_over(&series.kh(i), &delta)? {
            if chi.restrict(&k)?.is_irreducible()? {
                level.push(chi);
            }
        }
        current = level.clone();
        layers.push(AscentLayer { index: i, delta, level });
    }
    Ok(layers)
}

/// `Irr_F′(G)` in the table order of `G`.
pub fn fprime_ascending(g: &PermGroup, f: &Formation) -> Result<Vec<ClassFunction>> {
    fprime_ascending_in(&CanonicalSeries::new(g, f)?)
}

pub fn fprime_ascending_in(series: &CanonicalSeries) -> Result<Vec<ClassFunction>> {
    if series.m() == 0 {
        return linear_characters(series.group());
    }
    let top = ascent_layers(series)?.pop().expect("m > 0").level;
    let mut rows = top
        .into_iter()
        .map(|c| Ok((row_index(&c)?.unwrap_or(usize::MAX), c)))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|(r, _)| *r);
    Ok(rows.into_iter().map(|(_, c)| c).collect())
}

/// The chain `θ_i ∈ Irr(K_i)`, `φ_i ∈ Irr(L_i)` found by the descending test.
#[derive(Debug, Clone)]
pub struct DescendingWitness {
    pub accepted: bool,
    pub theta: Vec<ClassFunction>,
    pub phi: Vec<ClassFunction>,
    /// The first condition that failed, when `accepted` is false.
    pub failure: Option<String>,
}

impl DescendingWitness {
    fn reject(mut self, why: String) -> Self {
        self.accepted = false;
        self.failure = Some(why);
        self
    }
}

pub fn fprime_descending_test(chi: &ClassFunction, f: &Formation) -> Result<DescendingWitness> {
    fprime_descending_test_in(chi, &CanonicalSeries::new(chi.group(), f)?)
}

/// Membership in `Irr_F′(G)` via `χ_{K₀}` irreducible and the chain of extendible
/// `θ_i`, `φ_i` with `(φ_i)_{K_{i+1}} = θ_{i+1}`, each `φ_i` being the unique
/// `H`-invariant constituent below `θ_i`.
pub fn fprime_descending_test_in(chi: &ClassFunction, series: &CanonicalSeries) -> Result<DescendingWitness> {
    if chi.group() != series.group() {
        return Err(domain("character and series belong to different groups"));
    }
    if !chi.is_irreducible()? {
        return Err(domain("the descending test needs an irreducible character"));
    }
    let mut w = DescendingWitness {
        accepted: true,
        theta: Vec::new(),
        phi: Vec::new(),
        failure: None,
    };
    let theta0 = chi.restrict(&series.k(0))?;
    if !theta0.is_irreducible()? {
        return Ok(w.reject("the restriction to K₀ is reducible".into()));
    }
    w.theta.push(theta0);
    for i in 0..series.m() {
        let theta = w.theta[i].clone();
        if i > 0 && extensions(&theta, &series.kh(i))?.is_empty() {
            return Ok(w.reject(format!("θ_{i} does not extend to K_{i}H")));
        }
        let phi = unique_invariant_below(&theta, &series.triple(i)?)?;
        if extensions(&phi, &series.lh(i))?.is_empty() {
            return Ok(w.reject(format!("φ_{i} does not extend to L_{i}H")));
        }
        let next = phi.restrict(&series.k(i + 1))?;
        w.phi.push(phi);
        if !next.is_irreducible()? {
            return Ok(w.reject(format!("φ_{i} restricts reducibly to K_{}", i + 1)));
        }
        w.theta.push(next);
    }
    Ok(w)
}

/// Irreducible characters of `g` for which the descending test succeeds.
pub fn fprime_descending(series: &CanonicalSeries) -> Result<Vec<ClassFunction>> {
    let mut out = Vec::new();
    for chi in irreducibles(series.group())? {
        if fprime_descending_test_in(&chi, series)?.accepted {
            out.push(chi);
        }
    }
    Ok(out)
}
