//! Head characters of a solvable group relative to a formation projector.
//!
//! The canonical series `G ▷ K₀ ▷ L₀ ▷ K₁ ▷ … ▷ K_m = 1` drives two
//! constructions of `Irr_F′(G)`: the ascending one, growing the set from the
//! linear characters of the projector `H`, and a descending membership test. A
//! third characterization, top characters of strong `H`-pair series, lives in
//! [`pairs`]. The report functions in [`reports`] check the equalities between
//! all of them along with the restriction and kernel theorems.

pub mod ascent;
pub mod pairs;
pub mod reports;
pub mod series;

use crate::character::{irreducibles, ClassFunction};
use crate::error::{domain, inconsistent, Result};
use crate::formation::navarro_condition_with;
use crate::group::PermGroup;

pub use ascent::{
    ascent_layers, fprime_ascending, fprime_ascending_in, fprime_descending_test, fprime_descending_test_in,
    AscentLayer, DescendingWitness,
};
pub use pairs::{
    diamond_exchange_check, is_head_character, is_head_character_in, series_independence_check, strong_series_for,
    DiamondReport, IndependenceReport, PairSeries, StrongSeries,
};
pub use series::{canonical_series, CanonicalSeries};

/// `(G, K, L, H)` with `K/L` abelian, `KH = G` and `K ∩ LH = L`.
#[derive(Debug, Clone)]
pub struct NavarroTriple {
    top: PermGroup,
    upper: PermGroup,
    lower: PermGroup,
    projector: PermGroup,
}

impl NavarroTriple {
    pub fn new(top: &PermGroup, upper: &PermGroup, lower: &PermGroup, projector: &PermGroup) -> Result<Self> {
        if !projector.is_subgroup_of(top) {
            return Err(domain("the projector is not a subgroup of the top group"));
        }
        if !navarro_condition_with(top, upper, lower, projector)? {
            return Err(domain("the triple does not satisfy the Navarro condition"));
        }
        Ok(NavarroTriple {
            top: top.clone(),
            upper: upper.clone(),
            lower: lower.clone(),
            projector: projector.clone(),
        })
    }

    pub fn top(&self) -> &PermGroup {
        &self.top
    }

    pub fn upper(&self) -> &PermGroup {
        &self.upper
    }

    pub fn lower(&self) -> &PermGroup {
        &self.lower
    }

    pub fn projector(&self) -> &PermGroup {
        &self.projector
    }

    /// `LH`.
    pub fn lower_h(&self) -> PermGroup {
        self.lower.join(&self.projector)
    }
}

fn require_invariant_irreducible(chi: &ClassFunction, h: &PermGroup, on: &PermGroup) -> Result<()> {
    if chi.group() != on {
        return Err(domain("character lives on the wrong subgroup"));
    }
    if !chi.is_irreducible()? {
        return Err(domain("character is not irreducible"));
    }
    if !chi.is_invariant_under(h)? {
        return Err(domain("character is not H-invariant"));
    }
    Ok(())
}

/// `H`-invariant irreducible constituents of `chi` restricted to `u`.
pub fn invariant_constituents(chi: &ClassFunction, u: &PermGroup, h: &PermGroup) -> Result<Vec<ClassFunction>> {
    let mut out = Vec::new();
    for c in chi.restrict(u)?.constituent_characters()? {
        if c.is_invariant_under(h)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// The unique `H`-invariant irreducible constituent of `θ_L`, for `θ ∈ Irr_H(K)`.
///
/// The scan is exhaustive; finding zero or several is reported as an inconsistency.
pub fn unique_invariant_below(theta: &ClassFunction, triple: &NavarroTriple) -> Result<ClassFunction> {
    require_invariant_irreducible(theta, &triple.projector, &triple.upper)?;
    let mut found = invariant_constituents(theta, &triple.lower, &triple.projector)?;
    if found.len() != 1 {
        return Err(inconsistent(format!(
            "{} H-invariant constituents below an H-invariant character of K",
            found.len()
        )));
    }
    Ok(found.remove(0))
}

/// The unique `θ ∈ Irr_H(K)` lying over `φ ∈ Irr_H(L)`.
pub fn unique_invariant_above(phi: &ClassFunction, triple: &NavarroTriple) -> Result<ClassFunction> {
    require_invariant_irreducible(phi, &triple.projector, &triple.lower)?;
    let mut found = Vec::new();
    for theta in irreducibles(&triple.upper)? {
        if theta.lies_over(phi)? && theta.is_invariant_under(&triple.projector)? {
            found.push(theta);
        }
    }
    if found.len() != 1 {
        return Err(inconsistent(format!(
            "{} H-invariant characters of K over an H-invariant character of L",
            found.len()
        )));
    }
    Ok(found.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::linear_characters;
    use crate::error::Error;
    use crate::formation::{projector, residual, Formation};

    fn s4_triple() -> NavarroTriple {
        let g = PermGroup::symmetric(4);
        let h = projector(&g, &Formation::Nilpotent).unwrap();
        let k = residual(&g, &Formation::Nilpotent).unwrap();
        let l = k.derived_subgroup().unwrap();
        NavarroTriple::new(&g, &k, &l, &h).unwrap()
    }

    #[test]
    fn trivial_goes_to_trivial() {
        let t = s4_triple();
        let theta = ClassFunction::trivial(t.upper()).unwrap();
        let phi = unique_invariant_below(&theta, &t).unwrap();
        assert_eq!(phi, ClassFunction::trivial(t.lower()).unwrap());
        assert_eq!(unique_invariant_above(&phi, &t).unwrap(), theta);
    }

    #[test]
    fn degree_three_of_a4_matches_fixed_linear_of_v4() {
        let t = s4_triple();
        let theta = irreducibles(t.upper())
            .unwrap()
            .into_iter()
            .find(|c| c.degree() == 3)
            .unwrap();
        let phi = unique_invariant_below(&theta, &t).unwrap();
        assert_eq!(phi.degree(), 1);
        assert_ne!(phi, ClassFunction::trivial(t.lower()).unwrap());
        let fixed: Vec<_> = linear_characters(t.lower())
            .unwrap()
            .into_iter()
            .filter(|c| c.degree() == 1 && c.is_invariant_under(t.projector()).unwrap())
            .collect();
        assert_eq!(fixed.len(), 2);
        assert!(fixed.contains(&phi));
        assert_eq!(unique_invariant_above(&phi, &t).unwrap(), theta);
    }

    #[test]
    fn rejects_non_invariant_input() {
        let t = s4_triple();
        let lin = irreducibles(t.upper()).unwrap();
        let moved = lin
            .iter()
            .find(|c| !c.is_invariant_under(t.projector()).unwrap())
            .unwrap();
        assert!(matches!(unique_invariant_below(moved, &t), Err(Error::Domain(_))));
    }

    #[test]
    fn navarro_condition_is_checked() {
        let g = PermGroup::symmetric(4);
        let h = projector(&g, &Formation::Nilpotent).unwrap();
        let k = residual(&g, &Formation::Nilpotent).unwrap();
        let one = PermGroup::trivial(4);
        assert!(NavarroTriple::new(&g, &k, &one, &h).is_err());
    }
}
