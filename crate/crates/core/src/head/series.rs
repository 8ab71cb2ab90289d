//! The canonical series `K₀ = G^F`, `L_i = K_i′`, `K_{i+1} = (L_i H)^F`.

use crate::error::{inconsistent, Result};
use crate::formation::{navarro_condition_with, projector, residual, Formation};
use crate::group::PermGroup;
use crate::head::NavarroTriple;

#[derive(Debug, Clone)]
pub struct CanonicalSeries {
    group: PermGroup,
    formation: Formation,
    projector: PermGroup,
    pairs: Vec<(PermGroup, PermGroup)>,
}

/// The canonical series of `g` for the projector computed by [`projector`].
pub fn canonical_series(g: &PermGroup, f: &Formation) -> Result<CanonicalSeries> {
    CanonicalSeries::new(g, f)
}

impl CanonicalSeries {
    pub fn new(g: &PermGroup, f: &Formation) -> Result<Self> {
        g.require_solvable()?;
        f.require_contains_nilpotent()?;
        let h = projector(g, f)?;
        Self::with_projector(g, f, &h)
    }

    /// The series built from a given F-projector `h` of `g`.
    pub fn with_projector(g: &PermGroup, f: &Formation, h: &PermGroup) -> Result<Self> {
        g.require_solvable()?;
        f.require_contains_nilpotent()?;
        if !h.is_subgroup_of(g) {
            return Err(crate::error::domain("the projector is not a subgroup"));
        }
        let mut pairs = Vec::new();
        let mut k = residual(g, f)?;
        while !k.is_trivial() {
            let l = k.derived_subgroup()?;
            let next = residual(&l.join(h), f)?;
            pairs.push((k, l));
            k = next;
        }
        let s = CanonicalSeries {
            group: g.clone(),
            formation: f.clone(),
            projector: h.clone(),
            pairs,
        };
        s.verify()?;
        Ok(s)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn formation(&self) -> &Formation {
        &self.formation
    }

    pub fn projector(&self) -> &PermGroup {
        &self.projector
    }

    /// `(K_i, L_i)` for `i = 0..m`.
    pub fn pairs(&self) -> &[(PermGroup, PermGroup)] {
        &self.pairs
    }

    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    pub fn k(&self, i: usize) -> PermGroup {
        self.pairs
            .get(i)
            .map(|p| p.0.clone())
            .unwrap_or_else(|| PermGroup::trivial(self.group.degree()))
    }

    pub fn l(&self, i: usize) -> &PermGroup {
        &self.pairs[i].1
    }

    /// `K_i H`, which is `G` for `i = 0`.
    pub fn kh(&self, i: usize) -> PermGroup {
        if i == 0 {
            self.group.clone()
        } else {
            self.k(i).join(&self.projector)
        }
    }

    /// `L_i H`.
    pub fn lh(&self, i: usize) -> PermGroup {
        self.pairs[i].1.join(&self.projector)
    }

    /// The Navarro triple `(K_i H, K_i, L_i)`.
    pub fn triple(&self, i: usize) -> Result<NavarroTriple> {
        let (k, l) = &self.pairs[i];
        NavarroTriple::new(&self.kh(i), k, l, &self.projector)
    }

    /// Members of the series in increasing order: `1, L_{m-1}, K_{m-1}, …, L₀, K₀, G`.
    pub fn anchors(&self) -> Vec<PermGroup> {
        let mut out = vec![PermGroup::trivial(self.group.degree())];
        for (k, l) in self.pairs.iter().rev() {
            out.push(l.clone());
            out.push(k.clone());
        }
        out.push(self.group.clone());
        out.dedup();
        out
    }

    fn verify(&self) -> Result<()> {
        let h = &self.projector;
        for (i, (k, l)) in self.pairs.iter().enumerate() {
            let kh = self.kh(i);
            if i == 0 {
                if k.join(h) != self.group {
                    return Err(inconsistent("K₀H ≠ G"));
                }
            } else {
                let (_, prev_l) = &self.pairs[i - 1];
                if !k.is_subgroup_of(prev_l) {
                    return Err(inconsistent(format!("K_{i} is not contained in L_{}", i - 1)));
                }
                if kh != prev_l.join(h) {
                    return Err(inconsistent(format!("K_{i}H ≠ L_{}H", i - 1)));
                }
            }
            if !navarro_condition_with(&kh, k, l, h)? {
                return Err(inconsistent(format!("the Navarro condition fails at level {i}")));
            }
        }
        if let Some((_, last)) = self.pairs.last() {
            if !last.is_subgroup_of(h) {
                return Err(inconsistent("L_{m-1}H ≠ H"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn s4_nilpotent() {
        let s = canonical_series(&PermGroup::symmetric(4), &Formation::Nilpotent).unwrap();
        assert_eq!(s.m(), 1);
        assert_eq!(s.k(0).order(), 12);
        assert_eq!(s.l(0).order(), 4);
        assert!(s.k(1).is_trivial());
        assert_eq!(s.projector().order(), 8);
        let orders: Vec<u64> = s.anchors().iter().map(|a| a.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn s4_supersolvable() {
        let s = canonical_series(&PermGroup::symmetric(4), &Formation::Supersolvable).unwrap();
        assert_eq!(s.m(), 1);
        assert_eq!(s.k(0).order(), 4);
        assert!(s.l(0).is_trivial());
    }

    #[test]
    fn groups_in_the_formation_have_empty_series() {
        let s = canonical_series(&PermGroup::cyclic(6), &Formation::Nilpotent).unwrap();
        assert_eq!(s.m(), 0);
        assert_eq!(s.anchors().len(), 2);
    }

    #[test]
    fn formations_without_nilpotent_groups_are_unsupported() {
        let r = canonical_series(&PermGroup::symmetric(4), &Formation::PGroups(2));
        assert!(matches!(r, Err(Error::Unsupported(_))));
    }
}
