//! Normal subgroups, chief series, H-composition series and complements.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{COMPLEMENT_RANDOM_ATTEMPTS, DEFAULT_SEED};
use crate::error::{domain, Result};
use crate::group::{closure_set, PermGroup};
use crate::perm::Perm;

/// All normal subgroups, ascending in the canonical subgroup order.
///
/// Built as closures of unions of conjugacy classes: every normal subgroup
/// is a product of normal closures of single classes.
pub fn normal_subgroups(g: &PermGroup) -> Result<Arc<Vec<PermGroup>>> {
    if let Some(n) = g.inner.normals.get() {
        return Ok(n.clone());
    }
    let info = g.class_info()?.clone();
    let index = info.element_index().clone();
    let els = index.elements();
    let size = els.len();
    let to_bits = |h: &PermGroup| -> Result<FixedBitSet> {
        let mut b = FixedBitSet::with_capacity(size);
        for e in h.elements()? {
            b.insert(index.index_of(e).expect("subgroup element lies in the group"));
        }
        Ok(b)
    };
    let mut closures: Vec<FixedBitSet> = Vec::new();
    for c in info.classes().iter().skip(1) {
        let b = to_bits(&g.normal_closure(std::slice::from_ref(&c.representative))?)?;
        if !closures.contains(&b) {
            closures.push(b);
        }
    }
    let mut trivial = FixedBitSet::with_capacity(size);
    trivial.insert(index.index_of(&g.identity()).unwrap());
    let mut seen: HashSet<FixedBitSet> = HashSet::from([trivial.clone()]);
    let mut found = vec![trivial.clone()];
    let mut queue = VecDeque::from([trivial]);
    while let Some(n) = queue.pop_front() {
        for m in &closures {
            if m.is_subset(&n) {
                continue;
            }
            let mut prod = FixedBitSet::with_capacity(size);
            for a in n.ones() {
                for b in m.ones() {
                    prod.insert(index.index_of(&els[a].compose(&els[b])).unwrap());
                }
            }
            if seen.insert(prod.clone()) {
                found.push(prod.clone());
                queue.push_back(prod);
            }
        }
    }
    found.sort_by(|a, b| {
        a.count_ones(..)
            .cmp(&b.count_ones(..))
            .then_with(|| a.ones().cmp(b.ones()))
    });
    let groups: Vec<PermGroup> = found
        .iter()
        .map(|b| {
            if b.count_ones(..) == size {
                g.clone()
            } else {
                PermGroup::from_element_set(g.degree(), b.ones().map(|i| els[i].clone()).collect())
            }
        })
        .collect();
    Ok(g.inner.normals.get_or_init(|| Arc::new(groups)).clone())
}

/// Minimal elements of the nontrivial normal subgroups.
pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    g.require_solvable()?;
    let normals = normal_subgroups(g)?;
    let nontrivial: Vec<&PermGroup> = normals.iter().filter(|n| !n.is_trivial()).collect();
    Ok(nontrivial
        .iter()
        .filter(|n| !nontrivial.iter().any(|m| m.order() < n.order() && m.is_subgroup_of(n)))
        .map(|n| (*n).clone())
        .collect())
}

/// Chief series `1 = C₀ < C₁ < … < C_k = G`, each step the least normal subgroup above the last.
pub fn chief_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    g.require_solvable()?;
    let normals = normal_subgroups(g)?;
    let mut series = vec![normals[0].clone()];
    while series.last().unwrap().order() < g.order() {
        let last = series.last().unwrap();
        let next = normals
            .iter()
            .find(|n| n.order() > last.order() && last.is_subgroup_of(n))
            .expect("the whole group lies above every normal subgroup")
            .clone();
        series.push(next);
    }
    Ok(series)
}

/// Normal subgroups `Y` of `BH` with `A < Y < B`, in canonical order.
fn h_normal_between(a: &PermGroup, b: &PermGroup, h: &PermGroup) -> Result<Vec<PermGroup>> {
    let bh = b.join(h);
    let normals = normal_subgroups(&bh)?;
    Ok(normals
        .iter()
        .filter(|y| y.order() > a.order() && y.order() < b.order() && a.is_subgroup_of(y) && y.is_subgroup_of(b))
        .cloned()
        .collect())
}

/// `B/A` has no proper nontrivial section that is `H`-invariant and normal in `B`.
pub fn is_h_simple_factor(a: &PermGroup, b: &PermGroup, h: &PermGroup) -> Result<bool> {
    Ok(a.order() < b.order() && h_normal_between(a, b, h)?.is_empty())
}

fn refine(a: &PermGroup, b: &PermGroup, h: &PermGroup, out: &mut Vec<PermGroup>) -> Result<()> {
    match h_normal_between(a, b, h)?.into_iter().next() {
        None => out.push(b.clone()),
        Some(y) => {
            refine(a, &y, h, out)?;
            refine(&y, b, h, out)?;
        }
    }
    Ok(())
}

/// An H-composition series of `g` through the given anchors.
///
/// Anchors must be `H`-invariant subgroups of `g` forming a chain in which each
/// term is normal in the next (1 and `g` are added automatically). Each gap is
/// split at the least intermediate subgroup normal in the upper term times `H`.
pub fn h_composition_series(g: &PermGroup, h: &PermGroup, anchors: &[PermGroup]) -> Result<Vec<PermGroup>> {
    if !h.is_subgroup_of(g) {
        return Err(domain("H is not a subgroup of G"));
    }
    let mut chain: Vec<PermGroup> = vec![PermGroup::trivial(g.degree())];
    let mut sorted = anchors.to_vec();
    sorted.sort_by(|x, y| x.canonical_cmp(y));
    for a in sorted {
        if !a.is_subgroup_of(g) || !a.is_invariant_under(h) {
            return Err(domain("anchor is not an H-invariant subgroup of G"));
        }
        chain.push(a);
    }
    chain.push(g.clone());
    chain.dedup();
    for w in chain.windows(2) {
        if !w[0].is_normal_in(&w[1]) {
            return Err(domain("anchors do not form a chain of successively normal subgroups"));
        }
    }
    let mut series = vec![chain[0].clone()];
    for w in chain.windows(2) {
        refine(&w[0], &w[1], h, &mut series)?;
    }
    Ok(series)
}

/// Every H-composition series of `g`, bottom to top, stopping after `limit` series.
pub fn all_h_composition_series(g: &PermGroup, h: &PermGroup, limit: usize) -> Result<Vec<Vec<PermGroup>>> {
    if !h.is_subgroup_of(g) {
        return Err(domain("H is not a subgroup of G"));
    }
    fn descend(
        top: &PermGroup,
        h: &PermGroup,
        suffix: &mut Vec<PermGroup>,
        out: &mut Vec<Vec<PermGroup>>,
        limit: usize,
    ) -> Result<()> {
        if out.len() >= limit {
            return Ok(());
        }
        if top.is_trivial() {
            let mut s = suffix.clone();
            s.reverse();
            out.push(s);
            return Ok(());
        }
        let bh = top.join(h);
        let below: Vec<PermGroup> = normal_subgroups(&bh)?
            .iter()
            .filter(|y| y.order() < top.order() && y.is_subgroup_of(top))
            .cloned()
            .collect();
        for y in &below {
            let maximal = !below.iter().any(|z| z.order() > y.order() && y.is_subgroup_of(z));
            if maximal {
                suffix.push(y.clone());
                descend(y, h, suffix, out, limit)?;
                suffix.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut suffix = vec![g.clone()];
    descend(g, h, &mut suffix, &mut out, limit)?;
    Ok(out)
}

/// A complement to the abelian normal subgroup `a`, or `None` if there is none.
pub fn complement(g: &PermGroup, a: &PermGroup) -> Result<Option<PermGroup>> {
    complement_with_seed(g, a, DEFAULT_SEED)
}

/// As [`complement`], with an explicit seed for the randomized phase.
pub fn complement_with_seed(g: &PermGroup, a: &PermGroup, seed: u64) -> Result<Option<PermGroup>> {
    if !a.is_normal_in(g) || !a.is_abelian() {
        return Err(domain("complement requires an abelian normal subgroup"));
    }
    let index = g.order() / a.order();
    if index == 1 {
        return Ok(Some(PermGroup::trivial(g.degree())));
    }
    if a.is_trivial() {
        return Ok(Some(g.clone()));
    }
    let is_complement = |c: &PermGroup| -> Result<bool> {
        Ok(c.order() == index && c.elements()?.iter().filter(|x| a.contains(x)).count() == 1)
    };
    let els = g.elements()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..COMPLEMENT_RANDOM_ATTEMPTS {
        let k = 2 + attempt % 2;
        let gens: Vec<Perm> = (0..k).map(|_| els[rng.gen_range(0..els.len())].clone()).collect();
        let c = PermGroup::from_gens_unchecked(g.degree(), gens);
        if is_complement(&c)? {
            return Ok(Some(c));
        }
    }
    // Every complement meets each coset of `a` once, so it is generated by
    // lifts `g_i a_i` of any generating set of `G/A`.
    let mut lifts_of: Vec<Perm> = Vec::new();
    for x in g.generators() {
        if !a.contains(x) {
            lifts_of.push(x.clone());
        }
    }
    let a_els = a.elements()?.to_vec();
    let mut chosen: Vec<Perm> = Vec::new();
    backtrack(g.degree(), &lifts_of, &a_els, a, index, &mut chosen)
}

fn backtrack(
    degree: usize,
    gens: &[Perm],
    a_els: &[Perm],
    a: &PermGroup,
    index: u64,
    chosen: &mut Vec<Perm>,
) -> Result<Option<PermGroup>> {
    if chosen.len() == gens.len() {
        let set = closure_set(degree, chosen);
        if set.len() as u64 == index {
            return Ok(Some(PermGroup::with_elements(
                degree,
                chosen.clone(),
                set.into_iter().collect(),
            )));
        }
        return Ok(None);
    }
    let x = &gens[chosen.len()];
    for t in a_els {
        chosen.push(x.compose(t));
        let set = closure_set(degree, chosen);
        let meets = set.iter().filter(|y| a.contains(y)).count();
        if meets == 1 && set.len() as u64 <= index {
            if let Some(c) = backtrack(degree, gens, a_els, a, index, chosen)? {
                return Ok(Some(c));
            }
        }
        chosen.pop();
    }
    Ok(None)
}

/// The largest normal subgroup of `g` whose order is a power of `p`.
pub fn largest_normal_p_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let normals = normal_subgroups(g)?;
    Ok(normals
        .iter()
        .rev()
        .find(|n| crate::group::is_prime_power_of(n.order(), p))
        .expect("the trivial subgroup is a p-group")
        .clone())
}

/// The Fitting subgroup: product of the largest normal p-subgroups.
pub fn fitting_subgroup(g: &PermGroup) -> Result<PermGroup> {
    let mut f = PermGroup::trivial(g.degree());
    for p in g.prime_divisors() {
        f = f.join(&largest_normal_p_subgroup(g, p)?);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn g(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| Perm::parse(s, n).unwrap()).collect()).unwrap()
    }

    fn brute_normal_count(group: &PermGroup) -> usize {
        // Every normal subgroup is a union of classes; test all unions.
        let info = group.class_info().unwrap();
        let k = info.len();
        let mut count = 0;
        for mask in 0u32..(1 << (k - 1)) {
            let mut set: HashSet<Perm> = HashSet::from([group.identity()]);
            for c in 1..k {
                if mask & (1 << (c - 1)) != 0 {
                    set.extend(info.classes()[c].elements.iter().cloned());
                }
            }
            let closed = set.iter().all(|x| set.iter().all(|y| set.contains(&x.compose(y))));
            if closed {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn normal_subgroup_counts() {
        let s4 = PermGroup::symmetric(4);
        let ns = normal_subgroups(&s4).unwrap();
        assert_eq!(ns.iter().map(|n| n.order()).collect::<Vec<_>>(), vec![1, 4, 12, 24]);
        assert_eq!(normal_subgroups(&PermGroup::cyclic(6)).unwrap().len(), 4);
        let q8 = g(8, &["(0 1 3 2)(4 5 7 6)", "(0 4 3 7)(1 6 2 5)"]);
        assert_eq!(q8.order(), 8);
        assert_eq!(normal_subgroups(&q8).unwrap().len(), 6);
        assert_eq!(brute_normal_count(&q8), 6);
        assert_eq!(brute_normal_count(&s4), 4);
    }

    #[test]
    fn s4_chief_series() {
        let s4 = PermGroup::symmetric(4);
        let cs = chief_series(&s4).unwrap();
        assert_eq!(cs.iter().map(|n| n.order()).collect::<Vec<_>>(), vec![1, 4, 12, 24]);
        let mins = minimal_normal_subgroups(&s4).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
        let c6 = chief_series(&PermGroup::cyclic(6)).unwrap();
        let mut factors: Vec<u64> = c6.windows(2).map(|w| w[1].order() / w[0].order()).collect();
        factors.sort();
        assert_eq!(factors, vec![2, 3]);
        assert!(matches!(
            chief_series(&PermGroup::symmetric(5)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn h_composition_series_in_s4() {
        let s4 = PermGroup::symmetric(4);
        let d8 = s4.sylow(2).unwrap();
        let a4 = s4.derived_subgroup().unwrap();
        let v4 = a4.derived_subgroup().unwrap();
        let series = h_composition_series(&s4, &d8, &[a4.clone(), v4.clone()]).unwrap();
        assert_eq!(
            series.iter().map(|s| s.order()).collect::<Vec<_>>(),
            vec![1, 2, 4, 12, 24]
        );
        let c2 = &series[1];
        assert!(c2.is_invariant_under(&d8));
        assert!(c2.is_subgroup_of(&d8.center().unwrap()));
        for w in series.windows(2) {
            assert!(is_h_simple_factor(&w[0], &w[1], &d8).unwrap());
        }
        let all = all_h_composition_series(&s4, &d8, 100).unwrap();
        assert!(all.iter().all(|s| s.len() == series.len()));
        assert!(all.contains(&series));
    }

    #[test]
    fn h_composition_series_rejects_bad_anchors() {
        let s4 = PermGroup::symmetric(4);
        let d8 = s4.sylow(2).unwrap();
        let c3 = s4.sylow(3).unwrap();
        assert!(matches!(h_composition_series(&s4, &d8, &[c3]), Err(Error::Domain(_))));
    }

    #[test]
    fn complements() {
        let s4 = PermGroup::symmetric(4);
        let v4 = minimal_normal_subgroups(&s4).unwrap().remove(0);
        let c = complement(&s4, &v4).unwrap().unwrap();
        assert_eq!(c.order(), 6);
        let c4 = PermGroup::cyclic(4);
        let c2 = normal_subgroups(&c4).unwrap()[1].clone();
        assert_eq!(complement(&c4, &c2).unwrap(), None);
        assert!(matches!(complement(&s4, &s4.sylow(3).unwrap()), Err(Error::Domain(_))));
    }

    #[test]
    fn fitting() {
        let s4 = PermGroup::symmetric(4);
        assert_eq!(fitting_subgroup(&s4).unwrap().order(), 4);
        assert_eq!(fitting_subgroup(&PermGroup::cyclic(6)).unwrap().order(), 6);
    }
}
