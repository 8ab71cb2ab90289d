//! Saturated formations, residuals and projectors of solvable groups.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cache::GroupCache;
use crate::config::{DEFAULT_SEED, FULL_VERIFICATION_ORDER};
use crate::error::{domain, inconsistent, Error, Result};
use crate::group::{is_prime, is_prime_power_of, p_part, PermGroup};
use crate::hom::quotient;
use crate::lattice::{
    chief_series, complement_with_seed, fitting_subgroup, minimal_normal_subgroups, normal_subgroups,
};
use crate::perm::Perm;

/// A named saturated formation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Formation {
    Nilpotent,
    Supersolvable,
    PGroups(u64),
    PiGroups(Vec<u64>),
    PNilpotent(u64),
    Metanilpotent,
    NilpotentLength(u32),
}

impl Formation {
    /// Whether every nilpotent group belongs to the formation.
    pub fn contains_nilpotent(&self) -> bool {
        match self {
            Formation::Nilpotent | Formation::Supersolvable | Formation::PNilpotent(_) | Formation::Metanilpotent => {
                true
            }
            Formation::NilpotentLength(l) => *l >= 1,
            Formation::PGroups(_) | Formation::PiGroups(_) => false,
        }
    }

    pub(crate) fn require_contains_nilpotent(&self) -> Result<()> {
        if self.contains_nilpotent() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "formation {self} does not contain the nilpotent groups"
            )))
        }
    }

    /// Membership of a solvable group.
    pub fn is_member(&self, g: &PermGroup) -> Result<bool> {
        g.require_solvable()?;
        self.member_unchecked(g)
    }

    fn member_unchecked(&self, g: &PermGroup) -> Result<bool> {
        if g.is_trivial() {
            return Ok(true);
        }
        match self {
            Formation::Nilpotent => {
                for p in g.prime_divisors() {
                    if !g.sylow(p)?.is_normal_in(g) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Formation::Supersolvable => Ok(chief_series(g)?
                .windows(2)
                .all(|w| is_prime(w[1].order() / w[0].order()))),
            Formation::PGroups(p) => Ok(is_prime_power_of(g.order(), *p)),
            Formation::PiGroups(ps) => Ok(g.prime_divisors().iter().all(|p| ps.contains(p))),
            Formation::PNilpotent(p) => {
                let pprime: Vec<Perm> = g.elements()?.iter().filter(|x| x.order() % p != 0).cloned().collect();
                let o = PermGroup::from_gens_unchecked(g.degree(), pprime).order();
                Ok(o == g.order() / p_part(g.order(), *p))
            }
            Formation::Metanilpotent => {
                let f = fitting_subgroup(g)?;
                let (q, _) = quotient(g, &f)?;
                Ok(q.is_nilpotent()?)
            }
            Formation::NilpotentLength(l) => Ok(nilpotent_length(g)? <= *l as usize),
        }
    }

    /// `U/N ∈ F` for `N ◁ U`.
    pub fn contains_quotient(&self, u: &PermGroup, n: &PermGroup) -> Result<bool> {
        if n.is_trivial() {
            return self.member_unchecked(u);
        }
        let (q, _) = quotient(u, n)?;
        self.member_unchecked(&q)
    }

    fn cache_key(&self) -> String {
        self.to_string()
    }
}

/// Length of the Fitting series, via iterated nilpotent residuals.
pub fn nilpotent_length(g: &PermGroup) -> Result<usize> {
    let mut cur = g.clone();
    let mut len = 0;
    while !cur.is_trivial() {
        let next = cur.lower_central_series()?.last().unwrap().clone();
        if next.order() == cur.order() {
            return Err(Error::Unsupported("group is not solvable".into()));
        }
        cur = next;
        len += 1;
    }
    Ok(len)
}

fn parse_prime(s: &str) -> std::result::Result<u64, String> {
    let p: u64 = s.trim().parse().map_err(|_| format!("bad prime {s:?}"))?;
    if is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not prime"))
    }
}

impl FromStr for Formation {
    type Err = String;

    /// Accepts `nilpotent`, `supersolvable`, `p-groups:<p>`, `pi-groups:<p1,p2,…>`,
    /// `p-nilpotent:<p>`, `metanilpotent` and `nilpotent-length:<l>`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let need = || arg.ok_or_else(|| format!("formation {name} needs an argument"));
        match (name.to_ascii_lowercase().replace('_', "-").as_str(), arg) {
            ("nilpotent", None) => Ok(Formation::Nilpotent),
            ("supersolvable", None) => Ok(Formation::Supersolvable),
            ("metanilpotent", None) => Ok(Formation::Metanilpotent),
            ("p-groups", _) => Ok(Formation::PGroups(parse_prime(need()?)?)),
            ("p-nilpotent", _) => Ok(Formation::PNilpotent(parse_prime(need()?)?)),
            ("pi-groups", _) => {
                let mut ps = need()?
                    .split(',')
                    .map(parse_prime)
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                ps.sort();
                ps.dedup();
                Ok(Formation::PiGroups(ps))
            }
            ("nilpotent-length", _) => {
                let l = need()?
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad nilpotent length {:?}", arg.unwrap_or("")))?;
                Ok(Formation::NilpotentLength(l))
            }
            _ => Err(format!("unknown formation {s:?}")),
        }
    }
}

impl fmt::Display for Formation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formation::Nilpotent => f.write_str("nilpotent"),
            Formation::Supersolvable => f.write_str("supersolvable"),
            Formation::PGroups(p) => write!(f, "p-groups:{p}"),
            Formation::PiGroups(ps) => {
                let s: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "pi-groups:{}", s.join(","))
            }
            Formation::PNilpotent(p) => write!(f, "p-nilpotent:{p}"),
            Formation::Metanilpotent => f.write_str("metanilpotent"),
            Formation::NilpotentLength(l) => write!(f, "nilpotent-length:{l}"),
        }
    }
}

fn residual_cache() -> &'static GroupCache<String, PermGroup> {
    static C: OnceLock<GroupCache<String, PermGroup>> = OnceLock::new();
    C.get_or_init(GroupCache::new)
}

fn projector_cache() -> &'static GroupCache<String, PermGroup> {
    static C: OnceLock<GroupCache<String, PermGroup>> = OnceLock::new();
    C.get_or_init(GroupCache::new)
}

pub fn is_member(g: &PermGroup, f: &Formation) -> Result<bool> {
    f.is_member(g)
}

/// `G^F`: the intersection of all normal `N` with `G/N ∈ F`.
pub fn residual(g: &PermGroup, f: &Formation) -> Result<PermGroup> {
    g.require_solvable()?;
    let r = residual_cache().get_or_compute(g, f.cache_key(), || {
        let mut acc = g.clone();
        for n in normal_subgroups(g)?.iter() {
            if !acc.is_subgroup_of(n) && f.contains_quotient(g, n)? {
                acc = acc.intersection(n)?;
            }
        }
        Ok(acc)
    })?;
    Ok((*r).clone())
}

/// An F-projector of `g` (cached, default seed).
pub fn projector(g: &PermGroup, f: &Formation) -> Result<PermGroup> {
    g.require_solvable()?;
    let h = projector_cache().get_or_compute(g, f.cache_key(), || projector_with_seed(g, f, DEFAULT_SEED))?;
    Ok((*h).clone())
}

/// An F-projector, with the complement search seeded by `seed`.
///
/// Recursion: `U/A` is a projector of `G/A` for the least minimal normal `A`;
/// if `U < G` recurse into `U`, otherwise `G^F = A` and any complement of `A` is a projector.
pub fn projector_with_seed(g: &PermGroup, f: &Formation, seed: u64) -> Result<PermGroup> {
    g.require_solvable()?;
    if f.member_unchecked(g)? {
        return Ok(g.clone());
    }
    let a = minimal_normal_subgroups(g)?
        .into_iter()
        .min_by(|x, y| x.canonical_cmp(y))
        .expect("a nontrivial solvable group has a minimal normal subgroup");
    let (q, map) = quotient(g, &a)?;
    let hbar = projector_with_seed(&q, f, seed)?;
    let u = map.preimage(&hbar)?;
    if u.order() < g.order() {
        return projector_with_seed(&u, f, seed);
    }
    complement_with_seed(g, &a, seed)?.ok_or_else(|| inconsistent("the residual has no complement"))
}

/// `U` is F-maximal in `G`: `U ∈ F` and no `V` with `U < V ≤ G` lies in `F`.
///
/// All supported formations are subgroup-closed, so it suffices to test the
/// one-element extensions `⟨U, x⟩`.
pub fn is_f_maximal_mod(g: &PermGroup, u: &PermGroup, n: &PermGroup, f: &Formation) -> Result<bool> {
    if !f.contains_quotient(u, n)? {
        return Ok(false);
    }
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    for x in g.elements()? {
        if u.contains(x) {
            continue;
        }
        let mut gens = u.generators().to_vec();
        gens.push(x.clone());
        let v = PermGroup::from_gens_unchecked(g.degree(), gens);
        let key = v.elements()?.to_vec();
        if !seen.insert(key) {
            continue;
        }
        if f.contains_quotient(&v, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every normal `M`: `HM/M ∈ F` and is F-maximal in `G/M`.
pub fn is_projector(g: &PermGroup, h: &PermGroup, f: &Formation) -> Result<bool> {
    for m in normal_subgroups(g)?.iter() {
        if !is_f_maximal_mod(g, &h.join(m), m, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force checks of the standard projector properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectorReport {
    /// `H` is a projector of every `U` with `H ≤ U ≤ G` (`None` above the verification bound).
    pub overgroups: Option<bool>,
    /// `HN/N` is a projector of `G/N` for every normal `N`.
    pub quotients: bool,
    /// `N_G(NH) = N·N_G(H)` for every normal `N`.
    pub normalizers: bool,
    /// `N_G(H) = H`.
    pub self_normalizing: bool,
    /// Whether self-normalization is implied by the formation.
    pub self_normalizing_required: bool,
}

impl ProjectorReport {
    pub fn fully_verified(&self) -> bool {
        self.overgroups.is_some()
    }

    pub fn passed(&self) -> bool {
        self.overgroups.unwrap_or(true)
            && self.quotients
            && self.normalizers
            && (self.self_normalizing || !self.self_normalizing_required)
    }
}

/// All subgroups `U` with `H ≤ U ≤ G`.
pub fn overgroups(g: &PermGroup, h: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut seen: HashSet<Vec<Perm>> = HashSet::from([h.elements()?.to_vec()]);
    let mut out = vec![h.clone()];
    let mut head = 0;
    while head < out.len() {
        let u = out[head].clone();
        head += 1;
        for x in g.elements()? {
            if u.contains(x) {
                continue;
            }
            let mut gens = u.generators().to_vec();
            gens.push(x.clone());
            let v = PermGroup::from_gens_unchecked(g.degree(), gens);
            if seen.insert(v.elements()?.to_vec()) {
                out.push(v);
            }
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

pub fn verify_projector_properties(g: &PermGroup, f: &Formation, h: &PermGroup) -> Result<ProjectorReport> {
    let normals = normal_subgroups(g)?;
    let mut per_m = Vec::with_capacity(normals.len());
    for m in normals.iter() {
        per_m.push(is_f_maximal_mod(g, &h.join(m), m, f)?);
    }
    // Normal subgroups of G/N are the M/N with N ≤ M.
    let quotients = normals
        .iter()
        .all(|n| normals.iter().zip(&per_m).all(|(m, ok)| !n.is_subgroup_of(m) || *ok));
    let ngh = g.normalizer(h)?;
    let mut normalizers = true;
    for n in normals.iter() {
        let nh = n.join(h);
        if g.normalizer(&nh)? != n.join(&ngh) {
            normalizers = false;
        }
    }
    let overgroups = if g.order() <= FULL_VERIFICATION_ORDER {
        let mut ok = true;
        for u in overgroups(g, h)? {
            if !is_projector(&u, h, f)? {
                ok = false;
                break;
            }
        }
        Some(ok)
    } else {
        None
    };
    Ok(ProjectorReport {
        overgroups,
        quotients,
        normalizers,
        self_normalizing: ngh == *h,
        self_normalizing_required: f.contains_nilpotent(),
    })
}

/// Order of the product set `AB`.
pub(crate) fn product_order(a: &PermGroup, b: &PermGroup) -> Result<u64> {
    Ok(a.order() * b.order() / a.intersection(b)?.order())
}

/// `K/L` abelian, `KH = G` and `K ∩ LH = L`, for an explicit `H`.
pub fn navarro_condition_with(g: &PermGroup, k: &PermGroup, l: &PermGroup, h: &PermGroup) -> Result<bool> {
    if !k.is_normal_in(g) || !l.is_normal_in(g) || !l.is_subgroup_of(k) {
        return Err(domain("Navarro condition needs normal subgroups L ≤ K"));
    }
    if !k.derived_subgroup()?.is_subgroup_of(l) {
        return Ok(false);
    }
    if product_order(k, h)? != g.order() {
        return Ok(false);
    }
    let lh = l.join(h);
    Ok(k.intersection(&lh)?.order() == l.order())
}

/// The Navarro condition for `(G, K, L)` with respect to the projector of `F`.
pub fn navarro_condition(g: &PermGroup, k: &PermGroup, l: &PermGroup, f: &Formation) -> Result<bool> {
    let h = projector(g, f)?;
    navarro_condition_with(g, k, l, &h)
}
