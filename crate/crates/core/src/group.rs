//! Finitely generated permutation groups.
//!
//! A [`PermGroup`] is a cheap handle (an `Arc`) to immutable generator data with
//! lazily populated caches: stabilizer chain, sorted element list, conjugacy
//! classes and normal subgroups. Subgroups live on the parent's points.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::bsgs::StabChain;
use crate::classes::ClassInfo;
use crate::config::max_order;
use crate::error::{domain, Error, Result};
use crate::perm::Perm;

pub(crate) struct GroupInner {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Arc<ElementIndex>>,
    pub(crate) classes: OnceLock<Arc<ClassInfo>>,
    pub(crate) normals: OnceLock<Arc<Vec<PermGroup>>>,
    fingerprint: OnceLock<u64>,
}

/// Sorted element list with index lookup.
pub struct ElementIndex {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl ElementIndex {
    fn new(mut elements: Vec<Perm>) -> Self {
        elements.sort();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        ElementIndex { elements, index }
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone)]
pub struct PermGroup {
    pub(crate) inner: Arc<GroupInner>,
}

impl PermGroup {
    /// Group generated by `gens` on `degree` points. Identity generators are dropped.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(domain(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
        Ok(Self::from_gens_unchecked(degree, gens))
    }

    pub(crate) fn from_gens_unchecked(degree: usize, gens: Vec<Perm>) -> Self {
        let mut seen = HashSet::new();
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_identity() && seen.insert(g.clone()))
            .collect();
        PermGroup {
            inner: Arc::new(GroupInner {
                degree,
                gens,
                chain: OnceLock::new(),
                elements: OnceLock::new(),
                classes: OnceLock::new(),
                normals: OnceLock::new(),
                fingerprint: OnceLock::new(),
            }),
        }
    }

    /// Builds a group whose full element set is already known.
    pub(crate) fn with_elements(degree: usize, gens: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let g = Self::from_gens_unchecked(degree, gens);
        let _ = g.inner.elements.set(Arc::new(ElementIndex::new(elements)));
        g
    }

    /// Subgroup generated by a set of elements, with a greedily reduced generating set.
    ///
    /// The generators are picked in increasing permutation order, so the
    /// result only depends on the element set.
    pub fn from_element_set(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        let target = elements.len();
        let mut gens: Vec<Perm> = Vec::new();
        let mut current: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
        for e in &elements {
            if current.len() >= target {
                break;
            }
            if !current.contains(e) {
                gens.push(e.clone());
                current = closure_set(degree, &gens);
            }
        }
        let all: Vec<Perm> = current.into_iter().collect();
        Self::with_elements(degree, gens, all)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_gens_unchecked(degree, Vec::new())
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![0, 1]]).unwrap());
            gens.push(Perm::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        Self::from_gens_unchecked(n, gens)
    }

    pub fn cyclic(n: usize) -> Self {
        let gens = if n >= 2 {
            vec![Perm::from_cycles(n, &[(0..n).collect()]).unwrap()]
        } else {
            vec![]
        };
        Self::from_gens_unchecked(n.max(1), gens)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    pub fn stab_chain(&self) -> &StabChain {
        self.inner
            .chain
            .get_or_init(|| StabChain::new(self.degree(), &self.inner.gens))
    }

    /// Order from the stabilizer chain.
    pub fn order(&self) -> u64 {
        if let Some(els) = self.inner.elements.get() {
            return els.len() as u64;
        }
        self.stab_chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.gens.is_empty() || self.order() == 1
    }

    /// Errors when the order exceeds the configured capacity bound.
    pub fn check_capacity(&self) -> Result<()> {
        let order = self.order();
        let bound = max_order();
        if order > bound {
            Err(Error::Capacity { order, bound })
        } else {
            Ok(())
        }
    }

    /// The sorted element index (enumerated on first use).
    pub fn element_index(&self) -> Result<&Arc<ElementIndex>> {
        if let Some(e) = self.inner.elements.get() {
            return Ok(e);
        }
        self.check_capacity()?;
        Ok(self
            .inner
            .elements
            .get_or_init(|| Arc::new(ElementIndex::new(self.stab_chain().elements()))))
    }

    pub fn elements(&self) -> Result<&[Perm]> {
        Ok(self.element_index()?.elements())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree() {
            return false;
        }
        if let Some(e) = self.inner.elements.get() {
            return e.index_of(g).is_some();
        }
        self.stab_chain().contains(g)
    }

    /// `self ≤ other` (generator-wise membership).
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    /// Deterministic hash of the element set; equal groups have equal fingerprints.
    pub fn fingerprint(&self) -> Result<u64> {
        if let Some(f) = self.inner.fingerprint.get() {
            return Ok(*f);
        }
        let mut h = DefaultHasher::new();
        self.degree().hash(&mut h);
        for e in self.elements()? {
            e.hash(&mut h);
        }
        Ok(*self.inner.fingerprint.get_or_init(|| h.finish()))
    }

    /// Total order on subgroups of a common parent: by order, then by sorted element list.
    pub fn canonical_cmp(&self, other: &PermGroup) -> std::cmp::Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| match (self.elements(), other.elements()) {
                (Ok(a), Ok(b)) => a.cmp(b),
                _ => self.generators().cmp(other.generators()),
            })
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Every generator of `self` commutes with every generator of `h`, conjugated into `self`.
    pub fn is_invariant_under(&self, h: &PermGroup) -> bool {
        h.generators()
            .iter()
            .all(|x| self.generators().iter().all(|s| self.contains(&s.conjugate_by(x))))
    }

    /// `self` is normal in `g` (and contained in it).
    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g) && self.is_invariant_under(g)
    }

    /// Subgroup generated by the generators of both.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.generators().to_vec();
        gens.extend(other.generators().iter().filter(|g| !self.contains(g)).cloned());
        PermGroup::from_gens_unchecked(self.degree(), gens)
    }

    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let els: Vec<Perm> = small
            .elements()?
            .iter()
            .filter(|e| large.contains(e))
            .cloned()
            .collect();
        Ok(PermGroup::from_element_set(self.degree(), els))
    }

    /// Smallest subgroup of `self` containing `gens` that is normalized by `self`.
    pub fn normal_closure(&self, gens: &[Perm]) -> Result<PermGroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(domain(format!("{g} is not an element of the group")));
            }
        }
        let degree = self.degree();
        let mut basis: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut set = closure_set(degree, &basis);
        let mut queue: VecDeque<Perm> = basis.iter().cloned().collect();
        while let Some(s) = queue.pop_front() {
            for x in self.generators() {
                let c = s.conjugate_by(x);
                if !set.contains(&c) {
                    basis.push(c.clone());
                    set = closure_set(degree, &basis);
                    queue.push_back(c);
                }
            }
        }
        Ok(PermGroup::with_elements(degree, basis, set.into_iter().collect()))
    }

    /// `[A, B]` for subgroups normal in `self`: normal closure of generator commutators.
    pub fn commutator_subgroup(&self, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
        let comms: Vec<Perm> = a
            .generators()
            .iter()
            .flat_map(|x| b.generators().iter().map(move |y| Perm::commutator(x, y)))
            .collect();
        self.normal_closure(&comms)
    }

    /// `G′`, the normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        self.commutator_subgroup(self, self)
    }

    pub fn derived_series(&self) -> Result<Vec<PermGroup>> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup()?;
            if next.order() == last.order() {
                return Ok(series);
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series()?.last().unwrap().is_trivial())
    }

    pub(crate) fn require_solvable(&self) -> Result<()> {
        if self.is_solvable()? {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "group of order {} is not solvable",
                self.order()
            )))
        }
    }

    pub fn lower_central_series(&self) -> Result<Vec<PermGroup>> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, self)?;
            if next.order() == last.order() {
                return Ok(series);
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.lower_central_series()?.last().unwrap().is_trivial())
    }

    pub fn centralizer(&self, g: &Perm) -> Result<PermGroup> {
        if !self.contains(g) {
            return Err(domain(format!("{g} is not an element of the group")));
        }
        self.centralizer_of_element(g)
    }

    /// Centralizer in `self` of an arbitrary permutation of the same degree.
    pub(crate) fn centralizer_of_element(&self, g: &Perm) -> Result<PermGroup> {
        let els = self
            .elements()?
            .iter()
            .filter(|x| x.compose(g) == g.compose(x))
            .cloned()
            .collect();
        Ok(PermGroup::from_element_set(self.degree(), els))
    }

    /// Normalizer in `self` of a subgroup `u ≤ self`.
    pub fn normalizer(&self, u: &PermGroup) -> Result<PermGroup> {
        if !u.is_subgroup_of(self) {
            return Err(domain("subgroup is not contained in the group"));
        }
        self.normalizer_of(u)
    }

    /// Elements of `self` normalizing `u` (which need not lie in `self`).
    pub(crate) fn normalizer_of(&self, u: &PermGroup) -> Result<PermGroup> {
        let els = self
            .elements()?
            .iter()
            .filter(|x| u.generators().iter().all(|s| u.contains(&s.conjugate_by(x))))
            .cloned()
            .collect();
        Ok(PermGroup::from_element_set(self.degree(), els))
    }

    pub fn center(&self) -> Result<PermGroup> {
        let els = self
            .elements()?
            .iter()
            .filter(|x| self.generators().iter().all(|s| x.compose(s) == s.compose(x)))
            .cloned()
            .collect();
        Ok(PermGroup::from_element_set(self.degree(), els))
    }

    /// `u^x = x⁻¹ u x`.
    pub fn conjugate(&self, x: &Perm) -> PermGroup {
        PermGroup::from_gens_unchecked(
            self.degree(),
            self.generators().iter().map(|g| g.conjugate_by(x)).collect(),
        )
    }

    /// Exponent: lcm of element orders.
    pub fn exponent(&self) -> Result<u64> {
        let info = self.class_info()?;
        Ok(info
            .classes()
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.representative.order())))
    }

    /// A Sylow `p`-subgroup, grown deterministically inside successive normalizers.
    pub fn sylow(&self, p: u64) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(domain(format!("{p} is not prime")));
        }
        let target = p_part(self.order(), p);
        let degree = self.degree();
        let mut current = PermGroup::trivial(degree);
        while current.order() < target {
            let norm = self.normalizer_of(&current)?;
            let x = norm
                .elements()?
                .iter()
                .find(|x| !current.contains(x) && current.contains(&x.pow(p)))
                .cloned()
                .ok_or_else(|| Error::Inconsistent("no p-element in normalizer quotient".into()))?;
            let mut gens = current.generators().to_vec();
            gens.push(x);
            let els = closure_set(degree, &gens).into_iter().collect();
            current = PermGroup::with_elements(degree, gens, els);
        }
        Ok(current)
    }

    /// Distinct prime divisors of the order, ascending.
    pub fn prime_divisors(&self) -> Vec<u64> {
        prime_factors(self.order())
    }

    /// Subgroup of `self` generated by `gens`, checking containment.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        for g in &gens {
            if !self.contains(g) {
                return Err(domain(format!("{g} is not an element of the group")));
            }
        }
        PermGroup::new(self.degree(), gens)
    }

    /// Elements of the product set `self · other` (both subgroups of a common group).
    pub fn product_set(&self, other: &PermGroup) -> Result<HashSet<Perm>> {
        let mut out = HashSet::new();
        for a in self.elements()? {
            for b in other.elements()? {
                out.insert(a.compose(b));
            }
        }
        Ok(out)
    }

    pub fn class_info(&self) -> Result<&Arc<ClassInfo>> {
        if let Some(c) = self.inner.classes.get() {
            return Ok(c);
        }
        let info = ClassInfo::compute(self)?;
        Ok(self.inner.classes.get_or_init(|| Arc::new(info)))
    }

    /// Generators in cycle notation.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators().iter().map(|g| g.to_string()).collect()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.degree() == other.degree() && self.order() == other.order() && self.is_subgroup_of(other))
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(order {}, <", self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">)")
    }
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators().is_empty() {
            return write!(f, "order 1 <()>");
        }
        write!(f, "order {} <{}>", self.order(), self.generator_strings().join(", "))
    }
}

/// Breadth-first closure of a generating set.
pub(crate) fn closure_set(degree: usize, gens: &[Perm]) -> HashSet<Perm> {
    let id = Perm::identity(degree);
    let mut set = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = x.compose(g);
                if set.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    set
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n > 0 && n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

pub fn is_prime_power_of(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}
