//! Class functions and the restriction/induction toolkit.

pub mod json;
pub mod table;

use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::cache;
use crate::classes::ClassInfo;
use crate::cyclotomic::Cyclotomic;
use crate::error::{domain, Result};
use crate::group::PermGroup;
use crate::hom::GroupMap;
use crate::perm::Perm;

pub use table::CharacterTable;

/// A class function: one value per conjugacy class, in the group's class order.
#[derive(Clone)]
pub struct ClassFunction {
    group: PermGroup,
    info: Arc<ClassInfo>,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: &PermGroup, values: Vec<Cyclotomic>) -> Result<Self> {
        let info = group.class_info()?.clone();
        if values.len() != info.len() {
            return Err(domain(format!(
                "{} values given for a group with {} classes",
                values.len(),
                info.len()
            )));
        }
        Ok(ClassFunction {
            group: group.clone(),
            info,
            values,
        })
    }

    pub fn trivial(group: &PermGroup) -> Result<Self> {
        let k = group.class_info()?.len();
        ClassFunction::new(group, vec![Cyclotomic::one(); k])
    }

    pub fn regular(group: &PermGroup) -> Result<Self> {
        let k = group.class_info()?.len();
        let mut v = vec![Cyclotomic::zero(); k];
        v[0] = Cyclotomic::from_int(group.order() as i64);
        ClassFunction::new(group, v)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn class_info(&self) -> &Arc<ClassInfo> {
        &self.info
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Value at an element of the group.
    pub fn at(&self, g: &Perm) -> Result<&Cyclotomic> {
        let c = self
            .info
            .class_of(g)
            .ok_or_else(|| domain(format!("{g} is not in the group")))?;
        Ok(&self.values[c])
    }

    /// The value at the identity as an integer (0 if it is not one).
    pub fn degree(&self) -> i64 {
        self.values[0].to_integer().unwrap_or(0)
    }

    fn same_group(&self, other: &ClassFunction) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(domain("class functions live on different groups"))
        }
    }

    /// `(1/|G|) Σ_g a(g) · conj(b(g))`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Cyclotomic> {
        self.same_group(other)?;
        let mut acc = Cyclotomic::zero();
        for (c, cls) in self.info.classes().iter().enumerate() {
            let term = &self.values[c] * &other.values[c].conj();
            acc = &acc + &term.scale(Rational64::from_integer(cls.size as i64));
        }
        Ok(acc.scale(Rational64::new(1, self.info.group_order() as i64)))
    }

    /// Inner product as a rational number (errors if it is not rational).
    pub fn inner_rational(&self, other: &ClassFunction) -> Result<Rational64> {
        self.inner_product(other)?
            .to_rational()
            .ok_or_else(|| domain("inner product is not rational"))
    }

    pub fn norm(&self) -> Result<Rational64> {
        self.inner_rational(self)
    }

    pub fn product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_group(other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            info: self.info.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    pub fn sum(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_group(other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            info: self.info.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            info: self.info.clone(),
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    /// Restriction to a subgroup `u ≤ G`.
    pub fn restrict(&self, u: &PermGroup) -> Result<ClassFunction> {
        if !u.is_subgroup_of(&self.group) {
            return Err(domain("restriction target is not a subgroup"));
        }
        let uinfo = u.class_info()?.clone();
        let values = uinfo
            .classes()
            .iter()
            .map(|c| self.values[self.info.class_of(&c.representative).unwrap()].clone())
            .collect();
        Ok(ClassFunction {
            group: u.clone(),
            info: uinfo,
            values,
        })
    }

    /// Induction to an overgroup `g ≥ U`.
    pub fn induce(&self, g: &PermGroup) -> Result<ClassFunction> {
        if !self.group.is_subgroup_of(g) {
            return Err(domain("induction source is not a subgroup"));
        }
        let ginfo = g.class_info()?.clone();
        let mut sums = vec![Cyclotomic::zero(); ginfo.len()];
        for (c, cls) in self.info.classes().iter().enumerate() {
            let j = ginfo.class_of(&cls.representative).unwrap();
            sums[j] = &sums[j] + &self.values[c].scale(Rational64::from_integer(cls.size as i64));
        }
        let u = self.info.group_order() as i64;
        let values = sums
            .iter()
            .enumerate()
            .map(|(j, s)| s.scale(Rational64::new(ginfo.centralizer_order(j) as i64, u)))
            .collect();
        Ok(ClassFunction {
            group: g.clone(),
            info: ginfo,
            values,
        })
    }

    /// Decomposition into irreducibles: `(row index, multiplicity)` for nonzero multiplicities.
    pub fn constituents(&self) -> Result<Vec<(usize, u64)>> {
        let table = cache::character_table(&self.group)?;
        let mut out = Vec::new();
        for (i, chi) in table.irreducibles().iter().enumerate() {
            let m = self.inner_rational(chi)?;
            if !m.is_integer() || m.is_negative() {
                return Err(domain(format!("not a character: multiplicity {m} for row {i}")));
            }
            if !m.is_zero() {
                out.push((i, m.to_integer() as u64));
            }
        }
        Ok(out)
    }

    /// The irreducible constituents themselves, in table order.
    pub fn constituent_characters(&self) -> Result<Vec<ClassFunction>> {
        let table = cache::character_table(&self.group)?;
        Ok(self
            .constituents()?
            .into_iter()
            .map(|(i, _)| table.irreducibles()[i].clone())
            .collect())
    }

    /// Norm 1 and positive degree.
    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.degree() > 0 && self.norm()? == Rational64::from_integer(1))
    }

    /// `⟨self_N, θ⟩ ≠ 0` for `θ` on a subgroup `N`.
    pub fn lies_over(&self, theta: &ClassFunction) -> Result<bool> {
        Ok(!self.restrict(theta.group())?.inner_product(theta)?.is_zero())
    }

    /// `{g : χ(g) = χ(1)}`.
    pub fn kernel(&self) -> Result<PermGroup> {
        let d = &self.values[0];
        let els = self
            .info
            .classes()
            .iter()
            .enumerate()
            .filter(|(c, _)| self.values[*c] == *d)
            .flat_map(|(_, cls)| cls.elements.iter().cloned())
            .collect();
        Ok(PermGroup::from_element_set(self.group.degree(), els))
    }

    /// `θ^g`, with `θ^g(x) = θ(g x g⁻¹)`, for `g` normalizing the underlying group.
    pub fn conjugate(&self, g: &Perm) -> Result<ClassFunction> {
        let ginv = g.inverse();
        let n = &self.group;
        if !n.generators().iter().all(|x| n.contains(&x.conjugate_by(g))) {
            return Err(domain(format!("{g} does not normalize the subgroup")));
        }
        let values = self
            .info
            .classes()
            .iter()
            .map(|c| {
                let y = c.representative.conjugate_by(&ginv);
                self.values[self.info.class_of(&y).expect("normalizing element")].clone()
            })
            .collect();
        Ok(ClassFunction {
            group: n.clone(),
            info: self.info.clone(),
            values,
        })
    }

    /// Invariance under conjugation by `h`, which must normalize the underlying group.
    pub fn is_invariant_under(&self, h: &PermGroup) -> Result<bool> {
        if !self.group.is_invariant_under(h) {
            return Err(domain("the acting group does not normalize the subgroup"));
        }
        for x in h.generators() {
            if self.conjugate(x)? != *self {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pulls a class function of the target of `map` back to its source.
    pub fn inflate(&self, map: &GroupMap) -> Result<ClassFunction> {
        if *map.target() != self.group {
            return Err(domain("inflation map does not end at this group"));
        }
        let src = map.source();
        let sinfo = src.class_info()?.clone();
        let values = sinfo
            .classes()
            .iter()
            .map(|c| Ok(self.values[self.info.class_of(&map.image(&c.representative)?).unwrap()].clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction {
            group: src.clone(),
            info: sinfo,
            values,
        })
    }

    /// The class function of the target of `map` whose inflation is `self`.
    ///
    /// Requires the kernel of `map` to lie in the kernel of `self`.
    pub fn deflate(&self, map: &GroupMap) -> Result<ClassFunction> {
        if *map.source() != self.group {
            return Err(domain("deflation map does not start at this group"));
        }
        let target = map.target();
        let tinfo = target.class_info()?.clone();
        let mut values: Vec<Option<Cyclotomic>> = vec![None; tinfo.len()];
        for (c, cls) in self.info.classes().iter().enumerate() {
            for x in &cls.elements {
                let j = tinfo.class_of(&map.image(x)?).unwrap();
                match &values[j] {
                    Some(v) if *v != self.values[c] => {
                        return Err(domain("class function is not constant on kernel cosets"));
                    }
                    Some(_) => {}
                    None => values[j] = Some(self.values[c].clone()),
                }
            }
        }
        Ok(ClassFunction {
            group: target.clone(),
            info: tinfo,
            values: values.into_iter().map(|v| v.unwrap()).collect(),
        })
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && self.group == other.group
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// `⟨a, b⟩`.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Cyclotomic> {
    a.inner_product(b)
}

/// Irreducible characters of `g`, in table order.
pub fn irreducibles(g: &PermGroup) -> Result<Vec<ClassFunction>> {
    Ok(cache::character_table(g)?.irreducibles().to_vec())
}

/// The degree-one rows of the table of `g`.
pub fn linear_characters(g: &PermGroup) -> Result<Vec<ClassFunction>> {
    Ok(irreducibles(g)?.into_iter().filter(|c| c.degree() == 1).collect())
}

/// All `χ ∈ Irr(g)` with `χ_N = θ`.
pub fn extensions(theta: &ClassFunction, g: &PermGroup) -> Result<Vec<ClassFunction>> {
    let mut out = Vec::new();
    for chi in irreducibles(g)? {
        if chi.degree() == theta.degree() && chi.restrict(theta.group())? == *theta {
            out.push(chi);
        }
    }
    Ok(out)
}

/// `Irr(g | Δ)`: irreducible characters of `g` lying over some member of `delta`.
pub fn irr_over(g: &PermGroup, delta: &[ClassFunction]) -> Result<Vec<ClassFunction>> {
    let mut out = Vec::new();
    for chi in irreducibles(g)? {
        let mut over = false;
        for d in delta {
            if chi.lies_over(d)? {
                over = true;
                break;
            }
        }
        if over {
            out.push(chi);
        }
    }
    Ok(out)
}

/// `{λγ : λ ∈ Lin(G/N)}` for an extension `γ` of an irreducible character of `N`.
pub fn gallagher_family(gamma: &ClassFunction, n: &PermGroup) -> Result<Vec<ClassFunction>> {
    let g = gamma.group();
    if !n.is_normal_in(g) {
        return Err(domain("Gallagher family requires a normal subgroup"));
    }
    if !gamma.restrict(n)?.is_irreducible()? {
        return Err(domain("restriction of the extension is reducible"));
    }
    let mut out: Vec<ClassFunction> = Vec::new();
    for lambda in linear_characters(g)? {
        if !n.is_subgroup_of(&lambda.kernel()?) {
            continue;
        }
        let candidate = lambda.product(gamma)?;
        if !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// `θ^g` for `θ` on a normal subgroup.
pub fn conjugate_character(theta: &ClassFunction, g: &Perm) -> Result<ClassFunction> {
    theta.conjugate(g)
}

pub fn is_invariant(theta: &ClassFunction, h: &PermGroup) -> Result<bool> {
    theta.is_invariant_under(h)
}

/// Position of `chi` among the irreducibles of its group.
pub fn row_index(chi: &ClassFunction) -> Result<Option<usize>> {
    let table = cache::character_table(chi.group())?;
    Ok(table.irreducibles().iter().position(|x| x == chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::normal_subgroups;

    fn s4() -> PermGroup {
        PermGroup::symmetric(4)
    }

    #[test]
    fn basic_inner_products() {
        let g = s4();
        let irr = irreducibles(&g).unwrap();
        for (i, a) in irr.iter().enumerate() {
            for (j, b) in irr.iter().enumerate() {
                let ip = a.inner_rational(b).unwrap();
                assert_eq!(ip, Rational64::from_integer((i == j) as i64));
            }
        }
        let reg = ClassFunction::regular(&g).unwrap();
        let triv = ClassFunction::trivial(&g).unwrap();
        assert_eq!(reg.inner_rational(&triv).unwrap(), Rational64::from_integer(1));
        let dec = reg.constituents().unwrap();
        for (i, m) in dec {
            assert_eq!(m as i64, irr[i].degree());
        }
    }

    #[test]
    fn restriction_and_induction() {
        let g = s4();
        let ns = normal_subgroups(&g).unwrap();
        let (v4, a4) = (ns[1].clone(), ns[2].clone());
        let triv_a4 = ClassFunction::trivial(&a4).unwrap();
        assert_eq!(triv_a4.induce(&g).unwrap().degree(), 2);
        let irr = irreducibles(&g).unwrap();
        let sign = irr
            .iter()
            .find(|c| c.degree() == 1 && **c != ClassFunction::trivial(&g).unwrap())
            .unwrap();
        assert_eq!(sign.restrict(&a4).unwrap(), triv_a4);
        assert_eq!(sign.kernel().unwrap(), a4);
        let chi3 = irr.iter().find(|c| c.degree() == 3).unwrap();
        assert!(chi3.kernel().unwrap().is_trivial());
        let r = chi3.restrict(&v4).unwrap();
        let dec = r.constituents().unwrap();
        assert_eq!(dec.len(), 3);
        assert!(dec.iter().all(|&(i, m)| m == 1 && i != 0));
        let theta3 = irreducibles(&a4)
            .unwrap()
            .into_iter()
            .find(|c| c.degree() == 3)
            .unwrap();
        assert_eq!(
            chi3.restrict(&a4).unwrap().inner_rational(&theta3).unwrap(),
            Rational64::from_integer(1)
        );
        // Frobenius reciprocity.
        for theta in irreducibles(&a4).unwrap() {
            for chi in &irr {
                assert_eq!(
                    theta.induce(&g).unwrap().inner_product(chi).unwrap(),
                    theta.inner_product(&chi.restrict(&a4).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn extensions_and_gallagher() {
        let g = s4();
        let a4 = normal_subgroups(&g).unwrap()[2].clone();
        let theta3 = irreducibles(&a4)
            .unwrap()
            .into_iter()
            .find(|c| c.degree() == 3)
            .unwrap();
        let ext = extensions(&theta3, &g).unwrap();
        assert_eq!(ext.len(), 2);
        let fam = gallagher_family(&ext[0], &a4).unwrap();
        assert_eq!(fam.len(), 2);
        assert!(fam.contains(&ext[1]));
        assert_eq!(gallagher_family(&ext[0], &g).unwrap(), vec![ext[0].clone()]);
        let triv = ClassFunction::trivial(&a4).unwrap();
        assert!(extensions(&triv, &g)
            .unwrap()
            .contains(&ClassFunction::trivial(&g).unwrap()));
    }

    #[test]
    fn invariance_under_sylow_two() {
        let g = s4();
        let d8 = g.sylow(2).unwrap();
        let v4 = normal_subgroups(&g).unwrap()[1].clone();
        let lin = linear_characters(&v4).unwrap();
        let fixed: Vec<_> = lin
            .iter()
            .skip(1)
            .filter(|l| l.is_invariant_under(&d8).unwrap())
            .collect();
        assert_eq!(fixed.len(), 1);
        let moved: Vec<_> = lin
            .iter()
            .skip(1)
            .filter(|l| !l.is_invariant_under(&d8).unwrap())
            .collect();
        assert_eq!(moved.len(), 2);
        let swap = d8
            .generators()
            .iter()
            .map(|x| moved[0].conjugate(x).unwrap())
            .any(|c| c == *moved[1]);
        assert!(swap);
        for l in &lin {
            for x in v4.generators() {
                assert_eq!(l.conjugate(x).unwrap(), *l);
            }
        }
    }

    #[test]
    fn linear_counts() {
        assert_eq!(linear_characters(&s4()).unwrap().len(), 2);
        let d8 = s4().sylow(2).unwrap();
        assert_eq!(linear_characters(&d8).unwrap().len(), 4);
        assert_eq!(linear_characters(&PermGroup::cyclic(5)).unwrap().len(), 5);
    }

    #[test]
    fn non_characters_rejected() {
        let g = s4();
        let mut v = ClassFunction::trivial(&g).unwrap().values().to_vec();
        v[0] = Cyclotomic::from_int(2);
        let f = ClassFunction::new(&g, v).unwrap();
        assert!(f.constituents().is_err());
    }

    #[test]
    fn inflation_round_trip() {
        let g = s4();
        let v4 = normal_subgroups(&g).unwrap()[1].clone();
        let (q, map) = crate::hom::quotient(&g, &v4).unwrap();
        for chi in irreducibles(&q).unwrap() {
            let inf = chi.inflate(&map).unwrap();
            assert!(inf.is_irreducible().unwrap());
            assert!(v4.is_subgroup_of(&inf.kernel().unwrap()));
            assert_eq!(inf.deflate(&map).unwrap(), chi);
        }
    }
}
