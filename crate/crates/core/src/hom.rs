//! Homomorphisms between permutation groups, and quotients by normal subgroups.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{domain, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// A homomorphism given by generator images, with an element table built on demand.
#[derive(Clone)]
pub struct GroupMap {
    source: PermGroup,
    target: PermGroup,
    gen_images: Vec<Perm>,
    table: OnceLock<HashMap<Perm, Perm>>,
}

impl GroupMap {
    /// Checks that the generator assignment extends to a homomorphism.
    pub fn new(source: PermGroup, target: PermGroup, gen_images: Vec<Perm>) -> Result<Self> {
        if gen_images.len() != source.generators().len() {
            return Err(domain("one image is required per source generator"));
        }
        if let Some(x) = gen_images.iter().find(|x| !target.contains(x)) {
            return Err(domain(format!("image {x} is not in the target group")));
        }
        let table = build_table(&source, &target, &gen_images)?;
        let map = GroupMap {
            source,
            target,
            gen_images,
            table: OnceLock::new(),
        };
        let _ = map.table.set(table);
        Ok(map)
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn gen_images(&self) -> &[Perm] {
        &self.gen_images
    }

    fn table(&self) -> &HashMap<Perm, Perm> {
        self.table.get_or_init(|| {
            build_table(&self.source, &self.target, &self.gen_images).expect("validated at construction")
        })
    }

    /// Image of a source element.
    pub fn image(&self, x: &Perm) -> Result<Perm> {
        self.table()
            .get(x)
            .cloned()
            .ok_or_else(|| domain(format!("{x} is not in the source group")))
    }

    pub fn image_of(&self, u: &PermGroup) -> Result<PermGroup> {
        let gens = u
            .generators()
            .iter()
            .map(|x| self.image(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::from_gens_unchecked(self.target.degree(), gens))
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage(&self, v: &PermGroup) -> Result<PermGroup> {
        let els = self
            .source
            .elements()?
            .iter()
            .filter(|x| v.contains(&self.table()[*x]))
            .cloned()
            .collect();
        Ok(PermGroup::from_element_set(self.source.degree(), els))
    }

    pub fn kernel(&self) -> Result<PermGroup> {
        self.preimage(&PermGroup::trivial(self.target.degree()))
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GroupMap) -> Result<GroupMap> {
        let imgs = self
            .gen_images
            .iter()
            .map(|x| other.image(x))
            .collect::<Result<Vec<_>>>()?;
        GroupMap::new(self.source.clone(), other.target.clone(), imgs)
    }
}

impl std::fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupMap")
            .field("source", &self.source)
            .field("target", &self.target)
            .finish()
    }
}

/// Breadth-first element table; fails if two words for one element disagree.
fn build_table(source: &PermGroup, target: &PermGroup, imgs: &[Perm]) -> Result<HashMap<Perm, Perm>> {
    source.check_capacity()?;
    let id = source.identity();
    let mut table = HashMap::from([(id.clone(), target.identity())]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            let fx = table[x].clone();
            for (g, fg) in source.generators().iter().zip(imgs) {
                let y = x.compose(g);
                let fy = fx.compose(fg);
                match table.get(&y) {
                    Some(prev) if *prev != fy => {
                        return Err(domain("generator images do not define a homomorphism"));
                    }
                    Some(_) => {}
                    None => {
                        table.insert(y.clone(), fy);
                        next.push(y);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(table)
}

/// `G/N` acting on the right cosets of `N`, with the natural projection.
///
/// Cosets are numbered in order of their least elements.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<(PermGroup, GroupMap)> {
    if !n.is_normal_in(g) {
        return Err(domain("quotient requires a normal subgroup"));
    }
    let index = g.element_index()?;
    let els = index.elements();
    let mut coset_of = vec![usize::MAX; els.len()];
    let mut reps: Vec<&Perm> = Vec::new();
    for (i, x) in els.iter().enumerate() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for y in n.elements()? {
            coset_of[index.index_of(&y.compose(x)).unwrap()] = id;
        }
    }
    let degree = reps.len();
    let act = |x: &Perm| -> Perm {
        let images = reps
            .iter()
            .map(|r| coset_of[index.index_of(&r.compose(x)).unwrap()] as u32)
            .collect();
        Perm::from_images_unchecked(images)
    };
    let gen_images: Vec<Perm> = g.generators().iter().map(&act).collect();
    let target = PermGroup::from_gens_unchecked(degree, gen_images.clone());
    let table: HashMap<Perm, Perm> = els.iter().map(|x| (x.clone(), act(x))).collect();
    let image_els: Vec<Perm> = {
        let mut v: Vec<Perm> = table.values().cloned().collect();
        v.sort();
        v.dedup();
        v
    };
    let target = PermGroup::with_elements(degree, target.generators().to_vec(), image_els);
    let map = GroupMap {
        source: g.clone(),
        target: target.clone(),
        gen_images,
        table: OnceLock::new(),
    };
    let _ = map.table.set(table);
    Ok((target, map))
}
