//! Conjugacy classes, class lookup and power maps.

use std::sync::{Arc, Mutex};

use std::collections::HashMap;

use crate::error::Result;
use crate::group::{ElementIndex, PermGroup};
use crate::perm::Perm;

#[derive(Clone, Debug)]
pub struct ConjClass {
    /// The least element of the class.
    pub representative: Perm,
    /// Sorted class elements.
    pub elements: Vec<Perm>,
    pub size: usize,
}

impl ConjClass {
    pub fn element_order(&self) -> u64 {
        self.representative.order()
    }
}

/// Class data of a group in the fixed order: by size, then by least element.
pub struct ClassInfo {
    order: u64,
    classes: Vec<ConjClass>,
    index: Arc<ElementIndex>,
    /// `class_of[i]` is the class of the `i`-th sorted element.
    class_of: Vec<u32>,
    inverse: Vec<usize>,
    power_maps: Mutex<HashMap<u64, Arc<Vec<usize>>>>,
}

impl ClassInfo {
    pub(crate) fn compute(group: &PermGroup) -> Result<Self> {
        let index = group.element_index()?.clone();
        let n = index.len();
        let mut class_of = vec![u32::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            class_of[start] = id;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let x = &index.elements()[members[head]];
                head += 1;
                for g in group.generators() {
                    let y = index.index_of(&x.conjugate_by(g)).expect("conjugate lies in the group");
                    if class_of[y] == u32::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        // Elements are scanned in sorted order, so each class's first member is its least element.
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&c| (raw[c].len(), raw[c][0]));
        let mut relabel = vec![0u32; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c as usize];
        }
        let classes: Vec<ConjClass> = order
            .iter()
            .map(|&c| {
                let elements: Vec<Perm> = raw[c].iter().map(|&i| index.elements()[i].clone()).collect();
                ConjClass {
                    representative: elements[0].clone(),
                    size: elements.len(),
                    elements,
                }
            })
            .collect();
        let inverse = classes
            .iter()
            .map(|c| class_of[index.index_of(&c.representative.inverse()).unwrap()] as usize)
            .collect();
        Ok(ClassInfo {
            order: n as u64,
            classes,
            index,
            class_of,
            inverse,
            power_maps: Mutex::new(HashMap::new()),
        })
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn element_index(&self) -> &Arc<ElementIndex> {
        &self.index
    }

    /// Class index of a group element.
    pub fn class_of(&self, g: &Perm) -> Option<usize> {
        self.index.index_of(g).map(|i| self.class_of[i] as usize)
    }

    /// Class index of the `i`-th sorted element.
    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    /// The class of inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse[c]
    }

    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.order / self.classes[c].size as u64
    }

    /// `map[c]` is the class containing the `k`-th powers of class `c`.
    pub fn power_map(&self, k: u64) -> Arc<Vec<usize>> {
        let mut maps = self.power_maps.lock().expect("power map cache poisoned");
        maps.entry(k)
            .or_insert_with(|| {
                Arc::new(
                    self.classes
                        .iter()
                        .map(|c| self.class_of(&c.representative.pow(k)).unwrap())
                        .collect(),
                )
            })
            .clone()
    }
}

impl std::fmt::Debug for ClassInfo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClassInfo")
            .field("order", &self.order)
            .field("sizes", &self.sizes())
            .finish()
    }
}

/// Conjugacy classes of `group` in the deterministic order.
pub fn conjugacy_classes(group: &PermGroup) -> Result<Vec<ConjClass>> {
    Ok(group.class_info()?.classes().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn brute_classes(group: &PermGroup) -> Vec<HashSet<Perm>> {
        let els = group.elements().unwrap();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in els {
            if seen.contains(x) {
                continue;
            }
            let cls: HashSet<Perm> = els.iter().map(|g| x.conjugate_by(g)).collect();
            seen.extend(cls.iter().cloned());
            out.push(cls);
        }
        out
    }

    #[test]
    fn trivial_group_has_one_class() {
        let info = PermGroup::trivial(3).class_info().unwrap().clone();
        assert_eq!(info.len(), 1);
        assert!(info.classes()[0].representative.is_identity());
    }

    #[test]
    fn s4_classes_match_brute_force() {
        let s4 = PermGroup::symmetric(4);
        let info = s4.class_info().unwrap();
        let mut sizes = info.sizes();
        assert_eq!(sizes[0], 1);
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        let brute = brute_classes(&s4);
        assert_eq!(brute.len(), info.len());
        for c in info.classes() {
            let set: HashSet<Perm> = c.elements.iter().cloned().collect();
            assert!(brute.contains(&set));
            assert_eq!(s4.centralizer(&c.representative).unwrap().order(), 24 / c.size as u64);
        }
    }

    #[test]
    fn ordering_is_by_size_then_least_element() {
        let s4 = PermGroup::symmetric(4);
        let info = s4.class_info().unwrap();
        for w in info.classes().windows(2) {
            assert!((w[0].size, &w[0].elements[0]) < (w[1].size, &w[1].elements[0]));
        }
    }

    #[test]
    fn power_maps_and_inverses() {
        let c5 = PermGroup::cyclic(5);
        let info = c5.class_info().unwrap();
        assert_eq!(info.len(), 5);
        for c in 0..5 {
            let inv = info.inverse_class(c);
            let x = &info.classes()[c].representative;
            assert_eq!(info.class_of(&x.inverse()), Some(inv));
            assert_eq!(info.power_map(5)[c], 0);
        }
    }
}
