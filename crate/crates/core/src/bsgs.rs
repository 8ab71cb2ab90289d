//! Base and strong generating set via the deterministic Schreier–Sims algorithm.

use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Strong generators first introduced at this level.
    gens: Vec<Perm>,
    /// Orbit of the base point in discovery order.
    orbit: Vec<usize>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Perm>>,
}

/// A stabilizer chain `G = G⁽⁰⁾ ≥ G⁽¹⁾ ≥ … ≥ G⁽ᵏ⁾ = 1`.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            let (residue, level) = chain.sift_from(g.clone(), 0);
            if !residue.is_identity() {
                chain.add_strong_generator(level, residue);
            }
        }
        chain.complete();
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Lengths of the fundamental orbits.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn strong_generators(&self) -> impl Iterator<Item = &Perm> {
        self.levels.iter().flat_map(|l| l.gens.iter())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift_from(g.clone(), 0).0.is_identity()
    }

    /// Every element, each exactly once, as products of transversal elements.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for x in &out {
                for p in &level.orbit {
                    let t = level.transversal[*p].as_ref().expect("orbit point has transversal");
                    next.push(x.compose(t));
                }
            }
            out = next;
        }
        out
    }

    /// Sifts `g` starting at `level`; returns the residue and the level where sifting stopped.
    fn sift_from(&self, mut g: Perm, level: usize) -> (Perm, usize) {
        for (i, l) in self.levels.iter().enumerate().skip(level) {
            let p = g.apply(l.base_point);
            match &l.transversal[p] {
                Some(t) => g = g.compose(&t.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn add_strong_generator(&mut self, level: usize, g: Perm) {
        if level == self.levels.len() {
            let base_point = g.first_moved().expect("nontrivial residue moves a point");
            self.levels.push(Level {
                base_point,
                gens: Vec::new(),
                orbit: Vec::new(),
                transversal: vec![None; self.degree],
            });
        }
        self.levels[level].gens.push(g);
        for j in 0..=level {
            self.rebuild_orbit(j);
        }
    }

    /// Generators of `G⁽ⁱ⁾`: all strong generators introduced at level `i` or deeper.
    fn level_generators(&self, i: usize) -> Vec<Perm> {
        self.levels[i..].iter().flat_map(|l| l.gens.iter().cloned()).collect()
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let gens = self.level_generators(i);
        let degree = self.degree;
        let level = &mut self.levels[i];
        let b = level.base_point;
        level.transversal = vec![None; degree];
        level.transversal[b] = Some(Perm::identity(degree));
        level.orbit = vec![b];
        let mut head = 0;
        while head < level.orbit.len() {
            let p = level.orbit[head];
            head += 1;
            let tp = level.transversal[p].clone().expect("orbit point has transversal");
            for s in &gens {
                let q = s.apply(p);
                if level.transversal[q].is_none() {
                    level.transversal[q] = Some(tp.compose(s));
                    level.orbit.push(q);
                }
            }
        }
    }

    /// Runs Schreier generator tests bottom-up until every level is closed.
    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let level_idx = i - 1;
            match self.first_failing_schreier_generator(level_idx) {
                Some((residue, stop)) => {
                    self.add_strong_generator(stop, residue);
                    i = stop + 1;
                }
                None => i -= 1,
            }
        }
    }

    fn first_failing_schreier_generator(&self, i: usize) -> Option<(Perm, usize)> {
        let gens = self.level_generators(i);
        let level = &self.levels[i];
        for &p in &level.orbit {
            let tp = level.transversal[p].as_ref().expect("orbit point has transversal");
            for s in &gens {
                let q = s.apply(p);
                let tq = level.transversal[q].as_ref().expect("orbit closed under generators");
                let schreier = tp.compose(s).compose(&tq.inverse());
                let (residue, stop) = self.sift_from(schreier, i + 1);
                if !residue.is_identity() {
                    return Some((residue, stop));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn symmetric_groups() {
        for n in 1..=6usize {
            let gens = if n > 1 {
                vec![
                    Perm::from_cycles(n, &[vec![0, 1]]).unwrap(),
                    Perm::from_cycles(n, &[(0..n).collect()]).unwrap(),
                ]
            } else {
                vec![]
            };
            let chain = StabChain::new(n, &gens);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(chain.order(), fact);
            assert_eq!(chain.elements().len() as u64, fact);
        }
    }

    #[test]
    fn membership() {
        let chain = StabChain::new(4, &[p("(0 1 2)", 4), p("(1 2 3)", 4)]);
        assert_eq!(chain.order(), 12);
        assert!(chain.contains(&p("(0 1)(2 3)", 4)));
        assert!(!chain.contains(&p("(0 1)", 4)));
    }
}
