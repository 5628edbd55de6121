//! Stabilizer chains for permutation groups (Schreier and Sims).
//!
//! A chain stores, for a descending series of point stabilizers, the orbit
//! of a base point together with a transversal mapping each orbit point `x`
//! to a group element `u` with `baseᵘ = x`. Group order, membership and
//! full element enumeration all reduce to walks over these transversals.
//!
//! Each generator is homed at the deepest level whose preceding base
//! points it fixes. The group acting at level `i` is generated by every
//! generator homed at level `i` or deeper, and the orbit at level `i` is
//! computed under all of them: generators homed deeper fix the level's
//! base but can still enlarge its orbit through products. Construction
//! iterates to a fixed point where every Schreier generator of every level
//! sifts to the identity; at that point the group at level `i + 1` is
//! exactly the stabilizer of the level-`i` base point, and the group order
//! is the product of the orbit sizes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone)]
pub(crate) struct StabChain {
    degree: u16,
    levels: Vec<Level>,
}

#[derive(Clone)]
struct Level {
    base: u16,
    /// Generators homed at this level: they fix the base points of all
    /// shallower levels but move this one's (or were placed here when the
    /// level was created).
    gens: Vec<Permutation>,
    /// Orbit of `base` under this level's acting generators, in
    /// breadth-first discovery order; `orbit[0] == base`.
    orbit: Vec<u16>,
    /// `reps[&x]` is a transversal element `u` with `baseᵘ == x`.
    reps: HashMap<u16, Permutation>,
}

impl Level {
    fn new(base: u16) -> Self {
        Level { base, gens: Vec::new(), orbit: Vec::new(), reps: HashMap::new() }
    }

    fn recompute_orbit(&mut self, degree: u16, acting: &[&Permutation]) {
        self.orbit.clear();
        self.reps.clear();
        self.orbit.push(self.base);
        self.reps.insert(self.base, Permutation::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            let u = self.reps[&x].clone();
            for s in acting {
                let y = s.apply(x);
                if !self.reps.contains_key(&y) {
                    self.orbit.push(y);
                    self.reps.insert(y, &u * s);
                }
            }
        }
    }
}

impl StabChain {
    /// Builds a chain for the group generated by `gens`, all of degree
    /// `degree`. Identity generators are ignored.
    pub fn build(degree: u16, gens: &[Permutation]) -> StabChain {
        let mut chain = StabChain { degree, levels: Vec::new() };
        let mut pending: Vec<(usize, Permutation)> = gens
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| {
                assert_eq!(g.degree(), degree, "degree mismatch in chain construction");
                (0usize, g.clone())
            })
            .collect();

        while !pending.is_empty() {
            for (start, g) in pending.drain(..) {
                if let Some((j, residue)) = chain.sift_from(start, &g) {
                    if j == chain.levels.len() {
                        let base = (1..=degree)
                            .find(|&p| residue.apply(p) != p)
                            .expect("nontrivial permutation moves a point");
                        chain.levels.push(Level::new(base));
                    }
                    chain.levels[j].gens.push(residue);
                }
            }
            chain.recompute_orbits();
            pending = chain.schreier_residues();
        }
        chain
    }

    fn recompute_orbits(&mut self) {
        for i in 0..self.levels.len() {
            let acting: Vec<Permutation> = self.levels[i..]
                .iter()
                .flat_map(|l| l.gens.iter().cloned())
                .collect();
            let refs: Vec<&Permutation> = acting.iter().collect();
            self.levels[i].recompute_orbit(self.degree, &refs);
        }
    }

    /// Schreier generators of every level that do not yet sift to the
    /// identity, paired with the level their residues sift from.
    fn schreier_residues(&self) -> Vec<(usize, Permutation)> {
        let mut out: Vec<(usize, Permutation)> = Vec::new();
        for i in 0..self.levels.len() {
            let level = &self.levels[i];
            let acting: Vec<&Permutation> = self.levels[i..]
                .iter()
                .flat_map(|l| l.gens.iter())
                .collect();
            for &x in &level.orbit {
                let u_x = &level.reps[&x];
                for s in &acting {
                    let y = s.apply(x);
                    let schreier = &(u_x * s) * &level.reps[&y].inverse();
                    if !schreier.is_identity()
                        && self.sift_from(i + 1, &schreier).is_some()
                        && !out.iter().any(|(_, p)| p == &schreier)
                    {
                        out.push((i + 1, schreier));
                    }
                }
            }
        }
        out
    }

    /// Strips `g` through transversals starting at `start`. Returns `None`
    /// when the residue is the identity, otherwise the level at which
    /// stripping stopped together with the nontrivial residue.
    fn sift_from(&self, start: usize, g: &Permutation) -> Option<(usize, Permutation)> {
        let mut cur = g.clone();
        let mut level = start;
        loop {
            if cur.is_identity() {
                return None;
            }
            if level == self.levels.len() {
                return Some((level, cur));
            }
            let x = cur.apply(self.levels[level].base);
            match self.levels[level].reps.get(&x) {
                None => return Some((level, cur)),
                Some(u) => cur = &cur * &u.inverse(),
            }
            level += 1;
        }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(0, g).is_none()
    }

    /// Every group element, as products of one transversal element per
    /// level. The order of the result is deterministic for a fixed chain.
    pub fn elements(&self, limit: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > limit as u128 {
            return Err(Error::Resource(format!(
                "group has {order} elements, enumeration budget is {limit}"
            )));
        }
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for a in &elems {
                for x in &level.orbit {
                    next.push(a * &level.reps[x]);
                }
            }
            elems = next;
        }
        Ok(elems)
    }
}
