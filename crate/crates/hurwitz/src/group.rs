//! Finite permutation groups: order, membership, conjugacy classes,
//! centralizers, derived subgroup and abelian invariants.
//!
//! A [`PermGroup`] is built once from generators and keeps a stabilizer
//! chain. Element lists and conjugacy class data are computed on first use
//! and cached; both walks are bounded by an explicit element budget so that
//! a group too large to enumerate fails fast with a resource error instead
//! of thrashing.
//!
//! Conjugacy classes are numbered 1-based in a canonical order: ascending
//! element order, then ascending class size, then the lexicographically
//! least member as an image row. Class indices reported by this module are
//! stable across runs and platforms.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stabchain::StabChain;

/// One conjugacy class of a [`PermGroup`].
#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Lexicographically least member of the class.
    pub representative: Permutation,
    /// Order of any member.
    pub element_order: u128,
    /// Number of members.
    pub size: u128,
}

struct ClassData {
    classes: Vec<ConjClass>,
    /// Members of each class, sorted, parallel to `classes`.
    members: Vec<Vec<Permutation>>,
    /// 0-based class index of every element.
    index_of: HashMap<Permutation, usize>,
}

pub struct PermGroup {
    degree: u16,
    generators: Vec<Permutation>,
    chain: StabChain,
    elements_cache: OnceLock<Vec<Permutation>>,
    class_cache: OnceLock<ClassData>,
}

impl PermGroup {
    /// Builds the group generated by `generators` acting on
    /// `{1, ..., degree}`. All generators must have exactly that degree.
    pub fn new(degree: u16, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Construction(format!(
                    "generator of degree {} in a group of degree {degree}",
                    g.degree()
                )));
            }
        }
        let chain = StabChain::build(degree, &generators);
        Ok(PermGroup {
            degree,
            generators,
            chain,
            elements_cache: OnceLock::new(),
            class_cache: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> u16 {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Do `elems` generate the whole group? Elements of the wrong degree
    /// never do.
    pub fn generates(&self, elems: &[Permutation]) -> bool {
        if elems.iter().any(|e| e.degree() != self.degree) {
            return false;
        }
        StabChain::build(self.degree, elems).order() == self.order()
    }

    /// Every element, in a deterministic order. Fails without computing
    /// anything when the group order exceeds `budget`.
    pub fn elements(&self, budget: u64) -> Result<&[Permutation]> {
        if self.order() > budget as u128 {
            return Err(Error::Resource(format!(
                "group of order {} exceeds element budget {budget}",
                self.order()
            )));
        }
        Ok(self
            .elements_cache
            .get_or_init(|| self.chain.elements(u64::MAX).expect("order within budget")))
    }

    fn class_data(&self, budget: u64) -> Result<&ClassData> {
        if let Some(data) = self.class_cache.get() {
            return Ok(data);
        }
        let elements = self.elements(budget)?;
        let mut sorted: Vec<&Permutation> = elements.iter().collect();
        sorted.sort();
        let position: HashMap<&Permutation, usize> =
            sorted.iter().enumerate().map(|(i, p)| (*p, i)).collect();

        // Partition by conjugation orbits. Scanning in sorted order makes
        // the first element hit in each class its least member.
        let mut class_of = vec![usize::MAX; sorted.len()];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..sorted.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(i);
            class_of[i] = id;
            let mut frontier = vec![i];
            while let Some(j) = frontier.pop() {
                for g in &self.generators {
                    let conj = sorted[j].conjugated_by(g);
                    let k = position[&conj];
                    if class_of[k] == usize::MAX {
                        class_of[k] = id;
                        frontier.push(k);
                    }
                }
            }
        }

        let mut provisional: Vec<ConjClass> = reps
            .iter()
            .map(|&i| ConjClass {
                representative: sorted[i].clone(),
                element_order: sorted[i].order(),
                size: class_of.iter().filter(|&&c| c == class_of[i]).count() as u128,
            })
            .collect();
        let mut order_keys: Vec<usize> = (0..provisional.len()).collect();
        order_keys.sort_by(|&a, &b| {
            let ca = &provisional[a];
            let cb = &provisional[b];
            (ca.element_order, ca.size, &ca.representative)
                .cmp(&(cb.element_order, cb.size, &cb.representative))
        });
        let mut final_of_provisional = vec![0usize; provisional.len()];
        for (new_idx, &old_idx) in order_keys.iter().enumerate() {
            final_of_provisional[old_idx] = new_idx;
        }

        let mut members: Vec<Vec<Permutation>> = vec![Vec::new(); provisional.len()];
        let mut index_of = HashMap::with_capacity(sorted.len());
        for (i, p) in sorted.iter().enumerate() {
            let idx = final_of_provisional[class_of[i]];
            members[idx].push((*p).clone());
            index_of.insert((*p).clone(), idx);
        }
        let classes: Vec<ConjClass> = order_keys
            .iter()
            .map(|&old| provisional[old].clone())
            .collect();
        drop(std::mem::take(&mut provisional));

        let _ = self.class_cache.set(ClassData { classes, members, index_of });
        Ok(self.class_cache.get().expect("just set"))
    }

    /// Conjugacy classes in canonical order. Class `i` of the result is
    /// referred to elsewhere by the 1-based index `i + 1`.
    pub fn conjugacy_classes(&self, budget: u64) -> Result<&[ConjClass]> {
        Ok(&self.class_data(budget)?.classes)
    }

    /// Members of the class with the given 1-based index, sorted.
    pub fn class_members(&self, index: usize, budget: u64) -> Result<&[Permutation]> {
        let data = self.class_data(budget)?;
        if index == 0 || index > data.classes.len() {
            return Err(Error::Domain(format!(
                "class index {index} out of range 1..={}",
                data.classes.len()
            )));
        }
        Ok(&data.members[index - 1])
    }

    /// 1-based canonical class index of `p`.
    pub fn class_index(&self, p: &Permutation, budget: u64) -> Result<usize> {
        let data = self.class_data(budget)?;
        data.index_of
            .get(p)
            .map(|&i| i + 1)
            .ok_or_else(|| Error::Domain("element is not in the group".into()))
    }

    /// The centralizer of `p`, which must lie in the group.
    pub fn centralizer(&self, p: &Permutation, budget: u64) -> Result<PermGroup> {
        if !self.contains(p) {
            return Err(Error::Domain("element is not in the group".into()));
        }
        let mut gens: Vec<Permutation> = Vec::new();
        let mut chain = StabChain::build(self.degree, &[]);
        for e in self.elements(budget)? {
            if &(e * p) == &(p * e) && !chain.contains(e) {
                gens.push(e.clone());
                chain = StabChain::build(self.degree, &gens);
            }
        }
        PermGroup::new(self.degree, gens)
    }

    /// The derived subgroup, the normal closure of all commutators of
    /// generator pairs. Works on stabilizer chains only, so it is usable
    /// even for groups too large to enumerate.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut chain = StabChain::build(self.degree, &[]);
        for a in &self.generators {
            for b in &self.generators {
                let c = a.commutator(b);
                if !chain.contains(&c) {
                    gens.push(c);
                    chain = StabChain::build(self.degree, &gens);
                }
            }
        }
        loop {
            let mut missing: Vec<Permutation> = Vec::new();
            for d in &gens {
                for g in &self.generators {
                    let c = d.conjugated_by(g);
                    if !chain.contains(&c) && !missing.iter().any(|m| m == &c) {
                        missing.push(c);
                    }
                }
            }
            if missing.is_empty() {
                break;
            }
            gens.extend(missing);
            chain = StabChain::build(self.degree, &gens);
        }
        PermGroup::new(self.degree, gens)
    }

    /// Invariant factors of the abelianization, ascending with each factor
    /// dividing the next; the empty list for a perfect group.
    ///
    /// Computed by counting, for each prime power `p^j` dividing the index
    /// of the derived subgroup `D`, how many group elements have their
    /// `p^j`-th power inside `D`. Those counts are the orders of the
    /// `p^j`-torsion subgroups of the abelianization, which pin down its
    /// cyclic decomposition.
    pub fn abelian_invariants(&self, budget: u64) -> Result<Vec<u128>> {
        let derived = self.derived_subgroup()?;
        let quotient_order = self.order() / derived.order();
        if quotient_order == 1 {
            return Ok(Vec::new());
        }
        let elements = self.elements(budget)?;

        // exponents[p] lists the exponents of the cyclic p-power factors,
        // largest first.
        let mut exponent_lists: Vec<(u128, Vec<u32>)> = Vec::new();
        for (p, p_exp) in factorize(quotient_order) {
            let full = p.pow(p_exp);
            let mut lambdas: Vec<u32> = Vec::new();
            let mut powers: Vec<Permutation> = elements.to_vec();
            let mut prev: u128 = 1;
            loop {
                for q in powers.iter_mut() {
                    *q = q.power(p);
                }
                let killed =
                    powers.iter().filter(|q| derived.contains(q)).count() as u128
                        / derived.order();
                if killed == prev {
                    break;
                }
                lambdas.push(log_exact(p, killed / prev));
                prev = killed;
                if prev == full {
                    break;
                }
            }
            let width = lambdas[0] as usize;
            let mut exps = vec![0u32; width];
            for (slot, e) in exps.iter_mut().enumerate() {
                *e = lambdas.iter().filter(|&&l| l as usize > slot).count() as u32;
            }
            debug_assert_eq!(exps.iter().sum::<u32>(), p_exp);
            exponent_lists.push((p, exps));
        }

        let factors = exponent_lists
            .iter()
            .map(|(_, exps)| exps.len())
            .max()
            .unwrap_or(0);
        let mut invariants = Vec::with_capacity(factors);
        for slot in (0..factors).rev() {
            let mut d: u128 = 1;
            for (p, exps) in &exponent_lists {
                if slot < exps.len() {
                    d *= p.pow(exps[slot]);
                }
            }
            invariants.push(d);
        }
        debug_assert_eq!(invariants.iter().product::<u128>(), quotient_order);
        Ok(invariants)
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, {} generators)",
            self.degree,
            self.order(),
            self.generators.len()
        )
    }
}

fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p: u128 = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `log_p(n)` for an exact power, panicking on anything else.
fn log_exact(p: u128, n: u128) -> u32 {
    let mut e = 0;
    let mut acc = 1u128;
    while acc < n {
        acc *= p;
        e += 1;
    }
    assert_eq!(acc, n, "{n} is not a power of {p}");
    e
}
