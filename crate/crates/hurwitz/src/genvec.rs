//! Search for surface-kernel generating vectors.
//!
//! A generating vector for a group G and a signature (g0; m1, ..., mr) is a
//! tuple (a1, b1, ..., a_g0, b_g0, c1, ..., cr) of elements of G such that
//!
//! * the full tuple generates G,
//! * each c_j has order exactly m_j, and
//! * [a1,b1]...[a_g0,b_g0] c1 ... cr = 1.
//!
//! Two vectors are considered equivalent when one is carried to the other by
//! conjugating every entry by a single group element.  The main entry point
//! [`representatives_epimorphisms`] returns one canonical representative per
//! equivalence class, grouped by the conjugacy-class tuple of the branch
//! entries.  [`brute_force_epimorphisms`] answers the same question by
//! exhaustive enumeration and exists as an independent cross-check; the two
//! must never be merged or share search logic.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::catalog::LabeledGroup;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::signature::Signature;
use crate::snf::smith_diagonal;

/// Resource limits for the search routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum group order for which full element lists are materialized.
    pub element_budget: u64,
    /// Maximum number of search leaves examined per conjugacy-class tuple.
    pub search_leaves: u64,
    /// Maximum number of raw tuples examined by the brute-force oracle.
    pub oracle_tuples: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            element_budget: 50_000,
            search_leaves: 10_000_000,
            oracle_tuples: 100_000_000,
        }
    }
}

/// A candidate or confirmed generating vector.
///
/// `hyperbolic` holds the 2*g0 entries a1, b1, ..., a_g0, b_g0 and `branch`
/// holds c1, ..., cr.  `class_tuple` records the 1-based conjugacy-class
/// index of each branch entry; for vectors read from legacy data files the
/// indices are whatever the file said and may not match this crate's class
/// numbering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeneratingVector {
    pub hyperbolic: Vec<Permutation>,
    pub branch: Vec<Permutation>,
    pub class_tuple: Vec<usize>,
}

impl GeneratingVector {
    /// Splits a flat entry list (hyperbolic part first) back into a vector.
    pub fn from_entries(
        orbit_genus: u32,
        entries: Vec<Permutation>,
        class_tuple: Vec<usize>,
    ) -> Self {
        let split = 2 * orbit_genus as usize;
        let mut entries = entries;
        let branch = entries.split_off(split);
        GeneratingVector {
            hyperbolic: entries,
            branch,
            class_tuple,
        }
    }

    /// All entries in relation order: hyperbolic pairs first, then branch.
    pub fn entries(&self) -> Vec<Permutation> {
        let mut out = self.hyperbolic.clone();
        out.extend(self.branch.iter().cloned());
        out
    }
}

/// One equivalence class of surface-kernel epimorphisms.
#[derive(Debug, Clone)]
pub struct EpimorphismRecord {
    pub signature: Signature,
    /// 1-based conjugacy-class index of each branch entry.
    pub con: Vec<usize>,
    pub group: LabeledGroup,
    pub genimages: GeneratingVector,
}

impl PartialEq for EpimorphismRecord {
    fn eq(&self, other: &Self) -> bool {
        self.signature == other.signature
            && self.con == other.con
            && self.group.label == other.group.label
            && self.genimages == other.genimages
    }
}

impl Eq for EpimorphismRecord {}

/// Validity check used by both search routes and by file verification.
///
/// Checks membership, entry counts, branch orders, the long relation, and
/// generation.  The `class_tuple` field is deliberately not consulted: legacy
/// files carry class indices from a foreign numbering.
pub fn is_generating_vector(group: &PermGroup, sig: &Signature, vector: &GeneratingVector) -> bool {
    let g0 = sig.orbit_genus() as usize;
    let r = sig.branch_count();
    if vector.hyperbolic.len() != 2 * g0 || vector.branch.len() != r {
        return false;
    }
    for p in vector.hyperbolic.iter().chain(vector.branch.iter()) {
        if p.degree() != group.degree() || !group.contains(p) {
            return false;
        }
    }
    for (c, &m) in vector.branch.iter().zip(sig.periods()) {
        if c.order() != m as u128 {
            return false;
        }
    }
    let mut product = group.identity();
    for pair in vector.hyperbolic.chunks(2) {
        product = product * pair[0].commutator(&pair[1]);
    }
    for c in &vector.branch {
        product = product * c.clone();
    }
    if !product.is_identity() {
        return false;
    }
    group.generates(&vector.entries())
}

/// Enumerates every tuple (k1, ..., kr) of 1-based conjugacy-class indices
/// with the class at position j consisting of elements of order m_j.  Tuples
/// come out in lexicographic order.  Returns a single empty tuple for r = 0
/// and no tuples at all when some period has no matching class.
pub fn class_tuples(
    group: &PermGroup,
    sig: &Signature,
    element_budget: u64,
) -> Result<Vec<Vec<usize>>> {
    let per_period = match class_options(group, sig, element_budget)? {
        Some(options) => options,
        None => return Ok(Vec::new()),
    };
    Ok(cartesian(&per_period))
}

/// For each period, the 1-based indices of classes with that element order.
/// `None` when some period has no matching class (so no tuples exist).
fn class_options(
    group: &PermGroup,
    sig: &Signature,
    element_budget: u64,
) -> Result<Option<Vec<Vec<usize>>>> {
    let classes = group.conjugacy_classes(element_budget)?;
    let mut per_period = Vec::with_capacity(sig.branch_count());
    for &m in sig.periods() {
        let matching: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.element_order == m as u128)
            .map(|(i, _)| i + 1)
            .collect();
        if matching.is_empty() {
            return Ok(None);
        }
        per_period.push(matching);
    }
    Ok(Some(per_period))
}

fn cartesian(per_period: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for options in per_period {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for &o in options {
                let mut tuple = prefix.clone();
                tuple.push(o);
                next.push(tuple);
            }
        }
        out = next;
    }
    out
}

/// Necessary condition for a surface-kernel epimorphism to exist: the
/// abelianization of the Fuchsian group with this signature must surject
/// onto G/[G,G].
///
/// The abelianized Fuchsian group is Z^(2*g0) plus the torsion quotient
/// (Z/m1 + ... + Z/mr) / <(1, ..., 1)>, whose invariant factors come from a
/// Smith normal form.  A group Z^f + T with torsion T maps onto a finite
/// abelian group A exactly when, for every prime p, the descending p-power
/// exponents of A beyond the first f are dominated entrywise by those of T.
pub fn abelianized_surjection_exists(
    sig: &Signature,
    group: &PermGroup,
    element_budget: u64,
) -> Result<bool> {
    let target = group.abelian_invariants(element_budget)?;
    if target.is_empty() {
        return Ok(true);
    }
    let free_rank = 2 * sig.orbit_genus() as usize;
    let source_torsion = fuchsian_torsion_invariants(sig);

    let mut primes: Vec<u128> = Vec::new();
    for &d in &target {
        for (p, _) in factorize(d) {
            if !primes.contains(&p) {
                primes.push(p);
            }
        }
    }
    for p in primes {
        let alpha = descending_exponents(&target, p);
        let tau = descending_exponents(&source_torsion, p);
        for (i, &a) in alpha.iter().enumerate() {
            if i < free_rank {
                continue;
            }
            let available = tau.get(i - free_rank).copied().unwrap_or(0);
            if a > available {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Invariant factors (> 1) of (Z/m1 + ... + Z/mr) / <(1, ..., 1)>.
fn fuchsian_torsion_invariants(sig: &Signature) -> Vec<u128> {
    let r = sig.branch_count();
    if r == 0 {
        return Vec::new();
    }
    let mut matrix: Vec<Vec<i128>> = (0..r)
        .map(|i| {
            let mut row = vec![0i128; r];
            row[i] = sig.periods()[i] as i128;
            row
        })
        .collect();
    matrix.push(vec![1i128; r]);
    smith_diagonal(matrix)
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| d as u128)
        .collect()
}

fn descending_exponents(invariants: &[u128], p: u128) -> Vec<u32> {
    let mut exps: Vec<u32> = invariants
        .iter()
        .map(|&d| {
            let mut d = d;
            let mut e = 0u32;
            while d % p == 0 {
                d /= p;
                e += 1;
            }
            e
        })
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    exps
}

fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Replaces every entry of each vector by its conjugate under the group
/// element that lexicographically minimizes the concatenated image rows,
/// then drops duplicates.  Output is sorted by canonical entry list.
pub fn orbit_representatives(
    group: &PermGroup,
    vectors: &[GeneratingVector],
    element_budget: u64,
) -> Result<Vec<GeneratingVector>> {
    let elements = group.elements(element_budget)?;
    let mut seen: BTreeMap<Vec<Permutation>, GeneratingVector> = BTreeMap::new();
    for v in vectors {
        let canonical = canonical_conjugate(&v.entries(), elements);
        let split = v.hyperbolic.len();
        seen.entry(canonical.clone()).or_insert_with(|| {
            let mut entries = canonical;
            let branch = entries.split_off(split);
            GeneratingVector {
                hyperbolic: entries,
                branch,
                class_tuple: v.class_tuple.clone(),
            }
        });
    }
    Ok(seen.into_values().collect())
}

/// Lexicographically least simultaneous conjugate of `entries` over all of
/// `elements`.  Vec<Permutation> ordering is image-row ordering entry by
/// entry, which for equal degrees coincides with comparing the concatenation.
fn canonical_conjugate(entries: &[Permutation], elements: &[Permutation]) -> Vec<Permutation> {
    let mut best: Option<Vec<Permutation>> = None;
    for h in elements {
        let candidate: Vec<Permutation> = entries.iter().map(|e| e.conjugated_by(h)).collect();
        if best.as_ref().map_or(true, |b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best.unwrap_or_default()
}

/// Finds one representative of every conjugation orbit of generating vectors
/// for `sig` on the given group, using a backtracking search organized by
/// conjugacy-class tuple.
///
/// Within each class tuple the first branch entry is pinned to the stored
/// class representative (every orbit contains such a vector, because the
/// hyperbolic entries range over the whole group and simultaneous conjugation
/// moves c1 anywhere in its class), interior branch entries run over full
/// class member lists, and the last branch entry is solved from the long
/// relation and accepted only if it lands in the right class.  Surviving
/// tuples are checked for generation and canonicalized by simultaneous
/// conjugation.
///
/// Records come out grouped by class tuple in lexicographic tuple order and
/// sorted by canonical entry list within a tuple.
pub fn representatives_epimorphisms(
    group: &LabeledGroup,
    sig: &Signature,
    budgets: &Budgets,
) -> Result<Vec<EpimorphismRecord>> {
    let g = group.group.as_ref();
    if !abelianized_surjection_exists(sig, g, budgets.element_budget)? {
        return Ok(Vec::new());
    }
    let per_period = match class_options(g, sig, budgets.element_budget)? {
        Some(options) => options,
        None => return Ok(Vec::new()),
    };
    let tuple_count = per_period
        .iter()
        .fold(1u128, |acc, opts| acc.saturating_mul(opts.len() as u128));
    if tuple_count > budgets.search_leaves as u128 {
        return Err(Error::Resource(format!(
            "{} conjugacy-class tuples for signature {} on {} exceed the search budget of {}",
            tuple_count, sig, group.label, budgets.search_leaves
        )));
    }
    let tuples = cartesian(&per_period);
    let elements = g.elements(budgets.element_budget)?;

    let per_tuple: Vec<Result<Vec<GeneratingVector>>> = tuples
        .par_iter()
        .map(|tuple| search_class_tuple(g, sig, tuple, budgets, elements))
        .collect();

    let mut records = Vec::new();
    for (tuple, outcome) in tuples.iter().zip(per_tuple) {
        for vector in outcome? {
            records.push(EpimorphismRecord {
                signature: sig.clone(),
                con: tuple.clone(),
                group: group.clone(),
                genimages: vector,
            });
        }
    }
    Ok(records)
}

/// Backtracking search restricted to one conjugacy-class tuple.  Returns the
/// canonical vectors found, sorted.
fn search_class_tuple(
    g: &PermGroup,
    sig: &Signature,
    tuple: &[usize],
    budgets: &Budgets,
    elements: &[Permutation],
) -> Result<Vec<GeneratingVector>> {
    let g0 = sig.orbit_genus() as usize;
    let r = tuple.len();
    let order = g.order();

    let mut leaves = 1u128;
    for _ in 0..2 * g0 {
        leaves = leaves.saturating_mul(order);
    }
    if r >= 2 {
        let classes = g.conjugacy_classes(budgets.element_budget)?;
        for &k in &tuple[1..r - 1] {
            leaves = leaves.saturating_mul(classes[k - 1].size);
        }
    }
    if leaves > budgets.search_leaves as u128 {
        return Err(Error::Resource(format!(
            "class tuple {:?} for signature {} needs {} search leaves, over the budget of {}",
            tuple, sig, leaves, budgets.search_leaves
        )));
    }

    let mut found: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    let mut hyperbolic = vec![0usize; 2 * g0];
    loop {
        let mut head = g.identity();
        for pair in hyperbolic.chunks(2) {
            head = head * elements[pair[0]].commutator(&elements[pair[1]]);
        }
        let hyper_entries: Vec<Permutation> =
            hyperbolic.iter().map(|&i| elements[i].clone()).collect();

        match r {
            0 => {
                if head.is_identity() {
                    record_if_generating(g, &hyper_entries, &[], elements, &mut found);
                }
            }
            1 => {
                let c = head.inverse();
                if g.class_index(&c, budgets.element_budget)? == tuple[0] {
                    record_if_generating(g, &hyper_entries, &[c], elements, &mut found);
                }
            }
            _ => {
                let classes = g.conjugacy_classes(budgets.element_budget)?;
                let c1 = classes[tuple[0] - 1].representative.clone();
                let mut branch = vec![c1.clone()];
                let prefix = head * c1;
                extend_branch(
                    g,
                    tuple,
                    budgets,
                    elements,
                    &hyper_entries,
                    &mut branch,
                    prefix,
                    &mut found,
                )?;
            }
        }

        if !advance(&mut hyperbolic, elements.len()) {
            break;
        }
    }

    Ok(found
        .into_iter()
        .map(|entries| GeneratingVector::from_entries(g0 as u32, entries, tuple.to_vec()))
        .collect())
}

/// Fills branch positions 2..r-1 from full class member lists and solves the
/// final position from the relation.  `prefix` is the running product of the
/// hyperbolic head and the branch entries chosen so far.
#[allow(clippy::too_many_arguments)]
fn extend_branch(
    g: &PermGroup,
    tuple: &[usize],
    budgets: &Budgets,
    elements: &[Permutation],
    hyper_entries: &[Permutation],
    branch: &mut Vec<Permutation>,
    prefix: Permutation,
    found: &mut BTreeSet<Vec<Permutation>>,
) -> Result<()> {
    let r = tuple.len();
    let position = branch.len();
    if position == r - 1 {
        let last = prefix.inverse();
        if g.class_index(&last, budgets.element_budget)? == tuple[r - 1] {
            branch.push(last);
            record_if_generating(g, hyper_entries, branch, elements, found);
            branch.pop();
        }
        return Ok(());
    }
    let members = g.class_members(tuple[position], budgets.element_budget)?;
    for c in members {
        let next = prefix.clone() * c.clone();
        branch.push(c.clone());
        extend_branch(
            g,
            tuple,
            budgets,
            elements,
            hyper_entries,
            branch,
            next,
            found,
        )?;
        branch.pop();
    }
    Ok(())
}

fn record_if_generating(
    g: &PermGroup,
    hyper_entries: &[Permutation],
    branch: &[Permutation],
    elements: &[Permutation],
    found: &mut BTreeSet<Vec<Permutation>>,
) {
    let mut entries = hyper_entries.to_vec();
    entries.extend(branch.iter().cloned());
    if !g.generates(&entries) {
        return;
    }
    found.insert(canonical_conjugate(&entries, elements));
}

/// Odometer step over `digits` positions with `radix` values each.  Returns
/// false once every combination has been visited.
fn advance(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Exhaustive cross-check: enumerates raw tuples over the whole group (the
/// last branch entry is solved from the relation when r >= 1), filters by
/// branch orders, relation, and generation, then canonicalizes.  Deliberately
/// shares no pruning with [`representatives_epimorphisms`]; in particular it
/// does not use the abelianization pretest.
pub fn brute_force_epimorphisms(
    group: &LabeledGroup,
    sig: &Signature,
    budgets: &Budgets,
) -> Result<Vec<EpimorphismRecord>> {
    let g = group.group.as_ref();
    let g0 = sig.orbit_genus() as usize;
    let r = sig.branch_count();
    let order = g.order();

    let free_positions = 2 * g0 + r.saturating_sub(1);
    let mut total = 1u128;
    for _ in 0..free_positions {
        total = total.saturating_mul(order);
    }
    if total > budgets.oracle_tuples as u128 {
        return Err(Error::Resource(format!(
            "brute force over {} tuples for signature {} on {} exceeds the oracle budget of {}",
            total, sig, group.label, budgets.oracle_tuples
        )));
    }

    let elements = g.elements(budgets.element_budget)?;
    let periods = sig.periods();
    let mut by_key: BTreeMap<(Vec<usize>, Vec<Permutation>), GeneratingVector> = BTreeMap::new();
    let mut digits = vec![0usize; free_positions];
    loop {
        let mut product = g.identity();
        for pair in digits[..2 * g0].chunks(2) {
            product = product * elements[pair[0]].commutator(&elements[pair[1]]);
        }
        let mut branch: Vec<Permutation> = Vec::with_capacity(r);
        let mut orders_ok = true;
        for (j, &i) in digits[2 * g0..].iter().enumerate() {
            let c = elements[i].clone();
            if c.order() != periods[j] as u128 {
                orders_ok = false;
                break;
            }
            product = product * c.clone();
            branch.push(c);
        }
        if orders_ok {
            if r >= 1 {
                let last = product.inverse();
                if last.order() == periods[r - 1] as u128 {
                    branch.push(last);
                } else {
                    orders_ok = false;
                }
            } else if !product.is_identity() {
                orders_ok = false;
            }
        }
        if orders_ok {
            let mut entries: Vec<Permutation> =
                digits[..2 * g0].iter().map(|&i| elements[i].clone()).collect();
            entries.extend(branch.iter().cloned());
            if g.generates(&entries) {
                let mut con = Vec::with_capacity(r);
                for c in &branch {
                    con.push(g.class_index(c, budgets.element_budget)?);
                }
                let canonical = canonical_conjugate(&entries, elements);
                by_key.entry((con.clone(), canonical.clone())).or_insert_with(|| {
                    GeneratingVector::from_entries(g0 as u32, canonical, con)
                });
            }
        }

        if !advance(&mut digits, elements.len()) {
            break;
        }
    }

    Ok(by_key
        .into_iter()
        .map(|((con, _), vector)| EpimorphismRecord {
            signature: sig.clone(),
            con,
            group: group.clone(),
            genimages: vector,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_group, fixture, GroupSpec};
    use crate::signature::Signature;

    fn sig(g0: u32, periods: &[u64]) -> Signature {
        Signature::new(g0, periods.to_vec()).unwrap()
    }

    fn labeled(spec: &str) -> LabeledGroup {
        build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn class_tuples_for_order_504_group_and_237() {
        let lg = fixture("psl(2,8)-paper").unwrap();
        let tuples = class_tuples(&lg.group, &sig(0, &[2, 3, 7]), 50_000).unwrap();
        assert_eq!(tuples, vec![vec![2, 3, 4], vec![2, 3, 5], vec![2, 3, 6]]);
    }

    #[test]
    fn class_tuples_vanish_when_a_period_has_no_class() {
        let lg = labeled("cyclic:4");
        let tuples = class_tuples(&lg.group, &sig(0, &[2, 3, 4]), 50_000).unwrap();
        assert!(tuples.is_empty());
    }

    #[test]
    fn class_tuples_with_no_branch_points_is_one_empty_tuple() {
        let lg = labeled("cyclic:3");
        let tuples = class_tuples(&lg.group, &Signature::unramified(2), 50_000).unwrap();
        assert_eq!(tuples, vec![Vec::<usize>::new()]);
    }

    #[test]
    fn abelianization_pretest_examples() {
        let psl = fixture("psl(2,8)-paper").unwrap();
        assert!(abelianized_surjection_exists(&sig(0, &[2, 3, 7]), &psl.group, 50_000).unwrap());

        let c2 = labeled("cyclic:2");
        assert!(!abelianized_surjection_exists(&sig(0, &[3, 3, 3]), &c2.group, 50_000).unwrap());
        assert!(abelianized_surjection_exists(&sig(0, &[2, 2, 2]), &c2.group, 50_000).unwrap());

        let klein = labeled("abelian:2,2");
        assert!(
            abelianized_surjection_exists(&sig(0, &[2, 2, 2, 2]), &klein.group, 50_000).unwrap()
        );
        assert!(abelianized_surjection_exists(&sig(0, &[2, 2, 2]), &klein.group, 50_000).unwrap());
        assert!(!abelianized_surjection_exists(&sig(0, &[4, 4]), &klein.group, 50_000).unwrap());

        let c6 = labeled("cyclic:6");
        assert!(abelianized_surjection_exists(&sig(1, &[]), &c6.group, 50_000).unwrap());
        assert!(!abelianized_surjection_exists(&sig(0, &[2, 2, 2]), &c6.group, 50_000).unwrap());
    }

    #[test]
    fn order_504_group_has_three_orbits_for_237() {
        let lg = fixture("psl(2,8)-paper").unwrap();
        let records =
            representatives_epimorphisms(&lg, &sig(0, &[2, 3, 7]), &Budgets::default()).unwrap();
        assert_eq!(records.len(), 3);
        let cons: Vec<Vec<usize>> = records.iter().map(|rec| rec.con.clone()).collect();
        assert_eq!(cons, vec![vec![2, 3, 4], vec![2, 3, 5], vec![2, 3, 6]]);
        for rec in &records {
            assert!(is_generating_vector(
                &lg.group,
                &rec.signature,
                &rec.genimages
            ));
            assert_eq!(rec.con, rec.genimages.class_tuple);
        }
    }

    #[test]
    fn klein_group_on_four_twos_matches_brute_force() {
        let lg = labeled("abelian:2,2");
        let s = sig(0, &[2, 2, 2, 2]);
        let fast = representatives_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
        let slow = brute_force_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
        assert_eq!(fast.len(), 18);
        assert_eq!(fast, slow);
    }

    #[test]
    fn cyclic_three_on_three_threes_has_two_orbits() {
        let lg = labeled("cyclic:3");
        let s = sig(0, &[3, 3, 3]);
        let fast = representatives_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
        let slow = brute_force_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
        assert_eq!(fast.len(), 2);
        assert_eq!(fast, slow);
    }

    #[test]
    fn hyperbolic_only_signature_on_cyclic_two() {
        let lg = labeled("cyclic:2");
        let s = Signature::unramified(2);
        let fast = representatives_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
        let slow = brute_force_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
        assert_eq!(fast, slow);
        for rec in &fast {
            assert!(is_generating_vector(&lg.group, &s, &rec.genimages));
            assert_eq!(rec.genimages.hyperbolic.len(), 4);
            assert!(rec.genimages.branch.is_empty());
        }
        assert_eq!(fast.len(), 15);
    }

    #[test]
    fn mixed_signature_with_hyperbolic_part_matches_brute_force() {
        let lg = labeled("cyclic:2");
        let s = sig(1, &[2, 2]);
        let fast = representatives_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
        let slow = brute_force_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
        assert_eq!(fast, slow);
        assert_eq!(fast.len(), 4);
    }

    #[test]
    fn small_catalog_agreement_between_routes() {
        for spec in ["cyclic:2", "cyclic:4", "abelian:2,2", "symmetric:3", "cyclic:6"] {
            let lg = labeled(spec);
            for s in [
                sig(0, &[2, 2, 2, 2]),
                sig(0, &[2, 2, 3, 3]),
                sig(0, &[2, 4, 4]),
                sig(0, &[2, 2, 2, 2, 2, 2]),
                sig(1, &[2]),
                sig(1, &[3, 3]),
            ] {
                let fast = representatives_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
                let slow = brute_force_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
                assert_eq!(fast, slow, "mismatch for {} with {}", spec, s);
            }
        }
    }

    #[test]
    fn conjugating_a_record_lands_in_the_same_orbit() {
        let lg = labeled("symmetric:3");
        let s = sig(0, &[2, 2, 3, 3]);
        let records = representatives_epimorphisms(&lg, &s, &Budgets::default()).unwrap();
        assert!(!records.is_empty());
        let elements = lg.group.elements(50_000).unwrap().to_vec();
        for rec in &records {
            for h in &elements {
                let moved = GeneratingVector {
                    hyperbolic: rec
                        .genimages
                        .hyperbolic
                        .iter()
                        .map(|p| p.conjugated_by(h))
                        .collect(),
                    branch: rec
                        .genimages
                        .branch
                        .iter()
                        .map(|p| p.conjugated_by(h))
                        .collect(),
                    class_tuple: rec.con.clone(),
                };
                assert!(is_generating_vector(&lg.group, &s, &moved));
                let reps = orbit_representatives(&lg.group, &[moved], 50_000).unwrap();
                assert_eq!(reps[0].entries(), rec.genimages.entries());
            }
        }
    }

    #[test]
    fn rejects_wrong_entry_counts_and_orders() {
        let lg = labeled("cyclic:2");
        let flip = lg.group.generators()[0].clone();
        let id = lg.group.identity();
        let s = sig(0, &[2, 2, 2, 2, 2, 2]);
        let good = GeneratingVector {
            hyperbolic: vec![],
            branch: vec![flip.clone(); 6],
            class_tuple: vec![2; 6],
        };
        assert!(is_generating_vector(&lg.group, &s, &good));
        let short = GeneratingVector {
            hyperbolic: vec![],
            branch: vec![flip.clone(); 5],
            class_tuple: vec![2; 5],
        };
        assert!(!is_generating_vector(&lg.group, &s, &short));
        let with_identity = GeneratingVector {
            hyperbolic: vec![],
            branch: vec![
                flip.clone(),
                flip.clone(),
                flip.clone(),
                flip.clone(),
                id.clone(),
                id,
            ],
            class_tuple: vec![2; 6],
        };
        assert!(!is_generating_vector(&lg.group, &s, &with_identity));
    }

    #[test]
    fn trivial_group_rejects_branched_signatures() {
        let lg = labeled("cyclic:1");
        let records =
            representatives_epimorphisms(&lg, &sig(0, &[2, 2, 2]), &Budgets::default()).unwrap();
        assert!(records.is_empty());
    }

    #[test]
    fn search_budget_violation_names_the_class_tuple() {
        let lg = labeled("symmetric:4");
        let tight = Budgets {
            element_budget: 50_000,
            search_leaves: 2,
            oracle_tuples: 100_000_000,
        };
        let err = representatives_epimorphisms(&lg, &sig(0, &[2, 2, 2, 2]), &tight).unwrap_err();
        match err {
            Error::Resource(msg) => assert!(msg.contains("budget")),
            other => panic!("expected a resource error, got {other:?}"),
        }
    }

    #[test]
    fn oracle_budget_violation_is_a_resource_error() {
        let lg = labeled("symmetric:4");
        let tight = Budgets {
            element_budget: 50_000,
            search_leaves: 10_000_000,
            oracle_tuples: 10,
        };
        let err = brute_force_epimorphisms(&lg, &sig(0, &[2, 2, 2, 2]), &tight).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }
}
