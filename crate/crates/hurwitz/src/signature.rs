//! Signatures of Fuchsian groups and the admissibility search.
//!
//! A signature `(g0; m1, ..., mr)` records the orbit genus `g0` and the
//! branching periods `2 ≤ m1 ≤ ... ≤ mr` of a Fuchsian group. Its measure
//!
//! ```text
//! μ = 2·g0 − 2 + Σ (1 − 1/mi)
//! ```
//!
//! must be positive for a hyperbolic group, and a group of order `n` acting
//! with this signature on a surface of genus `g` satisfies the
//! Riemann-Hurwitz relation `g = 1 + (n/2)·μ`. [`admissible_signatures`]
//! inverts that relation: given `g` and `n` it enumerates every signature
//! with the right measure whose periods divide `n`.
//!
//! All arithmetic is exact; there are no tolerances anywhere in this
//! module.

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact rational number used for measures and genus computations.
pub type Rational = Ratio<i128>;

/// `(g0; m1, ..., mr)` with sorted periods, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    orbit_genus: u32,
    periods: Vec<u64>,
}

impl Signature {
    /// Builds a signature, sorting the periods. Periods below 2 are
    /// rejected.
    pub fn new(orbit_genus: u32, mut periods: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = periods.iter().find(|&&m| m < 2) {
            return Err(Error::Domain(format!("period {bad} is below 2")));
        }
        periods.sort_unstable();
        Ok(Signature { orbit_genus, periods })
    }

    /// The unramified signature `(g0; -)`.
    pub fn unramified(orbit_genus: u32) -> Self {
        Signature { orbit_genus, periods: Vec::new() }
    }

    pub fn orbit_genus(&self) -> u32 {
        self.orbit_genus
    }

    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    /// Number of branch points `r`.
    pub fn branch_count(&self) -> usize {
        self.periods.len()
    }

    /// `μ = 2·g0 − 2 + Σ (1 − 1/mi)`, exactly.
    pub fn mu_measure(&self) -> Rational {
        let mut mu = Rational::from_integer(2 * self.orbit_genus as i128 - 2);
        for &m in &self.periods {
            mu += Rational::from_integer(1) - Rational::new(1, m as i128);
        }
        mu
    }

    /// Genus of the covering surface for a group of order `n` acting with
    /// this signature: `1 + (n/2)·μ`. The result need not be an integer;
    /// callers filter on integrality.
    pub fn rh_genus(&self, n: u128) -> Rational {
        let n = i128::try_from(n).expect("group order fits in i128");
        Rational::from_integer(1) + Rational::new(n, 2) * self.mu_measure()
    }

    /// Parses either text form: `[g0; m1, m2, ...]` with a semicolon, or
    /// the flat legacy form `[g0, m1, m2, ...]` where the first entry is
    /// the orbit genus. Surrounding brackets or parentheses are optional.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('[')
            .map(|s| s.strip_suffix(']'))
            .or_else(|| inner.strip_prefix('(').map(|s| s.strip_suffix(')')))
            .unwrap_or(Some(inner))
            .ok_or_else(|| Error::Format(format!("unbalanced brackets in signature {text:?}")))?
            .trim();
        let (genus_part, period_part) = match inner.split_once(';') {
            Some((g, rest)) => (g.trim(), rest.trim()),
            None => match inner.split_once(',') {
                Some((g, rest)) => (g.trim(), rest.trim()),
                None => (inner, ""),
            },
        };
        if genus_part.is_empty() {
            return Err(Error::Format(format!("empty signature {text:?}")));
        }
        let orbit_genus: u32 = genus_part
            .parse()
            .map_err(|_| Error::Format(format!("bad orbit genus {genus_part:?}")))?;
        let mut periods = Vec::new();
        for tok in period_part.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let m: u64 = tok
                .parse()
                .map_err(|_| Error::Format(format!("bad period {tok:?}")))?;
            periods.push(m);
        }
        Signature::new(orbit_genus, periods).map_err(|e| Error::Format(e.to_string()))
    }

    /// Semicolon form, e.g. `[0; 2, 3, 7]`; `[2; ]` when unramified.
    pub fn canonical_text(&self) -> String {
        let periods = self
            .periods
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        format!("[{}; {}]", self.orbit_genus, periods)
    }

    /// Flat legacy form, e.g. `[0,2,3,7]`; `[2]` when unramified.
    pub fn flat_text(&self) -> String {
        let mut parts = vec![self.orbit_genus.to_string()];
        parts.extend(self.periods.iter().map(|m| m.to_string()));
        format!("[{}]", parts.join(","))
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

/// Is `n` large for genus `g`, meaning `n > 4(g − 1)`?
pub fn is_large_group(genus: u32, n: u128) -> bool {
    n > 4 * (genus as u128 - 1)
}

/// All signatures admissible for a group of order `n` acting on a surface
/// of genus `g ≥ 2`: positive measure, `rh_genus(n, sig) = g` exactly, and
/// every period dividing `n`. Results are in lexicographic order of
/// `(g0, r, periods)` and duplicate-free. The list is empty whenever
/// `n > 84(g − 1)`.
pub fn admissible_signatures(genus: u32, n: u128) -> Result<Vec<Signature>> {
    if genus < 2 {
        return Err(Error::Domain(format!("genus {genus} is below 2")));
    }
    if n < 1 {
        return Err(Error::Domain("group order must be positive".into()));
    }
    if n > 84 * (genus as u128 - 1) {
        return Ok(Vec::new());
    }
    let n_small = n as i128;
    // target measure: μ = 2(g − 1)/n
    let mu_target = Rational::new(2 * (genus as i128 - 1), n_small);
    let divisors = divisors_of(n as u64);

    let mut out = Vec::new();
    let mut g0 = 0u32;
    loop {
        // residual branching measure once 2·g0 − 2 is subtracted
        let rho = mu_target - Rational::from_integer(2 * g0 as i128 - 2);
        if rho < Rational::from_integer(0) {
            break;
        }
        if rho == Rational::from_integer(0) {
            out.push(Signature::unramified(g0));
        } else {
            // each branch point contributes 1 − 1/m ∈ [1/2, 1), so the
            // count r is pinned to ρ < r ≤ 2ρ
            let r_min = (rho.floor().to_integer() + 1) as usize;
            let r_max = (Rational::from_integer(2) * rho).floor().to_integer() as usize;
            for r in r_min..=r_max {
                let target = Rational::from_integer(r as i128) - rho;
                let mut periods = Vec::with_capacity(r);
                collect_period_tuples(&divisors, 0, r, target, &mut periods, &mut out, g0);
            }
        }
        g0 += 1;
    }
    Ok(out)
}

/// Extends `periods` with nondecreasing divisors (from index `from`
/// onward) so that their reciprocals sum exactly to `target`, emitting a
/// signature for every completion.
fn collect_period_tuples(
    divisors: &[u64],
    from: usize,
    slots: usize,
    target: Rational,
    periods: &mut Vec<u64>,
    out: &mut Vec<Signature>,
    g0: u32,
) {
    if slots == 0 {
        if target == Rational::from_integer(0) {
            out.push(Signature { orbit_genus: g0, periods: periods.clone() });
        }
        return;
    }
    for (i, &m) in divisors.iter().enumerate().skip(from) {
        let recip = Rational::new(1, m as i128);
        // all remaining slots use divisors ≥ m, so recip·slots is the most
        // this branch can still contribute
        if recip * Rational::from_integer(slots as i128) < target {
            break;
        }
        if recip > target {
            continue;
        }
        periods.push(m);
        collect_period_tuples(divisors, i, slots - 1, target - recip, periods, out, g0);
        periods.pop();
    }
}

/// Divisors of `n` that are at least 2, ascending.
fn divisors_of(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small.retain(|&m| m >= 2);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(g0: u32, periods: &[u64]) -> Signature {
        Signature::new(g0, periods.to_vec()).unwrap()
    }

    #[test]
    fn measure_of_hurwitz_triangle() {
        assert_eq!(sig(0, &[2, 3, 7]).mu_measure(), Rational::new(1, 42));
        assert_eq!(sig(1, &[]).mu_measure(), Rational::from_integer(0));
        assert_eq!(sig(0, &[2, 3, 8]).mu_measure(), Rational::new(1, 24));
    }

    #[test]
    fn riemann_hurwitz_genus() {
        assert_eq!(sig(0, &[2, 3, 7]).rh_genus(504), Rational::from_integer(7));
        assert_eq!(sig(0, &[2, 3, 7]).rh_genus(12180), Rational::from_integer(146));
        for g in 0..5u32 {
            assert_eq!(
                Signature::unramified(g).rh_genus(1),
                Rational::from_integer(g as i128)
            );
        }
    }

    #[test]
    fn hurwitz_pair_is_the_unique_answer_for_genus_7_order_504() {
        let sigs = admissible_signatures(7, 504).unwrap();
        assert_eq!(sigs, vec![sig(0, &[2, 3, 7])]);
    }

    #[test]
    fn beyond_the_84_bound_nothing_is_admissible() {
        assert!(admissible_signatures(2, 85).unwrap().is_empty());
        assert!(admissible_signatures(2, 10_000).unwrap().is_empty());
        assert!(!admissible_signatures(2, 84).unwrap().is_empty());
    }

    #[test]
    fn genus_2_order_2_signatures() {
        let sigs = admissible_signatures(2, 2).unwrap();
        assert_eq!(sigs, vec![sig(0, &[2, 2, 2, 2, 2, 2]), sig(1, &[2, 2])]);
    }

    #[test]
    fn identity_covering_signature() {
        let sigs = admissible_signatures(5, 1).unwrap();
        assert_eq!(sigs, vec![Signature::unramified(5)]);
    }

    #[test]
    fn emitted_signatures_satisfy_their_own_contract() {
        for genus in 2..=6u32 {
            for n in 1..=(84 * (genus as u128 - 1)) {
                for s in admissible_signatures(genus, n).unwrap() {
                    assert!(s.mu_measure() > Rational::from_integer(0));
                    assert_eq!(s.rh_genus(n), Rational::from_integer(genus as i128));
                    for &m in s.periods() {
                        assert_eq!(n % m as u128, 0, "period {m} divides {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        for n in [2u128, 12, 48, 84] {
            let sigs = admissible_signatures(2, n).unwrap();
            let mut keyed: Vec<_> = sigs
                .iter()
                .map(|s| (s.orbit_genus(), s.branch_count(), s.periods().to_vec()))
                .collect();
            let original = keyed.clone();
            keyed.sort();
            keyed.dedup();
            assert_eq!(keyed, original);
        }
    }

    #[test]
    fn no_signature_has_measure_between_zero_and_one_forty_second() {
        // bounded exhaustive scan over periods up to 84
        let mut best: Option<Rational> = None;
        let divisors: Vec<u64> = (2..=84).collect();
        let mut stack: Vec<(usize, usize, Rational)> = vec![(0, 0, Rational::from_integer(-2))];
        while let Some((from, depth, mu)) = stack.pop() {
            if mu > Rational::from_integer(0) {
                if mu < Rational::new(1, 42) {
                    panic!("measure {mu} below 1/42");
                }
                if best.is_none() || mu < best.unwrap() {
                    best = Some(mu);
                }
                continue;
            }
            if depth == 5 {
                continue;
            }
            for (i, &m) in divisors.iter().enumerate().skip(from) {
                let next = mu + Rational::from_integer(1) - Rational::new(1, m as i128);
                // measures only grow with more or larger periods; once
                // positive we record and stop extending
                stack.push((i, depth + 1, next));
            }
        }
        assert_eq!(best, Some(Rational::new(1, 42)));
    }

    #[test]
    fn large_group_bound() {
        assert!(is_large_group(7, 504));
        assert!(!is_large_group(2, 4));
        assert!(is_large_group(2, 5));
        assert!(is_large_group(46, 2160));
    }

    #[test]
    fn large_groups_have_genus_zero_quotient_and_few_branch_points() {
        for genus in 2..=10u32 {
            for n in (4 * (genus as u128 - 1) + 1)..=(84 * (genus as u128 - 1)) {
                for s in admissible_signatures(genus, n).unwrap() {
                    assert_eq!(s.orbit_genus(), 0, "genus {genus}, order {n}");
                    assert!(s.branch_count() <= 4, "genus {genus}, order {n}");
                }
            }
        }
    }

    #[test]
    fn parse_both_text_forms() {
        let canonical = Signature::parse("[0; 2, 3, 7]").unwrap();
        let flat = Signature::parse("[0,2,3,7]").unwrap();
        assert_eq!(canonical, flat);
        assert_eq!(canonical, sig(0, &[2, 3, 7]));
        assert_eq!(Signature::parse("[2]").unwrap(), Signature::unramified(2));
        assert_eq!(Signature::parse("[2; ]").unwrap(), Signature::unramified(2));
        assert_eq!(Signature::parse("(1; 2, 2)").unwrap(), sig(1, &[2, 2]));
        assert_eq!(Signature::parse("0, 2, 2, 3").unwrap(), sig(0, &[2, 2, 3]));
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(Signature::parse("").is_err());
        assert!(Signature::parse("[0; 2, 1]").is_err());
        assert!(Signature::parse("[0; 2, x]").is_err());
        assert!(Signature::parse("[0, 2, 3").is_err());
        assert!(Signature::parse("[-1; 2]").is_err());
    }

    #[test]
    fn text_forms_round_trip() {
        for s in [sig(0, &[2, 3, 7]), sig(1, &[2, 2]), Signature::unramified(3)] {
            assert_eq!(Signature::parse(&s.canonical_text()).unwrap(), s);
            assert_eq!(Signature::parse(&s.flat_text()).unwrap(), s);
        }
        assert_eq!(sig(0, &[2, 3, 7]).canonical_text(), "[0; 2, 3, 7]");
        assert_eq!(sig(0, &[2, 3, 7]).flat_text(), "[0,2,3,7]");
        assert_eq!(Signature::unramified(2).flat_text(), "[2]");
    }

    #[test]
    fn genus_below_two_is_rejected() {
        assert!(matches!(admissible_signatures(1, 2), Err(Error::Domain(_))));
        assert!(matches!(admissible_signatures(0, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn periods_are_sorted_on_construction() {
        assert_eq!(sig(0, &[7, 2, 3]).periods(), &[2, 3, 7]);
    }
}
