//! Construction of the built-in group families and of groups loaded from
//! generator files.
//!
//! Every group carries a [`GroupLabel`]: a unique display text plus an
//! optional legacy `(order, id)` pair as used by the flat data files.
//! Legacy pairs are never resolved back to concrete groups; they are
//! opaque identifiers preserved through parsing and serialization.
//!
//! Families and their standard actions:
//!
//! * `cyclic n`: one n-cycle on n points, label `Cn`
//! * `abelian d1,...,dk`: direct product of cycles on disjoint blocks,
//!   degree Σdi, label `Cd1x...xCdk` (factors sorted)
//! * `dihedral n` (n ≥ 3): rotation and reflection on n points, order 2n,
//!   label `Dn`
//! * `symmetric n`: `Sn` on n points
//! * `alternating n` (n ≥ 3): `An` on n points
//! * `psl2 q` (q an odd prime ≥ 5): action on the projective line over the
//!   q-element field, points ordered ∞, 0, 1, ..., q−1, generated by
//!   x → x+1 and x → −1/x; label `psl(2,q)`
//! * groups read from files or built from explicit rows are labeled
//!   `explicit:<hash>` with a content hash of degree and image rows

use std::path::Path;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Display name plus optional legacy `(order, id)` identifier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupLabel {
    pub text: String,
    pub legacy_id: Option<(u128, u64)>,
}

impl GroupLabel {
    pub fn text_only(text: impl Into<String>) -> Self {
        GroupLabel { text: text.into(), legacy_id: None }
    }

    pub fn legacy(order: u128, id: u64) -> Self {
        GroupLabel { text: format!("({order},{id})"), legacy_id: Some((order, id)) }
    }
}

impl std::fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

/// A permutation group together with its label.
#[derive(Clone, Debug)]
pub struct LabeledGroup {
    pub label: GroupLabel,
    pub group: Arc<PermGroup>,
}

/// A recipe for building one catalog group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Abelian(Vec<u64>),
    Dihedral(u64),
    Symmetric(u16),
    Alternating(u16),
    Psl2(u64),
    Explicit { degree: u16, rows: Vec<Vec<u16>> },
}

impl GroupSpec {
    /// Parses the `family:params` grammar, e.g. `psl2:29`, `cyclic:6`,
    /// `abelian:2,4`. File and fixture references are not group specs; they
    /// are resolved by [`resolve_group`].
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let (family, params) = text
            .split_once(':')
            .ok_or_else(|| Error::Format(format!("group spec {text:?} lacks ':'")))?;
        let one = |what: &str| -> Result<u64> {
            params.trim().parse().map_err(|_| {
                Error::Format(format!("bad {what} parameter {params:?}"))
            })
        };
        let small = |what: &str| -> Result<u16> {
            u16::try_from(one(what)?)
                .map_err(|_| Error::Domain(format!("{what} parameter {params:?} is too large")))
        };
        match family.trim() {
            "cyclic" => Ok(GroupSpec::Cyclic(one("cyclic")?)),
            "dihedral" => Ok(GroupSpec::Dihedral(one("dihedral")?)),
            "psl2" => Ok(GroupSpec::Psl2(one("psl2")?)),
            "symmetric" => Ok(GroupSpec::Symmetric(small("symmetric")?)),
            "alternating" => Ok(GroupSpec::Alternating(small("alternating")?)),
            "abelian" => {
                let factors = params
                    .split(',')
                    .map(|tok| {
                        tok.trim().parse::<u64>().map_err(|_| {
                            Error::Format(format!("bad abelian factor {tok:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(GroupSpec::Abelian(factors))
            }
            other => Err(Error::Format(format!("unknown group family {other:?}"))),
        }
    }
}

/// Builds the group a spec describes, with its catalog label.
pub fn build_group(spec: &GroupSpec) -> Result<LabeledGroup> {
    match spec {
        GroupSpec::Cyclic(n) => {
            if *n < 1 {
                return Err(Error::Domain("cyclic group needs n ≥ 1".into()));
            }
            let degree = degree_u16(*n)?;
            let gens = if *n == 1 { vec![] } else { vec![full_cycle(degree)] };
            labeled(format!("C{n}"), degree, gens)
        }
        GroupSpec::Abelian(factors) => {
            if factors.is_empty() {
                return Err(Error::Domain("abelian group needs at least one factor".into()));
            }
            if let Some(&bad) = factors.iter().find(|&&d| d < 2) {
                return Err(Error::Domain(format!("abelian factor {bad} is below 2")));
            }
            let total: u64 = factors.iter().sum();
            let degree = degree_u16(total)?;
            let mut sorted = factors.clone();
            sorted.sort_unstable();
            let mut gens = Vec::new();
            let mut offset: u16 = 0;
            for &d in &sorted {
                let d = d as u16;
                let mut images: Vec<u16> = (1..=degree).collect();
                for k in 0..d {
                    images[(offset + k) as usize] = offset + (k + 1) % d + 1;
                }
                gens.push(Permutation::from_images(images)?);
                offset += d;
            }
            let text = sorted
                .iter()
                .map(|d| format!("C{d}"))
                .collect::<Vec<_>>()
                .join("x");
            labeled(text, degree, gens)
        }
        GroupSpec::Dihedral(n) => {
            if *n < 3 {
                return Err(Error::Domain(
                    "dihedral group on n points needs n ≥ 3".into(),
                ));
            }
            let degree = degree_u16(*n)?;
            let mut reflection: Vec<u16> = vec![1];
            reflection.extend((2..=degree).rev());
            labeled(
                format!("D{n}"),
                degree,
                vec![full_cycle(degree), Permutation::from_images(reflection)?],
            )
        }
        GroupSpec::Symmetric(n) => {
            if *n < 1 {
                return Err(Error::Domain("symmetric group needs n ≥ 1".into()));
            }
            let degree = *n;
            let gens = match degree {
                1 => vec![],
                2 => vec![transposition(degree)],
                _ => vec![full_cycle(degree), transposition(degree)],
            };
            labeled(format!("S{n}"), degree, gens)
        }
        GroupSpec::Alternating(n) => {
            if *n < 3 {
                return Err(Error::Domain("alternating group needs n ≥ 3".into()));
            }
            let degree = *n;
            let three_cycle = Permutation::parse_cycles("(1,2,3)", Some(degree))?;
            let gens = if degree == 3 {
                vec![three_cycle]
            } else if degree % 2 == 1 {
                vec![three_cycle, full_cycle(degree)]
            } else {
                // (2, 3, ..., n) is even when n is even
                let mut images: Vec<u16> = Vec::with_capacity(degree as usize);
                images.push(1);
                for k in 2..=degree {
                    images.push(if k == degree { 2 } else { k + 1 });
                }
                vec![three_cycle, Permutation::from_images(images)?]
            };
            labeled(format!("A{n}"), degree, gens)
        }
        GroupSpec::Psl2(q) => build_psl2(*q),
        GroupSpec::Explicit { degree, rows } => {
            let gens = rows
                .iter()
                .map(|r| Permutation::from_images(r.clone()))
                .collect::<Result<Vec<_>>>()?;
            for g in &gens {
                if g.degree() != *degree {
                    return Err(Error::Construction(format!(
                        "row of degree {} in explicit group of degree {degree}",
                        g.degree()
                    )));
                }
            }
            let text = format!("explicit:{}", content_hash(*degree, &gens));
            labeled(text, *degree, gens)
        }
    }
}

/// Action of the group of invertible 2x2 matrices of determinant 1 over
/// the q-element field, modulo center, on the projective line. Points are
/// numbered 1 = ∞ and k + 2 = the field element k.
fn build_psl2(q: u64) -> Result<LabeledGroup> {
    if q < 5 || !is_prime(q) {
        return Err(Error::Unsupported(format!(
            "psl2 parameter {q} must be a prime at least 5"
        )));
    }
    let degree = degree_u16(q + 1)?;
    let point = |x: u64| -> u16 { (x + 2) as u16 };

    // x → x + 1, fixing ∞
    let mut translation: Vec<u16> = vec![1];
    for x in 0..q {
        translation.push(point((x + 1) % q));
    }

    // x → −1/x, swapping 0 and ∞
    let mut inversion: Vec<u16> = vec![point(0), 1];
    for x in 1..q {
        inversion.push(point((q - mod_inverse(x, q)) % q));
    }

    labeled(
        format!("psl(2,{q})"),
        degree,
        vec![
            Permutation::from_images(translation)?,
            Permutation::from_images(inversion)?,
        ],
    )
}

/// Generators published for the order-504 group of degree 9, shipped so
/// the non-prime field size 8 is still covered.
const PSL28_FIXTURE: (&str, u16, [&str; 3]) = (
    "psl(2,8)-paper",
    9,
    [
        "1 6 4 3 9 2 8 7 5",
        "4 5 8 9 6 2 3 7 1",
        "5 2 8 1 6 9 7 4 3",
    ],
);

/// Looks up a named fixture group.
pub fn fixture(name: &str) -> Result<LabeledGroup> {
    if name == PSL28_FIXTURE.0 {
        let gens = PSL28_FIXTURE
            .2
            .iter()
            .map(|r| Permutation::parse_image_row(r, PSL28_FIXTURE.1))
            .collect::<Result<Vec<_>>>()?;
        return labeled(PSL28_FIXTURE.0.to_string(), PSL28_FIXTURE.1, gens);
    }
    Err(Error::Domain(format!(
        "unknown fixture {name:?}; available: {:?}",
        PSL28_FIXTURE.0
    )))
}

pub fn fixture_names() -> Vec<&'static str> {
    vec![PSL28_FIXTURE.0]
}

/// Reads a generator file: first meaningful line is the degree, every
/// following non-empty line one image row; `#` starts a comment line.
pub fn group_from_generator_file(path: impl AsRef<Path>) -> Result<LabeledGroup> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut degree: Option<u16> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let d: u16 = line.parse().map_err(|_| {
                    Error::format_at(lineno + 1, format!("bad degree {line:?}"))
                })?;
                degree = Some(d);
            }
            Some(d) => {
                let p = Permutation::parse_image_row(line, d)
                    .map_err(|e| Error::format_at(lineno + 1, e))?;
                gens.push(p);
            }
        }
    }
    let degree = degree
        .ok_or_else(|| Error::Format(format!("{}: no degree line", path.display())))?;
    let text = format!("explicit:{}", content_hash(degree, &gens));
    labeled(text, degree, gens)
}

/// Resolves any group reference: `family:params` specs, `file:path`, or
/// `fixture:name`.
pub fn resolve_group(text: &str) -> Result<LabeledGroup> {
    if let Some(path) = text.strip_prefix("file:") {
        return group_from_generator_file(path);
    }
    if let Some(name) = text.strip_prefix("fixture:") {
        return fixture(name);
    }
    build_group(&GroupSpec::parse(text)?)
}

/// Every catalog spec whose group order is at most `max_order`, restricted
/// to `families` when nonempty. Deterministic: sorted by order, then by
/// label text.
pub fn sweep(max_order: u128, families: &[String]) -> Result<Vec<GroupSpec>> {
    let wanted = |name: &str| families.is_empty() || families.iter().any(|f| f == name);
    let mut specs: Vec<(u128, String, GroupSpec)> = Vec::new();

    if wanted("cyclic") {
        for n in 1..=max_order.min(10_000) as u64 {
            specs.push((n as u128, format!("C{n}"), GroupSpec::Cyclic(n)));
        }
    }
    if wanted("abelian") {
        // invariant factor chains d1 | d2 | ... with at least two factors
        let mut stack: Vec<Vec<u64>> = (2..=max_order.min(10_000) as u64)
            .map(|d| vec![d])
            .collect();
        while let Some(chain) = stack.pop() {
            let product: u128 = chain.iter().map(|&d| d as u128).product();
            let last = *chain.last().expect("nonempty chain");
            let mut next = last;
            loop {
                let extended_order = product * next as u128;
                if extended_order > max_order {
                    break;
                }
                let mut extended = chain.clone();
                extended.push(next);
                let label = extended
                    .iter()
                    .map(|d| format!("C{d}"))
                    .collect::<Vec<_>>()
                    .join("x");
                specs.push((extended_order, label, GroupSpec::Abelian(extended.clone())));
                stack.push(extended);
                next += last;
            }
        }
    }
    if wanted("dihedral") {
        let mut n = 3u64;
        while 2 * n as u128 <= max_order {
            specs.push((2 * n as u128, format!("D{n}"), GroupSpec::Dihedral(n)));
            n += 1;
        }
    }
    if wanted("symmetric") {
        let mut n = 1u16;
        let mut order: u128 = 1;
        while order <= max_order {
            specs.push((order, format!("S{n}"), GroupSpec::Symmetric(n)));
            n += 1;
            order = match order.checked_mul(n as u128) {
                Some(o) => o,
                None => break,
            };
        }
    }
    if wanted("alternating") {
        let mut n = 3u16;
        let mut order: u128 = 3;
        while order <= max_order {
            specs.push((order, format!("A{n}"), GroupSpec::Alternating(n)));
            n += 1;
            order = match order.checked_mul(n as u128) {
                Some(o) => o,
                None => break,
            };
        }
    }
    if wanted("psl2") {
        let mut q = 5u64;
        loop {
            let order = q as u128 * (q as u128 * q as u128 - 1) / 2;
            if order > max_order {
                break;
            }
            if is_prime(q) {
                specs.push((order, format!("psl(2,{q})"), GroupSpec::Psl2(q)));
            }
            q += 2;
        }
    }

    specs.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(specs.into_iter().map(|(_, _, s)| s).collect())
}

fn labeled(text: String, degree: u16, gens: Vec<Permutation>) -> Result<LabeledGroup> {
    Ok(LabeledGroup {
        label: GroupLabel::text_only(text),
        group: Arc::new(PermGroup::new(degree, gens)?),
    })
}

fn degree_u16(n: u64) -> Result<u16> {
    u16::try_from(n)
        .map_err(|_| Error::Domain(format!("degree {n} exceeds {}", u16::MAX)))
}

fn full_cycle(degree: u16) -> Permutation {
    let images: Vec<u16> = (1..=degree).map(|k| k % degree + 1).collect();
    Permutation::from_images(images).expect("full cycle is a bijection")
}

fn transposition(degree: u16) -> Permutation {
    Permutation::parse_cycles("(1,2)", Some(degree)).expect("valid transposition")
}

fn content_hash(degree: u16, gens: &[Permutation]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(degree.to_string());
    for g in gens {
        hasher.update("\n");
        hasher.update(g.image_row());
    }
    let digest = hasher.finalize();
    digest[..6].iter().map(|b| format!("{b:02x}")).collect()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `x` modulo the prime `q`.
fn mod_inverse(x: u64, q: u64) -> u64 {
    // Fermat: x^(q−2) mod q
    let mut base = x % q;
    let mut exp = q - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}
