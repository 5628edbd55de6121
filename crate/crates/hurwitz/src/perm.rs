//! Permutations of `{1, ..., n}` in image-row representation.
//!
//! Points are 1-based everywhere. A permutation of degree `n` is stored as
//! the row of images of `1, 2, ..., n`, so the row `1 6 4 3 9 2 8 7 5`
//! denotes the permutation fixing 1 and sending 2 to 6. Composition applies
//! the left factor first: `(p * q).apply(x) == q.apply(p.apply(x))`. This is
//! the convention of the computer algebra systems that produced the legacy
//! data files read by this crate, and conjugation and commutators follow
//! suit: `x.conjugated_by(h)` is `h⁻¹·x·h` and `a.commutator(&b)` is
//! `a⁻¹·b⁻¹·a·b`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., degree}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `images[k]` is the image of point `k + 1`.
    images: Vec<u16>,
}

impl Permutation {
    /// The identity on `{1, ..., degree}`.
    pub fn identity(degree: u16) -> Self {
        Permutation { images: (1..=degree).collect() }
    }

    /// Builds a permutation from the images of `1, ..., n` and checks that
    /// they form a bijection.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(Error::Construction(format!("degree {n} exceeds {}", u16::MAX)));
        }
        let mut seen = vec![false; n];
        for &img in &images {
            if img == 0 || img as usize > n {
                return Err(Error::Construction(format!(
                    "image {img} out of range 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[img as usize - 1], true) {
                return Err(Error::Construction(format!("image {img} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    /// Parses a whitespace-separated image row such as `1 6 4 3 9 2 8 7 5`.
    ///
    /// The row must contain exactly `degree` entries.
    pub fn parse_image_row(text: &str, degree: u16) -> Result<Self> {
        let mut images = Vec::with_capacity(degree as usize);
        for token in text.split_whitespace() {
            let img: u16 = token.parse().map_err(|_| {
                Error::Format(format!("bad image row entry {token:?}"))
            })?;
            images.push(img);
        }
        if images.len() != degree as usize {
            return Err(Error::Format(format!(
                "image row has {} entries, expected {degree}",
                images.len()
            )));
        }
        Self::from_images(images).map_err(|e| Error::Format(e.to_string()))
    }

    /// Parses disjoint cycle notation, e.g. `(2,3)(4,6)(5,8)(7,9)`.
    ///
    /// Points may be separated by commas or spaces, and `()` denotes the
    /// identity. When `degree` is `None` the degree is taken to be the
    /// largest point mentioned (at least 1).
    pub fn parse_cycles(text: &str, degree: Option<u16>) -> Result<Self> {
        let text = text.trim();
        let mut cycles: Vec<Vec<u16>> = Vec::new();
        let mut rest = text;
        if rest.is_empty() {
            return Err(Error::Format("empty cycle expression".into()));
        }
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let Some(inner) = rest.strip_prefix('(') else {
                return Err(Error::Format(format!(
                    "expected '(' in cycle expression at {rest:?}"
                )));
            };
            let Some(close) = inner.find(')') else {
                return Err(Error::Format("unclosed cycle".into()));
            };
            let body = &inner[..close];
            rest = &inner[close + 1..];
            let points: Vec<u16> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u16>()
                        .map_err(|_| Error::Format(format!("bad cycle point {s:?}")))
                })
                .collect::<Result<_>>()?;
            if points.iter().any(|&p| p == 0) {
                return Err(Error::Format("cycle points are 1-based".into()));
            }
            if !points.is_empty() {
                cycles.push(points);
            }
        }
        let max_point = cycles.iter().flatten().copied().max().unwrap_or(1);
        let degree = match degree {
            Some(d) if d < max_point => {
                return Err(Error::Format(format!(
                    "cycle mentions point {max_point} beyond degree {d}"
                )));
            }
            Some(d) => d,
            None => max_point,
        };
        let mut images: Vec<u16> = (1..=degree).collect();
        for cycle in &cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if images[from as usize - 1] != from {
                    return Err(Error::Format(format!(
                        "point {from} appears in two cycles"
                    )));
                }
                images[from as usize - 1] = to;
            }
            if cycle.len() != cycle.iter().collect::<std::collections::HashSet<_>>().len() {
                return Err(Error::Format("repeated point within a cycle".into()));
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> u16 {
        self.images.len() as u16
    }

    /// Image of a 1-based point.
    #[inline]
    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize - 1]
    }

    /// The image row, with `images()[k]` the image of `k + 1`.
    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &img)| img as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.images.len()];
        for (k, &img) in self.images.iter().enumerate() {
            images[img as usize - 1] = k as u16 + 1;
        }
        Permutation { images }
    }

    /// `h⁻¹ · self · h`.
    pub fn conjugated_by(&self, h: &Permutation) -> Self {
        assert_eq!(self.degree(), h.degree(), "degree mismatch in conjugation");
        let mut images = vec![0u16; self.images.len()];
        for (k, &hk) in h.images.iter().enumerate() {
            // (h⁻¹ x h)(h(k+1)) = h(x(k+1))
            images[hk as usize - 1] = h.images[self.images[k] as usize - 1];
        }
        Permutation { images }
    }

    /// `self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Permutation) -> Self {
        self.inverse() * other.inverse() * self.clone() * other.clone()
    }

    /// Multiplicative order, the least `k > 0` with `self^k` trivial.
    pub fn order(&self) -> u128 {
        let mut seen = vec![false; self.images.len()];
        let mut order: u128 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut point = start;
            while !seen[point] {
                seen[point] = true;
                point = self.images[point] as usize - 1;
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }

    /// `self` raised to the power `e`, computed cycle by cycle.
    pub fn power(&self, e: u128) -> Permutation {
        let n = self.images.len();
        let mut images = vec![0u16; n];
        let mut seen = vec![false; n];
        let mut cycle = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycle.clear();
            let mut point = start;
            while !seen[point] {
                seen[point] = true;
                cycle.push(point);
                point = self.images[point] as usize - 1;
            }
            let shift = (e % cycle.len() as u128) as usize;
            for (i, &from) in cycle.iter().enumerate() {
                images[from] = cycle[(i + shift) % cycle.len()] as u16 + 1;
            }
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each rotated to start at its least point, sorted
    /// by that least point.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut point = start;
            while !seen[point] {
                seen[point] = true;
                cycle.push(point as u16 + 1);
                point = self.images[point] as usize - 1;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Disjoint cycle notation, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&p.to_string());
            }
            out.push(')');
        }
        out
    }

    /// The image row as space-separated text.
    pub fn image_row(&self) -> String {
        self.images
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl std::ops::Mul for Permutation {
    type Output = Permutation;

    /// Left factor first: `(p * q).apply(x) == q.apply(p.apply(x))`.
    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        let images = self
            .images
            .iter()
            .map(|&img| rhs.images[img as usize - 1])
            .collect();
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: u16) -> Permutation {
        Permutation::parse_image_row(text, degree).unwrap()
    }

    #[test]
    fn image_row_round_trip() {
        let a = p("1 6 4 3 9 2 8 7 5", 9);
        assert_eq!(a.image_row(), "1 6 4 3 9 2 8 7 5");
        assert_eq!(a.apply(2), 6);
        assert_eq!(a.apply(1), 1);
    }

    #[test]
    fn cycle_structure_of_fixture_row() {
        let a = p("1 6 4 3 9 2 8 7 5", 9);
        assert_eq!(a.cycles(), vec![vec![2, 6], vec![3, 4], vec![5, 9], vec![7, 8]]);
        assert_eq!(a.cycle_string(), "(2,6)(3,4)(5,9)(7,8)");
        assert_eq!(a.order(), 2);
    }

    #[test]
    fn fixture_rows_have_expected_orders() {
        assert_eq!(p("4 5 8 9 6 2 3 7 1", 9).order(), 3);
        assert_eq!(p("5 2 8 1 6 9 7 4 3", 9).order(), 7);
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::parse_cycles("(1,2)", Some(3)).unwrap();
        let b = Permutation::parse_cycles("(2,3)", Some(3)).unwrap();
        // apply a first: 1 -> 2 -> 3
        assert_eq!((a.clone() * b.clone()).apply(1), 3);
        assert_eq!((b * a).apply(1), 2);
    }

    #[test]
    fn product_of_fixture_triple_is_identity() {
        let c1 = p("1 6 4 3 9 2 8 7 5", 9);
        let c2 = p("4 5 8 9 6 2 3 7 1", 9);
        let c3 = p("5 2 8 1 6 9 7 4 3", 9);
        assert!((c1 * c2 * c3).is_identity());
    }

    #[test]
    fn inverse_and_conjugation() {
        let a = p("4 5 8 9 6 2 3 7 1", 9);
        assert!((a.clone() * a.inverse()).is_identity());
        let h = p("5 2 8 1 6 9 7 4 3", 9);
        let conj = a.conjugated_by(&h);
        assert_eq!(conj, h.inverse() * a.clone() * h.clone());
        assert_eq!(conj.order(), a.order());
    }

    #[test]
    fn commutator_convention() {
        let a = Permutation::parse_cycles("(1,2,3)", Some(4)).unwrap();
        let b = Permutation::parse_cycles("(3,4)", Some(4)).unwrap();
        let c = a.commutator(&b);
        assert_eq!(c, a.inverse() * b.inverse() * a.clone() * b.clone());
    }

    #[test]
    fn cycle_parsing_accepts_spaces_and_commas() {
        let a = Permutation::parse_cycles("(2,3)(4,6)(5,8)(7,9)", None).unwrap();
        assert_eq!(a.degree(), 9);
        assert_eq!(a.order(), 2);
        let b = Permutation::parse_cycles("(2 3)(4 6)(5 8)(7 9)", None).unwrap();
        assert_eq!(a, b);
        let id = Permutation::parse_cycles("()", Some(5)).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.degree(), 5);
    }

    #[test]
    fn cycle_parsing_rejects_malformed_input() {
        assert!(Permutation::parse_cycles("(1,2", Some(3)).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", Some(3)).is_err());
        assert!(Permutation::parse_cycles("(0,1)", Some(3)).is_err());
        assert!(Permutation::parse_cycles("1,2", Some(3)).is_err());
        assert!(Permutation::parse_cycles("(1,5)", Some(3)).is_err());
    }

    #[test]
    fn image_row_validation() {
        assert!(Permutation::parse_image_row("1 2 2", 3).is_err());
        assert!(Permutation::parse_image_row("1 2 4", 3).is_err());
        assert!(Permutation::parse_image_row("1 2", 3).is_err());
        assert!(Permutation::parse_image_row("1 2 x", 3).is_err());
    }

    #[test]
    fn power_matches_repeated_multiplication() {
        let a = p("4 5 8 9 6 2 3 7 1", 9);
        let mut acc = Permutation::identity(9);
        for e in 0..10u128 {
            assert_eq!(a.power(e), acc, "exponent {e}");
            acc = acc * a.clone();
        }
        assert!(a.power(a.order()).is_identity());
    }

    #[test]
    fn order_of_identity() {
        assert_eq!(Permutation::identity(7).order(), 1);
        assert!(Permutation::identity(7).is_identity());
        assert_eq!(Permutation::identity(3).cycle_string(), "()");
    }
}
