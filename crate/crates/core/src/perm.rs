//! Exact permutations on a finite point set.
//!
//! Points are 0-based internally; all cycle-notation I/O is 1-based, so the
//! string form of a transposition of the first two points is `"(1,2)"` and
//! the identity prints as `"()"`.
//!
//! Composition is a left action: `(a * b)(x) = a(b(x))`, the right factor is
//! applied first. This convention is fixed project-wide.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("images are not a bijection on 0..{degree}")]
    NotABijection { degree: usize },
    #[error("invalid cycle notation: {0}")]
    Parse(String),
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
}

/// Points are stored as bytes; degrees beyond this are rejected.
pub const MAX_DEGREE: usize = 255;

/// A permutation of `{0, …, degree-1}`, stored by its image array.
///
/// The derived `Ord` is lexicographic on the image array; this is the
/// canonical element order used for canonical keys throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its image array (0-based).
    pub fn from_images(images: Vec<u8>) -> Result<Self, PermError> {
        let degree = images.len();
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let mut seen = vec![false; degree];
        for &y in &images {
            if (y as usize) >= degree || seen[y as usize] {
                return Err(PermError::NotABijection { degree });
            }
            seen[y as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 1-based points. Cycles need not actually be disjoint; later cycles are
    /// applied first, matching the usual product-of-cycles reading.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let mut result = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<u8> = (0..degree as u8).collect();
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if pt == 0 || pt > degree || next == 0 || next > degree {
                    return Err(PermError::Parse(format!(
                        "point out of range 1..={degree} in cycle"
                    )));
                }
                images[pt - 1] = (next - 1) as u8;
            }
            let cyc = Permutation::from_images(images)
                .map_err(|_| PermError::Parse("repeated point in cycle".into()))?;
            result = cyc.compose(&result)?;
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y as usize)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = (0..self.degree())
            .map(|x| self.images[other.images[x] as usize])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u8;
        }
        Permutation { images }
    }

    /// Conjugate `self` by `g`, returning `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation, PermError> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// Points moved by the permutation, ascending, 0-based.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&x| self.images[x] as usize != x)
            .collect()
    }

    /// Disjoint cycles of length >= 2, each rotated to start at its smallest
    /// point and the list ordered by that smallest point. Points are 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Multiset of cycle lengths >= 2, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(|c| c.len())
            .fold(1, num_integer_lcm)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn parity(&self) -> Parity {
        if self.is_even() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Re-embeds the permutation on the low points of a larger degree.
    pub fn extend_to(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree() && degree <= MAX_DEGREE);
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..degree as u8);
        Permutation { images }
    }

    /// Restricts to the first `degree` points; panics if any of them maps out.
    pub fn restrict_to(&self, degree: usize) -> Permutation {
        assert!(self
            .images
            .iter()
            .take(degree)
            .all(|&y| (y as usize) < degree));
        Permutation {
            images: self.images[..degree].to_vec(),
        }
    }
}

fn num_integer_lcm(a: usize, b: usize) -> usize {
    let gcd = {
        let (mut x, mut y) = (a, b);
        while y != 0 {
            let t = x % y;
            x = y;
            y = t;
        }
        x
    };
    a / gcd * b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses cycle notation, e.g. `"(1,5)(2,6)(3,7)(4,8)"`; `"()"` is the
/// identity. The degree is the largest point mentioned; use
/// [`Permutation::extend_to`] to pad afterwards.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cycles = parse_cycles(s)?;
        let degree = cycles
            .iter()
            .flat_map(|c| c.iter().copied())
            .max()
            .unwrap_or(0);
        Permutation::from_cycles(degree, &cycles)
    }
}

pub(crate) fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let Some(open) = rest.find('(') else {
            return Err(PermError::Parse(format!("expected '(' in {rest:?}")));
        };
        if !rest[..open].trim().is_empty() {
            return Err(PermError::Parse(format!("junk before cycle: {rest:?}")));
        }
        let Some(close) = rest.find(')') else {
            return Err(PermError::Parse(format!("unclosed cycle in {rest:?}")));
        };
        let body = &rest[open + 1..close];
        if !body.trim().is_empty() {
            let cycle = body
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| PermError::Parse(format!("bad point {tok:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if cycle.iter().any(|&p| p == 0) {
                return Err(PermError::Parse("points are 1-based".into()));
            }
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Parses a permutation in cycle notation at a prescribed degree.
pub fn parse_permutation(s: &str, degree: usize) -> Result<Permutation, PermError> {
    let cycles = parse_cycles(s)?;
    Permutation::from_cycles(degree, &cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, degree: usize) -> Permutation {
        parse_permutation(s, degree).unwrap()
    }

    #[test]
    fn compose_is_right_factor_first() {
        // (1,2) ∘ (1,3) sends 1 -> 3, 3 -> 2, 2 -> 1.
        let a = p("(1,2)", 3);
        let b = p("(1,3)", 3);
        assert_eq!(a.compose(&b).unwrap().to_string(), "(1,3,2)");
    }

    #[test]
    fn identity_is_neutral() {
        let id = Permutation::identity(4);
        let t = p("(1,2)", 4);
        assert_eq!(id.compose(&t).unwrap(), t);
        assert_eq!(t.compose(&id).unwrap(), t);
    }

    #[test]
    fn involution_squares_to_identity() {
        let t = p("(1,2)(3,4)", 4);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let g = p("(1,4,2,6)(3,5)", 6);
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert!(g.inverse().compose(&g).unwrap().is_identity());
    }

    #[test]
    fn parity_of_small_elements() {
        assert_eq!(p("(1,2)", 2).parity(), Parity::Odd);
        assert_eq!(p("(1,2)(3,4)", 4).parity(), Parity::Even);
        // A 4-cycle is three transpositions.
        assert_eq!(p("(1,2,3,4)", 4).parity(), Parity::Odd);
    }

    #[test]
    fn degree_mismatch_rejected() {
        let a = p("(1,2)", 2);
        let b = p("(1,2)", 3);
        assert_eq!(a.compose(&b), Err(PermError::DegreeMismatch(2, 3)));
    }

    #[test]
    fn cycle_notation_round_trips() {
        for s in ["(1,5)(2,6)(3,7)(4,8)", "(1,2)", "(1,3,2)", "()"] {
            let g: Permutation = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
    }

    #[test]
    fn display_orders_cycles_by_smallest_point() {
        let g = p("(13,14)(1,2)", 14);
        assert_eq!(g.to_string(), "(1,2)(13,14)");
    }

    #[test]
    fn conjugation_relabels_points() {
        let g = p("(1,2)", 4);
        let c = p("(1,3)(2,4)", 4);
        assert_eq!(g.conjugate_by(&c).unwrap().to_string(), "(3,4)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
    }
}
