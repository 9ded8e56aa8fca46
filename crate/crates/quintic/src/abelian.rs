//! Finite abelian groups presented as direct products of cyclic factors.
//!
//! Elements are residue vectors kept in canonical form (coordinate `i`
//! reduced into `[0, d_i)`), so equality, hashing and ordering are plain
//! vector comparisons, and the lexicographic rank of the residue vector
//! doubles as a stable vertex index for Cayley graphs.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::numtheory;

/// A finite abelian group `Z_{d_1} x ... x Z_{d_k}`, every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<u64>,
}

/// A group element as a canonical residue vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    residues: Vec<u64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("cyclic factor {0} is smaller than 2")]
    FactorTooSmall(u64),
    #[error("a group needs at least one cyclic factor")]
    NoFactors,
    #[error("element has {got} coordinates, group has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Literal parse failure with a byte position into the input.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn parse_err(position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position,
        message: message.into(),
    }
}

impl GroupSpec {
    pub fn new(factors: Vec<u64>) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::NoFactors);
        }
        if let Some(&d) = factors.iter().find(|&&d| d < 2) {
            return Err(GroupError::FactorTooSmall(d));
        }
        Ok(GroupSpec { factors })
    }

    /// Parses a group literal such as `"Z6xZ2"` (case-insensitive).
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut factors = Vec::new();
        loop {
            match bytes.get(pos) {
                Some(b'z') | Some(b'Z') => pos += 1,
                _ => return Err(parse_err(pos, "expected 'Z'")),
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == start {
                return Err(parse_err(pos, "expected a cyclic order"));
            }
            let d: u64 = text[start..pos]
                .parse()
                .map_err(|_| parse_err(start, "cyclic order out of range"))?;
            if d < 2 {
                return Err(parse_err(start, "cyclic order must be at least 2"));
            }
            factors.push(d);
            match bytes.get(pos) {
                None => break,
                Some(b'x') | Some(b'X') => pos += 1,
                Some(_) => return Err(parse_err(pos, "expected 'x' or end of input")),
            }
        }
        GroupSpec::new(factors).map_err(|e| parse_err(0, e.to_string()))
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn identity(&self) -> Element {
        Element {
            residues: vec![0; self.factors.len()],
        }
    }

    /// Builds an element from signed coordinates, reducing each mod `d_i`.
    pub fn element(&self, coords: &[i64]) -> Result<Element, GroupError> {
        if coords.len() != self.factors.len() {
            return Err(GroupError::DimensionMismatch {
                expected: self.factors.len(),
                got: coords.len(),
            });
        }
        let residues = coords
            .iter()
            .zip(&self.factors)
            .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
            .collect();
        Ok(Element { residues })
    }

    /// Parses an element literal such as `"(1,0)"` and canonicalizes it.
    pub fn element_from_str(&self, text: &str) -> Result<Element, ParseError> {
        let raw = parse_coords(text)?;
        self.element(&raw).map_err(|e| parse_err(0, e.to_string()))
    }

    fn check(&self, e: &Element) -> Result<(), GroupError> {
        if e.residues.len() != self.factors.len() {
            return Err(GroupError::DimensionMismatch {
                expected: self.factors.len(),
                got: e.residues.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        debug_assert!(self.check(x).is_ok() && self.check(y).is_ok());
        let residues = x
            .residues
            .iter()
            .zip(&y.residues)
            .zip(&self.factors)
            .map(|((&a, &b), &d)| (a + b) % d)
            .collect();
        Element { residues }
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.scale(-1, x)
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    /// Integer multiple `k * x`, any sign of `k`.
    pub fn scale(&self, k: i64, x: &Element) -> Element {
        debug_assert!(self.check(x).is_ok());
        let residues = x
            .residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &d)| {
                let d_i = d as i128;
                ((k as i128 * r as i128).rem_euclid(d_i)) as u64
            })
            .collect();
        Element { residues }
    }

    /// Order of `x` in the group: lcm over factors of `d_i / gcd(d_i, r_i)`.
    pub fn order_of(&self, x: &Element) -> u64 {
        debug_assert!(self.check(x).is_ok());
        x.residues
            .iter()
            .zip(&self.factors)
            .map(|(&r, &d)| d / numtheory::gcd(d, r))
            .fold(1, |acc, o| acc / numtheory::gcd(acc, o) * o)
    }

    /// Subgroup generated by `gens`, as a sorted set.
    pub fn span(&self, gens: &[Element]) -> BTreeSet<Element> {
        let mut seen = BTreeSet::from([self.identity()]);
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    /// All elements of order exactly 2, in lexicographic order.
    pub fn involutions(&self) -> Vec<Element> {
        self.elements()
            .filter(|e| self.order_of(e) == 2)
            .collect()
    }

    /// All elements in lexicographic order of their residue vectors.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(|i| self.element_at(i as usize))
    }

    /// The `idx`-th element in lexicographic order.
    pub fn element_at(&self, idx: usize) -> Element {
        let mut idx = idx as u64;
        debug_assert!(idx < self.order());
        let mut residues = vec![0; self.factors.len()];
        for (i, &d) in self.factors.iter().enumerate().rev() {
            residues[i] = idx % d;
            idx /= d;
        }
        Element { residues }
    }

    /// Lexicographic rank of `x`; inverse of [`GroupSpec::element_at`].
    pub fn index_of(&self, x: &Element) -> usize {
        debug_assert!(self.check(x).is_ok());
        x.residues
            .iter()
            .zip(&self.factors)
            .fold(0u64, |acc, (&r, &d)| acc * d + r) as usize
    }

    /// Structural checks for a prospective connection set.
    pub fn validate_connection_set(&self, set: &[Element]) -> ConnectionSetReport {
        let distinct: BTreeSet<&Element> = set.iter().collect();
        let identity = self.identity();
        let excludes_identity = !distinct.contains(&identity);
        let inverse_closed = distinct.iter().all(|e| distinct.contains(&self.neg(e)));
        let generates = self.span(set).len() as u64 == self.order();
        let involution_count = distinct
            .iter()
            .filter(|e| self.order_of(e) == 2)
            .count();
        ConnectionSetReport {
            inverse_closed,
            excludes_identity,
            generates,
            involution_count,
            distinct_count: distinct.len(),
        }
    }
}

/// Outcome of [`GroupSpec::validate_connection_set`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConnectionSetReport {
    pub inverse_closed: bool,
    pub excludes_identity: bool,
    pub generates: bool,
    pub involution_count: usize,
    pub distinct_count: usize,
}

impl Element {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// Parses an element literal `"(r1,r2,...)"` into raw coordinates.
    pub fn parse_raw(text: &str) -> Result<Vec<i64>, ParseError> {
        parse_coords(text)
    }
}

fn parse_coords(text: &str) -> Result<Vec<i64>, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    if bytes.first() != Some(&b'(') {
        return Err(parse_err(0, "expected '('"));
    }
    pos += 1;
    let mut coords = Vec::new();
    loop {
        let start = pos;
        if bytes.get(pos) == Some(&b'-') {
            pos += 1;
        }
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == start || (pos == start + 1 && bytes[start] == b'-') {
            return Err(parse_err(pos, "expected a residue"));
        }
        let r: i64 = text[start..pos]
            .parse()
            .map_err(|_| parse_err(start, "residue out of range"))?;
        coords.push(r);
        match bytes.get(pos) {
            Some(b',') => pos += 1,
            Some(b')') => {
                pos += 1;
                break;
            }
            _ => return Err(parse_err(pos, "expected ',' or ')'")),
        }
    }
    if pos != bytes.len() {
        return Err(parse_err(pos, "trailing input after ')'"));
    }
    Ok(coords)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Renders a connection set as a `;`-separated list of element literals.
pub fn set_literal(set: &[Element]) -> String {
    let parts: Vec<String> = set.iter().map(Element::to_string).collect();
    parts.join(";")
}
