//! Ambient polynomial ring and monomials as exponent vectors.
//!
//! Variables are identified by their 0-based index; names only matter for
//! parsing and printing. A [`Monomial`] carries its [`Ring`] so that mixing
//! monomials from different rings is caught as [`Error::RingMismatch`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The polynomial ring `K[x_1, ..., x_n]`, represented only by its variable names.
#[derive(Clone, Eq)]
pub struct Ring {
    names: Arc<[String]>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// Builds a ring from variable names. Names must be distinct identifiers
    /// (`[A-Za-z_][A-Za-z0-9_]*`) so that every monomial prints back into
    /// parseable text.
    pub fn new<I, S>(names: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not a valid variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("variable `{name}` declared twice")));
            }
        }
        Ok(Ring { names: names.into() })
    }

    /// `K[x1, ..., xn]`.
    pub fn standard(n: usize) -> Result<Ring> {
        Ring::new((1..=n).map(|i| format!("x{i}")))
    }

    /// Parses a ring declaration: a comma separated name list (`x,y,z,u`), a
    /// range (`x1..x4`), or either of those wrapped as `ring ...;`.
    pub fn parse_decl(decl: &str) -> Result<Ring> {
        let mut body = decl.trim();
        if let Some(rest) = body.strip_prefix("ring") {
            if rest.starts_with(char::is_whitespace) {
                body = rest.trim();
            }
        }
        let body = body.strip_suffix(';').unwrap_or(body).trim();
        if let Some((lo, hi)) = body.split_once("..") {
            let (lo, hi) = (lo.trim(), hi.trim());
            let split = |s: &str| -> Option<(String, usize)> {
                let digits = s.len() - s.trim_start_matches(|c: char| !c.is_ascii_digit()).len();
                let (prefix, num) = s.split_at(digits);
                if prefix.is_empty() || num.is_empty() {
                    return None;
                }
                Some((prefix.to_string(), num.parse().ok()?))
            };
            let bad = || Error::InvalidRing(format!("cannot read range `{body}`"));
            let (p1, a) = split(lo).ok_or_else(bad)?;
            let (p2, b) = split(hi).ok_or_else(bad)?;
            if p1 != p2 || a > b {
                return Err(bad());
            }
            return Ring::new((a..=b).map(|i| format!("{p1}{i}")));
        }
        Ring::new(body.split(',').map(|s| s.trim().to_string()))
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}]", self.names.join(","))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.names.join(","))
    }
}

/// Raw exponent-vector arithmetic shared by the higher level modules.
pub(crate) mod exps {
    use std::cmp::Ordering;

    pub fn divides(a: &[u32], b: &[u32]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    pub fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
    }

    pub fn quotient_saturating(a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| x.saturating_sub(*y)).collect()
    }

    pub fn degree(a: &[u32]) -> u64 {
        a.iter().map(|&e| u64::from(e)).sum()
    }

    /// Degree ascending, then lexicographic with `x1 > x2 > ... > xn`.
    pub fn canonical_cmp(a: &[u32], b: &[u32]) -> Ordering {
        degree(a).cmp(&degree(b)).then_with(|| b.cmp(a))
    }

    /// Divisibility-minimal elements, deduplicated and canonically sorted.
    pub fn minimize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
        gens.sort_by(|a, b| canonical_cmp(a, b));
        gens.dedup();
        let mut kept: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
        // A divisor always has degree <= its multiple, so earlier entries suffice.
        for g in gens {
            if !kept.iter().any(|k| divides(k, &g)) {
                kept.push(g);
            }
        }
        kept
    }

    pub fn member(gens: &[Vec<u32>], m: &[u32]) -> bool {
        gens.iter().any(|g| divides(g, m))
    }
}

/// A monomial `x^a` in a fixed ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    ring: Ring,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(ring: &Ring, exps: Vec<u32>) -> Result<Monomial> {
        if exps.len() != ring.len() {
            return Err(Error::InvalidArgument(format!(
                "exponent vector has length {}, ring has {} variables",
                exps.len(),
                ring.len()
            )));
        }
        Ok(Monomial::from_parts(ring, exps))
    }

    pub(crate) fn from_parts(ring: &Ring, exps: Vec<u32>) -> Monomial {
        debug_assert_eq!(exps.len(), ring.len());
        Monomial {
            ring: ring.clone(),
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn one(ring: &Ring) -> Monomial {
        Monomial::from_parts(ring, vec![0; ring.len()])
    }

    /// `x_index^power`.
    pub fn var_power(ring: &Ring, index: usize, power: u32) -> Result<Monomial> {
        if index >= ring.len() {
            return Err(Error::InvalidArgument(format!(
                "variable index {index} out of range for {ring}"
            )));
        }
        let mut exps = vec![0; ring.len()];
        exps[index] = power;
        Ok(Monomial::from_parts(ring, exps))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u64 {
        exps::degree(&self.exps)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut support = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        match (support.next(), support.next()) {
            (Some((i, &e)), None) => Some((i, e)),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(exps::divides(&self.exps, &other.exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.ring.check_same(&other.ring)?;
        Ok(Monomial::from_parts(&self.ring, exps::lcm(&self.exps, &other.exps)))
    }

    /// Componentwise `max(a_i - b_i, 0)`.
    pub fn quotient_saturating(&self, other: &Monomial) -> Result<Monomial> {
        self.ring.check_same(&other.ring)?;
        Ok(Monomial::from_parts(
            &self.ring,
            exps::quotient_saturating(&self.exps, &other.exps),
        ))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.ring.check_same(&other.ring)?;
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::from_parts(&self.ring, exps))
    }

    /// Every positive exponent clamped to 1.
    pub fn squarefree_part(&self) -> Monomial {
        let exps = self.exps.iter().map(|&e| e.min(1)).collect();
        Monomial::from_parts(&self.ring, exps)
    }

    /// The canonical total order: degree, then lex with `x1 > x2 > ...`.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        exps::canonical_cmp(&self.exps, &other.exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}
