//! Irreducible decomposition of monomial ideals and the prime data derived
//! from it: associated primes, minimal primes, height, dimension,
//! equidimensionality and unmixedness.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{exps, Monomial, Ring};

/// A prime generated by a nonempty set of variables.
///
/// The variables themselves are stored (not their complement).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ring: Ring,
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(ring: &Ring, vars: impl IntoIterator<Item = usize>) -> Result<MonomialPrime> {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a monomial prime needs at least one variable".into()));
        }
        if let Some(&bad) = vars.iter().find(|&&v| v >= ring.len()) {
            return Err(Error::InvalidArgument(format!(
                "variable index {bad} out of range for {ring}"
            )));
        }
        Ok(MonomialPrime {
            ring: ring.clone(),
            vars,
        })
    }

    /// Looks the variables up by name.
    pub fn from_names<S: AsRef<str>>(ring: &Ring, names: &[S]) -> Result<MonomialPrime> {
        let vars = names
            .iter()
            .map(|n| {
                let n = n.as_ref().trim();
                ring.index_of(n)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{n}` in {ring}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialPrime::new(ring, vars)
    }

    /// The graded maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> MonomialPrime {
        MonomialPrime {
            ring: ring.clone(),
            vars: (0..ring.len()).collect(),
        }
    }

    pub(crate) fn from_sorted(ring: &Ring, vars: Vec<usize>) -> MonomialPrime {
        debug_assert!(!vars.is_empty() && vars.windows(2).all(|w| w[0] < w[1]));
        MonomialPrime {
            ring: ring.clone(),
            vars,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Sorted variable indices.
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn is_maximal(&self) -> bool {
        self.vars.len() == self.ring.len()
    }

    pub fn contains_var(&self, index: usize) -> bool {
        self.vars.binary_search(&index).is_ok()
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.vars.iter().all(|&v| other.contains_var(v))
    }

    /// Whether `I ⊆ p`, i.e. `p ∈ V*(I)`: every generator involves a variable of `p`.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> Result<bool> {
        self.ring.check_same(ideal.ring())?;
        Ok(ideal
            .gens()
            .iter()
            .all(|g| self.vars.iter().any(|&v| g.exponent(v) > 0)))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::variables(&self.ring, &self.vars).expect("prime variables are in range")
    }

    /// Label by the complement of the variable set, 1-based.
    pub fn complement_label(&self) -> Vec<usize> {
        (0..self.ring.len())
            .filter(|v| !self.contains_var(*v))
            .map(|v| v + 1)
            .collect()
    }
}

/// Height first, then lexicographic on the sorted variable lists.
impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|&v| self.ring.name(v)).collect();
        write!(f, "({})", names.join(", "))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialPrime{self}")
    }
}

impl Serialize for MonomialPrime {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An irreducible monomial ideal `(x_i^{a_i} : i ∈ A)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    ring: Ring,
    powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(ring: &Ring, powers: BTreeMap<usize, u32>) -> Result<IrreducibleComponent> {
        if powers.is_empty() {
            return Err(Error::InvalidArgument("an irreducible component needs a generator".into()));
        }
        if powers.iter().any(|(&i, &e)| i >= ring.len() || e == 0) {
            return Err(Error::InvalidArgument("irreducible component powers out of range".into()));
        }
        Ok(IrreducibleComponent {
            ring: ring.clone(),
            powers,
        })
    }

    /// Reads an exponent vector where `0` means "variable absent".
    fn from_corner(ring: &Ring, corner: &[u32]) -> IrreducibleComponent {
        let powers = corner
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
            .collect();
        IrreducibleComponent {
            ring: ring.clone(),
            powers,
        }
    }

    pub fn powers(&self) -> &BTreeMap<usize, u32> {
        &self.powers
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .powers
            .iter()
            .map(|(&i, &e)| Monomial::var_power(&self.ring, i, e).expect("index in range"))
            .collect();
        MonomialIdeal::minimize(&self.ring, gens).expect("same ring")
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::from_sorted(&self.ring, self.powers.keys().copied().collect())
    }

    /// `self ⊆ other` for two irreducible ideals.
    pub fn is_contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.powers
            .iter()
            .all(|(i, &e)| other.powers.get(i).is_some_and(|&o| o <= e))
    }

    fn sort_key(&self) -> (MonomialPrime, Vec<u32>) {
        (self.radical(), self.powers.values().copied().collect())
    }
}

impl Ord for IrreducibleComponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for IrreducibleComponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Generators are printed in variable order, e.g. `(x^2, y)`.
impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .powers
            .iter()
            .map(|(&i, &e)| Monomial::var_power(&self.ring, i, e).expect("index in range").to_string())
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IrreducibleComponent{self}")
    }
}

impl Serialize for IrreducibleComponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Splits `I` into irreducible pieces: while some generator `u` is not a
/// pure power, write `u = x_i^a * w` at its first variable and recurse on
/// `I + (x_i^a)` and `I + (w)`. Intermediate ideals are deduplicated.
fn split_into_irreducibles(gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut seen: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut leaves: HashSet<Vec<u32>> = HashSet::new();
    let mut stack = vec![exps::minimize(gens)];
    while let Some(current) = stack.pop() {
        if !seen.insert(current.clone()) {
            continue;
        }
        let pivot = current
            .iter()
            .find(|g| g.iter().filter(|&&e| e > 0).count() > 1);
        match pivot {
            None => {
                let n = current.first().map_or(0, Vec::len);
                let mut corner = vec![0u32; n];
                for g in &current {
                    let (i, &e) = g.iter().enumerate().find(|(_, &e)| e > 0).expect("proper ideal");
                    corner[i] = e;
                }
                leaves.insert(corner);
            }
            Some(u) => {
                let i = u.iter().position(|&e| e > 0).expect("non-unit pivot");
                let mut power = vec![0u32; u.len()];
                power[i] = u[i];
                let mut rest = u.clone();
                rest[i] = 0;
                for extra in [rest, power] {
                    let mut next = current.clone();
                    next.push(extra);
                    stack.push(exps::minimize(next));
                }
            }
        }
    }
    leaves.into_iter().collect()
}

/// The irredundant irreducible decomposition of a proper nonzero ideal,
/// together with its associated and minimal primes.
#[derive(Clone, Debug)]
pub struct Decomposition {
    ring: Ring,
    components: Vec<IrreducibleComponent>,
    associated: Vec<MonomialPrime>,
    minimal: Vec<MonomialPrime>,
}

impl Decomposition {
    pub fn of(ideal: &MonomialIdeal) -> Result<Decomposition> {
        ideal.require_proper()?;
        let ring = ideal.ring().clone();
        let candidates: Vec<IrreducibleComponent> = split_into_irreducibles(ideal.gen_exps())
            .iter()
            .map(|c| IrreducibleComponent::from_corner(&ring, c))
            .collect();
        // For irreducible ideals, q ⊇ q_1 ∩ ... ∩ q_k forces q ⊇ q_j for some j,
        // so pairwise containment decides redundancy.
        let mut components: Vec<IrreducibleComponent> = candidates
            .iter()
            .filter(|q| !candidates.iter().any(|o| o != *q && o.is_contained_in(q)))
            .cloned()
            .collect();
        components.sort();

        let mut associated: Vec<MonomialPrime> = components.iter().map(|q| q.radical()).collect();
        associated.sort();
        associated.dedup();
        let minimal = associated
            .iter()
            .filter(|p| !associated.iter().any(|o| o != *p && o.is_subset(p)))
            .cloned()
            .collect();
        Ok(Decomposition {
            ring,
            components,
            associated,
            minimal,
        })
    }

    /// Components sorted by radical (height, then variables), then exponents.
    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    /// `Ass(S/I)`, sorted.
    pub fn associated_primes(&self) -> &[MonomialPrime] {
        &self.associated
    }

    /// `Min(I)`, sorted.
    pub fn minimal_primes(&self) -> &[MonomialPrime] {
        &self.minimal
    }

    pub fn height(&self) -> usize {
        self.minimal.iter().map(MonomialPrime::height).min().expect("proper ideal has a minimal prime")
    }

    pub fn dim_quotient(&self) -> usize {
        self.ring.len() - self.height()
    }

    /// `Assh(S/I)`: associated primes with `dim S/p = dim S/I`.
    pub fn assh(&self) -> Vec<MonomialPrime> {
        let h = self.height();
        self.associated.iter().filter(|p| p.height() == h).cloned().collect()
    }

    pub fn is_equidimensional(&self) -> bool {
        let h = self.height();
        self.minimal.iter().all(|p| p.height() == h)
    }

    /// `Ass(S/I) = Assh(S/I)`.
    pub fn is_unmixed(&self) -> bool {
        let h = self.height();
        self.associated.iter().all(|p| p.height() == h)
    }

    /// `Ass(S/I) = Min(I)`.
    pub fn ass_equals_min(&self) -> bool {
        self.associated.len() == self.minimal.len()
    }
}

pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    Ok(Decomposition::of(ideal)?.components)
}

pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(Decomposition::of(ideal)?.associated)
}

pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(Decomposition::of(ideal)?.minimal)
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(Decomposition::of(ideal)?.height())
}

/// `dim S/I = n - height I`.
pub fn dim_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(Decomposition::of(ideal)?.dim_quotient())
}

pub fn is_equidimensional(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(Decomposition::of(ideal)?.is_equidimensional())
}

pub fn is_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(Decomposition::of(ideal)?.is_unmixed())
}

pub fn assh(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(Decomposition::of(ideal)?.assh())
}
