//! Monomial ideals in canonical form.
//!
//! An ideal is stored through its minimal monomial generating set `G(I)`,
//! sorted by [`Monomial::canonical_cmp`]. Two ideals are equal exactly when
//! their generator lists are equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{exps, Monomial, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimize(ring: &Ring, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        for g in &gens {
            ring.check_same(g.ring())?;
        }
        Ok(MonomialIdeal::from_exps(
            ring,
            gens.into_iter().map(|g| g.exps().to_vec()).collect(),
        ))
    }

    pub(crate) fn from_exps(ring: &Ring, gens: Vec<Vec<u32>>) -> MonomialIdeal {
        let gens = exps::minimize(gens)
            .into_iter()
            .map(|e| Monomial::from_parts(ring, e))
            .collect();
        MonomialIdeal {
            ring: ring.clone(),
            gens,
        }
    }

    pub fn zero(ring: &Ring) -> MonomialIdeal {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> MonomialIdeal {
        MonomialIdeal {
            ring: ring.clone(),
            gens: vec![Monomial::one(ring)],
        }
    }

    pub fn principal(u: &Monomial) -> MonomialIdeal {
        MonomialIdeal {
            ring: u.ring().clone(),
            gens: vec![u.clone()],
        }
    }

    /// The ideal generated by the variables with the given indices.
    pub fn variables(ring: &Ring, vars: &[usize]) -> Result<MonomialIdeal> {
        let gens = vars
            .iter()
            .map(|&i| Monomial::var_power(ring, i, 1))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimize(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The minimal generators `G(I)` in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub(crate) fn gen_exps(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|g| g.exps().to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Errors with [`Error::NotProper`] for the zero and the unit ideal.
    pub fn require_proper(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::NotProper("the zero ideal".into()))
        } else if self.is_unit() {
            Err(Error::NotProper("the unit ideal".into()))
        } else {
            Ok(())
        }
    }

    /// Membership of a monomial: some generator divides it.
    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        self.ring.check_same(m.ring())?;
        Ok(self.contains_exps(m.exps()))
    }

    pub(crate) fn contains_exps(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| exps::divides(g.exps(), m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(other.gens.iter().all(|g| self.contains_exps(g.exps())))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.gen_exps();
        gens.extend(other.gen_exps());
        Ok(MonomialIdeal::from_exps(&self.ring, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.mul(v)?.exps().to_vec());
            }
        }
        Ok(MonomialIdeal::from_exps(&self.ring, gens))
    }

    /// `I^k`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(exps::lcm(u.exps(), v.exps()));
            }
        }
        Ok(MonomialIdeal::from_exps(&self.ring, gens))
    }

    /// The colon ideal `I : u` for a monomial `u`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.ring.check_same(u.ring())?;
        let gens = self
            .gens
            .iter()
            .map(|g| exps::quotient_saturating(g.exps(), u.exps()))
            .collect();
        Ok(MonomialIdeal::from_exps(&self.ring, gens))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.squarefree_part().exps().to_vec())
            .collect();
        MonomialIdeal::from_exps(&self.ring, gens)
    }

    /// `supp(I)`: sorted indices of variables occurring in some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.len())
            .filter(|&i| self.gens.iter().any(|g| g.exponent(i) > 0))
            .collect()
    }

    pub fn is_fully_supported(&self) -> bool {
        self.support().len() == self.ring.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exps().iter().all(|&e| e <= 1))
    }

    /// The common degree of all generators, if there is one.
    pub fn generating_degree(&self) -> Option<u64> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}
