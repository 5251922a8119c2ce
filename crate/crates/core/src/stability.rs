//! Stable projective dimension and the Cohen-Macaulay style predicates.
//!
//! A monomial ideal `I` has stable projective dimension when
//! `pd S(p)/I(p) = pd S/I` for every monomial prime `p ∈ V*(I)` with
//! `height p ≥ pd S/I`. The localized projective dimensions are memoized by
//! the canonical form of `I(p)`, since many localizations coincide.

use std::cell::RefCell;
use std::collections::HashMap;

use serde::Serialize;

use crate::decomposition::{Decomposition, MonomialPrime};
use crate::error::{Error, Result};
use crate::homology;
use crate::ideal::MonomialIdeal;
use crate::localization::{localize, primes_at_or_above};

/// Whether the stability scan may stop at the first witness.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    ShortCircuit,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExaminedPrime {
    pub prime: MonomialPrime,
    /// `pd S(p)/I(p)`.
    pub pd: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    /// `pd S/I`.
    pub pd: usize,
    /// `depth S/I`.
    pub depth: usize,
    /// `dim S/I`.
    pub dim: usize,
    pub stable: bool,
    /// Primes of `V*(I)` with height `≥ pd`, in enumeration order, with their
    /// localized projective dimension.
    pub examined: Vec<ExaminedPrime>,
    /// The first prime where the localized projective dimension drops.
    pub witness: Option<MonomialPrime>,
    pub cm: bool,
    pub gcm: bool,
    pub unmixed: bool,
    pub ass_eq_min: bool,
}

type MemoKey = (usize, Vec<Vec<u32>>);

/// Shared state for one ideal: its decomposition, `pd S/I`, and a memo of
/// localized projective dimensions keyed by `(n, G(I(p)))`.
pub struct StabilityChecker {
    ideal: MonomialIdeal,
    decomposition: Decomposition,
    pd: usize,
    memo: RefCell<HashMap<MemoKey, usize>>,
}

impl StabilityChecker {
    pub fn new(ideal: &MonomialIdeal) -> Result<StabilityChecker> {
        let decomposition = Decomposition::of(ideal)?;
        let pd = homology::pd_quotient(ideal)?;
        Ok(StabilityChecker {
            ideal: ideal.clone(),
            decomposition,
            pd,
            memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    pub fn pd(&self) -> usize {
        self.pd
    }

    pub fn depth(&self) -> usize {
        self.ideal.ring().len() - self.pd
    }

    pub fn dim(&self) -> usize {
        self.decomposition.dim_quotient()
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.depth() == self.dim()
    }

    /// `pd S(p)/I(p)`; errors when `p ∉ V*(I)` since then `I(p)` is the unit ideal.
    pub fn localized_pd(&self, prime: &MonomialPrime) -> Result<usize> {
        if prime.is_maximal() {
            return Ok(self.pd);
        }
        let local = localize(&self.ideal, prime)?;
        let ideal = local.ideal();
        if ideal.is_unit() {
            return Err(Error::NotProper(format!("{prime} does not contain the ideal")));
        }
        let key = (ideal.ring().len(), ideal.gen_exps());
        if let Some(&pd) = self.memo.borrow().get(&key) {
            return Ok(pd);
        }
        let pd = homology::pd_quotient(ideal)?;
        self.memo.borrow_mut().insert(key, pd);
        Ok(pd)
    }

    /// `height I(p)` for `p ∈ V*(I)`: the smallest minimal prime of `I` inside `p`.
    pub fn localized_height(&self, prime: &MonomialPrime) -> Option<usize> {
        self.decomposition
            .minimal_primes()
            .iter()
            .filter(|q| q.is_subset(prime))
            .map(MonomialPrime::height)
            .min()
    }

    /// `S(p)/I(p)` is Cohen-Macaulay, i.e. `pd S(p)/I(p) = height I(p)`.
    pub fn localized_is_cm(&self, prime: &MonomialPrime) -> Result<bool> {
        let height = self
            .localized_height(prime)
            .ok_or_else(|| Error::NotProper(format!("{prime} does not contain the ideal")))?;
        Ok(self.localized_pd(prime)? == height)
    }

    /// Equidimensional, and Cohen-Macaulay at every `p ∈ V*(I)` other than `m`.
    pub fn is_generalized_cm(&self) -> Result<bool> {
        if !self.decomposition.is_equidimensional() {
            return Ok(false);
        }
        for p in primes_at_or_above(&self.ideal, 0)? {
            if !p.is_maximal() && !self.localized_is_cm(&p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `pd S(p)/I(p) = pd S/I` for every `p ∈ V*(I)`, with no height restriction.
    pub fn pd_constant_on_v_star(&self) -> Result<bool> {
        for p in primes_at_or_above(&self.ideal, 0)? {
            if self.localized_pd(&p)? != self.pd {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn report(&self, mode: Mode) -> Result<StabilityReport> {
        let mut examined = Vec::new();
        let mut witness = None;
        for prime in primes_at_or_above(&self.ideal, self.pd)? {
            let pd = self.localized_pd(&prime)?;
            let drops = pd != self.pd;
            if drops && witness.is_none() {
                witness = Some(prime.clone());
            }
            examined.push(ExaminedPrime { prime, pd });
            if drops && mode == Mode::ShortCircuit {
                break;
            }
        }
        Ok(StabilityReport {
            pd: self.pd,
            depth: self.depth(),
            dim: self.dim(),
            stable: witness.is_none(),
            examined,
            witness,
            cm: self.is_cohen_macaulay(),
            gcm: self.is_generalized_cm()?,
            unmixed: self.decomposition.is_unmixed(),
            ass_eq_min: self.decomposition.ass_equals_min(),
        })
    }
}

/// Decides stable projective dimension; stops at the first witness.
pub fn is_stable_pd(ideal: &MonomialIdeal) -> Result<StabilityReport> {
    is_stable_pd_with(ideal, Mode::ShortCircuit)
}

pub fn is_stable_pd_with(ideal: &MonomialIdeal, mode: Mode) -> Result<StabilityReport> {
    StabilityChecker::new(ideal)?.report(mode)
}

/// Full report with every examined prime listed.
pub fn classify(ideal: &MonomialIdeal) -> Result<StabilityReport> {
    is_stable_pd_with(ideal, Mode::Exhaustive)
}

/// `depth S/I = dim S/I`.
pub fn is_cohen_macaulay(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_proper()?;
    let pd = homology::pd_quotient(ideal)?;
    Ok(pd == Decomposition::of(&ideal.radical())?.height())
}

pub fn is_generalized_cm(ideal: &MonomialIdeal) -> Result<bool> {
    StabilityChecker::new(ideal)?.is_generalized_cm()
}

/// `pd S(p)/I(p)` for `p ∈ V*(I)`.
pub fn localized_pd(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<usize> {
    ideal.require_proper()?;
    let local = localize(ideal, prime)?;
    if local.ideal().is_unit() {
        return Err(Error::NotProper(format!("{prime} does not contain the ideal")));
    }
    homology::pd_quotient(local.ideal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn ideal(r: &Ring, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exps(r, gens.iter().map(|g| g.to_vec()).collect())
    }

    #[test]
    fn cubic_example_is_stable_but_not_cm() {
        let r = Ring::parse_decl("x,y,z").unwrap();
        let i = ideal(&r, &[&[2, 1, 0], &[2, 0, 1], &[1, 1, 1]]);
        let rep = classify(&i).unwrap();
        assert!(rep.stable);
        assert!(!rep.cm && !rep.gcm);
        assert_eq!((rep.pd, rep.depth, rep.dim), (2, 1, 2));
        let seen: Vec<(String, usize)> = rep.examined.iter().map(|e| (e.prime.to_string(), e.pd)).collect();
        assert_eq!(
            seen,
            [("(x, y)".to_string(), 2), ("(x, z)".into(), 2), ("(y, z)".into(), 2), ("(x, y, z)".into(), 2)]
        );
    }

    #[test]
    fn disjoint_planes_are_unstable_gcm() {
        let r = Ring::standard(4).unwrap();
        let a = MonomialIdeal::variables(&r, &[0, 1]).unwrap();
        let b = MonomialIdeal::variables(&r, &[2, 3]).unwrap();
        let i = a.intersect(&b).unwrap();
        let rep = is_stable_pd(&i).unwrap();
        assert!(!rep.stable);
        assert_eq!(rep.pd, 3);
        assert_eq!(rep.witness.as_ref().unwrap().to_string(), "(x1, x2, x3)");
        assert_eq!(rep.examined.last().unwrap().pd, 2);
        assert!(rep.gcm);
        assert!(!rep.cm);
        let full = classify(&i).unwrap();
        assert_eq!(full.examined.len(), 5);
        assert_eq!(full.witness, rep.witness);
    }

    #[test]
    fn edge_ideal_with_chord() {
        let r = Ring::standard(4).unwrap();
        let i = ideal(&r, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1], &[1, 0, 1, 0]]);
        let rep = is_stable_pd(&i).unwrap();
        assert_eq!((rep.pd, rep.depth), (3, 1));
        assert!(!rep.stable);
        assert_eq!(rep.witness.unwrap().to_string(), "(x1, x2, x3)");
    }

    #[test]
    fn cm_examples() {
        let r = Ring::standard(4).unwrap();
        let path = ideal(&r, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        assert!(is_cohen_macaulay(&path).unwrap());
        assert!(!is_cohen_macaulay(&path.power(2).unwrap()).unwrap());
        let p = MonomialPrime::new(&r, [0, 2]).unwrap().to_ideal();
        assert!(is_cohen_macaulay(&p).unwrap());
        assert!(is_generalized_cm(&p).unwrap());
        let rep = classify(&p).unwrap();
        assert!(rep.cm && rep.stable && rep.unmixed && rep.ass_eq_min);
    }

    #[test]
    fn depth_zero_is_stable() {
        let r = Ring::standard(3).unwrap();
        let i = ideal(&r, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let rep = classify(&i).unwrap();
        assert_eq!(rep.depth, 0);
        assert!(rep.stable);
        assert_eq!(rep.examined.len(), 1);
        assert!(rep.examined[0].prime.is_maximal());
    }

    #[test]
    fn localized_pd_requires_containment() {
        let r = Ring::standard(3).unwrap();
        let i = ideal(&r, &[&[1, 1, 0]]);
        let p = MonomialPrime::new(&r, [2]).unwrap();
        assert!(matches!(localized_pd(&i, &p), Err(Error::NotProper(_))));
        let q = MonomialPrime::new(&r, [0]).unwrap();
        assert_eq!(localized_pd(&i, &q).unwrap(), 1);
        assert!(is_stable_pd(&MonomialIdeal::zero(&r)).is_err());
    }

    #[test]
    fn report_serializes_field_for_field() {
        let r = Ring::standard(2).unwrap();
        let rep = classify(&ideal(&r, &[&[1, 0]])).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            json,
            r#"{"pd":1,"depth":1,"dim":1,"stable":true,"examined":[{"prime":"(x1)","pd":1},{"prime":"(x1, x2)","pd":1}],"witness":null,"cm":true,"gcm":true,"unmixed":true,"ass_eq_min":true}"#
        );
    }
}
