//! Monomial localization `I(p)` and enumeration of `V*(I)`.
//!
//! `I(p)` is obtained from `I` by setting every variable outside `p` to 1. It
//! lives in the smaller ring `S(p) = K[x_i : x_i ∈ p]`, which keeps the
//! original variable names; `index_map` records where each local variable
//! came from.

use std::collections::BTreeSet;

use crate::decomposition::{Decomposition, MonomialPrime};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedIdeal {
    prime: MonomialPrime,
    ring: Ring,
    ideal: MonomialIdeal,
    index_map: Vec<usize>,
}

impl LocalizedIdeal {
    pub fn prime(&self) -> &MonomialPrime {
        &self.prime
    }

    /// `S(p)`.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `I(p)`.
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn into_ideal(self) -> MonomialIdeal {
        self.ideal
    }

    /// `index_map[j]` is the index in the original ring of local variable `j`.
    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    /// Re-expresses a prime `q ⊆ p` of the original ring inside `S(p)`.
    pub fn local_prime(&self, q: &MonomialPrime) -> Result<MonomialPrime> {
        self.prime.ring().check_same(q.ring())?;
        if !q.is_subset(&self.prime) {
            return Err(Error::InvalidArgument(format!("{q} is not contained in {}", self.prime)));
        }
        let vars = q
            .vars()
            .iter()
            .map(|v| self.index_map.binary_search(v).expect("q ⊆ p"));
        MonomialPrime::new(&self.ring, vars)
    }
}

/// `I(p)` in `S(p)`. When `p ∉ V*(I)` the result is the unit ideal.
pub fn localize(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<LocalizedIdeal> {
    ideal.ring().check_same(prime.ring())?;
    let index_map = prime.vars().to_vec();
    let names: Vec<&str> = index_map.iter().map(|&i| ideal.ring().name(i)).collect();
    let ring = Ring::new(names)?;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| index_map.iter().map(|&i| g.exponent(i)).collect())
        .collect();
    Ok(LocalizedIdeal {
        prime: prime.clone(),
        ideal: MonomialIdeal::from_exps(&ring, gens),
        ring,
        index_map,
    })
}

/// `p ∈ V*(I)`: every generator of `I` lies in `p`.
pub fn contains(prime: &MonomialPrime, ideal: &MonomialIdeal) -> Result<bool> {
    prime.contains_ideal(ideal)
}

/// Lazily yields the primes of `V*(I)` of height `≥ h`, ordered by height
/// and then lexicographically by variable list.
///
/// Each level is produced by extending the minimal primes of `I` with
/// variables from their complement, so only supersets of `Min(I)` are visited.
pub fn primes_at_or_above(ideal: &MonomialIdeal, min_height: usize) -> Result<PrimesAtOrAbove> {
    let ring = ideal.ring().clone();
    if min_height > ring.len() {
        return Err(Error::InvalidArgument(format!(
            "height {min_height} exceeds the number of variables {}",
            ring.len()
        )));
    }
    let seeds: Vec<Vec<usize>> = if ideal.is_zero() {
        vec![Vec::new()]
    } else if ideal.is_unit() {
        Vec::new()
    } else {
        Decomposition::of(&ideal.radical())?
            .minimal_primes()
            .iter()
            .map(|p| p.vars().to_vec())
            .collect()
    };
    Ok(PrimesAtOrAbove {
        ring,
        seeds,
        next_height: min_height.max(1),
        level: Vec::new().into_iter(),
    })
}

pub struct PrimesAtOrAbove {
    ring: Ring,
    seeds: Vec<Vec<usize>>,
    next_height: usize,
    level: std::vec::IntoIter<Vec<usize>>,
}

fn extend_to(seed: &[usize], n: usize, height: usize, out: &mut BTreeSet<Vec<usize>>) {
    let free: Vec<usize> = (0..n).filter(|v| !seed.contains(v)).collect();
    let need = height - seed.len();
    // Walk all `need`-subsets of `free` in lexicographic order.
    let mut pick: Vec<usize> = (0..need).collect();
    loop {
        let mut prime: Vec<usize> = seed.to_vec();
        prime.extend(pick.iter().map(|&k| free[k]));
        prime.sort_unstable();
        out.insert(prime);
        let Some(pos) = (0..need).rev().find(|&i| pick[i] < free.len() - need + i) else {
            break;
        };
        pick[pos] += 1;
        for j in pos + 1..need {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

impl PrimesAtOrAbove {
    fn fill_level(&mut self) -> bool {
        let n = self.ring.len();
        while self.next_height <= n {
            let height = self.next_height;
            self.next_height += 1;
            let mut level = BTreeSet::new();
            for seed in self.seeds.iter().filter(|s| s.len() <= height) {
                extend_to(seed, n, height, &mut level);
            }
            if !level.is_empty() {
                self.level = level.into_iter().collect::<Vec<_>>().into_iter();
                return true;
            }
        }
        false
    }
}

impl Iterator for PrimesAtOrAbove {
    type Item = MonomialPrime;

    fn next(&mut self) -> Option<MonomialPrime> {
        loop {
            if let Some(vars) = self.level.next() {
                return Some(MonomialPrime::from_sorted(&self.ring, vars));
            }
            if !self.fill_level() {
                return None;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: &Ring, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exps(r, gens.iter().map(|g| g.to_vec()).collect())
    }

    fn prime(r: &Ring, vars: &[usize]) -> MonomialPrime {
        MonomialPrime::new(r, vars.iter().copied()).unwrap()
    }

    fn two_planes() -> MonomialIdeal {
        let r = Ring::standard(4).unwrap();
        let a = MonomialIdeal::variables(&r, &[0, 1]).unwrap();
        let b = MonomialIdeal::variables(&r, &[2, 3]).unwrap();
        a.intersect(&b).unwrap()
    }

    #[test]
    fn localize_examples() {
        let i = two_planes();
        let r = i.ring().clone();
        let loc = localize(&i, &prime(&r, &[0, 1, 2])).unwrap();
        assert_eq!(loc.ring().names(), &["x1", "x2", "x3"]);
        assert_eq!(loc.ideal().to_string(), "(x1, x2)");
        assert_eq!(loc.index_map(), &[0, 1, 2]);

        let edge = ideal(&r, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1], &[1, 0, 1, 0]]);
        let loc = localize(&edge, &prime(&r, &[0, 1, 2])).unwrap();
        assert_eq!(loc.ideal().to_string(), "(x1, x3)");

        let m = MonomialPrime::maximal(&r);
        assert_eq!(localize(&edge, &m).unwrap().ideal(), &edge);

        // x2*x4 becomes 1 outside V*(I).
        let outside = localize(&i, &prime(&r, &[0, 2])).unwrap();
        assert!(outside.ideal().is_unit());
        let line = localize(&i, &prime(&r, &[0, 1, 3])).unwrap();
        assert_eq!(line.ideal().to_string(), "(x1, x2)");
    }

    #[test]
    fn membership_in_v_star() {
        let i = two_planes();
        let r = i.ring().clone();
        assert!(!contains(&prime(&r, &[0, 2]), &i).unwrap());
        assert!(contains(&prime(&r, &[0, 1]), &i).unwrap());
        assert!(contains(&prime(&r, &[0, 1, 3]), &i).unwrap());
        let pure = ideal(&r, &[&[2, 0, 0, 0], &[0, 1, 1, 1]]);
        assert!(!contains(&prime(&r, &[1, 2, 3]), &pure).unwrap());
    }

    #[test]
    fn enumeration_order_and_pruning() {
        let r = Ring::parse_decl("x,y,z").unwrap();
        let i = ideal(&r, &[&[2, 1, 0], &[2, 0, 1], &[1, 1, 1]]);
        let got: Vec<String> = primes_at_or_above(&i, 2).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(got, ["(x, y)", "(x, z)", "(y, z)", "(x, y, z)"]);
        let top: Vec<String> = primes_at_or_above(&i, 3).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(top, ["(x, y, z)"]);
        let all: Vec<String> = primes_at_or_above(&i, 0).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(all, ["(x)", "(x, y)", "(x, z)", "(y, z)", "(x, y, z)"]);
        assert!(primes_at_or_above(&i, 4).is_err());
        assert_eq!(primes_at_or_above(&MonomialIdeal::unit(&r), 0).unwrap().count(), 0);
        assert_eq!(primes_at_or_above(&MonomialIdeal::zero(&r), 0).unwrap().count(), 7);
    }

    #[test]
    fn local_prime_reindexes() {
        let i = two_planes();
        let r = i.ring().clone();
        let loc = localize(&i, &prime(&r, &[1, 2, 3])).unwrap();
        let q = loc.local_prime(&prime(&r, &[2, 3])).unwrap();
        assert_eq!(q.vars(), &[1, 2]);
        assert_eq!(q.to_string(), "(x3, x4)");
        assert!(loc.local_prime(&prime(&r, &[0])).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_gens() -> impl Strategy<Value = Vec<Vec<u32>>> {
            proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 1..5)
        }

        fn arb_vars() -> impl Strategy<Value = Vec<usize>> {
            proptest::sample::subsequence(vec![0usize, 1, 2, 3], 1..=4)
        }

        proptest! {
            #[test]
            fn enumeration_matches_brute_force(gens in arb_gens(), h in 0usize..=4) {
                let r = Ring::standard(4).unwrap();
                let i = MonomialIdeal::from_exps(&r, gens);
                let got: Vec<MonomialPrime> = primes_at_or_above(&i, h).unwrap().collect();
                let mut want: Vec<MonomialPrime> = (1u32..16)
                    .map(|mask| prime(&r, &(0..4).filter(|v| mask & (1 << v) != 0).collect::<Vec<_>>()))
                    .filter(|p| p.height() >= h && contains(p, &i).unwrap())
                    .collect();
                want.sort();
                prop_assert_eq!(got, want);
            }

            #[test]
            fn localization_commutes_with_operations(a in arb_gens(), b in arb_gens(), vars in arb_vars()) {
                let r = Ring::standard(4).unwrap();
                let (i, j) = (MonomialIdeal::from_exps(&r, a), MonomialIdeal::from_exps(&r, b));
                let p = prime(&r, &vars);
                let loc = |x: &MonomialIdeal| localize(x, &p).unwrap().into_ideal();
                prop_assert_eq!(loc(&i.product(&j).unwrap()), loc(&i).product(&loc(&j)).unwrap());
                prop_assert_eq!(loc(&i.intersect(&j).unwrap()), loc(&i).intersect(&loc(&j)).unwrap());
                prop_assert_eq!(loc(&i.radical()), loc(&i).radical());
                let sum = i.sum(&j).unwrap();
                prop_assert!(loc(&sum).contains_ideal(&loc(&i)).unwrap());
            }

            #[test]
            fn iterated_localization(gens in arb_gens(), outer in arb_vars(), keep in proptest::collection::vec(any::<bool>(), 4)) {
                let r = Ring::standard(4).unwrap();
                let i = MonomialIdeal::from_exps(&r, gens);
                let p = prime(&r, &outer);
                let inner: Vec<usize> = outer.iter().zip(&keep).filter(|(_, &k)| k).map(|(&v, _)| v).collect();
                prop_assume!(!inner.is_empty());
                let q = prime(&r, &inner);
                let step = localize(&i, &p).unwrap();
                let twice = localize(step.ideal(), &step.local_prime(&q).unwrap()).unwrap();
                let direct = localize(&i, &q).unwrap();
                prop_assert_eq!(twice.ideal(), direct.ideal());
            }
        }
    }
}
