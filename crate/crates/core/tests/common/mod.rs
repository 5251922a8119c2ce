//! Seeded generators and brute-force oracles shared by the integration tests.
//!
//! The oracles work on raw exponent vectors and never call into the library
//! beyond reading generators, so agreement with the library is meaningful.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stablepd::{MonomialIdeal, MonomialPrime, Ring};

pub type Exps = Vec<u32>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn raw(ideal: &MonomialIdeal) -> Vec<Exps> {
    ideal.gens().iter().map(|g| g.exps().to_vec()).collect()
}

pub fn from_raw(ring: &Ring, gens: Vec<Exps>) -> MonomialIdeal {
    let gens = gens
        .into_iter()
        .map(|g| stablepd::Monomial::new(ring, g).unwrap())
        .collect();
    MonomialIdeal::minimize(ring, gens).unwrap()
}

pub fn prime_vars(p: &MonomialPrime) -> Vec<usize> {
    p.vars().to_vec()
}

// ---------------------------------------------------------------- generators

/// `k` random generators with exponents in `0..=max_exp`, none equal to 1.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let ring = Ring::standard(n).unwrap();
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| loop {
            let g: Exps = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if g.iter().any(|&e| e > 0) {
                break g;
            }
        })
        .collect();
    from_raw(&ring, gens)
}

/// Like [`random_ideal`], retried until the minimal generating set has
/// between `min_gens` and `max_gens` elements.
pub fn random_ideal_sized(rng: &mut ChaCha8Rng, n: usize, min_gens: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    loop {
        let i = random_ideal(rng, n, max_gens, max_exp);
        if (min_gens..=max_gens).contains(&i.gens().len()) {
            return i;
        }
    }
}

/// Generators of total degree at most `max_deg`.
pub fn random_ideal_by_degree(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    let ring = Ring::standard(n).unwrap();
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let deg = rng.gen_range(1..=max_deg);
            let mut g = vec![0; n];
            for _ in 0..deg {
                g[rng.gen_range(0..n)] += 1;
            }
            g
        })
        .collect();
    from_raw(&ring, gens)
}

pub fn random_squarefree(rng: &mut ChaCha8Rng, n: usize, max_gens: usize) -> MonomialIdeal {
    random_ideal(rng, n, max_gens, 1)
}

pub fn random_prime(rng: &mut ChaCha8Rng, n: usize, height: usize) -> Vec<usize> {
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    vars.truncate(height);
    vars.sort_unstable();
    vars
}

fn prime_power(ring: &Ring, vars: &[usize], k: u32) -> MonomialIdeal {
    MonomialIdeal::variables(ring, vars).unwrap().power(k).unwrap()
}

fn intersect_all(parts: Vec<MonomialIdeal>) -> MonomialIdeal {
    let mut it = parts.into_iter();
    let first = it.next().unwrap();
    it.fold(first, |acc, p| acc.intersect(&p).unwrap())
}

/// Intersection of powers of primes of one height: `Ass = Assh`.
pub fn random_unmixed(rng: &mut ChaCha8Rng, n: usize) -> MonomialIdeal {
    let ring = Ring::standard(n).unwrap();
    // Unmixed ideals can only fail to be CM when 2 ≤ height ≤ n - 2.
    let h = if n >= 4 { rng.gen_range(2..=n - 2) } else { rng.gen_range(1..=n) };
    let parts = (0..rng.gen_range(2..=3))
        .map(|_| {
            let k = rng.gen_range(1..=2);
            prime_power(&ring, &random_prime(rng, n, h), k)
        })
        .collect();
    intersect_all(parts)
}

/// Height `n - 1`, sometimes with an embedded maximal component.
pub fn random_height_n_minus_1(rng: &mut ChaCha8Rng, n: usize) -> MonomialIdeal {
    let ring = Ring::standard(n).unwrap();
    let mut parts: Vec<MonomialIdeal> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let k = rng.gen_range(1..=2);
            prime_power(&ring, &random_prime(rng, n, n - 1), k)
        })
        .collect();
    if rng.gen_bool(0.5) {
        let all: Vec<usize> = (0..n).collect();
        let k = rng.gen_range(2..=3);
        parts.push(prime_power(&ring, &all, k));
    }
    intersect_all(parts)
}

/// A mix of the families above with `2 ≤ n ≤ max_n` and at most `max_gens`
/// minimal generators.
pub fn random_mixed(rng: &mut ChaCha8Rng, max_n: usize, max_gens: usize) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(2..=max_n);
        let wide = rng.gen_range(3.min(max_n)..=max_n);
        let ideal = match rng.gen_range(0..4) {
            0 => random_ideal(rng, wide, 6, 3),
            1 => random_squarefree(rng, wide, 6),
            2 => {
                let n = rng.gen_range(4.min(max_n)..=max_n);
                random_unmixed(rng, n)
            }
            _ => random_height_n_minus_1(rng, n),
        };
        if !ideal.is_unit() && !ideal.is_zero() && ideal.gens().len() <= max_gens {
            return ideal;
        }
    }
}

// ------------------------------------------------------------- exact algebra

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank over the rationals by integer row reduction, dividing every reduced
/// row by the gcd of its entries. Panics on overflow rather than guessing.
pub fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c] == 0 {
                continue;
            }
            let (a, b) = (rows[r][c], rows[i][c]);
            let g = gcd(a, b);
            let (fa, fb) = (a / g, b / g);
            let mut content = 0;
            for j in 0..cols {
                let v = rows[i][j]
                    .checked_mul(fa)
                    .and_then(|x| x.checked_sub(rows[r][j].checked_mul(fb)?))
                    .expect("oracle rank overflow");
                rows[i][j] = v;
                content = gcd(content, v);
            }
            if content > 1 {
                rows[i].iter_mut().for_each(|v| *v /= content);
            }
        }
        r += 1;
    }
    r
}

/// Reduced homology ranks of the complex whose faces are given (the empty
/// face included). Entry `k` is the rank in degree `k - 1`.
pub fn reduced_homology(faces: &[Vec<usize>]) -> Vec<usize> {
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let mut by_size: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.len()].push(f);
    }
    let index: Vec<HashMap<&Vec<usize>, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    // ranks[s] = rank of the boundary from faces of size s to size s - 1.
    let mut ranks = vec![0; top + 2];
    for s in 1..=top {
        let rows: Vec<Vec<i128>> = by_size[s]
            .iter()
            .map(|f| {
                let mut row = vec![0i128; by_size[s - 1].len()];
                for k in 0..f.len() {
                    let mut facet = (*f).clone();
                    facet.remove(k);
                    row[index[s - 1][&facet]] = if k % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        ranks[s] = rank(rows);
    }
    (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

// ------------------------------------------------------------ lcm lattices

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Minimal generators of the ideal generated by `gens`.
pub fn minimize(gens: &[Exps]) -> Vec<Exps> {
    let set: BTreeSet<Exps> = gens.iter().cloned().collect();
    set.iter()
        .filter(|g| !set.iter().any(|h| h != *g && divides(h, g)))
        .cloned()
        .collect()
}

/// Every lcm of a nonempty subset of the generators.
pub fn lcm_lattice(gens: &[Exps]) -> BTreeSet<Exps> {
    let n = gens[0].len();
    let mut out = BTreeSet::new();
    for mask in 1u64..1 << gens.len() {
        let mut m = vec![0; n];
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                m = lcm(&m, g);
            }
        }
        out.insert(m);
    }
    out
}

/// `β_{i,m}(I)` from the order complex of the open interval `(1, m)` of the
/// lcm lattice: `β_{i,m}(I) = dim H̃_{i-1}`.
pub fn betti_order_complex(gens: &[Exps]) -> BTreeMap<(usize, Exps), usize> {
    let lattice: Vec<Exps> = lcm_lattice(gens).into_iter().collect();
    let mut out = BTreeMap::new();
    for m in &lattice {
        let below: Vec<&Exps> = lattice.iter().filter(|x| *x != m && divides(x, m)).collect();
        let mut chains: Vec<Vec<usize>> = vec![Vec::new()];
        let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for c in &frontier {
                for (j, x) in below.iter().enumerate() {
                    let extends = match c.last() {
                        None => true,
                        Some(&t) => j > t && *below[t] != **x && divides(below[t], x),
                    };
                    if extends {
                        let mut d = c.clone();
                        d.push(j);
                        next.push(d);
                    }
                }
            }
            chains.extend(next.iter().cloned());
            frontier = next;
        }
        record(&mut out, m, &reduced_homology(&chains));
    }
    out
}

/// Same numbers from the crosscut complex on the atoms: subsets of the
/// generators dividing `m` whose lcm is strictly below `m`.
pub fn betti_crosscut(gens: &[Exps]) -> BTreeMap<(usize, Exps), usize> {
    let mut out = BTreeMap::new();
    for m in lcm_lattice(gens) {
        let atoms: Vec<&Exps> = gens.iter().filter(|g| divides(g, &m)).collect();
        let n = m.len();
        let mut faces = Vec::new();
        for mask in 0u64..1 << atoms.len() {
            let mut l = vec![0; n];
            let mut face = Vec::new();
            for (i, a) in atoms.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    l = lcm(&l, a);
                    face.push(i);
                }
            }
            if l != m {
                faces.push(face);
            }
        }
        record(&mut out, &m, &reduced_homology(&faces));
    }
    out
}

fn record(out: &mut BTreeMap<(usize, Exps), usize>, m: &Exps, homology: &[usize]) {
    // homology[k] is H̃_{k-1}; β_{i,m}(I) = H̃_{i-1}, so i = k.
    for (k, &r) in homology.iter().enumerate() {
        if r > 0 {
            out.insert((k, m.clone()), r);
        }
    }
}

// ----------------------------------------------------------- invariants

/// `pd S/I` for a proper nonzero ideal.
pub fn pd_quotient(gens: &[Exps]) -> usize {
    betti_crosscut(&minimize(gens)).keys().map(|(i, _)| *i).max().unwrap() + 1
}

fn covers(gens: &[Exps], vars: &[usize]) -> bool {
    gens.iter().all(|g| vars.iter().any(|&v| g[v] > 0))
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
}

/// Monomial primes containing the ideal, as sorted variable lists.
pub fn v_star(n: usize, gens: &[Exps]) -> Vec<Vec<usize>> {
    subsets(n).filter(|p| !p.is_empty() && covers(gens, p)).collect()
}

pub fn minimal_primes(n: usize, gens: &[Exps]) -> BTreeSet<Vec<usize>> {
    let all = v_star(n, gens);
    all.iter()
        .filter(|p| !all.iter().any(|q| q != *p && q.iter().all(|v| p.contains(v))))
        .cloned()
        .collect()
}

pub fn height(n: usize, gens: &[Exps]) -> usize {
    minimal_primes(n, gens).iter().map(Vec::len).min().unwrap()
}

pub fn dim_quotient(n: usize, gens: &[Exps]) -> usize {
    n - height(n, gens)
}

fn member(gens: &[Exps], m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// `Ass(S/I)` by searching for monomials `u ∉ I` with `I : u` prime. Only the
/// exponent of `u` up to the largest generator exponent in each variable
/// matters, so a finite box suffices.
pub fn associated_primes_colon(n: usize, gens: &[Exps]) -> BTreeSet<Vec<usize>> {
    let bounds: Vec<u32> = (0..n).map(|i| gens.iter().map(|g| g[i]).max().unwrap()).collect();
    let mut out = BTreeSet::new();
    let mut u = vec![0u32; n];
    loop {
        if !member(gens, &u) {
            let colon = minimize(
                &gens
                    .iter()
                    .map(|g| g.iter().zip(&u).map(|(a, b)| a.saturating_sub(*b)).collect())
                    .collect::<Vec<Exps>>(),
            );
            let prime: Option<Vec<usize>> = colon
                .iter()
                .map(|g| match g.iter().filter(|&&e| e > 0).count() {
                    1 if g.iter().sum::<u32>() == 1 => g.iter().position(|&e| e == 1),
                    _ => None,
                })
                .collect();
            if let Some(mut p) = prime {
                p.sort_unstable();
                out.insert(p);
            }
        }
        let mut i = 0;
        while i < n && u[i] == bounds[i] {
            u[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        u[i] += 1;
    }
}

/// `I(p)` in the variables of `p`, minimized.
pub fn localize(gens: &[Exps], vars: &[usize]) -> Vec<Exps> {
    minimize(&gens.iter().map(|g| vars.iter().map(|&v| g[v]).collect()).collect::<Vec<_>>())
}

pub fn is_cm(n: usize, gens: &[Exps]) -> bool {
    n - pd_quotient(gens) == dim_quotient(n, gens)
}

/// Localized `pd` at every prime of `V*(I)`, keyed by prime.
pub fn localized_pds(n: usize, gens: &[Exps]) -> BTreeMap<Vec<usize>, usize> {
    v_star(n, gens)
        .into_iter()
        .map(|p| {
            let pd = pd_quotient(&localize(gens, &p));
            (p, pd)
        })
        .collect()
}

pub fn is_stable(n: usize, gens: &[Exps]) -> bool {
    let pd = pd_quotient(gens);
    localized_pds(n, gens).iter().all(|(p, &q)| p.len() < pd || q == pd)
}

pub fn pd_constant_on_v_star(n: usize, gens: &[Exps]) -> bool {
    let pd = pd_quotient(gens);
    localized_pds(n, gens).values().all(|&q| q == pd)
}

pub fn is_equidimensional(n: usize, gens: &[Exps]) -> bool {
    let heights: BTreeSet<usize> = minimal_primes(n, gens).iter().map(Vec::len).collect();
    heights.len() == 1
}

/// Equidimensional and `S(p)/I(p)` Cohen-Macaulay for every `p ∈ V*(I)`
/// other than the maximal ideal.
pub fn is_gcm(n: usize, gens: &[Exps]) -> bool {
    is_equidimensional(n, gens)
        && v_star(n, gens)
            .iter()
            .filter(|p| p.len() < n)
            .all(|p| is_cm(p.len(), &localize(gens, p)))
}
