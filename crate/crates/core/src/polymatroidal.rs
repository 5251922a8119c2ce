//! Polymatroidal ideals: the exchange-property recognizer, Veronese-type
//! ideals `I_(d; a_1..a_n)`, transversal ideals `p_1 ⋯ p_r`, and the closed
//! forms for their projective dimension and stability.
//!
//! Membership in the Veronese and transversal classes is by construction
//! only; arbitrary ideals are not recognized as belonging to either.

use std::fmt;

use serde::Serialize;

use crate::decomposition::MonomialPrime;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{exps, Ring};

/// Exchange property: for `u, v ∈ G(I)` with `deg_i u > deg_i v` there is
/// `j` with `deg_j u < deg_j v` and `x_j u / x_i ∈ I`. Ideals not generated
/// in a single degree are never polymatroidal.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_proper()?;
    if ideal.generating_degree().is_none() {
        return Ok(false);
    }
    let gens = ideal.gen_exps();
    let n = ideal.ring().len();
    for u in &gens {
        for v in &gens {
            for i in (0..n).filter(|&i| u[i] > v[i]) {
                let exchanged = (0..n).filter(|&j| u[j] < v[j]).any(|j| {
                    let mut w = u.clone();
                    w[i] -= 1;
                    w[j] += 1;
                    exps::member(&gens, &w)
                });
                if !exchanged {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Polymatroidal, generated in degree 2, with some `x_i^2` among the
/// generators. Fully supported ideals of this kind have stable projective
/// dimension; without full support they need not, e.g. `(x1^2, x1*x2)` in
/// three variables. The checker only tests the hypothesis.
pub fn degree2_pure_power_stable(ideal: &MonomialIdeal) -> bool {
    ideal.generating_degree() == Some(2)
        && ideal.gens().iter().any(|g| g.as_pure_power().is_some())
        && is_polymatroidal(ideal).unwrap_or(false)
}

/// Parameters `(d; a_1, ..., a_n)` with `1 ≤ a_i ≤ d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VeroneseParams {
    d: u32,
    bounds: Vec<u32>,
}

impl VeroneseParams {
    pub fn new(d: u32, bounds: Vec<u32>) -> Result<VeroneseParams> {
        if d == 0 {
            return Err(Error::InvalidArgument("Veronese degree must be positive".into()));
        }
        if bounds.is_empty() {
            return Err(Error::InvalidArgument("Veronese bounds must be nonempty".into()));
        }
        if let Some(a) = bounds.iter().find(|&&a| a == 0 || a > d) {
            return Err(Error::InvalidArgument(format!(
                "Veronese bound {a} outside 1..={d}"
            )));
        }
        Ok(VeroneseParams { d, bounds })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    fn bound_sum(&self) -> u64 {
        self.bounds.iter().map(|&a| u64::from(a)).sum()
    }

    fn check_nonempty(&self) -> Result<()> {
        if self.bound_sum() < u64::from(self.d) {
            Err(Error::EmptyIdeal(format!(
                "no monomial of degree {} fits under bounds {:?}",
                self.d, self.bounds
            )))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for VeroneseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bounds: Vec<String> = self.bounds.iter().map(ToString::to_string).collect();
        write!(f, "({}; {})", self.d, bounds.join(","))
    }
}

/// `I_(d; a)`: all monomials of degree `d` with `deg_{x_i} ≤ a_i`.
pub fn veronese(params: &VeroneseParams, ring: &Ring) -> Result<MonomialIdeal> {
    if params.bounds.len() != ring.len() {
        return Err(Error::InvalidArgument(format!(
            "{} bounds given for a ring with {} variables",
            params.bounds.len(),
            ring.len()
        )));
    }
    params.check_nonempty()?;
    let mut gens = Vec::new();
    let mut current = vec![0u32; ring.len()];
    fill_bounded(&params.bounds, 0, params.d, &mut current, &mut gens);
    Ok(MonomialIdeal::from_exps(ring, gens))
}

fn fill_bounded(bounds: &[u32], at: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if at == bounds.len() {
        if left == 0 {
            out.push(current.clone());
        }
        return;
    }
    let room: u32 = bounds[at + 1..].iter().sum();
    let lo = left.saturating_sub(room);
    for e in lo..=bounds[at].min(left) {
        current[at] = e;
        fill_bounded(bounds, at + 1, left - e, current, out);
    }
    current[at] = 0;
}

/// `pd S/I_(d; a) = min(n, Σ a_i - d + 1)`.
pub fn veronese_pd(params: &VeroneseParams) -> Result<usize> {
    params.check_nonempty()?;
    let n = params.bounds.len() as u64;
    Ok((params.bound_sum() - u64::from(params.d) + 1).min(n) as usize)
}

/// A list of monomial primes `p_1, ..., p_r` (repeats allowed) in one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalSpec {
    ring: Ring,
    primes: Vec<MonomialPrime>,
}

impl TransversalSpec {
    pub fn new(primes: Vec<MonomialPrime>) -> Result<TransversalSpec> {
        let ring = primes
            .first()
            .ok_or_else(|| Error::InvalidArgument("a transversal ideal needs at least one prime".into()))?
            .ring()
            .clone();
        for p in &primes {
            ring.check_same(p.ring())?;
        }
        Ok(TransversalSpec { ring, primes })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn primes(&self) -> &[MonomialPrime] {
        &self.primes
    }

    /// `supp(p_1 ⋯ p_r)`: the union of the prime variable sets.
    pub fn support(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = self.primes.iter().flat_map(|p| p.vars().iter().copied()).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }
}

/// `p_1 ⋯ p_r`.
pub fn transversal_ideal(spec: &TransversalSpec) -> Result<MonomialIdeal> {
    spec.primes
        .iter()
        .try_fold(MonomialIdeal::unit(&spec.ring), |acc, p| acc.product(&p.to_ideal()))
}

/// Graph on the factors, `{i, j}` an edge when `p_i` and `p_j` share a variable.
/// Vertices are 0-based positions in the prime list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// Connected components, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
}

impl ComponentGraph {
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }
}

pub fn component_graph(spec: &TransversalSpec) -> ComponentGraph {
    let r = spec.primes.len();
    let mut edges = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            if spec.primes[i].vars().iter().any(|&v| spec.primes[j].contains_var(v)) {
                edges.push((i, j));
            }
        }
    }
    let mut label: Vec<usize> = (0..r).collect();
    fn root(label: &mut [usize], mut v: usize) -> usize {
        while label[v] != v {
            label[v] = label[label[v]];
            v = label[v];
        }
        v
    }
    for &(i, j) in &edges {
        let (a, b) = (root(&mut label, i), root(&mut label, j));
        label[a.max(b)] = a.min(b);
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; r];
    for v in 0..r {
        let c = root(&mut label, v);
        if slot[c] == usize::MAX {
            slot[c] = components.len();
            components.push(Vec::new());
        }
        components[slot[c]].push(v);
    }
    ComponentGraph {
        vertices: r,
        edges,
        components,
    }
}

/// `pd I = |supp(I)| - s` where `s` counts the components of the factor
/// graph. This is the projective dimension of the ideal; `pd S/I` is one more.
pub fn transversal_pd(spec: &TransversalSpec) -> usize {
    spec.support().len() - component_graph(spec).num_components()
}

/// Which stability clause a transversal ideal satisfies, in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StabilityClause {
    /// (a) every factor is principal.
    #[serde(rename = "a")]
    PrincipalProduct,
    /// (b) every factor is the same prime.
    #[serde(rename = "b")]
    PrimePower,
    /// (c) the factor graph is connected and the ideal is fully supported.
    #[serde(rename = "c")]
    ConnectedFullySupported,
}

impl StabilityClause {
    pub fn tag(self) -> char {
        match self {
            StabilityClause::PrincipalProduct => 'a',
            StabilityClause::PrimePower => 'b',
            StabilityClause::ConnectedFullySupported => 'c',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalVerdict {
    pub stable: bool,
    pub clause: Option<StabilityClause>,
}

/// Stability of `p_1 ⋯ p_r` from the structure of the factors alone.
pub fn transversal_stability(spec: &TransversalSpec) -> TransversalVerdict {
    let clause = if spec.primes.iter().all(|p| p.height() == 1) {
        Some(StabilityClause::PrincipalProduct)
    } else if spec.primes.windows(2).all(|w| w[0] == w[1]) {
        Some(StabilityClause::PrimePower)
    } else if component_graph(spec).is_connected() && spec.support().len() == spec.ring.len() {
        Some(StabilityClause::ConnectedFullySupported)
    } else {
        None
    };
    TransversalVerdict {
        stable: clause.is_some(),
        clause,
    }
}
