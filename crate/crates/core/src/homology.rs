//! Multigraded Betti numbers of `S/I` from simplicial homology.
//!
//! For a multidegree `m` in the lcm lattice of `I`, the upper Koszul complex
//! `K^m(I)` has faces `σ ⊆ supp(m)` with `m / x^σ ∈ I`, and
//! `β_{i,m}(I) = dim H̃_{i-1}(K^m(I); Q)`. Multidegrees outside the lcm lattice
//! carry no Betti numbers, so only lattice points are examined.
//!
//! Depth is not computed independently: it is `n - pd S/I`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::ring::{exps, Monomial, Ring};

/// Largest vertex count accepted by [`reduced_homology_ranks`].
pub const MAX_COMPLEX_VERTICES: usize = 20;

/// Largest lcm lattice [`betti_table`] will enumerate.
pub const MAX_LATTICE_SIZE: usize = 1 << 20;

/// A finite simplicial complex on vertex labels `< 64`.
///
/// Faces are bitmasks over the labels. The void complex has no faces at all;
/// every other complex contains the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    faces: Vec<u64>,
}

fn mask_of(face: &[usize]) -> Result<u64> {
    face.iter().try_fold(0u64, |acc, &v| {
        if v >= 64 {
            Err(Error::TooLarge(format!("vertex label {v} exceeds 63")))
        } else {
            Ok(acc | (1 << v))
        }
    })
}

impl SimplicialComplex {
    /// The void complex (no faces, not even the empty one).
    pub fn void() -> SimplicialComplex {
        SimplicialComplex {
            vertices: Vec::new(),
            faces: Vec::new(),
        }
    }

    /// The downward closure of the given facets.
    pub fn from_facets<F: AsRef<[usize]>>(facets: &[F]) -> Result<SimplicialComplex> {
        let mut faces: HashSet<u64> = HashSet::new();
        for facet in facets {
            let mask = mask_of(facet.as_ref())?;
            // Enumerate all submasks of `mask`.
            let mut sub = mask;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        Ok(SimplicialComplex::from_mask_set(faces))
    }

    /// Faces must already be closed under taking subsets.
    pub fn from_faces<F: AsRef<[usize]>>(faces: &[F]) -> Result<SimplicialComplex> {
        let masks: HashSet<u64> = faces.iter().map(|f| mask_of(f.as_ref())).collect::<Result<_>>()?;
        for &f in &masks {
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if !masks.contains(&(f ^ bit)) {
                    return Err(Error::InvalidArgument("face family is not closed under subsets".into()));
                }
            }
        }
        Ok(SimplicialComplex::from_mask_set(masks))
    }

    pub(crate) fn from_mask_set(masks: HashSet<u64>) -> SimplicialComplex {
        let mut faces: Vec<u64> = masks.into_iter().collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        let all = faces.iter().fold(0u64, |a, &f| a | f);
        let vertices = (0..64).filter(|&v| all & (1 << v) != 0).collect();
        SimplicialComplex { vertices, faces }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Faces as sorted vertex lists, by size then lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .map(|&f| (0..64).filter(|&v| f & (1 << v) != 0).collect())
            .collect()
    }
}

/// Reduced homology dimensions, indexed by degree starting at `-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReducedHomology {
    ranks: Vec<usize>,
}

impl ReducedHomology {
    pub fn rank(&self, degree: isize) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    /// `(degree, rank)` for every nonzero rank.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (k as isize - 1, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Dimensions of `H̃_d(K; Q)` for `d ≥ -1`, via exact ranks of the
/// augmented boundary matrices.
pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> Result<ReducedHomology> {
    if complex.vertices.len() > MAX_COMPLEX_VERTICES {
        return Err(Error::TooLarge(format!(
            "complex has {} vertices (limit {MAX_COMPLEX_VERTICES})",
            complex.vertices.len()
        )));
    }
    if complex.faces.is_empty() {
        return Ok(ReducedHomology::default());
    }
    // chains[k] holds the faces with k vertices, i.e. of dimension k - 1.
    let top = complex.faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut chains: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in &complex.faces {
        chains[f.count_ones() as usize].push(f);
    }
    // boundary_rank[k] = rank of the map from k-vertex faces to (k-1)-vertex faces.
    let mut boundary_rank = vec![0usize; top + 2];
    for k in 1..=top {
        let index: HashMap<u64, usize> = chains[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let rows: Vec<Vec<i64>> = chains[k]
            .iter()
            .map(|&face| {
                let mut row = vec![0i64; chains[k - 1].len()];
                let mut rest = face;
                let mut sign = 1i64;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    row[index[&(face ^ bit)]] = sign;
                    sign = -sign;
                }
                row
            })
            .collect();
        boundary_rank[k] = linalg::rank(&rows);
    }
    let ranks = (0..=top)
        .map(|k| chains[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect();
    Ok(ReducedHomology { ranks })
}

/// All lcms of nonempty subsets of `G(I)`, canonically sorted.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    ideal.require_proper()?;
    let gens = ideal.gen_exps();
    let mut lattice = lattice_points(&gens)?;
    lattice.sort_by(|a, b| exps::canonical_cmp(a, b));
    Ok(lattice
        .into_iter()
        .map(|e| Monomial::from_parts(ideal.ring(), e))
        .collect())
}

fn lattice_points(gens: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let mut seen: HashSet<Vec<u32>> = gens.iter().cloned().collect();
    let mut queue: Vec<Vec<u32>> = seen.iter().cloned().collect();
    while let Some(a) = queue.pop() {
        for g in gens {
            let l = exps::lcm(&a, g);
            if !seen.contains(&l) {
                if seen.len() >= MAX_LATTICE_SIZE {
                    return Err(Error::TooLarge(format!(
                        "lcm lattice exceeds {MAX_LATTICE_SIZE} elements"
                    )));
                }
                seen.insert(l.clone());
                queue.push(l);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `K^m(I)` on the vertex set `supp(m)`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, m: &Monomial) -> Result<SimplicialComplex> {
    ideal.ring().check_same(m.ring())?;
    Ok(koszul_from_exps(ideal, m.exps()))
}

fn koszul_from_exps(ideal: &MonomialIdeal, m: &[u32]) -> SimplicialComplex {
    let support: Vec<usize> = (0..m.len()).filter(|&i| m[i] > 0).collect();
    let mut faces = HashSet::new();
    let mut probe = m.to_vec();
    for subset in 0u64..(1 << support.len()) {
        let mut mask = 0u64;
        for (bit, &v) in support.iter().enumerate() {
            if subset & (1 << bit) != 0 {
                probe[v] = m[v] - 1;
                mask |= 1 << v;
            } else {
                probe[v] = m[v];
            }
        }
        if ideal.contains_exps(&probe) {
            faces.insert(mask);
        }
    }
    SimplicialComplex::from_mask_set(faces)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    /// Homological degree `i` in the minimal resolution of the ideal `I`.
    pub degree: usize,
    #[serde(serialize_with = "display_str")]
    pub multidegree: Monomial,
    pub rank: usize,
}

fn display_str<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Multigraded Betti numbers of `I`, with `pd`, depth and dimension of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    ring: Ring,
    entries: Vec<BettiEntry>,
    pd_quotient: usize,
    dim_quotient: usize,
}

impl BettiTable {
    /// Nonzero `β_{i,m}(I)`, sorted by `i` then canonically by `m`.
    pub fn entries(&self) -> &[BettiEntry] {
        &self.entries
    }

    pub fn betti(&self, degree: usize, multidegree: &Monomial) -> usize {
        self.entries
            .iter()
            .find(|e| e.degree == degree && &e.multidegree == multidegree)
            .map_or(0, |e| e.rank)
    }

    /// `pd S/I`.
    pub fn pd_quotient(&self) -> usize {
        self.pd_quotient
    }

    /// `pd I = pd S/I - 1`.
    pub fn pd_ideal(&self) -> usize {
        self.pd_quotient - 1
    }

    /// `depth S/I = n - pd S/I`.
    pub fn depth_quotient(&self) -> usize {
        self.ring.len() - self.pd_quotient
    }

    pub fn dim_quotient(&self) -> usize {
        self.dim_quotient
    }

    /// Total Betti numbers of `S/I`, homological degrees `0..=pd S/I`.
    pub fn totals_quotient(&self) -> Vec<usize> {
        let mut totals = vec![0; self.pd_quotient + 1];
        totals[0] = 1;
        for e in &self.entries {
            totals[e.degree + 1] += e.rank;
        }
        totals
    }

    /// Graded Betti numbers of `S/I` keyed by `(i, total degree)`.
    pub fn graded_quotient(&self) -> BTreeMap<(usize, u64), usize> {
        let mut graded = BTreeMap::new();
        graded.insert((0, 0), 1);
        for e in &self.entries {
            *graded.entry((e.degree + 1, e.multidegree.degree())).or_insert(0) += e.rank;
        }
        graded
    }

    /// The usual triangular display: column `i`, row `j` holds `β_{i,i+j}(S/I)`.
    pub fn render(&self) -> String {
        let graded = self.graded_quotient();
        let totals = self.totals_quotient();
        let rows = graded.keys().map(|&(i, d)| d - i as u64).max().unwrap_or(0);
        let cell = |v: Option<usize>| v.map_or(".".to_string(), |x| x.to_string());
        let mut lines: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..totals.len()).map(|i| i.to_string()));
        lines.push(header);
        let mut total_line = vec!["total:".to_string()];
        total_line.extend(totals.iter().map(ToString::to_string));
        lines.push(total_line);
        for j in 0..=rows {
            let mut line = vec![format!("{j}:")];
            for i in 0..totals.len() {
                line.push(cell(graded.get(&(i, i as u64 + j)).copied()));
            }
            lines.push(line);
        }
        let widths: Vec<usize> = (0..=totals.len())
            .map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0))
            .collect();
        lines
            .iter()
            .map(|l| {
                l.iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
                    .trim_end()
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[derive(Serialize)]
struct GradedEntry {
    i: usize,
    degree: u64,
    rank: usize,
}

#[derive(Serialize)]
struct BettiView<'a> {
    pd: usize,
    depth: usize,
    dim: usize,
    totals: Vec<usize>,
    graded: Vec<GradedEntry>,
    multigraded: &'a [BettiEntry],
}

/// Serialized as `pd`/`depth`/`dim` of `S/I`, its total and graded Betti
/// numbers, and the multigraded entries of `I`.
impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BettiView {
            pd: self.pd_quotient,
            depth: self.depth_quotient(),
            dim: self.dim_quotient,
            totals: self.totals_quotient(),
            graded: self
                .graded_quotient()
                .into_iter()
                .map(|((i, degree), rank)| GradedEntry { i, degree, rank })
                .collect(),
            multigraded: &self.entries,
        }
        .serialize(s)
    }
}

/// Only `pd S/I`, skipping the dimension computation.
pub(crate) fn pd_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(multigraded_betti(ideal)?
        .iter()
        .map(|e| e.degree)
        .max()
        .expect("a proper nonzero ideal has generators")
        + 1)
}

fn multigraded_betti(ideal: &MonomialIdeal) -> Result<Vec<BettiEntry>> {
    ideal.require_proper()?;
    let lattice = lattice_points(&ideal.gen_exps())?;
    let mut entries = Vec::new();
    for m in lattice {
        let complex = koszul_from_exps(ideal, &m);
        let homology = reduced_homology_ranks(&complex)?;
        let multidegree = Monomial::from_parts(ideal.ring(), m);
        for (d, rank) in homology.nonzero() {
            entries.push(BettiEntry {
                degree: (d + 1) as usize,
                multidegree: multidegree.clone(),
                rank,
            });
        }
    }
    entries.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then_with(|| a.multidegree.canonical_cmp(&b.multidegree))
    });
    Ok(entries)
}

pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let entries = multigraded_betti(ideal)?;
    let pd_quotient = entries.iter().map(|e| e.degree).max().expect("nonempty") + 1;
    // Minimal primes of I and of its radical agree; the radical splits faster.
    let dim_quotient = Decomposition::of(&ideal.radical())?.dim_quotient();
    Ok(BettiTable {
        ring: ideal.ring().clone(),
        entries,
        pd_quotient,
        dim_quotient,
    })
}
