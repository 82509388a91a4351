//! The bigraded cohomology of the moment-angle complex 𝒵_K via subset
//! enumeration, its ring structure (the star product on per-subset
//! cohomology bases), Alexander duality, and the Gorenstein*/Poincaré-algebra
//! and rigidity checks built on top of them.
//!
//! Everything here is additive over the full subcomplexes K_J, J ⊆ [m]: a
//! class of reduced degree d on subset J sits in total degree |J| + d + 1.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{
    excision_product, fundamental_class, reduced_cohomology_basis, reduced_cohomology_int,
    reduced_homology, reduced_homology_basis, reduced_homology_of_chain, union_product,
    ChainComplex, Coeff, CohomologyBasis, HomologyBasis, HomologySummary,
};
use crate::linalg::{Field, PrimeField, RankAccumulator, Rationals};
use crate::vertex_set::VertexSet;
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

// ---------------------------------------------------------------------------
// Bigraded Betti numbers
// ---------------------------------------------------------------------------

/// Reduced cohomology of every full subcomplex K_J, indexed by subset, with
/// aggregations to the total grading of H*(𝒵_K) and to the Tor bigrading.
///
/// Over ℤ the per-subset summaries are cohomology groups (free rank as in
/// homology, torsion shifted up one degree by universal coefficients), so
/// the aggregated torsion is that of H^p(𝒵_K).
pub struct BigradedBetti {
    pub m: usize,
    pub coeff: Coeff,
    /// one entry per subset, in canonical order (popcount, then numeric)
    pub entries: Vec<(VertexSet, HomologySummary)>,
}

pub fn bigraded_betti(k: &SimplicialComplex, coeff: Coeff) -> BigradedBetti {
    let m = k.ground_size();
    let subsets = VertexSet::full(m).subsets_by_size();
    let entries: Vec<(VertexSet, HomologySummary)> = subsets
        .par_iter()
        .map(|j| {
            let sub = k.full_subcomplex(*j);
            let summary = match coeff {
                Coeff::Integers => reduced_cohomology_int(&sub),
                _ => reduced_homology(&sub, coeff),
            };
            (*j, summary)
        })
        .collect();
    BigradedBetti { m, coeff, entries }
}

impl BigradedBetti {
    /// Rank of H̃^d(K_J).
    pub fn rank(&self, j: VertexSet, d: isize) -> usize {
        self.entries
            .iter()
            .find(|(s, _)| *s == j)
            .map_or(0, |(_, h)| h.rank(d))
    }

    /// Nonzero (J, d, rank) rows in canonical subset order.
    pub fn rows(&self) -> Vec<(VertexSet, isize, usize)> {
        let mut out = Vec::new();
        for (j, h) in &self.entries {
            for (&d, &r) in &h.ranks {
                if r > 0 {
                    out.push((*j, d, r));
                }
            }
        }
        out
    }

    /// Betti numbers of 𝒵_K by total degree p = |J| + d + 1, from p = 0.
    pub fn betti(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (j, h) in &self.entries {
            for (&d, &r) in &h.ranks {
                let p = (j.len() as isize + d + 1) as usize;
                if out.len() <= p {
                    out.resize(p + 1, 0);
                }
                out[p] += r;
            }
        }
        out
    }

    /// Torsion factors of H^p(𝒵_K;ℤ) by total degree (empty over fields).
    pub fn torsion_by_degree(&self) -> BTreeMap<usize, Vec<BigInt>> {
        let mut out: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
        for (j, h) in &self.entries {
            for (&d, t) in &h.torsion {
                let p = (j.len() as isize + d + 1) as usize;
                out.entry(p).or_default().extend(t.iter().cloned());
            }
        }
        for v in out.values_mut() {
            v.sort();
        }
        out
    }

    /// Tor bigrading: rank at bidegree (−i, 2j) = Σ_{|J|=j} rank H̃^{j−i−1}(K_J).
    pub fn tor_rank(&self, i: usize, j: usize) -> usize {
        self.entries
            .iter()
            .filter(|(s, _)| s.len() == j)
            .map(|(_, h)| h.rank(j as isize - i as isize - 1))
            .sum()
    }

    /// The ℋ grading: rank of ℋ^i = ⊕_J H̃^{i−1}(K_J).
    pub fn h_rank(&self, i: usize) -> usize {
        self.entries
            .iter()
            .map(|(_, h)| h.rank(i as isize - 1))
            .sum()
    }
}

// ---------------------------------------------------------------------------
// The Hochster ring
// ---------------------------------------------------------------------------

/// A basis element of the reduced ring: the `index`-th class of
/// H̃^degree(K_subset). Total degree = |subset| + degree + 1. The class on
/// J = ∅ (the unit of the unreduced ring) is excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HochsterClass {
    pub subset: VertexSet,
    pub degree: isize,
    pub index: usize,
}

pub struct SubsetCohomology<F: Field> {
    pub bases: BTreeMap<isize, CohomologyBasis<F>>,
    /// representative cocycles as sparse term lists, aligned with each basis
    sparse_reps: BTreeMap<isize, Vec<Vec<(VertexSet, F::Elem)>>>,
    /// simplex → position in the degree's cochain basis
    positions: BTreeMap<isize, HashMap<VertexSet, usize>>,
}

impl<F: Field> SubsetCohomology<F> {
    fn new(f: F, sub: &SimplicialComplex) -> SubsetCohomology<F> {
        let cc = ChainComplex::new(sub);
        let bases = reduced_cohomology_basis(f, &cc);
        let mut sparse_reps = BTreeMap::new();
        let mut positions = BTreeMap::new();
        for (&d, basis) in &bases {
            let reps: Vec<Vec<(VertexSet, F::Elem)>> = basis
                .representatives
                .iter()
                .map(|rep| {
                    basis
                        .simplices
                        .iter()
                        .zip(rep)
                        .filter(|(_, c)| !f.is_zero(c))
                        .map(|(s, c)| (*s, c.clone()))
                        .collect()
                })
                .collect();
            sparse_reps.insert(d, reps);
            positions.insert(
                d,
                basis
                    .simplices
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (*s, i))
                    .collect(),
            );
        }
        SubsetCohomology {
            bases,
            sparse_reps,
            positions,
        }
    }

    pub fn dim_at(&self, d: isize) -> usize {
        self.bases.get(&d).map_or(0, |b| b.dim())
    }
}

/// The cohomology ring of 𝒵_K in its Hochster decomposition: a basis of
/// H̃*(K_J;k) with cochain representatives for every J, and the signed star
/// product between classes on disjoint subsets.
pub struct HochsterRing<F: Field> {
    pub field: F,
    pub complex: SimplicialComplex,
    pub classes: Vec<HochsterClass>,
    pub subsets: HashMap<u64, SubsetCohomology<F>>,
    class_pos: HashMap<(u64, isize, usize), usize>,
}

pub fn hochster_ring<F: Field>(f: F, k: &SimplicialComplex) -> HochsterRing<F> {
    let m = k.ground_size();
    let order = VertexSet::full(m).subsets_by_size();
    let computed: Vec<(VertexSet, SubsetCohomology<F>)> = order
        .par_iter()
        .map(|j| (*j, SubsetCohomology::new(f, &k.full_subcomplex(*j))))
        .collect();
    let mut classes = Vec::new();
    let mut class_pos = HashMap::new();
    for (j, data) in &computed {
        if j.is_empty() {
            continue;
        }
        for (&d, basis) in &data.bases {
            for index in 0..basis.dim() {
                class_pos.insert((j.0, d, index), classes.len());
                classes.push(HochsterClass {
                    subset: *j,
                    degree: d,
                    index,
                });
            }
        }
    }
    HochsterRing {
        field: f,
        complex: k.clone(),
        classes,
        subsets: computed.into_iter().map(|(j, d)| (j.0, d)).collect(),
        class_pos,
    }
}

/// Ring over ℤ: admissible only when every H̃*(K_J;ℤ) is torsion-free, in
/// which case the structure constants are computed over ℚ.
pub fn hochster_ring_over_z(k: &SimplicialComplex) -> Result<HochsterRing<Rationals>> {
    let betti = bigraded_betti(k, Coeff::Integers);
    for (j, h) in &betti.entries {
        if h.has_torsion() {
            return Err(Error::TorsionUnsupported(format!(
                "H̃*(K_{j}) has torsion"
            )));
        }
    }
    Ok(hochster_ring(Rationals, k))
}

impl<F: Field> HochsterRing<F> {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn total_degree(&self, i: usize) -> usize {
        let c = &self.classes[i];
        (c.subset.len() as isize + c.degree + 1) as usize
    }

    pub fn class_position(&self, subset: VertexSet, degree: isize, index: usize) -> Option<usize> {
        self.class_pos.get(&(subset.0, degree, index)).copied()
    }

    /// Star product of two basis classes, as a sparse vector over the global
    /// basis: lift to representative cocycles, take the union product in
    /// K_{I∪J}, apply the sign (−1)^{|I|q + θ(I,J)} (q = cohomological
    /// degree of the right factor), and project through the coordinate
    /// functional of K_{I∪J}.
    pub fn star_product(&self, a: usize, b: usize) -> Vec<(usize, F::Elem)> {
        let f = self.field;
        let (ca, cb) = (&self.classes[a], &self.classes[b]);
        if !ca.subset.is_disjoint_from(cb.subset) {
            return Vec::new();
        }
        let l = ca.subset.union(cb.subset);
        let target_deg = ca.degree + cb.degree + 1;
        let Some(data_l) = self.subsets.get(&l.0) else {
            return Vec::new();
        };
        let Some(basis_l) = data_l.bases.get(&target_deg) else {
            return Vec::new();
        };
        let u = &self.subsets[&ca.subset.0].sparse_reps[&ca.degree][ca.index];
        let v = &self.subsets[&cb.subset.0].sparse_reps[&cb.degree][cb.index];
        let prod = union_product(f, &self.complex, u, v);
        if prod.is_empty() {
            return Vec::new();
        }
        let q = (cb.degree + 1) as usize;
        let sign_exp = ca.subset.len() * q + ca.subset.theta(cb.subset);
        let sign = f.from_i64(if sign_exp % 2 == 0 { 1 } else { -1 });
        let pos = &data_l.positions[&target_deg];
        let mut dense = vec![f.zero(); basis_l.simplices.len()];
        for (s, c) in prod {
            dense[pos[&s]] = f.mul(&c, &sign);
        }
        let coords = basis_l.coordinates(f, &dense);
        coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(idx, c)| (self.class_pos[&(l.0, target_deg, idx)], c))
            .collect()
    }

    /// All nonzero products between basis classes, computed in parallel over
    /// pairs of disjoint subsets and merged deterministically.
    pub fn all_products(&self) -> BTreeMap<(usize, usize), Vec<(usize, F::Elem)>> {
        // group classes by subset, preserving global order
        let mut by_subset: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.classes.iter().enumerate() {
            by_subset.entry(c.subset.0).or_default().push(i);
        }
        let groups: Vec<(u64, &Vec<usize>)> =
            by_subset.iter().map(|(k, v)| (*k, v)).collect();
        let mut pairs = Vec::new();
        for (si, gi) in &groups {
            for (sj, gj) in &groups {
                if si & sj == 0 {
                    pairs.push((*gi, *gj));
                }
            }
        }
        let blocks: Vec<Vec<((usize, usize), Vec<(usize, F::Elem)>)>> = pairs
            .par_iter()
            .map(|(gi, gj)| {
                let mut out = Vec::new();
                for &a in gi.iter() {
                    for &b in gj.iter() {
                        let p = self.star_product(a, b);
                        if !p.is_empty() {
                            out.push(((a, b), p));
                        }
                    }
                }
                out
            })
            .collect();
        blocks.into_iter().flatten().collect()
    }
}

// ---------------------------------------------------------------------------
// Alexander duality
// ---------------------------------------------------------------------------

/// Outcome of the duality sweep: for every I ⊆ [m] and every degree i, the
/// rank of H̃^i(K_I) must equal that of H̃_{dim K − i − 1}(K_{[m]∖I}), and the
/// excision map D(φ) = [K]⊓φ between them must be an isomorphism.
pub struct DualityReport {
    pub has_fundamental_class: bool,
    /// (I, i) pairs where the rank equality or the map rank fails
    pub failures: Vec<(VertexSet, isize)>,
    pub holds: bool,
}

struct SubsetDuality<F: Field> {
    coh: BTreeMap<isize, CohomologyBasis<F>>,
    hom: BTreeMap<isize, HomologyBasis<F>>,
    int_summary: Option<HomologySummary>,
}

fn duality_failures<F: Field>(
    f: F,
    k: &SimplicialComplex,
    fc_terms: &[(VertexSet, F::Elem)],
    with_int: bool,
) -> Vec<(VertexSet, isize)> {
    let m = k.ground_size();
    let dim = k.dim();
    let order = VertexSet::full(m).subsets_by_size();
    let data: HashMap<u64, SubsetDuality<F>> = order
        .par_iter()
        .map(|j| {
            let sub = k.full_subcomplex(*j);
            let cc = ChainComplex::new(&sub);
            (
                j.0,
                SubsetDuality {
                    coh: reduced_cohomology_basis(f, &cc),
                    hom: reduced_homology_basis(f, &cc),
                    int_summary: with_int.then(|| reduced_homology_of_chain(&cc, Coeff::Integers)),
                },
            )
        })
        .collect();
    let full = VertexSet::full(m);
    let mut failures = Vec::new();
    for i_set in &order {
        let comp = full.difference(*i_set);
        let (src, tgt) = (&data[&i_set.0], &data[&comp.0]);
        for i in -1..=dim {
            let t = dim - i - 1;
            let dim_coh = src.coh.get(&i).map_or(0, |b| b.dim());
            let dim_hom = tgt.hom.get(&t).map_or(0, |b| b.dim());
            if dim_coh != dim_hom {
                failures.push((*i_set, i));
                continue;
            }
            if with_int {
                // torsion of H̃^i(K_I;ℤ) is that of H̃_{i−1}(K_I;ℤ)
                let src_tor = src.int_summary.as_ref().unwrap().torsion.get(&(i - 1));
                let tgt_tor = tgt.int_summary.as_ref().unwrap().torsion.get(&t);
                if src_tor.unwrap_or(&Vec::new()) != tgt_tor.unwrap_or(&Vec::new()) {
                    failures.push((*i_set, i));
                    continue;
                }
            }
            if dim_coh == 0 {
                continue;
            }
            // matrix of D(φ) = [K]⊓φ in the chosen bases
            let coh = &src.coh[&i];
            let hom = &tgt.hom[&t];
            let pos: HashMap<VertexSet, usize> = hom
                .simplices
                .iter()
                .enumerate()
                .map(|(idx, s)| (*s, idx))
                .collect();
            let mut acc = RankAccumulator::new(f);
            let mut rank = 0usize;
            for rep in &coh.representatives {
                let phi: Vec<(VertexSet, F::Elem)> = coh
                    .simplices
                    .iter()
                    .zip(rep)
                    .filter(|(_, c)| !f.is_zero(c))
                    .map(|(s, c)| (*s, c.clone()))
                    .collect();
                let image = excision_product(f, *i_set, fc_terms, &phi);
                let mut dense = vec![f.zero(); hom.simplices.len()];
                for (s, c) in image {
                    dense[pos[&s]] = c;
                }
                let coords = hom.coordinates(f, &dense);
                let sparse: Vec<(usize, F::Elem)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !f.is_zero(c))
                    .collect();
                if acc.add(sparse) {
                    rank += 1;
                }
            }
            if rank != dim_coh {
                failures.push((*i_set, i));
            }
        }
    }
    failures
}

pub fn alexander_duality_check(k: &SimplicialComplex, coeff: Coeff) -> DualityReport {
    let Ok(fc) = fundamental_class(k, coeff) else {
        return DualityReport {
            has_fundamental_class: false,
            failures: Vec::new(),
            holds: false,
        };
    };
    let failures = match coeff {
        Coeff::Integers => duality_failures(Rationals, k, &fc.terms(Rationals), true),
        Coeff::Rationals => duality_failures(Rationals, k, &fc.terms(Rationals), false),
        Coeff::PrimeField(p) => {
            let f = PrimeField::new(p).expect("validated prime");
            duality_failures(f, k, &fc.terms(f), false)
        }
    };
    DualityReport {
        has_fundamental_class: true,
        holds: failures.is_empty(),
        failures,
    }
}

// ---------------------------------------------------------------------------
// Gorenstein* (Stanley criterion) and cross-validation
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinFailure {
    GhostVertices(VertexSet),
    IsCone(usize),
    /// a face whose link does not have the reduced homology of a sphere
    LinkNotSphere(VertexSet),
}

pub struct GorensteinReport {
    pub verdict: bool,
    pub failure: Option<GorensteinFailure>,
}

/// Stanley's criterion for |K| being a generalized homology sphere over the
/// coefficients: every vertex of the ground set is used, K is not a cone,
/// and for every face σ (including ∅) the link of σ has the reduced
/// homology of a sphere of its own dimension.
///
/// Requiring no ghost vertices keeps this path consistent with the duality
/// sweep, which ranges over subsets of the full ground set.
pub fn is_gorenstein_star(k: &SimplicialComplex, coeff: Coeff) -> GorensteinReport {
    let ghosts = k.ghost_vertices();
    if !ghosts.is_empty() || k.dim() < 0 {
        return GorensteinReport {
            verdict: false,
            failure: Some(GorensteinFailure::GhostVertices(ghosts)),
        };
    }
    if k.is_cone() {
        let apex = k
            .facets()
            .iter()
            .fold(k.vertices(), |acc, f| acc.intersection(*f))
            .min_vertex()
            .expect("cone has a common vertex");
        return GorensteinReport {
            verdict: false,
            failure: Some(GorensteinFailure::IsCone(apex)),
        };
    }
    for level in k.faces_by_card() {
        for sigma in level {
            let link = k.link(sigma).expect("faces of K have links");
            let h = reduced_homology(&link, coeff);
            if !h.is_sphere(link.dim()) {
                return GorensteinReport {
                    verdict: false,
                    failure: Some(GorensteinFailure::LinkNotSphere(sigma)),
                };
            }
        }
    }
    GorensteinReport {
        verdict: true,
        failure: None,
    }
}

/// Runs the Stanley criterion and the Alexander-duality sweep on the same
/// coefficients and insists they agree; disagreement is an implementation
/// bug, not a property of the input.
pub fn cross_validate_gorenstein(k: &SimplicialComplex, coeff: Coeff) -> Result<bool> {
    let stanley = is_gorenstein_star(k, coeff).verdict;
    let duality = alexander_duality_check(k, coeff).holds;
    if stanley != duality {
        return Err(Error::Internal(format!(
            "Gorenstein* verdicts disagree: Stanley {stanley}, duality {duality}"
        )));
    }
    Ok(stanley)
}

// ---------------------------------------------------------------------------
// Poincaré pairing
// ---------------------------------------------------------------------------

/// Checks that the reduced ring is a Poincaré duality algebra: the top total
/// degree has rank one, and for every complementary pair of total degrees
/// the product pairing matrix is square and invertible.
pub fn poincare_pairing_check<F: Field>(ring: &HochsterRing<F>) -> Result<bool> {
    let f = ring.field;
    let Some(top) = (0..ring.dim()).map(|i| ring.total_degree(i)).max() else {
        return Err(Error::NoTopDegree);
    };
    let top_classes: Vec<usize> = (0..ring.dim())
        .filter(|&i| ring.total_degree(i) == top)
        .collect();
    if top_classes.len() != 1 {
        return Err(Error::NotPoincareCandidate(format!(
            "top degree {top} has rank {}",
            top_classes.len()
        )));
    }
    let top_class = top_classes[0];
    for a in 1..=top / 2 {
        let b = top - a;
        let left: Vec<usize> = (0..ring.dim())
            .filter(|&i| ring.total_degree(i) == a)
            .collect();
        let right: Vec<usize> = (0..ring.dim())
            .filter(|&i| ring.total_degree(i) == b)
            .collect();
        if left.len() != right.len() {
            return Ok(false);
        }
        if left.is_empty() {
            continue;
        }
        let mut acc = RankAccumulator::new(f);
        let mut rank = 0usize;
        for &u in &left {
            let mut col: Vec<(usize, F::Elem)> = Vec::new();
            for (jcol, &v) in right.iter().enumerate() {
                let prod = ring.star_product(u, v);
                if let Some((_, c)) = prod.into_iter().find(|(idx, _)| *idx == top_class) {
                    col.push((jcol, c));
                }
            }
            if acc.add(col) {
                rank += 1;
            }
        }
        if rank != left.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Rigidity invariants for 2-spheres
// ---------------------------------------------------------------------------

/// For a simplicial 2-sphere: the triple (C(m,2) − (3m−6), number of missing
/// edges, rank H³(𝒵_K)), asserted equal.
pub fn rank_h3_invariant(k: &SimplicialComplex) -> Result<(usize, usize, usize)> {
    crate::decompose::check_2_sphere(k)?;
    let m = k.vertex_count();
    let formula = m * (m - 1) / 2 - (3 * m - 6);
    let missing = k
        .missing_faces()
        .iter()
        .filter(|s| s.len() == 2)
        .count();
    let betti = bigraded_betti(k, Coeff::Rationals).betti();
    let computed = betti.get(3).copied().unwrap_or(0);
    if formula != missing || missing != computed {
        return Err(Error::Internal(format!(
            "rank H³ triple disagrees: formula {formula}, missing edges {missing}, computed {computed}"
        )));
    }
    Ok((formula, missing, computed))
}

pub struct LbcReport {
    pub edges: usize,
    pub bound: i64,
    pub holds: bool,
}

/// Lower Bound Conjecture check: a closed pseudomanifold of dimension n−1 on
/// m vertices has at least mn − C(n+1,2) edges.
pub fn lbc_check(k: &SimplicialComplex) -> Result<LbcReport> {
    if k.dim() < 1 || !k.is_pure() {
        return Err(Error::NotFound(
            "LBC check requires a pure complex of dimension >= 1".into(),
        ));
    }
    // closed pseudomanifold: every ridge in exactly two facets, facet graph
    // connected
    let faces = k.faces_by_card();
    let facet_card = faces.len() - 1;
    for ridge in &faces[facet_card - 1] {
        let count = k
            .facets()
            .iter()
            .filter(|fct| ridge.is_subset_of(**fct))
            .count();
        if count != 2 {
            return Err(Error::NotFound(format!(
                "not a closed pseudomanifold: ridge {ridge} lies in {count} facets"
            )));
        }
    }
    let facets = k.facets();
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for (j, other) in facets.iter().enumerate() {
            if !seen[j] && facets[i].intersection(*other).len() == facet_card - 1 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if !seen.iter().all(|s| *s) {
        return Err(Error::NotFound(
            "not a closed pseudomanifold: facet graph disconnected".into(),
        ));
    }
    let m = k.vertex_count() as i64;
    let n = (k.dim() + 1) as i64;
    let bound = m * n - n * (n + 1) / 2;
    let edges = k.edge_count();
    Ok(LbcReport {
        edges,
        bound,
        holds: edges as i64 >= bound,
    })
}

// ---------------------------------------------------------------------------
// Generation by degree one
// ---------------------------------------------------------------------------

/// Result of the ℋ¹-generation check. `failures` lists (target subset L,
/// target ℋ-level i) components not spanned by products; for the largest
/// failing ℋ² target, `partition_sweep` records how many divisions
/// I ⊔ J = L have both H̃⁰(K_I) and H̃⁰(K_J) nonzero (zero everywhere is the
/// paper-style witness that no product can reach the target).
pub struct GenerationReport {
    pub generated: bool,
    pub failures: Vec<(VertexSet, isize)>,
    pub partition_sweep: Option<(VertexSet, usize, usize)>,
}

pub fn generation_by_degree_one<F: Field>(ring: &HochsterRing<F>) -> GenerationReport {
    let f = ring.field;
    // no ℋ¹ classes at all: nothing to generate from, vacuously true
    if !ring.classes.iter().any(|c| c.degree == 0) {
        return GenerationReport {
            generated: true,
            failures: Vec::new(),
            partition_sweep: None,
        };
    }
    let mut failures = Vec::new();
    // (target reduced degree d, factor degrees (d1, d2)); d = d1 + d2 + 1
    for (target_d, d1, d2) in [(1isize, 0isize, 0isize), (2, 0, 1)] {
        for c in &ring.classes {
            if c.degree != target_d || c.index != 0 {
                continue;
            }
            let l = c.subset;
            let dim_target = ring.subsets[&l.0].dim_at(target_d);
            let mut acc = RankAccumulator::new(f);
            let mut rank = 0usize;
            // enumerate submasks I of L; the complement J = L ∖ I
            let mut s = l.0;
            loop {
                let i_set = VertexSet(s);
                let j_set = l.difference(i_set);
                if !i_set.is_empty() && !j_set.is_empty() {
                    let di = ring
                        .subsets
                        .get(&i_set.0)
                        .map_or(0, |d| d.dim_at(d1));
                    let dj = ring
                        .subsets
                        .get(&j_set.0)
                        .map_or(0, |d| d.dim_at(d2));
                    for iu in 0..di {
                        let u = ring.class_pos[&(i_set.0, d1, iu)];
                        for iv in 0..dj {
                            let v = ring.class_pos[&(j_set.0, d2, iv)];
                            let prod = ring.star_product(u, v);
                            let col: Vec<(usize, F::Elem)> = prod
                                .into_iter()
                                .map(|(idx, cf)| (ring.classes[idx].index, cf))
                                .collect();
                            if !col.is_empty() && acc.add(col) {
                                rank += 1;
                            }
                        }
                    }
                }
                if rank == dim_target || s == 0 {
                    break;
                }
                s = (s - 1) & l.0;
            }
            if rank != dim_target {
                failures.push((l, target_d + 1));
            }
        }
    }
    // witness sweep for the largest failing ℋ² component
    let partition_sweep = failures
        .iter()
        .filter(|(_, lvl)| *lvl == 2)
        .max_by_key(|(l, _)| l.len())
        .map(|(l, _)| {
            let mut total = 0usize;
            let mut both_nonzero = 0usize;
            let mut s = l.0;
            loop {
                let i_set = VertexSet(s);
                let j_set = l.difference(i_set);
                total += 1;
                let di = ring.subsets.get(&i_set.0).map_or(0, |d| d.dim_at(0));
                let dj = ring.subsets.get(&j_set.0).map_or(0, |d| d.dim_at(0));
                if di > 0 && dj > 0 {
                    both_nonzero += 1;
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & l.0;
            }
            (*l, total, both_nonzero)
        });
    GenerationReport {
        generated: failures.is_empty(),
        failures,
        partition_sweep,
    }
}

// ---------------------------------------------------------------------------
// JSON report
// ---------------------------------------------------------------------------

/// The structured report consumed by the batch interface: Betti/torsion
/// tables, the nonzero bigraded rows, and the standard verdicts.
pub fn report_json(k: &SimplicialComplex, coeff: Coeff) -> serde_json::Value {
    use serde_json::{json, Map, Value};
    let betti = bigraded_betti(k, coeff);
    let torsion: Map<String, Value> = betti
        .torsion_by_degree()
        .into_iter()
        .map(|(p, factors)| {
            (
                p.to_string(),
                Value::Array(factors.iter().map(|d| json!(d.to_string())).collect()),
            )
        })
        .collect();
    let bigraded: Vec<Value> = betti
        .rows()
        .into_iter()
        .map(|(j, d, r)| json!({"J": j.to_vec(), "d": d, "rank": r}))
        .collect();
    let gorenstein = is_gorenstein_star(k, coeff).verdict;
    let pairing = hochster_ring_over_z(k)
        .and_then(|ring| poincare_pairing_check(&ring))
        .unwrap_or(false);
    let lbc = lbc_check(k).map(|r| Value::Bool(r.holds)).unwrap_or(Value::Null);
    json!({
        "m": k.ground_size(),
        "dim": k.dim(),
        "betti": betti.betti(),
        "torsion": torsion,
        "bigraded": bigraded,
        "checks": {
            "gorenstein": gorenstein,
            "flag": k.is_flag(),
            "poincare_pairing": pairing,
            "lbc": lbc,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{corpus, torus7, zoo_complex};

    fn vs(v: &[usize], m: usize) -> VertexSet {
        VertexSet::from_slice(v, m).unwrap()
    }

    #[test]
    fn square_bigraded_rows() {
        let sq = zoo_complex("polygon(4)").unwrap();
        let b = bigraded_betti(&sq, Coeff::Integers);
        // nonzero rows besides the empty-set unit: the two diagonals at
        // reduced degree 0 and the full set at degree 1
        let rows = b.rows();
        assert_eq!(
            rows,
            vec![
                (VertexSet::EMPTY, -1, 1),
                (vs(&[1, 3], 4), 0, 1),
                (vs(&[2, 4], 4), 0, 1),
                (VertexSet::full(4), 1, 1),
            ]
        );
        assert_eq!(b.betti(), vec![1, 0, 0, 2, 0, 0, 1]);
        assert!(b.torsion_by_degree().is_empty());
    }

    #[test]
    fn pentagon_betti_profile() {
        let b = bigraded_betti(&zoo_complex("polygon(5)").unwrap(), Coeff::Integers);
        assert_eq!(b.betti(), vec![1, 0, 0, 5, 5, 0, 0, 1]);
    }

    #[test]
    fn octahedron_poincare_polynomial() {
        // 𝒵_{O6} = S³×S³×S³: Poincaré polynomial (1+t³)³
        let b = bigraded_betti(&zoo_complex("O6").unwrap(), Coeff::Rationals);
        assert_eq!(b.betti(), vec![1, 0, 0, 3, 0, 0, 3, 0, 0, 1]);
    }

    #[test]
    fn indexings_are_consistent() {
        let b = bigraded_betti(&zoo_complex("O6").unwrap(), Coeff::Integers);
        // Σ_j tor_rank(i, j) over bidegrees with j − i − 1 = d matches rows
        let betti = b.betti();
        for (p, &rank) in betti.iter().enumerate() {
            let mut total = 0;
            for j in 0..=b.m {
                // p = j + d + 1 = j + (j − i − 1) + 1 = 2j − i
                if 2 * j >= p {
                    total += b.tor_rank(2 * j - p, j);
                }
            }
            assert_eq!(total, rank, "total degree {p}");
        }
        // ℋ grading: ℋ¹ counts the H̃⁰ classes (3 missing edges)
        assert_eq!(b.h_rank(1), 3);
    }

    #[test]
    fn square_ring_products() {
        let q = Rationals;
        let ring = hochster_ring(q, &zoo_complex("polygon(4)").unwrap());
        assert_eq!(ring.dim(), 3);
        let u = ring.class_position(vs(&[1, 3], 4), 0, 0).unwrap();
        let v = ring.class_position(vs(&[2, 4], 4), 0, 0).unwrap();
        let top = ring.class_position(VertexSet::full(4), 1, 0).unwrap();
        assert_eq!(ring.total_degree(u), 3);
        assert_eq!(ring.total_degree(top), 6);
        let uv = ring.star_product(u, v);
        let vu = ring.star_product(v, u);
        assert_eq!(uv.len(), 1);
        assert_eq!(uv[0].0, top);
        assert!(!q.is_zero(&uv[0].1));
        // graded commutativity with odd degrees: u*v = −v*u
        assert_eq!(vu.len(), 1);
        assert_eq!(uv[0].1, q.neg(&vu[0].1));
        // overlapping subsets annihilate
        assert!(ring.star_product(u, u).is_empty());
        assert!(ring.star_product(top, u).is_empty());
    }

    #[test]
    fn all_products_matches_pointwise() {
        let q = Rationals;
        let ring = hochster_ring(q, &zoo_complex("polygon(5)").unwrap());
        let all = ring.all_products();
        for a in 0..ring.dim() {
            for b in 0..ring.dim() {
                let p = ring.star_product(a, b);
                match all.get(&(a, b)) {
                    Some(stored) => assert_eq!(*stored, p),
                    None => assert!(p.is_empty()),
                }
            }
        }
    }

    #[test]
    fn torsion_input_rejected_over_z() {
        let rp2 = SimplicialComplex::from_facet_slices(
            6,
            &[
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 5],
                &[1, 4, 6],
                &[1, 5, 6],
                &[2, 3, 6],
                &[2, 4, 5],
                &[2, 5, 6],
                &[3, 4, 5],
                &[3, 4, 6],
            ],
        )
        .unwrap();
        assert!(matches!(
            hochster_ring_over_z(&rp2),
            Err(Error::TorsionUnsupported(_))
        ));
        // and the ℤ Betti report carries the torsion
        let b = bigraded_betti(&rp2, Coeff::Integers);
        assert!(!b.torsion_by_degree().is_empty());
    }

    #[test]
    fn duality_pass_and_fail() {
        let t4 = zoo_complex("T4").unwrap();
        let r = alexander_duality_check(&t4, Coeff::Integers);
        assert!(r.holds && r.has_fundamental_class);

        let o6 = zoo_complex("O6").unwrap();
        assert!(alexander_duality_check(&o6, Coeff::Rationals).holds);
        assert!(alexander_duality_check(&o6, Coeff::PrimeField(2)).holds);

        let cone = zoo_complex("boundary_simplex(2)").unwrap().cone().unwrap();
        let r = alexander_duality_check(&cone, Coeff::Integers);
        assert!(!r.holds && !r.has_fundamental_class);

        let r = alexander_duality_check(&torus7(), Coeff::Integers);
        assert!(r.has_fundamental_class && !r.holds);
    }

    #[test]
    fn gorenstein_star_examples() {
        for n in 1..=4 {
            let k = zoo_complex(&format!("boundary_simplex({n})")).unwrap();
            assert!(is_gorenstein_star(&k, Coeff::Integers).verdict);
        }
        let cone = zoo_complex("polygon(5)").unwrap().cone().unwrap();
        let r = is_gorenstein_star(&cone, Coeff::Integers);
        assert!(!r.verdict);
        assert!(matches!(r.failure, Some(GorensteinFailure::IsCone(1))));

        let r = is_gorenstein_star(&zoo_complex("flag9").unwrap(), Coeff::Integers);
        assert!(!r.verdict);
        assert!(matches!(
            r.failure,
            Some(GorensteinFailure::LinkNotSphere(s)) if s.is_empty()
        ));
    }

    #[test]
    fn cross_validation_sample() {
        assert!(cross_validate_gorenstein(&zoo_complex("O6").unwrap(), Coeff::Integers).unwrap());
        assert!(
            !cross_validate_gorenstein(&zoo_complex("flag9").unwrap(), Coeff::Integers).unwrap()
        );
        assert!(!cross_validate_gorenstein(&torus7(), Coeff::Integers).unwrap());
        assert!(cross_validate_gorenstein(
            &zoo_complex("boundary_simplex(1)").unwrap(),
            Coeff::Integers
        )
        .unwrap());
        let cone = zoo_complex("polygon(4)").unwrap().cone().unwrap();
        assert!(!cross_validate_gorenstein(&cone, Coeff::Integers).unwrap());
    }

    #[test]
    fn pairing_examples() {
        let q = Rationals;
        let sq = hochster_ring(q, &zoo_complex("polygon(4)").unwrap());
        assert!(poincare_pairing_check(&sq).unwrap());
        let tri = hochster_ring(q, &zoo_complex("boundary_simplex(2)").unwrap());
        assert!(poincare_pairing_check(&tri).unwrap());
        let f9 = hochster_ring(q, &zoo_complex("flag9").unwrap());
        assert!(!poincare_pairing_check(&f9).unwrap_or(false));
    }

    #[test]
    fn rank_h3_examples() {
        assert_eq!(
            rank_h3_invariant(&zoo_complex("O6").unwrap()).unwrap(),
            (3, 3, 3)
        );
        assert_eq!(
            rank_h3_invariant(&zoo_complex("T4").unwrap()).unwrap(),
            (0, 0, 0)
        );
    }

    #[test]
    fn lbc_examples() {
        let r = lbc_check(&zoo_complex("O6").unwrap()).unwrap();
        assert!(r.holds && r.edges == 12 && r.bound == 12);
        let r = lbc_check(&zoo_complex("boundary_simplex(4)").unwrap()).unwrap();
        assert!(r.holds && r.edges == 10 && r.bound == 10);
        assert!(lbc_check(&SimplicialComplex::from_facet_slices(3, &[&[1, 2], &[2, 3]]).unwrap())
            .is_err());
    }

    #[test]
    fn generation_examples() {
        let q = Rationals;
        let o6 = hochster_ring(q, &zoo_complex("O6").unwrap());
        assert!(generation_by_degree_one(&o6).generated);
        // ∂Δ³: no reduced classes below the top, vacuously generated
        let t4 = hochster_ring(q, &zoo_complex("T4").unwrap());
        assert!(generation_by_degree_one(&t4).generated);
        let b7 = hochster_ring(q, &zoo_complex("bipyramid(7)").unwrap());
        assert!(generation_by_degree_one(&b7).generated);
        // the 9-vertex flag counterexample: every division of [9] has a
        // connected side
        let f9 = hochster_ring(q, &zoo_complex("flag9").unwrap());
        let r = generation_by_degree_one(&f9);
        assert!(!r.generated);
        let (l, total, both) = r.partition_sweep.unwrap();
        assert_eq!(l, VertexSet::full(9));
        assert_eq!(total, 512);
        assert_eq!(both, 0);
    }

    #[test]
    fn graded_commutativity_small_corpus() {
        let q = Rationals;
        for (name, k) in corpus() {
            if k.ground_size() > 8 {
                continue;
            }
            let ring = hochster_ring(q, &k);
            for a in 0..ring.dim() {
                for b in 0..ring.dim() {
                    let ab = ring.star_product(a, b);
                    let ba = ring.star_product(b, a);
                    let sign = ring.total_degree(a) * ring.total_degree(b);
                    let expect: Vec<(usize, _)> = ba
                        .into_iter()
                        .map(|(i, c)| (i, if sign % 2 == 0 { c } else { q.neg(&c) }))
                        .collect();
                    assert_eq!(ab, expect, "{name}: classes {a},{b}");
                }
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let v = report_json(&zoo_complex("polygon(4)").unwrap(), Coeff::Integers);
        assert_eq!(v["m"], 4);
        assert_eq!(v["dim"], 1);
        assert_eq!(v["betti"][3], 2);
        assert_eq!(v["checks"]["gorenstein"], true);
        assert_eq!(v["checks"]["flag"], true);
        assert_eq!(v["checks"]["poincare_pairing"], true);
        assert_eq!(v["bigraded"][1]["J"], serde_json::json!([1, 3]));
    }
}
