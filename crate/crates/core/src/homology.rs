//! Reduced simplicial (co)homology with explicit bases, plus the
//! chain-level union and excision products.
//!
//! Degree −1 is handled uniformly through the augmentation `∂₀: C₀ → C₋₁ =
//! k·∅`, so the empty complex `{∅}` has `H̃₋₁ = k` and everything downstream
//! (Hochster classes on ghost-vertex subsets, Stanley's criterion at the
//! facet links) needs no special casing.
//!
//! Orientation convention: every simplex is stored with increasing vertex
//! order and `∂(i₀<…<i_p) = Σ_k (−1)^k (… î_k …)`; all other signs derive
//! from this order.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{
    primitive_integer_vector, quotient_coordinates, smith_normal_form, Field, FieldMatrix,
    IntMatrix, QuotientSpace, Rationals,
};
use crate::vertex_set::VertexSet;
use num_bigint::BigInt;
use std::collections::{BTreeMap, HashMap};

/// Coefficient choices exposed by the batch interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coeff {
    Integers,
    Rationals,
    PrimeField(u64),
}

/// The augmented simplicial chain complex of a complex, with per-cardinality
/// simplex bases (`bases[c]` = the c-element faces in lexicographic order;
/// `bases[0] = [∅]`) and sparse boundary operators.
pub struct ChainComplex {
    pub bases: Vec<Vec<VertexSet>>,
    /// `boundaries[c][j]` = ∂ of the j-th c-element face, as (index into
    /// `bases[c-1]`, sign) pairs; `boundaries[0]` is empty.
    pub boundaries: Vec<Vec<Vec<(usize, i8)>>>,
    /// position lookup per cardinality
    index: Vec<HashMap<VertexSet, usize>>,
}

impl ChainComplex {
    pub fn new(k: &SimplicialComplex) -> ChainComplex {
        let bases = k.faces_by_card();
        let index: Vec<HashMap<VertexSet, usize>> = bases
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (*s, i))
                    .collect()
            })
            .collect();
        let mut boundaries: Vec<Vec<Vec<(usize, i8)>>> = vec![Vec::new()];
        for c in 1..bases.len() {
            let mut level = Vec::with_capacity(bases[c].len());
            for s in &bases[c] {
                let mut terms = Vec::with_capacity(c);
                for (pos, v) in s.iter().enumerate() {
                    let mut t = *s;
                    t.remove(v);
                    let row = index[c - 1][&t];
                    let sign = if pos % 2 == 0 { 1i8 } else { -1i8 };
                    terms.push((row, sign));
                }
                level.push(terms);
            }
            boundaries.push(level);
        }
        let cc = ChainComplex {
            bases,
            boundaries,
            index,
        };
        cc.assert_d_squared_zero();
        cc
    }

    /// ∂∘∂ = 0, checked exactly on every consecutive pair.
    fn assert_d_squared_zero(&self) {
        for c in 2..self.bases.len() {
            for terms in &self.boundaries[c] {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(mid, s1) in terms {
                    for &(row, s2) in &self.boundaries[c - 1][mid] {
                        *acc.entry(row).or_insert(0) += s1 as i64 * s2 as i64;
                    }
                }
                assert!(
                    acc.values().all(|v| *v == 0),
                    "boundary squared is nonzero"
                );
            }
        }
    }

    pub fn top_card(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn position(&self, card: usize, s: VertexSet) -> Option<usize> {
        self.index.get(card).and_then(|m| m.get(&s).copied())
    }

    /// Boundary matrix ∂_c : C_c → C_{c-1} over the integers.
    pub fn boundary_int(&self, c: usize) -> IntMatrix {
        let rows = if c >= 1 && c < self.bases.len() {
            self.bases[c - 1].len()
        } else {
            0
        };
        let cols = self.bases.get(c).map_or(0, |b| b.len());
        let mut m = IntMatrix::zero(rows, cols);
        if c >= 1 && c < self.bases.len() {
            for (j, terms) in self.boundaries[c].iter().enumerate() {
                for &(i, s) in terms {
                    m.set(i, j, BigInt::from(s));
                }
            }
        }
        m
    }

    /// Boundary matrix over a field.
    pub fn boundary_field<F: Field>(&self, f: F, c: usize) -> FieldMatrix<F> {
        let rows = if c >= 1 && c < self.bases.len() {
            self.bases[c - 1].len()
        } else {
            0
        };
        let cols = self.bases.get(c).map_or(0, |b| b.len());
        let mut m = FieldMatrix::zero(f, rows, cols);
        if c >= 1 && c < self.bases.len() {
            for (j, terms) in self.boundaries[c].iter().enumerate() {
                for &(i, s) in terms {
                    m.set(i, j, f.from_i64(s as i64));
                }
            }
        }
        m
    }

    /// Coboundary matrix δ at reduced degree d: C^d → C^{d+1}, the transpose
    /// of ∂_{d+2} (cardinalities d+1 → d+2).
    pub fn coboundary_field<F: Field>(&self, f: F, d: isize) -> FieldMatrix<F> {
        if d < -1 {
            // nothing below degree -1: a map from the zero space
            return FieldMatrix::zero(f, self.bases[0].len(), 0);
        }
        let c = (d + 2) as usize; // source of the boundary we transpose
        let rows = self.bases.get(c).map_or(0, |b| b.len());
        let cols = self.bases.get(c - 1).map_or(0, |b| b.len());
        let mut m = FieldMatrix::zero(f, rows, cols);
        if c < self.bases.len() {
            for (j, terms) in self.boundaries[c].iter().enumerate() {
                for &(i, s) in terms {
                    m.set(j, i, f.from_i64(s as i64));
                }
            }
        }
        m
    }
}

/// Per-degree free ranks and (for ℤ) torsion invariant factors of reduced
/// homology. Degrees run from −1 to the dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologySummary {
    pub ranks: BTreeMap<isize, usize>,
    pub torsion: BTreeMap<isize, Vec<BigInt>>,
}

impl HomologySummary {
    pub fn rank(&self, d: isize) -> usize {
        self.ranks.get(&d).copied().unwrap_or(0)
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.values().any(|t| !t.is_empty())
    }

    /// Does this match the reduced homology of a sphere S^n (n ≥ −1)?
    pub fn is_sphere(&self, n: isize) -> bool {
        !self.has_torsion()
            && self.ranks.iter().all(|(&d, &r)| r == 0 || (d == n && r == 1))
            && self.rank(n) == 1
    }
}

/// Reduced homology of K over the requested coefficients.
pub fn reduced_homology(k: &SimplicialComplex, coeff: Coeff) -> HomologySummary {
    let cc = ChainComplex::new(k);
    reduced_homology_of_chain(&cc, coeff)
}

pub fn reduced_homology_of_chain(cc: &ChainComplex, coeff: Coeff) -> HomologySummary {
    let top = cc.top_card();
    let mut summary = HomologySummary::default();
    // rank of ∂_c for c = 1..=top (∂ out of degree -1 and into degree top
    // are zero)
    let mut boundary_rank = vec![0usize; top + 2];
    let mut torsion: Vec<Vec<BigInt>> = vec![Vec::new(); top + 2];
    for c in 1..=top {
        match coeff {
            Coeff::Integers => {
                let sf = smith_normal_form(&cc.boundary_int(c));
                boundary_rank[c] = sf.rank;
                torsion[c] = sf.nontrivial_factors();
            }
            Coeff::Rationals => {
                boundary_rank[c] = cc.boundary_field(Rationals, c).rank(Rationals);
            }
            Coeff::PrimeField(p) => {
                let f = crate::linalg::PrimeField::new(p).expect("validated prime");
                boundary_rank[c] = cc.boundary_field(f, c).rank(f);
            }
        }
    }
    for d in -1..=(top as isize - 1) {
        let c = (d + 1) as usize;
        let dim_c = cc.bases[c].len();
        let rank = dim_c - boundary_rank[c] - boundary_rank[c + 1];
        if rank > 0 {
            summary.ranks.insert(d, rank);
        }
        // torsion of H_d comes from the invariant factors of ∂ entering
        // degree d (cardinality d+2)
        if !torsion[c + 1].is_empty() {
            summary.torsion.insert(d, torsion[c + 1].clone());
        }
    }
    summary
}

/// Reduced cohomology groups over ℤ via universal coefficients: free part as
/// in homology, torsion shifted up one degree.
pub fn reduced_cohomology_int(k: &SimplicialComplex) -> HomologySummary {
    let h = reduced_homology(k, Coeff::Integers);
    let mut out = HomologySummary {
        ranks: h.ranks.clone(),
        torsion: BTreeMap::new(),
    };
    for (d, t) in &h.torsion {
        out.torsion.insert(d + 1, t.clone());
    }
    out
}

/// A chosen basis of reduced cohomology in one degree: representative
/// cocycles (as coefficient vectors over the lexicographically ordered
/// simplex basis) and the coordinate functional expressing any cocycle in
/// that basis modulo coboundaries.
pub struct CohomologyBasis<F: Field> {
    pub degree: isize,
    pub simplices: Vec<VertexSet>,
    pub representatives: Vec<Vec<F::Elem>>,
    quotient: QuotientSpace<F>,
}

impl<F: Field> CohomologyBasis<F> {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of a cocycle (given over `simplices`) in this basis.
    pub fn coordinates(&self, f: F, cocycle: &[F::Elem]) -> Vec<F::Elem> {
        self.quotient.coordinates(f, cocycle)
    }
}

/// Cohomology bases in every degree with nonzero rank.
pub fn reduced_cohomology_basis<F: Field>(
    f: F,
    cc: &ChainComplex,
) -> BTreeMap<isize, CohomologyBasis<F>> {
    let mut out = BTreeMap::new();
    let top = cc.top_card() as isize - 1;
    for d in -1..=top {
        let n = cc.bases[(d + 1) as usize].len();
        let delta = cc.coboundary_field(f, d);
        let cocycles = delta.kernel_basis(f);
        if cocycles.is_empty() {
            continue;
        }
        // coboundaries: image of δ_{d-1} = columns of it
        let delta_prev = cc.coboundary_field(f, d - 1);
        let cobs: Vec<Vec<F::Elem>> = (0..delta_prev.cols)
            .map(|j| delta_prev.column(j))
            .collect();
        let quotient = quotient_coordinates(f, n, &cobs, &cocycles);
        if quotient.dim() == 0 {
            continue;
        }
        let representatives: Vec<Vec<F::Elem>> = quotient
            .rep_indices
            .iter()
            .map(|&i| cocycles[i].clone())
            .collect();
        out.insert(
            d,
            CohomologyBasis {
                degree: d,
                simplices: cc.bases[(d + 1) as usize].clone(),
                representatives,
                quotient,
            },
        );
    }
    out
}

/// A chosen basis of reduced homology in one degree: representative cycles
/// plus coordinates modulo boundaries.
pub struct HomologyBasis<F: Field> {
    pub degree: isize,
    pub simplices: Vec<VertexSet>,
    pub representatives: Vec<Vec<F::Elem>>,
    quotient: QuotientSpace<F>,
}

impl<F: Field> HomologyBasis<F> {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn coordinates(&self, f: F, cycle: &[F::Elem]) -> Vec<F::Elem> {
        self.quotient.coordinates(f, cycle)
    }
}

pub fn reduced_homology_basis<F: Field>(
    f: F,
    cc: &ChainComplex,
) -> BTreeMap<isize, HomologyBasis<F>> {
    let mut out = BTreeMap::new();
    let top = cc.top_card() as isize - 1;
    for d in -1..=top {
        let c = (d + 1) as usize;
        let n = cc.bases[c].len();
        // cycles: kernel of ∂ out of degree d (cardinality c); for d = -1
        // that map is zero, so everything is a cycle
        let cycles: Vec<Vec<F::Elem>> = if c == 0 {
            vec![vec![f.one()]]
        } else {
            cc.boundary_field(f, c).kernel_basis(f)
        };
        if cycles.is_empty() {
            continue;
        }
        let bd = cc.boundary_field(f, c + 1);
        let boundaries: Vec<Vec<F::Elem>> = (0..bd.cols).map(|j| bd.column(j)).collect();
        let quotient = quotient_coordinates(f, n, &boundaries, &cycles);
        if quotient.dim() == 0 {
            continue;
        }
        let representatives = quotient
            .rep_indices
            .iter()
            .map(|&i| cycles[i].clone())
            .collect();
        out.insert(
            d,
            HomologyBasis {
                degree: d,
                simplices: cc.bases[c].clone(),
                representatives,
                quotient,
            },
        );
    }
    out
}

/// A fundamental cycle of a pure pseudomanifold: ±1 per facet, the
/// lexicographically smallest facet oriented +1.
pub struct FundamentalClass {
    pub degree: isize,
    pub facets: Vec<VertexSet>,
    pub coeffs: Vec<BigInt>,
}

impl FundamentalClass {
    /// The cycle as sparse terms over a field.
    pub fn terms<F: Field>(&self, f: F) -> Vec<(VertexSet, F::Elem)> {
        self.facets
            .iter()
            .zip(&self.coeffs)
            .map(|(s, c)| {
                let c64 = i64::try_from(c).expect("fundamental class coefficients are ±1");
                (*s, f.from_i64(c64))
            })
            .collect()
    }
}

/// Computes the fundamental class over the given coefficients (the cycle is
/// integral, so one integral representative serves every coefficient ring;
/// existence is checked over the field — rank-1 top homology).
pub fn fundamental_class(k: &SimplicialComplex, coeff: Coeff) -> Result<FundamentalClass> {
    if !k.is_pure() || k.dim() < 0 {
        return Err(Error::NoFundamentalClass(
            "complex is not pure of nonnegative dimension".into(),
        ));
    }
    let cc = ChainComplex::new(k);
    let top = cc.top_card();
    let d = top as isize - 1;
    // check rank over the requested coefficients
    let h = reduced_homology_of_chain(&cc, coeff);
    if h.rank(d) != 1 {
        return Err(Error::NoFundamentalClass(format!(
            "top homology rank {} != 1",
            h.rank(d)
        )));
    }
    let q = Rationals;
    let kernel = cc.boundary_field(q, top).kernel_basis(q);
    if kernel.len() != 1 {
        return Err(Error::NoFundamentalClass(format!(
            "top cycle space has dimension {}",
            kernel.len()
        )));
    }
    let mut coeffs = primitive_integer_vector(&kernel[0]);
    let one = BigInt::from(1);
    if coeffs.iter().any(|c| c.magnitude() != one.magnitude()) {
        return Err(Error::NoFundamentalClass(
            "top cycle is not a ±1 pseudomanifold orientation".into(),
        ));
    }
    // facets are lexicographically sorted, so index 0 is the tie-break facet
    if coeffs[0] < BigInt::from(0) {
        for c in &mut coeffs {
            *c = -&*c;
        }
    }
    Ok(FundamentalClass {
        degree: d,
        facets: cc.bases[top].clone(),
        coeffs,
    })
}

/// Inversion count between two disjoint sets: the sign `(-1)^theta(σ,τ)`
/// relates the juxtaposition (σ, τ) to increasing order.
fn juxtaposition_sign(sigma: VertexSet, tau: VertexSet) -> i64 {
    if sigma.theta(tau) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Chain-level union product of sparse cochains: on basis simplices,
/// `σ ⊔ τ = ±(σ∪τ)` when the supports are disjoint and σ∪τ is a face of K,
/// zero otherwise; the sign re-expresses the juxtaposed orientation in
/// increasing order.
pub fn union_product<F: Field>(
    f: F,
    k: &SimplicialComplex,
    u: &[(VertexSet, F::Elem)],
    v: &[(VertexSet, F::Elem)],
) -> Vec<(VertexSet, F::Elem)> {
    let mut acc: BTreeMap<VertexSet, F::Elem> = BTreeMap::new();
    for (sigma, a) in u {
        if f.is_zero(a) {
            continue;
        }
        for (tau, b) in v {
            if f.is_zero(b) || !sigma.is_disjoint_from(*tau) {
                continue;
            }
            let joined = sigma.union(*tau);
            if !k.contains(joined) {
                continue;
            }
            let sign = f.from_i64(juxtaposition_sign(*sigma, *tau));
            let term = f.mul(&f.mul(a, b), &sign);
            let entry = acc.entry(joined).or_insert_with(|| f.zero());
            *entry = f.add(entry, &term);
        }
    }
    acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
}

/// Chain-level excision product `c ⊓ φ` for a chain on `K_I` and a cochain
/// on `K_J` (J ⊆ I): on basis elements, `σ ⊓ τ = ε(σ∖τ)` when `τ ⊆ σ` and
/// `σ∖τ ⊆ I∖J`, where ε is the parity of the permutation sending the
/// juxtaposition (τ, σ∖τ) to σ in increasing order.
pub fn excision_product<F: Field>(
    f: F,
    j_set: VertexSet,
    c: &[(VertexSet, F::Elem)],
    phi: &[(VertexSet, F::Elem)],
) -> Vec<(VertexSet, F::Elem)> {
    let mut acc: BTreeMap<VertexSet, F::Elem> = BTreeMap::new();
    for (sigma, a) in c {
        if f.is_zero(a) {
            continue;
        }
        for (tau, b) in phi {
            if f.is_zero(b) || !tau.is_subset_of(*sigma) {
                continue;
            }
            let rest = sigma.difference(*tau);
            if !rest.is_disjoint_from(j_set) {
                continue;
            }
            let eps = f.from_i64(juxtaposition_sign(*tau, rest));
            let term = f.mul(&f.mul(a, b), &eps);
            let entry = acc.entry(rest).or_insert_with(|| f.zero());
            *entry = f.add(entry, &term);
        }
    }
    acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
}

/// Evaluation of a cochain against a chain: Σ φ(σ)·c(σ).
pub fn evaluate<F: Field>(
    f: F,
    phi: &[(VertexSet, F::Elem)],
    c: &[(VertexSet, F::Elem)],
) -> F::Elem {
    let mut acc = f.zero();
    for (s, a) in phi {
        for (t, b) in c {
            if s == t {
                acc = f.add(&acc, &f.mul(a, b));
            }
        }
    }
    acc
}

/// Matrix of the map `H̃_d((K_sub)_I) → H̃_d(K_I)` induced by a subcomplex
/// inclusion, in the chosen homology bases (rows = target, cols = source).
pub fn induced_map_homology<F: Field>(
    f: F,
    k_sub: &SimplicialComplex,
    k: &SimplicialComplex,
    i_set: VertexSet,
    degree: isize,
) -> Result<FieldMatrix<F>> {
    if k_sub.ground_size() != k.ground_size()
        || !k_sub.facets().iter().all(|s| k.contains(*s))
    {
        return Err(Error::NotFound(
            "first argument is not a subcomplex of the second".into(),
        ));
    }
    let sub = k_sub.full_subcomplex(i_set);
    let big = k.full_subcomplex(i_set);
    let cc_sub = ChainComplex::new(&sub);
    let cc_big = ChainComplex::new(&big);
    let hb_sub = reduced_homology_basis(f, &cc_sub);
    let hb_big = reduced_homology_basis(f, &cc_big);
    let (src_dim, tgt_dim) = (
        hb_sub.get(&degree).map_or(0, |b| b.dim()),
        hb_big.get(&degree).map_or(0, |b| b.dim()),
    );
    let mut m = FieldMatrix::zero(f, tgt_dim, src_dim);
    if src_dim == 0 || tgt_dim == 0 {
        return Ok(m);
    }
    let src = &hb_sub[&degree];
    let tgt = &hb_big[&degree];
    for (j, rep) in src.representatives.iter().enumerate() {
        // re-express the cycle over the target simplex basis
        let mut vec = vec![f.zero(); tgt.simplices.len()];
        for (idx, coeff) in rep.iter().enumerate() {
            if f.is_zero(coeff) {
                continue;
            }
            let s = src.simplices[idx];
            let pos = tgt
                .simplices
                .iter()
                .position(|t| *t == s)
                .expect("subcomplex simplex missing from target basis");
            vec[pos] = coeff.clone();
        }
        let coords = tgt.coordinates(f, &vec);
        for (i, c) in coords.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}
