//! Finite graded algebras presented by sparse structure constants, and the
//! ring-level constructions used to verify the structural theorems:
//! gyration, direct products, quotients by homogeneous ideals, connected
//! sums of sphere products, and the composite rings the theorems predict.
//!
//! All rings here are non-unital (reduced cohomology / augmentation ideals).
//! Comparison between rings goes through `RingFingerprint`, a tuple of rank
//! invariants — a sound necessary condition for graded-ring isomorphism,
//! not a complete one.

use crate::error::{Error, Result};
use crate::linalg::{Field, RankAccumulator};
use crate::moment_angle::HochsterRing;
use crate::vertex_set::VertexSet;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

pub type SparseVec<F> = Vec<(usize, <F as Field>::Elem)>;

/// A finite graded algebra over an exact field: a homogeneous basis with
/// total degrees and the nonzero products between basis elements.
#[derive(Clone)]
pub struct GradedAlgebra<F: Field> {
    pub field: F,
    pub degrees: Vec<usize>,
    pub labels: Vec<String>,
    /// (i, j) → i·j as a sparse vector over the basis; absent means zero
    pub products: BTreeMap<(usize, usize), SparseVec<F>>,
}

/// C(n, k) in exact integer arithmetic (0 when k > n).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

impl<F: Field> GradedAlgebra<F> {
    pub fn zero_ring(f: F) -> GradedAlgebra<F> {
        GradedAlgebra {
            field: f,
            degrees: Vec::new(),
            labels: Vec::new(),
            products: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn hilbert(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &d in &self.degrees {
            *h.entry(d).or_insert(0) += 1;
        }
        h
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.degrees.iter().copied().max()
    }

    /// Indices of basis elements in the top degree.
    pub fn top_classes(&self) -> Vec<usize> {
        match self.top_degree() {
            None => Vec::new(),
            Some(t) => (0..self.dim()).filter(|&i| self.degrees[i] == t).collect(),
        }
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        self.products.get(&(i, j)).map_or(&[], |v| v.as_slice())
    }

    /// Bilinear extension of the product to sparse vectors.
    pub fn product_of_vectors(&self, u: &SparseVec<F>, v: &SparseVec<F>) -> SparseVec<F> {
        let f = self.field;
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (i, a) in u {
            for (j, b) in v {
                for (k, c) in self.product(*i, *j) {
                    let term = f.mul(&f.mul(a, b), c);
                    let e = acc.entry(*k).or_insert_with(|| f.zero());
                    *e = f.add(e, &term);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
    }

    fn dense(&self, v: &SparseVec<F>) -> Vec<F::Elem> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, c) in v {
            out[*i] = c.clone();
        }
        out
    }

    /// Structural sanity: products respect the grading, the ring is
    /// graded-commutative, and (for dim ≤ 200) associative on all basis
    /// triples. Used by constructors of small rings and by tests.
    pub fn assert_valid(&self) {
        let f = self.field;
        for (&(i, j), v) in &self.products {
            let d = self.degrees[i] + self.degrees[j];
            assert!(
                v.iter().all(|(k, _)| self.degrees[*k] == d),
                "product ({i},{j}) violates the grading"
            );
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let ij = self.product(i, j).to_vec();
                let sign = self.degrees[i] * self.degrees[j];
                let ji: SparseVec<F> = self
                    .product(j, i)
                    .iter()
                    .map(|(k, c)| {
                        (*k, if sign % 2 == 0 { c.clone() } else { f.neg(c) })
                    })
                    .collect();
                assert_eq!(ij, ji, "graded commutativity fails at ({i},{j})");
            }
        }
        if self.dim() <= 200 {
            assert!(self.is_associative_exhaustive(), "associativity fails");
        }
    }

    pub fn is_associative_exhaustive(&self) -> bool {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let ij = self.product(i, j).to_vec();
                for k in 0..self.dim() {
                    let jk = self.product(j, k).to_vec();
                    let left = self.product_of_vectors(&ij, &vec![(k, self.field.one())]);
                    let right = self.product_of_vectors(&vec![(i, self.field.one())], &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_associative_on(&self, triples: &[(usize, usize, usize)]) -> bool {
        triples.iter().all(|&(i, j, k)| {
            let ij = self.product(i, j).to_vec();
            let jk = self.product(j, k).to_vec();
            self.product_of_vectors(&ij, &vec![(k, self.field.one())])
                == self.product_of_vectors(&vec![(i, self.field.one())], &jk)
        })
    }

    /// JSON form: basis with degrees and labels, plus nonzero products with
    /// dense coefficient vectors (exact values as strings).
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let f = self.field;
        let basis: Vec<_> = self
            .degrees
            .iter()
            .zip(&self.labels)
            .map(|(d, l)| json!({"deg": d, "label": l}))
            .collect();
        let products: Vec<_> = self
            .products
            .iter()
            .map(|(&(i, j), v)| {
                let coeffs: Vec<String> =
                    self.dense(v).iter().map(|c| f.elem_str(c)).collect();
                json!([i, j, coeffs])
            })
            .collect();
        json!({"basis": basis, "products": products})
    }
}

/// The Hochster ring materialized as a plain graded algebra (labels record
/// the subset, reduced degree, and index of each class).
pub fn algebra_from_hochster<F: Field>(ring: &HochsterRing<F>) -> GradedAlgebra<F> {
    let degrees: Vec<usize> = (0..ring.dim()).map(|i| ring.total_degree(i)).collect();
    let labels: Vec<String> = ring
        .classes
        .iter()
        .map(|c| format!("{}:d{}#{}", c.subset, c.degree, c.index))
        .collect();
    GradedAlgebra {
        field: ring.field,
        degrees,
        labels,
        products: ring.all_products(),
    }
}

/// Reduced cohomology ring of a sphere: one class, zero products.
pub fn sphere_ring<F: Field>(f: F, n: usize) -> GradedAlgebra<F> {
    GradedAlgebra {
        field: f,
        degrees: vec![n],
        labels: vec![format!("s{n}")],
        products: BTreeMap::new(),
    }
}

/// Reduced cohomology ring of S^a × S^b: x (deg a), y (deg b), top t with
/// x·y = t and y·x = (−1)^{ab} t.
pub fn sphere_product_ring<F: Field>(f: F, a: usize, b: usize) -> GradedAlgebra<F> {
    assert!(a >= 1 && b >= 1, "sphere factors have dimension >= 1");
    let mut products = BTreeMap::new();
    products.insert((0, 1), vec![(2, f.one())]);
    products.insert(
        (1, 0),
        vec![(2, if (a * b) % 2 == 0 { f.one() } else { f.from_i64(-1) })],
    );
    GradedAlgebra {
        field: f,
        degrees: vec![a, b, a + b],
        labels: vec![format!("x({a})"), format!("y({b})"), format!("t({})", a + b)],
        products,
    }
}

/// Reduced cohomology ring of a connected sum of sphere products: per copy,
/// generators x (deg a) and y (deg b) pairing into a single shared top
/// class; all cross-copy products vanish. `summands` lists (a, b, count).
pub fn connected_sum_of_sphere_products<F: Field>(
    f: F,
    summands: &[(usize, usize, usize)],
) -> Result<GradedAlgebra<F>> {
    let copies: Vec<(usize, usize)> = summands
        .iter()
        .flat_map(|&(a, b, count)| std::iter::repeat((a, b)).take(count))
        .collect();
    if copies.is_empty() {
        return Ok(GradedAlgebra::zero_ring(f));
    }
    let total = copies[0].0 + copies[0].1;
    if copies.iter().any(|&(a, b)| a + b != total) {
        return Err(Error::DimensionMismatch(
            "connected sum requires equal total dimension across summands".into(),
        ));
    }
    let mut degrees = Vec::new();
    let mut labels = Vec::new();
    let mut products = BTreeMap::new();
    let top = copies.len() * 2; // index of the shared top class
    for (c, &(a, b)) in copies.iter().enumerate() {
        let (x, y) = (2 * c, 2 * c + 1);
        degrees.push(a);
        degrees.push(b);
        labels.push(format!("x{c}({a})"));
        labels.push(format!("y{c}({b})"));
        products.insert((x, y), vec![(top, f.one())]);
        products.insert(
            (y, x),
            vec![(top, if (a * b) % 2 == 0 { f.one() } else { f.from_i64(-1) })],
        );
    }
    degrees.push(total);
    labels.push(format!("t({total})"));
    Ok(GradedAlgebra {
        field: f,
        degrees,
        labels,
        products,
    })
}

/// Direct product of algebras: block sum of bases with zero cross-products.
pub fn direct_product<F: Field>(
    a: &GradedAlgebra<F>,
    b: &GradedAlgebra<F>,
) -> GradedAlgebra<F> {
    let off = a.dim();
    let mut degrees = a.degrees.clone();
    degrees.extend_from_slice(&b.degrees);
    let mut labels = a.labels.clone();
    labels.extend(b.labels.iter().map(|l| format!("r:{l}")));
    let mut products = a.products.clone();
    for (&(i, j), v) in &b.products {
        products.insert(
            (i + off, j + off),
            v.iter().map(|(k, c)| (k + off, c.clone())).collect(),
        );
    }
    GradedAlgebra {
        field: a.field,
        degrees,
        labels,
        products,
    }
}

/// Quotient by the two-sided ideal generated by homogeneous elements: the
/// span is closed under multiplication by all basis elements, a complement
/// basis of original basis elements is chosen, and products are projected.
pub fn quotient_by_ideal<F: Field>(
    a: &GradedAlgebra<F>,
    generators: &[SparseVec<F>],
) -> Result<GradedAlgebra<F>> {
    let f = a.field;
    for g in generators {
        let mut degs = g.iter().map(|(i, _)| a.degrees[*i]);
        if let Some(first) = degs.next() {
            if degs.any(|d| d != first) {
                return Err(Error::NotHomogeneous);
            }
        }
    }
    // close the span under left/right multiplication by basis elements
    let mut acc = RankAccumulator::new(f);
    let mut span: Vec<SparseVec<F>> = Vec::new();
    let mut queue: Vec<SparseVec<F>> = Vec::new();
    for g in generators {
        if acc.add(g.clone()) {
            span.push(g.clone());
            queue.push(g.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for e in 0..a.dim() {
            let unit = vec![(e, f.one())];
            for p in [a.product_of_vectors(&unit, &v), a.product_of_vectors(&v, &unit)] {
                if !p.is_empty() && acc.add(p.clone()) {
                    span.push(p.clone());
                    queue.push(p);
                }
            }
        }
    }
    // quotient basis: standard basis elements away from the pivot indices
    // of the ideal's echelon form; coordinates come from full reduction
    let pivot_set: std::collections::HashSet<usize> =
        acc.pivot_indices().into_iter().collect();
    let mut new_index = vec![usize::MAX; a.dim()];
    let mut reps = Vec::new();
    for i in 0..a.dim() {
        if !pivot_set.contains(&i) {
            new_index[i] = reps.len();
            reps.push(i);
        }
    }
    let degrees: Vec<usize> = reps.iter().map(|&i| a.degrees[i]).collect();
    let labels: Vec<String> = reps.iter().map(|&i| a.labels[i].clone()).collect();
    let mut products = BTreeMap::new();
    for (&(i, j), p) in &a.products {
        if new_index[i] == usize::MAX || new_index[j] == usize::MAX {
            continue;
        }
        let reduced: SparseVec<F> = acc
            .reduce_fully(p.clone())
            .into_iter()
            .map(|(k, c)| (new_index[k], c))
            .collect();
        if !reduced.is_empty() {
            products.insert((new_index[i], new_index[j]), reduced);
        }
    }
    Ok(GradedAlgebra {
        field: f,
        degrees,
        labels,
        products,
    })
}

/// Drops a one-dimensional top class and projects the products.
pub fn quotient_by_top<F: Field>(a: &GradedAlgebra<F>) -> Result<GradedAlgebra<F>> {
    let tops = a.top_classes();
    if tops.len() != 1 {
        return Err(Error::NotPoincareCandidate(format!(
            "top degree has rank {}",
            tops.len()
        )));
    }
    quotient_by_ideal(a, &[vec![(tops[0], a.field.one())]])
}

/// Ring-level connected sum: (A × B) / (t_A − t_B) for one-dimensional tops
/// in the same degree.
pub fn connected_sum_ring<F: Field>(
    a: &GradedAlgebra<F>,
    b: &GradedAlgebra<F>,
) -> Result<GradedAlgebra<F>> {
    if a.dim() == 0 {
        return Ok(b.clone());
    }
    if b.dim() == 0 {
        return Ok(a.clone());
    }
    if a.top_degree() != b.top_degree() {
        return Err(Error::DimensionMismatch(format!(
            "top degrees differ: {:?} vs {:?}",
            a.top_degree(),
            b.top_degree()
        )));
    }
    let (ta, tb) = (a.top_classes(), b.top_classes());
    if ta.len() != 1 || tb.len() != 1 {
        return Err(Error::NotPoincareCandidate(
            "connected sum requires one-dimensional tops".into(),
        ));
    }
    let f = a.field;
    let prod = direct_product(a, b);
    quotient_by_ideal(
        &prod,
        &[vec![(ta[0], f.one()), (a.dim() + tb[0], f.from_i64(-1))]],
    )
}

// ---------------------------------------------------------------------------
// Gyration
// ---------------------------------------------------------------------------

/// Iterated gyration G^r(A) = (A ⊗ Λ[v₁..v_r]) / (⊕_{S≠[r]} A^top ⊗ v_S):
/// basis {a ⊗ v_S} with the top-degree classes of A surviving only on the
/// full exterior monomial; each v has degree 1 and the Koszul convention
/// (a⊗u)(b⊗v) = (−1)^{deg u · deg b}(ab)⊗(uv) fixes the signs.
pub fn gyration_iter<F: Field>(a: &GradedAlgebra<F>, r: usize) -> Result<GradedAlgebra<F>> {
    let f = a.field;
    let Some(top) = a.top_degree() else {
        return Err(Error::NoTopDegree);
    };
    if r == 0 {
        return Ok(a.clone());
    }
    assert!(r <= 32, "gyration exponent out of range");
    let full: u64 = (1u64 << r) - 1;
    // surviving basis: (original index, exterior subset mask)
    let mut basis: Vec<(usize, u64)> = Vec::new();
    let mut pos: HashMap<(usize, u64), usize> = HashMap::new();
    for s in 0..=full {
        for i in 0..a.dim() {
            if a.degrees[i] == top && s != full {
                continue;
            }
            pos.insert((i, s), basis.len());
            basis.push((i, s));
        }
    }
    let degrees: Vec<usize> = basis
        .iter()
        .map(|&(i, s)| a.degrees[i] + s.count_ones() as usize)
        .collect();
    let labels: Vec<String> = basis
        .iter()
        .map(|&(i, s)| format!("{}*v{}", a.labels[i], VertexSet(s)))
        .collect();
    let mut products = BTreeMap::new();
    for (bi, &(i, s)) in basis.iter().enumerate() {
        for (bj, &(j, t)) in basis.iter().enumerate() {
            if s & t != 0 {
                continue;
            }
            let p = a.product(i, j);
            if p.is_empty() {
                continue;
            }
            let st = s | t;
            let exp = (s.count_ones() as usize) * a.degrees[j]
                + VertexSet(s).theta(VertexSet(t));
            let sign = f.from_i64(if exp % 2 == 0 { 1 } else { -1 });
            let out: SparseVec<F> = p
                .iter()
                .filter(|(k, _)| !(a.degrees[*k] == top && st != full))
                .map(|(k, c)| (pos[&(*k, st)], f.mul(c, &sign)))
                .collect();
            if !out.is_empty() {
                products.insert((bi, bj), out);
            }
        }
    }
    Ok(GradedAlgebra {
        field: f,
        degrees,
        labels,
        products,
    })
}

pub fn gyration<F: Field>(a: &GradedAlgebra<F>) -> Result<GradedAlgebra<F>> {
    gyration_iter(a, 1)
}

// ---------------------------------------------------------------------------
// Theorem 4 / Theorem 5 right-hand sides
// ---------------------------------------------------------------------------

/// The predicted ring of 𝒵_{K₁#K₂} for Gorenstein* K₁, K₂ of dimension n−1
/// on m₁ and m₂ vertices: gyrated factors and a λ(i)-weighted connected sum
/// of sphere products, glued along their top classes.
pub fn thm4_ring<F: Field>(
    h1: &GradedAlgebra<F>,
    h2: &GradedAlgebra<F>,
    m1: usize,
    m2: usize,
    n: usize,
) -> Result<GradedAlgebra<F>> {
    let f = h1.field;
    let g1 = gyration_iter(h1, m2 - n)?;
    let g2 = gyration_iter(h2, m1 - n)?;
    let total = m1 + m2 - 2 * n;
    let mut summands = Vec::new();
    for i in 2..=total {
        let lambda = binomial(total, i) as i64
            - binomial(m1 - n, i) as i64
            - binomial(m2 - n, i) as i64;
        if lambda < 0 {
            return Err(Error::Internal(format!(
                "negative connected-sum multiplicity λ({i}) = {lambda}"
            )));
        }
        if lambda > 0 {
            summands.push((i + 1, m1 + m2 - i - 1, lambda as usize));
        }
    }
    let m_ring = connected_sum_of_sphere_products(f, &summands)?;
    connected_sum_ring(&connected_sum_ring(&g1, &g2)?, &m_ring)
}

/// The predicted ring of 𝒵 after a stellar subdivision (Theorem 5 shape):
/// the gyration of the original ring, connected-summed with
/// Y = ♯_{i+j≥1} f_i · C(m−s, j) (S^{i+j+2} × S^{m+n−i−j−1}),
/// where f_i = rank H^i(𝒵_{link σ}) (f₀ = 1) and s = |𝒱| + |σ|.
pub fn thm5_ring<F: Field>(
    hk: &GradedAlgebra<F>,
    f_ranks: &[usize],
    m: usize,
    n: usize,
    s: usize,
) -> Result<GradedAlgebra<F>> {
    let f = hk.field;
    let g = gyration(hk)?;
    let mut summands = Vec::new();
    for (i, &fi) in f_ranks.iter().enumerate() {
        for j in 0..=m.saturating_sub(s) {
            if i + j == 0 {
                continue;
            }
            let count = fi * binomial(m - s, j);
            if count > 0 {
                summands.push((i + j + 2, m + n - i - j - 1, count));
            }
        }
    }
    let y = connected_sum_of_sphere_products(f, &summands)?;
    connected_sum_ring(&g, &y)
}

// ---------------------------------------------------------------------------
// Fingerprints and factor matching
// ---------------------------------------------------------------------------

/// Rank invariants of a graded algebra: Hilbert function, the rank of every
/// multiplication map A^p ⊗ A^q → A^{p+q}, and the dimension of the
/// decomposable part (A·A)^k per degree. Zero entries are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingFingerprint {
    pub hilbert: BTreeMap<usize, usize>,
    pub mult_ranks: BTreeMap<(usize, usize), usize>,
    pub decomposable: BTreeMap<usize, usize>,
}

pub fn fingerprint<F: Field>(a: &GradedAlgebra<F>) -> RingFingerprint {
    let f = a.field;
    // group the nonzero product columns by the degrees of their factors
    let mut grouped: BTreeMap<(usize, usize), Vec<&SparseVec<F>>> = BTreeMap::new();
    for (&(i, j), v) in &a.products {
        grouped
            .entry((a.degrees[i], a.degrees[j]))
            .or_default()
            .push(v);
    }
    let pairs: Vec<(&(usize, usize), &Vec<&SparseVec<F>>)> = grouped.iter().collect();
    let mult: Vec<((usize, usize), usize)> = pairs
        .par_iter()
        .map(|(&(p, q), cols)| {
            let mut acc = RankAccumulator::new(f);
            let mut rank = 0;
            for col in cols.iter() {
                if acc.add((*col).clone()) {
                    rank += 1;
                }
            }
            ((p, q), rank)
        })
        .collect();
    let mult_ranks: BTreeMap<(usize, usize), usize> =
        mult.into_iter().filter(|(_, r)| *r > 0).collect();
    // decomposable part per target degree
    let mut by_target: BTreeMap<usize, Vec<&SparseVec<F>>> = BTreeMap::new();
    for (&(p, q), cols) in &grouped {
        by_target.entry(p + q).or_default().extend(cols.iter());
    }
    let targets: Vec<(&usize, &Vec<&SparseVec<F>>)> = by_target.iter().collect();
    let decomp: Vec<(usize, usize)> = targets
        .par_iter()
        .map(|(&k, cols)| {
            let mut acc = RankAccumulator::new(f);
            let mut rank = 0;
            for col in cols.iter() {
                if acc.add((*col).clone()) {
                    rank += 1;
                }
            }
            (k, rank)
        })
        .collect();
    RingFingerprint {
        hilbert: a.hilbert(),
        mult_ranks,
        decomposable: decomp.into_iter().filter(|(_, r)| *r > 0).collect(),
    }
}

pub fn fingerprints_equal(a: &RingFingerprint, b: &RingFingerprint) -> bool {
    a == b
}

pub fn fingerprint_to_json(fp: &RingFingerprint) -> serde_json::Value {
    use serde_json::{json, Map, Value};
    let hilbert: Map<String, Value> = fp
        .hilbert
        .iter()
        .map(|(d, r)| (d.to_string(), json!(r)))
        .collect();
    let mult: Map<String, Value> = fp
        .mult_ranks
        .iter()
        .map(|(&(p, q), r)| (format!("{p},{q}"), json!(r)))
        .collect();
    let decomp: Map<String, Value> = fp
        .decomposable
        .iter()
        .map(|(d, r)| (d.to_string(), json!(r)))
        .collect();
    json!({"hilbert": hilbert, "mult_ranks": mult, "decomposable": decomp})
}

/// Checks a proposed decomposition A ≅ Π parts: the parts (given as spanning
/// sets of homogeneous vectors) must sum directly to A, each must be closed
/// under multiplication, and all cross-part products must vanish.
pub fn verify_product_decomposition<F: Field>(
    a: &GradedAlgebra<F>,
    parts: &[Vec<SparseVec<F>>],
) -> Result<bool> {
    let f = a.field;
    for part in parts {
        for v in part {
            let mut degs = v.iter().map(|(i, _)| a.degrees[*i]);
            if let Some(first) = degs.next() {
                if degs.any(|d| d != first) {
                    return Err(Error::NotHomogeneous);
                }
            }
        }
    }
    // direct sum: per-part ranks add up to dim A and the union spans
    let mut part_accs: Vec<RankAccumulator<F>> = Vec::new();
    let mut union = RankAccumulator::new(f);
    let mut rank_sum = 0usize;
    let mut union_rank = 0usize;
    for part in parts {
        let mut acc = RankAccumulator::new(f);
        for v in part {
            if acc.add(v.clone()) {
                rank_sum += 1;
            }
            if union.add(v.clone()) {
                union_rank += 1;
            }
        }
        part_accs.push(acc);
    }
    if rank_sum != a.dim() || union_rank != a.dim() {
        return Ok(false);
    }
    // closure and cross-product annihilation
    for (pi, part) in parts.iter().enumerate() {
        for (pj, other) in parts.iter().enumerate() {
            for u in part {
                for v in other {
                    let p = a.product_of_vectors(u, v);
                    if pi == pj {
                        if !part_accs[pi].in_span(p) {
                            return Ok(false);
                        }
                    } else if !p.is_empty() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Matches two lists of fingerprints up to permutation; returns the
/// permutation sending index i of `left` to its partner in `right`.
pub fn match_factors(left: &[RingFingerprint], right: &[RingFingerprint]) -> Option<Vec<usize>> {
    if left.len() != right.len() {
        return None;
    }
    let n = left.len();
    let mut used = vec![false; n];
    let mut assignment = vec![usize::MAX; n];
    fn assign(
        i: usize,
        left: &[RingFingerprint],
        right: &[RingFingerprint],
        used: &mut Vec<bool>,
        assignment: &mut Vec<usize>,
    ) -> bool {
        if i == left.len() {
            return true;
        }
        for j in 0..right.len() {
            if !used[j] && left[i] == right[j] {
                used[j] = true;
                assignment[i] = j;
                if assign(i + 1, left, right, used, assignment) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    if assign(0, left, right, &mut used, &mut assignment) {
        Some(assignment)
    } else {
        None
    }
}
