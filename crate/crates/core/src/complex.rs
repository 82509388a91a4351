use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use itertools::Itertools;
use std::collections::BTreeSet;

/// A finite abstract simplicial complex on the ground set `[m]`.
///
/// Stored as its inclusion-maximal faces (facets). The ground set size is
/// independent of the vertex support: elements of `[m]` in no face are
/// *ghost vertices* (they matter for the subset-indexed Hochster
/// decomposition, where a ghost contributes an empty full subcomplex).
///
/// The empty complex `{∅}` is represented by an empty facet list; the void
/// complex (no faces at all) is deliberately not representable, since a full
/// subcomplex always contains the empty simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground_size: usize,
    facets: Vec<VertexSet>,
}

/// Compare bitmask sets as sorted vertex tuples (lexicographic).
pub fn lex_cmp(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.to_vec().cmp(&b.to_vec())
}

impl SimplicialComplex {
    /// Normalizing constructor: validates labels, deduplicates, and keeps
    /// only inclusion-maximal faces. An empty list (or a list of empty
    /// sets) yields the empty complex `{∅}`.
    pub fn from_facets(m: usize, facets: Vec<VertexSet>) -> Result<SimplicialComplex> {
        if m > 64 {
            return Err(Error::GroundSetTooLarge(m));
        }
        let full = VertexSet::full(m);
        for f in &facets {
            if !f.is_subset_of(full) {
                let bad = f.difference(full).min_vertex().unwrap();
                return Err(Error::InvalidVertex(bad, m));
            }
        }
        let mut maximal: Vec<VertexSet> = Vec::new();
        for f in facets {
            if f.is_empty() {
                continue;
            }
            if maximal.iter().any(|g| f.is_subset_of(*g)) {
                continue;
            }
            maximal.retain(|g| !g.is_subset_of(f));
            maximal.push(f);
        }
        maximal.sort_by(lex_cmp);
        Ok(SimplicialComplex {
            ground_size: m,
            facets: maximal,
        })
    }

    pub fn from_facet_slices(m: usize, facets: &[&[usize]]) -> Result<SimplicialComplex> {
        let sets = facets
            .iter()
            .map(|f| VertexSet::from_slice(f, m))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(m, sets)
    }

    /// The empty complex `{∅}` on a ground set of size `m`.
    pub fn empty(m: usize) -> SimplicialComplex {
        SimplicialComplex {
            ground_size: m,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `[m]` (one facet).
    pub fn simplex(m: usize) -> SimplicialComplex {
        if m == 0 {
            return SimplicialComplex::empty(0);
        }
        SimplicialComplex {
            ground_size: m,
            facets: vec![VertexSet::full(m)],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Union of all facets: the supported (non-ghost) vertices.
    pub fn vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    pub fn ghost_vertices(&self) -> VertexSet {
        VertexSet::full(self.ground_size).difference(self.vertices())
    }

    /// The same complex relabeled onto the ground set `[vertex_count]`,
    /// dropping ghost vertices; relabeling preserves the vertex order.
    pub fn on_own_vertices(&self) -> SimplicialComplex {
        let verts: Vec<usize> = self.vertices().iter().collect();
        let mut relabel = vec![0usize; self.ground_size + 1];
        for (i, &v) in verts.iter().enumerate() {
            relabel[v] = i + 1;
        }
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut g = VertexSet::EMPTY;
                for v in f.iter() {
                    g.insert(relabel[v]);
                }
                g
            })
            .collect();
        SimplicialComplex::from_facets(verts.len(), facets)
            .expect("relabeling preserves the complex")
    }

    /// Dimension; the empty complex has dimension −1.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn contains(&self, simplex: VertexSet) -> bool {
        simplex.is_empty() || self.facets.iter().any(|f| simplex.is_subset_of(*f))
    }

    /// All faces grouped by cardinality: `faces[c]` lists the `c`-element
    /// faces in lexicographic order; `faces[0] = [∅]` always.
    pub fn faces_by_card(&self) -> Vec<Vec<VertexSet>> {
        let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets_by_size() {
                seen.insert(s);
            }
        }
        seen.insert(VertexSet::EMPTY);
        let top = (self.dim() + 1).max(0) as usize;
        let mut out: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
        for s in seen {
            out[s.len()].push(s);
        }
        for level in &mut out {
            level.sort_by(lex_cmp);
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_card().iter().map(|l| l.len()).sum()
    }

    /// `f_vector()[i]` = number of `i`-dimensional faces (so index 0 counts
    /// vertices). Empty for the empty complex.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_card()[1..]
            .iter()
            .map(|l| l.len())
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        self.f_vector().get(1).copied().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f0) => self.facets.iter().all(|f| f.len() == f0.len()),
        }
    }

    /// Any `q` supported vertices span a face.
    pub fn is_q_neighborly(&self, q: usize) -> bool {
        let verts = self.vertices().to_vec();
        if q > verts.len() {
            return false;
        }
        verts.iter().combinations(q).all(|c| {
            let s = c.iter().fold(VertexSet::EMPTY, |acc, v| {
                let mut a = acc;
                a.insert(**v);
                a
            });
            self.contains(s)
        })
    }

    /// A cone has a supported vertex contained in every facet.
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty()
            && self
                .facets
                .iter()
                .fold(VertexSet::full(64), |acc, f| acc.intersection(*f))
                .intersection(self.vertices())
                .len()
                > 0
    }

    /// Full subcomplex `K_I = {σ ∩ I : σ ∈ K}`, on the same ground set with
    /// original labels. Yields `{∅}` when `I` misses all vertices.
    pub fn full_subcomplex(&self, i: VertexSet) -> SimplicialComplex {
        let restricted: Vec<VertexSet> = self.facets.iter().map(|f| f.intersection(i)).collect();
        SimplicialComplex::from_facets(self.ground_size, restricted)
            .expect("restriction preserves validity")
    }

    /// `link_K σ = {τ ∈ K : σ∪τ ∈ K, σ∩τ = ∅}`, labels kept, σ's vertices
    /// becoming ghosts.
    pub fn link(&self, sigma: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::NotASimplex(format!("{sigma}")));
        }
        let fac = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .map(|f| f.difference(sigma))
            .collect();
        SimplicialComplex::from_facets(self.ground_size, fac)
    }

    /// `star_K σ`: all faces τ with σ∪τ ∈ K; its facets are the facets of K
    /// containing σ.
    pub fn star(&self, sigma: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::NotASimplex(format!("{sigma}")));
        }
        let fac: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .copied()
            .collect();
        // σ = ∅ star is all of K; σ a face of the empty complex cannot occur
        // (only ∅, handled above).
        SimplicialComplex::from_facets(self.ground_size, fac)
    }

    /// Join `K1 * K2`: ground sets concatenated (K2 labels shifted by m1),
    /// facets all unions of facet pairs.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let m = self.ground_size + other.ground_size;
        if m > 64 {
            return Err(Error::GroundSetTooLarge(m));
        }
        let left: Vec<VertexSet> = if self.facets.is_empty() {
            vec![VertexSet::EMPTY]
        } else {
            self.facets.clone()
        };
        let right: Vec<VertexSet> = if other.facets.is_empty() {
            vec![VertexSet::EMPTY]
        } else {
            other
                .facets
                .iter()
                .map(|f| VertexSet(f.0 << self.ground_size))
                .collect()
        };
        let mut fac = Vec::with_capacity(left.len() * right.len());
        for a in &left {
            for b in &right {
                fac.push(a.union(*b));
            }
        }
        SimplicialComplex::from_facets(m, fac)
    }

    /// Cone = Δ⁰ * K (apex is vertex 1, K shifted up by one).
    pub fn cone(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::simplex(1).join(self)
    }

    /// Suspension = S⁰ * K (apexes are vertices 1 and 2).
    pub fn suspension(&self) -> Result<SimplicialComplex> {
        let s0 = SimplicialComplex::from_facet_slices(2, &[&[1], &[2]])?;
        s0.join(self)
    }

    /// Connected sum along identified facets.
    ///
    /// `matching` maps each vertex of `f2` to a distinct vertex of `f1`; the
    /// identified facet is removed. Remaining `K2` ground elements are
    /// appended after `m1` in ascending original order (this includes K2's
    /// ghost vertices, if any).
    pub fn connected_sum(
        &self,
        f1: VertexSet,
        other: &SimplicialComplex,
        f2: VertexSet,
        matching: &[(usize, usize)],
    ) -> Result<SimplicialComplex> {
        if !self.is_pure() || !other.is_pure() || self.dim() != other.dim() || self.dim() < 0 {
            return Err(Error::InvalidConnectedSum(format!(
                "summands must be pure of equal dimension (got {} and {})",
                self.dim(),
                other.dim()
            )));
        }
        if !self.facets.contains(&f1) {
            return Err(Error::InvalidConnectedSum(format!(
                "{f1} is not a facet of the first summand"
            )));
        }
        if !other.facets.contains(&f2) {
            return Err(Error::InvalidConnectedSum(format!(
                "{f2} is not a facet of the second summand"
            )));
        }
        let (from, to): (Vec<usize>, Vec<usize>) = matching.iter().copied().unzip();
        let from_set = VertexSet::from_slice(&from, other.ground_size)?;
        let to_set = VertexSet::from_slice(&to, self.ground_size)?;
        if from_set != f2 || to_set != f1 || from.len() != f2.len() || to.len() != f1.len() {
            return Err(Error::InvalidConnectedSum(
                "matching is not a bijection f2 -> f1".into(),
            ));
        }
        let m1 = self.ground_size;
        let mut relabel = vec![0usize; other.ground_size + 1];
        for &(v2, v1) in matching {
            relabel[v2] = v1;
        }
        let mut next = m1 + 1;
        for v in 1..=other.ground_size {
            if relabel[v] == 0 {
                relabel[v] = next;
                next += 1;
            }
        }
        let m = next - 1;
        if m > 64 {
            return Err(Error::GroundSetTooLarge(m));
        }
        let mut fac: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| **f != f1)
            .copied()
            .collect();
        for f in &other.facets {
            if *f == f2 {
                continue;
            }
            let mut g = VertexSet::EMPTY;
            for v in f.iter() {
                g.insert(relabel[v]);
            }
            fac.push(g);
        }
        SimplicialComplex::from_facets(m, fac)
    }

    /// Connected sum with the default choices used by the CLI:
    /// lexicographically smallest facets, order-preserving matching.
    pub fn connected_sum_default(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let f1 = *self
            .facets
            .first()
            .ok_or_else(|| Error::InvalidConnectedSum("first summand is empty".into()))?;
        let f2 = *other
            .facets
            .first()
            .ok_or_else(|| Error::InvalidConnectedSum("second summand is empty".into()))?;
        let matching: Vec<(usize, usize)> =
            f2.iter().zip(f1.iter()).collect();
        self.connected_sum(f1, other, f2, &matching)
    }

    /// Stellar subdivision at a face σ: replace `star σ` by the cone (new
    /// vertex `m+1`) over `∂σ * link σ`. A vertex subdivision is the
    /// identity by convention.
    pub fn stellar_subdivision(&self, sigma: VertexSet) -> Result<SimplicialComplex> {
        if sigma.is_empty() || !self.contains(sigma) {
            return Err(Error::NotASimplex(format!("{sigma}")));
        }
        if sigma.len() == 1 {
            return Ok(self.clone());
        }
        let m = self.ground_size + 1;
        if m > 64 {
            return Err(Error::GroundSetTooLarge(m));
        }
        let apex = m;
        let mut fac: Vec<VertexSet> = Vec::new();
        for f in &self.facets {
            if sigma.is_subset_of(*f) {
                // facets of the cone over ∂σ * link σ: drop one vertex of σ,
                // add the apex
                for v in sigma.iter() {
                    let mut g = *f;
                    g.remove(v);
                    g.insert(apex);
                    fac.push(g);
                }
            } else {
                fac.push(*f);
            }
        }
        SimplicialComplex::from_facets(m, fac)
    }

    /// Minimal non-faces: subsets not in K all of whose proper subsets are.
    /// Ghost vertices appear as singleton missing faces.
    pub fn missing_faces(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for g in self.ghost_vertices().iter() {
            out.push(VertexSet::singleton(g));
        }
        let verts = self.vertices().to_vec();
        let max_size = (self.dim() + 2).max(0) as usize;
        for size in 2..=max_size.min(verts.len()) {
            for combo in verts.iter().combinations(size) {
                let s = combo.iter().fold(VertexSet::EMPTY, |mut acc, v| {
                    acc.insert(**v);
                    acc
                });
                if self.contains(s) {
                    continue;
                }
                // minimality: all maximal proper subsets are faces
                let minimal = s.iter().all(|v| {
                    let mut t = s;
                    t.remove(v);
                    self.contains(t)
                });
                if minimal {
                    out.push(s);
                }
            }
        }
        out.sort_by(lex_cmp);
        out
    }

    pub fn is_flag(&self) -> bool {
        self.missing_faces().iter().all(|f| f.len() == 2)
    }

    /// The 1-skeleton adjacency: pairs of vertices spanning an edge.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let mut e = VertexSet::EMPTY;
        e.insert(u);
        e.insert(v);
        self.contains(e)
    }
}

/// Graph isomorphism-style backtracking test for complex isomorphism
/// (supported vertices only; ghosts ignored). Desk scale: used on the small
/// fixtures in tests and for decomposition factor sanity checks.
pub fn are_isomorphic(k1: &SimplicialComplex, k2: &SimplicialComplex) -> bool {
    let v1 = k1.vertices().to_vec();
    let v2 = k2.vertices().to_vec();
    if v1.len() != v2.len() || k1.f_vector() != k2.f_vector() {
        return false;
    }
    let faces1: BTreeSet<Vec<usize>> = k1
        .faces_by_card()
        .iter()
        .flatten()
        .map(|s| s.to_vec())
        .collect();
    let faces2: BTreeSet<Vec<usize>> = k2
        .faces_by_card()
        .iter()
        .flatten()
        .map(|s| s.to_vec())
        .collect();

    fn extend(
        v1: &[usize],
        v2: &[usize],
        map: &mut Vec<(usize, usize)>,
        used: &mut BTreeSet<usize>,
        faces1: &BTreeSet<Vec<usize>>,
        faces2: &BTreeSet<Vec<usize>>,
    ) -> bool {
        if map.len() == v1.len() {
            // full check: every face of K1 maps to a face of K2
            return faces1.iter().all(|f| {
                let mut img: Vec<usize> = f
                    .iter()
                    .map(|x| map.iter().find(|(a, _)| a == x).unwrap().1)
                    .collect();
                img.sort_unstable();
                faces2.contains(&img)
            });
        }
        let next = v1[map.len()];
        for &cand in v2 {
            if used.contains(&cand) {
                continue;
            }
            map.push((next, cand));
            used.insert(cand);
            // prune: edges among mapped vertices must correspond
            let consistent = map.iter().all(|&(a, b)| {
                let mut e1 = vec![a.min(next), a.max(next)];
                e1.dedup();
                let mut e2 = vec![b.min(cand), b.max(cand)];
                e2.dedup();
                faces1.contains(&e1) == faces2.contains(&e2)
            });
            if consistent && extend(v1, v2, map, used, faces1, faces2) {
                return true;
            }
            map.pop();
            used.remove(&cand);
        }
        false
    }

    extend(
        &v1,
        &v2,
        &mut Vec::new(),
        &mut BTreeSet::new(),
        &faces1,
        &faces2,
    )
}
