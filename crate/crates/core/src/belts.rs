//! Belts: full subcomplexes isomorphic to polygon boundaries.
//!
//! For a flag 2-sphere, every missing edge lies on a belt (an induced
//! chordless cycle of length ≥ 4). The searches here are exhaustive by
//! subset size — equivalent to shortest-first — and guarded to small ground
//! sets, which covers the corpus by a wide margin.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use itertools::Itertools;

/// Is `K_I` the boundary of an |I|-gon? Requires every member of `I` to be
/// a vertex, pure dimension 1, every vertex of degree 2, and connectivity.
pub fn is_polygon_boundary(k: &SimplicialComplex, i: VertexSet) -> bool {
    let sub = k.full_subcomplex(i);
    let n = i.len();
    if n < 3 || sub.dim() != 1 || sub.vertices() != i {
        return false;
    }
    let edges: Vec<VertexSet> = sub.facets().to_vec();
    if edges.len() != n || edges.iter().any(|e| e.len() != 2) {
        return false;
    }
    for v in i.iter() {
        let deg = edges.iter().filter(|e| e.contains(v)).count();
        if deg != 2 {
            return false;
        }
    }
    // connected: walk the cycle from the first vertex
    let start = i.min_vertex().unwrap();
    let mut seen = VertexSet::singleton(start);
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for e in &edges {
            if e.contains(v) {
                let w = e.difference(VertexSet::singleton(v)).min_vertex().unwrap();
                if !seen.contains(w) {
                    seen.insert(w);
                    frontier.push(w);
                }
            }
        }
    }
    seen == i
}

/// Shortest belt through a missing edge `e` (|e| = 2): the smallest
/// `I ⊇ e` with `K_I` a polygon boundary of length ≥ 4.
///
/// Exhaustive by increasing subset size, guarded to m ≤ 20. On a flag
/// 2-sphere a belt exists for every missing edge; `NotFound` on such input
/// indicates a precondition violation.
pub fn belt_through_missing_edge(k: &SimplicialComplex, e: VertexSet) -> Result<VertexSet> {
    let m = k.ground_size();
    if m > 20 {
        return Err(Error::NotFound(format!(
            "belt search is exhaustive and limited to m <= 20 (got {m})"
        )));
    }
    if e.len() != 2 || k.contains(e) {
        return Err(Error::NotFound(format!("{e} is not a missing edge")));
    }
    let others: Vec<usize> = k
        .vertices()
        .difference(e)
        .to_vec();
    for extra in 2..=others.len() {
        let mut found: Option<VertexSet> = None;
        for combo in others.iter().combinations(extra) {
            let mut i = e;
            for v in combo {
                i.insert(*v);
            }
            if is_polygon_boundary(k, i) && (found.is_none() || i.0 < found.unwrap().0) {
                found = Some(i);
            }
        }
        if let Some(i) = found {
            return Ok(i);
        }
    }
    Err(Error::NotFound(format!("no belt through {e}")))
}

/// All n-belts of K: subsets I of size n with `K_I` an n-gon boundary.
pub fn find_belts(k: &SimplicialComplex, n: usize) -> Vec<VertexSet> {
    assert!(n >= 4, "belts have length >= 4");
    let verts = k.vertices().to_vec();
    let mut out = Vec::new();
    for combo in verts.iter().combinations(n) {
        let mut i = VertexSet::EMPTY;
        for v in combo {
            i.insert(*v);
        }
        if is_polygon_boundary(k, i) {
            out.push(i);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::zoo_complex;

    fn vs(v: &[usize], m: usize) -> VertexSet {
        VertexSet::from_slice(v, m).unwrap()
    }

    #[test]
    fn octahedron_equators() {
        let o6 = zoo_complex("O6").unwrap();
        let belts = find_belts(&o6, 4);
        assert_eq!(belts.len(), 3);
        // each belt omits exactly one antipodal pair
        assert!(belts.contains(&vs(&[2, 3, 5, 6], 6)));

        let belt = belt_through_missing_edge(&o6, vs(&[1, 4], 6)).unwrap();
        assert!(vs(&[1, 4], 6).is_subset_of(belt));
        assert!(is_polygon_boundary(&o6, belt));
        assert_eq!(belt.len(), 4);
    }

    #[test]
    fn tetrahedron_and_icosahedron_4belts() {
        let t4 = zoo_complex("T4").unwrap();
        assert!(find_belts(&t4, 4).is_empty());
        let i12 = zoo_complex("I12").unwrap();
        assert!(find_belts(&i12, 4).is_empty(), "icosahedron has no 4-belt");
    }

    #[test]
    fn icosahedron_belts_exist_for_all_missing_edges() {
        let i12 = zoo_complex("I12").unwrap();
        for e in i12.missing_faces() {
            let belt = belt_through_missing_edge(&i12, e).unwrap();
            assert!(e.is_subset_of(belt));
            assert!(is_polygon_boundary(&i12, belt));
            assert!(belt.len() >= 4);
        }
    }

    #[test]
    fn bipyramid_belt_through_pentagon_missing_edge() {
        // apexes 1,2; pentagon 3..7
        let b7 = zoo_complex("bipyramid(7)").unwrap();
        let e = vs(&[3, 5], 7);
        assert!(!b7.contains(e));
        let belt = belt_through_missing_edge(&b7, e).unwrap();
        assert!(is_polygon_boundary(&b7, belt));
        // shortest belt goes through the two apexes: {3,5} + {1,2}
        assert_eq!(belt, vs(&[1, 2, 3, 5], 7));
    }

    #[test]
    fn rejects_non_missing_edges() {
        let o6 = zoo_complex("O6").unwrap();
        assert!(belt_through_missing_edge(&o6, vs(&[1, 2], 6)).is_err());
    }
}
