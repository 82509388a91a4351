//! Connected-sum decomposition of simplicial 2-spheres.
//!
//! A 2-sphere is reducible exactly when it has an empty triangle (a 3-clique
//! of the 1-skeleton that is not a face); cutting along it and capping both
//! sides with the triangle yields the two summands. Iterating until no
//! empty triangle remains produces the irreducible factors; a factor equal
//! to ∂Δ³ is kept by convention.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use itertools::Itertools;

/// Verifies that K is a simplicial 2-sphere: pure of dimension 2, every
/// edge in exactly two facets, every vertex link a single cycle, connected,
/// Euler characteristic 2.
pub fn check_2_sphere(k: &SimplicialComplex) -> Result<()> {
    if k.dim() != 2 || !k.is_pure() {
        return Err(Error::NotASphere("not pure of dimension 2".into()));
    }
    if !k.ghost_vertices().is_empty() {
        return Err(Error::NotASphere("ghost vertices present".into()));
    }
    let faces = k.faces_by_card();
    for e in &faces[2] {
        let cofaces = k.facets().iter().filter(|f| e.is_subset_of(**f)).count();
        if cofaces != 2 {
            return Err(Error::NotASphere(format!(
                "edge {e} lies in {cofaces} facets, expected 2"
            )));
        }
    }
    for v in k.vertices().iter() {
        let link = k.link(VertexSet::singleton(v))?;
        if !is_cycle(&link) {
            return Err(Error::NotASphere(format!("link of vertex {v} is not a cycle")));
        }
    }
    if k.euler_characteristic() != 2 {
        return Err(Error::NotASphere(format!(
            "Euler characteristic {} != 2",
            k.euler_characteristic()
        )));
    }
    if !facet_graph_connected(k.facets(), |a, b| a.intersection(*b).len() == 2) {
        return Err(Error::NotASphere("facet adjacency graph disconnected".into()));
    }
    Ok(())
}

/// Is this 1-complex a single cycle?
fn is_cycle(k: &SimplicialComplex) -> bool {
    let verts = k.vertices();
    let edges = k.facets();
    if k.dim() != 1 || edges.len() != verts.len() {
        return false;
    }
    verts
        .iter()
        .all(|v| edges.iter().filter(|e| e.contains(v)).count() == 2)
        && facet_graph_connected(edges, |a, b| a.intersection(*b).len() == 1)
}

fn facet_graph_connected<F>(facets: &[VertexSet], adjacent: F) -> bool
where
    F: Fn(&VertexSet, &VertexSet) -> bool,
{
    if facets.is_empty() {
        return true;
    }
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..facets.len() {
            if !seen[j] && adjacent(&facets[i], &facets[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|s| *s)
}

/// Finds an empty triangle: three pairwise-adjacent vertices not spanning a
/// face. Returns None when K is irreducible.
pub fn empty_triangle(k: &SimplicialComplex) -> Option<VertexSet> {
    let verts = k.vertices().to_vec();
    for combo in verts.iter().combinations(3) {
        let (a, b, c) = (*combo[0], *combo[1], *combo[2]);
        if k.adjacent(a, b) && k.adjacent(b, c) && k.adjacent(a, c) {
            let t = VertexSet::from_slice(&[a, b, c], k.ground_size()).unwrap();
            if !k.contains(t) {
                return Some(t);
            }
        }
    }
    None
}

/// Relabels the supported vertices of a facet list onto 1..m ascending.
fn compactify(facets: Vec<VertexSet>) -> SimplicialComplex {
    let support: VertexSet = facets
        .iter()
        .fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
    let labels = support.to_vec();
    let m = labels.len();
    let pos = |v: usize| labels.iter().position(|&x| x == v).unwrap() + 1;
    let relabeled = facets
        .into_iter()
        .map(|f| {
            let vs: Vec<usize> = f.iter().map(pos).collect();
            VertexSet::from_slice(&vs, m).unwrap()
        })
        .collect();
    SimplicialComplex::from_facets(m, relabeled).unwrap()
}

/// Splits a 2-sphere along an empty triangle into two capped 2-spheres.
fn split_along(k: &SimplicialComplex, t: VertexSet) -> (SimplicialComplex, SimplicialComplex) {
    // The triangle's three edges each separate their two incident facets;
    // removing those dual-graph adjacencies disconnects the facet graph
    // into the two sides of the cutting cycle.
    let t_edges: Vec<VertexSet> = t
        .iter()
        .combinations(2)
        .map(|p| VertexSet::from_slice(&[p[0], p[1]], k.ground_size()).unwrap())
        .collect();
    let facets = k.facets();
    let mut comp = vec![usize::MAX; facets.len()];
    let mut current = 0usize;
    for start in 0..facets.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = current;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..facets.len() {
                if comp[j] != usize::MAX {
                    continue;
                }
                let shared = facets[i].intersection(facets[j]);
                if shared.len() == 2 && !t_edges.contains(&shared) {
                    comp[j] = current;
                    stack.push(j);
                }
            }
        }
        current += 1;
    }
    assert_eq!(current, 2, "an empty triangle must separate a 2-sphere");
    let mut side0: Vec<VertexSet> = Vec::new();
    let mut side1: Vec<VertexSet> = Vec::new();
    for (i, f) in facets.iter().enumerate() {
        if comp[i] == 0 {
            side0.push(*f);
        } else {
            side1.push(*f);
        }
    }
    side0.push(t);
    side1.push(t);
    (compactify(side0), compactify(side1))
}

/// Irreducible connected-sum factors of a simplicial 2-sphere, each
/// compactly relabeled on its own ground set.
pub fn irreducible_decomposition(k: &SimplicialComplex) -> Result<Vec<SimplicialComplex>> {
    check_2_sphere(k)?;
    let mut out = Vec::new();
    let mut queue = vec![k.clone()];
    while let Some(cur) = queue.pop() {
        match empty_triangle(&cur) {
            None => out.push(cur),
            Some(t) => {
                let (a, b) = split_along(&cur, t);
                queue.push(a);
                queue.push(b);
            }
        }
    }
    // deterministic order: by vertex count then facet list
    out.sort_by(|a, b| {
        (a.ground_size(), a.facets().to_vec()).cmp(&(b.ground_size(), b.facets().to_vec()))
    });
    Ok(out)
}
