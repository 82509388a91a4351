use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A built-in complex, possibly non-simplicial polyhedral data.
///
/// The cube and dodecahedron boundaries are not simplicial complexes; they
/// are carried as raw vertex-facet incidences with `is_simplicial = false`
/// for catalog bookkeeping (vertex/edge/face counts) and are rejected by
/// every homology operation.
#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: String,
    pub ground_size: usize,
    pub facets: Vec<Vec<usize>>,
    pub is_simplicial: bool,
}

impl ZooEntry {
    pub fn into_complex(self) -> Result<SimplicialComplex> {
        if !self.is_simplicial {
            return Err(Error::NotSimplicial(format!(
                "{} is polyhedral (non-triangular facets); supply a triangulation as .scx instead",
                self.name
            )));
        }
        let refs: Vec<&[usize]> = self.facets.iter().map(|f| f.as_slice()).collect();
        SimplicialComplex::from_facet_slices(self.ground_size, &refs)
    }

    pub fn edge_count(&self) -> usize {
        // Polyhedral facets are cycles; each facet of size s contributes s
        // edges, each edge shared by two facets. For simplicial entries this
        // agrees with f_1 only in dimension 2, so simplicial entries should
        // use SimplicialComplex::edge_count instead.
        self.facets.iter().map(|f| f.len()).sum::<usize>() / 2
    }
}

/// Canonical labeled icosahedron: apex 1, upper pentagon 2–6, lower pentagon
/// 7–11 (antiprism band), apex 12.
fn icosahedron_facets() -> Vec<Vec<usize>> {
    let u = [2usize, 3, 4, 5, 6];
    let l = [7usize, 8, 9, 10, 11];
    let mut f = Vec::with_capacity(20);
    for i in 0..5 {
        let j = (i + 1) % 5;
        f.push(vec![1, u[i], u[j]]);
        f.push(vec![12, l[i], l[j]]);
        f.push(vec![u[i], l[i], l[j]]);
        f.push(vec![u[i], u[j], l[j]]);
    }
    f.iter_mut().for_each(|t| t.sort_unstable());
    f.sort();
    f
}

fn polygon_facets(n: usize) -> Vec<Vec<usize>> {
    (1..=n).map(|i| {
        let mut e = vec![i, if i == n { 1 } else { i + 1 }];
        e.sort_unstable();
        e
    }).collect()
}

/// Looks up a built-in complex by name.
///
/// Accepted names: `simplex(n)`, `boundary_simplex(n)`, `polygon(n)` (n≥3),
/// `bipyramid(n)` (n≥5, the suspension of an (n−2)-gon), `T4`, `C8`, `O6`,
/// `D20`, `I12`, `flag9`. Case-insensitive.
pub fn zoo(name: &str) -> Result<ZooEntry> {
    let lower = name.trim().to_ascii_lowercase();
    let parse_arg = |prefix: &str| -> Result<usize> {
        let inner = lower
            .strip_prefix(prefix)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::NotFound(format!("unknown zoo entry: {name}")))?;
        inner
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad numeric argument in zoo name: {name}")))
    };

    let simplicial = |name: &str, m: usize, facets: Vec<Vec<usize>>| ZooEntry {
        name: name.to_string(),
        ground_size: m,
        facets,
        is_simplicial: true,
    };

    if lower.starts_with("simplex") {
        let n = parse_arg("simplex")?;
        // Δⁿ has n+1 vertices
        return Ok(simplicial(&lower, n + 1, vec![(1..=n + 1).collect()]));
    }
    if lower.starts_with("boundary_simplex") {
        let n = parse_arg("boundary_simplex")?;
        if n == 0 {
            return Err(Error::Parse("boundary_simplex(n) requires n >= 1".into()));
        }
        let m = n + 1;
        let facets = (1..=m)
            .map(|skip| (1..=m).filter(|&v| v != skip).collect())
            .collect();
        return Ok(simplicial(&lower, m, facets));
    }
    if lower.starts_with("polygon") {
        let n = parse_arg("polygon")?;
        if n < 3 {
            return Err(Error::Parse("polygon(n) requires n >= 3".into()));
        }
        return Ok(simplicial(&lower, n, polygon_facets(n)));
    }
    if lower.starts_with("bipyramid") {
        let n = parse_arg("bipyramid")?;
        if n < 5 {
            return Err(Error::Parse("bipyramid(n) requires n >= 5".into()));
        }
        // suspension of an (n-2)-gon: apexes 1 and 2, polygon on 3..n
        let mut facets = Vec::new();
        for e in polygon_facets(n - 2) {
            for apex in [1usize, 2] {
                facets.push(vec![apex, e[0] + 2, e[1] + 2]);
            }
        }
        return Ok(simplicial(&lower, n, facets));
    }

    match lower.as_str() {
        "t4" => {
            // tetrahedron boundary ∂Δ³
            Ok(simplicial(
                "t4",
                4,
                vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]],
            ))
        }
        "o6" => {
            // octahedron boundary with non-edges {1,4},{2,5},{3,6}
            let mut facets = Vec::new();
            for a in [1usize, 4] {
                for b in [2usize, 5] {
                    for c in [3usize, 6] {
                        let mut t = vec![a, b, c];
                        t.sort_unstable();
                        facets.push(t);
                    }
                }
            }
            facets.sort();
            Ok(simplicial("o6", 6, facets))
        }
        "i12" => Ok(simplicial("i12", 12, icosahedron_facets())),
        "c8" => {
            // cube boundary: bottom 1-2-3-4, top 5-6-7-8 stacked above
            Ok(ZooEntry {
                name: "c8".into(),
                ground_size: 8,
                facets: vec![
                    vec![1, 2, 3, 4],
                    vec![5, 6, 7, 8],
                    vec![1, 2, 6, 5],
                    vec![2, 3, 7, 6],
                    vec![3, 4, 8, 7],
                    vec![4, 1, 5, 8],
                ],
                is_simplicial: false,
            })
        }
        "d20" => {
            // dual of the icosahedron: one pentagonal facet per icosahedron
            // vertex, whose members are the (1-based) indices of the
            // icosahedron facets containing it, in the sorted facet order
            let tris = icosahedron_facets();
            let facets = (1..=12usize)
                .map(|v| {
                    tris.iter()
                        .enumerate()
                        .filter(|(_, t)| t.contains(&v))
                        .map(|(i, _)| i + 1)
                        .collect::<Vec<_>>()
                })
                .collect();
            Ok(ZooEntry {
                name: "d20".into(),
                ground_size: 20,
                facets,
                is_simplicial: false,
            })
        }
        "flag9" => Ok(simplicial(
            "flag9",
            9,
            vec![
                vec![1, 2, 5],
                vec![1, 2, 8],
                vec![1, 4, 8],
                vec![2, 3, 6],
                vec![2, 5, 6],
                vec![3, 4, 7],
                vec![3, 6, 7],
                vec![4, 7, 8],
                vec![5, 6, 9],
                vec![6, 7, 9],
                vec![7, 8, 9],
            ],
        )),
        "square" => Ok(simplicial("square", 4, polygon_facets(4))),
        "pentagon" => Ok(simplicial("pentagon", 5, polygon_facets(5))),
        _ => Err(Error::NotFound(format!("unknown zoo entry: {name}"))),
    }
}

/// Convenience: a zoo entry as a simplicial complex, erroring on C8/D20.
pub fn zoo_complex(name: &str) -> Result<SimplicialComplex> {
    zoo(name)?.into_complex()
}

/// The named simplicial corpus used by tests and verification sweeps.
pub fn corpus() -> Vec<(String, SimplicialComplex)> {
    let names = [
        "boundary_simplex(2)",
        "boundary_simplex(3)",
        "boundary_simplex(4)",
        "polygon(4)",
        "polygon(5)",
        "polygon(6)",
        "polygon(7)",
        "polygon(8)",
        "O6",
        "I12",
        "bipyramid(5)",
        "bipyramid(7)",
        "flag9",
    ];
    names
        .iter()
        .map(|n| (n.to_string(), zoo_complex(n).unwrap()))
        .collect()
}

/// The standard 7-vertex (Csaszar / Moebius–Kantor) torus triangulation:
/// triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
pub fn torus7() -> SimplicialComplex {
    let wrap = |x: usize| (x - 1) % 7 + 1;
    let mut facets = Vec::new();
    for i in 1..=7usize {
        let mut a = vec![i, wrap(i + 1), wrap(i + 3)];
        let mut b = vec![i, wrap(i + 2), wrap(i + 3)];
        a.sort_unstable();
        b.sort_unstable();
        facets.push(a);
        facets.push(b);
    }
    let refs: Vec<&[usize]> = facets.iter().map(|f| f.as_slice()).collect();
    SimplicialComplex::from_facet_slices(7, &refs).unwrap()
}

/// A full-subcomplex-preserving check that an entry really is the boundary
/// of the named Platonic solid at the f-vector level.
pub fn platonic_f_vector(entry: &ZooEntry) -> (usize, usize, usize) {
    let verts: std::collections::BTreeSet<usize> =
        entry.facets.iter().flatten().copied().collect();
    (verts.len(), entry.edge_count(), entry.facets.len())
}
