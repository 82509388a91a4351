//! Acceptance suite: one test per criterion, each ending in a single
//! printed PASS line (a failed assertion is the FAIL line). Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use macx_core::belts::{belt_through_missing_edge, is_polygon_boundary};
use macx_core::complex::are_isomorphic;
use macx_core::decompose::irreducible_decomposition;
use macx_core::graded_ring::{
    algebra_from_hochster, connected_sum_of_sphere_products, fingerprint, gyration,
    gyration_iter, match_factors, quotient_by_top, sphere_product_ring, sphere_ring,
};
use macx_core::homology::Coeff;
use macx_core::linalg::{Field, PrimeField, Rationals};
use macx_core::moment_angle::{
    bigraded_betti, cross_validate_gorenstein, generation_by_degree_one, hochster_ring,
    lbc_check, rank_h3_invariant, HochsterRing,
};
use macx_core::verify::{
    verify_boundary_sum, verify_thm4_on, verify_thm4_on_with, verify_thm5, Verdict,
};
use macx_core::zoo::{corpus, torus7, zoo_complex};
use macx_core::{SimplicialComplex, VertexSet};
use std::time::Instant;

/// Betti numbers of the classical connected-sum description of a polygonal
/// moment-angle manifold: ♯_k k·C(m−2,k+1) copies of S^{k+2}×S^{m−k}.
fn classical_polygon_betti(m: usize) -> Vec<usize> {
    fn choose(n: usize, k: usize) -> usize {
        macx_core::graded_ring::binomial(n, k)
    }
    let mut betti = vec![0usize; m + 3];
    betti[0] = 1;
    betti[m + 2] = 1;
    for k in 1..=m - 3 {
        let copies = k * choose(m - 2, k + 1);
        betti[k + 2] += copies;
        betti[m - k] += copies;
    }
    betti
}

#[test]
fn criterion_01_polygon_betti_profiles() {
    let start = Instant::now();
    for m in 4..=8usize {
        let k = zoo_complex(&format!("polygon({m})")).unwrap();
        let computed = bigraded_betti(&k, Coeff::Integers);
        assert!(
            computed.torsion_by_degree().is_empty(),
            "polygon({m}): unexpected torsion"
        );
        assert_eq!(
            computed.betti(),
            classical_polygon_betti(m),
            "polygon({m}) Betti profile"
        );
    }
    println!(
        "[criterion 1] PASS — polygon Betti profiles m=4..8 match the classical \
         connected-sum description ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_02_join_multiplicativity_o6() {
    let start = Instant::now();
    let b = bigraded_betti(&zoo_complex("O6").unwrap(), Coeff::Integers);
    // (1 + t^3)^3 = 1 + 3t^3 + 3t^6 + t^9
    assert_eq!(b.betti(), vec![1, 0, 0, 3, 0, 0, 3, 0, 0, 1]);
    assert!(b.torsion_by_degree().is_empty());
    println!(
        "[criterion 2] PASS — Betti polynomial of Z_O6 is (1+t^3)^3 ({:?})",
        start.elapsed()
    );
}

/// u * v extended bilinearly where u is a sparse combination of classes.
fn prod_vec<F: Field>(
    ring: &HochsterRing<F>,
    u: &[(usize, F::Elem)],
    k: usize,
) -> Vec<(usize, F::Elem)> {
    let f = ring.field;
    let mut acc: std::collections::BTreeMap<usize, F::Elem> = Default::default();
    for (i, c) in u {
        for (j, d) in ring.star_product(*i, k) {
            let t = f.mul(c, &d);
            let e = acc.entry(j).or_insert_with(|| f.zero());
            *e = f.add(e, &t);
        }
    }
    acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
}

fn sign_suite_for<F: Field>(field: F, name: &str, k: &SimplicialComplex) {
    let ring = hochster_ring(field, k);
    let n = ring.dim();
    // graded commutativity, exhaustively over all nonzero products
    let products = ring.all_products();
    for (&(i, j), v) in &products {
        let flip = products.get(&(j, i)).cloned().unwrap_or_default();
        let sign = ring.total_degree(i) * ring.total_degree(j);
        let expect: Vec<(usize, F::Elem)> = v
            .iter()
            .map(|(idx, c)| {
                (*idx, if sign % 2 == 0 { c.clone() } else { field.neg(c) })
            })
            .collect();
        assert_eq!(flip, expect, "{name}: commutativity at ({i},{j})");
    }
    // associativity on >= 10^3 deterministic pseudo-random triples
    if n == 0 {
        return;
    }
    let mut seed: u64 = 0xdeadbeefcafef00d ^ (n as u64);
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed as usize
    };
    for _ in 0..1000 {
        let (i, j, l) = (next() % n, next() % n, next() % n);
        let ij = ring.star_product(i, j);
        let jl = ring.star_product(j, l);
        let left = prod_vec(&ring, &ij, l);
        // u * (v*w) = sum over entries of v*w of (u*e) — use commutativity-free
        // direct evaluation: (v*w) entries multiplied on the left by u
        let f = ring.field;
        let mut acc: std::collections::BTreeMap<usize, F::Elem> = Default::default();
        for (e, c) in &jl {
            for (t, d) in ring.star_product(i, *e) {
                let val = f.mul(c, &d);
                let slot = acc.entry(t).or_insert_with(|| f.zero());
                *slot = f.add(slot, &val);
            }
        }
        let right: Vec<(usize, F::Elem)> =
            acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        assert_eq!(left, right, "{name}: associativity at ({i},{j},{l})");
    }
}

#[test]
fn criterion_03_sign_suite() {
    let start = Instant::now();
    let f2 = PrimeField::new(2).unwrap();
    for (name, k) in corpus() {
        sign_suite_for(Rationals, &name, &k);
        sign_suite_for(f2, &name, &k);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "sign suite exceeded 2 min: {elapsed:?}");
    println!(
        "[criterion 3] PASS — graded commutativity (exhaustive) and associativity \
         (1000 random triples each) over Q and F_2 on the corpus ({elapsed:?})"
    );
}

#[test]
fn criterion_04_gorenstein_cross_validation() {
    let start = Instant::now();
    let mut cases: Vec<(String, SimplicialComplex)> = corpus();
    cases.push((
        "cone(boundary_simplex(2))".into(),
        zoo_complex("boundary_simplex(2)").unwrap().cone().unwrap(),
    ));
    cases.push((
        "cone(polygon(5))".into(),
        zoo_complex("polygon(5)").unwrap().cone().unwrap(),
    ));
    cases.push(("torus7".into(), torus7()));
    for (name, k) in &cases {
        // cross_validate_gorenstein errors out if the two verdicts disagree
        cross_validate_gorenstein(k, Coeff::Rationals)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    println!(
        "[criterion 4] PASS — Stanley criterion and map-level Alexander duality agree \
         on {} complexes ({:?})",
        cases.len(),
        start.elapsed()
    );
}

/// A second, distinct gluing: largest facets, reversed matching.
fn alternative_gluing(
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
) -> SimplicialComplex {
    let f1 = *k1.facets().last().unwrap();
    let f2 = *k2.facets().last().unwrap();
    let matching: Vec<(usize, usize)> =
        f2.iter().zip(f1.iter().collect::<Vec<_>>().into_iter().rev()).collect();
    k1.connected_sum(f1, k2, f2, &matching).unwrap()
}

#[test]
fn criterion_05_thm4_equivalence() {
    let start = Instant::now();
    // rational pairs
    for (a, b) in [
        ("boundary_simplex(2)", "boundary_simplex(2)"),
        ("boundary_simplex(3)", "boundary_simplex(3)"),
        ("O6", "O6"),
    ] {
        let k1 = zoo_complex(a).unwrap();
        let k2 = zoo_complex(b).unwrap();
        for glued in [
            k1.connected_sum_default(&k2).unwrap(),
            alternative_gluing(&k1, &k2),
        ] {
            let rep = verify_thm4_on(&k1, &k2, &glued).unwrap();
            assert_eq!(rep.verdict, Verdict::Pass, "({a},{b})");
        }
    }
    // the large pair runs over a big prime field: rational arithmetic on the
    // ~25000-dimensional ring exhausts memory, and the formula holds over
    // any field
    let fp = PrimeField::new(1_000_000_007).unwrap();
    let o6 = zoo_complex("O6").unwrap();
    let i12 = zoo_complex("I12").unwrap();
    for glued in [
        o6.connected_sum_default(&i12).unwrap(),
        alternative_gluing(&o6, &i12),
    ] {
        let rep = verify_thm4_on_with(fp, &o6, &i12, &glued).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass, "(O6,I12)");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "thm4 suite exceeded 5 min: {elapsed:?}");
    println!(
        "[criterion 5] PASS — connected-sum ring formula matches the computed ring \
         for 4 pairs x 2 gluings ({elapsed:?})"
    );
}

#[test]
fn criterion_06_thm5_equivalence() {
    let start = Instant::now();
    // K = ∂Δ³ * ∂Δ³ on vertices 1..8; σ∪τ with one vertex per factor
    let t = zoo_complex("boundary_simplex(3)").unwrap();
    let k = t.join(&t).unwrap();
    let sigma = VertexSet::from_slice(&[1, 5], k.ground_size()).unwrap();
    let rep = verify_thm5(&k, sigma).unwrap();
    assert_eq!(rep.verdict, Verdict::Pass, "certificate {:?}", rep.certificate);
    // the paper's example list for n1=n2=3, |σ|=|τ|=1:
    // (S^8×S^7) # 3·(S^7×S^8) # (S^12×S^3)
    let example = connected_sum_of_sphere_products(Rationals, &[(7, 8, 4), (3, 12, 1)]).unwrap();
    assert_eq!(rep.computed.unwrap(), fingerprint(&example));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "thm5 exceeded 10 min: {elapsed:?}");
    println!(
        "[criterion 6] PASS — stellar-subdivision formula on ∂Δ³*∂Δ³ matches both the \
         computed ring and the 5-term sphere-product list ({elapsed:?})"
    );
}

#[test]
fn criterion_07_boundary_simplex_summand() {
    let start = Instant::now();
    let o6 = zoo_complex("O6").unwrap();
    assert!(verify_boundary_sum(Rationals, &o6).unwrap(), "O6");
    let fp = PrimeField::new(1_000_000_007).unwrap();
    let i12 = zoo_complex("I12").unwrap();
    assert!(verify_boundary_sum(fp, &i12).unwrap(), "I12");
    println!(
        "[criterion 7] PASS — K#∂Δ³ ring equals G(H̃*(Z_K)) # sphere products for \
         O6 and I12 ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_08_concrete_numbers() {
    let start = Instant::now();
    // triple equality for every 2-sphere in the corpus
    let expected = [("boundary_simplex(3)", 0usize), ("O6", 3), ("I12", 36)];
    for (name, k) in corpus() {
        if k.dim() != 2 || name == "flag9" {
            continue;
        }
        let (formula, missing, computed) = rank_h3_invariant(&k).unwrap();
        assert_eq!(formula, missing, "{name}");
        assert_eq!(formula, computed, "{name}");
        if let Some((_, want)) = expected.iter().find(|(n, _)| *n == name) {
            assert_eq!(formula, *want, "{name}");
        }
    }
    // LBC tight on O6 and I12
    for (name, edges) in [("O6", 12usize), ("I12", 30)] {
        let rep = lbc_check(&zoo_complex(name).unwrap()).unwrap();
        assert!(rep.holds, "{name}");
        assert_eq!(rep.edges, edges, "{name}");
        assert_eq!(rep.bound, edges as i64, "{name} should be tight");
    }
    println!(
        "[criterion 8] PASS — rank H^3 triple equality on corpus 2-spheres \
         (O6→3, ∂Δ³→0, I12→36) and LBC tight on O6/I12 ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_09_flag_machinery() {
    let start = Instant::now();
    // belts through every missing edge of every flag 2-sphere in the corpus
    for (name, k) in corpus() {
        if k.dim() != 2 || !k.is_flag() || name == "flag9" {
            continue;
        }
        for e in k.missing_faces() {
            assert_eq!(e.len(), 2, "{name}: flag missing faces are edges");
            let belt = belt_through_missing_edge(&k, e)
                .unwrap_or_else(|err| panic!("{name}: no belt through {e}: {err}"));
            assert!(e.is_subset_of(belt));
            assert!(is_polygon_boundary(&k, belt), "{name}: {belt}");
        }
        // generation by degree one holds for flag 2-spheres
        let rep = generation_by_degree_one(&hochster_ring(Rationals, &k));
        assert!(rep.generated, "{name}");
    }
    // flag9: fails, with the paper's witness behavior across all 2^9 divisions
    let sweep_start = Instant::now();
    let flag9 = zoo_complex("flag9").unwrap();
    let rep = generation_by_degree_one(&hochster_ring(Rationals, &flag9));
    assert!(!rep.generated);
    let (target, partitions, both_nonzero) = rep.partition_sweep.expect("witness sweep");
    assert_eq!(target, VertexSet::full(9));
    assert_eq!(partitions, 512);
    assert_eq!(both_nonzero, 0, "no division I⊔J=[9] has both H̃⁰ factors nonzero");
    let sweep = sweep_start.elapsed();
    assert!(sweep.as_secs() < 60, "partition sweep exceeded 1 min: {sweep:?}");
    println!(
        "[criterion 9] PASS — belts exist through all missing edges of flag corpus \
         2-spheres; generation holds for them and fails for flag9 with an empty \
         512-division sweep ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_10_decomposition_matching() {
    let start = Instant::now();
    // B5 = T4 # T4 decomposes into two tetrahedra
    let t4 = zoo_complex("T4").unwrap();
    let b5 = zoo_complex("bipyramid(5)").unwrap();
    let factors = irreducible_decomposition(&b5).unwrap();
    assert_eq!(factors.len(), 2);
    for f in &factors {
        assert!(are_isomorphic(&f.on_own_vertices(), &t4));
    }
    // a three-fold sum has three factors
    let triple = t4
        .connected_sum_default(&t4)
        .unwrap()
        .connected_sum_default(&t4)
        .unwrap();
    let factors3 = irreducible_decomposition(&triple).unwrap();
    assert_eq!(factors3.len(), 3);
    // factor fingerprints match across different gluing choices
    let glue_a = zoo_complex("O6")
        .unwrap()
        .connected_sum_default(&zoo_complex("O6").unwrap())
        .unwrap();
    let glue_b = alternative_gluing(&zoo_complex("O6").unwrap(), &zoo_complex("O6").unwrap());
    let fps = |k: &SimplicialComplex| {
        irreducible_decomposition(k)
            .unwrap()
            .into_iter()
            .map(|f| {
                let ring =
                    algebra_from_hochster(&hochster_ring(Rationals, &f.on_own_vertices()));
                fingerprint(&quotient_by_top(&ring).unwrap())
            })
            .collect::<Vec<_>>()
    };
    let (fa, fb) = (fps(&glue_a), fps(&glue_b));
    assert!(match_factors(&fa, &fb).is_some(), "gluing-independent factors");
    println!(
        "[criterion 10] PASS — B5 → two ∂Δ³ factors, T4#T4#T4 → three factors, \
         factor fingerprints match across gluings ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_11_gyration_identities() {
    let start = Instant::now();
    for n in 2..=6usize {
        let g = gyration(&sphere_ring(Rationals, n)).unwrap();
        assert_eq!(
            g.hilbert().into_iter().collect::<Vec<_>>(),
            vec![(n + 1, 1)],
            "G(S^{n})"
        );
    }
    let rings = [
        sphere_product_ring(Rationals, 3, 3),
        connected_sum_of_sphere_products(Rationals, &[(3, 4, 5)]).unwrap(),
        algebra_from_hochster(&hochster_ring(Rationals, &zoo_complex("O6").unwrap())),
    ];
    for a in &rings {
        for r in 1..=4usize {
            let g = gyration_iter(a, r).unwrap();
            let expected = a.dim() * (1 << r) - ((1 << r) - 1) * a.top_classes().len();
            assert_eq!(g.dim(), expected);
        }
    }
    println!(
        "[criterion 11] PASS — G(H̃*(S^n)) = H̃*(S^(n+1)) for n=2..6 and the \
         dim G^r closed form for r=1..4 on three rings ({:?})",
        start.elapsed()
    );
}
