//! Acceptance gate for the crate: eight criteria, one test each, every
//! test ending in a single printed verdict line. Run them all with
//!
//!     cargo test --test acceptance -- --nocapture
//!
//! All randomness is seeded, so every run exercises the same instances.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matchpoly::charpoly::{build_matrix, charpoly_of_graph, charpoly_via_eta, w2_of_cycle};
use matchpoly::decomp::{
    classify_vertex, decompose, deficiency, multiplicity, parter_wiener_find, stability_check,
    ParterOutcome,
};
use matchpoly::demo::{demo_graph, DEMO_NAMES};
use matchpoly::error::Result;
use matchpoly::graph::{EnumerationCaps, WeightedGraph};
use matchpoly::matching::{
    derivative_identity_check, edge_recurrence_check, eta_by_definition, eta_by_recurrence,
    eta_matching_form, matching_root_radius, mu_by_recurrence,
};
use matchpoly::pathtree::{
    divisibility_quotient, endpoint_path_identity_check, path_tree, ratio_identity_check,
    DEFAULT_PATH_TREE_CAP,
};
use matchpoly::poly::RationalPolynomial;
use matchpoly::rational::{rat, rat_int, GaussianRational, Rational};
use matchpoly::roots::{
    count_distinct_roots_above, count_distinct_roots_below, rational_roots,
    real_root_count_with_multiplicity, ThetaSpec,
};

fn int_poly(coeffs: &[i64]) -> RationalPolynomial {
    RationalPolynomial::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-3i64..=3);
    let den = if rng.gen_bool(0.25) { 2 } else { 1 };
    rat(num, den)
}

fn nonzero_weight(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let w = GaussianRational::new(small_rational(rng), small_rational(rng));
        if !w.is_zero() {
            return w;
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng, sizes: RangeInclusive<usize>) -> WeightedGraph {
    let n = rng.gen_range(sizes);
    let weights: Vec<Rational> = (0..n)
        .map(|_| if rng.gen_bool(0.3) { rat_int(0) } else { small_rational(rng) })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.35) {
                edges.push((u, v, nonzero_weight(rng)));
            }
        }
    }
    WeightedGraph::from_parts(None, weights, edges).expect("generator emits valid graphs")
}

fn random_connected_graph(rng: &mut ChaCha8Rng, sizes: RangeInclusive<usize>) -> WeightedGraph {
    let n = rng.gen_range(sizes);
    let weights: Vec<Rational> = (0..n).map(|_| small_rational(rng)).collect();
    let mut pairs = BTreeSet::new();
    for v in 1..n {
        pairs.insert((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.25) {
                pairs.insert((u, v));
            }
        }
    }
    let edges = pairs.into_iter().map(|(u, v)| (u, v, nonzero_weight(rng))).collect();
    WeightedGraph::from_parts(None, weights, edges).expect("generator emits valid graphs")
}

fn random_tree(rng: &mut ChaCha8Rng, sizes: RangeInclusive<usize>) -> WeightedGraph {
    let n = rng.gen_range(sizes);
    let weights: Vec<Rational> = (0..n).map(|_| small_rational(rng)).collect();
    let edges = (1..n).map(|v| (rng.gen_range(0..v), v, nonzero_weight(rng))).collect();
    WeightedGraph::from_parts(None, weights, edges).expect("generator emits valid graphs")
}

fn disjoint_union(a: &WeightedGraph, b: &WeightedGraph) -> WeightedGraph {
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("a{l}")).collect();
    labels.extend(b.labels().iter().map(|l| format!("b{l}")));
    let mut weights = a.vertex_weights().to_vec();
    weights.extend_from_slice(b.vertex_weights());
    let mut edges: Vec<_> = a.edges().map(|(u, v, w)| (u, v, w.clone())).collect();
    let off = a.n();
    edges.extend(b.edges().map(|(u, v, w)| (u + off, v + off, w.clone())));
    WeightedGraph::from_parts(Some(labels), weights, edges).expect("disjoint union stays valid")
}

fn strip_vertex_weights(g: &WeightedGraph) -> WeightedGraph {
    WeightedGraph::from_parts(
        Some(g.labels().to_vec()),
        vec![rat_int(0); g.n()],
        g.edges().map(|(u, v, w)| (u, v, w.clone())).collect(),
    )
    .expect("stripping weights stays valid")
}

// The deterministic instance pools shared between criteria 2-4.
fn differential_suite_graphs() -> Vec<WeightedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC2);
    (0..200).map(|_| random_graph(&mut rng, 1..=8)).collect()
}

fn path_tree_suite_graphs() -> Vec<WeightedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC3);
    let mut graphs: Vec<WeightedGraph> =
        (0..40).map(|_| random_connected_graph(&mut rng, 2..=7)).collect();
    // Trees are the boundary case: the path-tree is the tree itself.
    graphs.extend((0..10).map(|_| random_tree(&mut rng, 2..=7)));
    graphs
}

#[test]
fn criterion_1_published_examples() -> Result<()> {
    let caps = EnumerationCaps::default();

    let k2 = demo_graph("k2")?;
    assert_eq!(eta_by_recurrence(&k2)?, int_poly(&[-2, -4, 1]));
    assert_eq!(charpoly_of_graph(&k2)?, int_poly(&[-2, -4, 1]));

    let triangle = demo_graph("triangle")?;
    assert_eq!(eta_by_recurrence(&triangle)?, int_poly(&[88, -60, -6, 1]));
    assert_eq!(charpoly_of_graph(&triangle)?, int_poly(&[196, -60, -6, 1]));
    let cycles = triangle.enumerate_cycles(&caps)?;
    assert_eq!(cycles.len(), 1);
    assert_eq!(w2_of_cycle(&triangle, &cycles[0])?, rat_int(-108));

    // Same edge set, two vertex orders, two spectra.
    let ring = demo_graph("c4-ring")?;
    let crossed = demo_graph("c4-crossed")?;
    assert_eq!(charpoly_of_graph(&ring)?, int_poly(&[4, 0, -4, 0, 1]));
    assert_eq!(charpoly_of_graph(&crossed)?, int_poly(&[0, 0, -4, 0, 1]));
    assert_eq!(eta_by_recurrence(&ring)?, eta_by_recurrence(&crossed)?);

    let bowtie = demo_graph("bowtie")?;
    let expected = int_poly(&[-35, 135, -152, 70, -14, 1]);
    assert_eq!(eta_by_recurrence(&bowtie)?, expected);
    assert_eq!(charpoly_of_graph(&bowtie)?, expected);

    println!("criterion 1 (published worked examples): PASS");
    Ok(())
}

#[test]
fn criterion_2_differential_identity_suite() -> Result<()> {
    let caps = EnumerationCaps::default();
    let graphs = differential_suite_graphs();
    assert!(graphs.len() >= 200);
    for g in &graphs {
        let eta = eta_by_recurrence(g)?;
        assert_eq!(eta, eta_by_definition(g, &caps)?, "definition route disagrees");
        assert_eq!(eta, eta_matching_form(g, &caps)?, "matching form disagrees");
        assert_eq!(
            charpoly_of_graph(g)?,
            charpoly_via_eta(g, &caps)?,
            "determinant and cycle expansion disagree"
        );
        for (u, v, _) in g.edges() {
            assert!(edge_recurrence_check(g, u, v)?, "edge recurrence fails at ({u}, {v})");
        }
        assert!(derivative_identity_check(g)?, "derivative identity fails");
        if g.n() <= 6 {
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    assert!(
                        endpoint_path_identity_check(g, u, v, &caps)?,
                        "endpoint-path identity fails at ({u}, {v})"
                    );
                }
            }
        }
    }
    println!("criterion 2 (differential identity suite, {} graphs): PASS", graphs.len());
    Ok(())
}

#[test]
fn criterion_3_path_tree_suite() -> Result<()> {
    let graphs = path_tree_suite_graphs();
    assert!(graphs.len() >= 50);
    let mut trees_seen = 0;
    for g in &graphs {
        for u in 0..g.n() {
            assert!(
                ratio_identity_check(g, u, DEFAULT_PATH_TREE_CAP)?,
                "ratio identity fails from vertex {u}"
            );
        }
        // All graphs in this pool are connected, so the ratio sharpens to
        // exact divisibility. exact_div inside the quotient already
        // rejects a nonzero remainder; multiply back anyway.
        let q = divisibility_quotient(g, 0, DEFAULT_PATH_TREE_CAP)?;
        let t = path_tree(g, 0, DEFAULT_PATH_TREE_CAP)?;
        assert_eq!(eta_by_recurrence(g)?.mul(&q), eta_by_recurrence(t.tree())?);
        if g.is_tree() {
            trees_seen += 1;
            assert_eq!(
                eta_by_recurrence(t.tree())?,
                eta_by_recurrence(g)?,
                "a tree must reproduce its own matching polynomial"
            );
        }
    }
    assert!(trees_seen >= 10, "the pool must include tree inputs");
    println!("criterion 3 (path-tree suite, {} connected graphs): PASS", graphs.len());
    Ok(())
}

#[test]
fn criterion_4_real_roots_and_bounds() -> Result<()> {
    let mut pool: Vec<WeightedGraph> = Vec::new();
    for name in DEMO_NAMES {
        pool.push(demo_graph(name)?);
    }
    pool.extend(differential_suite_graphs());
    pool.extend(path_tree_suite_graphs());

    let mut bounded = 0;
    for g in &pool {
        let eta = eta_by_recurrence(g)?;
        let degree = eta.degree().expect("eta is monic, never zero");
        assert_eq!(
            real_root_count_with_multiplicity(&eta)?,
            degree,
            "eta must have a full set of real roots"
        );

        // The radius bound speaks about zero vertex weights only.
        let stripped = strip_vertex_weights(g);
        let mu = mu_by_recurrence(&stripped)?;
        if let Some(r) = matching_root_radius(&stripped) {
            bounded += 1;
            assert_eq!(count_distinct_roots_above(&mu, &r)?, 0, "root above the radius");
            assert_eq!(count_distinct_roots_below(&mu, &(-r.clone()))?, 0, "root below the radius");
        }
    }
    println!(
        "criterion 4 (real-rootedness on {} polynomials, radius bound on {}): PASS",
        pool.len(),
        bounded
    );
    Ok(())
}

fn assert_decomposition_invariants(g: &WeightedGraph, theta: &ThetaSpec) -> Result<()> {
    let mult = multiplicity(g, theta)?;

    // Deleting any vertex moves the multiplicity by at most one, and a
    // positive multiplicity forces at least one essential vertex.
    let mut essentials = 0;
    for v in 0..g.n() {
        let m = multiplicity(&g.delete_vertex(v)?, theta)?;
        assert!(m + 1 >= mult && m <= mult + 1, "interlacing broken at vertex {v}");
        if m + 1 == mult {
            essentials += 1;
        }
    }
    if mult >= 1 {
        assert!(essentials > 0, "positive multiplicity without an essential vertex");
    }

    let d = decompose(g, theta)?;
    assert_eq!(d.mult(), mult);

    // D, A, P, N partition the vertex set.
    let mut seen = vec![0usize; g.n()];
    for part in [d.d_set(), d.a_set(), d.p_set(), d.n_set()] {
        for &v in part {
            seen[v] += 1;
        }
    }
    assert!(seen.iter().all(|&c| c == 1), "D, A, P, N must partition the vertices");

    // Counting identity, and every critical component is minimal: it
    // carries theta exactly once and loses it under any deletion.
    assert_eq!(d.critical_components().len(), d.a_set().len() + mult);
    let d_vertices: BTreeSet<usize> = d.d_set().iter().copied().collect();
    let mut covered = BTreeSet::new();
    for comp in d.critical_components() {
        let sub = g.induced(comp)?;
        assert_eq!(multiplicity(&sub, theta)?, 1, "critical component multiplicity");
        for i in 0..sub.n() {
            assert_eq!(
                multiplicity(&sub.delete_vertex(i)?, theta)?,
                0,
                "critical components are essential throughout"
            );
        }
        for &v in comp {
            assert!(d_vertices.contains(&v), "critical components live inside D");
            covered.insert(v);
        }
    }
    assert_eq!(covered, d_vertices, "critical components must cover D exactly");

    // Special vertices sit next to the essential core and never hang off
    // a single edge; deleting one leaves the rest of the structure alone.
    for v in 0..g.n() {
        if classify_vertex(g, theta, v)?.special {
            assert!(g.degree(v) >= 2, "special vertex {v} of degree {}", g.degree(v));
        }
    }
    assert!(stability_check(g, theta)?, "stability under deleting A fails");
    Ok(())
}

#[test]
fn criterion_5_decomposition_structure_suite() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC5);
    let mut decomposed = 0;

    for _ in 0..100 {
        let g = random_graph(&mut rng, 2..=8);
        let eta = eta_by_recurrence(&g)?;
        let roots = rational_roots(&eta)?;
        let mut thetas: Vec<ThetaSpec> =
            roots.into_iter().map(|(r, _)| ThetaSpec::rational(r)).collect();
        if thetas.is_empty() {
            // Not a root: multiplicity zero still has to decompose sanely.
            thetas.push(ThetaSpec::rational(rat_int(0)));
        }
        for theta in &thetas {
            assert_decomposition_invariants(&g, theta)?;
        }
        decomposed += 1;
    }

    // Quadratic irrationals enter through a planted component whose
    // matching polynomial is known exactly.
    for i in 0..30 {
        let host = random_graph(&mut rng, 1..=6);
        let (plant, theta) = if i % 2 == 0 {
            // Unit-weight pair with w(uv) = 1+i: eta = x^2 - 2.
            let k2 = WeightedGraph::from_parts(
                None,
                vec![rat_int(0); 2],
                vec![(0, 1, GaussianRational::of(1, 1))],
            )
            .expect("valid pair");
            (k2, ThetaSpec::algebraic(int_poly(&[-2, 0, 1]), rat_int(1), rat_int(2))?)
        } else {
            // Weighted pair: eta = x^2 - 4x - 2, root 2 + sqrt(6).
            let k2 = WeightedGraph::from_parts(
                None,
                vec![rat_int(1), rat_int(3)],
                vec![(0, 1, GaussianRational::of(2, 1))],
            )
            .expect("valid pair");
            (k2, ThetaSpec::algebraic(int_poly(&[-2, -4, 1]), rat_int(4), rat_int(5))?)
        };
        let g = disjoint_union(&host, &plant);
        assert!(multiplicity(&g, &theta)? >= 1);
        assert_decomposition_invariants(&g, &theta)?;
        decomposed += 1;
    }

    assert!(decomposed >= 100);
    println!("criterion 5 (decomposition structure on {decomposed} graphs): PASS");
    Ok(())
}

// Maximum matching by repeated augmentation. Independent of the library:
// a matching is maximum exactly when no alternating simple path joins two
// uncovered vertices, and the exhaustive search below cannot miss one.
fn oracle_max_matching(g: &WeightedGraph) -> usize {
    fn extend(
        g: &WeightedGraph,
        mate: &[Option<usize>],
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        need_matched: bool,
    ) -> Option<Vec<usize>> {
        let last = *path.last().expect("path starts nonempty");
        for &nb in g.neighbors(last) {
            if used[nb] || (mate[last] == Some(nb)) != need_matched {
                continue;
            }
            if !need_matched && mate[nb].is_none() {
                path.push(nb);
                let found = path.clone();
                path.pop();
                return Some(found);
            }
            path.push(nb);
            used[nb] = true;
            if let Some(found) = extend(g, mate, path, used, !need_matched) {
                return Some(found);
            }
            used[nb] = false;
            path.pop();
        }
        None
    }

    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    loop {
        let mut augmented = false;
        for start in 0..n {
            if mate[start].is_some() {
                continue;
            }
            let mut path = vec![start];
            let mut used = vec![false; n];
            used[start] = true;
            if let Some(found) = extend(g, &mate, &mut path, &mut used, false) {
                for pair in found.chunks(2) {
                    mate[pair[0]] = Some(pair[1]);
                    mate[pair[1]] = Some(pair[0]);
                }
                augmented = true;
                break;
            }
        }
        if !augmented {
            break;
        }
    }
    mate.iter().flatten().count() / 2
}

#[test]
fn criterion_6_classical_bridge() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC6);
    let count = 120;
    for _ in 0..count {
        let g = random_graph(&mut rng, 1..=10);
        assert_eq!(
            deficiency(&g)?,
            g.n() - 2 * oracle_max_matching(&g),
            "deficiency disagrees with the augmenting-path oracle"
        );

        // Constant vertex weight c slides eta by c along the x axis.
        let c = small_rational(&mut rng);
        let shifted = WeightedGraph::from_parts(
            Some(g.labels().to_vec()),
            vec![c.clone(); g.n()],
            g.edges().map(|(u, v, w)| (u, v, w.clone())).collect(),
        )?;
        assert_eq!(
            eta_by_recurrence(&shifted)?.shift(&c),
            mu_by_recurrence(&shifted)?,
            "constant-shift lemma fails"
        );
    }
    println!("criterion 6 (classical bridge on {count} graphs): PASS");
    Ok(())
}

// A tree whose spectrum is forced to repeat: several pendant two-vertex
// legs tuned to share the eigenvalue theta hang off one center. Removing
// the center leaves every leg carrying theta, so interlacing pushes the
// multiplicity in the whole tree to at least legs - 1.
fn repeated_eigenvalue_tree(
    rng: &mut ChaCha8Rng,
    legs: usize,
    theta: i64,
) -> (WeightedGraph, ThetaSpec) {
    let norms: [(i64, Rational); 5] = [
        (1, rat_int(1)),
        (2, rat_int(2)),
        (5, rat_int(5)),
        (1, rat_int(1)),
        (2, rat_int(2)),
    ];
    let pick = |rng: &mut ChaCha8Rng, norm: i64| -> GaussianRational {
        match norm {
            1 => {
                if rng.gen_bool(0.5) {
                    GaussianRational::of(1, 0)
                } else {
                    GaussianRational::of(0, 1)
                }
            }
            2 => {
                if rng.gen_bool(0.5) {
                    GaussianRational::of(2, 0)
                } else {
                    GaussianRational::of(0, -2)
                }
            }
            _ => {
                if rng.gen_bool(0.5) {
                    GaussianRational::of(3, 4)
                } else {
                    GaussianRational::of(-4, 3)
                }
            }
        }
    };

    let mut weights = vec![small_rational(rng)];
    let mut edges = Vec::new();
    for _ in 0..legs {
        let (norm, norm_value) = norms[rng.gen_range(0..norms.len())].clone();
        let a = weights.len();
        // Both leg vertices carry weight theta - |w|, so the leg alone has
        // eigenvalues theta and theta - 2|w|.
        let s = rat_int(theta) - norm_value;
        weights.push(s.clone());
        weights.push(s);
        edges.push((a, a + 1, pick(rng, norm)));
        edges.push((0, a, nonzero_weight(rng)));
    }
    // Optional decoration on the center; it vanishes with the center, so
    // the multiplicity argument is untouched. Its weight must dodge theta,
    // or the decoration would smuggle in an extra copy of the eigenvalue.
    if rng.gen_bool(0.5) {
        let v = weights.len();
        let w1 = loop {
            let w1 = small_rational(rng);
            if w1 != rat_int(theta) {
                break w1;
            }
        };
        weights.push(w1);
        edges.push((0, v, nonzero_weight(rng)));
    }
    let g = WeightedGraph::from_parts(None, weights, edges).expect("designed tree is valid");
    (g, ThetaSpec::rational(rat_int(theta)))
}

#[test]
fn criterion_7_parter_vertices_on_trees() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC7);
    let mut trees = 0;
    let mut found_repeated = 0;
    let mut found_simple = 0;

    // Repeated eigenvalues by construction: expect a degree >= 3 vertex
    // whose removal raises the multiplicity, with three branches keeping
    // theta alive.
    for _ in 0..30 {
        let legs = rng.gen_range(3..=5);
        let theta_value = rng.gen_range(-2i64..=2);
        let (g, theta) = repeated_eigenvalue_tree(&mut rng, legs, theta_value);
        assert!(g.n() <= 12);
        assert!(multiplicity(&g, &theta)? >= 2, "construction must repeat theta");
        trees += 1;
        match parter_wiener_find(&build_matrix(&g), &theta)? {
            ParterOutcome::Found(report) => {
                found_repeated += 1;
                assert!(report.degree >= 3);
                assert_eq!(report.mult_after, report.mult_before + 1);
                assert!(report.branches.len() >= 3);
                for b in &report.branches {
                    assert!(b.mult >= 1);
                }
            }
            ParterOutcome::HypothesisNotMet { .. } => {
                panic!("hypothesis holds by construction, a vertex must exist")
            }
        }
    }

    // Multiplicity exactly one with a non-essential vertex: two tuned legs
    // meet at a center, and the theorem promises a degree >= 2 vertex with
    // two branches carrying theta once each.
    for _ in 0..15 {
        let theta_value = rng.gen_range(-2i64..=2);
        let (g, theta) = repeated_eigenvalue_tree(&mut rng, 2, theta_value);
        assert_eq!(multiplicity(&g, &theta)?, 1, "two legs pin the multiplicity to one");
        trees += 1;
        match parter_wiener_find(&build_matrix(&g), &theta)? {
            ParterOutcome::Found(report) => {
                found_simple += 1;
                assert!(report.degree >= 2);
                assert_eq!(report.mult_before, 1);
                assert_eq!(report.mult_after, 2);
                assert!(report.branches.len() >= 2);
                for b in &report.branches {
                    assert_eq!(b.mult, 1);
                }
            }
            ParterOutcome::HypothesisNotMet { .. } => {
                panic!("the center is non-essential by construction")
            }
        }
    }

    // Fully random trees: act on whatever rational eigenvalues exist and
    // take the honest exit when the hypothesis fails.
    for _ in 0..10 {
        let g = random_tree(&mut rng, 2..=12);
        trees += 1;
        let eta = eta_by_recurrence(&g)?;
        let roots = rational_roots(&eta)?;
        let theta = match roots.first() {
            Some((r, _)) => ThetaSpec::rational(r.clone()),
            None => ThetaSpec::rational(rat_int(0)),
        };
        let mult = multiplicity(&g, &theta)?;
        match parter_wiener_find(&build_matrix(&g), &theta)? {
            ParterOutcome::Found(report) => {
                assert_eq!(report.mult_after, report.mult_before + 1);
                if mult >= 2 {
                    assert!(report.degree >= 3 && report.branches.len() >= 3);
                } else {
                    assert!(report.degree >= 2 && report.branches.len() >= 2);
                }
            }
            ParterOutcome::HypothesisNotMet { mult: m, .. } => {
                assert_eq!(m, mult);
                assert!(m <= 1, "multiplicity >= 2 always meets the hypothesis");
            }
        }
    }

    assert!(trees >= 50);
    assert_eq!(found_repeated, 30);
    assert_eq!(found_simple, 15);
    println!("criterion 7 (tree multiplicity raisers on {trees} trees): PASS");
    Ok(())
}

#[test]
fn criterion_8_cli_contract() -> Result<()> {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_matchpoly");
    let run = |args: &[&str]| Command::new(bin).args(args).output().expect("spawn matchpoly");

    // The demo names regenerate the published polynomials byte for byte.
    let cases: [(&[&str], RationalPolynomial); 5] = [
        (&["poly", "--demo", "k2"], int_poly(&[-2, -4, 1])),
        (&["poly", "--demo", "triangle"], int_poly(&[88, -60, -6, 1])),
        (&["charpoly", "--demo", "triangle"], int_poly(&[196, -60, -6, 1])),
        (&["charpoly", "--demo", "c4-ring"], int_poly(&[4, 0, -4, 0, 1])),
        (&["charpoly", "--demo", "bowtie"], int_poly(&[-35, 135, -152, 70, -14, 1])),
    ];
    for (args, poly) in &cases {
        let first = run(args);
        assert!(first.status.success());
        assert_eq!(first.stdout, matchpoly::io::polynomial_json(poly).as_bytes());
        let second = run(args);
        assert_eq!(first.stdout, second.stdout, "byte drift in {args:?}");
    }

    // Round-trip stability of the wire format.
    let g = demo_graph("bowtie")?;
    let text = matchpoly::io::serialize_graph(&g);
    let back = matchpoly::io::parse_graph(&text)?;
    assert_eq!(matchpoly::io::serialize_graph(&back), text);

    // Documented exit codes: 0 success, 1 input, 2 resource.
    assert_eq!(run(&["check", "--demo", "bowtie"]).status.code(), Some(0));
    assert_eq!(run(&["poly", "--demo", "unknown"]).status.code(), Some(1));
    assert_eq!(run(&["poly", "/nonexistent.json"]).status.code(), Some(1));
    assert_eq!(
        run(&["pathtree", "--demo", "bowtie", "--cap", "2"]).status.code(),
        Some(2)
    );

    println!("criterion 8 (command line contract): PASS");
    Ok(())
}
