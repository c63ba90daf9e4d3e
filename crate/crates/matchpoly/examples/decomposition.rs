//! Split a graph around a root of its matching polynomial.
//!
//! Fix a real root theta of eta. Deleting a vertex moves the multiplicity
//! of theta by at most one, which sorts vertices into essential (drops),
//! neutral, and positive (rises). From that classification the graph
//! decomposes into the sets D, A, P, N, with the components of G - A that
//! still carry theta ("critical components") covering D exactly.

use matchpoly::decomp::{decompose, stability_check, VertexKind};
use matchpoly::error::Result;
use matchpoly::graph::WeightedGraph;
use matchpoly::matching::eta_by_recurrence;
use matchpoly::poly::RationalPolynomial;
use matchpoly::rational::{rat_int, GaussianRational};
use matchpoly::roots::ThetaSpec;

fn show(d: &matchpoly::decomp::GEDecomposition) {
    println!("  theta = {}, multiplicity {}", d.theta().describe(), d.mult());
    println!("  D = {:?}", d.d_labels());
    println!("  A = {:?}", d.a_labels());
    println!("  P = {:?}", d.p_labels());
    println!("  N = {:?}", d.n_labels());
    for comp in d.critical_components() {
        println!("  critical component: {:?}", d.label_set(comp));
    }
}

fn main() -> Result<()> {
    // The unit path a - b - c at theta = 0: the endpoints are essential,
    // the middle vertex is special, and the two endpoints form their own
    // critical components.
    let p3 = WeightedGraph::from_parts(
        Some(vec!["a".into(), "b".into(), "c".into()]),
        vec![rat_int(0); 3],
        vec![(0, 1, GaussianRational::one()), (1, 2, GaussianRational::one())],
    )?;
    let theta = ThetaSpec::rational(rat_int(0));
    let d = decompose(&p3, &theta)?;
    println!("P3 at theta = 0");
    show(&d);

    // Deleting a vertex of A leaves the rest of the decomposition alone.
    assert!(stability_check(&p3, &theta)?);
    println!("  stability under deleting A holds");

    // Irrational roots work through their minimal polynomial plus an
    // isolating interval. eta(K2) = x^2 - 4x - 2 has a root 2 + sqrt(6).
    let k2 = WeightedGraph::from_parts(
        Some(vec!["u".into(), "v".into()]),
        vec![rat_int(1), rat_int(3)],
        vec![(0, 1, GaussianRational::of(2, 1))],
    )?;
    let eta = eta_by_recurrence(&k2)?;
    let min_poly = RationalPolynomial::from_coeffs(vec![rat_int(-2), rat_int(-4), rat_int(1)]);
    assert_eq!(eta, min_poly);
    let theta = ThetaSpec::algebraic(min_poly, rat_int(4), rat_int(5))?;
    let d = decompose(&k2, &theta)?;
    println!("K2 at theta = 2 + sqrt(6)");
    show(&d);
    assert!(matches!(d.class(0).kind, VertexKind::Essential));

    Ok(())
}
