//! The two matching polynomials of a small weighted graph, computed by
//! every route the crate offers.
//!
//! mu counts matchings weighted by |w(M)|^2 and ignores vertex weights;
//! eta additionally charges each uncovered vertex u a factor (x - w1(u)).
//! Both are computed here by direct enumeration, by the closed matching
//! form, and by the deletion recurrence, and all routes must agree.

use matchpoly::error::Result;
use matchpoly::graph::{EnumerationCaps, WeightedGraph};
use matchpoly::matching::{
    eta_by_definition, eta_by_recurrence, eta_matching_form, mu_by_enumeration, mu_by_recurrence,
};
use matchpoly::rational::{rat_int, GaussianRational};

fn main() -> Result<()> {
    let caps = EnumerationCaps::default();

    // Two vertices with weights 1 and 3, joined by an edge of weight 2+i.
    let k2 = WeightedGraph::from_parts(
        Some(vec!["u".into(), "v".into()]),
        vec![rat_int(1), rat_int(3)],
        vec![(0, 1, GaussianRational::of(2, 1))],
    )?;
    println!("K2 with w1 = (1, 3) and w(uv) = 2+i");
    println!("  mu  = {}", mu_by_recurrence(&k2)?);
    println!("  eta = {}", eta_by_recurrence(&k2)?);

    // A triangle with complex edge weights.
    let triangle = WeightedGraph::from_parts(
        Some(vec!["a".into(), "b".into(), "c".into()]),
        vec![rat_int(1), rat_int(2), rat_int(3)],
        vec![
            (0, 1, GaussianRational::of(1, 2)),
            (1, 2, GaussianRational::of(2, -7)),
            (0, 2, GaussianRational::of(-3, 2)),
        ],
    )?;
    let eta = eta_by_recurrence(&triangle)?;
    println!("weighted triangle");
    println!("  eta = {eta}");

    // Three independent routes to the same polynomial.
    assert_eq!(eta, eta_by_definition(&triangle, &caps)?);
    assert_eq!(eta, eta_matching_form(&triangle, &caps)?);
    println!("  definition, matching form, and recurrence agree");

    // mu is the special case of eta with all vertex weights zero.
    let mu = mu_by_recurrence(&triangle)?;
    assert_eq!(mu, mu_by_enumeration(&triangle, &caps)?);
    println!("  mu  = {mu}");

    // Both polynomials are multiplicative over connected components.
    let mut labels: Vec<String> = k2.labels().to_vec();
    labels.extend(triangle.labels().iter().map(|l| format!("t{l}")));
    let mut weights = k2.vertex_weights().to_vec();
    weights.extend_from_slice(triangle.vertex_weights());
    let mut edges: Vec<_> = k2.edges().map(|(u, v, w)| (u, v, w.clone())).collect();
    edges.extend(triangle.edges().map(|(u, v, w)| (u + 2, v + 2, w.clone())));
    let disjoint = WeightedGraph::from_parts(Some(labels), weights, edges)?;
    let product = eta_by_recurrence(&k2)?.mul(&eta);
    assert_eq!(eta_by_recurrence(&disjoint)?, product);
    println!("disjoint union: eta(K2 + triangle) = eta(K2) * eta(triangle)");

    Ok(())
}
