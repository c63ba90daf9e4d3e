//! Every root of a matching polynomial is real, and Sturm chains prove it
//! without ever leaving the rationals.

use matchpoly::error::Result;
use matchpoly::graph::WeightedGraph;
use matchpoly::matching::{eta_by_recurrence, matching_root_radius, mu_by_recurrence};
use matchpoly::rational::{rat_int, GaussianRational};
use matchpoly::roots::{
    count_distinct_roots, count_distinct_roots_above, count_distinct_roots_below,
    real_root_count_with_multiplicity,
};

fn main() -> Result<()> {
    // A graph with genuinely complex weights still has an all-real root set.
    let g = WeightedGraph::from_parts(
        Some(vec!["a".into(), "b".into(), "c".into(), "d".into()]),
        vec![rat_int(2), rat_int(-1), rat_int(0), rat_int(5)],
        vec![
            (0, 1, GaussianRational::of(1, 1)),
            (1, 2, GaussianRational::of(0, 3)),
            (2, 3, GaussianRational::of(-2, 1)),
            (0, 3, GaussianRational::of(4, 0)),
            (1, 3, GaussianRational::of(1, -1)),
        ],
    )?;
    let eta = eta_by_recurrence(&g)?;
    println!("eta = {eta}");

    let degree = eta.degree().expect("eta is never the zero polynomial");
    let with_mult = real_root_count_with_multiplicity(&eta)?;
    assert_eq!(with_mult, degree);
    println!("real roots counted with multiplicity: {with_mult} = degree");
    println!("distinct real roots: {}", count_distinct_roots(&eta)?);

    // With zero vertex weights the roots are confined to a symmetric
    // interval computed from the largest edge weight and the degree. The
    // bound is stated for that case only, so build the stripped graph.
    let stripped = WeightedGraph::from_parts(
        Some(g.labels().to_vec()),
        vec![rat_int(0); g.n()],
        g.edges().map(|(u, v, w)| (u, v, w.clone())).collect(),
    )?;
    let mu = mu_by_recurrence(&stripped)?;
    let radius = matching_root_radius(&stripped).expect("zero weights, max degree >= 2");
    println!("mu  = {mu}");
    println!("all mu roots lie in [-r, r] for r = {radius}");
    assert_eq!(count_distinct_roots_above(&mu, &radius)?, 0);
    assert_eq!(count_distinct_roots_below(&mu, &(-radius.clone()))?, 0);

    Ok(())
}
