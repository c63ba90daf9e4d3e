//! Characteristic polynomials of Hermitian weighted adjacency matrices,
//! and why the vertex ordering matters once weights leave the real line.

use matchpoly::charpoly::{build_matrix, charpoly, charpoly_via_eta, w2_of_cycle};
use matchpoly::error::Result;
use matchpoly::graph::{EnumerationCaps, WeightedGraph};
use matchpoly::matching::eta_by_recurrence;
use matchpoly::rational::{rat_int, GaussianRational};

fn main() -> Result<()> {
    let caps = EnumerationCaps::default();

    let triangle = WeightedGraph::from_parts(
        Some(vec!["a".into(), "b".into(), "c".into()]),
        vec![rat_int(1), rat_int(2), rat_int(3)],
        vec![
            (0, 1, GaussianRational::of(1, 2)),
            (1, 2, GaussianRational::of(2, -7)),
            (0, 2, GaussianRational::of(-3, 2)),
        ],
    )?;

    // det(xI - B) by fraction-free elimination at sample points.
    let phi = charpoly(&build_matrix(&triangle))?;
    println!("weighted triangle");
    println!("  phi = {phi}");
    println!("  eta = {}", eta_by_recurrence(&triangle)?);

    // The gap between the two is carried entirely by cycles: each cycle
    // contributes twice the real part of its oriented weight product.
    let cycles = triangle.enumerate_cycles(&caps)?;
    for c in &cycles {
        println!("  cycle weight w2 = {}", w2_of_cycle(&triangle, c)?);
    }
    assert_eq!(phi, charpoly_via_eta(&triangle, &caps)?);
    println!("  cycle expansion reproduces phi");

    // Two drawings of C4 with every edge weighted i. Same underlying
    // weighted graph up to relabeling, different spectra: conjugation is
    // applied by label order, so relabeling can flip cycle weights.
    let ring = WeightedGraph::from_parts(
        None,
        vec![rat_int(0); 4],
        vec![(0, 1), (1, 2), (2, 3), (0, 3)]
            .into_iter()
            .map(|(u, v)| (u, v, GaussianRational::i()))
            .collect(),
    )?;
    let crossed = WeightedGraph::from_parts(
        None,
        vec![rat_int(0); 4],
        vec![(0, 2), (1, 2), (1, 3), (0, 3)]
            .into_iter()
            .map(|(u, v)| (u, v, GaussianRational::i()))
            .collect(),
    )?;
    println!("C4, every edge weighted i");
    println!("  ring order    phi = {}", charpoly(&build_matrix(&ring))?);
    println!("  crossed order phi = {}", charpoly(&build_matrix(&crossed))?);
    assert_eq!(eta_by_recurrence(&ring)?, eta_by_recurrence(&crossed)?);
    println!("  matching polynomials agree; spectra do not");

    Ok(())
}
