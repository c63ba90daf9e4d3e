//! The multiplicity of zero in mu counts the vertices no maximum matching
//! can cover, tying the polynomial machinery back to classical matching
//! theory.

use matchpoly::decomp::{classical_decomposition, deficiency};
use matchpoly::error::Result;
use matchpoly::graph::{EnumerationCaps, WeightedGraph};
use matchpoly::matching::{eta_by_recurrence, mu_by_recurrence};
use matchpoly::rational::{rat_int, GaussianRational};

fn max_matching_size(g: &WeightedGraph) -> usize {
    let caps = EnumerationCaps::default();
    g.enumerate_matchings(&caps)
        .expect("small graph")
        .map(|m| m.size())
        .max()
        .unwrap_or(0)
}

fn main() -> Result<()> {
    // An odd cycle misses one vertex, a star with three leaves misses two.
    let cases = [
        ("triangle", WeightedGraph::with_unit_weights(3, &[(0, 1), (1, 2), (0, 2)])?),
        ("P4", WeightedGraph::with_unit_weights(4, &[(0, 1), (1, 2), (2, 3)])?),
        ("star S3", WeightedGraph::with_unit_weights(4, &[(0, 1), (0, 2), (0, 3)])?),
    ];
    for (name, g) in &cases {
        let d = deficiency(g)?;
        assert_eq!(d, g.n() - 2 * max_matching_size(g));
        println!("{name}: deficiency {d} (mu = {})", mu_by_recurrence(g)?);
    }

    // Putting the same weight c on every vertex shifts eta by c, so the
    // decomposition at theta = c is the classical one: N is empty and the
    // multiplicity is exactly the deficiency.
    let c = rat_int(5);
    let star = WeightedGraph::from_parts(
        None,
        vec![c.clone(); 4],
        vec![(0, 1), (0, 2), (0, 3)]
            .into_iter()
            .map(|(u, v)| (u, v, GaussianRational::of(3, 4)))
            .collect(),
    )?;
    let eta = eta_by_recurrence(&star)?;
    assert_eq!(eta.shift(&c), mu_by_recurrence(&star)?);
    println!("constant vertex weight 5: eta(x + 5) = mu(x)");

    let d = classical_decomposition(&star, &c)?;
    println!("decomposition at theta = 5:");
    println!("  multiplicity {} = deficiency", d.mult());
    println!("  D = {:?}", d.d_labels());
    println!("  A = {:?}", d.a_labels());
    println!("  N = {:?} (always empty here)", d.n_labels());

    Ok(())
}
