//! Hunt for the vertex of a tree matrix whose removal pushes an eigenvalue
//! multiplicity up instead of down.
//!
//! For acyclic Hermitian matrices a repeated eigenvalue always admits such
//! a vertex, of degree at least 3, with the eigenvalue surviving in at
//! least three of the branches it leaves behind.

use matchpoly::charpoly::HermitianWeightedMatrix;
use matchpoly::decomp::{parter_wiener_find, ParterOutcome};
use matchpoly::error::Result;
use matchpoly::rational::{rat_int, GaussianRational};
use matchpoly::roots::ThetaSpec;

fn entry(entries: &mut Vec<Vec<GaussianRational>>, i: usize, j: usize, w: GaussianRational) {
    entries[i][j] = w.conj();
    entries[j][i] = w;
}

fn main() -> Result<()> {
    // A spider: center 0, three legs of two vertices each, diagonal all 1.
    // Each leg alone has eigenvalues 1 - 1 = 0 and 1 + 1 = 2; gluing three
    // of them to the center leaves eigenvalue 2 with multiplicity 2.
    let n = 7;
    let mut entries = vec![vec![GaussianRational::zero(); n]; n];
    for leg in 0..3 {
        let a = 1 + 2 * leg;
        entry(&mut entries, 0, a, GaussianRational::one());
        entry(&mut entries, a, a + 1, GaussianRational::one());
    }
    for (v, d) in entries.iter_mut().enumerate() {
        d[v] = GaussianRational::from_rational(rat_int(1));
    }
    let m = HermitianWeightedMatrix::from_entries(entries)?;

    let theta = ThetaSpec::rational(rat_int(2));
    match parter_wiener_find(&m, &theta)? {
        ParterOutcome::Found(report) => {
            println!(
                "vertex {} (degree {}): multiplicity {} -> {}",
                report.vertex, report.degree, report.mult_before, report.mult_after
            );
            for b in &report.branches {
                println!("  branch {:?} keeps theta with multiplicity {}", b.vertices, b.mult);
            }
            assert!(report.degree >= 3);
            assert_eq!(report.mult_after, report.mult_before + 1);
        }
        ParterOutcome::HypothesisNotMet { mult, reason } => {
            println!("no qualifying vertex (multiplicity {mult}): {reason}");
        }
    }

    Ok(())
}
