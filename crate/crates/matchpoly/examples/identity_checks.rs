//! Run the built-in identity suite against a graph of your own making.
//! The same checks back the `matchpoly check` subcommand.

use matchpoly::check::{run_identity_suite, CheckStatus};
use matchpoly::error::Result;
use matchpoly::graph::{EnumerationCaps, WeightedGraph};
use matchpoly::pathtree::DEFAULT_PATH_TREE_CAP;
use matchpoly::rational::{rat, rat_int, GaussianRational};

fn main() -> Result<()> {
    // A wheel over a square, with a mix of real, imaginary, and fractional
    // weights and a weighted hub.
    let g = WeightedGraph::from_parts(
        Some(vec!["hub".into(), "n".into(), "e".into(), "s".into(), "w".into()]),
        vec![rat(7, 2), rat_int(0), rat_int(1), rat_int(0), rat_int(-2)],
        vec![
            (0, 1, GaussianRational::of(1, 0)),
            (0, 2, GaussianRational::of(0, 2)),
            (0, 3, GaussianRational::of(1, 1)),
            (0, 4, GaussianRational::new(rat(1, 2), rat_int(0))),
            (1, 2, GaussianRational::of(3, 0)),
            (2, 3, GaussianRational::of(0, -1)),
            (3, 4, GaussianRational::of(2, 2)),
            (1, 4, GaussianRational::of(-1, 2)),
        ],
    )?;

    let caps = EnumerationCaps::default();
    let results = run_identity_suite(&g, &caps, DEFAULT_PATH_TREE_CAP);
    let mut failed = 0;
    for r in &results {
        match &r.status {
            CheckStatus::Pass => println!("PASS {}", r.name),
            CheckStatus::Fail { detail } => {
                failed += 1;
                println!("FAIL {}: {detail}", r.name);
            }
            CheckStatus::Skipped { reason } => println!("SKIP {}: {reason}", r.name),
        }
    }
    assert_eq!(failed, 0, "an identity failed, which would mean an arithmetic bug");

    Ok(())
}
