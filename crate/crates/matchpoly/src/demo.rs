//! Built-in example graphs, reachable from the CLI via `--demo <name>`.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::rational::{rat_int, GaussianRational};

pub const DEMO_NAMES: [&str; 5] = ["k2", "triangle", "c4-ring", "c4-crossed", "bowtie"];

fn build(
    labels: &[&str],
    w1: &[i64],
    edges: &[(usize, usize, (i64, i64))],
) -> WeightedGraph {
    WeightedGraph::from_parts(
        Some(labels.iter().map(|s| s.to_string()).collect()),
        w1.iter().map(|&c| rat_int(c)).collect(),
        edges
            .iter()
            .map(|&(u, v, (re, im))| (u, v, GaussianRational::of(re, im)))
            .collect(),
    )
    .expect("demo graphs are well-formed")
}

/// A named example graph:
/// - `k2`: one edge of weight 2+i with vertex weights 1 and 3
/// - `triangle`: complex weights 1+2i, 2-7i, -3+2i with vertex weights 1, 2, 3
/// - `c4-ring`: the 4-cycle with every edge weight i, ring labeling
/// - `c4-crossed`: the same cycle relabeled so the spectrum changes
/// - `bowtie`: two triangles sharing a vertex, the non-forest with phi = eta
pub fn demo_graph(name: &str) -> Result<WeightedGraph> {
    let g = match name {
        "k2" => build(&["u", "v"], &[1, 3], &[(0, 1, (2, 1))]),
        "triangle" => build(
            &["a", "b", "c"],
            &[1, 2, 3],
            &[(0, 1, (1, 2)), (1, 2, (2, -7)), (0, 2, (-3, 2))],
        ),
        "c4-ring" => build(
            &["a", "b", "c", "d"],
            &[0; 4],
            &[(0, 1, (0, 1)), (1, 2, (0, 1)), (2, 3, (0, 1)), (0, 3, (0, 1))],
        ),
        "c4-crossed" => build(
            &["a", "b", "c", "d"],
            &[0; 4],
            &[(0, 2, (0, 1)), (1, 2, (0, 1)), (1, 3, (0, 1)), (0, 3, (0, 1))],
        ),
        "bowtie" => build(
            &["a", "b", "c", "d", "e"],
            &[2, 3, 4, 2, 3],
            &[
                (0, 1, (1, 0)),
                (0, 2, (-1, 1)),
                (1, 2, (1, 0)),
                (2, 3, (1, 0)),
                (2, 4, (1, 0)),
                (3, 4, (1, 0)),
            ],
        ),
        other => {
            return Err(Error::input(format!(
                "unknown demo {:?}; available: {}",
                other,
                DEMO_NAMES.join(", ")
            )))
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::charpoly_of_graph;
    use crate::matching::eta_by_recurrence;
    use crate::poly::RationalPolynomial;
    use crate::rational::rat_int;

    fn poly(coeffs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn demo_values_are_the_published_ones() {
        assert_eq!(
            eta_by_recurrence(&demo_graph("k2").unwrap()).unwrap(),
            poly(&[-2, -4, 1])
        );
        let triangle = demo_graph("triangle").unwrap();
        assert_eq!(eta_by_recurrence(&triangle).unwrap(), poly(&[88, -60, -6, 1]));
        assert_eq!(charpoly_of_graph(&triangle).unwrap(), poly(&[196, -60, -6, 1]));
        assert_eq!(
            charpoly_of_graph(&demo_graph("c4-ring").unwrap()).unwrap(),
            poly(&[4, 0, -4, 0, 1])
        );
        assert_eq!(
            charpoly_of_graph(&demo_graph("c4-crossed").unwrap()).unwrap(),
            poly(&[0, 0, -4, 0, 1])
        );
        let bowtie = demo_graph("bowtie").unwrap();
        let expected = poly(&[-35, 135, -152, 70, -14, 1]);
        assert_eq!(eta_by_recurrence(&bowtie).unwrap(), expected);
        assert_eq!(charpoly_of_graph(&bowtie).unwrap(), expected);
    }

    #[test]
    fn unknown_name_lists_the_choices() {
        let err = demo_graph("k3").unwrap_err().to_string();
        assert!(err.contains("bowtie"));
    }
}
