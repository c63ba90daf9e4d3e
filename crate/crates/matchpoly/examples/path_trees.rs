//! Unroll a graph into its path-tree and check the divisibility this buys.
//!
//! The path-tree T(G, u) has one node per simple path of G starting at u.
//! Its matching polynomial relates to the graph's by an exact ratio, and
//! for connected G the quotient eta(T) / eta(G) is a polynomial.

use matchpoly::error::Result;
use matchpoly::graph::WeightedGraph;
use matchpoly::matching::eta_by_recurrence;
use matchpoly::pathtree::{divisibility_quotient, path_tree, ratio_identity_sides, DEFAULT_PATH_TREE_CAP};
use matchpoly::rational::{rat_int, GaussianRational};

fn main() -> Result<()> {
    let triangle = WeightedGraph::from_parts(
        Some(vec!["a".into(), "b".into(), "c".into()]),
        vec![rat_int(1), rat_int(2), rat_int(3)],
        vec![
            (0, 1, GaussianRational::of(1, 2)),
            (1, 2, GaussianRational::of(2, -7)),
            (0, 2, GaussianRational::of(-3, 2)),
        ],
    )?;

    let pt = path_tree(&triangle, 0, DEFAULT_PATH_TREE_CAP)?;
    println!("path-tree of the triangle from vertex a: {} nodes", pt.node_count());
    for (node, walk) in pt.node_paths().iter().enumerate() {
        let walk: Vec<&str> = walk.iter().map(|&v| triangle.label(v)).collect();
        println!("  {} <- walk {}", pt.tree().label(node), walk.join(" "));
    }

    // eta(G \ u) * eta(T) = eta(G) * eta(T \ root), exactly.
    let (lhs, rhs) = ratio_identity_sides(&triangle, 0, DEFAULT_PATH_TREE_CAP)?;
    assert_eq!(lhs, rhs);
    println!("cross-multiplied ratio identity holds: {lhs}");

    // Connectivity upgrades the ratio to exact divisibility.
    let q = divisibility_quotient(&triangle, 0, DEFAULT_PATH_TREE_CAP)?;
    println!("eta(T) / eta(G) = {q}");
    assert_eq!(eta_by_recurrence(&triangle)?.mul(&q), eta_by_recurrence(pt.tree())?);

    // Trees are their own path-trees from any vertex, so the quotient is 1.
    let path = WeightedGraph::with_unit_weights(4, &[(0, 1), (1, 2), (2, 3)])?;
    let q = divisibility_quotient(&path, 0, DEFAULT_PATH_TREE_CAP)?;
    println!("P4 from an endpoint: quotient {q}");

    // Dense graphs blow up: K5 already has 65 simple paths from a vertex.
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            edges.push((u, v));
        }
    }
    let k5 = WeightedGraph::with_unit_weights(5, &edges)?;
    let pt = path_tree(&k5, 0, DEFAULT_PATH_TREE_CAP)?;
    println!("K5 path-tree: {} nodes from 5 vertices", pt.node_count());

    Ok(())
}
