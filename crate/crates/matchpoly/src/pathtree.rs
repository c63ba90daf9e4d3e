//! Path-trees: the tree of simple paths out of a root vertex.
//!
//! Nodes are the simple paths of G starting at u, ordered lexicographically
//! as vertex sequences (so the root [u] is node 0 and every path precedes
//! its extensions). A path p and its one-vertex extension p+v are joined by
//! an edge carrying the G-weight of {last(p), v}; a node's vertex weight is
//! that of its endpoint away from u (the root keeps u's own weight).
//!
//! Size is counted before anything is materialized: path-trees grow
//! factorially, and the cap turns a runaway request into a clean error.

use crate::error::{Error, Result};
use crate::graph::{EnumerationCaps, WeightedGraph};
use crate::matching::{eta_by_recurrence, EtaMemo};
use crate::poly::RationalPolynomial;
use crate::rational::{GaussianRational, Rational};

pub const DEFAULT_PATH_TREE_CAP: usize = 100_000;

#[derive(Clone, Debug)]
pub struct PathTree {
    tree: WeightedGraph,
    node_paths: Vec<Vec<usize>>,
    root: usize,
}

impl PathTree {
    pub fn tree(&self) -> &WeightedGraph {
        &self.tree
    }

    /// The G-path each tree node stands for, indexed by tree vertex.
    pub fn node_paths(&self) -> &[Vec<usize>] {
        &self.node_paths
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.node_paths.len()
    }
}

fn check_root(g: &WeightedGraph, u: usize) -> Result<()> {
    if u >= g.n() {
        return Err(Error::input(format!(
            "root vertex index {u} out of range for a graph on {} vertices",
            g.n()
        )));
    }
    Ok(())
}

/// Number of simple paths starting at u (the root path [u] included),
/// counted without building anything. Errors once the count passes `cap`.
pub fn count_simple_paths_from(g: &WeightedGraph, u: usize, cap: usize) -> Result<usize> {
    check_root(g, u)?;
    fn dfs(g: &WeightedGraph, v: usize, visited: &mut [bool], count: &mut usize, cap: usize) -> Result<()> {
        for &nb in g.neighbors(v) {
            if visited[nb] {
                continue;
            }
            *count += 1;
            if *count > cap {
                return Err(Error::resource(format!(
                    "path-tree would exceed {cap} nodes; raise the cap to proceed"
                )));
            }
            visited[nb] = true;
            dfs(g, nb, visited, count, cap)?;
            visited[nb] = false;
        }
        Ok(())
    }
    let mut visited = vec![false; g.n()];
    visited[u] = true;
    let mut count = 1;
    if count > cap {
        return Err(Error::resource(format!(
            "path-tree would exceed {cap} nodes; raise the cap to proceed"
        )));
    }
    dfs(g, u, &mut visited, &mut count, cap)?;
    Ok(count)
}

/// Build the path-tree of g rooted at u. Node labels join the G-labels
/// along the path with '/'. Depth-first extension with ascending neighbor
/// order yields the nodes already lexicographically sorted.
pub fn path_tree(g: &WeightedGraph, u: usize, cap: usize) -> Result<PathTree> {
    let total = count_simple_paths_from(g, u, cap)?;
    struct Builder<'g> {
        g: &'g WeightedGraph,
        node_paths: Vec<Vec<usize>>,
        node_weights: Vec<Rational>,
        labels: Vec<String>,
        edges: Vec<(usize, usize, GaussianRational)>,
    }
    impl Builder<'_> {
        fn dfs(&mut self, v: usize, my_idx: usize, path: &mut Vec<usize>, visited: &mut [bool]) {
            for i in 0..self.g.neighbors(v).len() {
                let nb = self.g.neighbors(v)[i];
                if visited[nb] {
                    continue;
                }
                visited[nb] = true;
                path.push(nb);
                let idx = self.node_paths.len();
                self.node_paths.push(path.clone());
                self.node_weights.push(self.g.vertex_weight(nb).clone());
                self.labels.push(format!("{}/{}", self.labels[my_idx], self.g.label(nb)));
                self.edges.push((my_idx, idx, self.g.edge_weight(v, nb).unwrap().clone()));
                self.dfs(nb, idx, path, visited);
                path.pop();
                visited[nb] = false;
            }
        }
    }
    let mut b = Builder {
        g,
        node_paths: Vec::with_capacity(total),
        node_weights: Vec::with_capacity(total),
        labels: Vec::with_capacity(total),
        edges: Vec::with_capacity(total.saturating_sub(1)),
    };
    b.node_paths.push(vec![u]);
    b.node_weights.push(g.vertex_weight(u).clone());
    b.labels.push(g.label(u).to_string());
    let mut visited = vec![false; g.n()];
    visited[u] = true;
    b.dfs(u, 0, &mut vec![u], &mut visited);
    debug_assert_eq!(b.node_paths.len(), total);
    debug_assert!(b.node_paths.windows(2).all(|w| w[0] < w[1]));
    let tree = WeightedGraph::from_parts(Some(b.labels), b.node_weights, b.edges)?;
    Ok(PathTree { tree, node_paths: b.node_paths, root: 0 })
}

/// Both sides of the cross-multiplied ratio identity
/// eta(G - u) * eta(T) = eta(G) * eta(T - root).
pub fn ratio_identity_sides(
    g: &WeightedGraph,
    u: usize,
    cap: usize,
) -> Result<(RationalPolynomial, RationalPolynomial)> {
    let pt = path_tree(g, u, cap)?;
    let eta_g = eta_by_recurrence(g)?;
    let eta_g_minus_u = eta_by_recurrence(&g.delete_vertex(u)?)?;
    let eta_t = eta_by_recurrence(pt.tree())?;
    let eta_t_minus_root = eta_by_recurrence(&pt.tree().delete_vertex(pt.root())?)?;
    Ok((eta_g_minus_u.mul(&eta_t), eta_g.mul(&eta_t_minus_root)))
}

pub fn ratio_identity_check(g: &WeightedGraph, u: usize, cap: usize) -> Result<bool> {
    let (lhs, rhs) = ratio_identity_sides(g, u, cap)?;
    Ok(lhs == rhs)
}

/// For connected g, eta(G) divides eta(T(G, u)); returns the quotient.
/// Disconnected input is rejected (the theorem needs connectivity).
pub fn divisibility_quotient(g: &WeightedGraph, u: usize, cap: usize) -> Result<RationalPolynomial> {
    check_root(g, u)?;
    if !g.is_connected() {
        return Err(Error::input(
            "path-tree divisibility requires a connected graph",
        ));
    }
    let pt = path_tree(g, u, cap)?;
    let eta_g = eta_by_recurrence(g)?;
    let eta_t = eta_by_recurrence(pt.tree())?;
    eta_t.exact_div(&eta_g)
}

/// Both sides of the endpoint-path identity for distinct vertices u, v:
/// eta(G-u) eta(G-v) - eta(G) eta(G-u-v)
///   = sum over simple u..v paths of |w(path)|^2 eta(G - path)^2.
pub fn endpoint_path_identity_sides(
    g: &WeightedGraph,
    u: usize,
    v: usize,
    caps: &EnumerationCaps,
) -> Result<(RationalPolynomial, RationalPolynomial)> {
    check_root(g, u)?;
    check_root(g, v)?;
    if u == v {
        return Err(Error::input("endpoint-path identity needs two distinct vertices"));
    }
    let mut memo = EtaMemo::new(g, true)?;
    let full = memo.full_mask();
    let eta_g = memo.eta(full);
    let eta_u = memo.eta_without(&[u]);
    let eta_v = memo.eta_without(&[v]);
    let eta_uv = memo.eta_without(&[u, v]);
    let lhs = eta_u.mul(&eta_v).sub(&eta_g.mul(&eta_uv));
    let mut rhs = RationalPolynomial::zero();
    for p in g.enumerate_paths_between(u, v, caps)? {
        let mut mask = 0u64;
        for &w in &p.vertices {
            mask |= 1 << w;
        }
        let rest = memo.eta(full & !mask);
        rhs = rhs.add(&rest.mul(&rest).scale(&p.weight_norm_sqr()));
    }
    Ok((lhs, rhs))
}

pub fn endpoint_path_identity_check(
    g: &WeightedGraph,
    u: usize,
    v: usize,
    caps: &EnumerationCaps,
) -> Result<bool> {
    let (lhs, rhs) = endpoint_path_identity_sides(g, u, v, caps)?;
    Ok(lhs == rhs)
}
