//! Matching polynomials of weighted graphs.
//!
//! Two polynomials live here. The edge-weighted one ignores vertex weights:
//! mu(G, x) = sum over matchings M of (-1)^|M| |w(M)|^2 x^(n - 2|M|), where
//! |w(M)|^2 is the product of squared edge-weight moduli. The full one folds
//! vertex weights in:
//! eta(G, x) = sum over vertex subsets S of (-1)^(n-|S|) w1(V\S) mu(G[S], x),
//! equivalently sum over matchings M of (-1)^|M| |w(M)|^2 times
//! prod_(u uncovered) (x - w1(u)).
//!
//! Each quantity is computed by independent routes: brute-force enumeration
//! (oracle grade, deliberately unmemoized), the vertex-pivot recurrence with
//! a subset-bitmask memo (production, n <= 64), and for forests a rooted DP
//! with no vertex cap. The routes must agree on everything; the test suites
//! hold them to that.

use std::collections::HashMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{EnumerationCaps, WeightedGraph};
use crate::poly::RationalPolynomial;
use crate::rational::Rational;

/// Edge-weighted matching polynomial by direct matching enumeration.
pub fn mu_by_enumeration(g: &WeightedGraph, caps: &EnumerationCaps) -> Result<RationalPolynomial> {
    let n = g.n();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for m in g.enumerate_matchings(caps)? {
        let mut term = Rational::one();
        for &(u, v) in m.edges() {
            term *= g.edge_weight(u, v).expect("matching edge exists").norm_sqr();
        }
        if m.size() % 2 == 1 {
            term = -term;
        }
        coeffs[n - 2 * m.size()] += term;
    }
    Ok(RationalPolynomial::from_coeffs(coeffs))
}

/// Full matching polynomial straight from its defining subset sum.
pub fn eta_by_definition(g: &WeightedGraph, caps: &EnumerationCaps) -> Result<RationalPolynomial> {
    let n = g.n();
    if n > caps.max_vertices {
        return Err(Error::resource(format!(
            "graph has {n} vertices; enumeration cap is {}",
            caps.max_vertices
        )));
    }
    if n > 63 {
        return Err(Error::resource("subset-sum route supports at most 63 vertices"));
    }
    let full: u64 = (1u64 << n) - 1;
    let mut acc = RationalPolynomial::zero();
    'subset: for s in 0..=full {
        let mut outside_weight = Rational::one();
        for v in 0..n {
            if s & (1u64 << v) == 0 {
                if g.vertex_weight(v).is_zero() {
                    continue 'subset;
                }
                outside_weight *= g.vertex_weight(v);
            }
        }
        let removed = n - s.count_ones() as usize;
        if removed % 2 == 1 {
            outside_weight = -outside_weight;
        }
        let keep: Vec<usize> = (0..n).filter(|&v| s & (1u64 << v) != 0).collect();
        let sub = g.induced(&keep)?;
        acc = acc.add(&mu_by_enumeration(&sub, caps)?.scale(&outside_weight));
    }
    Ok(acc)
}

/// Full matching polynomial in matching-sum form: every matching contributes
/// its squared weight modulus times the vertex-weight linear factors of the
/// vertices it leaves uncovered.
pub fn eta_matching_form(g: &WeightedGraph, caps: &EnumerationCaps) -> Result<RationalPolynomial> {
    let mut acc = RationalPolynomial::zero();
    for m in g.enumerate_matchings(caps)? {
        let mut scalar = Rational::one();
        for &(u, v) in m.edges() {
            scalar *= g.edge_weight(u, v).expect("matching edge exists").norm_sqr();
        }
        if m.size() % 2 == 1 {
            scalar = -scalar;
        }
        let covered = m.covered_mask();
        let mut term = RationalPolynomial::constant(scalar);
        for v in 0..g.n() {
            if covered & (1u64 << v) == 0 {
                term = term.times_x_minus(g.vertex_weight(v));
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Subset-memoized recurrence engine for eta (and, with vertex weights
/// disabled, mu). Keys are vertex-subset bitmasks over the original graph;
/// only connected subsets are stored, and disjoint components multiply.
///
/// The memo is the reuse point: a decomposition computes eta of every G-v
/// against one table, and the characteristic-polynomial cycle expansion
/// computes every eta(G minus cycle union) against one table.
pub struct EtaMemo<'g> {
    graph: &'g WeightedGraph,
    use_vertex_weights: bool,
    nbr_masks: Vec<u64>,
    adj_norm_sqr: Vec<Vec<(usize, Rational)>>,
    table: HashMap<u64, RationalPolynomial>,
}

impl<'g> EtaMemo<'g> {
    pub fn new(graph: &'g WeightedGraph, use_vertex_weights: bool) -> Result<Self> {
        let nbr_masks = graph.neighbor_masks()?;
        let mut adj_norm_sqr = vec![Vec::new(); graph.n()];
        for (u, v, w) in graph.edges() {
            let nsq = w.norm_sqr();
            adj_norm_sqr[u].push((v, nsq.clone()));
            adj_norm_sqr[v].push((u, nsq));
        }
        Ok(EtaMemo { graph, use_vertex_weights, nbr_masks, adj_norm_sqr, table: HashMap::new() })
    }

    pub fn full_mask(&self) -> u64 {
        if self.graph.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.graph.n()) - 1
        }
    }

    /// Number of memoized connected subsets; tests use it to observe reuse.
    pub fn memo_len(&self) -> usize {
        self.table.len()
    }

    /// eta of the subgraph induced by `mask`.
    pub fn eta(&mut self, mask: u64) -> RationalPolynomial {
        debug_assert_eq!(mask & !self.full_mask(), 0, "mask within the vertex set");
        let mut product = RationalPolynomial::one();
        let mut rest = mask;
        while rest != 0 {
            let comp = self.component_mask(rest);
            rest &= !comp;
            if let Some(p) = self.table.get(&comp) {
                product = product.mul(p);
            } else {
                let p = self.compute_component(comp);
                self.table.insert(comp, p.clone());
                product = product.mul(&p);
            }
        }
        product
    }

    /// eta of the graph minus the given vertices.
    pub fn eta_without(&mut self, removed: &[usize]) -> RationalPolynomial {
        let mut mask = self.full_mask();
        for &v in removed {
            mask &= !(1u64 << v);
        }
        self.eta(mask)
    }

    /// Connected component of the lowest set bit, within `mask`.
    fn component_mask(&self, mask: u64) -> u64 {
        let start = mask.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut grow = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                grow |= self.nbr_masks[v] & mask & !comp;
            }
            comp |= grow;
            frontier = grow;
        }
        comp
    }

    /// Pivot recurrence on one connected subset: expand on the
    /// lowest-labeled vertex of highest degree within the subset.
    fn compute_component(&mut self, comp: u64) -> RationalPolynomial {
        let mut pivot = usize::MAX;
        let mut best_deg = 0u32;
        let mut scan = comp;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let deg = (self.nbr_masks[v] & comp).count_ones();
            if pivot == usize::MAX || deg > best_deg {
                pivot = v;
                best_deg = deg;
            }
        }
        let without_pivot = comp & !(1u64 << pivot);
        let shift = if self.use_vertex_weights {
            self.graph.vertex_weight(pivot).clone()
        } else {
            Rational::zero()
        };
        let mut acc = self.eta(without_pivot).times_x_minus(&shift);
        let partners = self.adj_norm_sqr[pivot].clone();
        for (u, nsq) in partners {
            if comp & (1u64 << u) == 0 {
                continue;
            }
            let sub = self.eta(without_pivot & !(1u64 << u));
            acc = acc.sub(&sub.scale(&nsq));
        }
        acc
    }
}

/// eta of a forest by rooted tree DP; no vertex cap. This is the same
/// recurrence as the memo route specialized to trees (each subtree is cut
/// off by its root), so path-trees far beyond 64 vertices stay exact.
pub fn eta_of_forest(g: &WeightedGraph, use_vertex_weights: bool) -> Result<RationalPolynomial> {
    if !g.is_forest() {
        return Err(Error::input("forest route called on a graph with a cycle"));
    }
    let zero = Rational::zero();
    let mut result = RationalPolynomial::one();
    for comp in g.component_index_sets() {
        let root = comp[0];
        // BFS order; children of v are its BFS successors.
        let mut parent: HashMap<usize, usize> = HashMap::new();
        let mut order = vec![root];
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in g.neighbors(v) {
                if u != root && !parent.contains_key(&u) {
                    parent.insert(u, v);
                    order.push(u);
                }
            }
        }
        // with_vertex[v]  = eta of the subtree rooted at v
        // without_vertex[v] = eta of that subtree minus v itself
        let mut with_vertex: HashMap<usize, RationalPolynomial> = HashMap::new();
        let mut without_vertex: HashMap<usize, RationalPolynomial> = HashMap::new();
        let mut children: HashMap<usize, Vec<usize>> = HashMap::new();
        for &v in order.iter().skip(1) {
            children.entry(parent[&v]).or_default().push(v);
        }
        for &v in order.iter().rev() {
            let kids = children.get(&v).cloned().unwrap_or_default();
            let kid_f: Vec<&RationalPolynomial> =
                kids.iter().map(|c| &with_vertex[c]).collect();
            // Prefix/suffix products so each child's complement is one mul.
            let mut prefix = vec![RationalPolynomial::one()];
            for f in &kid_f {
                let last = prefix.last().unwrap().mul(f);
                prefix.push(last);
            }
            let mut suffix = vec![RationalPolynomial::one(); kids.len() + 1];
            for i in (0..kids.len()).rev() {
                suffix[i] = kid_f[i].mul(&suffix[i + 1]);
            }
            let minus_v = prefix[kids.len()].clone();
            let shift = if use_vertex_weights { g.vertex_weight(v) } else { &zero };
            let mut f_v = minus_v.times_x_minus(shift);
            for (i, c) in kids.iter().enumerate() {
                let nsq = g.edge_weight(v, *c).expect("tree edge").norm_sqr();
                let others = prefix[i].mul(&suffix[i + 1]);
                f_v = f_v.sub(&without_vertex[c].mul(&others).scale(&nsq));
            }
            with_vertex.insert(v, f_v);
            without_vertex.insert(v, minus_v);
        }
        result = result.mul(&with_vertex[&root]);
    }
    Ok(result)
}

/// Production eta: rooted DP for forests (any size), subset-memo recurrence
/// otherwise (n <= 64).
pub fn eta_by_recurrence(g: &WeightedGraph) -> Result<RationalPolynomial> {
    if g.is_forest() {
        return eta_of_forest(g, true);
    }
    let mut memo = EtaMemo::new(g, true)?;
    let full = memo.full_mask();
    Ok(memo.eta(full))
}

/// Production mu: eta with vertex weights ignored.
pub fn mu_by_recurrence(g: &WeightedGraph) -> Result<RationalPolynomial> {
    if g.is_forest() {
        return eta_of_forest(g, false);
    }
    let mut memo = EtaMemo::new(g, false)?;
    let full = memo.full_mask();
    Ok(memo.eta(full))
}

/// d/dx eta(G) must equal the sum of eta(G - v) over all vertices.
pub fn derivative_identity_check(g: &WeightedGraph) -> Result<bool> {
    let (lhs, rhs) = derivative_identity_sides(g)?;
    Ok(lhs == rhs)
}

/// Both sides of the derivative identity, for diagnostics on failure.
pub fn derivative_identity_sides(
    g: &WeightedGraph,
) -> Result<(RationalPolynomial, RationalPolynomial)> {
    if g.is_forest() {
        let lhs = eta_of_forest(g, true)?.derivative();
        let mut rhs = RationalPolynomial::zero();
        for v in 0..g.n() {
            rhs = rhs.add(&eta_of_forest(&g.delete_vertex(v)?, true)?);
        }
        return Ok((lhs, rhs));
    }
    let mut memo = EtaMemo::new(g, true)?;
    let full = memo.full_mask();
    let lhs = memo.eta(full).derivative();
    let mut rhs = RationalPolynomial::zero();
    for v in 0..g.n() {
        rhs = rhs.add(&memo.eta(full & !(1u64 << v)));
    }
    Ok((lhs, rhs))
}

/// Both sides of the edge deletion recurrence for the edge {u, v}:
/// eta(G) = eta(G - e) - |w(e)|^2 eta(G - u - v).
pub fn edge_recurrence_sides(
    g: &WeightedGraph,
    u: usize,
    v: usize,
) -> Result<(RationalPolynomial, RationalPolynomial)> {
    let w = g
        .edge_weight(u, v)
        .ok_or_else(|| Error::input(format!("no edge between {u} and {v}")))?
        .clone();
    let lhs = eta_by_recurrence(g)?;
    let without_edge = eta_by_recurrence(&g.delete_edge(u, v)?)?;
    let without_ends = eta_by_recurrence(&g.delete_vertices(&[u, v])?)?;
    let rhs = without_edge.sub(&without_ends.scale(&w.norm_sqr()));
    Ok((lhs, rhs))
}

pub fn edge_recurrence_check(g: &WeightedGraph, u: usize, v: usize) -> Result<bool> {
    let (lhs, rhs) = edge_recurrence_sides(g, u, v)?;
    Ok(lhs == rhs)
}

/// Rational radius r with r^2 >= 4 b0^2 (max_degree - 1), where b0 is the
/// largest edge weight magnitude: every root of mu lies inside [-r, r].
/// None when the bound does not apply (a vertex weight is nonzero, or the
/// maximum degree is below 2).
pub fn matching_root_radius(g: &WeightedGraph) -> Option<Rational> {
    if g.vertex_weights().iter().any(|w| !w.is_zero()) {
        return None;
    }
    let delta = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    if delta < 2 {
        return None;
    }
    let b0_sqr = g
        .edges()
        .map(|(_, _, w)| w.norm_sqr())
        .max()
        .expect("max degree >= 2 implies at least one edge");
    let four = Rational::from_integer(4.into());
    let dm1 = Rational::from_integer((delta as i64 - 1).into());
    crate::roots::sqrt_upper_bound(&(four * b0_sqr * dm1)).ok()
}
