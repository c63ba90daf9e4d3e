//! Characteristic polynomials of Hermitian weighted adjacency matrices.
//!
//! The matrix of a weighted graph puts vertex weights on the diagonal, the
//! edge weight at (u, v) for u < v, and the conjugate below. Vertex order is
//! semantically significant: relabeling changes which end of an edge gets
//! the conjugate, and with genuinely complex weights that can change the
//! spectrum (the matching polynomial, by contrast, never moves).
//!
//! det(xI - B) is computed exactly: evaluate at n+1 rational points with
//! fraction-free elimination, interpolate, and insist every imaginary
//! coefficient cancels (Hermitian input forces real values, so a residue is
//! an arithmetic bug, not a data problem).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Cycle, CycleUnion, EnumerationCaps, WeightedGraph};
use crate::matching::{eta_by_recurrence, EtaMemo};
use crate::poly::{GaussianPolynomial, RationalPolynomial};
use crate::rational::{rat_int, GaussianRational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianWeightedMatrix {
    n: usize,
    entries: Vec<Vec<GaussianRational>>,
}

impl HermitianWeightedMatrix {
    /// Validate squareness and the Hermitian symmetry entry by entry.
    pub fn from_entries(entries: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!(
                    "row {i} has {} entries in a {n}x{n} matrix",
                    row.len()
                )));
            }
        }
        for i in 0..n {
            if !entries[i][i].is_real() {
                return Err(Error::input(format!(
                    "diagonal entry ({i}, {i}) = {} is not real",
                    entries[i][i]
                )));
            }
            for j in (i + 1)..n {
                if entries[j][i] != entries[i][j].conj() {
                    return Err(Error::input(format!(
                        "matrix is not Hermitian at ({j}, {i}): {} vs conj({})",
                        entries[j][i], entries[i][j]
                    )));
                }
            }
        }
        Ok(HermitianWeightedMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i][j]
    }

    /// The underlying weighted graph: diagonal becomes vertex weights,
    /// nonzero strictly-upper entries become edges. Labels are "0".."n-1".
    pub fn to_graph(&self) -> Result<WeightedGraph> {
        let weights = (0..self.n).map(|i| self.entries[i][i].re().clone()).collect();
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if !self.entries[i][j].is_zero() {
                    edges.push((i, j, self.entries[i][j].clone()));
                }
            }
        }
        WeightedGraph::from_parts(None, weights, edges)
    }
}

/// Hermitian weighted adjacency matrix of a graph in its current ordering.
pub fn build_matrix(g: &WeightedGraph) -> HermitianWeightedMatrix {
    let n = g.n();
    let mut entries = vec![vec![GaussianRational::zero(); n]; n];
    for (v, row) in entries.iter_mut().enumerate() {
        row[v] = GaussianRational::from_rational(g.vertex_weight(v).clone());
    }
    for (u, v, w) in g.edges() {
        entries[u][v] = w.clone();
        entries[v][u] = w.conj();
    }
    HermitianWeightedMatrix { n, entries }
}

/// Fraction-free (Bareiss) determinant with row pivoting; exact over Q(i).
fn bareiss_det(mut m: Vec<Vec<GaussianRational>>) -> GaussianRational {
    let n = m.len();
    if n == 0 {
        return GaussianRational::one();
    }
    let mut negate = false;
    let mut prev = GaussianRational::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return GaussianRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = &num / &prev;
            }
            m[i][k] = GaussianRational::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Determinant of a Hermitian weighted matrix (always real; checked).
pub fn determinant(m: &HermitianWeightedMatrix) -> Result<Rational> {
    let d = bareiss_det(m.entries.clone());
    if !d.is_real() {
        return Err(Error::internal(format!(
            "determinant of a Hermitian matrix came out non-real: {d}"
        )));
    }
    Ok(d.re().clone())
}

/// Deterministic evaluation abscissas 0, 1, -1, 2, -2, ...
fn evaluation_points(count: usize) -> Vec<Rational> {
    let mut pts = Vec::with_capacity(count);
    let mut k = 0i64;
    while pts.len() < count {
        if k == 0 {
            pts.push(rat_int(0));
        } else {
            pts.push(rat_int(k));
            if pts.len() < count {
                pts.push(rat_int(-k));
            }
        }
        k += 1;
    }
    pts
}

/// Exact characteristic polynomial det(xI - B) by evaluation at n+1 points
/// and Newton interpolation. Point determinants run in parallel when a
/// rayon pool with threads is active.
pub fn charpoly(m: &HermitianWeightedMatrix) -> Result<RationalPolynomial> {
    let n = m.n();
    let points = evaluation_points(n + 1);
    let values: Vec<GaussianRational> = points
        .par_iter()
        .map(|x| {
            let mut shifted = m.entries.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                for (j, e) in row.iter_mut().enumerate() {
                    *e = if i == j {
                        &GaussianRational::from_rational(x.clone()) - e
                    } else {
                        -&*e
                    };
                }
            }
            bareiss_det(shifted)
        })
        .collect();
    let xs: Vec<GaussianRational> =
        points.iter().map(|p| GaussianRational::from_rational(p.clone())).collect();
    // Newton divided differences, in place.
    let mut coef = values;
    for j in 1..=n {
        for i in (j..=n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &xs[i] - &xs[i - j];
            coef[i] = &num / &den;
        }
    }
    let mut poly = GaussianPolynomial::zero();
    let mut basis = GaussianPolynomial::constant(GaussianRational::one());
    for (k, c) in coef.iter().enumerate() {
        poly = poly.add(&basis.scale(c));
        if k < n {
            basis = basis.times_x_minus(&xs[k]);
        }
    }
    let result = poly.to_rational().map_err(|k| {
        Error::internal(format!(
            "characteristic polynomial has a nonzero imaginary part in the x^{k} coefficient"
        ))
    })?;
    if result.degree() != Some(n) && n > 0 {
        return Err(Error::internal("characteristic polynomial has wrong degree"));
    }
    if n > 0 && !result.is_monic() {
        return Err(Error::internal("characteristic polynomial is not monic"));
    }
    Ok(result)
}

/// charpoly of the graph's adjacency matrix in its current ordering.
pub fn charpoly_of_graph(g: &WeightedGraph) -> Result<RationalPolynomial> {
    charpoly(&build_matrix(g))
}

/// Directed cycle weight: traverse from the cycle's smallest vertex toward
/// its smaller cycle-neighbor, multiplying matrix entries (edge weight going
/// up in label, conjugate going down), then add the reverse direction.
/// Always real: returns 2 Re(product).
pub fn w2_of_cycle(g: &WeightedGraph, cycle: &Cycle) -> Result<Rational> {
    let vs = cycle.vertices();
    let mut b = GaussianRational::one();
    for (u, v) in cycle.edge_pairs() {
        let w = g.edge_weight(u, v).ok_or_else(|| {
            Error::input(format!(
                "cycle uses edge {:?}-{:?} which is not in the graph",
                g.label(u.min(v)),
                g.label(u.max(v))
            ))
        })?;
        let factor = if u < v { w.clone() } else { w.conj() };
        b = &b * &factor;
    }
    debug_assert_eq!(vs[0], *vs.iter().min().unwrap());
    Ok(b.re() + b.re())
}

/// Product of the member cycles' weights (the cycles are vertex-disjoint).
pub fn w2_of_union(g: &WeightedGraph, union: &CycleUnion) -> Result<Rational> {
    let mut acc = Rational::from_integer(1.into());
    for c in union.cycles() {
        acc *= w2_of_cycle(g, c)?;
    }
    Ok(acc)
}

/// Characteristic polynomial assembled from matching polynomials: eta(G)
/// plus, for every nonempty union of disjoint cycles, the signed cycle
/// weight times eta of the graph with the union's vertices removed. Must
/// agree with the determinant route on every input; suites enforce that.
pub fn charpoly_via_eta(g: &WeightedGraph, caps: &EnumerationCaps) -> Result<RationalPolynomial> {
    let unions = g.enumerate_cycle_unions(caps)?;
    if unions.is_empty() {
        return eta_by_recurrence(g);
    }
    let mut memo = EtaMemo::new(g, true)?;
    let full = memo.full_mask();
    let mut acc = memo.eta(full);
    for cu in &unions {
        let mut scalar = w2_of_union(g, cu)?;
        if cu.component_count() % 2 == 1 {
            scalar = -scalar;
        }
        let sub = memo.eta(full & !cu.vertex_mask());
        acc = acc.add(&sub.scale(&scalar));
    }
    Ok(acc)
}

/// With positive real edge weights, the characteristic and matching
/// polynomials coincide exactly on forests. Returns whether that
/// equivalence held; inputs with complex or nonpositive weights are
/// rejected (the equivalence is false in general without the hypothesis).
pub fn forest_iff_equal_check(g: &WeightedGraph) -> Result<bool> {
    use num::Signed;
    for (u, v, w) in g.edges() {
        if !w.is_real() || !w.re().is_positive() {
            return Err(Error::input(format!(
                "forest equivalence requires positive real edge weights; edge {:?}-{:?} has weight {}",
                g.label(u),
                g.label(v),
                w
            )));
        }
    }
    let phi = charpoly_of_graph(g)?;
    let eta = eta_by_recurrence(g)?;
    Ok((phi == eta) == g.is_forest())
}
