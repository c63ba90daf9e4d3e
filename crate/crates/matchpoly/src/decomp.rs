//! Root-multiplicity vertex classification and the Gallai-Edmonds style
//! decomposition it induces.
//!
//! Fix a real root candidate theta. Deleting a vertex moves the
//! multiplicity of theta in the matching polynomial by at most one, so each
//! vertex is essential (drops), neutral (unchanged), or positive (rises).
//! The essential set D, its non-essential neighbors A, and the leftovers
//! partition the graph exactly as in the classical matching decomposition,
//! and the components of G minus A that still carry theta are critical:
//! multiplicity one, every vertex essential.
//!
//! Every structure claim the decomposition rests on is re-verified before a
//! result is returned; a violation is an internal error (an arithmetic bug,
//! never bad input).

use std::collections::BTreeSet;

use num::Zero;

use crate::charpoly::HermitianWeightedMatrix;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::matching::{eta_by_recurrence, mu_by_recurrence, EtaMemo};
use crate::poly::RationalPolynomial;
use crate::rational::Rational;
use crate::roots::{multiplicity_at, ThetaSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    Essential,
    Neutral,
    Positive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexClass {
    pub kind: VertexKind,
    pub special: bool,
}

/// Multiplicity of theta as a root of eta(G).
pub fn multiplicity(g: &WeightedGraph, theta: &ThetaSpec) -> Result<usize> {
    multiplicity_at(&eta_by_recurrence(g)?, theta)
}

/// eta over induced vertex subsets, memoized when the graph is dense and
/// recomputed per call on forests (whose recursion is cheap and uncapped).
enum Etas<'g> {
    Memo(EtaMemo<'g>),
    Direct(&'g WeightedGraph),
}

impl<'g> Etas<'g> {
    fn new(g: &'g WeightedGraph) -> Result<Self> {
        if g.is_forest() {
            Ok(Etas::Direct(g))
        } else {
            Ok(Etas::Memo(EtaMemo::new(g, true)?))
        }
    }

    fn eta_of_subset(&mut self, keep: &[usize]) -> Result<RationalPolynomial> {
        match self {
            Etas::Memo(memo) => {
                let mask = keep.iter().fold(0u64, |m, &v| m | (1u64 << v));
                Ok(memo.eta(mask))
            }
            Etas::Direct(g) => eta_by_recurrence(&g.induced(keep)?),
        }
    }

    fn mult_of_subset(&mut self, keep: &[usize], theta: &ThetaSpec) -> Result<usize> {
        multiplicity_at(&self.eta_of_subset(keep)?, theta)
    }
}

fn without(all: &[usize], v: usize) -> Vec<usize> {
    all.iter().copied().filter(|&u| u != v).collect()
}

/// Multiplicity of theta in eta(G) and the per-vertex kind, sharing one
/// memo across all n deletions.
fn vertex_kinds(
    g: &WeightedGraph,
    theta: &ThetaSpec,
    etas: &mut Etas<'_>,
) -> Result<(usize, Vec<VertexKind>)> {
    let all: Vec<usize> = (0..g.n()).collect();
    let mult = etas.mult_of_subset(&all, theta)?;
    let mut kinds = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let mv = etas.mult_of_subset(&without(&all, v), theta)?;
        let kind = if mv + 1 == mult {
            VertexKind::Essential
        } else if mv == mult {
            VertexKind::Neutral
        } else if mv == mult + 1 {
            VertexKind::Positive
        } else {
            return Err(Error::internal(format!(
                "interlacing violated at vertex {:?}: multiplicity {mult} became {mv} after deletion",
                g.label(v)
            )));
        };
        kinds.push(kind);
    }
    Ok((mult, kinds))
}

/// Classify one vertex: its multiplicity delta, plus the special flag
/// (non-essential but adjacent to an essential vertex).
pub fn classify_vertex(g: &WeightedGraph, theta: &ThetaSpec, u: usize) -> Result<VertexClass> {
    if u >= g.n() {
        return Err(Error::input(format!(
            "vertex index {u} out of range for a graph on {} vertices",
            g.n()
        )));
    }
    let mut etas = Etas::new(g)?;
    let (_, kinds) = vertex_kinds(g, theta, &mut etas)?;
    Ok(class_of(g, &kinds, u)?)
}

fn class_of(g: &WeightedGraph, kinds: &[VertexKind], u: usize) -> Result<VertexClass> {
    let special = kinds[u] != VertexKind::Essential
        && g.neighbors(u).iter().any(|&nb| kinds[nb] == VertexKind::Essential);
    if special && kinds[u] != VertexKind::Positive {
        return Err(Error::internal(format!(
            "special vertex {:?} should be positive but is {:?}",
            g.label(u),
            kinds[u]
        )));
    }
    Ok(VertexClass { kind: kinds[u], special })
}

#[derive(Clone, Debug)]
pub struct GEDecomposition {
    theta: ThetaSpec,
    mult: usize,
    classes: Vec<VertexClass>,
    d: Vec<usize>,
    a: Vec<usize>,
    p: Vec<usize>,
    n: Vec<usize>,
    critical_components: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl GEDecomposition {
    pub fn theta(&self) -> &ThetaSpec {
        &self.theta
    }

    pub fn mult(&self) -> usize {
        self.mult
    }

    pub fn class(&self, v: usize) -> &VertexClass {
        &self.classes[v]
    }

    /// Essential vertices.
    pub fn d_set(&self) -> &[usize] {
        &self.d
    }

    /// Special vertices: non-essential neighbors of the essential set.
    pub fn a_set(&self) -> &[usize] {
        &self.a
    }

    /// Positive vertices that are not special.
    pub fn p_set(&self) -> &[usize] {
        &self.p
    }

    /// Neutral vertices.
    pub fn n_set(&self) -> &[usize] {
        &self.n
    }

    pub fn critical_components(&self) -> &[Vec<usize>] {
        &self.critical_components
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_set(&self, vs: &[usize]) -> BTreeSet<String> {
        vs.iter().map(|&v| self.labels[v].clone()).collect()
    }

    pub fn d_labels(&self) -> BTreeSet<String> {
        self.label_set(&self.d)
    }

    pub fn a_labels(&self) -> BTreeSet<String> {
        self.label_set(&self.a)
    }

    pub fn p_labels(&self) -> BTreeSet<String> {
        self.label_set(&self.p)
    }

    pub fn n_labels(&self) -> BTreeSet<String> {
        self.label_set(&self.n)
    }
}

/// Full decomposition at theta. Multiplicity zero is a legitimate input
/// and yields an empty essential set, not an error.
pub fn decompose(g: &WeightedGraph, theta: &ThetaSpec) -> Result<GEDecomposition> {
    let mut etas = Etas::new(g)?;
    let (mult, kinds) = vertex_kinds(g, theta, &mut etas)?;
    let mut classes = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        classes.push(class_of(g, &kinds, v)?);
    }
    let mut d = Vec::new();
    let mut a = Vec::new();
    let mut p = Vec::new();
    let mut n = Vec::new();
    for (v, c) in classes.iter().enumerate() {
        match (c.kind, c.special) {
            (VertexKind::Essential, _) => d.push(v),
            (_, true) => a.push(v),
            (VertexKind::Positive, false) => p.push(v),
            (VertexKind::Neutral, false) => n.push(v),
        }
    }

    // Components of G minus A, expressed in g's own indices.
    let remaining: Vec<usize> = (0..g.n()).filter(|v| !a.contains(v)).collect();
    let shaved = g.induced(&remaining)?;
    let mut critical_components = Vec::new();
    for comp in shaved.component_index_sets() {
        let comp_g: Vec<usize> = comp.iter().map(|&i| remaining[i]).collect();
        let comp_mult = etas.mult_of_subset(&comp_g, theta)?;
        if comp_mult == 0 {
            continue;
        }
        if comp_mult != 1 {
            return Err(Error::internal(format!(
                "critical component {:?} has multiplicity {comp_mult}, expected 1",
                comp_g.iter().map(|&v| g.label(v)).collect::<Vec<_>>()
            )));
        }
        for &v in &comp_g {
            if !d.contains(&v) {
                return Err(Error::internal(format!(
                    "critical component member {:?} is not essential in the full graph",
                    g.label(v)
                )));
            }
            if etas.mult_of_subset(&without(&comp_g, v), theta)? != 0 {
                return Err(Error::internal(format!(
                    "vertex {:?} is not essential within its critical component",
                    g.label(v)
                )));
            }
        }
        critical_components.push(comp_g);
    }
    if critical_components.len() != a.len() + mult {
        return Err(Error::internal(format!(
            "decomposition count mismatch: {} critical components, |A| = {}, multiplicity = {mult}",
            critical_components.len(),
            a.len()
        )));
    }
    let covered: BTreeSet<usize> = critical_components.iter().flatten().copied().collect();
    if covered != d.iter().copied().collect::<BTreeSet<usize>>() {
        return Err(Error::internal(
            "union of critical components differs from the essential set",
        ));
    }
    Ok(GEDecomposition {
        theta: theta.clone(),
        mult,
        classes,
        d,
        a,
        p,
        n,
        critical_components,
        labels: g.labels().to_vec(),
    })
}

/// A path (given as its vertex sequence) is essential when deleting all of
/// it drops the multiplicity by exactly one. Deleting a path can never
/// drop it by more; that bound is asserted.
pub fn essential_path_check(g: &WeightedGraph, theta: &ThetaSpec, path: &[usize]) -> Result<bool> {
    if path.len() < 2 {
        return Err(Error::input("path must contain at least one edge"));
    }
    let mut seen = BTreeSet::new();
    for &v in path {
        if v >= g.n() {
            return Err(Error::input(format!("path vertex {v} out of range")));
        }
        if !seen.insert(v) {
            return Err(Error::input(format!(
                "path repeats vertex {:?}",
                g.label(v)
            )));
        }
    }
    for pair in path.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(Error::input(format!(
                "path step {:?}-{:?} is not an edge",
                g.label(pair[0]),
                g.label(pair[1])
            )));
        }
    }
    let mult = multiplicity(g, theta)?;
    let rest = multiplicity(&g.delete_vertices(path)?, theta)?;
    if mult > 0 && rest < mult - 1 {
        return Err(Error::internal(format!(
            "path deletion dropped multiplicity from {mult} to {rest}"
        )));
    }
    Ok(mult > 0 && rest == mult - 1)
}

/// Deleting any special vertex leaves D, P, and N unchanged and shrinks A
/// by exactly that vertex. Vacuously true when A is empty.
pub fn stability_check(g: &WeightedGraph, theta: &ThetaSpec) -> Result<bool> {
    let base = decompose(g, theta)?;
    for &u in base.a_set() {
        let sub = decompose(&g.delete_vertex(u)?, theta)?;
        let mut expected_a = base.a_labels();
        expected_a.remove(&base.labels()[u]);
        if sub.d_labels() != base.d_labels()
            || sub.p_labels() != base.p_labels()
            || sub.n_labels() != base.n_labels()
            || sub.a_labels() != expected_a
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For connected g: if every vertex is essential, the multiplicity must be
/// exactly one (asserted). Returns whether the all-essential premise held.
pub fn gallai_lemma_check(g: &WeightedGraph, theta: &ThetaSpec) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::input("gallai lemma check requires a connected graph"));
    }
    let mut etas = Etas::new(g)?;
    let (mult, kinds) = vertex_kinds(g, theta, &mut etas)?;
    if kinds.iter().all(|&k| k == VertexKind::Essential) {
        if mult != 1 {
            return Err(Error::internal(format!(
                "all vertices essential but multiplicity is {mult}, expected 1"
            )));
        }
        Ok(true)
    } else {
        Ok(false)
    }
}

/// Number of vertices missed by a maximum matching: the multiplicity of
/// zero in the vertex-weight-free matching polynomial.
pub fn deficiency(g: &WeightedGraph) -> Result<usize> {
    multiplicity_at(&mu_by_recurrence(g)?, &ThetaSpec::Rational(Rational::zero()))
}

/// The classical matching decomposition, reached by running the weighted
/// machinery at theta = c on a graph whose vertex weights all equal c.
/// In that regime no vertex is neutral and the multiplicity equals the
/// deficiency; both are asserted.
pub fn classical_decomposition(g: &WeightedGraph, c: &Rational) -> Result<GEDecomposition> {
    for v in 0..g.n() {
        if g.vertex_weight(v) != c {
            return Err(Error::input(format!(
                "classical decomposition requires every vertex weight to equal {c}; vertex {:?} has {}",
                g.label(v),
                g.vertex_weight(v)
            )));
        }
    }
    let d = decompose(g, &ThetaSpec::Rational(c.clone()))?;
    if !d.n_set().is_empty() {
        return Err(Error::internal(
            "classical decomposition produced neutral vertices",
        ));
    }
    if d.mult() != deficiency(g)? {
        return Err(Error::internal(
            "classical decomposition multiplicity differs from the deficiency",
        ));
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParterBranch {
    pub vertices: Vec<String>,
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParterReport {
    pub vertex: String,
    pub degree: usize,
    pub mult_before: usize,
    pub mult_after: usize,
    pub branches: Vec<ParterBranch>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParterOutcome {
    Found(ParterReport),
    HypothesisNotMet { mult: usize, reason: String },
}

/// Find a vertex of a Hermitian tree matrix whose deletion raises the
/// multiplicity of theta, with the branch structure the tree theorems
/// promise: multiplicity >= 2 forces degree >= 3 and at least three
/// branches carrying theta; multiplicity exactly 1 (with some
/// non-essential vertex) forces degree >= 2 and two branches of
/// multiplicity one. Candidates are scanned by decreasing degree, ties by
/// vertex order, so the result is deterministic.
pub fn parter_wiener_find(
    m: &HermitianWeightedMatrix,
    theta: &ThetaSpec,
) -> Result<ParterOutcome> {
    let g = m.to_graph()?;
    if !g.is_tree() {
        return Err(Error::input("the matrix graph is not a tree"));
    }
    let mut etas = Etas::new(&g)?;
    let (mult, kinds) = vertex_kinds(&g, theta, &mut etas)?;
    if mult == 0 {
        return Ok(ParterOutcome::HypothesisNotMet {
            mult,
            reason: "theta is not a root of the matching polynomial".into(),
        });
    }
    if mult == 1 && kinds.iter().all(|&k| k == VertexKind::Essential) {
        return Ok(ParterOutcome::HypothesisNotMet {
            mult,
            reason: "multiplicity is 1 and every vertex is essential".into(),
        });
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let all: Vec<usize> = (0..g.n()).collect();
    for &v in &order {
        if etas.mult_of_subset(&without(&all, v), theta)? != mult + 1 {
            continue;
        }
        let rest: Vec<usize> = without(&all, v);
        let sub = g.induced(&rest)?;
        let mut branches = Vec::new();
        for comp in sub.component_index_sets() {
            let comp_g: Vec<usize> = comp.iter().map(|&i| rest[i]).collect();
            let bm = etas.mult_of_subset(&comp_g, theta)?;
            let qualifies = if mult >= 2 { bm >= 1 } else { bm == 1 };
            if qualifies {
                branches.push(ParterBranch {
                    vertices: comp_g.iter().map(|&w| g.label(w).to_string()).collect(),
                    mult: bm,
                });
            }
        }
        let enough = if mult >= 2 {
            g.degree(v) >= 3 && branches.len() >= 3
        } else {
            g.degree(v) >= 2 && branches.len() >= 2
        };
        if enough {
            return Ok(ParterOutcome::Found(ParterReport {
                vertex: g.label(v).to_string(),
                degree: g.degree(v),
                mult_before: mult,
                mult_after: mult + 1,
                branches,
            }));
        }
    }
    Err(Error::internal(
        "no qualifying vertex found although the hypothesis was met",
    ))
}
