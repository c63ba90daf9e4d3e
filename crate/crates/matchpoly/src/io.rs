//! JSON formats for graphs, Hermitian matrices, and structured results.
//!
//! Rationals travel as "p/q" strings, never floats, so values survive tool
//! boundaries exactly. Serialization is canonical: optional fields are
//! always written, vertices and edges appear in graph order, and maps are
//! sorted, so the same value always produces the same bytes.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::charpoly::HermitianWeightedMatrix;
use crate::decomp::{GEDecomposition, ParterOutcome};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::pathtree::PathTree;
use crate::poly::RationalPolynomial;
use crate::rational::{format_rational, parse_rational, GaussianRational};
use crate::roots::ThetaSpec;

fn zero_fraction() -> String {
    "0/1".into()
}

#[derive(Serialize, Deserialize)]
struct VertexDto {
    id: String,
    #[serde(default = "zero_fraction")]
    w1: String,
}

#[derive(Serialize, Deserialize)]
struct WeightDto {
    re: String,
    #[serde(default = "zero_fraction")]
    im: String,
}

#[derive(Serialize, Deserialize)]
struct EdgeDto {
    u: String,
    v: String,
    w: WeightDto,
}

#[derive(Serialize, Deserialize)]
struct GraphDto {
    vertices: Vec<VertexDto>,
    edges: Vec<EdgeDto>,
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializing plain data");
    s.push('\n');
    s
}

/// Parse the graph file format. Unknown ids, bad fractions, duplicate
/// edges, loops, and zero weights are all reported with the offending
/// element named.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let dto: GraphDto =
        serde_json::from_str(text).map_err(|e| Error::input(format!("graph JSON: {e}")))?;
    let mut labels = Vec::with_capacity(dto.vertices.len());
    let mut weights = Vec::with_capacity(dto.vertices.len());
    let mut index = HashMap::new();
    for (k, v) in dto.vertices.iter().enumerate() {
        let w1 = parse_rational(&v.w1)
            .map_err(|e| Error::input(format!("vertex {:?}: {e}", v.id)))?;
        labels.push(v.id.clone());
        weights.push(w1);
        index.entry(v.id.as_str()).or_insert(k);
    }
    let mut edges = Vec::with_capacity(dto.edges.len());
    for e in &dto.edges {
        let u = *index.get(e.u.as_str()).ok_or_else(|| {
            Error::input(format!("edge {:?}-{:?}: unknown vertex id {:?}", e.u, e.v, e.u))
        })?;
        let v = *index.get(e.v.as_str()).ok_or_else(|| {
            Error::input(format!("edge {:?}-{:?}: unknown vertex id {:?}", e.u, e.v, e.v))
        })?;
        let re = parse_rational(&e.w.re)
            .map_err(|err| Error::input(format!("edge {:?}-{:?}: {err}", e.u, e.v)))?;
        let im = parse_rational(&e.w.im)
            .map_err(|err| Error::input(format!("edge {:?}-{:?}: {err}", e.u, e.v)))?;
        edges.push((u, v, GaussianRational::new(re, im)));
    }
    WeightedGraph::from_parts(Some(labels), weights, edges)
}

fn graph_dto(g: &WeightedGraph) -> GraphDto {
    GraphDto {
        vertices: (0..g.n())
            .map(|v| VertexDto {
                id: g.label(v).to_string(),
                w1: format_rational(g.vertex_weight(v)),
            })
            .collect(),
        edges: g
            .edges()
            .map(|(u, v, w)| EdgeDto {
                u: g.label(u).to_string(),
                v: g.label(v).to_string(),
                w: WeightDto {
                    re: format_rational(w.re()),
                    im: format_rational(w.im()),
                },
            })
            .collect(),
    }
}

pub fn serialize_graph(g: &WeightedGraph) -> String {
    pretty(&graph_dto(g))
}

#[derive(Serialize, Deserialize)]
struct MatrixEntryDto {
    i: usize,
    j: usize,
    re: String,
    #[serde(default = "zero_fraction")]
    im: String,
}

#[derive(Serialize, Deserialize)]
struct MatrixDto {
    n: usize,
    entries: Vec<MatrixEntryDto>,
}

/// Parse the Hermitian matrix format: only entries with i <= j are given,
/// the lower triangle is mirrored by conjugation.
pub fn parse_matrix(text: &str) -> Result<HermitianWeightedMatrix> {
    let dto: MatrixDto =
        serde_json::from_str(text).map_err(|e| Error::input(format!("matrix JSON: {e}")))?;
    let mut entries = vec![vec![GaussianRational::zero(); dto.n]; dto.n];
    let mut seen = BTreeSet::new();
    for e in &dto.entries {
        if e.i > e.j {
            return Err(Error::input(format!(
                "entry ({}, {}): only the upper triangle (i <= j) may be given",
                e.i, e.j
            )));
        }
        if e.j >= dto.n {
            return Err(Error::input(format!(
                "entry ({}, {}): index out of range for n = {}",
                e.i, e.j, dto.n
            )));
        }
        if !seen.insert((e.i, e.j)) {
            return Err(Error::input(format!("entry ({}, {}) given twice", e.i, e.j)));
        }
        let re = parse_rational(&e.re)
            .map_err(|err| Error::input(format!("entry ({}, {}): {err}", e.i, e.j)))?;
        let im = parse_rational(&e.im)
            .map_err(|err| Error::input(format!("entry ({}, {}): {err}", e.i, e.j)))?;
        let w = GaussianRational::new(re, im);
        entries[e.j][e.i] = w.conj();
        entries[e.i][e.j] = w;
    }
    HermitianWeightedMatrix::from_entries(entries)
}

pub fn serialize_matrix(m: &HermitianWeightedMatrix) -> String {
    let mut entries = Vec::new();
    for i in 0..m.n() {
        for j in i..m.n() {
            let w = m.entry(i, j);
            if !w.is_zero() {
                entries.push(MatrixEntryDto {
                    i,
                    j,
                    re: format_rational(w.re()),
                    im: format_rational(w.im()),
                });
            }
        }
    }
    pretty(&MatrixDto { n: m.n(), entries })
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ThetaDto {
    Rational { value: String },
    Algebraic { min_poly: Vec<String>, interval: [String; 2] },
}

pub fn theta_to_dto(theta: &ThetaSpec) -> ThetaDto {
    match theta {
        ThetaSpec::Rational(r) => ThetaDto::Rational { value: format_rational(r) },
        ThetaSpec::Algebraic(a) => {
            let (lo, hi) = a.interval();
            ThetaDto::Algebraic {
                min_poly: a.min_poly().to_fraction_strings(),
                interval: [format_rational(lo), format_rational(hi)],
            }
        }
    }
}

/// Rebuild a theta from its JSON form, re-running the full validation
/// (square-free minimal polynomial, isolating interval with one root).
pub fn theta_from_dto(dto: &ThetaDto) -> Result<ThetaSpec> {
    match dto {
        ThetaDto::Rational { value } => Ok(ThetaSpec::Rational(parse_rational(value)?)),
        ThetaDto::Algebraic { min_poly, interval } => {
            let p = RationalPolynomial::from_fraction_strings(min_poly)?;
            let lo = parse_rational(&interval[0])?;
            let hi = parse_rational(&interval[1])?;
            ThetaSpec::algebraic(p, lo, hi)
        }
    }
}

#[derive(Serialize)]
struct DecompositionDto {
    theta: ThetaDto,
    mult: usize,
    #[serde(rename = "D")]
    d: Vec<String>,
    #[serde(rename = "A")]
    a: Vec<String>,
    #[serde(rename = "P")]
    p: Vec<String>,
    #[serde(rename = "N")]
    n: Vec<String>,
    critical_components: Vec<Vec<String>>,
}

fn decomposition_dto(d: &GEDecomposition) -> DecompositionDto {
    let name = |vs: &[usize]| -> Vec<String> {
        vs.iter().map(|&v| d.labels()[v].clone()).collect()
    };
    DecompositionDto {
        theta: theta_to_dto(d.theta()),
        mult: d.mult(),
        d: name(d.d_set()),
        a: name(d.a_set()),
        p: name(d.p_set()),
        n: name(d.n_set()),
        critical_components: d.critical_components().iter().map(|c| name(c)).collect(),
    }
}

pub fn decomposition_json(d: &GEDecomposition) -> String {
    pretty(&decomposition_dto(d))
}

pub fn decomposition_list_json(ds: &[GEDecomposition]) -> String {
    pretty(&ds.iter().map(decomposition_dto).collect::<Vec<_>>())
}

#[derive(Serialize)]
struct PathTreeDto {
    tree: GraphDto,
    root: String,
    paths: BTreeMap<String, Vec<String>>,
}

/// The path-tree in the graph format, plus the sidecar map from tree
/// vertex to the original-graph path it stands for.
pub fn path_tree_json(g: &WeightedGraph, pt: &PathTree) -> String {
    let tree = pt.tree();
    let paths = pt
        .node_paths()
        .iter()
        .enumerate()
        .map(|(node, path)| {
            (
                tree.label(node).to_string(),
                path.iter().map(|&v| g.label(v).to_string()).collect(),
            )
        })
        .collect();
    pretty(&PathTreeDto {
        tree: graph_dto(tree),
        root: tree.label(pt.root()).to_string(),
        paths,
    })
}

#[derive(Serialize)]
struct ParterBranchDto {
    vertices: Vec<String>,
    mult: usize,
}

#[derive(Serialize)]
struct ParterReportDto {
    vertex: String,
    degree: usize,
    mult_before: usize,
    mult_after: usize,
    branches: Vec<ParterBranchDto>,
}

#[derive(Serialize)]
struct HypothesisDto {
    hypothesis_met: bool,
    mult: usize,
    reason: String,
}

pub fn parter_json(outcome: &ParterOutcome) -> String {
    match outcome {
        ParterOutcome::Found(r) => pretty(&ParterReportDto {
            vertex: r.vertex.clone(),
            degree: r.degree,
            mult_before: r.mult_before,
            mult_after: r.mult_after,
            branches: r
                .branches
                .iter()
                .map(|b| ParterBranchDto { vertices: b.vertices.clone(), mult: b.mult })
                .collect(),
        }),
        ParterOutcome::HypothesisNotMet { mult, reason } => pretty(&HypothesisDto {
            hypothesis_met: false,
            mult: *mult,
            reason: reason.clone(),
        }),
    }
}

/// Coefficient list, constant term first, as exact fraction strings.
pub fn polynomial_json(p: &RationalPolynomial) -> String {
    let mut s = serde_json::to_string(&p.to_fraction_strings()).expect("serializing strings");
    s.push('\n');
    s
}
