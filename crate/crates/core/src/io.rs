//! Byte-deterministic JSON and DOT serialization.
//!
//! Graph JSON: {"n": int, "edges": [[a, b], ...]} with each pair ascending
//! and the list sorted lexicographically. Decomposition JSON carries nodes,
//! tree edges and a bag map keyed by node id in ascending order. All writers
//! emit compact JSON with a trailing newline, so a given object always
//! serializes to the same bytes.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Coloring, ColoringError, MonoReport};
use crate::decomp::TreeDecomposition;
use crate::graph::{Graph, GraphError, NecklaceSpec};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("decomposition nodes must be exactly 0..{expected}, got {found:?}")]
    NodesNotDense { expected: usize, found: Vec<usize> },
    #[error("bag key {0:?} is not a node id")]
    BadBagKey(String),
    #[error("bag missing for node {0}")]
    MissingBag(usize),
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.vertex_count(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
    };
    finish(serde_json::to_string(&doc).expect("graph serializes"))
}

pub fn graph_from_json(s: &str) -> Result<Graph, IoError> {
    let doc: GraphJson = serde_json::from_str(s)?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    Ok(Graph::new(doc.n, &edges)?)
}

/// DOT export for visualization; vertices then edges, all in ascending order.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(a, b) in g.edges() {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct TdJson {
    nodes: Vec<usize>,
    tree_edges: Vec<[usize; 2]>,
    bags: IndexMap<String, Vec<usize>>,
}

pub fn td_to_json(td: &TreeDecomposition) -> String {
    let mut bags = IndexMap::new();
    for (node, bag) in td.bags.iter().enumerate() {
        let mut sorted = bag.clone();
        sorted.sort_unstable();
        bags.insert(node.to_string(), sorted);
    }
    let doc = TdJson {
        nodes: (0..td.bags.len()).collect(),
        tree_edges: td.tree.edges().iter().map(|&(a, b)| [a, b]).collect(),
        bags,
    };
    finish(serde_json::to_string(&doc).expect("decomposition serializes"))
}

pub fn td_from_json(s: &str) -> Result<TreeDecomposition, IoError> {
    let doc: TdJson = serde_json::from_str(s)?;
    let mut sorted = doc.nodes.clone();
    sorted.sort_unstable();
    if sorted != (0..doc.nodes.len()).collect::<Vec<_>>() {
        return Err(IoError::NodesNotDense { expected: doc.nodes.len(), found: doc.nodes });
    }
    let mut bags = vec![None; doc.nodes.len()];
    for (key, bag) in doc.bags {
        let node: usize = key.parse().map_err(|_| IoError::BadBagKey(key.clone()))?;
        if node >= bags.len() {
            return Err(IoError::BadBagKey(key));
        }
        bags[node] = Some(bag);
    }
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or(IoError::MissingBag(i)))
        .collect::<Result<_, _>>()?;
    let edges: Vec<(usize, usize)> = doc.tree_edges.iter().map(|e| (e[0], e[1])).collect();
    let tree = Graph::new(doc.nodes.len(), &edges)?;
    Ok(TreeDecomposition::new(tree, bags))
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    k: usize,
    colors: Vec<usize>,
}

pub fn coloring_to_json(c: &Coloring) -> String {
    let doc = ColoringJson { k: c.k(), colors: c.colors().to_vec() };
    finish(serde_json::to_string(&doc).expect("coloring serializes"))
}

pub fn coloring_from_json(s: &str) -> Result<Coloring, IoError> {
    let doc: ColoringJson = serde_json::from_str(s)?;
    Ok(Coloring::new(doc.k, doc.colors)?)
}

#[derive(Serialize, Deserialize)]
struct NecklaceJson {
    n: usize,
    q: usize,
    cliques: Vec<Vec<usize>>,
}

pub fn necklace_spec_to_json(spec: &NecklaceSpec) -> String {
    let doc = NecklaceJson { n: spec.n, q: spec.q, cliques: spec.cliques.clone() };
    finish(serde_json::to_string(&doc).expect("spec serializes"))
}

pub fn necklace_spec_from_json(s: &str) -> Result<NecklaceSpec, IoError> {
    let doc: NecklaceJson = serde_json::from_str(s)?;
    Ok(NecklaceSpec::new(doc.n, doc.q, doc.cliques)?)
}

#[derive(Serialize)]
struct MonoComponentJson {
    color: usize,
    vertices: Vec<usize>,
    diameter: usize,
}

#[derive(Serialize)]
struct MonoReportJson {
    components: Vec<MonoComponentJson>,
    max_size: usize,
    max_diameter: usize,
}

pub fn mono_report_to_json(r: &MonoReport) -> String {
    let doc = MonoReportJson {
        components: r
            .components
            .iter()
            .map(|c| MonoComponentJson {
                color: c.color,
                vertices: c.vertices.clone(),
                diameter: c.diameter,
            })
            .collect(),
        max_size: r.max_size,
        max_diameter: r.max_diameter,
    };
    finish(serde_json::to_string(&doc).expect("report serializes"))
}

fn finish(mut s: String) -> String {
    s.push('\n');
    s
}
