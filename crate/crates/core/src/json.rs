//! JSON file formats for complexes, graphs and ideals, and renderings of
//! results. Objects are built as `serde_json::Value`, whose maps keep keys
//! sorted.

use crate::bitset::{LabelSet, VertexSet};
use crate::complex::SimplicialComplex;
use crate::deform::{DeformationChecks, DeformationReport, PartitionBlock};
use crate::error::Result;
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::oracle::DecompositionCertificate;
use crate::scarf::{IrreducibleComponent, ScarfComplex};
use serde::Deserialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexFile {
    pub fn build(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.n, &self.facets)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphFile {
    pub fn build(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

impl IdealFile {
    pub fn build(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::from_exponents(self.n, &self.generators)
    }
}

fn vertex_list(s: VertexSet) -> Value {
    json!(s.to_vec())
}

fn label_list(s: LabelSet) -> Vec<usize> {
    s.iter().map(|l| l + 1).collect()
}

pub fn complex_json(k: &SimplicialComplex) -> Value {
    json!({ "n": k.n(), "facets": k.facet_lists() })
}

pub fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges() })
}

pub fn ideal_json(m: &MonomialIdeal) -> Value {
    let gens: Vec<&[u32]> = m.generators().iter().map(|g| g.exponents()).collect();
    json!({ "n": m.n(), "generators": gens })
}

/// Labels are 1-based; a face key joins its labels with commas.
pub fn scarf_json(s: &ScarfComplex) -> Value {
    let labels: Vec<String> = (0..s.labels().len()).map(|l| s.label_name(l)).collect();
    let faces: Vec<Vec<usize>> = s.faces().iter().map(|&f| label_list(f)).collect();
    let mut lcms = Map::new();
    for (&face, lcm) in s.faces().iter().zip(s.lcms()) {
        let key = label_list(face).iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        lcms.insert(key, json!(lcm.exponents()));
    }
    json!({
        "labels": labels,
        "faces": faces,
        "lcms": lcms,
        "num_generators": s.num_generators(),
        "artinian_power": s.artinian_power(),
        "dim": s.dimension(),
    })
}

pub fn component_json(c: &IrreducibleComponent) -> Value {
    let map: Map<String, Value> = c.pairs().into_iter().map(|(v, e)| (format!("x{v}"), json!(e))).collect();
    Value::Object(map)
}

pub fn components_json(cs: &[IrreducibleComponent]) -> Value {
    Value::Array(cs.iter().map(component_json).collect())
}

pub fn certificate_json(c: &DecompositionCertificate) -> Value {
    json!({
        "components": components_json(&c.components),
        "method": c.method.name(),
        "verified_equal": c.verified_equal,
    })
}

fn block_json(b: &PartitionBlock) -> Value {
    let nonfaces: Vec<Value> = b.nonfaces.iter().map(|&s| vertex_list(s)).collect();
    json!({ "index": b.index, "exponent": b.exponent, "nonfaces": nonfaces })
}

pub fn checks_json(c: &DeformationChecks) -> Value {
    json!({
        "is_deformation": c.is_deformation,
        "is_generic": c.is_generic,
        "radical_matches": c.radical_matches,
        "cm": c.cm,
        "dim_scarf": c.dim_scarf,
    })
}

pub fn report_json(r: &DeformationReport) -> Value {
    json!({
        "method": r.method.name(),
        "n": r.n,
        "d": r.d,
        "relabeling": r.relabeling,
        "partition": r.blocks.iter().map(block_json).collect::<Vec<_>>(),
        "ideal": ideal_json(&r.ideal),
        "checks": checks_json(&r.checks),
    })
}
