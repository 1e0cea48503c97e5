//! Browser bindings. Every export returns a JSON string: the result object
//! with `"ok": true`, or `{"ok": false, "error": "..."}`.

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use polyrecon::orientations::minimizers;
use polyrecon::reconstruct::reconstruct;
use polyrecon::{fixtures, shapes, Error, FaceLattice, Graph, VertexSet};

/// Cap on witnesses returned to the page.
const MAX_WITNESSES: usize = 16;

fn respond(result: Result<Value, Error>) -> String {
    match result {
        Ok(Value::Object(mut map)) => {
            map.insert("ok".into(), Value::Bool(true));
            Value::Object(map).to_string()
        }
        Ok(other) => json!({ "ok": true, "value": other }).to_string(),
        Err(e) => json!({ "ok": false, "error": e.to_string() }).to_string(),
    }
}

fn value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("serializes")
}

fn graph_value(g: &Graph) -> Value {
    value(&g.to_file())
}

fn lattice_value(l: &FaceLattice) -> Value {
    json!({
        "lattice": value(&l.to_file()),
        "graph": graph_value(l.graph()),
        "dimension": l.dimension(),
        "f_vector": l.f_vector(),
        "non_simple": l.non_simple_vertices(),
    })
}

fn all_fixtures() -> Vec<(String, &'static str, FaceLattice)> {
    let mut all: Vec<(String, &'static str, FaceLattice)> = shapes::all()
        .into_iter()
        .map(|(id, l)| (id.to_string(), "shape", l))
        .collect();
    all.extend(fixtures::catalog().into_iter().map(|e| (e.id, "catalog", e.lattice)));
    all
}

/// `{"fixtures": [{"id", "kind", "dimension", "vertices", "edges", "h"}]}`.
#[wasm_bindgen]
pub fn fixture_list() -> String {
    let list: Vec<Value> = all_fixtures()
        .into_iter()
        .map(|(id, kind, l)| {
            json!({
                "id": id,
                "kind": kind,
                "dimension": l.dimension(),
                "vertices": l.vertex_count(),
                "edges": l.graph().edge_count(),
                "h": l.nearly_simple_index(),
            })
        })
        .collect();
    respond(Ok(json!({ "fixtures": list })))
}

/// Lattice, graph and f-vector of a bundled polytope.
#[wasm_bindgen]
pub fn fixture(id: &str) -> String {
    respond(
        all_fixtures()
            .into_iter()
            .find(|(name, _, _)| name == id)
            .map(|(_, _, l)| lattice_value(&l))
            .ok_or_else(|| Error::Input(format!("no fixture {id:?}"))),
    )
}

/// Reconstructs the face lattice from a graph file.
#[wasm_bindgen]
pub fn reconstruct_graph(graph_json: &str, dim: Option<u32>) -> String {
    respond((|| {
        let g = Graph::from_json(graph_json)?;
        let r = reconstruct(&g, dim.map(|d| d as usize))?;
        let mut v = lattice_value(&r.lattice);
        v["dimension_assumed"] = Value::Bool(r.dimension_assumed);
        v["h"] = json!(r.nearly_simple_index);
        Ok(v)
    })())
}

/// Minimum of `f^O`, the number of minimizing orientations and the first few
/// of them as arc lists.
#[wasm_bindgen]
pub fn fo_min(graph_json: &str, sink: Option<u32>) -> String {
    respond((|| {
        let g = Graph::from_json(graph_json)?;
        let stream = minimizers(&g, sink.map(|s| s as usize))?;
        let minimum = stream.value;
        let mut count = 0usize;
        let mut shown = Vec::new();
        for o in stream {
            if shown.len() < MAX_WITNESSES {
                let arcs: Vec<[usize; 2]> = o.arcs().map(|(a, b)| [a, b]).collect();
                let indegrees: Vec<usize> = (0..g.vertex_count()).map(|v| o.indegree(v)).collect();
                shown.push(json!({ "arcs": arcs, "indegrees": indegrees }));
            }
            count += 1;
        }
        Ok(json!({
            "minimum": minimum.to_string(),
            "count": count,
            "witnesses": shown,
        }))
    })())
}

/// Cuts one vertex off a polytope given as a lattice file.
#[wasm_bindgen]
pub fn truncate_vertex(lattice_json: &str, vertex: u32) -> String {
    respond((|| {
        let l = FaceLattice::from_json(lattice_json)?;
        let v = vertex as usize;
        if v >= l.vertex_count() {
            return Err(Error::Input(format!("vertex {v} out of range")));
        }
        let (cut, record) = l.truncate(VertexSet::singleton(v))?;
        let mut out = lattice_value(&cut);
        out["record"] = value(&record);
        Ok(out)
    })())
}

/// Parses a lattice file, for validating user edits.
#[wasm_bindgen]
pub fn lattice_info(lattice_json: &str) -> String {
    respond(FaceLattice::from_json(lattice_json).map(|l| lattice_value(&l)))
}
