use serde_json::Value;

use polyrecon_web::{fixture, fixture_list, fo_min, lattice_info, reconstruct_graph, truncate_vertex};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn fixture_listing() {
    let v = parse(fixture_list());
    assert_eq!(v["ok"], true);
    let ids: Vec<&str> = v["fixtures"].as_array().unwrap().iter().map(|f| f["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"cube") && ids.contains(&"P3") && ids.contains(&"P12"));
    let p8 = parse(fixture("P8"));
    assert_eq!(p8["non_simple"], serde_json::json!([0, 1]));
    assert_eq!(parse(fixture("nope"))["ok"], false);
}

#[test]
fn reconstruct_round_trip() {
    let cube = parse(fixture("cube"));
    let graph = cube["graph"].to_string();
    let v = parse(reconstruct_graph(&graph, Some(3)));
    assert_eq!(v["ok"], true);
    assert_eq!(v["lattice"], cube["lattice"]);
    assert_eq!(v["dimension_assumed"], false);

    let p3 = parse(fixture("P3"))["graph"].to_string();
    let refused = parse(reconstruct_graph(&p3, None));
    assert_eq!(refused["ok"], false);
    assert!(refused["error"].as_str().unwrap().contains("h=3"));
    assert_eq!(parse(reconstruct_graph("not json", None))["ok"], false);
}

#[test]
fn minimum_with_and_without_sink() {
    let g = parse(fixture("P8"))["graph"].to_string();
    let v = parse(fo_min(&g, None));
    assert_eq!(v["minimum"], "47");
    let v = parse(fo_min(&g, Some(0)));
    assert_eq!(v["minimum"], "87");
    let w = &v["witnesses"][0];
    assert_eq!(w["indegrees"][0], 6);
    assert_eq!(parse(fo_min(&g, Some(40)))["ok"], false);
}

#[test]
fn vertex_truncation() {
    let tet = parse(fixture("tetrahedron"))["lattice"].to_string();
    let v = parse(truncate_vertex(&tet, 0));
    assert_eq!(v["f_vector"], serde_json::json!([6, 9, 5, 1]));
    assert_eq!(parse(lattice_info(&v["lattice"].to_string()))["f_vector"], v["f_vector"]);
    assert_eq!(parse(truncate_vertex(&tet, 7))["ok"], false);
}
