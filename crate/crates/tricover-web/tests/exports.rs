use serde_json::Value;
use tricover_web::{generate, shapes, solve_cover3, solve_d3c, verify_reduction};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).expect("json")
}

#[test]
fn generated_instance_round_trips_through_shapes() {
    let text = generate("weighted-rects", 25, 7);
    let s = parse(&shapes(&text));
    assert_eq!(s["status"], "ok");
    assert_eq!(s["points"].as_array().unwrap().len(), 25);
    assert_eq!(s["rects"].as_array().unwrap().len(), 25);
}

#[test]
fn cover_matches_oracle_variant() {
    for seed in 0..10 {
        let text = generate("weighted-rects", 20, seed);
        let a = parse(&solve_cover3(&text, "auto"));
        let b = parse(&solve_cover3(&text, "oracle"));
        assert_eq!(a["weight"], b["weight"], "seed {seed}");
        assert_eq!(a["status"], b["status"]);
    }
}

#[test]
fn unit_square_cover_and_center() {
    let text = generate("unit-squares", 30, 3);
    let c = parse(&solve_cover3(&text, "unit-unw"));
    assert!(c["status"] == "ok" || c["status"] == "infeasible");
    let d = parse(&solve_d3c(&text));
    assert_eq!(d["status"], "ok");
    assert_eq!(d["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn reduction_check_on_small_graph() {
    let src = "DIM 0 KIND graph WEIGHTED\n4 4\n0 1/30 1/15 1/10\n0 1 1/50\n1 2 1/40\n0 2 1/20\n2 3 1/25\n";
    let v = parse(&verify_reduction("weighted_triangle_r2", src));
    assert_eq!(v["agree"], true);
    assert_eq!(v["source"], true);
}

#[test]
fn bad_input_reports_error() {
    assert_eq!(parse(&solve_cover3("DIM 2 KIND nonsense", "auto"))["status"], "error");
    assert_eq!(parse(&solve_cover3(&generate("rects", 5, 1), "bogus"))["status"], "error");
}
