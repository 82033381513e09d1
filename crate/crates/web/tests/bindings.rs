use annulus_web::{branch_dot, branch_json, profile_json};

#[test]
fn branch_outputs() {
    let v: serde_json::Value = serde_json::from_str(&branch_json("2,3").unwrap()).unwrap();
    assert_eq!(v["delta"], 1);
    assert_eq!(v["milnor"], 2);
    assert!(branch_dot("2,3").unwrap().contains("E3 (-1)"));
    assert!(branch_json("2,4").is_err());
}

#[test]
fn profile_output() {
    let v: serde_json::Value = serde_json::from_str(&profile_json(2, 3, 2, 3).unwrap()).unwrap();
    assert_eq!(v["invariants"]["two_delta_max"], 14);
    assert_eq!(v["certificate"]["verdict"], "BoundaryExcluded");
    assert!(profile_json(0, 3, 2, 3).is_err());
}
