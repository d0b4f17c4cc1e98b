use ribbonrep_web::{compose_json, explore_json, table_json};

#[test]
fn explore_worked_example() {
    let v = explore_json("10,6,6,6,4,1", 3).unwrap();
    assert_eq!(v["quotient"], "[4,3|2|1,1]");
    assert_eq!(v["core"], serde_json::json!([]));
    let sign = ribbonrep::sign_r(&"10,6,6,6,4,1".parse().unwrap(), 3).unwrap();
    assert_eq!(v["sign"]["sign"], sign);
    let ribbons = v["ribbons"].as_array().unwrap();
    assert!(!ribbons.is_empty());
    assert!(ribbons
        .iter()
        .all(|rb| rb["cells"].as_array().unwrap().len() == 3));
}

#[test]
fn explore_nonempty_core() {
    let v = explore_json("2,1", 2).unwrap();
    assert_eq!(v["core"], serde_json::json!([2, 1]));
    assert!(v.get("quotient").is_none());
    assert_eq!(v["ribbons"], serde_json::json!([]));
    assert!(explore_json("1,2", 2)
        .unwrap_err()
        .to_string()
        .contains("1,2"));
    assert!(explore_json("1", 0).is_err());
}

#[test]
fn compose_shows_interlacing() {
    let v = compose_json("[4,3|2|1,1]").unwrap();
    assert_eq!(
        v["words"],
        serde_json::json!(["11|1010", "01|1011", "10|0111"])
    );
    assert_eq!(v["interlaced"], "101110|110001111011");
    assert_eq!(v["text"], "10,6,6,6,4,1");
}

#[test]
fn table_is_capped() {
    let v = table_json("2", 2).unwrap();
    assert_eq!(v["schema"], "ribbonrep.table/1");
    assert!(table_json("2x2", 9).is_err());
    assert!(table_json("x", 1).is_err());
}
