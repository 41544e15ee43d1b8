use mckay_core::catalog::builtin;
use mckay_verify::schema::{load_dir, parse_entry, to_json_string, write_dir};
use mckay_verify::{embedded_catalog, embedded_files, load_catalog, select, CatalogError};

#[test]
fn embedded_files_match_the_builtin_catalog() {
    let mut expected: Vec<(String, String)> =
        builtin().iter().map(|e| (format!("{}.json", e.id), to_json_string(e))).collect();
    expected.sort();
    let mut actual: Vec<(String, String)> =
        embedded_files().iter().map(|(n, t)| (n.to_string(), t.to_string())).collect();
    actual.sort();
    let names = |v: &[(String, String)]| v.iter().map(|x| x.0.clone()).collect::<Vec<_>>();
    assert_eq!(names(&actual), names(&expected), "regenerate with `mckay export-catalog crates/verify/catalog`");
    for (a, e) in actual.iter().zip(&expected) {
        assert_eq!(a.1, e.1, "{} drifted from the built-in catalog", a.0);
    }
}

#[test]
fn json_round_trip_preserves_every_field() {
    for e in builtin() {
        let text = to_json_string(&e);
        let back = parse_entry(&text, &e.id).unwrap();
        assert_eq!(to_json_string(&back), text, "{}", e.id);
        assert_eq!(back.generators, e.generators, "{}", e.id);
        assert_eq!(back.m0_spec, e.m0_spec);
        assert_eq!(back.theorem, e.theorem);
        assert_eq!(back.ade, e.ade);
    }
}

#[test]
fn directory_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let entries = embedded_catalog().unwrap();
    write_dir(dir.path(), &entries).unwrap();
    let loaded = load_dir(dir.path()).unwrap();
    assert_eq!(loaded.len(), entries.len());
    let ids: Vec<_> = loaded.iter().map(|e| e.id.clone()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(load_catalog(Some(dir.path())).is_ok());
}

#[test]
fn malformed_documents_are_rejected() {
    let good = to_json_string(&builtin().into_iter().find(|e| e.id == "T").unwrap());
    assert!(matches!(parse_entry("{", "x"), Err(CatalogError::Parse { .. })));
    let bad_version = good.replace("\"schema_version\": 1", "\"schema_version\": 99");
    assert!(matches!(parse_entry(&bad_version, "x"), Err(CatalogError::Invalid { .. })));
    let bad_variant = good.replace("\"minus\"", "\"sideways\"");
    assert!(matches!(parse_entry(&bad_variant, "x"), Err(CatalogError::Invalid { .. })));
    let bad_kind = good.replace("\"kind\": \"kleinian\"", "\"kind\": \"elliptic\"");
    assert!(matches!(parse_entry(&bad_kind, "x"), Err(CatalogError::Invalid { .. })));
    let bad_power = good.replacen("[[0,\"1\"]]", "[[7,\"1\"]]", 1);
    assert!(matches!(parse_entry(&bad_power, "x"), Err(CatalogError::Invalid { .. })));
}

#[test]
fn duplicate_ids_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let t = to_json_string(&builtin().into_iter().find(|e| e.id == "T").unwrap());
    std::fs::write(dir.path().join("a.json"), &t).unwrap();
    std::fs::write(dir.path().join("b.json"), &t).unwrap();
    assert!(matches!(load_dir(dir.path()), Err(CatalogError::Duplicate(id)) if id == "T"));
}

#[test]
fn selection_rules() {
    let cat = embedded_catalog().unwrap();
    assert_eq!(select(&cat, "all").unwrap().len(), cat.len());
    let ids: Vec<_> = select(&cat, "T, O,I,T").unwrap().iter().map(|e| e.id.as_str()).collect();
    assert_eq!(ids, ["I", "O", "T"]);
    assert!(matches!(select(&cat, ""), Err(CatalogError::EmptySelection)));
    assert!(matches!(select(&cat, " , "), Err(CatalogError::EmptySelection)));
    assert!(matches!(select(&cat, "T,Nope"), Err(CatalogError::UnknownId(id)) if id == "Nope"));
}
