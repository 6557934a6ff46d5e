mod common;

#[test]
fn n6_snapshot_is_reproduced() {
    if let Err(e) = common::golden_matches() {
        panic!("{e}; rerun with UPDATE_GOLDEN=1 after an intended change");
    }
}

#[test]
fn scan_is_deterministic() {
    assert_eq!(common::golden_csv(), common::golden_csv());
}
