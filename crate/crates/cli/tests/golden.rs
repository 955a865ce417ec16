//! Byte-for-byte comparison of JSON output against checked-in files.
//! Set `QUADRIC_UPDATE_GOLDEN=1` to rewrite them.

mod common;

use common::{golden_path, json_output, stale_golden, GOLDEN};

#[test]
fn json_matches_golden_files() {
    if std::env::var_os("QUADRIC_UPDATE_GOLDEN").is_some() {
        for (name, args) in GOLDEN {
            std::fs::write(golden_path(name), json_output(args)).unwrap();
        }
    }
    let stale = stale_golden();
    assert!(stale.is_empty(), "output differs from golden files: {stale:?}");
}

#[test]
fn output_is_repeatable() {
    for (_, args) in GOLDEN.iter().take(6) {
        assert_eq!(json_output(args), json_output(args));
    }
}

#[test]
fn json_is_parseable_with_sorted_keys() {
    for (name, args) in GOLDEN {
        let v: serde_json::Value = serde_json::from_str(&json_output(args)).unwrap();
        let obj = v.as_object().unwrap_or_else(|| panic!("{name}"));
        let keys: Vec<&String> = obj.keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted, "{name}");
    }
}
