//! Replays the checked-in fuzz corpus through the same assertions the fuzz
//! targets make, so the seeds stay meaningful without a nightly toolchain.

use std::path::PathBuf;

use qthopf::format::{parse, parse_over, serialize};
use qthopf::Field;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn description_seeds_parse() {
    for (name, data) in seeds("parse_description") {
        let text = String::from_utf8(data).unwrap();
        let file = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let _ = file.build_qt();
        for o in &file.objects {
            let _ = file.build_hopf().and_then(|h| o.module(&h));
        }
    }
}

#[test]
fn roundtrip_seeds_are_stable() {
    for (name, data) in seeds("roundtrip") {
        let text = String::from_utf8(data).unwrap();
        let file = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let once = serialize(&file);
        let back = parse(&once).unwrap();
        assert_eq!(back, file, "{name}");
        assert_eq!(serialize(&back), once, "{name}");
        let _ = parse_over(&text, Field::Prime(7));
    }
}

#[test]
fn scalar_seeds_reprint() {
    let mut accepted = 0;
    for (_, data) in seeds("parse_scalar") {
        let text = String::from_utf8(data).unwrap();
        for field in [Field::Rational, Field::Prime(2), Field::Prime(7), Field::Prime(65521)] {
            if let Ok(x) = field.parse(&text) {
                assert_eq!(field.parse(&x.to_string()).unwrap(), x);
                accepted += 1;
            }
        }
    }
    assert!(accepted > 0);
}
