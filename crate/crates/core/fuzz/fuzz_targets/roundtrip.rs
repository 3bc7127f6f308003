#![no_main]

use libfuzzer_sys::fuzz_target;
use qthopf::format::{parse, parse_over, serialize};
use qthopf::Field;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(file) = parse(text) {
        let once = serialize(&file);
        let back = parse(&once).expect("serialized output parses");
        assert_eq!(back, file);
        assert_eq!(serialize(&back), once);
    }
    let _ = parse_over(text, Field::Prime(7));
});
