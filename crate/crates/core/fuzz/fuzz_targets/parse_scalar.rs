#![no_main]

use libfuzzer_sys::fuzz_target;
use qthopf::Field;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for field in [Field::Rational, Field::Prime(2), Field::Prime(7), Field::Prime(65521)] {
        if let Ok(x) = field.parse(text) {
            assert_eq!(field.parse(&x.to_string()).as_ref(), Ok(&x));
        }
    }
});
