#![no_main]

use libfuzzer_sys::fuzz_target;
use qthopf::format::parse;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(file) = parse(text) {
            let _ = file.build_qt();
            for o in &file.objects {
                let _ = file.build_hopf().and_then(|h| o.module(&h));
            }
        }
    }
});
