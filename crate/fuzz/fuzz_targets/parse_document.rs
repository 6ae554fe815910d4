#![no_main]

use homlie::document::parse_document;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Err(e) = parse_document(text) {
        assert!(e.line >= 1 && e.column >= 1);
    }
});
