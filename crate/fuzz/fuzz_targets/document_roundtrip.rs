#![no_main]

use homlie::document::{emit_algebra, parse_algebra};
use libfuzzer_sys::fuzz_target;

// Anything that parses must emit a canonical document that parses back to
// the same algebra and re-emits byte for byte.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(l) = parse_algebra(text) else { return };
    let emitted = emit_algebra(&l);
    let again = parse_algebra(&emitted).expect("canonical output parses");
    assert!(again.same_structure(&l));
    assert_eq!(emit_algebra(&again), emitted);
});
