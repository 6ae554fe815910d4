#![no_main]

use homlie::document::{format_subspace_spec, parse_subspace_spec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&dim, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let dim = usize::from(dim % 8);
    if let Ok(s) = parse_subspace_spec(text, dim) {
        let again = parse_subspace_spec(&format_subspace_spec(&s), dim).expect("formatted spec parses");
        assert_eq!(again, s);
    }
});
