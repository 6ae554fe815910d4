#![no_main]

use homlie::document::{format_matrix_spec, parse_matrix_spec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&shape, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let (rows, cols) = (usize::from(shape % 5), usize::from((shape / 5) % 5));
    if let Ok(m) = parse_matrix_spec(text, rows, cols) {
        if rows * cols > 0 {
            assert_eq!(parse_matrix_spec(&format_matrix_spec(&m), rows, cols).expect("formatted spec parses"), m);
        }
    }
});
