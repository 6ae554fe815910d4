#![no_main]

use homlie::GaussianRational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(x) = GaussianRational::parse(text) {
        let shown = x.to_string();
        assert_eq!(GaussianRational::parse(&shown).unwrap(), x);
    }
});
