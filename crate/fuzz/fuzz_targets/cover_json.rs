#![no_main]
use genus_tutte::covers::{verify_cover, Cover};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = Cover::from_json(text) {
        let _ = verify_cover(&c);
        assert_eq!(Cover::from_json(&c.to_json()).expect("re-parse"), c);
    }
});
