#![no_main]
use genus_tutte::SparsePoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = SparsePoly::from_json(text) {
        assert_eq!(SparsePoly::from_json(&p.to_json()).expect("re-parse"), p);
    }
});
