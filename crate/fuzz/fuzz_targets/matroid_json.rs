#![no_main]
use genus_tutte::Matroid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = Matroid::from_json(text) {
        // Anything accepted must survive a round trip.
        let back = Matroid::from_json(&m.to_json()).expect("re-parse");
        assert_eq!(back, m);
    }
});
