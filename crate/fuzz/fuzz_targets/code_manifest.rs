#![no_main]
use genus_tutte::codes::CodeManifest;
use libfuzzer_sys::fuzz_target;

// Input: manifest JSON, a NUL byte, then the generator rows.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let (manifest, rows) = text.split_once('\0').unwrap_or((text, ""));
    if let Ok(m) = CodeManifest::parse(manifest) {
        let _ = m.load(rows);
    }
});
