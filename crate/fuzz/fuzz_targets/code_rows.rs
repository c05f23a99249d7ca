#![no_main]
use genus_tutte::codes::{parse_rows, vector_matroid};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&q, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(m) = parse_rows(text, u32::from(q % 4 + 2)) {
        let _ = m.rank();
        if m.cols() <= 12 {
            let _ = vector_matroid(&m);
        }
    }
});
