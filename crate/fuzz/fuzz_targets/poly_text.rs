#![no_main]
use genus_tutte::{SparsePoly, VarLayout};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&g, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let layout = VarLayout::new(1 + usize::from(g % 3));
    if let Ok(p) = SparsePoly::parse_text(text, layout) {
        assert_eq!(SparsePoly::parse_text(&p.to_text(), layout).expect("re-parse"), p);
    }
});
