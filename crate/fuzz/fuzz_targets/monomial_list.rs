#![no_main]
use genus_tutte::reconstruct::MonomialList;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(list) = MonomialList::from_json(text) {
        assert_eq!(MonomialList::from_json(&list.to_json()).expect("re-parse"), list);
    }
});
