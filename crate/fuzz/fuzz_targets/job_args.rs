#![no_main]
use libfuzzer_sys::fuzz_target;

// Whitespace-separated argument vector; parsing must never panic.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let args = std::iter::once("gtutte").chain(text.split_whitespace());
    let _ = genus_tutte_cli::parse_job(args);
});
