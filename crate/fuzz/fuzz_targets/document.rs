#![no_main]

use libfuzzer_sys::fuzz_target;
use pgal_cli::{load, parse_document, Limits};

// Small limits keep each input cheap; errors are fine, panics are not.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = parse_document(text) {
        let _ = load(&doc, Limits { cap: 256, list_bound: 2 });
    }
});
