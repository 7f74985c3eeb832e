#![no_main]

use std::sync::Arc;

use libfuzzer_sys::fuzz_target;
use pgal_value::Carrier;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let k = Arc::new(Carrier::ints("K", 0, 1));
    let resolve = |name: &str| (name == "K").then(|| k.clone());
    let _ = pgal_functor::builtin_functor(text, 2, &resolve);
});
