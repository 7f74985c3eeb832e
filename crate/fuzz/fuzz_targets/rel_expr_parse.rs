#![no_main]

use libfuzzer_sys::fuzz_target;
use pgal_transport::parse_rel_expr;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(e) = parse_rel_expr(text) {
        let again = parse_rel_expr(&e.to_string()).expect("printed expressions parse");
        assert_eq!(again, e);
    }
});
