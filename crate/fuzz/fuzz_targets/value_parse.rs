#![no_main]

use libfuzzer_sys::fuzz_target;
use pgal_value::parse_value;

// Parsed values print back to text that parses to the same value.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_value(text) {
        let again = parse_value(&v.to_string()).expect("printed values parse");
        assert_eq!(again, v);
    }
});
