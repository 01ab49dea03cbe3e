#![no_main]

use libfuzzer_sys::fuzz_target;
use qasl::io::parse_presentation_json;

fuzz_target!(|data: &str| {
    if let Ok(p) = parse_presentation_json(data) {
        let _ = p.is_consistent();
    }
});
