#![no_main]

use libfuzzer_sys::fuzz_target;
use qasl::io::parse_lattice_json;

fuzz_target!(|data: &str| {
    let _ = parse_lattice_json(data);
});
