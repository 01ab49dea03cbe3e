#![no_main]

use libfuzzer_sys::fuzz_target;
use qasl_cli::parse_jobspec;

fuzz_target!(|data: &str| {
    let _ = parse_jobspec(data);
});
