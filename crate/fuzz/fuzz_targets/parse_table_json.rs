#![no_main]

use libfuzzer_sys::fuzz_target;
use qasl::io::TableDto;

fuzz_target!(|data: &str| {
    if let Ok(dto) = serde_json::from_str::<TableDto>(data) {
        if let Ok(t) = dto.build() {
            let _ = t.certify();
        }
    }
});
