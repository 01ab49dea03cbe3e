#![no_main]

use libfuzzer_sys::fuzz_target;
use qasl::QScalar;

fuzz_target!(|data: &str| {
    if let Ok(x) = data.parse::<QScalar>() {
        let back: QScalar = x.to_string().parse().expect("display output must parse");
        assert_eq!(back, x);
    }
});
