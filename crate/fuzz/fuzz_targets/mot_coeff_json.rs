#![no_main]

use libfuzzer_sys::fuzz_target;
use motivic_dt::MotCoeff;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = MotCoeff::from_json_str(s) {
        // canonical form survives a round trip
        let text = serde_json::to_string(&c.to_json_terms()).unwrap();
        assert_eq!(MotCoeff::from_json_str(&text).unwrap(), c);
    }
});
