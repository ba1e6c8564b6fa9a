#![no_main]

use libfuzzer_sys::fuzz_target;
use motivic_dt::quantum_torus::{dt_extract_ray, parse_torus_json};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok((lat, a)) = parse_torus_json(s) {
        assert_eq!(lat.rank(), a.rank());
        if a.window() <= 8 {
            let _ = dt_extract_ray(&a);
        }
    }
});
