#![no_main]

use libfuzzer_sys::fuzz_target;
use motivic_dt::config::parse_config;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(cfg) = parse_config(s) {
            assert!(cfg.model.r_max >= 1);
            let _ = cfg.model.truncation();
        }
    }
});
