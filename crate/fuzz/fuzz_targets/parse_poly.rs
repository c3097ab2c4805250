//! The dispatching parser must never panic, and anything it accepts must
//! round-trip through the canonical coefficient form.

#![no_main]

use libfuzzer_sys::fuzz_target;
use mahler_core::polycore::parse_poly;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_poly(s) {
            let canon = p.coeff_string();
            let again = parse_poly(&canon).expect("canonical form parses");
            assert_eq!(again, p, "round trip changed {canon}");
        }
    }
});
