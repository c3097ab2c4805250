//! The coefficient-list grammar must never panic; accepted input reparses to
//! the same polynomial.

#![no_main]

use libfuzzer_sys::fuzz_target;
use mahler_core::polycore::parse_coeff_list;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_coeff_list(s) {
            let canon = p.coeff_string();
            let again = parse_coeff_list(&canon).expect("canonical form parses");
            assert_eq!(again, p, "round trip changed {canon}");
        }
    }
});
