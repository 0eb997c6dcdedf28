#![no_main]

use libfuzzer_sys::fuzz_target;
use reestype::PolyRing;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ring = PolyRing::grevlex(32003, &["x", "y", "z"]).unwrap();
    if let Ok(gens) = ring.parse_list(text) {
        let again = ring.parse_list(&ring.format_list(&gens)).expect("formatted list reparses");
        assert_eq!(again, gens);
    }
});
