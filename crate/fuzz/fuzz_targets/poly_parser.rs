#![no_main]

use libfuzzer_sys::fuzz_target;
use reestype::PolyRing;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ring = PolyRing::grevlex(32003, &["x", "y", "z", "w"]).unwrap();
    if let Ok(f) = ring.parse(text) {
        // Whatever parses must survive a format round trip.
        let again = ring.parse(&ring.format(&f)).expect("formatted polynomial reparses");
        assert_eq!(again, f);
    }
});
