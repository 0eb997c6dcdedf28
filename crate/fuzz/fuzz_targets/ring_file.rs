#![no_main]

use libfuzzer_sys::fuzz_target;
use reestype_cli::ringfile::parse_ring_file;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(file) = parse_ring_file(text) {
        assert_eq!(parse_ring_file(&file.to_text()).expect("rendered file reparses"), file);
        // Keep Groebner work small; building may still fail on bad relations.
        if file.vars.len() <= 4 && file.relations.len() <= 3 {
            let _ = file.build(8);
        }
    }
});
