#![no_main]

use libfuzzer_sys::fuzz_target;
use polyforge::QuadExt;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // keep arbitrary-precision integers desk-sized
    if text.len() > 4096 {
        return;
    }
    if let Ok(value) = text.parse::<QuadExt>() {
        // parsing must round-trip through the canonical rendering
        let rendered = value.to_string();
        let back: QuadExt = rendered.parse().expect("canonical form parses");
        assert_eq!(back, value);
        assert_eq!(back.to_string(), rendered);
    }
});
