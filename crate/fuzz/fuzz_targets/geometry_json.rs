#![no_main]

use libfuzzer_sys::fuzz_target;
use polyforge::Geometry;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 1 << 16 {
        return;
    }
    if let Ok(geometry) = Geometry::from_json(text) {
        // accepted geometry is on a sphere; the exact circumradius and the
        // canonical export must be stable
        let _ = geometry.circumradius_squared();
        let exported = geometry.to_json();
        let back = Geometry::from_json(&exported).expect("canonical export imports");
        assert_eq!(back, geometry);
    }
});
