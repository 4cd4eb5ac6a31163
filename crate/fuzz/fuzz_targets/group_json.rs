#![no_main]

use libfuzzer_sys::fuzz_target;
use polyforge::symmetry::QuaternionGroup;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 1 << 16 {
        return;
    }
    if let Ok(group) = QuaternionGroup::from_json(text) {
        // import re-verifies closure, so anything accepted is a real group
        assert!(group.is_closed_under_inverse());
        let exported = group.to_json();
        let back = QuaternionGroup::from_json(&exported).expect("canonical export imports");
        assert_eq!(back.elements(), group.elements());
    }
});
