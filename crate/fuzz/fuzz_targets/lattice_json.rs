#![no_main]

use libfuzzer_sys::fuzz_target;
use polyforge::FaceLattice;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lattice) = FaceLattice::from_json(text) {
        // anything accepted must satisfy every lattice invariant and
        // round-trip bit-exactly through the canonical export
        assert!(lattice.report().is_valid());
        let exported = lattice.to_json();
        let back = FaceLattice::from_json(&exported).expect("canonical export imports");
        assert_eq!(back, lattice);
        assert_eq!(back.to_json(), exported);
    }
});
