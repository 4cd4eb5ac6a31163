#![no_main]

use libfuzzer_sys::fuzz_target;
use polyforge::schlafli::{classify, SchlafliSymbol};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(symbol) = text.parse::<SchlafliSymbol>() {
        let _ = classify(&symbol);
        let rendered = symbol.to_string();
        let back: SchlafliSymbol = rendered.parse().expect("canonical form parses");
        assert_eq!(back, symbol);
        assert_eq!(symbol.dual().dual(), symbol);
    }
});
