#![no_main]

use libfuzzer_sys::fuzz_target;

// First byte picks the variable count, the rest is the expression.
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let n = 1 + (first % 8) as usize;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(f) = invjac::parse_poly(text, n) {
        let printed = f.to_string();
        let again = invjac::parse_poly(&printed, n).expect("printed polynomial parses");
        assert_eq!(again, f);
    }
});
