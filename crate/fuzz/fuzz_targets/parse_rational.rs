#![no_main]

use invjac::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(r) = text.parse::<Rational>() {
        let again: Rational = r.to_string().parse().expect("printed rational parses");
        assert_eq!(again, r);
    }
});
