#![no_main]

use invjac::repfile::{parse_rep_json, rep_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(rep) = parse_rep_json(text) {
        let again = parse_rep_json(&rep_to_json(&rep)).expect("serialized representation parses");
        assert_eq!(again, rep);
    }
});
