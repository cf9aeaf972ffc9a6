#![no_main]

use libfuzzer_sys::fuzz_target;
use permcode::report::{parse_n_list, MAX_LIST_LEN, MAX_LIST_N};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(ns) = parse_n_list(s) {
        assert!(!ns.is_empty() && ns.len() <= MAX_LIST_LEN);
        assert!(ns.iter().all(|&n| (1..=MAX_LIST_N).contains(&n)));
        let joined = ns.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(parse_n_list(&joined).expect("plain list parses"), ns);
    }
});
