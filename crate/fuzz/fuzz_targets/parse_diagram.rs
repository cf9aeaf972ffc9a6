#![no_main]

use libfuzzer_sys::fuzz_target;
use permcode::young::YoungDiagram;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = s.parse::<YoungDiagram>() {
        assert!(g.rows().windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(g.rows().iter().map(|&r| r as u64).sum::<u64>(), g.n() as u64);
        let again: YoungDiagram = g.to_string().parse().expect("display output parses");
        assert_eq!(again, g);
    }
});
