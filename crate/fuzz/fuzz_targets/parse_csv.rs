#![no_main]

use libfuzzer_sys::fuzz_target;
use permcode::report::{parse_csv, write_csv};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok((meta, rows)) = parse_csv(s) {
        // Whatever parses must survive a write/parse cycle unchanged.
        let text = write_csv(&meta, &rows);
        let (meta2, rows2) = parse_csv(&text).expect("written CSV parses");
        assert_eq!(meta2, meta);
        assert_eq!(rows2.len(), rows.len());
    }
});
