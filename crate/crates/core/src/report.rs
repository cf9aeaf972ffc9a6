//! Text formats: the CSV row schema shared by `pmax` and `sweep`, its
//! metadata header, and the small parsers used by the command line.
//!
//! CSV columns, in order:
//!
//! | column | content |
//! |---|---|
//! | `n` | number of objects `N` |
//! | `d` | number of colors / levels |
//! | `r` | requested ratio (sweeps) or `d/N` |
//! | `method` | `exact-enumeration`, `plancherel-mc` or `schur-weyl-mc` |
//! | `p_quantum` | 12-significant-digit decimal |
//! | `p_quantum_exact` | `p/q`, empty for estimates |
//! | `stderr` | standard error, `0` for exact rows |
//! | `p_classical`, `p_classical_exact` | classical optimum |
//! | `info_bound`, `info_bound_exact` | `min(1, d^N/N!)` |
//! | `ratio_to_bound` | `p_quantum / info_bound` |
//!
//! Lines starting with `#` before the header carry `key=value` metadata.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::asymptotics::SweepRow;
use crate::coding::{CodingReport, Method, Probability};
use crate::error::{Error, Result};
use crate::numeric::{format_decimal, format_ratio, rational_to_f64};

pub const CSV_COLUMNS: [&str; 12] = [
    "n",
    "d",
    "r",
    "method",
    "p_quantum",
    "p_quantum_exact",
    "stderr",
    "p_classical",
    "p_classical_exact",
    "info_bound",
    "info_bound_exact",
    "ratio_to_bound",
];

/// Run metadata written ahead of every report. No timestamps, so identical
/// runs produce identical bytes.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Metadata {
    pub entries: BTreeMap<String, String>,
}

impl Metadata {
    pub fn new(command: &str) -> Self {
        let mut m = Metadata::default();
        m.set("version", env!("CARGO_PKG_VERSION"));
        m.set("command", command);
        m
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.entries.insert(key.to_string(), value.to_string());
        self
    }

    pub fn csv_header(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("# {k}={v}\n")).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.entries).expect("string map serializes")
    }
}

/// One CSV record, as written and as parsed back.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow {
    pub n: u32,
    pub d: u32,
    pub r: f64,
    pub method: Method,
    pub p_quantum: f64,
    pub p_quantum_exact: Option<BigRational>,
    pub stderr: f64,
    pub p_classical: f64,
    pub p_classical_exact: BigRational,
    pub info_bound: f64,
    pub info_bound_exact: BigRational,
    pub ratio_to_bound: f64,
}

impl ReportRow {
    fn from_parts(
        n: u32,
        d: u32,
        r: f64,
        method: Method,
        p: &Probability,
        classical: &BigRational,
        bound: &BigRational,
        ratio_to_bound: f64,
    ) -> Self {
        ReportRow {
            n,
            d,
            r,
            method,
            p_quantum: p.value_f64(),
            p_quantum_exact: p.exact().cloned(),
            stderr: p.stderr(),
            p_classical: rational_to_f64(classical),
            p_classical_exact: classical.clone(),
            info_bound: rational_to_f64(bound),
            info_bound_exact: bound.clone(),
            ratio_to_bound,
        }
    }

    /// Values as printed, so that parsing the CSV reproduces this row.
    pub fn rounded(&self) -> Self {
        let round = |x: f64| format_decimal(x).parse::<f64>().unwrap_or(x);
        ReportRow {
            r: round(self.r),
            p_quantum: round(self.p_quantum),
            stderr: round(self.stderr),
            p_classical: round(self.p_classical),
            info_bound: round(self.info_bound),
            ratio_to_bound: round(self.ratio_to_bound),
            ..self.clone()
        }
    }

    fn fields(&self) -> [String; 12] {
        [
            self.n.to_string(),
            self.d.to_string(),
            format_decimal(self.r),
            self.method.to_string(),
            format_decimal(self.p_quantum),
            self.p_quantum_exact.as_ref().map(format_ratio).unwrap_or_default(),
            format_decimal(self.stderr),
            format_decimal(self.p_classical),
            format_ratio(&self.p_classical_exact),
            format_decimal(self.info_bound),
            format_ratio(&self.info_bound_exact),
            format_decimal(self.ratio_to_bound),
        ]
    }
}

impl From<&SweepRow> for ReportRow {
    fn from(s: &SweepRow) -> Self {
        ReportRow::from_parts(
            s.n_boxes,
            s.n_colors,
            s.ratio,
            s.method,
            &s.p_quantum,
            &s.p_classical,
            &s.info_bound,
            s.ratio_to_bound,
        )
    }
}

impl From<&CodingReport> for ReportRow {
    fn from(c: &CodingReport) -> Self {
        let ratio_to_bound = match &c.p_quantum {
            Probability::Exact { value } if !c.p_info_bound.is_zero() => rational_to_f64(&(value / &c.p_info_bound)),
            p => p.value_f64() / rational_to_f64(&c.p_info_bound),
        };
        ReportRow::from_parts(
            c.instance.n_boxes,
            c.instance.n_colors,
            c.instance.ratio(),
            c.method,
            &c.p_quantum,
            &c.p_classical,
            &c.p_info_bound,
            ratio_to_bound,
        )
    }
}

/// Metadata comment lines, header, then one line per row.
pub fn write_csv(meta: &Metadata, rows: &[ReportRow]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).expect("in-memory write");
    for row in rows {
        w.write_record(row.fields()).expect("in-memory write");
    }
    let body = String::from_utf8(w.into_inner().expect("flush to Vec")).expect("ASCII output");
    meta.csv_header() + &body
}

/// Parses text produced by [`write_csv`], returning the metadata and rows.
pub fn parse_csv(text: &str) -> Result<(Metadata, Vec<ReportRow>)> {
    let mut meta = Metadata::default();
    for line in text.lines().take_while(|l| l.starts_with('#')) {
        if let Some((k, v)) = line.trim_start_matches('#').trim().split_once('=') {
            meta.set(k.trim(), v.trim());
        }
    }
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| Error::parse(e.to_string()))?.clone();
    if headers.iter().ne(CSV_COLUMNS.iter().copied()) {
        return Err(Error::parse(format!("unexpected CSV header {headers:?}")));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let rec = record.map_err(|e| Error::parse(e.to_string()))?;
        let f = |i: usize| rec.get(i).unwrap_or("");
        let num = |i: usize| -> Result<f64> {
            f(i).parse::<f64>()
                .map_err(|_| Error::parse(format!("column {} is not a number: {:?}", CSV_COLUMNS[i], f(i))))
        };
        let int = |i: usize| -> Result<u32> {
            f(i).parse::<u32>()
                .map_err(|_| Error::parse(format!("column {} is not an integer: {:?}", CSV_COLUMNS[i], f(i))))
        };
        rows.push(ReportRow {
            n: int(0)?,
            d: int(1)?,
            r: num(2)?,
            method: f(3).parse()?,
            p_quantum: num(4)?,
            p_quantum_exact: match f(5) {
                "" => None,
                s => Some(parse_rational(s)?),
            },
            stderr: num(6)?,
            p_classical: num(7)?,
            p_classical_exact: parse_rational(f(8))?,
            info_bound: num(9)?,
            info_bound_exact: parse_rational(f(10))?,
            ratio_to_bound: num(11)?,
        });
    }
    Ok((meta, rows))
}

/// Parses `p/q` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    const MAX_DIGITS: usize = 100_000;
    let s = s.trim();
    if s.len() > MAX_DIGITS {
        return Err(Error::parse("rational literal too long"));
    }
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num = BigInt::from_str(num.trim()).map_err(|_| Error::parse(format!("bad numerator in {s:?}")))?;
    let den = BigInt::from_str(den.trim()).map_err(|_| Error::parse(format!("bad denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Largest `N` accepted in a list; far beyond anything computable, it only
/// guards against absurd range expansions.
pub const MAX_LIST_N: u32 = 1_000_000;
/// Longest list a range may expand to.
pub const MAX_LIST_LEN: usize = 10_000;

/// Parses `10,20,30`, `10..60:10` (inclusive, step 10) or a mix such as
/// `5,10..30:10`. Every entry must be positive.
pub fn parse_n_list(s: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        if item.is_empty() {
            return Err(Error::parse(format!("empty entry in list {s:?}")));
        }
        if let Some((start, rest)) = item.split_once("..") {
            let (end, step) = rest.split_once(':').unwrap_or((rest, "1"));
            let start = parse_positive(start, item)?;
            let end = parse_positive(end, item)?;
            let step = parse_positive(step, item)?;
            if end < start {
                return Err(Error::parse(format!("range {item:?} is decreasing")));
            }
            let len = ((end - start) / step) as usize + 1;
            if out.len() + len > MAX_LIST_LEN {
                return Err(Error::parse(format!("list longer than {MAX_LIST_LEN} entries")));
            }
            out.extend((start..=end).step_by(step as usize));
        } else {
            out.push(parse_positive(item, item)?);
            if out.len() > MAX_LIST_LEN {
                return Err(Error::parse(format!("list longer than {MAX_LIST_LEN} entries")));
            }
        }
    }
    Ok(out)
}

fn parse_positive(s: &str, context: &str) -> Result<u32> {
    match s.trim().parse::<u32>() {
        Ok(v) if (1..=MAX_LIST_N).contains(&v) => Ok(v),
        _ => Err(Error::parse(format!(
            "expected an integer in 1..={MAX_LIST_N} in {context:?}, got {s:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::{theorem1_sweep, SweepConfig};
    use proptest::prelude::*;

    #[test]
    fn n_lists() {
        assert_eq!(parse_n_list("10,20,30").unwrap(), vec![10, 20, 30]);
        assert_eq!(parse_n_list("10..50:10").unwrap(), vec![10, 20, 30, 40, 50]);
        assert_eq!(parse_n_list("3, 5..7").unwrap(), vec![3, 5, 6, 7]);
        for bad in ["", "0", "1,,2", "5..3", "1..9:0", "x", "1..2000000", "1..999999"] {
            assert!(parse_n_list(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("5/6").unwrap(), BigRational::new(5.into(), 6.into()));
        assert_eq!(parse_rational("10/12").unwrap(), BigRational::new(5.into(), 6.into()));
        assert_eq!(parse_rational("7").unwrap(), BigRational::from_integer(7.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn sweep_csv_round_trip() {
        let rows = theorem1_sweep(0.5, &[6, 10, 14], SweepConfig { samples: 200, seed: 3, cap: 12 }).unwrap();
        let rows: Vec<ReportRow> = rows.iter().map(ReportRow::from).collect();
        let mut meta = Metadata::new("sweep");
        meta.set("seed", 3);
        let text = write_csv(&meta, &rows);
        assert!(text.starts_with("# command=sweep\n"));
        let (meta2, parsed) = parse_csv(&text).unwrap();
        assert_eq!(meta2, meta);
        let want: Vec<ReportRow> = rows.iter().map(ReportRow::rounded).collect();
        assert_eq!(parsed, want);
        assert_eq!(parsed[2].method, Method::PlancherelMc);
        assert!(parsed[2].p_quantum_exact.is_none());
    }

    #[test]
    fn csv_rejects_wrong_header() {
        assert!(parse_csv("a,b\n1,2\n").is_err());
        let good = format!("{}\n", CSV_COLUMNS.join(","));
        assert!(parse_csv(&good).unwrap().1.is_empty());
        let bad_row = format!("{good}1,1,1,exact-enumeration,1,1/1,0,1,1/1,1,1/0,1\n");
        assert!(parse_csv(&bad_row).is_err());
    }

    proptest! {
        #[test]
        fn decimal_rendering_round_trips_at_twelve_digits(x in 1e-30f64..1e30) {
            let back: f64 = format_decimal(x).parse().unwrap();
            prop_assert!(((back - x) / x).abs() < 1e-11);
            // printing is idempotent once rounded
            prop_assert_eq!(format_decimal(back), format_decimal(x));
        }

        #[test]
        fn n_list_round_trips(v in proptest::collection::vec(1u32..100_000, 1..40)) {
            let text = v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            prop_assert_eq!(parse_n_list(&text).unwrap(), v);
        }
    }
}
