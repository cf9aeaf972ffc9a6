use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use permcode::asymptotics::{pmax_estimate_plancherel, pmax_estimate_schur_weyl};
use permcode::coding::{classical_success, info_bound, quantum_pmax_exact, CodingInstance, Method, Probability};
use permcode::report::{parse_csv, write_csv, Metadata, ReportRow};
use permcode::young::{dim_irrep, enumerate_partitions, multiplicity, rsk_shape, YoungDiagram};
use proptest::prelude::*;

fn diagram() -> impl Strategy<Value = YoungDiagram> {
    prop::collection::vec(1u32..9, 0..8).prop_map(|parts| YoungDiagram::from_parts(parts).unwrap())
}

fn exact(p: &Probability) -> BigRational {
    p.exact().cloned().expect("exact probability")
}

proptest! {
    #[test]
    fn display_parse_round_trip(g in diagram()) {
        prop_assert_eq!(g.to_string().parse::<YoungDiagram>().unwrap(), g);
    }

    #[test]
    fn transpose_is_an_involution_preserving_dimension(g in diagram()) {
        let t = g.transpose();
        prop_assert_eq!(t.n(), g.n());
        prop_assert_eq!(dim_irrep(&t), dim_irrep(&g));
        prop_assert_eq!(t.transpose(), g);
    }

    #[test]
    fn multiplicity_vanishes_exactly_beyond_d_rows(g in diagram(), d in 1u32..6) {
        prop_assert_eq!(multiplicity(&g, d).is_zero(), g.first_column_len() > d);
    }

    #[test]
    fn rsk_shape_has_word_length(word in prop::collection::vec(0u32..5, 0..40)) {
        let shape = rsk_shape(&word);
        prop_assert_eq!(shape.n() as usize, word.len());
        prop_assert!(shape.first_column_len() <= 5);
    }

    #[test]
    fn quantum_sits_between_classical_and_bound(n in 1u32..14, d in 1u32..8) {
        let inst = CodingInstance::new(n, d).unwrap();
        let report = quantum_pmax_exact(&inst).unwrap();
        let p = exact(&report.p_quantum);
        prop_assert!(p >= classical_success(&inst));
        prop_assert!(p <= info_bound(&inst));
        prop_assert!(p <= BigRational::one());
        let dim_w = report.dim_w.unwrap();
        let n_fact: BigUint = (1..=n).map(BigUint::from).product();
        prop_assert_eq!(p, BigRational::new(dim_w.into(), n_fact.into()));
    }

    #[test]
    fn estimators_are_deterministic_and_bounded(n in 2u32..30, d in 1u32..6, seed in any::<u64>()) {
        let a = pmax_estimate_plancherel(n, d, 300, seed).unwrap();
        let b = pmax_estimate_plancherel(n, d, 300, seed).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!((0.0..=1.0).contains(&a.value));
        let s = pmax_estimate_schur_weyl(n, d, 300, seed).unwrap();
        prop_assert!((0.0..=1.0).contains(&s.ratio.value));
    }

    #[test]
    fn csv_round_trip_at_printed_precision(
        rows in prop::collection::vec((1u32..500, 1u32..500, any::<f64>(), 0.0f64..1.0, 1u64..1000, 1u64..1000), 0..6),
        seed in any::<u64>(),
    ) {
        let rows: Vec<ReportRow> = rows
            .into_iter()
            .map(|(n, d, x, p, a, b)| ReportRow {
                n,
                d,
                r: d as f64 / n as f64,
                method: if a % 2 == 0 { Method::PlancherelMc } else { Method::ExactEnumeration },
                p_quantum: p,
                p_quantum_exact: (a % 2 == 1).then(|| BigRational::new(a.into(), (a + b).into())),
                stderr: x.abs().min(1e300),
                p_classical: p / 3.0,
                p_classical_exact: BigRational::new(1.into(), b.into()),
                info_bound: 1.0,
                info_bound_exact: BigRational::one(),
                ratio_to_bound: p,
            })
            .collect();
        let mut meta = Metadata::new("sweep");
        meta.set("seed", seed);
        let text = write_csv(&meta, &rows);
        let (meta2, parsed) = parse_csv(&text).unwrap();
        prop_assert_eq!(meta2, meta);
        let rounded: Vec<ReportRow> = rows.iter().map(ReportRow::rounded).collect();
        prop_assert_eq!(parsed, rounded);
    }
}

#[test]
fn plancherel_and_schur_weyl_weights_sum_to_one() {
    for n in 1..=10u32 {
        let n_fact: BigUint = (1..=n).map(BigUint::from).product();
        for d in 1..=4u32 {
            let (mut pl, mut sw) = (BigUint::zero(), BigUint::zero());
            for g in enumerate_partitions(n).unwrap() {
                let dim = dim_irrep(&g);
                sw += multiplicity(&g, d) * &dim;
                pl += &dim * &dim;
            }
            assert_eq!(pl, n_fact);
            assert_eq!(sw, BigUint::from(d).pow(n));
        }
    }
}
