use apery_cong::check::{CheckResult, Params, Quantity};
use apery_cong::exact::{binom, int, Integer};
use apery_cong::harness::report::{render_reports, ReportFormat, ReportOptions};
use apery_cong::harness::{scan_claim, ClaimDescriptor, ParamDomain, ParamSet};
use apery_cong::identities::gcd_binom_sum;
use apery_cong::qpoly::{qbinom, thm51_sum_full, Thm51Variant};
use apery_cong::sequences::{build_table, cached_prefix, Method, SequenceKind};
use num_traits::Signed;
use proptest::prelude::*;

fn small_grid(id: &str, dims: &[(&str, String)]) -> ClaimDescriptor {
    let dims = dims
        .iter()
        .map(|(n, s)| {
            (
                n.to_string(),
                ParamDomain::Scalar(ParamSet::parse(s).unwrap()),
            )
        })
        .collect();
    ClaimDescriptor::with_overrides(id, dims).unwrap()
}

fn rendered(desc: &ClaimDescriptor, par: usize) -> Vec<u8> {
    let rep = scan_claim(desc, par).unwrap();
    assert_eq!(rep.total, rep.passed + rep.failed);
    let mut buf = Vec::new();
    render_reports(
        &mut buf,
        &[rep],
        ReportFormat::Jsonl,
        ReportOptions::default(),
    )
    .unwrap();
    buf
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scans_are_byte_identical_across_parallelism(
        hi in 2i64..30,
        r_hi in 0i64..3,
        par in 2usize..9,
    ) {
        let desc = small_grid("thm1.2b", &[
            ("n", format!("1..{hi}")),
            ("r", format!("0..{r_hi}")),
            ("eps", "{-1,1}".into()),
        ]);
        prop_assert_eq!(rendered(&desc, 1), rendered(&desc, par));
        let ragged = small_grid("lem3.1-", &[("n", format!("1..{hi}")), ("k", "0..n-1".into())]);
        prop_assert_eq!(rendered(&ragged, 1), rendered(&ragged, par));
    }

    #[test]
    fn congruence_residues_are_normalized(
        lhs in any::<i64>(),
        m in 1i64..10_000,
        e in any::<i64>(),
    ) {
        let r = CheckResult::congruence("x", Params::new(), int(lhs), int(m), int(e));
        let Quantity::Int(res) = &r.residue else { panic!() };
        let Quantity::Int(exp) = &r.expected else { panic!() };
        prop_assert!(!res.is_negative() && res < &int(m));
        prop_assert!(!exp.is_negative() && exp < &int(m));
        prop_assert_eq!(r.pass, (Integer::from(lhs) - Integer::from(e)) % int(m) == int(0));
    }

    #[test]
    fn table_methods_agree_on_prefixes(n in 0u64..300) {
        for kind in [SequenceKind::Apery, SequenceKind::Delannoy] {
            let a = build_table(kind, n, Method::DefiningSum).unwrap();
            let b = build_table(kind, n, Method::RecurrenceOracle).unwrap();
            prop_assert_eq!(&a.values, &b.values);
            prop_assert_eq!(&a.values[..], &cached_prefix(kind, n as usize + 1)[..=n as usize]);
        }
    }

    #[test]
    fn qbinom_specializes_to_binomial(n in 0u64..30, k in -2i64..33) {
        prop_assert_eq!(qbinom(n, k).eval_at_one(), binom(n as i64, k));
    }

    #[test]
    fn thm51_at_q_equal_one_matches_integer_sums(
        n in 1u64..10,
        a in prop::collection::vec(0i64..10, 1..3),
        b_seed in prop::collection::vec(0i64..10, 2),
    ) {
        let b: Vec<i64> = b_seed.iter().take(a.len()).copied().collect();
        // both weights collapse to 1 at q = 1
        for v in [Thm51Variant::SquareWeight, Thm51Variant::ShiftedSquareWeight] {
            let full = thm51_sum_full(v, n, &a, &b).unwrap();
            prop_assert_eq!(full.eval_at_one(), gcd_binom_sum(n, &a, &b));
        }
    }

    #[test]
    fn range_syntax_round_trips(lo in -50i64..50, len in 0i64..50, off in -3i64..4) {
        let hi = lo + len;
        for s in [format!("{lo}..{hi}"), format!("{lo}..n{off:+}"), format!("primes:{}..{}", lo.abs(), lo.abs() + len)] {
            let s = s.replace("n+0", "n").replace("n-0", "n");
            let parsed = ParamSet::parse(&s).unwrap();
            prop_assert_eq!(ParamSet::parse(&parsed.to_string()).unwrap(), parsed);
        }
    }
}
