use proptest::prelude::*;
use symmpair::command::{Command, HitchinAction, PairAction, SpectralAction};
use symmpair::json::{matrix, parse_matrix, parse_q_list};
use symmpair::Cli;
use symmpair_core::field::{fmt_q, qq};
use symmpair_core::sympair::{FieldTag, M};
use symmpair_core::Qi;

fn text() -> impl Strategy<Value = String> {
    "[A-Za-z0-9:=,/{}\\[\\]\" −-]{1,24}".prop_filter("not a flag", |s| !s.starts_with('-'))
}

fn command() -> impl Strategy<Value = Command> {
    prop_oneof![
        text().prop_map(|spec| Command::Pair { action: PairAction::Info { spec } }),
        text().prop_map(|spec| Command::Regquot { spec }),
        (1usize..9, text(), text()).prop_map(|(n, c, d)| Command::Spectral { action: SpectralAction::Invariants { n, c, d } }),
        text().prop_map(|a| Command::Spectral { action: SpectralAction::Sheets { a } }),
        (text(), -3i64..10, proptest::option::of(-5i64..40), any::<bool>()).prop_map(|(pair, genus, deg_d, canonical)| {
            Command::Hitchin { action: HitchinAction::Base { pair, genus, deg_d, canonical } }
        }),
        (0u32..200).prop_map(|deg_d| Command::Hitchin { action: HitchinAction::Sheets { deg_d } }),
        (text(), text()).prop_map(|(spec, x)| Command::Centralizer { spec, x }),
        prop_oneof![Just("all".to_string()), (1u8..14).prop_map(|i| i.to_string())].prop_map(|which| Command::Verify { which }),
    ]
}

fn entry() -> impl Strategy<Value = Qi> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| Qi::new(qq(a, b), qq(c, d)))
}

proptest! {
    #[test]
    fn args_round_trip(seed in any::<u64>(), json in any::<bool>(), command in command()) {
        let cli = Cli { seed, json, command };
        let back = Cli::parse_args(cli.to_args()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(&back, &cli);
        let ser = serde_json::to_string(&cli).unwrap();
        prop_assert_eq!(serde_json::from_str::<Cli>(&ser).unwrap(), cli);
    }

    #[test]
    fn matrix_json_round_trip(n in 1usize..4, real in any::<bool>(), seed in proptest::collection::vec(entry(), 16)) {
        let m = M::from_fn(n, n, |i, j| {
            let z = seed[i * 4 + j].clone();
            if real { Qi::real(z.re) } else { z }
        });
        let field = if real { FieldTag::Q } else { FieldTag::Qi };
        let text = matrix(&m, field).to_string();
        let (back, f) = parse_matrix(&text).unwrap();
        prop_assert_eq!(back, m);
        prop_assert_eq!(f, field);
    }

    #[test]
    fn rational_list_round_trip(v in proptest::collection::vec((-50i64..50, 1i64..9), 0..6), unicode in any::<bool>()) {
        let qs: Vec<_> = v.iter().map(|&(a, b)| qq(a, b)).collect();
        let mut s = qs.iter().map(fmt_q).collect::<Vec<_>>().join(",");
        if unicode {
            s = s.replace('-', "\u{2212}");
        }
        prop_assert_eq!(parse_q_list(&s).unwrap(), qs);
    }
}
