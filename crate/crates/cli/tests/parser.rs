mod common;

use common::{expr_tree, list, rchi, GOLDEN};
use proptest::prelude::*;
use riordan_chi::expr::{self, strip_groups};

#[test]
fn golden_expressions() {
    for (text, prec, expected) in GOLDEN {
        let got: Vec<String> = expr::eval_str(text, prec)
            .unwrap()
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(got, expected, "{text}");
    }
}

#[test]
fn golden_expressions_through_the_binary() {
    for (text, prec, expected) in GOLDEN {
        let run = rchi(&["series", "eval", text, "--prec", &prec.to_string()]);
        assert!(run.ok(), "{text}: {}", run.stderr);
        assert_eq!(list(&run.stdout), expected, "{text}");
    }
}

#[test]
fn parse_errors_exit_nonzero() {
    for bad in ["1 + y", "(1+x", "x^-1", "1/x", "x^2^3", ""] {
        let run = rchi(&["series", "eval", bad]);
        assert_ne!(run.code, 0, "{bad}");
        assert!(run.stderr.starts_with("error:"), "{bad}: {}", run.stderr);
        assert!(run.stdout.is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn polynomial_round_trip(e in expr_tree()) {
        let n = 6;
        let s = e.eval(n);
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        let again = expr::eval_str(&s.to_polynomial_string(), n).unwrap();
        prop_assert_eq!(again.coeffs(), s.coeffs());
    }

    #[test]
    fn printed_tree_round_trip(e in expr_tree()) {
        // Literals such as -1/3 come back as operator trees, so compare from
        // the first reparse on.
        let back = expr::parse(&e.to_string()).unwrap();
        let twice = expr::parse(&back.to_string()).unwrap();
        prop_assert_eq!(strip_groups(&twice), strip_groups(&back));
        if let Ok(s) = e.eval(5) {
            let again = back.eval(5).unwrap();
            prop_assert_eq!(again.coeffs(), s.coeffs());
        }
    }
}
