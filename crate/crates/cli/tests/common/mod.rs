#![allow(dead_code)]

use std::process::Command;

use proptest::prelude::*;
use riordan_chi::expr::Expr;
use riordan_chi::fps::ratio;

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Run {
    pub fn ok(&self) -> bool {
        self.code == 0
    }
}

pub fn rchi(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_rchi"))
        .args(args)
        .output()
        .expect("spawn rchi");
    Run {
        stdout: String::from_utf8(out.stdout)
            .expect("utf-8 stdout")
            .trim_end()
            .to_string(),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().unwrap_or(-1),
    }
}

/// Splits "[1, -1/2, 3]" into its entries.
pub fn list(text: &str) -> Vec<String> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.is_empty() {
        return Vec::new();
    }
    inner.split(',').map(|s| s.trim().to_string()).collect()
}

pub fn grid(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect()
}

/// Expressions with coefficient lists worked out by hand.
pub const GOLDEN: [(&str, usize, &[&str]); 10] = [
    ("1/(1+x)", 6, &["1", "-1", "1", "-1", "1", "-1"]),
    ("(1-x)^2", 4, &["1", "-2", "1", "0"]),
    ("x/(1-x)", 5, &["0", "1", "1", "1", "1"]),
    ("0", 3, &["0", "0", "0"]),
    ("1/(1-x)^2", 5, &["1", "2", "3", "4", "5"]),
    (
        "1/(1-x-x^2)",
        8,
        &["1", "1", "2", "3", "5", "8", "13", "21"],
    ),
    ("-x^2+1/2*x", 4, &["0", "1/2", "-1", "0"]),
    ("2/(2-x)", 5, &["1", "1/2", "1/4", "1/8", "1/16"]),
    ("8/2/2 - 1 - x", 3, &["1", "-1", "0"]),
    ("(1+x)/(1-x)", 5, &["1", "2", "2", "2", "2"]),
];

/// Random expression trees whose divisions are always by units.
pub fn expr_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-5i64..=5, 1i64..=4).prop_map(|(p, q)| Expr::Literal(ratio(p, q))),
        Just(Expr::X),
    ];
    leaf.prop_recursive(3, 24, 2, |inner| {
        let unit = ((1i64..=4).prop_map(|p| ratio(p, 1)), inner.clone()).prop_map(|(c, e)| {
            Expr::Group(Box::new(Expr::Add(
                Box::new(Expr::Literal(c)),
                Box::new(Expr::Mul(Box::new(Expr::X), Box::new(e))),
            )))
        });
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), unit).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner.clone(), 0u32..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
        ]
    })
}
