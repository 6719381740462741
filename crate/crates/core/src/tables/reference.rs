//! Printed reference values, transcribed by hand into `data/`.

use std::collections::BTreeMap;

const TABLE0: &str = include_str!("../../data/table0_expected.txt");
const TABLE1: &str = include_str!("../../data/table1_expected.txt");
const TABLE2: &str = include_str!("../../data/table2_expected.txt");
const APPENDIX: &str = include_str!("../../data/appendix_equations.txt");

fn rows(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('|').map(str::trim).collect())
}

fn pair(s: &str) -> (u64, u64) {
    let v: Vec<u64> = s.split_whitespace().map(|t| t.parse().expect("integer")).collect();
    (v[0], v[1])
}

/// `(a, b, q) -> code` for `q` in `2..=10`, rows keyed `b a`.
pub fn table2() -> BTreeMap<(u64, u64, u64), String> {
    let mut out = BTreeMap::new();
    for r in rows(TABLE2) {
        let (b, a) = pair(r[0]);
        for (i, c) in r[1..].iter().enumerate() {
            out.insert((a, b, i as u64 + 2), c.to_string());
        }
    }
    out
}

/// `(a, b) -> ([codes for q = 2, 3, 4], field orders in 5..=10)`.
pub fn table1() -> BTreeMap<(u64, u64), ([String; 3], String)> {
    rows(TABLE1)
        .map(|r| (pair(r[0]), ([r[1].to_string(), r[2].to_string(), r[3].to_string()], r[4].to_string())))
        .collect()
}

/// `(a, b, q) -> (chi_p, field)`.
pub fn table0() -> BTreeMap<(u64, u64, u64), (u64, bool)> {
    let mut out = BTreeMap::new();
    for r in rows(TABLE0) {
        let (a, b) = pair(r[0]);
        for cell in r[1].split_whitespace() {
            let (q, chi) = cell.split_once(':').expect("q:chi");
            let field = !q.ends_with("nf");
            let q: u64 = q.trim_end_matches("nf").parse().expect("order");
            out.insert((a, b, q), (chi.parse().expect("chi"), field));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedProduct {
    pub a: u64,
    pub b: u64,
    pub q: u64,
    pub factors: Vec<u64>,
    pub product: u64,
}

/// Printed n-ary products of the exotic fields, in printed order.
pub fn appendix() -> Vec<PrintedProduct> {
    rows(APPENDIX)
        .map(|r| {
            let id: Vec<u64> = r[0].split_whitespace().map(|t| t.parse().expect("integer")).collect();
            let (lhs, rhs) = r[1].split_once('=').expect("equation");
            PrintedProduct {
                a: id[0],
                b: id[1],
                q: id[2],
                factors: lhs.split_whitespace().map(|t| t.parse().expect("integer")).collect(),
                product: rhs.trim().parse().expect("integer"),
            }
        })
        .collect()
}
