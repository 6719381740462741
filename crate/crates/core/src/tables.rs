//! Regeneration of the classification tables and the exotic-field listings,
//! rendered as JSON, CSV and Markdown.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arithmetic;
use crate::error::{Error, Result};
use crate::finite_ring::{multisets, FiniteRing, StructureReport};
use crate::group_analysis::{self, GroupDecomposition};
use crate::ring_core::{derive_arities, RingDescriptor};

pub mod reference;

pub const T0_B_MAX: u64 = 6;
pub const T1_B_MAX: u64 = 6;
pub const T2_B_MAX: u64 = 10;
pub const Q_MAX: u64 = 10;

/// The five listed exotic fields `(a, b, q)`.
pub const APPENDIX_FIELDS: [(u64, u64, u64); 5] = [(5, 6, 6), (5, 6, 4), (3, 8, 2), (7, 8, 2), (2, 3, 5)];

/// Allowed `(a, b)` with `2 <= b <= b_max`, `1 <= a < b`, ordered by `(b, a)`.
pub fn allowed_pairs(b_max: u64) -> Vec<(u64, u64)> {
    (2..=b_max)
        .flat_map(|b| (1..b).map(move |a| (a, b)))
        .filter(|&(a, b)| derive_arities(a, b).is_ok())
        .collect()
}

/// Structure reports for `(a, b, q)` cells, in input order.
pub fn reports(cells: &[(u64, u64, u64)]) -> Result<Vec<StructureReport>> {
    cells
        .par_iter()
        .map(|&(a, b, q)| FiniteRing::from_pair(a, b, q)?.structure_report())
        .collect()
}

fn grid(b_max: u64, qs: std::ops::RangeInclusive<u64>) -> Vec<(u64, u64, u64)> {
    allowed_pairs(b_max)
        .into_iter()
        .flat_map(|(a, b)| qs.clone().map(move |q| (a, b, q)))
        .collect()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

// ---------------------------------------------------------------- T0

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T0Cell {
    pub a: u64,
    pub b: u64,
    pub m: u64,
    pub n: u64,
    pub q: u64,
    pub chi_p: u64,
    pub field: bool,
    /// The neutral element is a non-zero multiplicative idempotent, the ring having no unit.
    pub via_idempotent: bool,
}

/// Characteristics of the rings with a zero and a unit.
///
/// Rings with a zero but no unit contribute a cell when all of their non-zero
/// idempotents reach the zero after the same number of additive steps.
pub fn generate_t0(b_max: u64, q_max: u64) -> Result<Vec<T0Cell>> {
    let cells = grid(b_max, 2..=q_max);
    let reps = reports(&cells)?;
    let mut out = Vec::new();
    for r in reps {
        let ring = &r.ring;
        let Some(z) = r.zero else { continue };
        let (chi, via_idempotent) = if !r.units.is_empty() {
            (r.chi_p, false)
        } else {
            let steps: Vec<Option<u64>> = ring
                .idempotents()
                .into_iter()
                .filter(|&x| x != z)
                .map(|x| ring.additive_steps(x, z))
                .collect();
            match steps.first() {
                Some(&s) if steps.iter().all(|t| *t == s) => (s, true),
                _ => (None, true),
            }
        };
        if let Some(chi_p) = chi {
            let d = &ring.desc;
            out.push(T0Cell { a: d.a, b: d.b, m: d.m, n: d.n, q: ring.q, chi_p, field: r.is_field, via_idempotent });
        }
    }
    Ok(out)
}

fn t0_json(cells: &[T0Cell]) -> String {
    let rows: Vec<Value> = cells
        .iter()
        .map(|c| {
            json!({"a": c.a, "b": c.b, "m": c.m, "n": c.n, "q": c.q, "chi_p": c.chi_p,
                   "field": c.field, "via_idempotent": c.via_idempotent})
        })
        .collect();
    pretty(&json!({"table": "T0", "b_max": T0_B_MAX, "q_max": Q_MAX, "cells": rows}))
}

fn t0_csv(cells: &[T0Cell]) -> String {
    let rows = cells
        .iter()
        .map(|c| {
            vec![c.a, c.b, c.m, c.n, c.q, c.chi_p]
                .into_iter()
                .map(|v| v.to_string())
                .chain([c.field.to_string(), c.via_idempotent.to_string()])
                .collect()
        })
        .collect();
    csv_text(&["a", "b", "m", "n", "q", "chi_p", "field", "via_idempotent"], rows)
}

fn t0_md(cells: &[T0Cell]) -> String {
    let mut s = String::from("# T0: polyadic characteristics\n\n");
    s.push_str("Rings of order 2 <= q <= 10, 2 <= b <= 6, with a zero and a unit.\n");
    s.push_str("`(nf)`: the ring is not a field. `(idem)`: no unit, measured from the non-zero idempotents.\n\n");
    s.push_str("| b | a | (m,n) | q: chi_p |\n|---|---|---|---|\n");
    let mut rows: BTreeMap<(u64, u64), Vec<&T0Cell>> = BTreeMap::new();
    for c in cells {
        rows.entry((c.b, c.a)).or_default().push(c);
    }
    for ((b, a), cs) in rows {
        let body: Vec<String> = cs
            .iter()
            .map(|c| {
                let mut t = format!("q={}: {}", c.q, c.chi_p);
                if !c.field {
                    t.push_str(" (nf)");
                }
                if c.via_idempotent {
                    t.push_str(" (idem)");
                }
                t
            })
            .collect();
        let _ = writeln!(s, "| {b} | {a} | ({},{}) | {} |", cs[0].m, cs[0].n, body.join("; "));
    }
    s
}

// ---------------------------------------------------------------- T1

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Framing {
    /// Not a field.
    None,
    /// A field lacking a zero or a unit.
    Single,
    /// A field with both a zero and a unit.
    Double,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Element {
    pub rep: u64,
    pub unit: bool,
    pub zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Small {
    pub q: u64,
    pub elements: Vec<T1Element>,
    pub framing: Framing,
}

impl T1Small {
    /// Compact form such as `FF:1e,3z,5`.
    pub fn code(&self) -> String {
        let f = match self.framing {
            Framing::None => "N",
            Framing::Single => "F",
            Framing::Double => "FF",
        };
        let els: Vec<String> = self
            .elements
            .iter()
            .map(|e| format!("{}{}{}", e.rep, if e.unit { "e" } else { "" }, if e.zero { "z" } else { "" }))
            .collect();
        format!("{f}:{}", els.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Row {
    pub a: u64,
    pub b: u64,
    pub m: u64,
    pub n: u64,
    /// Orders 2, 3, 4.
    pub small: Vec<T1Small>,
    /// Field orders in 5..=10, flagged when a unit and a zero are both present.
    pub orders: Vec<(u64, bool)>,
}

impl T1Row {
    /// Compact form such as `5B,7B,8`.
    pub fn orders_code(&self) -> String {
        let v: Vec<String> = self.orders.iter().map(|(q, bold)| format!("{q}{}", if *bold { "B" } else { "" })).collect();
        v.join(",")
    }
}

fn framing(r: &StructureReport) -> Framing {
    match (r.is_field, r.zero.is_some() && !r.units.is_empty()) {
        (false, _) => Framing::None,
        (true, false) => Framing::Single,
        (true, true) => Framing::Double,
    }
}

pub fn generate_t1(b_max: u64) -> Result<Vec<T1Row>> {
    let pairs = allowed_pairs(b_max);
    let cells = grid(b_max, 2..=Q_MAX);
    let reps = reports(&cells)?;
    let per_pair = (Q_MAX - 1) as usize;
    Ok(pairs
        .iter()
        .zip(reps.chunks(per_pair))
        .map(|(&(a, b), rs)| {
            let d = &rs[0].ring.desc;
            let small = rs[..3]
                .iter()
                .map(|r| T1Small {
                    q: r.ring.q,
                    elements: r
                        .ring
                        .elements()
                        .into_iter()
                        .map(|k| T1Element { rep: r.ring.rep(k), unit: r.units.contains(&k), zero: r.zero == Some(k) })
                        .collect(),
                    framing: framing(r),
                })
                .collect();
            let orders = rs[3..]
                .iter()
                .filter(|r| r.is_field)
                .map(|r| (r.ring.q, r.zero.is_some() && !r.units.is_empty()))
                .collect();
            T1Row { a, b, m: d.m, n: d.n, small, orders }
        })
        .collect())
}

fn tagged(e: &T1Element) -> String {
    format!("{}{}{}", e.rep, if e.unit { "_e" } else { "" }, if e.zero { "_z" } else { "" })
}

fn t1_json(rows: &[T1Row]) -> String {
    let v: Vec<Value> = rows
        .iter()
        .map(|r| {
            let small: Vec<Value> = r
                .small
                .iter()
                .map(|s| {
                    json!({
                        "q": s.q,
                        "is_field": s.framing != Framing::None,
                        "double_framed": s.framing == Framing::Double,
                        "elements": s.elements.iter().map(|e| json!({"rep": e.rep, "unit": e.unit, "zero": e.zero})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let orders: Vec<Value> = r.orders.iter().map(|(q, bold)| json!({"q": q, "unit_and_zero": bold})).collect();
            json!({"a": r.a, "b": r.b, "m": r.m, "n": r.n, "small": small, "field_orders": orders})
        })
        .collect();
    pretty(&json!({"table": "T1", "b_max": T1_B_MAX, "rows": v}))
}

fn t1_csv(rows: &[T1Row]) -> String {
    let mut out = Vec::new();
    for r in rows {
        for s in &r.small {
            let els: Vec<String> = s.elements.iter().map(tagged).collect();
            out.push(vec![
                r.a.to_string(),
                r.b.to_string(),
                r.m.to_string(),
                r.n.to_string(),
                s.q.to_string(),
                (s.framing != Framing::None).to_string(),
                (s.framing == Framing::Double).to_string(),
                els.join(";"),
            ]);
        }
        for (q, bold) in &r.orders {
            out.push(vec![
                r.a.to_string(),
                r.b.to_string(),
                r.m.to_string(),
                r.n.to_string(),
                q.to_string(),
                "true".into(),
                bold.to_string(),
                String::new(),
            ]);
        }
    }
    csv_text(&["a", "b", "m", "n", "q", "is_field", "unit_and_zero", "elements"], out)
}

fn t1_md(rows: &[T1Row]) -> String {
    let mut s = String::from("# T1: content and arities\n\n");
    s.push_str("Elements of the rings of order 2..4, tagged `_e` (unit) and `_z` (zero).\n");
    s.push_str("`[field]`: a field; `[z+e]`: a field with both zero and unit; untagged: not a field.\n");
    s.push_str("Last column: orders 5..10 giving fields, `*` when a unit and a zero are both present.\n\n");
    s.push_str("| b | a | (m,n) | q=2 | q=3 | q=4 | fields, q=5..10 |\n|---|---|---|---|---|---|---|\n");
    for r in rows {
        let cells: Vec<String> = r
            .small
            .iter()
            .map(|sm| {
                let els: Vec<String> = sm.elements.iter().map(tagged).collect();
                let tag = match sm.framing {
                    Framing::None => "",
                    Framing::Single => "[field] ",
                    Framing::Double => "[z+e] ",
                };
                format!("{tag}{}", els.join(", "))
            })
            .collect();
        let orders: Vec<String> = r.orders.iter().map(|(q, bold)| format!("{q}{}", if *bold { "*" } else { "" })).collect();
        let _ = writeln!(s, "| {} | {} | ({},{}) | {} | {} |", r.b, r.a, r.m, r.n, cells.join(" | "), orders.join(", "));
    }
    s
}

// ---------------------------------------------------------------- T2

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T2Cell {
    pub a: u64,
    pub b: u64,
    pub m: u64,
    pub n: u64,
    pub q: u64,
    pub is_field: bool,
    pub lambda_p: Option<u64>,
    pub kappa_e: usize,
    /// Bold in print.
    pub has_zero: bool,
    /// `n >= 3` and a reduced order `q* > 1` that is n-admissible.
    pub underlined: bool,
    /// Zeroless and nonunital field.
    pub framed: bool,
}

impl T2Cell {
    /// Compact form: `B` zero, `U` underline, `F` frame, then `lambda_p`, then `_kappa_e` when at least two.
    pub fn code(&self) -> String {
        let Some(l) = self.lambda_p.filter(|_| self.is_field) else {
            return "∅".to_string();
        };
        let mut s = String::new();
        if self.has_zero {
            s.push('B');
        }
        if self.underlined {
            s.push('U');
        }
        if self.framed {
            s.push('F');
        }
        let _ = write!(s, "{l}");
        if self.kappa_e >= 2 {
            let _ = write!(s, "_{}", self.kappa_e);
        }
        s
    }

    fn markdown(&self) -> String {
        let Some(l) = self.lambda_p.filter(|_| self.is_field) else {
            return "∅".to_string();
        };
        let mut s = l.to_string();
        if self.kappa_e >= 2 {
            let _ = write!(s, "({}e)", self.kappa_e);
        }
        if self.underlined {
            s = format!("_{s}_");
        }
        if self.has_zero {
            s = format!("*{s}*");
        }
        if self.framed {
            s = format!("[zl-nu] {s}");
        }
        s
    }
}

pub fn t2_cell(r: &StructureReport) -> T2Cell {
    let d = &r.ring.desc;
    T2Cell {
        a: d.a,
        b: d.b,
        m: d.m,
        n: d.n,
        q: r.ring.q,
        is_field: r.is_field,
        lambda_p: r.lambda_p,
        kappa_e: r.units.len(),
        has_zero: r.zero.is_some(),
        underlined: r.is_field && d.n >= 3 && r.q_star > 1 && r.n_admissible,
        framed: r.is_field && r.zeroless && r.nonunital,
    }
}

pub fn generate_t2(b_max: u64, q_max: u64) -> Result<Vec<T2Cell>> {
    Ok(reports(&grid(b_max, 2..=q_max))?.iter().map(t2_cell).collect())
}

fn t2_json(cells: &[T2Cell]) -> String {
    let rows: Vec<Value> = cells
        .iter()
        .map(|c| {
            json!({"a": c.a, "b": c.b, "m": c.m, "n": c.n, "q": c.q, "is_field": c.is_field,
                   "lambda_p": c.lambda_p, "kappa_e": c.kappa_e, "has_zero": c.has_zero,
                   "underlined": c.underlined, "framed": c.framed, "code": c.code()})
        })
        .collect();
    pretty(&json!({"table": "T2", "b_max": T2_B_MAX, "q_max": Q_MAX, "cells": rows}))
}

fn t2_csv(cells: &[T2Cell]) -> String {
    let rows = cells
        .iter()
        .map(|c| {
            vec![
                c.a.to_string(),
                c.b.to_string(),
                c.m.to_string(),
                c.n.to_string(),
                c.q.to_string(),
                c.is_field.to_string(),
                c.lambda_p.map(|l| l.to_string()).unwrap_or_default(),
                c.kappa_e.to_string(),
                c.has_zero.to_string(),
                c.underlined.to_string(),
                c.framed.to_string(),
                c.code(),
            ]
        })
        .collect();
    csv_text(
        &["a", "b", "m", "n", "q", "is_field", "lambda_p", "kappa_e", "has_zero", "underlined", "framed", "code"],
        rows,
    )
}

fn t2_md(cells: &[T2Cell]) -> String {
    let mut s = String::from("# T2: idempotence polyadic orders\n\n");
    s.push_str("Field-level `lambda_p` for 2 <= b <= 10 and 2 <= q <= 10; `(ke)`: k units; `∅`: not a field.\n");
    s.push_str("`*x*`: a zero exists. `_x_`: n >= 3 and the reduced order is n-admissible. `[zl-nu]`: zeroless and nonunital.\n\n");
    s.push_str("| b | a | (m,n) |");
    for q in 2..=Q_MAX {
        let _ = write!(s, " q={q} |");
    }
    s.push_str("\n|---|---|---|");
    for _ in 2..=Q_MAX {
        s.push_str("---|");
    }
    s.push('\n');
    for row in cells.chunks((Q_MAX - 1) as usize) {
        let c = &row[0];
        let _ = write!(s, "| {} | {} | ({},{}) |", c.b, c.a, c.m, c.n);
        for c in row {
            let _ = write!(s, " {} |", c.markdown());
        }
        s.push('\n');
    }
    s
}

// ---------------------------------------------------------------- exotic fields

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixListing {
    pub ring: FiniteRing,
    pub report: StructureReport,
    /// Representatives of the non-zero elements.
    pub elements: Vec<u64>,
    /// Every multiset of non-zero representatives with its product, lexicographic.
    pub products: Vec<(Vec<u64>, u64)>,
    pub mult_querelements: Vec<(u64, Vec<u64>)>,
    pub add_querelements: Vec<(u64, u64)>,
    pub decomposition: GroupDecomposition,
}

pub fn generate_appendix(a: u64, b: u64, q: u64) -> Result<AppendixListing> {
    if !APPENDIX_FIELDS.contains(&(a, b, q)) {
        return Err(Error::UnknownFieldId { a, b, q });
    }
    let ring = FiniteRing::from_pair(a, b, q)?;
    let report = ring.structure_report()?;
    let nonzero: Vec<u64> = ring.elements().into_iter().filter(|&k| Some(k) != report.zero).collect();
    let products = multisets(&nonzero, ring.desc.n as usize)
        .into_iter()
        .map(|w| {
            let r = ring.k_mul(&w).map(|k| ring.rep(k));
            r.map(|r| (w.iter().map(|&k| ring.rep(k)).collect(), r))
        })
        .collect::<Result<Vec<_>>>()?;
    let mult_querelements = nonzero
        .iter()
        .map(|&k| (ring.rep(k), ring.mult_querelements(k).into_iter().map(|x| ring.rep(x)).collect()))
        .collect();
    let add_querelements = ring.elements().into_iter().map(|k| (ring.rep(k), ring.rep(ring.add_querelement(k)))).collect();
    let decomposition = group_analysis::decompose(&ring)?;
    Ok(AppendixListing {
        elements: nonzero.iter().map(|&k| ring.rep(k)).collect(),
        ring,
        report,
        products,
        mult_querelements,
        add_querelements,
        decomposition,
    })
}

fn rep_list(ring: &FiniteRing, ks: &[u64]) -> String {
    let v: Vec<String> = ks.iter().map(|&k| ring.rep(k).to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

impl AppendixListing {
    pub fn to_markdown(&self) -> String {
        let ring = &self.ring;
        let r = &self.report;
        let d = &ring.desc;
        let mut s = format!("# F_({},{})^[{},{}]({})\n\n", d.m, d.n, d.a, d.b, ring.q);
        let all: Vec<String> = ring.elements().into_iter().map(|k| ring.rep(k).to_string()).collect();
        let _ = writeln!(s, "- elements: {{{}}}", all.join(", "));
        let _ = writeln!(s, "- zero: {}", r.zero.map(|z| ring.rep(z).to_string()).unwrap_or_else(|| "none".into()));
        let _ = writeln!(s, "- units: {} (kappa_e = {})", rep_list(ring, &r.units), r.units.len());
        let _ = writeln!(s, "- q* = {}", r.q_star);
        let _ = writeln!(s, "- lambda_p = {}", r.lambda_p.map(|l| l.to_string()).unwrap_or_else(|| "-".into()));
        let _ = writeln!(s, "- chi_p = {}", r.chi_p.map(|c| c.to_string()).unwrap_or_else(|| "undefined".into()));
        s.push_str("\n## Multiplication\n\n");
        for (w, p) in &self.products {
            let ws: Vec<String> = w.iter().map(u64::to_string).collect();
            let _ = writeln!(s, "mu_{}[{}] = {}", d.n, ws.join(","), p);
        }
        s.push_str("\n## Multiplicative querelements\n\n");
        for (x, qs) in &self.mult_querelements {
            let v: Vec<String> = qs.iter().map(u64::to_string).collect();
            let _ = writeln!(s, "bar({x}) = {}", v.join(", "));
        }
        s.push_str("\n## Additive querelements\n\n");
        for (x, t) in &self.add_querelements {
            let _ = writeln!(s, "tilde({x}) = {t}");
        }
        s.push_str("\n## Idempotence orders\n\n");
        for (k, l) in &r.element_orders {
            let _ = writeln!(s, "ord({}) = {}", ring.rep(*k), l);
        }
        let g = &self.decomposition;
        s.push_str("\n## Cyclic subgroups\n\n");
        for (i, sg) in g.subgroups.iter().enumerate() {
            let _ = writeln!(s, "G{} = {}", i + 1, rep_list(ring, sg));
        }
        let _ = writeln!(s, "E(G) = {}", rep_list(ring, &g.unit_subgroup));
        let _ = writeln!(s, "pairwise disjoint: {}", g.pairwise_disjoint);
        let _ = writeln!(s, "E(G) split off: {}", g.unit_subgroup_split);
        let _ = writeln!(s, "subgroups cover the non-zero elements: {}", g.covers);
        let _ = writeln!(s, "subgroups and E(G) cover the non-zero elements: {}", g.covers_with_units);
        let _ = writeln!(s, "primitive elements: {} (kappa_prim = {})", rep_list(ring, &g.primitive_elements), g.kappa_prim);
        let refl: Vec<String> = g.reflections.iter().map(|(k, l)| format!("{} -> {}", ring.rep(*k), l)).collect();
        let _ = writeln!(s, "reflections: {}", if refl.is_empty() { "none".to_string() } else { refl.join(", ") });
        s
    }
}

// ---------------------------------------------------------------- deviations

fn t2_structure_note(a: u64, b: u64, q: u64) -> Result<String> {
    let ring = FiniteRing::from_pair(a, b, q)?;
    let r = ring.structure_report()?;
    Ok(format!(
        "n={}, zero={}, units={}, q*={}, lambda_p={}, field={}",
        ring.desc.n,
        r.zero.map(|z| ring.rep(z).to_string()).unwrap_or_else(|| "none".into()),
        rep_list(&ring, &r.units),
        r.q_star,
        r.lambda_p.map(|l| l.to_string()).unwrap_or_else(|| "-".into()),
        r.is_field
    ))
}

/// Differences between the regenerated values and the printed reference values.
pub fn deviations_report() -> Result<String> {
    let mut s = String::from("# Deviations from the printed reference values\n\n");
    s.push_str("Generated by `polyadic table`. Each entry lists the printed value and the computed one.\n\n");

    s.push_str("## T2\n\n");
    let t2 = generate_t2(T2_B_MAX, Q_MAX)?;
    let want = reference::table2();
    let mut any = false;
    for c in &t2 {
        if let Some(w) = want.get(&(c.a, c.b, c.q)) {
            if *w != c.code() {
                any = true;
                let _ = writeln!(
                    s,
                    "- (a,b,q)=({},{},{}): printed `{}`, computed `{}` [{}]",
                    c.a,
                    c.b,
                    c.q,
                    w,
                    c.code(),
                    t2_structure_note(c.a, c.b, c.q)?
                );
            }
        }
    }
    if !any {
        s.push_str("- none\n");
    }

    s.push_str("\n## T1\n\n");
    let t1 = generate_t1(T1_B_MAX)?;
    let want = reference::table1();
    any = false;
    for r in &t1 {
        let Some((small, orders)) = want.get(&(r.a, r.b)) else { continue };
        for (sm, w) in r.small.iter().zip(small) {
            if sm.code() != *w {
                any = true;
                let _ = writeln!(
                    s,
                    "- (a,b,q)=({},{},{}): printed `{}`, computed `{}` [{}]",
                    r.a,
                    r.b,
                    sm.q,
                    w,
                    sm.code(),
                    t2_structure_note(r.a, r.b, sm.q)?
                );
            }
        }
        if r.orders_code() != *orders {
            any = true;
            let _ = writeln!(
                s,
                "- (a,b)=({},{}) field orders 5..10: printed `{}`, computed `{}`",
                r.a,
                r.b,
                orders,
                r.orders_code()
            );
            for q in 5..=Q_MAX {
                let printed = orders.split(',').any(|o| o.trim_end_matches('B') == q.to_string());
                let computed = r.orders.iter().any(|(x, _)| *x == q);
                if printed != computed {
                    let _ = writeln!(s, "  - q={q}: {}", t2_structure_note(r.a, r.b, q)?);
                }
            }
        }
    }
    if !any {
        s.push_str("- none\n");
    }

    s.push_str("\n## T0\n\n");
    let t0 = generate_t0(T0_B_MAX, Q_MAX)?;
    let want = reference::table0();
    any = false;
    for c in &t0 {
        match want.get(&(c.a, c.b, c.q)) {
            None => {
                any = true;
                let _ = writeln!(
                    s,
                    "- (a,b,q)=({},{},{}): not printed, computed chi_p={}{}{}",
                    c.a,
                    c.b,
                    c.q,
                    c.chi_p,
                    if c.field { "" } else { " (nf)" },
                    if c.via_idempotent { " (idem)" } else { "" }
                );
            }
            Some(&(chi, field)) if chi != c.chi_p || field != c.field => {
                any = true;
                let _ = writeln!(
                    s,
                    "- (a,b,q)=({},{},{}): printed chi_p={chi} field={field}, computed chi_p={} field={}",
                    c.a, c.b, c.q, c.chi_p, c.field
                );
            }
            Some(_) => {}
        }
    }
    for (&(a, b, q), &(chi, _)) in &want {
        if !t0.iter().any(|c| (c.a, c.b, c.q) == (a, b, q)) {
            any = true;
            let _ = writeln!(s, "- (a,b,q)=({a},{b},{q}): printed chi_p={chi}, no cell computed");
        }
    }
    for c in t0.iter().filter(|c| c.via_idempotent) {
        any = true;
        let _ = writeln!(
            s,
            "- (a,b,q)=({},{},{}): the ring has a zero but no unit; chi_p={} is measured from its non-zero idempotents",
            c.a, c.b, c.q, c.chi_p
        );
    }
    if !any {
        s.push_str("- none\n");
    }

    s.push_str("\n## Forbidden pairs and gaps\n\n");
    let printed16 = [2u64, 4, 6, 8, 12, 14];
    let forbidden16: Vec<u64> = (1..16).filter(|&a| derive_arities(a, 16).is_err()).collect();
    let extra: Vec<String> = forbidden16.iter().filter(|a| !printed16.contains(a)).map(u64::to_string).collect();
    let _ = writeln!(
        s,
        "- b=16: printed forbidden a = {printed16:?}, computed {forbidden16:?}; also forbidden: {}",
        extra.join(", ")
    );
    let d = RingDescriptor::new(2, 5)?;
    let two = d.from_value(2)?;
    let p = d.mu(&vec![two; d.n as usize])?;
    let (_, g) = arithmetic::irreducibility_gap(&d);
    let _ = writeln!(
        s,
        "- {}: printed irreducible gap bound |a-b|^n = {}, but {} = mu_{}[2^{}] decomposes; computed bound {}",
        d.label(),
        BigInt::from(d.b - d.a).pow(d.n as u32),
        p.value,
        d.n,
        d.n,
        g
    );
    let d = RingDescriptor::new(1, 3)?;
    let (plo, phi) = arithmetic::primes_gap_printed(3);
    let (lo, hi) = arithmetic::primes_gap(&d)?;
    let four = d.from_value(4)?;
    let _ = writeln!(
        s,
        "- {}: printed primes gap ({plo}, {phi}), but 4 = (-2)(-2) is prime = {}; computed gap ({lo}, {hi})",
        d.label(),
        arithmetic::is_polyadic_prime(&four)?
    );

    s.push_str("\n## Prime scans\n\n");
    let d = RingDescriptor::new(43, 44)?;
    let scan = arithmetic::prime_scan(&d, 2)?;
    let delta: Vec<String> = scan.delta.iter().map(|x| x.value.to_string()).collect();
    let _ = writeln!(
        s,
        "- {} with k_max=2: printed Delta P = {{-45}}, computed {{{}}}; 87 = 3 * 29 is binary-composite and has no class factorization",
        d.label(),
        delta.join(", ")
    );

    s.push_str("\n## Division with remainder\n\n");
    let d = RingDescriptor::new(8, 10)?;
    let x1 = d.from_value(38)?;
    let x2 = d.from_value(-92)?;
    let lhs = BigInt::from(-92) * BigInt::from(16) + BigInt::from(5) * BigInt::from(238);
    let pairs = arithmetic::divide_with_remainder(&x1, &x2, 64)?;
    let with_q = pairs.iter().any(|(q, _)| q.value == BigInt::from(-2));
    let _ = writeln!(
        s,
        "- {}: printed 38 = (-92)(-2)^4 + 5 * 238, but the right side is {lhs}",
        d.label()
    );
    let _ = writeln!(s, "  - pairs with x_q = -2: {}", if with_q { "present" } else { "none" });
    if let Some((q, r)) = pairs.iter().min_by_key(|(q, _)| (q.value.magnitude().clone(), q.value.clone())) {
        let _ = writeln!(s, "  - smallest |x_q| with a class remainder: x_q = {}, x_r = {}", q.value, r.value);
    }
    let _ = writeln!(s, "  - {} pairs within radius 64", pairs.len());

    s.push_str("\n## Coprimality\n\n");
    let big = d.from_value(32768)?;
    let small = d.from_value(-32)?;
    let dset = arithmetic::composition_set(&big, 3)?;
    let fs: Vec<String> = dset.factors.iter().map(|f| f.value.to_string()).collect();
    let _ = writeln!(
        s,
        "- {}: printed D(32768) = {{8}} and -32, 32768 coprime; computed D(32768) = {{{}}}, coprime = {}",
        d.label(),
        fs.join(", "),
        arithmetic::are_coprime(&[small, big], 3)?
    );

    s.push_str("\n## Unit count versus cyclic subgroups\n\n");
    let rings = grid(T2_B_MAX, 2..=Q_MAX)
        .into_iter()
        .map(|(a, b, q)| FiniteRing::from_pair(a, b, q))
        .collect::<Result<Vec<_>>>()?;
    let (checked, bad) = group_analysis::unit_count_mismatches(&rings)?;
    let _ = writeln!(s, "- {checked} decomposable fields with at least two units checked, {} disagree", bad.len());
    for c in &bad {
        let _ = writeln!(
            s,
            "- (a,b,q)=({},{},{}): {}, kappa_e = {}, cyclic subgroups = {}",
            c.a,
            c.b,
            c.q,
            if c.has_zero { "zero" } else { "zeroless, E(G) split off" },
            c.kappa_e,
            c.subgroups
        );
    }

    s.push_str("\n## Exotic-field listings\n\n");
    let eqs = reference::appendix();
    let mut seen: BTreeMap<(u64, u64, u64), Vec<Vec<u64>>> = BTreeMap::new();
    let mut wrong = 0;
    for e in &eqs {
        let ring = FiniteRing::from_pair(e.a, e.b, e.q)?;
        let ks: Vec<u64> = e.factors.iter().map(|&v| ring.index_of_rep(v)).collect();
        if ring.rep(ring.k_mul(&ks)?) != e.product {
            wrong += 1;
            let _ = writeln!(s, "- ({},{},{}) mu{:?} printed {}", e.a, e.b, e.q, e.factors, e.product);
        }
        let mut f = e.factors.clone();
        f.sort_unstable();
        seen.entry((e.a, e.b, e.q)).or_default().push(f);
    }
    let _ = writeln!(s, "- {} printed products checked, {} disagree", eqs.len(), wrong);
    for (&(a, b, q), ws) in &seen {
        let listing = generate_appendix(a, b, q)?;
        let mut distinct = ws.clone();
        distinct.sort();
        distinct.dedup();
        let missing: Vec<String> = listing
            .products
            .iter()
            .filter(|(w, _)| !distinct.contains(w))
            .map(|(w, _)| format!("{w:?}"))
            .collect();
        let _ = writeln!(
            s,
            "- ({a},{b},{q}): {} printed, {} distinct, {} repeated, not printed: {}",
            ws.len(),
            distinct.len(),
            ws.len() - distinct.len(),
            if missing.is_empty() { "none".to_string() } else { missing.join(" ") }
        );
    }
    Ok(s)
}

/// Every golden file, keyed by its path relative to the output directory.
pub fn render_all() -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    let t0 = generate_t0(T0_B_MAX, Q_MAX)?;
    out.insert("T0.json".into(), t0_json(&t0));
    out.insert("T0.csv".into(), t0_csv(&t0));
    out.insert("T0.md".into(), t0_md(&t0));
    let t1 = generate_t1(T1_B_MAX)?;
    out.insert("T1.json".into(), t1_json(&t1));
    out.insert("T1.csv".into(), t1_csv(&t1));
    out.insert("T1.md".into(), t1_md(&t1));
    let t2 = generate_t2(T2_B_MAX, Q_MAX)?;
    out.insert("T2.json".into(), t2_json(&t2));
    out.insert("T2.csv".into(), t2_csv(&t2));
    out.insert("T2.md".into(), t2_md(&t2));
    for (a, b, q) in APPENDIX_FIELDS {
        out.insert(format!("appendix_{a}_{b}_{q}.md"), generate_appendix(a, b, q)?.to_markdown());
    }
    out.insert("deviations.md".into(), deviations_report()?);
    Ok(out)
}

/// One table in one format: `name` is `T0`, `T1` or `T2`; `format` is `json`, `csv` or `md`.
pub fn render_table(name: &str, format: &str) -> Option<Result<String>> {
    let r = match name {
        "T0" => generate_t0(T0_B_MAX, Q_MAX).map(|c| match format {
            "json" => Some(t0_json(&c)),
            "csv" => Some(t0_csv(&c)),
            "md" | "text" => Some(t0_md(&c)),
            _ => None,
        }),
        "T1" => generate_t1(T1_B_MAX).map(|c| match format {
            "json" => Some(t1_json(&c)),
            "csv" => Some(t1_csv(&c)),
            "md" | "text" => Some(t1_md(&c)),
            _ => None,
        }),
        "T2" => generate_t2(T2_B_MAX, Q_MAX).map(|c| match format {
            "json" => Some(t2_json(&c)),
            "csv" => Some(t2_csv(&c)),
            "md" | "text" => Some(t2_md(&c)),
            _ => None,
        }),
        _ => return None,
    };
    match r {
        Ok(Some(s)) => Some(Ok(s)),
        Ok(None) => None,
        Err(e) => Some(Err(e)),
    }
}
