//! Brute-force reference implementations.
//!
//! Nothing here calls into the optimized paths; each oracle starts from the
//! defining congruences and enumerates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::finite_ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub subject: String,
    pub instances: usize,
    /// `(input, expected, got)`
    pub mismatches: Vec<(String, String, String)>,
}

impl OracleReport {
    pub fn new(subject: &str) -> Self {
        OracleReport { subject: subject.to_string(), instances: 0, mismatches: Vec::new() }
    }

    pub fn record(&mut self, input: String, expected: String, got: String) {
        self.instances += 1;
        if expected != got {
            self.mismatches.push((input, expected, got));
        }
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Linear scan of both arity congruences with exact powers.
pub fn oracle_arity(a: u64, b: u64) -> Result<(u64, u64)> {
    if b == 0 || a >= b {
        return Err(Error::InvalidClass { a, b });
    }
    let (ba, bb) = (BigInt::from(a), BigInt::from(b));
    let m = (2..=b + 1)
        .find(|&m| ((BigInt::from(m) * &ba - &ba) % &bb).is_zero())
        .ok_or(Error::ForbiddenPair { a, b })?;
    let n = (2..=b + 1)
        .find(|&n| ((Pow::pow(&ba, n) - &ba) % &bb).is_zero())
        .ok_or(Error::ForbiddenPair { a, b })?;
    Ok((m, n))
}

/// Elementary symmetric polynomials `e_0..e_len` of `ks`.
fn elementary_symmetric(ks: &[BigInt]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); ks.len() + 1];
    e[0] = BigInt::one();
    for (i, k) in ks.iter().enumerate() {
        for j in (1..=i + 1).rev() {
            let t = &e[j - 1] * k;
            e[j] += t;
        }
    }
    e
}

/// n-ary index multiplication from the expanded form
/// `a^(n-1) e_1 + a^(n-2) b e_2 + ... + b^(n-1) e_n + J (mod q)`.
pub fn oracle_kmult(a: u64, b: u64, q: u64, ks: &[u64]) -> u64 {
    let n = ks.len() as u64;
    let (ba, bb) = (BigInt::from(a), BigInt::from(b));
    let j = (Pow::pow(&ba, n) - &ba) / &bb;
    let e = elementary_symmetric(&ks.iter().map(|&k| BigInt::from(k)).collect::<Vec<_>>());
    let mut total = j;
    for s in 1..=n {
        let coeff: BigInt = Pow::pow(&ba, n - s) * Pow::pow(&bb, s - 1);
        total += coeff * &e[s as usize];
    }
    total.mod_floor(&BigInt::from(q)).to_u64().expect("residue below q")
}

/// m-ary index addition from the sum of representatives modulo `bq`.
pub fn oracle_kadd(a: u64, b: u64, q: u64, ks: &[u64]) -> u64 {
    let s: BigInt = ks.iter().map(|&k| BigInt::from(a + b * k)).sum();
    let r = s.mod_floor(&BigInt::from(b * q));
    ((r - BigInt::from(a)) / BigInt::from(b)).to_u64().expect("index below q")
}

/// All ordered tuples of `len` entries from `0..q`.
fn tuples(q: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..q).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

/// Structure of a finite ring found by full enumeration of ordered tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleStructure {
    pub zero: Option<u64>,
    pub units: Vec<u64>,
    pub is_field: bool,
}

/// Zero, units and field status by enumerating every ordered tuple.
pub fn oracle_structure(a: u64, b: u64, q: u64, m: u64, n: u64) -> OracleStructure {
    let c = b * q;
    let rep = |k: u64| a + b * k;
    let idx = |r: u64| (r % c - a) / b;
    let mul = |t: &[u64]| idx(t.iter().fold(1u64, |p, &k| p * rep(k) % c));
    let add = |t: &[u64]| idx(t.iter().map(|&k| rep(k)).sum::<u64>() % c);

    let rest = tuples(q, (n - 1) as usize);
    let zero = (0..q).find(|&z| {
        rest.iter().all(|t| {
            let mut w = t.clone();
            w.push(z);
            mul(&w) == z
        }) && add(&vec![z; m as usize]) == z
    });
    let units: Vec<u64> = (0..q)
        .filter(|&e| {
            (0..q).all(|x| {
                let mut w = vec![e; (n - 1) as usize];
                w.push(x);
                mul(&w) == x
            })
        })
        .collect();

    // unique solvability of t_1 + ... + t_{m-1} + y = x for every ordered tuple and x
    let add_ok = tuples(q, (m - 1) as usize).iter().all(|t| {
        (0..q).all(|x| {
            (0..q)
                .filter(|&y| {
                    let mut w = t.clone();
                    w.push(y);
                    add(&w) == x
                })
                .count()
                == 1
        })
    });
    let nonzero: Vec<u64> = (0..q).filter(|&k| Some(k) != zero).collect();
    let mul_ok = !nonzero.is_empty()
        && rest
            .iter()
            .filter(|t| t.iter().all(|k| nonzero.contains(k)))
            .all(|t| {
                let outs: Vec<u64> = nonzero
                    .iter()
                    .map(|&y| {
                        let mut w = t.clone();
                        w.push(y);
                        mul(&w)
                    })
                    .collect();
                nonzero.iter().all(|x| outs.iter().filter(|o| *o == x).count() == 1)
            });
    OracleStructure { zero, units, is_field: add_ok && mul_ok }
}

/// Enumerated group axioms compared against [`FiniteRing::is_field`].
pub fn oracle_group_axioms(ring: &FiniteRing) -> OracleReport {
    let d = &ring.desc;
    let mut rep = OracleReport::new("group_axioms");
    let o = oracle_structure(d.a, d.b, ring.q, d.m, d.n);
    let input = format!("({},{},{})", d.a, d.b, ring.q);
    rep.record(input.clone(), format!("field={}", o.is_field), format!("field={}", ring.is_field()));
    rep.record(input.clone(), format!("zero={:?}", o.zero), format!("zero={:?}", ring.find_zero()));
    rep.record(input, format!("units={:?}", o.units), format!("units={:?}", ring.find_units()));
    rep
}

/// Is `x` a product of `l(n-1)+1` class members, one of them with
/// `1 < |f| < |x|`, trying every class member up to `|x|` in absolute value
/// and words of length at most `max_len`.
pub fn oracle_reducible(a: u64, b: u64, n: u64, x: i64, max_len: usize) -> bool {
    if x == 0 {
        return true;
    }
    let ax = x.unsigned_abs() as i64;
    let members: Vec<i64> = (-ax..=ax)
        .filter(|v| *v != 0 && v.rem_euclid(b as i64) == a as i64 && v.abs() < ax)
        .collect();
    #[allow(clippy::too_many_arguments)]
    fn rec(members: &[i64], x: i64, n: u64, start: usize, p: i64, len: usize, nontrivial: bool, max_len: usize) -> bool {
        if len >= 2 && p == x && nontrivial && (len as u64 - 1).is_multiple_of(n - 1) {
            return true;
        }
        if len == max_len {
            return false;
        }
        for i in start..members.len() {
            let f = members[i];
            let Some(np) = p.checked_mul(f) else { continue };
            if np.abs() > x.abs() || x % np != 0 {
                continue;
            }
            if rec(members, x, n, i, np, len + 1, nontrivial || f.abs() > 1, max_len) {
                return true;
            }
        }
        false
    }
    rec(&members, x, n, 0, 1, 0, false, max_len)
}
