//! Number theory inside `Z_(m,n)^[a,b]`: irreducibility, composition sets,
//! polyadic primes, division with and without remainder, coprimality and the
//! polyadic Euler function.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring_core::{PolyInt, RingDescriptor};

/// Factors of one element, collected over all decompositions found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSet {
    pub element: PolyInt,
    /// Non-unit factors, ascending.
    pub factors: Vec<PolyInt>,
    pub decompositions: Vec<Vec<PolyInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeScan {
    pub descriptor: RingDescriptor,
    pub k_max: u64,
    pub primes: Vec<PolyInt>,
    pub pi: usize,
    /// Primes that are neither +-(binary prime) nor +-1.
    pub delta: Vec<PolyInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerScan {
    pub descriptor: RingDescriptor,
    pub k_max: u64,
    pub set: Vec<PolyInt>,
    pub phi: usize,
}

/// Which notion of primality a ring supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    /// Only the unit-padded expansion exists; needs a unit.
    Strict,
    /// No nontrivial decomposition at all.
    Irreducible,
}

/// Class members among `{1, -1}`.
fn abs_one_members(desc: &RingDescriptor) -> Vec<BigInt> {
    [BigInt::one(), -BigInt::one()].into_iter().filter(|u| desc.contains(u)).collect()
}

/// Units `e` of the infinite ring: `e^(n-1) = 1`.
pub fn units(desc: &RingDescriptor) -> Vec<BigInt> {
    abs_one_members(desc)
        .into_iter()
        .filter(|e| Pow::pow(e, desc.n - 1).is_one())
        .collect()
}

pub fn primality_kind(desc: &RingDescriptor) -> Primality {
    if units(desc).is_empty() {
        Primality::Irreducible
    } else {
        Primality::Strict
    }
}

/// Open interval `(-g, g)` of guaranteed irreducible elements.
///
/// `g = |a-b|^n` whenever `b-a` is the smallest class member in absolute
/// value (or `a = 1`, where the smallest nontrivial product is `(1-b)^2`);
/// otherwise `g = a^n`.
pub fn irreducibility_gap(desc: &RingDescriptor) -> (BigInt, BigInt) {
    let base = if desc.a == 1 || desc.a >= desc.b - desc.a { desc.b - desc.a } else { desc.a };
    let g: BigInt = Pow::pow(&BigInt::from(base), desc.n);
    (-g.clone(), g)
}

/// Open interval of guaranteed primes of a limiting ring.
///
/// For `a = 1` and `b >= 3` the upper end is `(b-1)^2 = (1-b)(1-b)`.
pub fn primes_gap(desc: &RingDescriptor) -> Result<(BigInt, BigInt)> {
    let b = BigInt::from(desc.b);
    if desc.a == 1 {
        let hi = if desc.b >= 3 { (&b - 1u32) * (&b - 1u32) } else { (&b + 1u32) * (&b + 1u32) };
        Ok((BigInt::one() - &b * &b, hi))
    } else if desc.a + 1 == desc.b {
        Ok((-((&b - 1u32) * (&b - 1u32)), &b * &b - 1u32))
    } else {
        Err(Error::NotLimiting { a: desc.a, b: desc.b })
    }
}

/// The printed bound `(1-b^2, (b+1)^2)` for `a = 1`, kept for comparison.
pub fn primes_gap_printed(b: u64) -> (BigInt, BigInt) {
    let b = BigInt::from(b);
    (BigInt::one() - &b * &b, (&b + 1u32) * (&b + 1u32))
}

fn abs_u64(x: &BigInt) -> Result<u64> {
    x.abs().to_u64().ok_or_else(|| Error::TooLarge { value: x.clone() })
}

/// Positive divisors of `x`, ascending, by trial division.
fn divisors(x: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= x {
        if x.is_multiple_of(d) {
            small.push(d);
            if d != x / d {
                large.push(x / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_binary_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Signed class members `d` with `1 < |d| < |x|` dividing `x`, ascending.
fn proper_class_divisors(desc: &RingDescriptor, x: u64) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = divisors(x)
        .into_iter()
        .filter(|&d| d > 1 && d < x)
        .flat_map(|d| [BigInt::from(d), -BigInt::from(d)])
        .filter(|d| desc.contains(d))
        .collect();
    out.sort();
    out
}

/// Can `r` unit factors with `c + r` admissible (and `>= n`) multiply to `s`?
fn pad_with_units(desc: &RingDescriptor, us: &[BigInt], c: u64, s: &BigInt) -> bool {
    let step = desc.n - 1;
    let has_pos = us.iter().any(|u| u.is_positive());
    let has_neg = us.iter().any(|u| u.is_negative());
    (0..=2 * step + desc.n).any(|r| {
        let len = c + r;
        if len < desc.n || !(len - 1).is_multiple_of(step) {
            return false;
        }
        if r == 0 {
            return s.is_one();
        }
        match (has_pos, has_neg) {
            (true, true) => true,
            (true, false) => s.is_one(),
            (false, true) => *s == BigInt::from(if r % 2 == 0 { 1 } else { -1 }),
            (false, false) => false,
        }
    })
}

/// Whether `x` has a decomposition containing a factor `f` with `1 < |f| < |x|`,
/// padded by class members of absolute value one where needed.
fn is_reducible(x: &PolyInt) -> Result<bool> {
    let desc = &x.desc;
    if x.value.is_zero() {
        return Ok(true);
    }
    let ax = abs_u64(&x.value)?;
    let cand = proper_class_divisors(desc, ax);
    let us = abs_one_members(desc);

    fn dfs(
        desc: &RingDescriptor,
        x: &BigInt,
        cand: &[BigInt],
        us: &[BigInt],
        start: usize,
        p: &BigInt,
        c: u64,
    ) -> bool {
        if c >= 2 {
            let (s, r) = x.div_rem(p);
            if r.is_zero() && s.abs().is_one() && pad_with_units(desc, us, c, &s) {
                return true;
            }
        }
        for i in start..cand.len() {
            let np = p * &cand[i];
            if !(x % &np).is_zero() {
                continue;
            }
            if dfs(desc, x, cand, us, i, &np, c + 1) {
                return true;
            }
        }
        false
    }
    Ok(dfs(desc, &x.value, &cand, &us, 0, &BigInt::one(), 0))
}

/// No nontrivial decomposition of any length.
pub fn is_irreducible(x: &PolyInt) -> Result<bool> {
    Ok(!is_reducible(x)?)
}

/// Strict polyadic primality.
///
/// An element is prime when its only expansions are padded by units. When the
/// class holds both `1` and `-1`, those two are not prime, as in the binary ring.
pub fn is_polyadic_prime(x: &PolyInt) -> Result<bool> {
    let desc = &x.desc;
    if primality_kind(desc) != Primality::Strict {
        return Err(Error::NotUnital { a: desc.a, b: desc.b });
    }
    if x.value.abs().is_one() {
        return Ok(abs_one_members(desc).len() == 1);
    }
    is_irreducible(x)
}

/// Strict primality where units exist, irreducibility elsewhere.
pub fn is_prime_or_irreducible(x: &PolyInt) -> Result<bool> {
    match primality_kind(&x.desc) {
        Primality::Strict => is_polyadic_prime(x),
        Primality::Irreducible => is_irreducible(x),
    }
}

/// All factor multisets of admissible length `l(n-1)+1`, `1 <= l <= l_max`,
/// with product `x` and at least one factor other than `+-1` and `+-x`.
pub fn decompositions(x: &PolyInt, l_max: u64) -> Result<Vec<Vec<PolyInt>>> {
    let desc = &x.desc;
    if x.value.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ax = abs_u64(&x.value)?;
    let proper = proper_class_divisors(desc, ax);
    let mut cand = abs_one_members(desc);
    cand.extend(proper.iter().cloned());
    cand.sort();

    struct Search<'a> {
        x: &'a BigInt,
        cand: &'a [BigInt],
        len: usize,
        acc: Vec<BigInt>,
        out: Vec<Vec<BigInt>>,
    }
    impl Search<'_> {
        fn run(&mut self, start: usize, p: &BigInt, nontrivial: bool) {
            if self.acc.len() == self.len {
                if nontrivial && p == self.x {
                    self.out.push(self.acc.clone());
                }
                return;
            }
            for i in start..self.cand.len() {
                let f = &self.cand[i];
                let np = p * f;
                if !(self.x % &np).is_zero() {
                    continue;
                }
                let nt = nontrivial || !f.abs().is_one();
                self.acc.push(f.clone());
                self.run(i, &np, nt);
                self.acc.pop();
            }
        }
    }

    let mut found = Vec::new();
    for l in 1..=l_max {
        let mut s = Search {
            x: &x.value,
            cand: &cand,
            len: (l * (desc.n - 1) + 1) as usize,
            acc: Vec::new(),
            out: Vec::new(),
        };
        s.run(0, &BigInt::one(), false);
        found.extend(s.out);
    }
    Ok(found
        .into_iter()
        .map(|fs| fs.into_iter().map(|v| desc.from_value(v).expect("class divisor")).collect())
        .collect())
}

/// The composition set `D(x)`.
pub fn composition_set(x: &PolyInt, l_max: u64) -> Result<CompositionSet> {
    let decompositions = decompositions(x, l_max)?;
    let factors: BTreeSet<BigInt> = decompositions
        .iter()
        .flatten()
        .filter(|f| !f.is_unit_value())
        .map(|f| f.value.clone())
        .collect();
    Ok(CompositionSet {
        element: x.clone(),
        factors: factors.into_iter().map(|v| x.desc.from_value(v).expect("class factor")).collect(),
        decompositions,
    })
}

fn limiting(desc: &RingDescriptor) -> Result<()> {
    if !desc.is_limiting() {
        return Err(Error::NotLimiting { a: desc.a, b: desc.b });
    }
    Ok(())
}

/// Polyadic primes in `[x_{-k_max}, x_{k_max}]` of a limiting ring.
pub fn prime_scan(desc: &RingDescriptor, k_max: u64) -> Result<PrimeScan> {
    limiting(desc)?;
    let k = k_max as i64;
    let flags: Vec<Result<Option<PolyInt>>> = (-k..=k)
        .into_par_iter()
        .map(|k| {
            let x = desc.element(k);
            Ok(is_polyadic_prime(&x)?.then_some(x))
        })
        .collect();
    let mut primes = Vec::new();
    for f in flags {
        if let Some(x) = f? {
            primes.push(x);
        }
    }
    let mut delta = Vec::new();
    for p in &primes {
        let v = abs_u64(&p.value)?;
        if v != 1 && !is_binary_prime(v) {
            delta.push(p.clone());
        }
    }
    Ok(PrimeScan { descriptor: desc.clone(), k_max, pi: primes.len(), primes, delta })
}

fn same_ring(x1: &PolyInt, x2: &PolyInt) -> Result<()> {
    if x1.desc.a != x2.desc.a || x1.desc.b != x2.desc.b {
        return Err(Error::DescriptorMismatch);
    }
    Ok(())
}

/// The class member `x_q` with `x1 = x2 x_q^(n-1)`, if any.
pub fn polyadic_divide(x1: &PolyInt, x2: &PolyInt) -> Result<Option<PolyInt>> {
    same_ring(x1, x2)?;
    let desc = &x1.desc;
    if x2.value.is_zero() {
        return if x1.value.is_zero() {
            Err(Error::NonUniqueQuotient { candidates: Vec::new() })
        } else {
            Ok(None)
        };
    }
    let (t, r) = x1.value.div_rem(&x2.value);
    if !r.is_zero() {
        return Ok(None);
    }
    let e = (desc.n - 1) as u32;
    let root = t.abs().nth_root(e);
    if Pow::pow(&root, e) != t.abs() {
        return Ok(None);
    }
    let mut cands: Vec<BigInt> = if e.is_multiple_of(2) {
        if t.is_negative() {
            Vec::new()
        } else {
            vec![-root.clone(), root]
        }
    } else if t.is_negative() {
        vec![-root]
    } else {
        vec![root]
    };
    cands.dedup();
    cands.retain(|c| desc.contains(c));
    match cands.len() {
        0 => Ok(None),
        1 => Ok(Some(desc.from_value(cands.pop().unwrap())?)),
        _ => Err(Error::NonUniqueQuotient { candidates: cands }),
    }
}

/// Pairs `(x_q, x_r)` with `x1 = x2 x_q^(n-1) + (m-1) x_r`, `|k_q| <= |k_1| + radius`.
pub fn divide_with_remainder(
    x1: &PolyInt,
    x2: &PolyInt,
    radius: u64,
) -> Result<Vec<(PolyInt, PolyInt)>> {
    same_ring(x1, x2)?;
    let desc = &x1.desc;
    let bound = x1.k.abs() + BigInt::from(radius);
    let bound = bound.to_i64().ok_or_else(|| Error::TooLarge { value: bound.clone() })?;
    let m1 = BigInt::from(desc.m - 1);
    let mut out = Vec::new();
    for kq in -bound..=bound {
        let xq = desc.element(kq);
        let t = &x1.value - &x2.value * Pow::pow(&xq.value, desc.n - 1);
        let (xr, r) = t.div_rem(&m1);
        if r.is_zero() && desc.contains(&xr) {
            out.push((xq, desc.from_value(xr)?));
        }
    }
    Ok(out)
}

/// True iff the composition sets of all `xs` have empty intersection.
pub fn are_coprime(xs: &[PolyInt], l_max: u64) -> Result<bool> {
    let Some(first) = xs.first() else {
        return Ok(true);
    };
    let mut common: Option<BTreeSet<BigInt>> = None;
    for x in xs {
        same_ring(first, x)?;
        let d: BTreeSet<BigInt> =
            composition_set(x, l_max)?.factors.into_iter().map(|f| f.value).collect();
        common = Some(match common {
            None => d,
            Some(c) => c.intersection(&d).cloned().collect(),
        });
    }
    Ok(common.is_none_or(|c| c.is_empty()))
}

/// Polyadic Euler function over the open interval `(x_{-k_max}, x_{k_max})`.
///
/// Members are prime (irreducible in rings without units) and coprime, by
/// ordinary gcd, to both interval ends.
pub fn euler_scan(desc: &RingDescriptor, k_max: u64) -> Result<EulerScan> {
    let k = k_max as i64;
    let hi = desc.element(k).value.abs();
    let lo = desc.element(-k).value.abs();
    let flags: Vec<Result<Option<PolyInt>>> = (-k + 1..k)
        .into_par_iter()
        .map(|k| {
            let x = desc.element(k);
            let v = x.value.abs();
            if !v.gcd(&hi).is_one() || !v.gcd(&lo).is_one() {
                return Ok(None);
            }
            Ok(is_prime_or_irreducible(&x)?.then_some(x))
        })
        .collect();
    let mut set = Vec::new();
    for f in flags {
        if let Some(x) = f? {
            set.push(x);
        }
    }
    Ok(EulerScan { descriptor: desc.clone(), k_max, phi: set.len(), set })
}
