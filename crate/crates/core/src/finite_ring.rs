//! Finite rings `Z_(m,n)^[a,b](q)` of secondary classes modulo `bq`.
//!
//! Elements are class indices `k` in `0..q`; index `k` stands for the
//! representative `a + b k`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring_core::RingDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    pub desc: RingDescriptor,
    pub q: u64,
    /// `b q`
    pub modulus: u64,
}

/// Classification of one finite ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub ring: FiniteRing,
    pub zero: Option<u64>,
    pub units: Vec<u64>,
    pub is_field: bool,
    pub chi_p: Option<u64>,
    /// Maximum idempotence order over non-zero elements; fields only.
    pub lambda_p: Option<u64>,
    pub element_orders: BTreeMap<u64, u64>,
    pub q_star: u64,
    pub n_admissible: bool,
    pub zeroless: bool,
    pub nonunital: bool,
}

impl StructureReport {
    pub fn kappa_e(&self) -> usize {
        self.units.len()
    }

    /// Flat JSON object; `group` is attached by the caller when wanted.
    pub fn to_json(&self) -> Value {
        let d = &self.ring.desc;
        let orders: serde_json::Map<String, Value> =
            self.element_orders.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        json!({
            "a": d.a,
            "b": d.b,
            "m": d.m,
            "n": d.n,
            "I": d.i,
            "J": big_json(&d.j),
            "q": self.ring.q,
            "q_star": self.q_star,
            "n_admissible": self.n_admissible,
            "zero": self.zero,
            "units": self.units,
            "kappa_e": self.units.len(),
            "is_field": self.is_field,
            "chi_p": self.chi_p,
            "lambda_p": self.lambda_p,
            "zeroless": self.zeroless,
            "nonunital": self.nonunital,
            "element_orders": orders,
        })
    }
}

/// Exact JSON number for an arbitrary-precision integer.
pub fn big_json(v: &BigInt) -> Value {
    serde_json::from_str(&v.to_string()).expect("integer literal is valid JSON")
}

/// Non-decreasing index tuples of length `len` over `0..q`.
pub fn multisets(pool: &[u64], len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(pool: &[u64], len: usize, start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            rec(pool, len, i, cur, out);
            cur.pop();
        }
    }
    rec(pool, len, 0, &mut cur, &mut out);
    out
}

impl FiniteRing {
    pub fn new(desc: RingDescriptor, q: u64) -> Result<Self> {
        let modulus = desc
            .b
            .checked_mul(q)
            .filter(|&c| q >= 2 && c <= u32::MAX as u64)
            .ok_or(Error::InvalidOrder { b: desc.b, q })?;
        Ok(FiniteRing { desc, q, modulus })
    }

    pub fn from_pair(a: u64, b: u64, q: u64) -> Result<Self> {
        Self::new(RingDescriptor::new(a, b)?, q)
    }

    /// Representative `a + b k` of index `k`.
    pub fn rep(&self, k: u64) -> u64 {
        self.desc.a + self.desc.b * k
    }

    /// Index of a residue `r = a (mod b)` reduced modulo `bq`.
    pub fn index_of_rep(&self, r: u64) -> u64 {
        (r % self.modulus - self.desc.a) / self.desc.b
    }

    /// Index of an arbitrary class member, if it belongs to the class.
    pub fn index_of_value(&self, v: &BigInt) -> Option<u64> {
        if !self.desc.contains(v) {
            return None;
        }
        let r = v.mod_floor(&BigInt::from(self.modulus)).to_u64()?;
        Some(self.index_of_rep(r))
    }

    pub fn elements(&self) -> Vec<u64> {
        (0..self.q).collect()
    }

    pub fn label(&self) -> String {
        format!("{}({})", self.desc.label(), self.q)
    }

    fn mulmod(&self, x: u64, y: u64) -> u64 {
        (x as u128 * y as u128 % self.modulus as u128) as u64
    }

    fn check(&self, ks: &[u64], arity: u64) -> Result<()> {
        if ks.len() as u64 != arity {
            return Err(Error::ArityMismatch { expected: arity as usize, got: ks.len() });
        }
        Ok(())
    }

    /// m-ary addition on indices: `(sum k_i + I) mod q`.
    pub fn k_add(&self, ks: &[u64]) -> Result<u64> {
        self.check(ks, self.desc.m)?;
        Ok(self.add_unchecked(ks))
    }

    fn add_unchecked(&self, ks: &[u64]) -> u64 {
        let s: u128 = ks.iter().map(|&k| k as u128).sum::<u128>() + self.desc.i as u128;
        (s % self.q as u128) as u64
    }

    /// n-ary multiplication on indices, via the product of representatives mod `bq`.
    pub fn k_mul(&self, ks: &[u64]) -> Result<u64> {
        self.check(ks, self.desc.n)?;
        Ok(self.mul_unchecked(ks))
    }

    fn mul_unchecked(&self, ks: &[u64]) -> u64 {
        let p = ks.iter().fold(1 % self.modulus, |acc, &k| self.mulmod(acc, self.rep(k)));
        self.index_of_rep(p)
    }

    /// Representative of `x^count` modulo `bq`.
    fn rep_power(&self, k: u64, count: u64) -> u64 {
        (0..count).fold(1 % self.modulus, |acc, _| self.mulmod(acc, self.rep(k)))
    }

    /// `x<l>_{xn}`.
    pub fn mul_power(&self, k: u64, l: u64) -> u64 {
        let step = self.rep_power(k, self.desc.n - 1);
        let mut r = self.rep(k);
        for _ in 0..l {
            r = self.mulmod(r, step);
        }
        self.index_of_rep(r)
    }

    /// `x<l>_{+m}`.
    pub fn add_power(&self, k: u64, l: u64) -> u64 {
        let s = (l as u128 * (self.desc.m - 1) as u128 + 1) * k as u128 + l as u128 * self.desc.i as u128;
        (s % self.q as u128) as u64
    }

    /// Unique additive querelement `(2-m) k - I mod q`.
    pub fn add_querelement(&self, k: u64) -> u64 {
        let q = self.q as i128;
        let v = (2 - self.desc.m as i128) * k as i128 - self.desc.i as i128;
        v.rem_euclid(q) as u64
    }

    /// All products of `count` representatives drawn from `pool`, each with one witness.
    fn product_witnesses(&self, pool: &[u64], count: usize) -> BTreeMap<u64, Vec<u64>> {
        let mut cur: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        cur.insert(1 % self.modulus, Vec::new());
        for _ in 0..count {
            let mut next: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
            for (p, w) in &cur {
                for &k in pool {
                    let np = self.mulmod(*p, self.rep(k));
                    next.entry(np).or_insert_with(|| {
                        let mut w = w.clone();
                        w.push(k);
                        w.sort_unstable();
                        w
                    });
                }
            }
            cur = next;
        }
        cur
    }

    /// The element absorbing every product that contains it, if it is also
    /// additively 1-idempotent.
    pub fn find_zero(&self) -> Option<u64> {
        let n1 = (self.desc.n - 1) as usize;
        let words: Vec<Vec<u64>> = self.product_witnesses(&self.elements(), n1).into_values().collect();
        let absorbing = |z: u64| {
            words.iter().all(|w| {
                let mut t = w.clone();
                t.push(z);
                self.mul_unchecked(&t) == z
            })
        };
        let zs: Vec<u64> = self.elements().into_iter().filter(|&z| absorbing(z)).collect();
        debug_assert!(zs.len() <= 1);
        zs.into_iter().find(|&z| self.add_unchecked(&vec![z; self.desc.m as usize]) == z)
    }

    /// Multiplicative 1-idempotents acting neutrally: `mu[e^(n-1), x] = x` for all `x`.
    pub fn find_units(&self) -> Vec<u64> {
        let n1 = (self.desc.n - 1) as usize;
        self.elements()
            .into_iter()
            .filter(|&e| {
                self.elements().into_iter().all(|x| {
                    let mut t = vec![e; n1];
                    t.push(x);
                    self.mul_unchecked(&t) == x
                })
            })
            .collect()
    }

    /// Every `y` with `mu[x^(n-1), y] = x`.
    pub fn mult_querelements(&self, x: u64) -> Vec<u64> {
        let n1 = (self.desc.n - 1) as usize;
        self.elements()
            .into_iter()
            .filter(|&y| {
                let mut t = vec![x; n1];
                t.push(y);
                self.mul_unchecked(&t) == x
            })
            .collect()
    }

    /// Elements with `mu[x^n] = x`.
    pub fn idempotents(&self) -> Vec<u64> {
        self.elements().into_iter().filter(|&x| self.mul_power(x, 1) == x).collect()
    }

    fn additive_group(&self) -> bool {
        let m1 = (self.desc.m - 1) as usize;
        // translations depend only on the sum of the fixed operands
        let mut witness: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        witness.insert(0, Vec::new());
        for _ in 0..m1 {
            let mut next = BTreeMap::new();
            for (s, w) in &witness {
                for k in 0..self.q {
                    next.entry((s + k) % self.q).or_insert_with(|| {
                        let mut w = w.clone();
                        w.push(k);
                        w
                    });
                }
            }
            witness = next;
        }
        witness.values().all(|w| {
            let mut seen = vec![false; self.q as usize];
            for x in 0..self.q {
                let mut t = w.clone();
                t.push(x);
                seen[self.add_unchecked(&t) as usize] = true;
            }
            seen.iter().all(|&s| s)
        })
    }

    fn multiplicative_group(&self, nonzero: &[u64]) -> bool {
        if nonzero.is_empty() {
            return false;
        }
        let n1 = (self.desc.n - 1) as usize;
        let pos: BTreeMap<u64, usize> = nonzero.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        self.product_witnesses(nonzero, n1).values().all(|w| {
            let mut seen = vec![false; nonzero.len()];
            for &x in nonzero {
                let mut t = w.clone();
                t.push(x);
                match pos.get(&self.mul_unchecked(&t)) {
                    Some(&i) if !seen[i] => seen[i] = true,
                    _ => return false,
                }
            }
            true
        })
    }

    /// Additive m-ary group, and a multiplicative n-ary group on the non-zero elements.
    pub fn is_field(&self) -> bool {
        let zero = self.find_zero();
        self.is_field_given(zero)
    }

    fn is_field_given(&self, zero: Option<u64>) -> bool {
        let nonzero: Vec<u64> = self.elements().into_iter().filter(|&k| Some(k) != zero).collect();
        self.additive_group() && self.multiplicative_group(&nonzero)
    }

    /// Least `l >= 1` with `from<l>_{+m} = target`.
    pub fn additive_steps(&self, from: u64, target: u64) -> Option<u64> {
        (1..=self.q).find(|&l| self.add_power(from, l) == target)
    }

    /// Polyadic characteristic; requires a zero and at least one unit.
    pub fn characteristic(&self) -> Result<Option<u64>> {
        let (Some(z), units) = (self.find_zero(), self.find_units()) else {
            return Ok(None);
        };
        self.characteristic_given(Some(z), &units)
    }

    fn characteristic_given(&self, zero: Option<u64>, units: &[u64]) -> Result<Option<u64>> {
        let Some(z) = zero else { return Ok(None) };
        if units.is_empty() {
            return Ok(None);
        }
        let values: Vec<Option<u64>> = units.iter().map(|&e| self.additive_steps(e, z)).collect();
        if values.iter().any(|v| *v != values[0]) {
            return Err(Error::InconsistentCharacteristic { values });
        }
        Ok(values[0])
    }

    /// Idempotence order: least `l >= 1` with `x<l>_{xn} = x`.
    pub fn element_order(&self, x: u64) -> Result<u64> {
        let zero = self.find_zero();
        self.order_bounded(x, self.q_star(zero) + 1)
    }

    fn order_bounded(&self, x: u64, steps: u64) -> Result<u64> {
        let step = self.rep_power(x, self.desc.n - 1);
        let start = self.rep(x) % self.modulus;
        let mut r = start;
        for l in 1..=steps {
            r = self.mulmod(r, step);
            if r == start {
                return Ok(l);
            }
        }
        Err(Error::NoFiniteOrder { index: x, steps })
    }

    fn q_star(&self, zero: Option<u64>) -> u64 {
        if zero.is_some() {
            self.q - 1
        } else {
            self.q
        }
    }

    pub fn structure_report(&self) -> Result<StructureReport> {
        let zero = self.find_zero();
        let units = self.find_units();
        let is_field = self.is_field_given(zero);
        let chi_p = self.characteristic_given(zero, &units)?;
        let q_star = self.q_star(zero);
        let mut element_orders = BTreeMap::new();
        for x in self.elements() {
            if Some(x) == zero {
                continue;
            }
            if let Ok(l) = self.order_bounded(x, q_star + 1) {
                element_orders.insert(x, l);
            }
        }
        let lambda_p = if is_field { element_orders.values().copied().max() } else { None };
        Ok(StructureReport {
            ring: self.clone(),
            zero,
            is_field,
            chi_p,
            lambda_p,
            element_orders,
            q_star,
            n_admissible: (q_star - 1).is_multiple_of(self.desc.n - 1),
            zeroless: zero.is_none(),
            nonunital: units.is_empty(),
            units,
        })
    }
}
