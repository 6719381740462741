//! Congruence-class rings `Z_(m,n)^[a,b]`: arities, shape invariants and the
//! m-ary addition / n-ary multiplication on representatives `a + b k`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// One infinite polyadic ring `Z_(m,n)^[a,b]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    pub a: u64,
    pub b: u64,
    pub m: u64,
    pub n: u64,
    /// Additive shape invariant `(m-1) a / b`.
    pub i: u64,
    /// Multiplicative shape invariant `(a^n - a) / b`.
    pub j: BigInt,
}

fn check_class(a: u64, b: u64) -> Result<()> {
    if b == 0 || a >= b {
        return Err(Error::InvalidClass { a, b });
    }
    Ok(())
}

fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    let md = modulus as u128;
    let mut acc = 1u128 % md;
    let mut x = base as u128 % md;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * x % md;
        }
        x = x * x % md;
        e >>= 1;
    }
    acc as u64
}

/// Minimal arities `(m, n)` of the class `[[a]]_b`.
pub fn derive_arities(a: u64, b: u64) -> Result<(u64, u64)> {
    check_class(a, b)?;
    let m = (2..=b + 1)
        .find(|m| ((m - 1) as u128 * a as u128).is_multiple_of(b as u128))
        .expect("m - 1 = b / gcd(a, b) always satisfies the additive congruence");
    let n = (2..=b + 1)
        .find(|&n| pow_mod(a, n, b) == a % b)
        .ok_or(Error::ForbiddenPair { a, b })?;
    Ok((m, n))
}

/// Closed-form arities where the known propositions apply.
pub fn psi_closed_forms(a: u64, b: u64) -> Option<(u64, u64)> {
    if check_class(a, b).is_err() || a == 0 {
        return None;
    }
    if a == 1 {
        return Some((b + 1, 2));
    }
    if a == b - 1 {
        return Some((b + 1, 3));
    }
    // a = a0 d, b = b0 d: n - 1 is the least integer log_a(l b0 + 1) over l >= 1
    let d = a.gcd(&b);
    let b0 = b / d;
    let big_a = BigInt::from(a);
    let mut power = big_a.clone();
    for e in 1..=b0 {
        let shifted = &power - 1u32;
        if shifted.is_positive() && (&shifted % b0).is_zero() {
            return Some((b0 + 1, e + 1));
        }
        power *= &big_a;
    }
    None
}

impl RingDescriptor {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        let (m, n) = derive_arities(a, b)?;
        let i = (m - 1) * a / b;
        let an: BigInt = BigInt::from(a).pow(n as u32);
        let (j, rem) = (an - BigInt::from(a)).div_rem(&BigInt::from(b));
        debug_assert!(rem.is_zero());
        Ok(RingDescriptor { a, b, m, n, i, j })
    }

    /// The ordinary integers `(a, b) = (0, 1)`.
    pub fn binary() -> Self {
        Self::new(0, 1).expect("binary limit is always valid")
    }

    /// Classes `a = 1` or `a = b - 1`, the only ones carrying units.
    pub fn is_limiting(&self) -> bool {
        self.a == 1 || self.a + 1 == self.b
    }

    pub fn contains(&self, v: &BigInt) -> bool {
        v.mod_floor(&BigInt::from(self.b)) == BigInt::from(self.a)
    }

    /// Element `a + b k`.
    pub fn element(&self, k: impl Into<BigInt>) -> PolyInt {
        let k = k.into();
        let value = BigInt::from(self.a) + BigInt::from(self.b) * &k;
        PolyInt { desc: self.clone(), k, value }
    }

    /// Element with representative `v`; `v` must lie in the class.
    pub fn from_value(&self, v: impl Into<BigInt>) -> Result<PolyInt> {
        let value = v.into();
        let (k, r) = (&value - BigInt::from(self.a)).div_mod_floor(&BigInt::from(self.b));
        if !r.is_zero() {
            return Err(Error::NotInClass { value, a: self.a, b: self.b });
        }
        Ok(PolyInt { desc: self.clone(), k, value })
    }

    fn same(&self, xs: &[PolyInt]) -> Result<()> {
        if xs.iter().any(|x| x.desc.a != self.a || x.desc.b != self.b) {
            return Err(Error::DescriptorMismatch);
        }
        Ok(())
    }

    fn wrap(&self, value: BigInt) -> PolyInt {
        self.from_value(value).expect("class is closed under its operations")
    }

    /// m-ary addition.
    pub fn nu(&self, xs: &[PolyInt]) -> Result<PolyInt> {
        if xs.len() as u64 != self.m {
            return Err(Error::ArityMismatch { expected: self.m as usize, got: xs.len() });
        }
        self.same(xs)?;
        Ok(self.wrap(xs.iter().map(|x| &x.value).sum()))
    }

    /// n-ary multiplication.
    pub fn mu(&self, xs: &[PolyInt]) -> Result<PolyInt> {
        if xs.len() as u64 != self.n {
            return Err(Error::ArityMismatch { expected: self.n as usize, got: xs.len() });
        }
        self.same(xs)?;
        Ok(self.wrap(xs.iter().map(|x| &x.value).product()))
    }

    /// Iterated addition over a word of admissible length `l(m-1)+1`.
    pub fn nu_long(&self, xs: &[PolyInt]) -> Result<PolyInt> {
        self.fold_long(xs, self.m, |d, w| d.nu(w))
    }

    /// Iterated multiplication over a word of admissible length `l(n-1)+1`.
    pub fn mu_long(&self, xs: &[PolyInt]) -> Result<PolyInt> {
        self.fold_long(xs, self.n, |d, w| d.mu(w))
    }

    fn fold_long<F>(&self, xs: &[PolyInt], arity: u64, op: F) -> Result<PolyInt>
    where
        F: Fn(&Self, &[PolyInt]) -> Result<PolyInt>,
    {
        let step = (arity - 1) as usize;
        if xs.is_empty() || !(xs.len() - 1).is_multiple_of(step) {
            return Err(Error::InadmissibleLength { len: xs.len(), arity });
        }
        self.same(xs)?;
        let mut acc = xs[0].clone();
        for chunk in xs[1..].chunks(step) {
            let mut word = Vec::with_capacity(step + 1);
            word.push(acc);
            word.extend_from_slice(chunk);
            acc = op(self, &word)?;
        }
        Ok(acc)
    }

    /// `x<l>_{+m}`: the sum of `l(m-1)+1` copies of `x`.
    pub fn additive_power(&self, x: &PolyInt, l: u64) -> PolyInt {
        self.wrap(&x.value * BigInt::from(l * (self.m - 1) + 1))
    }

    /// `x<l>_{xn}`: the product of `l(n-1)+1` copies of `x`.
    pub fn multiplicative_power(&self, x: &PolyInt, l: u64) -> PolyInt {
        let e = l * (self.n - 1) + 1;
        self.wrap(Pow::pow(&x.value, e))
    }

    /// The additive querelement `(2-m) x`.
    pub fn additive_querelement(&self, x: &PolyInt) -> PolyInt {
        self.wrap(&x.value * (BigInt::from(2) - BigInt::from(self.m)))
    }

    /// Notation `Z_(m,n)^[a,b]`.
    pub fn label(&self) -> String {
        format!("Z_({},{})^[{},{}]", self.m, self.n, self.a, self.b)
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// An element `a + b k` of a polyadic integer ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyInt {
    pub desc: RingDescriptor,
    pub k: BigInt,
    pub value: BigInt,
}

impl PolyInt {
    pub fn to_i64(&self) -> Option<i64> {
        self.value.to_i64()
    }

    pub fn is_unit_value(&self) -> bool {
        self.value.abs().is_one()
    }
}

impl fmt::Display for PolyInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
