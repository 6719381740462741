//! Multiplicative n-ary group of a finite polyadic field: cyclic subgroups,
//! primitive elements, the subgroup of units and multiplicative reflections.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::finite_ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDecomposition {
    pub ring: FiniteRing,
    /// Set-maximal cyclic subgroups not made of units only, as sorted index sets.
    pub subgroups: Vec<Vec<u64>>,
    /// `E(G)`, the units.
    pub unit_subgroup: Vec<u64>,
    /// `E(G)` meets none of the subgroups.
    pub unit_subgroup_split: bool,
    /// The subgroups alone cover every non-zero element.
    pub covers: bool,
    /// The subgroups together with `E(G)` cover every non-zero element.
    pub covers_with_units: bool,
    pub pairwise_disjoint: bool,
    pub primitive_elements: Vec<u64>,
    pub kappa_prim: usize,
    pub reflections: BTreeMap<u64, u64>,
}

impl GroupDecomposition {
    pub fn to_json(&self) -> Value {
        let refl: serde_json::Map<String, Value> =
            self.reflections.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        json!({
            "subgroups": self.subgroups,
            "units": self.unit_subgroup,
            "split": self.unit_subgroup_split,
            "covers": self.covers,
            "covers_with_units": self.covers_with_units,
            "disjoint": self.pairwise_disjoint,
            "primitive": self.primitive_elements,
            "reflections": refl,
        })
    }
}

fn require_field(ring: &FiniteRing) -> Result<()> {
    if !ring.is_field() {
        let d = &ring.desc;
        return Err(Error::NotAField { a: d.a, b: d.b, q: ring.q });
    }
    Ok(())
}

fn nonzero(ring: &FiniteRing) -> Vec<u64> {
    let z = ring.find_zero();
    ring.elements().into_iter().filter(|&k| Some(k) != z).collect()
}

fn generated(ring: &FiniteRing, x: u64) -> Result<Vec<u64>> {
    let ord = ring.element_order(x)?;
    let set: BTreeSet<u64> = (1..=ord).map(|l| ring.mul_power(x, l)).collect();
    Ok(set.into_iter().collect())
}

/// `{x<1>, ..., x<ord x>}`.
pub fn cyclic_subgroup(ring: &FiniteRing, x: u64) -> Result<Vec<u64>> {
    require_field(ring)?;
    generated(ring, x)
}

/// Non-zero elements whose order equals `q*`.
pub fn primitive_elements(ring: &FiniteRing) -> Result<(Vec<u64>, usize)> {
    require_field(ring)?;
    let els = nonzero(ring);
    let q_star = els.len() as u64;
    let mut prim = Vec::new();
    for x in els {
        if ring.element_order(x)? == q_star {
            prim.push(x);
        }
    }
    let k = prim.len();
    Ok((prim, k))
}

/// Least `l` with `x<l>_{xn}` a unit, for each non-zero non-unit `x`.
pub fn reflections(ring: &FiniteRing) -> Result<BTreeMap<u64, u64>> {
    let units = ring.find_units();
    if units.is_empty() {
        let d = &ring.desc;
        return Err(Error::NoUnits { a: d.a, b: d.b, q: ring.q });
    }
    let els = nonzero(ring);
    let bound = els.len() as u64;
    let mut out = BTreeMap::new();
    for x in els.into_iter().filter(|x| !units.contains(x)) {
        if let Some(l) = (1..=bound).find(|&l| units.contains(&ring.mul_power(x, l))) {
            out.insert(x, l);
        }
    }
    Ok(out)
}

pub fn decompose(ring: &FiniteRing) -> Result<GroupDecomposition> {
    require_field(ring)?;
    let els = nonzero(ring);
    let units = ring.find_units();

    let mut cyclic: Vec<BTreeSet<u64>> = Vec::new();
    for &x in &els {
        let g: BTreeSet<u64> = generated(ring, x)?.into_iter().collect();
        if !cyclic.contains(&g) {
            cyclic.push(g);
        }
    }
    let maximal: Vec<&BTreeSet<u64>> = cyclic
        .iter()
        .filter(|g| !cyclic.iter().any(|h| h.len() > g.len() && g.is_subset(h)))
        .collect();
    let mut subgroups: Vec<Vec<u64>> = maximal
        .into_iter()
        .filter(|g| !g.iter().all(|x| units.contains(x)))
        .map(|g| g.iter().copied().collect())
        .collect();
    subgroups.sort();

    let union: BTreeSet<u64> = subgroups.iter().flatten().copied().collect();
    let total: usize = subgroups.iter().map(Vec::len).sum();
    let all: BTreeSet<u64> = els.iter().copied().collect();
    let with_units: BTreeSet<u64> = union.iter().chain(units.iter()).copied().collect();
    let (primitive_elements, kappa_prim) = primitive_elements(ring)?;
    let reflections = if units.is_empty() { BTreeMap::new() } else { reflections(ring)? };

    Ok(GroupDecomposition {
        ring: ring.clone(),
        unit_subgroup_split: units.iter().all(|e| !union.contains(e)),
        covers: union == all,
        covers_with_units: with_units == all,
        pairwise_disjoint: total == union.len(),
        subgroups,
        unit_subgroup: units,
        primitive_elements,
        kappa_prim,
        reflections,
    })
}

/// A field with more than one unit whose decomposition does not give one
/// cyclic subgroup per unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCountMismatch {
    pub a: u64,
    pub b: u64,
    pub q: u64,
    pub has_zero: bool,
    pub kappa_e: usize,
    pub subgroups: usize,
}

/// Checks the unit count against the number of cyclic subgroups over every
/// decomposable field with at least two units.
///
/// With a zero the subgroups must be disjoint and cover the non-zero
/// elements; without one they must be disjoint and cover them together with a
/// split-off `E(G)`. Groups made of units only are skipped.
pub fn unit_count_mismatches(rings: &[FiniteRing]) -> Result<(usize, Vec<UnitCountMismatch>)> {
    let mut checked = 0;
    let mut out = Vec::new();
    for ring in rings {
        if !ring.is_field() {
            continue;
        }
        let units = ring.find_units();
        if units.len() < 2 {
            continue;
        }
        let g = decompose(ring)?;
        let has_zero = ring.find_zero().is_some();
        let decomposed = !g.subgroups.is_empty()
            && g.pairwise_disjoint
            && if has_zero { g.covers } else { g.unit_subgroup_split && g.covers_with_units };
        if !decomposed {
            continue;
        }
        checked += 1;
        if g.subgroups.len() != units.len() {
            let d = &ring.desc;
            out.push(UnitCountMismatch {
                a: d.a,
                b: d.b,
                q: ring.q,
                has_zero,
                kappa_e: units.len(),
                subgroups: g.subgroups.len(),
            });
        }
    }
    Ok((checked, out))
}
