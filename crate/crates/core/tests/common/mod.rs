#![allow(dead_code)]

use polyadic::finite_ring::{multisets, FiniteRing, StructureReport};
use polyadic::tables::{allowed_pairs, reports};

pub fn rings(b_max: u64, q_max: u64) -> Vec<FiniteRing> {
    allowed_pairs(b_max)
        .into_iter()
        .flat_map(|(a, b)| (2..=q_max).map(move |q| FiniteRing::from_pair(a, b, q).unwrap()))
        .collect()
}

pub fn scan(b_max: u64, q_max: u64) -> Vec<StructureReport> {
    let cells: Vec<(u64, u64, u64)> = allowed_pairs(b_max)
        .into_iter()
        .flat_map(|(a, b)| (2..=q_max).map(move |q| (a, b, q)))
        .collect();
    reports(&cells).unwrap()
}

pub fn tuples(q: u64, len: usize) -> Vec<Vec<u64>> {
    (0..q.pow(len as u32))
        .map(|c| (0..len).map(|i| (c / q.pow(i as u32)) % q).collect())
        .collect()
}

/// Does `s` form a polyadic field under the ring's operations?
pub fn is_subfield(ring: &FiniteRing, s: &[u64]) -> bool {
    let (m, n) = (ring.desc.m as usize, ring.desc.n as usize);
    let closed = |len: usize, op: &dyn Fn(&[u64]) -> u64| multisets(s, len).iter().all(|w| s.contains(&op(w)));
    if !closed(m, &|w| ring.k_add(w).unwrap()) || !closed(n, &|w| ring.k_mul(w).unwrap()) {
        return false;
    }
    let solvable = |pool: &[u64], len: usize, op: &dyn Fn(&[u64]) -> u64| {
        multisets(pool, len - 1).iter().all(|t| {
            pool.iter().all(|&x| {
                pool.iter()
                    .filter(|&&y| {
                        let mut w = t.clone();
                        w.push(y);
                        op(&w) == x
                    })
                    .count()
                    == 1
            })
        })
    };
    if !solvable(s, m, &|w| ring.k_add(w).unwrap()) {
        return false;
    }
    let zero = s.iter().copied().find(|&z| {
        multisets(s, n - 1).iter().all(|t| {
            let mut w = t.clone();
            w.push(z);
            ring.k_mul(&w).unwrap() == z
        })
    });
    let rest: Vec<u64> = s.iter().copied().filter(|&k| Some(k) != zero).collect();
    !rest.is_empty() && solvable(&rest, n, &|w| ring.k_mul(w).unwrap())
}

