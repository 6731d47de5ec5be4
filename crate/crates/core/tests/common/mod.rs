//! Brute-force oracles and instance generators shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

use sfpack::lp::Rational;
use sfpack::{MonomialIdeal, VariableContext, VertexSet};

pub fn ctx(n: usize) -> Arc<VariableContext> {
    VariableContext::letters(n).unwrap()
}

pub fn ideal_from(n: usize, edges: &[VertexSet]) -> MonomialIdeal {
    MonomialIdeal::from_supports(ctx(n), edges).unwrap()
}

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// `(n, edges)` with `1 <= n <= max_n`, between 1 and `max_edges` nonempty edges.
pub fn edges_strategy(max_n: usize, max_edges: usize) -> impl Strategy<Value = (usize, Vec<VertexSet>)> {
    (1..=max_n).prop_flat_map(move |n| {
        let edge = (1u64..(1u64 << n)).prop_map(VertexSet);
        (Just(n), proptest::collection::vec(edge, 1..=max_edges))
    })
}

pub fn random_edges<R: Rng>(rng: &mut R, n: usize, max_edges: usize) -> Vec<VertexSet> {
    let k = rng.gen_range(1..=max_edges);
    (0..k).map(|_| VertexSet(rng.gen_range(1u64..(1u64 << n)))).collect()
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..(1u64 << n)).map(VertexSet)
}

/// Minimal vertex covers by checking every subset.
pub fn covers_oracle(n: usize, edges: &[VertexSet]) -> Vec<VertexSet> {
    let covers: Vec<VertexSet> = subsets(n).filter(|c| edges.iter().all(|e| e.meets(*c))).collect();
    let mut minimal: Vec<VertexSet> = covers
        .iter()
        .copied()
        .filter(|c| !covers.iter().any(|d| d != c && d.is_subset(*c)))
        .collect();
    minimal.sort();
    minimal
}

/// Minimal elements of the family, by pairwise comparison.
pub fn minimal_oracle(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = edges
        .iter()
        .copied()
        .filter(|e| !edges.iter().any(|f| f != e && f.is_subset(*e)))
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn tau_oracle(n: usize, edges: &[VertexSet]) -> usize {
    if edges.iter().any(|e| e.is_empty()) {
        return 0;
    }
    subsets(n)
        .filter(|c| edges.iter().all(|e| e.meets(*c)))
        .map(|c| c.len())
        .min()
        .unwrap()
}

pub fn pi_oracle(edges: &[VertexSet]) -> usize {
    if edges.iter().any(|e| e.is_empty()) {
        return 0;
    }
    let k = edges.len();
    (0u32..(1u32 << k))
        .filter(|mask| {
            let chosen: Vec<VertexSet> = (0..k).filter(|j| mask >> j & 1 == 1).map(|j| edges[j]).collect();
            chosen
                .iter()
                .enumerate()
                .all(|(i, a)| chosen[i + 1..].iter().all(|b| a.is_disjoint(*b)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap()
}

/// Solve a square system exactly; `None` when singular.
pub fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Rational::one() / a[col][col].clone();
        for x in &mut a[col][col..n] {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r][col..n].iter_mut().zip(&pivot_row[col..n]) {
                    *x = &*x - &f * p;
                }
                let d = &f * &b[col];
                b[r] = &b[r] - d;
            }
        }
    }
    Some(b)
}

/// Vertices of `{x >= 0, Mx >= 1}` by solving every choice of `n` tight
/// constraints among the rows of `M` and the coordinate hyperplanes.
pub fn vertices_oracle(rows: &[VertexSet], n: usize) -> Vec<Vec<Rational>> {
    // constraint k < rows.len(): row k; otherwise x_{k - rows.len()} >= 0
    let total = rows.len() + n;
    let coeffs = |k: usize| -> (Vec<Rational>, Rational) {
        if k < rows.len() {
            (
                (0..n)
                    .map(|j| if rows[k].contains(j) { int(1) } else { int(0) })
                    .collect(),
                int(1),
            )
        } else {
            (
                (0..n)
                    .map(|j| if j == k - rows.len() { int(1) } else { int(0) })
                    .collect(),
                int(0),
            )
        }
    };
    let feasible = |x: &[Rational]| {
        x.iter().all(|v| !v.is_negative())
            && rows
                .iter()
                .all(|r| r.iter().map(|j| x[j].clone()).sum::<Rational>() >= int(1))
    };
    let mut out = Vec::new();
    let mut choice: Vec<usize> = (0..n).collect();
    if n > total {
        return out;
    }
    loop {
        let (a, b): (Vec<_>, Vec<_>) = choice.iter().map(|&k| coeffs(k)).unzip();
        if let Some(x) = solve_square(a, b) {
            if feasible(&x) && !out.contains(&x) {
                out.push(x);
            }
        }
        // next combination
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if choice[i] < total - n + i {
                choice[i] += 1;
                for j in i + 1..n {
                    choice[j] = choice[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Newton polyhedron membership in two variables: the lower-left boundary of
/// `conv(G)` is a union of segments between generators, so `a ∈ NP` iff `a`
/// dominates a point on one of those segments.
pub fn np_contains_2d(gens: &[[u32; 2]], a: &[Rational; 2]) -> bool {
    for g in gens {
        for h in gens {
            // t·g + (1 - t)·h <= a for some t in [0, 1]
            let mut lo = int(0);
            let mut hi = int(1);
            for i in 0..2 {
                let gi = int(g[i] as i64);
                let hi_ = int(h[i] as i64);
                let slope = &gi - &hi_;
                let rhs = &a[i] - &hi_;
                if slope.is_zero() {
                    if rhs.is_negative() {
                        lo = int(2);
                    }
                } else if slope.is_positive() {
                    hi = hi.min(&rhs / &slope);
                } else {
                    lo = lo.max(&rhs / &slope);
                }
            }
            if lo <= hi {
                return true;
            }
        }
    }
    false
}
