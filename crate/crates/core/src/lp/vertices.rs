//! Vertices of `{x >= 0, Mx >= 1}` via the double description method.
//!
//! The polyhedron is homogenised to the cone `{(x, t) : x >= 0, t >= 0,
//! Mx - t·1 >= 0}`. Starting from the orthant (whose extreme rays are the unit
//! vectors), the rows of `M` are intersected in one at a time; new rays come
//! from adjacent pairs on opposite sides, with adjacency decided
//! combinatorially from the sets of tight constraints. Rays with `t > 0` are
//! the vertices.
//!
//! Ray coordinates are kept as primitive integer vectors; with 0/1 data and
//! the default size cap they stay far inside `i128`, and every operation is
//! overflow-checked regardless.

use num_bigint::BigInt;
use num_integer::Integer;

use super::rational::Rational;
use crate::error::{Error, Result};
use crate::hypergraph::ZeroOneMatrix;

pub const DEFAULT_VERTEX_CAP: usize = 12;

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Clone)]
struct Ray {
    coords: Vec<i128>,
    tight: Bits,
}

const OVERFLOW: Error = Error::Overflow("vertex enumeration");

fn evaluate(row: &[u8], coords: &[i128]) -> Result<i128> {
    // row·x - t
    let n = row.len();
    let mut acc: i128 = 0;
    for (j, &a) in row.iter().enumerate() {
        if a == 1 {
            acc = acc.checked_add(coords[j]).ok_or(OVERFLOW)?;
        }
    }
    acc.checked_sub(coords[n]).ok_or(OVERFLOW)
}

fn combine(p: &Ray, sp: i128, q: &Ray, sq: i128) -> Result<Vec<i128>> {
    // sp > 0 > sq: sp·q - sq·p lies on the new hyperplane
    let neg_sq = sq.checked_neg().ok_or(OVERFLOW)?;
    let mut out = Vec::with_capacity(p.coords.len());
    for (a, b) in p.coords.iter().zip(&q.coords) {
        let x = sp
            .checked_mul(*b)
            .and_then(|u| neg_sq.checked_mul(*a).and_then(|v| u.checked_add(v)))
            .ok_or(OVERFLOW)?;
        out.push(x);
    }
    let g = out.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        out.iter_mut().for_each(|x| *x /= g);
    }
    Ok(out)
}

/// All vertices of `{x >= 0, Mx >= 1}` with `x ∈ Q^cols`, sorted
/// lexicographically. Rejects more than `cap` columns.
pub fn vertex_enumerate_capped(m: &ZeroOneMatrix, cap: usize) -> Result<Vec<Vec<Rational>>> {
    let n = m.cols();
    if n > cap {
        return Err(Error::guard("vertex enumeration dimension", cap, n));
    }
    let dim = n + 1;
    let total = dim + m.rows();
    let mut rays: Vec<Ray> = (0..dim)
        .map(|i| {
            let mut coords = vec![0i128; dim];
            coords[i] = 1;
            let mut tight = Bits::new(total);
            for k in (0..dim).filter(|&k| k != i) {
                tight.set(k);
            }
            Ray { coords, tight }
        })
        .collect();

    for r in 0..m.rows() {
        let k = dim + r;
        let row = m.row(r);
        let mut values = Vec::with_capacity(rays.len());
        for ray in &rays {
            values.push(evaluate(row, &ray.coords)?);
        }
        if values.iter().all(|&v| v >= 0) {
            for (ray, &v) in rays.iter_mut().zip(&values) {
                if v == 0 {
                    ray.tight.set(k);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < 0).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight.and(&rays[q].tight);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, other)| i == p || i == q || !common.is_subset(&other.tight));
                if !adjacent {
                    continue;
                }
                let coords = combine(&rays[p], values[p], &rays[q], values[q])?;
                let mut tight = common;
                tight.set(k);
                next.push(Ray { coords, tight });
            }
        }
        for (i, ray) in rays.into_iter().enumerate() {
            match values[i] {
                v if v > 0 => next.push(ray),
                0 => {
                    let mut ray = ray;
                    ray.tight.set(k);
                    next.push(ray);
                }
                _ => {}
            }
        }
        rays = next;
    }

    let mut vertices: Vec<Vec<Rational>> = rays
        .iter()
        .filter(|r| r.coords[n] > 0)
        .map(|r| {
            let t = BigInt::from(r.coords[n]);
            r.coords[..n]
                .iter()
                .map(|&x| Rational::new(BigInt::from(x), t.clone()))
                .collect()
        })
        .collect();
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}

/// [`vertex_enumerate_capped`] with the default cap of 12 variables.
pub fn vertex_enumerate(m: &ZeroOneMatrix) -> Result<Vec<Vec<Rational>>> {
    vertex_enumerate_capped(m, DEFAULT_VERTEX_CAP)
}

/// True iff every coordinate of every point is an integer.
pub fn is_integral(points: &[Vec<Rational>]) -> bool {
    points.iter().all(|p| p.iter().all(|x| x.is_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::rational::{int, rat};

    #[test]
    fn single_constraint() {
        let m = ZeroOneMatrix::from_rows(vec![vec![1, 1]], 2).unwrap();
        let v = vertex_enumerate(&m).unwrap();
        assert_eq!(v, vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
        assert!(is_integral(&v));
    }

    #[test]
    fn triangle_has_half_vertex() {
        let m = ZeroOneMatrix::from_rows(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 3).unwrap();
        let v = vertex_enumerate(&m).unwrap();
        assert!(v.contains(&vec![rat(1, 2), rat(1, 2), rat(1, 2)]));
        assert!(!is_integral(&v));
        // plus the three integral covers {a,b}, {a,c}, {b,c}
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn no_constraints_gives_origin() {
        let m = ZeroOneMatrix::zeros(0, 3);
        assert_eq!(vertex_enumerate(&m).unwrap(), vec![vec![int(0); 3]]);
    }

    #[test]
    fn cap_is_enforced() {
        let m = ZeroOneMatrix::zeros(1, 13);
        assert!(matches!(vertex_enumerate(&m), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn integrality_predicate() {
        assert!(is_integral(&[vec![int(1), int(0)], vec![int(0), int(1)]]));
        assert!(!is_integral(&[vec![rat(1, 2); 5]]));
    }
}
