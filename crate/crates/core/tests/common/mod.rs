//! Random generators and independent reference computations shared by the
//! integration tests. Nothing here calls into the library's algorithms.

#![allow(dead_code)]

use gorlink::HVector;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn hv(s: &str) -> HVector {
    s.parse().unwrap()
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim_k k[x0..x3]_n`, zero in negative degree.
fn dim_polys(n: i64) -> i64 {
    if n < 0 {
        0
    } else {
        binom(n + 3, 3)
    }
}

fn diff(values: &[i64]) -> Vec<i64> {
    (0..values.len())
        .map(|i| values[i] - if i == 0 { 0 } else { values[i - 1] })
        .collect()
}

fn trimmed(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// h-vector of `d` general points from `H(n) = min(d, C(n+3, 3))`.
pub fn general_points_oracle(d: i64) -> Vec<i64> {
    let hf: Vec<i64> = (0..=d).map(|n| d.min(binom(n + 3, 3))).collect();
    trimmed(diff(&hf))
}

/// Hilbert function of `P^3 / (F_1, ..., F_r)` for a regular sequence, by
/// inclusion-exclusion over the Koszul complex.
fn koszul_hilbert(degrees: &[i64], n: i64) -> i64 {
    let r = degrees.len();
    (0..1u32 << r)
        .map(|mask| {
            let shift: i64 = (0..r)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| degrees[i])
                .sum();
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            sign * dim_polys(n - shift)
        })
        .sum()
}

/// h-vector of a complete intersection in P^3 (2 forms: a curve, 3 forms:
/// points), as the (4 - r)-th difference of its Hilbert function.
pub fn ci_oracle(degrees: &[i64]) -> Vec<i64> {
    let top: i64 = degrees.iter().sum::<i64>() + 2;
    let mut values: Vec<i64> = (0..=top).map(|n| koszul_hilbert(degrees, n)).collect();
    for _ in 0..(4 - degrees.len()) {
        values = diff(&values);
    }
    trimmed(values)
}

/// Codimension-2 Macaulay bound: `h(1) <= 2` and `h(n+1) <= h(n)^<n>`, which
/// is `n + 2` when `h(n) = n + 1` and `h(n)` otherwise.
pub fn c2_oracle(h: &[i64]) -> bool {
    if h.first() != Some(&1) || h.iter().any(|v| *v < 0) {
        return false;
    }
    let h = trimmed(h.to_vec());
    if h.contains(&0) {
        return false;
    }
    (0..h.len()).all(|n| {
        let next = h.get(n + 1).copied().unwrap_or(0);
        let bound = if h[n] == n as i64 + 1 {
            n as i64 + 2
        } else {
            h[n]
        };
        next <= bound
    })
}

/// Symmetric, with nonnegative first half whose trimmed form is C2.
pub fn g3_oracle(h: &[i64]) -> bool {
    let b = h.len() - 1;
    if h.iter().any(|v| *v <= 0) || (0..=b).any(|i| h[i] != h[b - i]) {
        return false;
    }
    let d = diff(h);
    let half = d[..=b / 2].to_vec();
    if half.iter().any(|v| *v < 0) {
        return false;
    }
    let t = trimmed(half.clone());
    // No zero followed by a positive entry.
    t.iter().all(|v| *v > 0) && c2_oracle(&t)
}

/// Curves `c` with `c(n) - c(m+2-n) = ∂h(n)` for all `n`, by trying every
/// C2 sequence with entries bounded by `n + 1` and length at most `b + 1`.
pub fn representing_curves_oracle(h: &[i64]) -> Vec<Vec<i64>> {
    let b = h.len() as i64 - 1;
    let m = b - 1;
    let dh = diff(&[h.to_vec(), vec![0]].concat());
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![vec![1]];
    while let Some(c) = stack.pop() {
        let get = |n: i64| {
            if n < 0 {
                0
            } else {
                c.get(n as usize).copied().unwrap_or(0)
            }
        };
        let fits = (-2..=b + 3).all(|n| {
            let target = if (0..dh.len() as i64).contains(&n) {
                dh[n as usize]
            } else {
                0
            };
            get(n) - get(m + 2 - n) == target
        });
        if fits && c2_oracle(&c) {
            out.push(c.clone());
        }
        // Constraints whose two indices are already fixed prune the prefix.
        let settled = (0..c.len() as i64).all(|n| {
            let k = m + 2 - n;
            if k < 0 || k >= c.len() as i64 {
                return true;
            }
            let target = if (n as usize) < dh.len() {
                dh[n as usize]
            } else {
                0
            };
            get(n) - get(k) == target
        });
        if settled && (c.len() as i64) < b + 1 {
            for v in 1..=c.len() as i64 + 1 {
                let mut next = c.clone();
                next.push(v);
                if c2_oracle(&next) {
                    stack.push(next);
                }
            }
        }
    }
    out.sort();
    out
}

/// `dim PGor` for planar complete intersections: the plane (when unique)
/// plus pencils or pairs of plane curves, or a line plus points on it.
pub fn pgor_base_oracle(p: i64, q: i64) -> i64 {
    let plane_forms = |k: i64| binom(k + 2, 2);
    match (p, q) {
        (1, 1) => 3,
        (1, q) => 4 + q,
        (p, q) if p == q => 3 + 2 * (plane_forms(p) - 2),
        (p, q) => 3 + (plane_forms(p) - 1) + (plane_forms(q) - plane_forms(q - p) - 1),
    }
}

/// `h^0 I_Z(n)` for points with h-vector `h`.
fn ideal_dim(h: &[i64], n: i64) -> i64 {
    let hf: i64 = h.iter().take((n + 1).max(0) as usize).sum();
    dim_polys(n) - hf
}

/// Dimension of the family of complete intersection curves of type `(s, t)`
/// through a zero-scheme with h-vector `h`.
fn ci_family_dim(h: &[i64], s: i64, t: i64) -> i64 {
    if s == t {
        2 * (ideal_dim(h, s) - 2)
    } else {
        (ideal_dim(h, s) - 1) + (ideal_dim(h, t) - dim_polys(t - s) - 1)
    }
}

/// `dim PGor(h)` from the unsimplified count
/// `dim(h) = dim(h') + dim F' + 4 - dim F`, where `F`, `F'` are the families
/// of CI curves of type `(s, t)` through `Z` and `Z'`.
pub fn dim_pgor_oracle(h: &[i64]) -> i64 {
    let b = h.len() as i64 - 1;
    let get = |v: &[i64], n: i64| {
        if n < 0 {
            0
        } else {
            v.get(n as usize).copied().unwrap_or(0)
        }
    };
    let s = (1..).find(|&n| get(h, n) < binom(n + 2, 2)).unwrap();
    if s == 1 {
        if get(h, 1) <= 1 {
            return pgor_base_oracle(1, h.iter().sum());
        }
        let p = (0..).find(|&n| get(h, n) < n + 1).unwrap();
        return pgor_base_oracle(p, b + 2 - p);
    }
    let t = (b - 1) + 3 - s;
    let hc = ci_oracle(&[s, t]);
    let next = trimmed((0..=b).map(|n| get(h, n + 1) - get(&hc, n + 1)).collect());
    dim_pgor_oracle(&next) + ci_family_dim(&next, s, t) + 4 - ci_family_dim(h, s, t)
}

/// Dimension of the family of complete intersection curves of type `(s, t)`.
pub fn ci_curve_family_dim(s: i64, t: i64) -> i64 {
    if s == t {
        2 * (dim_polys(s) - 2)
    } else {
        (dim_polys(s) - 1) + (dim_polys(t) - dim_polys(t - s) - 1)
    }
}

/// `G_CM(d, s)` by linking a maximal-genus curve on a CI of type `(s, t)`,
/// `d = st - r`, to a plane curve of degree `r`.
pub fn g_cm_oracle(d: i64, s: i64) -> i64 {
    let t = (d + s - 1) / s;
    let r = s * t - d;
    (r - 1) * (r - 2) / 2 + (s + t - 4) * (s * t - 2 * r) / 2
}

/// `(d, g)` of an ACM curve from its Hilbert polynomial `dn + 1 - g`.
pub fn degree_genus_oracle(c: &[i64]) -> (i64, i64) {
    let top = c.len() as i64 + 4;
    let h1: Vec<i64> = (0..=top)
        .map(|n| c.iter().take((n + 1) as usize).sum())
        .collect();
    let hf: Vec<i64> = (0..=top).map(|n| h1[..=n as usize].iter().sum()).collect();
    let d = hf[top as usize] - hf[top as usize - 1];
    (d, d * top + 1 - hf[top as usize])
}

/// Random C2-admissible h-vector with `s <= max_s` and a tail of bounded
/// length.
pub fn random_c2(rng: &mut ChaCha8Rng, max_s: i64, max_tail: usize) -> HVector {
    let s = rng.gen_range(1..=max_s);
    let mut v: Vec<i64> = (1..=s).collect();
    let mut last = s;
    for _ in 0..rng.gen_range(0..=max_tail) {
        last = rng.gen_range(0..=last);
        if last == 0 {
            break;
        }
        v.push(last);
    }
    HVector::new(v).unwrap()
}

/// Random G3-admissible h-vector from a C2 first half and a socle degree.
pub fn random_g3(rng: &mut ChaCha8Rng, max_s: i64, max_socle: usize) -> HVector {
    loop {
        let b = rng.gen_range(0..=max_socle);
        let k = random_c2(rng, max_s, b / 2);
        if k.socle_degree() <= b / 2 {
            return gorlink::hvector::symmetrize(&k, b).unwrap();
        }
    }
}

/// Random h-vector (positive up to its socle degree, starting at 1).
pub fn random_hvector(rng: &mut ChaCha8Rng, max_len: usize, max_entry: i64) -> HVector {
    let len = rng.gen_range(1..=max_len);
    let mut v = vec![1];
    v.extend((1..len).map(|_| rng.gen_range(1..=max_entry)));
    HVector::new(v).unwrap()
}
