//! h-vector transforms for Gorenstein liaison, elementary biliaison and the
//! `mH - K` divisor construction on ACM curves.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hvector::{
    ci_curve_hvector, curve_degree_genus, first_half, integrate, is_c2_admissible,
    is_g3_admissible, HVector,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LiaisonKind {
    GLink,
    Biliaison,
}

/// One liaison or biliaison move at the level of h-vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiaisonStep {
    pub kind: LiaisonKind,
    /// The AG scheme for a link, the ACM curve for a biliaison.
    pub partner: HVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height: Option<i64>,
    pub input: HVector,
    pub output: HVector,
}

impl LiaisonStep {
    pub fn g_link(partner: &HVector, input: &HVector) -> Result<Self> {
        Ok(LiaisonStep {
            kind: LiaisonKind::GLink,
            output: g_link(partner, input)?,
            partner: partner.clone(),
            height: None,
            input: input.clone(),
        })
    }

    pub fn biliaison(partner: &HVector, input: &HVector, height: i64) -> Result<Self> {
        Ok(LiaisonStep {
            kind: LiaisonKind::Biliaison,
            output: biliaison(partner, input, height)?,
            partner: partner.clone(),
            height: Some(height),
            input: input.clone(),
        })
    }
}

fn residual_to_hvector(entries: Vec<i64>) -> Result<HVector> {
    if entries.iter().all(|v| *v == 0) {
        return Err(Error::EmptyResidual);
    }
    HVector::new(entries.clone()).map_err(|_| Error::InvalidResidual(entries))
}

/// Residual of `V1` in the AG scheme `X`: `h_V2(n) = h_X(n) - h_V1(b - n)`.
pub fn g_link(h_x: &HVector, h_v1: &HVector) -> Result<HVector> {
    if !is_g3_admissible(h_x) {
        return Err(Error::NotG3Admissible(h_x.clone()));
    }
    let b = h_x.socle_degree() as i64;
    // Indices below zero catch a V1 that extends past the socle degree of X.
    let lo = (b - h_v1.socle_degree() as i64).min(0);
    let mut out = Vec::with_capacity(b as usize + 1);
    for n in lo..=b {
        let v = h_x.get(n) - h_v1.get(b - n);
        if v < 0 || (n < 0 && v != 0) {
            return Err(Error::NegativeResidual { index: n });
        }
        if n >= 0 {
            out.push(v);
        }
    }
    residual_to_hvector(out)
}

/// Elementary biliaison of the given height on an ACM curve with h-vector
/// `h_curve`. Each ascending unit step maps `h` to `h_curve(n) + h(n - 1)`;
/// each descending step inverts that and fails if the result is negative.
pub fn biliaison(h_curve: &HVector, h_v1: &HVector, height: i64) -> Result<HVector> {
    if !is_c2_admissible(h_curve) {
        return Err(Error::NotC2Admissible(h_curve.clone()));
    }
    let mut current = h_v1.clone();
    for _ in 0..height.unsigned_abs() {
        current = if height > 0 {
            ascend(h_curve, &current)
        } else {
            descend(h_curve, &current)?
        };
    }
    Ok(current)
}

fn ascend(h_curve: &HVector, h: &HVector) -> HVector {
    let len = h_curve.socle_degree().max(h.socle_degree() + 1) as i64;
    let out = (0..=len).map(|n| h_curve.get(n) + h.get(n - 1)).collect();
    HVector::new(out).expect("sum of h-vectors starting at 1 is an h-vector")
}

fn descend(h_curve: &HVector, h: &HVector) -> Result<HVector> {
    let len = h_curve.socle_degree().max(h.socle_degree()) as i64;
    let mut out = Vec::with_capacity(len as usize);
    for n in -1..len {
        let v = h.get(n + 1) - h_curve.get(n + 1);
        if v < 0 || (n < 0 && v != 0) {
            return Err(Error::NegativeResidual { index: n });
        }
        if n >= 0 {
            out.push(v);
        }
    }
    residual_to_hvector(out)
}

/// h-vector of a divisor `Z ~ mH - K` on an ACM scheme of dimension `t` with
/// h-vector `c`, from `∂h_Z(n) = c(n) - c(m + t + 1 - n)`. For `t = 1` (curves)
/// the result is checked to be G3-admissible of socle degree `m + 1` and
/// degree `m d - 2g + 2`.
pub fn ag_from_curve(c: &HVector, m: i64, t: i64) -> Result<HVector> {
    if !is_c2_admissible(c) {
        return Err(Error::NotC2Admissible(c.clone()));
    }
    if t < 1 {
        return Err(Error::OutOfRange(format!(
            "dimension t must be >= 1, got {t}"
        )));
    }
    let top = m + t + 1;
    let bc = c.socle_degree() as i64;
    if top - bc < 1 {
        // Some n < 0 already carries -c(top - n) != 0.
        return Err(Error::NegativePartialSum { index: top - bc });
    }
    let diff: Vec<i64> = (0..=top.max(bc))
        .map(|n| c.get(n) - c.get(top - n))
        .collect();
    let h = integrate(&diff)?;
    if h.socle_degree() as i64 != m + t || !h.is_symmetric() {
        return Err(Error::NotG3Admissible(h));
    }
    if t == 1 {
        if !is_g3_admissible(&h) {
            return Err(Error::NotG3Admissible(h));
        }
        let (d, g) = curve_degree_genus(c)?;
        debug_assert_eq!(h.degree(), m * d - 2 * g + 2);
    }
    Ok(h)
}

/// All C2-admissible `c` with `∂h_Z(n) = c(n) - c(m + 2 - n)`, `m = b - 1`,
/// in lexicographic order. The search is finite: C2 bounds `c(n) <= n + 1`,
/// tails are nonincreasing, and `b(c) <= b(h_Z)`.
pub fn representing_curves(h_z: &HVector) -> Result<Vec<HVector>> {
    if !is_g3_admissible(h_z) {
        return Err(Error::NotG3Admissible(h_z.clone()));
    }
    let b = h_z.socle_degree() as i64;
    let top = b + 1; // m + 2
    let target: Vec<i64> = (0..=top).map(|n| h_z.get(n) - h_z.get(n - 1)).collect();
    let mut found = Vec::new();
    let mut prefix = vec![1i64];
    search_curves(&mut prefix, true, b, top, &target, &mut found);
    Ok(found)
}

/// Checks every constraint `c(n) - c(top - n) = target(n)` whose indices are
/// both known. With `complete` set, indices past the prefix read as zero;
/// otherwise they are unknown and their constraints are skipped.
fn constraints_hold(prefix: &[i64], top: i64, target: &[i64], complete: bool) -> bool {
    let known = prefix.len() as i64;
    let read = |n: i64| -> Option<i64> {
        if n < 0 {
            Some(0)
        } else if n < known {
            Some(prefix[n as usize])
        } else if complete {
            Some(0)
        } else {
            None
        }
    };
    (0..=top).all(|n| match (read(n), read(top - n)) {
        (Some(a), Some(z)) => a - z == target[n as usize],
        _ => true,
    })
}

fn search_curves(
    prefix: &mut Vec<i64>,
    rising: bool,
    max_b: i64,
    top: i64,
    target: &[i64],
    found: &mut Vec<HVector>,
) {
    if !constraints_hold(prefix, top, target, false) {
        return;
    }
    if constraints_hold(prefix, top, target, true) {
        found.push(HVector::new(prefix.clone()).expect("prefix is positive"));
    }
    let n = prefix.len() as i64;
    if n > max_b {
        return;
    }
    let last = *prefix.last().expect("nonempty");
    // Next entry: continue the n + 1 line while rising, else any value in
    // 1..=last (a zero would end the sequence, handled by the push above).
    let options: Vec<(i64, bool)> = if rising {
        let mut o: Vec<_> = (1..=last).map(|v| (v, false)).collect();
        o.push((n + 1, true));
        o
    } else {
        (1..=last).map(|v| (v, false)).collect()
    };
    for (v, still_rising) in options {
        prefix.push(v);
        search_curves(prefix, still_rising, max_b, top, target, found);
        prefix.pop();
    }
}

/// Whether `b >= 2 b̄ + 2`, with `b̄` the socle degree of the first half: in
/// that case the general AG scheme with h-vector `h_z` is an `mH - K` divisor
/// on an ACM curve whose h-vector is the first half.
pub fn general_mhk_predicate(h_z: &HVector) -> Result<bool> {
    if !is_g3_admissible(h_z) {
        return Err(Error::NotG3Admissible(h_z.clone()));
    }
    let b = h_z.socle_degree() as i64;
    let b_bar = first_half(h_z)?.socle_degree() as i64;
    Ok(b >= 2 * b_bar + 2)
}

/// `(2b - N + 1, 2b - N + 2)`: from the first value on `|mH - K|` contains
/// effective divisors, from the second on it is very ample.
pub fn effectivity_thresholds(c: &HVector, ambient_dim: i64) -> Result<(i64, i64)> {
    if !is_c2_admissible(c) {
        return Err(Error::NotC2Admissible(c.clone()));
    }
    let b = c.socle_degree() as i64;
    Ok((2 * b - ambient_dim + 1, 2 * b - ambient_dim + 2))
}

/// Intersection of curves of types `(a, a-1)` and `(a-1, a)` on a smooth
/// quadric: an `mH - K` divisor with `m = 2a - 3` on a curve with h-vector
/// `{1, 2, ..., 2}` of socle degree `a - 1`.
pub fn quadric_intersection_class(a: i64) -> Result<(HVector, i64)> {
    if a < 2 {
        return Err(Error::OutOfRange(format!("need a >= 2, got {a}")));
    }
    let mut c = vec![1];
    c.extend(std::iter::repeat_n(2, (a - 1) as usize));
    let c = HVector::new(c)?;
    let m = 2 * a - 3;
    let h = ag_from_curve(&c, m, 1)?;
    debug_assert_eq!(h.degree(), 2 * a * a - 2 * a + 1);
    Ok((h, m))
}

/// One link of a complete-intersection biliaison descent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub h: HVector,
    /// Degrees `(s, t)` of the CI curve used to descend; `None` at the end.
    pub ci: Option<(i64, i64)>,
}

/// One descent step `h'(n) = h(n+1) - h_{s,t}(n+1)` with `s = s(h)` and
/// `t = m + 3 - s`. Returns `(s, t, h')`.
pub fn ci_descent_step(h: &HVector) -> Result<(i64, i64, HVector)> {
    let b = h.socle_degree() as i64;
    let s = h.least_surface_degree(3);
    let t = (b - 1) + 3 - s;
    if t < s {
        return Err(Error::ChainInvalid {
            h: h.clone(),
            reason: format!("t = m + 3 - s = {t} is smaller than s = {s}"),
        });
    }
    let curve = ci_curve_hvector(s, t)?.h;
    let len = b.max(curve.socle_degree() as i64);
    let out: Vec<i64> = (0..len).map(|n| h.get(n + 1) - curve.get(n + 1)).collect();
    if let Some(n) = out.iter().position(|v| *v < 0) {
        return Err(Error::ChainInvalid {
            h: h.clone(),
            reason: format!("negative residual at n={n}"),
        });
    }
    let next = HVector::new(out).map_err(|e| Error::ChainInvalid {
        h: h.clone(),
        reason: e.to_string(),
    })?;
    if !is_g3_admissible(&next) {
        return Err(Error::ChainInvalid {
            h: h.clone(),
            reason: format!("descendant {next} is not G3-admissible"),
        });
    }
    Ok((s, t, next))
}

/// Strictly descending chain of CI biliaisons from `h_z` down to `s = 1` or
/// a single point.
pub fn ci_biliaison_chain(h_z: &HVector) -> Result<Vec<ChainLink>> {
    if !is_g3_admissible(h_z) {
        return Err(Error::NotG3Admissible(h_z.clone()));
    }
    let mut chain = Vec::new();
    let mut current = h_z.clone();
    while current.least_surface_degree(3) >= 2 && current.degree() > 1 {
        let (s, t, next) = ci_descent_step(&current)?;
        chain.push(ChainLink {
            h: current,
            ci: Some((s, t)),
        });
        current = next;
    }
    chain.push(ChainLink {
        h: current,
        ci: None,
    });
    Ok(chain)
}
