//! Dimensions of the Hilbert schemes `PGor(h)` and `ACM(h)`, the genus bound
//! `G_CM`, and the general-point budgets (`μ`, `ν̃`, `B`) attached to an AG
//! h-vector and a representing curve.
//!
//! `dim PGor(h)` descends along CI biliaisons: with `s = s(h)`,
//! `t = m + 3 - s` and `h'(n) = h(n+1) - h_{s,t}(n+1)`,
//!
//! ```text
//! dim PGor(h) = dim PGor(h') - h'(s) - h'(t) + st + 3s + 3 - ε,   ε = [t = s]
//! ```
//!
//! bottoming out at planar complete intersections. `dim ACM(h)` descends by
//! removing the entry `h(s-1)` and adding `4s + Σ_{n > s} h'(n)`.

use std::collections::HashMap;
use std::sync::RwLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hvector::{
    binomial, ci_points_hvector, curve_degree_genus, is_c2_admissible, is_decreasing_type,
    is_g3_admissible, HVector,
};
use crate::liaison::{ag_from_curve, ci_descent_step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Inductive,
    BaseCase,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecursionStep {
    pub h: HVector,
    pub s: i64,
    /// Second CI degree; only present for `PGor` steps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    pub h_prime: HVector,
    /// Amount added to `dim(h')` to obtain `dim(h)`.
    pub increment: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub h: HVector,
    pub value: i64,
    pub method: Method,
    pub chain: Vec<RecursionStep>,
    /// Value of the terminal base case.
    pub base: i64,
}

/// Planar complete intersections `(1, p, q)` with `p <= q`.
fn pgor_base_case(h: &HVector) -> Result<i64> {
    let (p, q) = if h.get(1) <= 1 {
        (1, h.degree())
    } else {
        let p = h.least_surface_degree(2);
        (p, h.socle_degree() as i64 + 2 - p)
    };
    if q < p || ci_points_hvector(1, p, q).ok().as_ref() != Some(h) {
        return Err(Error::BaseCaseParseFailure(h.clone()));
    }
    Ok(match (p, q) {
        (1, 1) => 3,
        (1, q) => q + 4,
        (p, q) if p == q => p * p + 3 * p + 1,
        (p, q) => p * q + 3 * p + 2,
    })
}

fn pgor_step(h: &HVector) -> Result<RecursionStep> {
    let (s, t, next) = ci_descent_step(h)?;
    let eps = i64::from(t == s);
    let increment = -next.get(s) - next.get(t) + s * t + 3 * s + 3 - eps;
    Ok(RecursionStep {
        h: h.clone(),
        s,
        t: Some(t),
        h_prime: next,
        increment,
    })
}

/// `dim PGor(h)` by induction on `s`, with the full recursion trace.
pub fn dim_pgor(h: &HVector) -> Result<DimensionReport> {
    if !is_g3_admissible(h) {
        return Err(Error::NotG3Admissible(h.clone()));
    }
    let mut chain = Vec::new();
    let mut current = h.clone();
    while current.least_surface_degree(3) >= 2 {
        let step = pgor_step(&current)?;
        current = step.h_prime.clone();
        chain.push(step);
    }
    let base = pgor_base_case(&current)?;
    let value = base + chain.iter().map(|s| s.increment).sum::<i64>();
    Ok(DimensionReport {
        h: h.clone(),
        value,
        method: if chain.is_empty() {
            Method::BaseCase
        } else {
            Method::Inductive
        },
        chain,
        base,
    })
}

/// Shapes of AG h-vectors that can contain `n` general points with smaller
/// residual, for `s = s(n points)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum DescentType {
    /// `{1, 3, ..., C(s+1,2), ..., 3, 1}`, socle degree `2s - 2`.
    One,
    /// `C(s+1,2)` repeated twice in the middle, socle degree `2s - 1`.
    Two,
    /// `C(s+1,2) + c` in the middle, socle degree `2s`.
    Three { c: i64 },
}

impl DescentType {
    pub fn hvector(self, s: i64) -> Result<HVector> {
        if s < 2 {
            return Err(Error::InvalidTypeParams(format!("need s >= 2, got {s}")));
        }
        let rising: Vec<i64> = (0..s).map(|n| binomial(n + 2, 2)).collect();
        let mut entries = rising.clone();
        // The peak C(s+1, 2) appears once, twice, or around a middle entry.
        let mut falling = rising.iter().rev();
        match self {
            DescentType::One => {
                falling.next();
            }
            DescentType::Two => {}
            DescentType::Three { c } => {
                if !(0..=s + 1).contains(&c) {
                    return Err(Error::InvalidTypeParams(format!(
                        "type 3 offset c={c} outside 0..={}",
                        s + 1
                    )));
                }
                entries.push(binomial(s + 1, 2) + c);
            }
        }
        entries.extend(falling);
        HVector::new(entries)
    }

    /// `4s² - 1`, `4s² + 3s - 1`, `4s² + 4s + 4c - 1`.
    pub fn closed_form(self, s: i64) -> Result<i64> {
        self.hvector(s)?;
        Ok(match self {
            DescentType::One => 4 * s * s - 1,
            DescentType::Two => 4 * s * s + 3 * s - 1,
            DescentType::Three { c } => 4 * s * s + 4 * s + 4 * c - 1,
        })
    }
}

/// Closed-form `dim PGor` for a descent type together with its h-vector.
pub fn dim_pgor_type_closed_form(ty: DescentType, s: i64) -> Result<(i64, HVector)> {
    Ok((ty.closed_form(s)?, ty.hvector(s)?))
}

fn acm_base_case(c: &HVector) -> i64 {
    // Plane curve of degree a: the plane (3) plus the curve in it.
    let a = c.degree();
    if a <= 3 {
        4 * a
    } else {
        3 + a * (a + 3) / 2
    }
}

fn acm_step(c: &HVector) -> RecursionStep {
    let s = c.least_surface_degree(2);
    let mut next = c.entries().to_vec();
    next.remove(s as usize - 1);
    let next = HVector::new(next).expect("dropping h(s-1) keeps an h-vector");
    let tail: i64 = next.entries().iter().skip(s as usize + 1).sum();
    RecursionStep {
        h: c.clone(),
        s,
        t: None,
        increment: 4 * s + tail,
        h_prime: next,
    }
}

/// `dim ACM(c)` by descending height-one biliaisons on surfaces of degree `s`.
pub fn dim_acm(c: &HVector) -> Result<DimensionReport> {
    if !is_c2_admissible(c) {
        return Err(Error::NotC2Admissible(c.clone()));
    }
    let mut chain = Vec::new();
    let mut current = c.clone();
    while current.least_surface_degree(2) >= 2 {
        let step = acm_step(&current);
        current = step.h_prime.clone();
        chain.push(step);
    }
    let base = acm_base_case(&current);
    let value = base + chain.iter().map(|s| s.increment).sum::<i64>();
    Ok(DimensionReport {
        h: c.clone(),
        value,
        method: if chain.is_empty() {
            Method::BaseCase
        } else {
            Method::Inductive
        },
        chain,
        base,
    })
}

/// `4d` when `c(n) = 0` for `n >= s + 2`.
pub fn dim_acm_closed(c: &HVector) -> Result<i64> {
    if !is_c2_admissible(c) {
        return Err(Error::NotC2Admissible(c.clone()));
    }
    let s = c.least_surface_degree(2);
    if c.socle_degree() as i64 >= s + 2 {
        return Err(Error::Inapplicable(format!(
            "{c} is nonzero at n={} >= s+2 = {}",
            c.socle_degree(),
            s + 2
        )));
    }
    Ok(4 * c.degree())
}

/// Memoizing front end for table-wide sweeps. Safe to share across threads.
#[derive(Debug, Default)]
pub struct DimensionEngine {
    pgor: RwLock<HashMap<HVector, i64>>,
    acm: RwLock<HashMap<HVector, i64>>,
}

impl DimensionEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim_pgor(&self, h: &HVector) -> Result<i64> {
        if let Some(v) = self.pgor.read().expect("poisoned").get(h) {
            return Ok(*v);
        }
        if !is_g3_admissible(h) {
            return Err(Error::NotG3Admissible(h.clone()));
        }
        let value = if h.least_surface_degree(3) >= 2 {
            let step = pgor_step(h)?;
            self.dim_pgor(&step.h_prime)? + step.increment
        } else {
            pgor_base_case(h)?
        };
        self.pgor
            .write()
            .expect("poisoned")
            .insert(h.clone(), value);
        Ok(value)
    }

    pub fn dim_acm(&self, c: &HVector) -> Result<i64> {
        if let Some(v) = self.acm.read().expect("poisoned").get(c) {
            return Ok(*v);
        }
        if !is_c2_admissible(c) {
            return Err(Error::NotC2Admissible(c.clone()));
        }
        let value = if c.least_surface_degree(2) >= 2 {
            let step = acm_step(c);
            self.dim_acm(&step.h_prime)? + step.increment
        } else {
            acm_base_case(c)
        };
        self.acm.write().expect("poisoned").insert(c.clone(), value);
        Ok(value)
    }
}

/// Maximal genus of an irreducible ACM curve of degree `d` not on a surface of
/// degree `s - 1`, valid for `d > s(s-1)`.
pub fn g_cm(d: i64, s: i64) -> Result<i64> {
    if s < 1 || d <= s * (s - 1) {
        return Err(Error::OutOfRange(format!(
            "G_CM needs d > s(s-1), got d={d}, s={s}"
        )));
    }
    let t = (d + s - 1) / s;
    let r = s * t - d;
    // 2s·G = 2s + d(s² + d - 4s) - r(s - r)(s - 1)
    let twice_s_g = 2 * s + d * (s * s + d - 4 * s) - r * (s - r) * (s - 1);
    assert!(
        twice_s_g % (2 * s) == 0,
        "G_CM({d}, {s}) is not an integer: {twice_s_g}/{}",
        2 * s
    );
    Ok(twice_s_g / (2 * s))
}

/// `m d >= G_CM(2d, s)`: the curve is then the only smooth member of its
/// family through an `mH - K` divisor, so `δ = 0`.
pub fn delta_zero_certificate(c: &HVector, m: i64) -> Result<bool> {
    if !is_decreasing_type(c)? {
        return Err(Error::PreconditionFailure(format!(
            "{c} is not of decreasing type"
        )));
    }
    let (d, _) = curve_degree_genus(c)?;
    if d < 3 {
        return Err(Error::PreconditionFailure(format!(
            "{c} has degree {d} < 3"
        )));
    }
    let s = c.least_surface_degree(2);
    Ok(m * d >= g_cm(2 * d, s)?)
}

/// The two upper bounds on `μ(h)`: `⌊dim PGor(h) / 3⌋` and
/// `h(s) + C(s+2, 3)`.
pub fn mu_upper_bounds(h: &HVector) -> Result<(i64, i64)> {
    let a = dim_pgor(h)?.value;
    let s = h.least_surface_degree(3);
    Ok((a / 3, h.get(s) + binomial(s + 2, 3)))
}

pub fn mu_upper(h: &HVector) -> Result<i64> {
    let (by_dim, by_surfaces) = mu_upper_bounds(h)?;
    Ok(by_dim.min(by_surfaces))
}

/// General points imposable on a complete intersection of hypersurfaces of
/// the given degrees in `P^N`: `C(s+N, N) - #{i : d_i = s}`.
pub fn mu_ci(degrees: &[i64], ambient_dim: i64) -> Result<i64> {
    let s = *degrees
        .iter()
        .min()
        .ok_or_else(|| Error::OutOfRange("empty degree list".into()))?;
    if s < 1 || ambient_dim < 2 {
        return Err(Error::OutOfRange(format!(
            "need positive degrees and N >= 2, got {degrees:?}, N={ambient_dim}"
        )));
    }
    let minimal = degrees.iter().filter(|d| **d == s).count() as i64;
    Ok(binomial(s + ambient_dim, ambient_dim) - minimal)
}

/// Maximum number of general points on a general curve of `ACM(c)`:
/// `min(⌊dim ACM / 2⌋, C(s+3, 3) - 1)`. Known only for `s <= 3` and `c` of
/// decreasing type; otherwise `None`.
pub fn nu_tilde(c: &HVector) -> Result<Option<i64>> {
    let s = c.least_surface_degree(2);
    if s > 3 || !is_decreasing_type(c)? {
        return Ok(None);
    }
    let half_dim = dim_acm(c)?.value / 2;
    Ok(Some(half_dim.min(binomial(s + 3, 3) - 1)))
}

/// Dimension of the family of `mH - K` divisors on curves of `ACM(c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BEstimate {
    /// `dim |mH - K| = deg - g` (nonspecial).
    pub linear_system_dim: i64,
    pub dim_acm: i64,
    pub delta: Option<i64>,
    /// `D + dim ACM - δ`, or `D + dim ACM` as an upper bound when `δ` is unknown.
    pub value: i64,
    pub is_upper: bool,
}

pub fn b_upper(c: &HVector, m: i64, delta: Option<i64>) -> Result<BEstimate> {
    let deg = ag_from_curve(c, m, 1)?.degree();
    let (_, genus) = curve_degree_genus(c)?;
    if deg < 2 * genus - 1 {
        return Err(Error::SpecialLinearSystem { degree: deg, genus });
    }
    let linear_system_dim = deg - genus;
    let dim_acm = dim_acm(c)?.value;
    Ok(BEstimate {
        linear_system_dim,
        dim_acm,
        delta,
        value: linear_system_dim + dim_acm - delta.unwrap_or(0),
        is_upper: delta.is_none(),
    })
}

/// General-point bookkeeping for an AG class `h` presented as `mH - K` on a
/// curve class `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointBudget {
    pub h: HVector,
    pub curve: HVector,
    pub mu_upper: i64,
    pub mu_lower: Option<i64>,
    pub nu_tilde: Option<i64>,
    pub lin_sys_dim: Option<i64>,
    pub b_upper: i64,
    pub delta: Option<i64>,
}

impl PointBudget {
    pub fn new(
        h: &HVector,
        curve: &HVector,
        delta: Option<i64>,
        mu_lower: Option<i64>,
    ) -> Result<Self> {
        let m = h.socle_degree() as i64 - 1;
        let b = b_upper(curve, m, delta)?;
        let mu_upper = mu_upper(h)?;
        if let Some(lo) = mu_lower {
            if lo > mu_upper {
                return Err(Error::PreconditionFailure(format!(
                    "mu lower bound {lo} exceeds upper bound {mu_upper} for {h}"
                )));
            }
        }
        Ok(PointBudget {
            h: h.clone(),
            curve: curve.clone(),
            mu_upper,
            mu_lower,
            nu_tilde: nu_tilde(curve)?,
            lin_sys_dim: Some(b.linear_system_dim),
            b_upper: b.value,
            delta,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(s: &str) -> HVector {
        s.parse().unwrap()
    }

    #[test]
    fn dim_pgor_examples() {
        assert_eq!(dim_pgor(&hv("1,3,1")).unwrap().value, 15);
        assert_eq!(dim_pgor(&hv("1,3,6,3,1")).unwrap().value, 35);
        assert_eq!(dim_pgor(&hv("1,3,6,10,6,3,1")).unwrap().value, 63);
        let point = dim_pgor(&hv("1")).unwrap();
        assert_eq!((point.value, point.method), (3, Method::BaseCase));
        assert!(matches!(
            dim_pgor(&hv("1,3,2")),
            Err(Error::NotG3Admissible(_))
        ));
    }

    #[test]
    fn dim_pgor_trace() {
        let r = dim_pgor(&hv("1,3,3,1")).unwrap();
        assert_eq!(r.method, Method::Inductive);
        assert_eq!(r.chain.len(), 1);
        assert_eq!((r.chain[0].s, r.chain[0].t), (2, Some(3)));
        assert_eq!(r.chain[0].h_prime, hv("1,1"));
        assert_eq!(r.base, 6);
        assert_eq!(r.value, 21);
    }

    #[test]
    fn base_cases() {
        assert_eq!(pgor_base_case(&hv("1")), Ok(3));
        assert_eq!(pgor_base_case(&hv("1,1,1,1")), Ok(8));
        assert_eq!(pgor_base_case(&hv("1,2,1")), Ok(11));
        assert_eq!(pgor_base_case(&hv("1,2,2,1")), Ok(2 * 3 + 6 + 2));
        assert!(matches!(
            pgor_base_case(&hv("1,2,2")),
            Err(Error::BaseCaseParseFailure(_))
        ));
    }

    #[test]
    fn type_closed_forms() {
        assert_eq!(
            dim_pgor_type_closed_form(DescentType::One, 2).unwrap(),
            (15, hv("1,3,1"))
        );
        assert_eq!(
            dim_pgor_type_closed_form(DescentType::Two, 2).unwrap(),
            (21, hv("1,3,3,1"))
        );
        assert_eq!(
            dim_pgor_type_closed_form(DescentType::Three { c: 3 }, 2).unwrap(),
            (35, hv("1,3,6,3,1"))
        );
        assert!(DescentType::Three { c: 4 }.closed_form(2).is_err());
        assert!(DescentType::One.closed_form(1).is_err());
    }

    #[test]
    fn dim_acm_examples() {
        assert_eq!(dim_acm(&hv("1,2")).unwrap().value, 12);
        assert_eq!(dim_acm(&hv("1,2,3")).unwrap().value, 24);
        assert_eq!(dim_acm(&hv("1,2,1")).unwrap().value, 16);
        assert_eq!(dim_acm(&hv("1")).unwrap().value, 4);
        assert_eq!(dim_acm(&hv("1,2,3,4")).unwrap().value, 40);
        // Plane quartics: 3 + 14.
        assert_eq!(dim_acm(&hv("1,1,1,1")).unwrap().value, 17);
    }

    #[test]
    fn dim_acm_closed_examples() {
        assert_eq!(dim_acm_closed(&hv("1,2,2")), Ok(20));
        assert_eq!(dim_acm_closed(&hv("1")), Ok(4));
        assert_eq!(dim_acm_closed(&hv("1,2,3,4")), Ok(40));
        assert!(matches!(
            dim_acm_closed(&hv("1,1,1,1")),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn g_cm_examples() {
        assert_eq!(g_cm(12, 3), Ok(19));
        assert_eq!(g_cm(14, 3), Ok(26));
        assert_eq!(g_cm(6, 2), Ok(4));
        assert!(matches!(g_cm(6, 3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn certificate_examples() {
        assert_eq!(delta_zero_certificate(&hv("1,2,2,2"), 5), Ok(false));
        assert_eq!(delta_zero_certificate(&hv("1,2,3"), 3), Ok(false));
        assert_eq!(delta_zero_certificate(&hv("1,2"), 5), Ok(true));
        assert!(matches!(
            delta_zero_certificate(&hv("1,2,1,1"), 5),
            Err(Error::PreconditionFailure(_))
        ));
        assert!(matches!(
            delta_zero_certificate(&hv("1,1"), 5),
            Err(Error::PreconditionFailure(_))
        ));
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_upper(&hv("1,3,6,3,1")), Ok(11));
        assert_eq!(mu_upper(&hv("1,3,1")), Ok(5));
        // s = 4 here: h(3) = 10 = C(5,2) is maximal.
        assert_eq!(mu_upper_bounds(&hv("1,3,6,10,6,3,1")), Ok((21, 26)));
        assert_eq!(mu_upper(&hv("1,3,6,10,6,3,1")), Ok(21));
        assert_eq!(mu_ci(&[2, 2, 2], 3), Ok(7));
        assert_eq!(mu_ci(&[1, 1, 1], 3), Ok(1));
        assert_eq!(mu_ci(&[2, 2, 3], 3), Ok(8));
        assert!(mu_ci(&[], 3).is_err());
    }

    #[test]
    fn nu_tilde_examples() {
        assert_eq!(nu_tilde(&hv("1,2,3")), Ok(Some(12)));
        assert_eq!(nu_tilde(&hv("1,2")), Ok(Some(6)));
        assert_eq!(nu_tilde(&hv("1,2,1")), Ok(Some(8)));
        assert_eq!(nu_tilde(&hv("1,2,3,4")), Ok(None));
        assert_eq!(nu_tilde(&hv("1,2,1,1")), Ok(None));
    }

    #[test]
    fn b_examples() {
        let b = b_upper(&hv("1,2,3"), 3, Some(0)).unwrap();
        assert_eq!(
            (b.linear_system_dim, b.dim_acm, b.value, b.is_upper),
            (11, 24, 35, false)
        );
        let b = b_upper(&hv("1,2,3,4"), 5, None).unwrap();
        assert_eq!((b.value, b.is_upper), (59, true));
        let b = b_upper(&hv("1,2,1,1"), 5, Some(1)).unwrap();
        assert_eq!(b.value, 37);
        // H - K on a genus-3 sextic has degree 6 - 6 + 2 = 2 < 5.
        assert!(b_upper(&hv("1,2,3"), 1, None).is_err());
    }

    #[test]
    fn point_budget() {
        let p = PointBudget::new(&hv("1,3,6,3,1"), &hv("1,2,3"), Some(0), Some(11)).unwrap();
        assert_eq!((p.mu_upper, p.nu_tilde, p.b_upper), (11, Some(12), 35));
        assert!(PointBudget::new(&hv("1,3,6,3,1"), &hv("1,2,3"), Some(0), Some(12)).is_err());
    }

    #[test]
    fn engine_matches_free_functions() {
        let engine = DimensionEngine::new();
        for s in ["1,3,1", "1,3,6,10,6,3,1", "1,3,5,6,6,5,3,1", "1"] {
            let h = hv(s);
            assert_eq!(engine.dim_pgor(&h).unwrap(), dim_pgor(&h).unwrap().value);
            assert_eq!(engine.dim_pgor(&h).unwrap(), dim_pgor(&h).unwrap().value);
        }
        for s in ["1,2,3,4", "1,2,1,1", "1,1,1,1,1"] {
            let c = hv(s);
            assert_eq!(engine.dim_acm(&c).unwrap(), dim_acm(&c).unwrap().value);
        }
    }
}
