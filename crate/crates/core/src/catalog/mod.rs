//! Enumeration of AG zero-scheme h-vectors in P^3 and the catalog of their
//! dimensions, representing curves and general-point budgets.

mod render;
mod table_data;

use std::collections::BTreeSet;

use serde::Serialize;

pub use render::{render_csv, render_json, render_markdown, CSV_HEADER};
pub use table_data::{BValue, MhkStatus, RowData, TableData, DATA_ENV, FOOTNOTE_LETTERS};

use crate::dimension::{delta_zero_certificate, dim_acm, dim_pgor, mu_ci, mu_upper, nu_tilde};
use crate::error::{Error, Result};
use crate::hvector::{
    ci_curve_hvector, ci_points_type, curve_degree_genus, is_decreasing_type, is_g3_admissible,
    symmetrize, HVector,
};
use crate::liaison::{ag_from_curve, general_mhk_predicate, representing_curves};

/// Lower bound on the degree of any symmetric h-vector of socle degree `b`
/// extending the first-half prefix `h[..len]`.
fn degree_lower_bound(prefix_h: &[i64], b: usize) -> i64 {
    let len = prefix_h.len();
    let mut total = 0;
    for (i, v) in prefix_h.iter().enumerate() {
        total += if i < b - i { 2 * v } else { *v };
    }
    let middle = (b + 1).saturating_sub(2 * len) as i64;
    total + middle * prefix_h[len - 1]
}

fn extend_first_half(
    k: &mut Vec<i64>,
    h: &mut Vec<i64>,
    b: usize,
    dmax: i64,
    out: &mut BTreeSet<(i64, HVector)>,
) -> Result<()> {
    if degree_lower_bound(h, b) > dmax {
        return Ok(());
    }
    let n = k.len();
    if n == b / 2 + 1 {
        let sym = symmetrize(&HVector::new(k.clone())?, b)?;
        if sym.degree() <= dmax && sym.socle_degree() == b {
            debug_assert!(is_g3_admissible(&sym));
            out.insert((sym.degree(), sym));
        }
        return Ok(());
    }
    let rising = k.iter().enumerate().all(|(i, v)| *v == i as i64 + 1);
    let top = if rising { n as i64 + 1 } else { k[n - 1] };
    for next in 0..=top {
        k.push(next);
        h.push(h[n - 1] + next);
        extend_first_half(k, h, b, dmax, out)?;
        k.pop();
        h.pop();
    }
    Ok(())
}

/// All G3-admissible h-vectors of degree at most `dmax`, sorted by degree
/// and then lexicographically. With `nondegenerate`, only `h(1) = 3`.
pub fn enumerate_ag(dmax: i64, nondegenerate: bool) -> Result<Vec<HVector>> {
    if dmax < 1 {
        return Err(Error::OutOfRange(format!(
            "max degree must be >= 1, got {dmax}"
        )));
    }
    let mut out = BTreeSet::new();
    // Every entry up to the socle degree is positive, so b < dmax.
    for b in 0..dmax as usize {
        extend_first_half(&mut vec![1], &mut vec![1], b, dmax, &mut out)?;
    }
    Ok(out
        .into_iter()
        .map(|(_, h)| h)
        .filter(|h| !nondegenerate || h.get(1) == 3)
        .collect())
}

/// How `B` was obtained for a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BRule {
    /// `h` and the curve are complete intersections sharing two degrees.
    CompleteIntersection,
    /// `m >= 2 b̃ + 1`: the general AG scheme is `mH - K` on such a curve.
    LargeTwist,
    /// `D + dim ACM - δ` with `δ` known.
    Formula,
    /// `min(D + dim ACM, A)` with `δ` unknown.
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Range {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Range {
    pub fn exact(v: i64) -> Self {
        Range {
            lo: Some(v),
            hi: Some(v),
        }
    }

    pub fn unknown() -> Self {
        Range { lo: None, hi: None }
    }

    pub fn exact_value(self) -> Option<i64> {
        match (self.lo, self.hi) {
            (Some(l), Some(h)) if l == h => Some(l),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveEntry {
    pub h: HVector,
    pub degree: i64,
    pub genus: i64,
    /// `D = dim |mH - K| = deg Z - g̃`.
    pub linear_system_dim: i64,
    pub dim_acm: i64,
    pub delta: Option<i64>,
    pub delta_certified: bool,
    #[serde(rename = "B")]
    pub b: BValue,
    pub b_rule: BRule,
    pub status: MhkStatus,
    pub nu_tilde: Option<i64>,
    pub mu_tilde: Range,
    /// Columns that were taken from the data file rather than computed.
    pub from_data: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogRow {
    pub d: i64,
    pub h: HVector,
    #[serde(rename = "A")]
    pub a: i64,
    pub m: i64,
    pub ci: Option<(i64, i64, i64)>,
    pub curves: Vec<CurveEntry>,
    pub mu: Range,
    pub footnotes: Vec<String>,
    /// Representing curves on which `mH - K` is special, so `B` is not
    /// available.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub special_curves: Vec<HVector>,
}

fn conflict(h: &HVector, detail: String) -> Error {
    Error::DataConflict {
        h: h.to_string(),
        detail,
    }
}

fn check_eq(h: &HVector, what: &str, computed: i64, data: Option<i64>) -> Result<()> {
    match data {
        Some(v) if v != computed => Err(conflict(
            h,
            format!("{what}: computed {computed}, data {v}"),
        )),
        _ => Ok(()),
    }
}

fn is_ci_pair(curve: &HVector, degrees: (i64, i64, i64)) -> bool {
    let (x, y, z) = degrees;
    [(x, y), (x, z), (y, z)].into_iter().any(|(s, t)| {
        ci_curve_hvector(s, t)
            .map(|c| &c.h == curve)
            .unwrap_or(false)
    })
}

fn certified_delta_zero(c: &HVector, m: i64) -> Result<bool> {
    let (d, _) = curve_degree_genus(c)?;
    if d < 3 || !is_decreasing_type(c)? {
        return Ok(false);
    }
    delta_zero_certificate(c, m)
}

fn build_curve(
    h: &HVector,
    a: i64,
    m: i64,
    ci: Option<(i64, i64, i64)>,
    c: &HVector,
    data: Option<&RowData>,
) -> Result<CurveEntry> {
    let mut from_data = Vec::new();
    if &ag_from_curve(c, m, 1)? != h {
        return Err(conflict(h, format!("{c} with m={m} does not give {h}")));
    }
    let (degree, genus) = curve_degree_genus(c)?;
    if let Some(&(dd, gg)) = data.and_then(|r| r.dg.get(c)) {
        if (dd, gg) != (degree, genus) {
            return Err(conflict(
                h,
                format!("{c}: computed (d,g)=({degree},{genus}), data ({dd},{gg})"),
            ));
        }
    }
    let deg_z = h.degree();
    if deg_z < 2 * genus - 1 {
        return Err(Error::SpecialLinearSystem {
            degree: deg_z,
            genus,
        });
    }
    let linear_system_dim = deg_z - genus;
    let dim_acm = dim_acm(c)?.value;
    let raw = linear_system_dim + dim_acm;

    let data_delta = data.and_then(|r| r.delta.get(c)).copied();
    let delta_certified = certified_delta_zero(c, m)?;
    let delta = if delta_certified {
        if let Some(v) = data_delta.filter(|v| *v != 0) {
            return Err(conflict(h, format!("{c}: delta is certified 0, data {v}")));
        }
        Some(0)
    } else {
        if data_delta.is_some() {
            from_data.push("delta");
        }
        data_delta
    };

    let rule_ci = ci.is_some_and(|t| is_ci_pair(c, t));
    let rule_large = m > 2 * c.socle_degree() as i64;
    let (b, b_rule) = if rule_ci || rule_large {
        if raw < a {
            return Err(conflict(h, format!("{c}: D + dim ACM = {raw} < A = {a}")));
        }
        let rule = if rule_ci {
            BRule::CompleteIntersection
        } else {
            BRule::LargeTwist
        };
        (BValue::Exact(a), rule)
    } else if let Some(delta) = delta {
        (BValue::Exact(raw - delta), BRule::Formula)
    } else {
        (BValue::AtMost(raw.min(a)), BRule::UpperBound)
    };
    if b.value() > a {
        return Err(conflict(
            h,
            format!("{c}: B = {} exceeds A = {a}", b.value()),
        ));
    }
    if let Some(v) = data.and_then(|r| r.b.get(c)) {
        if *v != b {
            return Err(conflict(h, format!("{c}: computed B {b}, data {v}")));
        }
    }

    // An upper bound below A already rules the curve out, but the data may
    // still leave it open.
    let (status, allowed): (MhkStatus, &[MhkStatus]) = match b {
        BValue::Exact(v) if v == a => (MhkStatus::Yes, &[MhkStatus::Yes]),
        BValue::Exact(_) => (MhkStatus::No, &[MhkStatus::No]),
        BValue::AtMost(v) if v >= a => (MhkStatus::Unknown, &[MhkStatus::Unknown]),
        BValue::AtMost(_) => (MhkStatus::No, &[MhkStatus::No, MhkStatus::Unknown]),
    };
    let status = match data.and_then(|r| r.mhk_status.get(c)) {
        Some(s) if allowed.contains(s) => *s,
        Some(s) => {
            return Err(conflict(
                h,
                format!("{c}: computed status {status}, data {s}"),
            ));
        }
        None => status,
    };

    let data_nu = data.and_then(|r| r.nu_tilde.get(c)).copied();
    let nu = match nu_tilde(c)? {
        Some(v) => {
            check_eq(h, &format!("nu_tilde of {c}"), v, data_nu)?;
            Some(v)
        }
        None => {
            if data_nu.is_some() {
                from_data.push("nu_tilde");
            }
            data_nu
        }
    };

    let data_mu = data.and_then(|r| r.mu_tilde.get(c)).copied();
    let mu_tilde = match nu {
        // Through ν̃ general points on the curve there is still a divisor in |mH - K|.
        Some(v) if linear_system_dim >= v => {
            if let Some((lo, hi)) = data_mu {
                check_eq(h, &format!("mu_tilde lower bound of {c}"), v, lo)?;
                check_eq(h, &format!("mu_tilde upper bound of {c}"), v, hi)?;
            }
            Range::exact(v)
        }
        _ => match data_mu {
            Some((lo, hi)) => {
                from_data.push("mu_tilde");
                Range { lo, hi }
            }
            None => Range::unknown(),
        },
    };
    if let (Some(hi), Some(nu)) = (mu_tilde.hi.or(mu_tilde.lo), nu) {
        if hi > nu {
            return Err(conflict(
                h,
                format!("{c}: mu_tilde {hi} exceeds nu_tilde {nu}"),
            ));
        }
    }

    Ok(CurveEntry {
        h: c.clone(),
        degree,
        genus,
        linear_system_dim,
        dim_acm,
        delta,
        delta_certified,
        b,
        b_rule,
        status,
        nu_tilde: nu,
        mu_tilde,
        from_data,
    })
}

/// Catalog row for one AG h-vector. Without data every representing curve
/// is listed and only computable columns are filled.
pub fn build_row(h: &HVector, data: Option<&RowData>) -> Result<CatalogRow> {
    let a = dim_pgor(h)?.value;
    let m = h.socle_degree() as i64 - 1;
    check_eq(h, "A", a, data.and_then(|r| r.a))?;
    check_eq(h, "m", m, data.and_then(|r| r.m))?;
    let ci = ci_points_type(h);

    let all = representing_curves(h)?;
    let listed: Vec<HVector> = match data {
        Some(r) => {
            if let Some(c) = r.mhk_status.keys().find(|c| !all.contains(c)) {
                return Err(conflict(h, format!("{c} is not a representing curve")));
            }
            r.mhk_status.keys().cloned().collect()
        }
        None => all,
    };
    let mut curves = Vec::new();
    let mut special_curves = Vec::new();
    for c in &listed {
        match build_curve(h, a, m, ci, c, data) {
            Ok(entry) => curves.push(entry),
            // Only reachable for unlisted rows; listed curves must be nonspecial.
            Err(Error::SpecialLinearSystem { .. }) if data.is_none() => {
                special_curves.push(c.clone())
            }
            Err(e) => return Err(e),
        }
    }

    // μ̃ of any curve is a lower bound; the upper bound is exact for complete
    // intersections and equals μ̃ when the curve family dominates PGor(h).
    let lo = curves.iter().filter_map(|c| c.mu_tilde.lo).max();
    let dominating = curves
        .iter()
        .find(|c| c.status == MhkStatus::Yes)
        .and_then(|c| c.mu_tilde.exact_value());
    let hi = match (ci, dominating) {
        (Some((x, y, z)), _) => mu_ci(&[x, y, z], 3)?,
        (None, Some(v)) => v,
        (None, None) => mu_upper(h)?,
    };
    let mu_bound = mu_upper(h)?;
    if hi > mu_bound {
        return Err(conflict(
            h,
            format!("mu = {hi} exceeds the upper bound {mu_bound}"),
        ));
    }
    if let Some(l) = lo.filter(|l| *l > hi) {
        return Err(conflict(
            h,
            format!("mu lower bound {l} exceeds upper bound {hi}"),
        ));
    }
    let mu = Range { lo, hi: Some(hi) };
    check_eq(h, "mu upper bound", hi, data.and_then(|r| r.mu_hi))?;
    if let Some(dl) = data.and_then(|r| r.mu_lo) {
        match lo {
            Some(l) if l == dl => {}
            _ => {
                return Err(conflict(
                    h,
                    format!("mu lower bound: computed {lo:?}, data {dl}"),
                ));
            }
        }
    }

    let footnotes = data.map(|r| r.footnotes.clone()).unwrap_or_default();
    if footnotes.iter().any(|f| f == "d") && !general_mhk_predicate(h)? {
        return Err(conflict(
            h,
            "footnote d but the general mH - K criterion fails".into(),
        ));
    }
    if footnotes.iter().any(|f| f == "e") && ci.is_none() {
        return Err(conflict(
            h,
            "footnote e but h is not a complete intersection".into(),
        ));
    }

    Ok(CatalogRow {
        d: h.degree(),
        h: h.clone(),
        a,
        m,
        ci,
        curves,
        mu,
        footnotes,
        special_curves,
    })
}

/// Catalog of nondegenerate AG zero-schemes of degree at most `dmax`.
pub fn build_table(dmax: i64, data: &TableData) -> Result<Vec<CatalogRow>> {
    let hs = enumerate_ag(dmax, true)?;
    for row in &data.rows {
        if row.h.degree() <= dmax && !hs.contains(&row.h) {
            return Err(conflict(&row.h, "not a nondegenerate AG h-vector".into()));
        }
    }
    hs.iter().map(|h| build_row(h, data.row(h))).collect()
}
