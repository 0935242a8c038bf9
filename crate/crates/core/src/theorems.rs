//! Descent tests for sets of general points in P^3.
//!
//! A verdict of `ruled_out` is a proof that no strictly descending move of
//! the given kind exists. A verdict with witnesses only says that the
//! necessary dimension count does not exclude one.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::dimension::{b_upper, dim_acm_closed, dim_pgor, mu_upper, DescentType};
use crate::error::{Error, Result};
use crate::hvector::{
    binomial, curve_degree_genus, general_points_hvector, is_g3_admissible, HVector,
};
use crate::liaison::{g_link, representing_curves};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Simple,
    Refined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessKind {
    /// AG scheme of the given descent type containing the points.
    Gorenstein { ty: DescentType },
    /// ACM curve `{1, 2, ..., s, a}` carrying the biliaison.
    Curve { a: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(flatten)]
    pub kind: WitnessKind,
    pub h: HVector,
    /// Dimension of the parameter space of the container.
    pub dim: i64,
    /// `3n` for AG schemes, `2n` for curves.
    pub bound: i64,
    /// Whether the Hilbert function of the points lies below that of the
    /// container. Informational; it never changes a verdict.
    pub containment_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentVerdict {
    pub n: i64,
    pub s: i64,
    pub a: i64,
    pub ruled_out: bool,
    pub witnesses: Vec<Witness>,
    /// Witnesses removed by the genus obstruction in refined mode.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub eliminated: Vec<Witness>,
    pub method: Method,
}

/// Hilbert function of a scheme of dimension `dim` with h-vector `h`.
fn hilbert_function(h: &HVector, dim: usize, len: usize) -> Vec<i64> {
    let mut values: Vec<i64> = (0..len as i64).map(|n| h.get(n)).collect();
    for _ in 0..=dim {
        values = values
            .iter()
            .scan(0, |acc, v| {
                *acc += v;
                Some(*acc)
            })
            .collect();
    }
    values
}

/// `H_points <= H_container` in every degree up to past both socles.
fn hilbert_below(points: &HVector, container: &HVector, container_dim: usize) -> bool {
    let len = points.socle_degree().max(container.socle_degree()) + 2;
    hilbert_function(points, 0, len)
        .iter()
        .zip(hilbert_function(container, container_dim, len))
        .all(|(l, u)| *l <= u)
}

fn general_points_invariants(n: i64) -> Result<(HVector, i64, i64)> {
    let h = general_points_hvector(n)?;
    let s = h.least_surface_degree(3);
    let a = h.get(s);
    debug_assert_eq!(a, n - binomial(s + 2, 3));
    debug_assert!((0..binomial(s + 2, 2)).contains(&a));
    Ok((h, s, a))
}

/// Dimension count for AG schemes `Z` containing `n` general points whose
/// residual has degree below `n`: `Z` must be of type 1, 2 or 3 and
/// `dim PGor(h_Z) >= 3n`.
pub fn verify_no_descending_liaison(n: i64) -> Result<DescentVerdict> {
    let (h_w, s, a) = general_points_invariants(n)?;
    let mut candidates = Vec::new();
    if s >= 2 {
        candidates.push(DescentType::One);
        if a > 0 {
            candidates.push(DescentType::Two);
        }
        for c in 0..=s + 1 {
            if 2 * a > binomial(s + 1, 2) + c {
                candidates.push(DescentType::Three { c });
            }
        }
    }
    let mut witnesses = Vec::new();
    for ty in candidates {
        let h = ty.hvector(s)?;
        let dim = ty.closed_form(s)?;
        assert_eq!(dim, dim_pgor(&h)?.value, "closed form disagrees for {h}");
        if dim >= 3 * n {
            witnesses.push(Witness {
                kind: WitnessKind::Gorenstein { ty },
                containment_ok: hilbert_below(&h_w, &h, 0),
                h,
                dim,
                bound: 3 * n,
            });
        }
    }
    Ok(DescentVerdict {
        n,
        s,
        a,
        ruled_out: witnesses.is_empty(),
        witnesses,
        eliminated: Vec::new(),
        method: Method::Simple,
    })
}

/// Dimension count for a descending elementary biliaison `Z ~ W + H` on an
/// ACM curve: the curve is `{1, 2, ..., s, a}` with `a <= min(s+1, h_Z(s))`
/// and needs `4d >= 2n`. In refined mode a curve with `2d = n` is also
/// excluded when `n - d < g`, since `Z - H` is then a general divisor of
/// degree below the genus and cannot be effective.
pub fn verify_no_descending_biliaison(n: i64, refined: bool) -> Result<DescentVerdict> {
    let (h_z, s, b) = general_points_invariants(n)?;
    let mut witnesses = Vec::new();
    let mut eliminated = Vec::new();
    for a in 0..=b.min(s + 1) {
        let mut entries: Vec<i64> = (1..=s).collect();
        entries.push(a);
        let h = HVector::new(entries)?;
        let (d, genus) = curve_degree_genus(&h)?;
        debug_assert_eq!(d, s * (s + 1) / 2 + a);
        let dim = dim_acm_closed(&h)?;
        if dim < 2 * n {
            continue;
        }
        let w = Witness {
            kind: WitnessKind::Curve { a },
            containment_ok: hilbert_below(&h_z, &h, 1),
            h,
            dim,
            bound: 2 * n,
        };
        if refined && 2 * d == n && n - d < genus {
            eliminated.push(w);
        } else {
            witnesses.push(w);
        }
    }
    Ok(DescentVerdict {
        n,
        s,
        a: b,
        ruled_out: witnesses.is_empty(),
        witnesses,
        eliminated,
        method: if refined {
            Method::Refined
        } else {
            Method::Simple
        },
    })
}

/// Liaison verdicts for `n >= 35` agree with published results; smaller `n`
/// are engine outputs only.
pub fn liaison_verdict_is_established(v: &DescentVerdict) -> bool {
    v.n >= 35
}

/// Biliaison verdicts for `n >= 31` agree with published results. A verdict
/// that rests on the genus obstruction is established only at `n = 20`.
pub fn biliaison_verdict_is_established(v: &DescentVerdict) -> bool {
    if v.eliminated.is_empty() {
        v.n >= 31
    } else {
        v.n == 20
    }
}

/// An AG class together with a guaranteed number of general points that a
/// general member contains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlicciPartner {
    pub h: HVector,
    pub mu_lower: i64,
}

impl GlicciPartner {
    pub fn degree(&self) -> i64 {
        self.h.degree()
    }

    fn validate(&self) -> Result<()> {
        if !is_g3_admissible(&self.h) {
            return Err(Error::NotG3Admissible(self.h.clone()));
        }
        let upper = mu_upper(&self.h)?;
        if self.mu_lower < 1 || self.mu_lower > upper {
            return Err(Error::DataConflict {
                h: self.h.to_string(),
                detail: format!("mu_lower {} outside 1..={upper}", self.mu_lower),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartnerFile {
    partners: Vec<GlicciPartner>,
}

const DEFAULT_PARTNERS: &str = include_str!("../data/glicci_partners.json");

/// Parses and validates a partner catalog in JSON form.
pub fn parse_partner_catalog(json: &str) -> Result<Vec<GlicciPartner>> {
    let file: PartnerFile =
        serde_json::from_str(json).map_err(|e| Error::Data(format!("partner catalog: {e}")))?;
    for p in &file.partners {
        p.validate()?;
    }
    Ok(file.partners)
}

/// The shipped partner catalog.
pub fn default_partner_catalog() -> &'static [GlicciPartner] {
    static CATALOG: OnceLock<Vec<GlicciPartner>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        parse_partner_catalog(DEFAULT_PARTNERS).expect("shipped partner catalog is valid")
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlicciStep {
    pub n: i64,
    pub partner: HVector,
    pub degree: i64,
    pub mu_lower: i64,
    pub residual: i64,
    pub residual_h: HVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlicciChain {
    pub n: i64,
    pub steps: Vec<GlicciStep>,
    /// 1 or 2.
    pub terminal: i64,
}

/// Descends from `n` general points by linking inside partners with
/// `d/2 < n <= mu_lower` and `n < d`, smallest `d` first, until one or two
/// points remain. Every residual is checked to be general points again.
pub fn glicci_descent(n: i64, catalog: &[GlicciPartner]) -> Result<GlicciChain> {
    if n < 1 {
        return Err(Error::OutOfRange(format!(
            "number of points must be >= 1, got {n}"
        )));
    }
    let mut partners: Vec<&GlicciPartner> = catalog.iter().collect();
    partners.sort_by(|p, q| (p.degree(), &p.h).cmp(&(q.degree(), &q.h)));
    let mut steps = Vec::new();
    let mut current = n;
    while current > 2 {
        let partner = partners
            .iter()
            .find(|p| {
                let d = p.degree();
                d < 2 * current && current <= p.mu_lower && current < d
            })
            .ok_or(Error::NoPartnerAvailable { n: current })?;
        let d = partner.degree();
        let residual_h = g_link(&partner.h, &general_points_hvector(current)?)?;
        let residual = d - current;
        if residual_h != general_points_hvector(residual)? {
            return Err(Error::ChainInvalid {
                h: partner.h.clone(),
                reason: format!("residual {residual_h} of {current} points is not general"),
            });
        }
        steps.push(GlicciStep {
            n: current,
            partner: partner.h.clone(),
            degree: d,
            mu_lower: partner.mu_lower,
            residual,
            residual_h,
        });
        current = residual;
    }
    Ok(GlicciChain {
        n,
        steps,
        terminal: current,
    })
}

/// True when no curve class can present a general member of `PGor(h)` as an
/// `mH - K` divisor: every candidate has `D + dim ACM < dim PGor(h)`, with
/// `δ = 0` as the upper bound. A candidate with a special linear system makes
/// the test inconclusive, and it returns false.
pub fn prop30_check(h: &HVector) -> Result<bool> {
    let a = dim_pgor(h)?.value;
    let m = h.socle_degree() as i64 - 1;
    for c in representing_curves(h)? {
        match b_upper(&c, m, None) {
            Ok(b) if b.value < a => {}
            Ok(_) | Err(Error::SpecialLinearSystem { .. }) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}
