//! h-vectors and their admissibility predicates.
//!
//! An [`HVector`] is stored densely from index 0 with trailing zeros trimmed.
//! Every accessor treats indices outside the support (negative ones included)
//! as zero, so the liaison formulas can index freely.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
///
/// Panics on `i64` overflow.
pub fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc
            .checked_mul(n - i)
            .unwrap_or_else(|| panic!("binomial({n}, {k}) overflows i64"))
            / (i + 1);
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HVector(Vec<i64>);

impl HVector {
    /// Validates and canonicalizes a sequence: trailing zeros are dropped,
    /// the first entry must be 1 and every entry up to the socle degree must
    /// be positive.
    pub fn new(mut entries: Vec<i64>) -> Result<Self> {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, v)| **v < 0) {
            return Err(Error::NegativeEntry { index, value });
        }
        if entries[0] != 1 {
            return Err(Error::BadLeadingEntry(entries[0]));
        }
        if let Some(index) = entries.iter().position(|v| *v == 0) {
            return Err(Error::InteriorZero { index });
        }
        Ok(HVector(entries))
    }

    /// The h-vector `{1}` of a single reduced point (or a linear space).
    pub fn point() -> Self {
        HVector(vec![1])
    }

    /// Entry `h(n)`; zero for `n < 0` or `n > b`.
    pub fn get(&self, n: i64) -> i64 {
        if n < 0 {
            return 0;
        }
        self.0.get(n as usize).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Largest `n` with `h(n) > 0`.
    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Least `n > 0` with `h(n) < C(n + c - 1, c - 1)`, i.e. the least degree
    /// of a hypersurface containing a codimension-`c` ACM scheme with this
    /// h-vector. Use `c = 3` for zero-schemes in P^3 and `c = 2` for curves.
    pub fn least_surface_degree(&self, codim: i64) -> i64 {
        (1..)
            .find(|&n| self.get(n) < binomial(n + codim - 1, codim - 1))
            .expect("finite support")
    }

    pub fn is_symmetric(&self) -> bool {
        let b = self.0.len();
        (0..b / 2).all(|n| self.0[n] == self.0[b - 1 - n])
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for HVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        if s.is_empty() {
            return Err(parse_err(
                "expected comma-separated integers like 1,3,6,3,1".into(),
            ));
        }
        let entries = s
            .split(',')
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| parse_err(format!("{tok:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        HVector::new(entries).map_err(|e| parse_err(e.to_string()))
    }
}

impl TryFrom<Vec<i64>> for HVector {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        HVector::new(entries)
    }
}

impl Serialize for HVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `∂h(n) = h(n) - h(n-1)` for `0 <= n <= b + 1`.
pub fn difference(h: &HVector) -> Vec<i64> {
    (0..=h.socle_degree() as i64 + 1)
        .map(|n| h.get(n) - h.get(n - 1))
        .collect()
}

/// Inverse of [`difference`]: prefix sums, which must stay nonnegative and
/// end at zero.
pub fn integrate(diff: &[i64]) -> Result<HVector> {
    let mut acc = 0;
    let mut out = Vec::with_capacity(diff.len());
    for (index, d) in diff.iter().enumerate() {
        acc += d;
        if acc < 0 {
            return Err(Error::NegativePartialSum {
                index: index as i64,
            });
        }
        out.push(acc);
    }
    if acc != 0 {
        return Err(Error::NonTerminating { total: acc });
    }
    HVector::new(out)
}

/// Why a sequence fails C2- or G3-admissibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `h(n)` exceeds the codimension-2 maximum `n + 1`.
    AboveMaximum {
        index: usize,
        value: i64,
    },
    /// Increase after the sequence has left the `n + 1` line.
    Increase {
        index: usize,
    },
    NotSymmetric {
        index: usize,
    },
    NegativeFirstHalf {
        index: usize,
    },
    FirstHalf(Box<Violation>),
    FirstHalfGap {
        index: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AboveMaximum { index, value } => {
                write!(f, "h({index})={value} exceeds {}", index + 1)
            }
            Violation::Increase { index } => {
                write!(
                    f,
                    "h increases at n={index} after leaving the line h(n)=n+1"
                )
            }
            Violation::NotSymmetric { index } => write!(f, "not symmetric at n={index}"),
            Violation::NegativeFirstHalf { index } => {
                write!(f, "first half has negative entry at n={index}")
            }
            Violation::FirstHalf(inner) => write!(f, "first half is not C2-admissible: {inner}"),
            Violation::FirstHalfGap { index } => {
                write!(f, "first half vanishes at n={index} and then recovers")
            }
        }
    }
}

pub fn c2_violation(h: &HVector) -> Option<Violation> {
    let e = h.entries();
    let s = e
        .iter()
        .enumerate()
        .position(|(n, v)| *v != n as i64 + 1)
        .unwrap_or(e.len());
    if s < e.len() && e[s] > s as i64 + 1 {
        return Some(Violation::AboveMaximum {
            index: s,
            value: e[s],
        });
    }
    // Nonincreasing from s - 1 on; s >= 1 since h(0) = 1.
    (s..e.len())
        .find(|&n| e[n] > e[n - 1])
        .map(|index| Violation::Increase { index })
}

/// Codimension-2 admissibility: `h(n) = n + 1` up to some `s - 1`, then
/// nonincreasing.
pub fn is_c2_admissible(h: &HVector) -> bool {
    c2_violation(h).is_none()
}

/// A C2-admissible h-vector is of decreasing type when, once it drops, it
/// keeps dropping strictly until it reaches zero.
pub fn is_decreasing_type(h: &HVector) -> Result<bool> {
    if !is_c2_admissible(h) {
        return Err(Error::NotC2Admissible(h.clone()));
    }
    let b = h.socle_degree() as i64;
    let first_drop = (0..=b)
        .find(|&n| h.get(n) > h.get(n + 1))
        .expect("h(b) > h(b+1)");
    Ok((first_drop..=b).all(|n| h.get(n) > h.get(n + 1)))
}

fn first_half_entries(h: &HVector) -> std::result::Result<Vec<i64>, Violation> {
    let b = h.socle_degree();
    let e = h.entries();
    if let Some(index) = (0..=b).find(|&n| e[n] != e[b - n]) {
        return Err(Violation::NotSymmetric { index });
    }
    let diff = difference(h);
    let half = diff[..=b / 2].to_vec();
    if let Some(index) = half.iter().position(|v| *v < 0) {
        return Err(Violation::NegativeFirstHalf { index });
    }
    Ok(half)
}

pub fn g3_violation(h: &HVector) -> Option<Violation> {
    let half = match first_half_entries(h) {
        Ok(half) => half,
        Err(v) => return Some(v),
    };
    match HVector::new(half) {
        Ok(k) => c2_violation(&k).map(|v| Violation::FirstHalf(Box::new(v))),
        Err(Error::InteriorZero { index }) => Some(Violation::FirstHalfGap { index }),
        Err(_) => unreachable!("first half starts at h(0) = 1"),
    }
}

/// Stanley's characterization of codimension-3 Gorenstein h-vectors:
/// symmetric, with C2-admissible first half.
pub fn is_g3_admissible(h: &HVector) -> bool {
    g3_violation(h).is_none()
}

/// `k(n) = ∂h(n)` for `0 <= n <= floor(b/2)`, zero beyond.
pub fn first_half(h: &HVector) -> Result<HVector> {
    match first_half_entries(h) {
        Ok(half) => HVector::new(half).map_err(|_| Error::NotG3Admissible(h.clone())),
        Err(Violation::NotSymmetric { .. }) => Err(Error::NotSymmetric(h.clone())),
        Err(Violation::NegativeFirstHalf { index }) => Err(Error::NegativeFirstHalf {
            h: h.clone(),
            index,
        }),
        Err(_) => unreachable!(),
    }
}

/// Rebuilds the symmetric h-vector of socle degree `b` whose first half is `k`.
pub fn symmetrize(k: &HVector, b: usize) -> Result<HVector> {
    let half = b / 2;
    if k.socle_degree() > half {
        return Err(Error::OutOfRange(format!(
            "first half {k} is longer than floor({b}/2)+1"
        )));
    }
    let mut out = vec![0; b + 1];
    let mut acc = 0;
    for n in 0..=half {
        acc += k.get(n as i64);
        out[n] = acc;
        out[b - n] = acc;
    }
    HVector::new(out)
}

/// h-vector of `d` general points: `h(n) = C(n+2, 2)` below `s`, the rest in
/// degree `s`, where `C(s+2, 3) <= d < C(s+3, 3)`.
pub fn general_points_hvector(d: i64) -> Result<HVector> {
    if d < 1 {
        return Err(Error::OutOfRange(format!(
            "number of points must be >= 1, got {d}"
        )));
    }
    let s = (0..)
        .take_while(|&s| binomial(s + 2, 3) <= d)
        .last()
        .expect("d >= 1");
    let mut entries: Vec<i64> = (0..s).map(|n| binomial(n + 2, 2)).collect();
    entries.push(d - binomial(s + 2, 3));
    HVector::new(entries)
}

/// Coefficients of `∏ (1 + u + ... + u^{d_i - 1})`.
fn truncated_geometric_product(degrees: &[i64]) -> Vec<i64> {
    degrees.iter().fold(vec![1], |acc, &d| {
        let mut out = vec![0; acc.len() + d as usize - 1];
        for (i, a) in acc.iter().enumerate() {
            for slot in &mut out[i..i + d as usize] {
                *slot += a;
            }
        }
        out
    })
}

/// An ACM curve class in P^3, identified by a C2-admissible h-vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveClass {
    pub h: HVector,
    pub degree: i64,
    pub genus: i64,
    /// Least degree of a surface containing the curve.
    pub s: i64,
    pub socle_degree: i64,
}

impl CurveClass {
    pub fn new(h: HVector) -> Result<Self> {
        let (degree, genus) = curve_degree_genus(&h)?;
        Ok(CurveClass {
            s: h.least_surface_degree(2),
            socle_degree: h.socle_degree() as i64,
            degree,
            genus,
            h,
        })
    }
}

/// `(deg, genus)` of an ACM curve: `d = Σ h(n)`, `g = 1 + Σ (n-1) h(n)`.
pub fn curve_degree_genus(c: &HVector) -> Result<(i64, i64)> {
    if !is_c2_admissible(c) {
        return Err(Error::NotC2Admissible(c.clone()));
    }
    let genus = 1 + c
        .entries()
        .iter()
        .enumerate()
        .map(|(n, v)| (n as i64 - 1) * v)
        .sum::<i64>();
    Ok((c.degree(), genus))
}

/// The complete intersection curve of surfaces of degrees `s <= t`.
pub fn ci_curve_hvector(s: i64, t: i64) -> Result<CurveClass> {
    if s < 1 || t < s {
        return Err(Error::OutOfRange(format!(
            "need 1 <= s <= t, got ({s}, {t})"
        )));
    }
    CurveClass::new(HVector::new(truncated_geometric_product(&[s, t]))?)
}

/// The complete intersection of three surfaces of degrees `d1, d2, d3`.
pub fn ci_points_hvector(d1: i64, d2: i64, d3: i64) -> Result<HVector> {
    if d1 < 1 || d2 < 1 || d3 < 1 {
        return Err(Error::OutOfRange(format!(
            "degrees must be positive, got ({d1}, {d2}, {d3})"
        )));
    }
    HVector::new(truncated_geometric_product(&[d1, d2, d3]))
}

/// If `h` is the h-vector of a complete intersection of three surfaces,
/// returns their degrees in ascending order.
pub fn ci_points_type(h: &HVector) -> Option<(i64, i64, i64)> {
    if !h.is_symmetric() {
        return None;
    }
    // The generator degrees satisfy d1 + d2 + d3 = b + 3 and d1 = s.
    let b = h.socle_degree() as i64;
    let d1 = h.least_surface_degree(3);
    (d1..=b + 3)
        .map(|d2| (d1, d2, b + 3 - d1 - d2))
        .filter(|&(_, d2, d3)| d2 <= d3)
        .find(|&(a, b2, c)| ci_points_hvector(a, b2, c).ok().as_ref() == Some(h))
}

/// Numeric invariants of an AG zero-scheme in P^3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgClass {
    pub h: HVector,
    pub degree: i64,
    pub socle_degree: i64,
    /// `m = b - 1`: the twist with `Ω_Z ≅ R_Z(m)`.
    pub m: i64,
    pub s: i64,
    pub first_half: HVector,
    /// The ideal sheaf twisted by this degree is globally generated.
    pub generation_degree: i64,
}

pub fn scheme_invariants(h: &HVector) -> Result<AgClass> {
    if !is_g3_admissible(h) {
        return Err(Error::NotG3Admissible(h.clone()));
    }
    let b = h.socle_degree() as i64;
    let s = h.least_surface_degree(3);
    Ok(AgClass {
        h: h.clone(),
        degree: h.degree(),
        socle_degree: b,
        m: b - 1,
        s,
        first_half: first_half(h)?,
        generation_degree: b + 2 - s,
    })
}
