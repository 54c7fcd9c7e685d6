//! Monodromy vectors and their admissibility rules.
//!
//! A periodic orientation-reversing homeomorphism `Φ` of order `2q` (with `q`
//! even) is recorded by its monodromy `T: H_1O(S/Φ) → Z_2q` evaluated on a
//! canonical generator system: the crosscap classes `D_1..D_g` of the
//! non-orientable quotient and the cone classes `X_1..X_r`. The abelianized
//! long relation reads `2(D_1 + ... + D_g) + X_1 + ... + X_r = 0`.
//!
//! Admissible vectors satisfy:
//!
//! * `2q ≡ 0 (mod 4)`;
//! * every `T(D_j)` is odd (crosscap loops reverse orientation);
//! * every `T(X_i)` is even and nonzero (cone rotations preserve it);
//! * the long relation holds in `Z_2q`;
//! * the values generate `Z_2q` (`T` is onto).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::zmod::{gcd, CyclicValue, MAX_MODULUS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ValidationKind {
    BadOrder,
    BadGenus,
    /// A value lies outside `[0, two_q)`.
    OutOfRange,
    ParityD,
    ParityX,
    ZeroIsotropy,
    LongRelation,
    NotSurjective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationError {
    pub kind: ValidationKind,
    pub detail: String,
}

impl ValidationError {
    fn new(kind: ValidationKind, detail: impl Into<String>) -> Self {
        Self {
            kind,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

/// Every violation found in one candidate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid monodromy datum: {}", display_list(.0))]
pub struct ValidationErrors(pub Vec<ValidationError>);

impl ValidationErrors {
    pub fn kinds(&self) -> Vec<ValidationKind> {
        self.0.iter().map(|e| e.kind).collect()
    }
}

fn display_list(errors: &[ValidationError]) -> String {
    errors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Unvalidated fields as they appear in a JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDatum {
    pub two_q: i64,
    pub genus: i64,
    pub d: Vec<i64>,
    pub x: Vec<i64>,
}

/// A validated monodromy vector.
///
/// `x` is kept sorted by `(elem_order, value)`; this fixes the numbering of
/// cone points, which are only distinguishable through their orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDatum", into = "RawDatum")]
pub struct MonodromyDatum {
    two_q: u32,
    d: Vec<CyclicValue>,
    x: Vec<CyclicValue>,
}

/// Orders by `two_q`, then by the `x` list, then by the `d` list.
impl Ord for MonodromyDatum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.two_q
            .cmp(&other.two_q)
            .then_with(|| values(&self.x).cmp(values(&other.x)))
            .then_with(|| values(&self.d).cmp(values(&other.d)))
    }
}

impl PartialOrd for MonodromyDatum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn values(v: &[CyclicValue]) -> impl Iterator<Item = u32> + '_ {
    v.iter().map(|c| c.value())
}

fn order_then_value(a: &CyclicValue, b: &CyclicValue) -> Ordering {
    (a.elem_order(), a.value()).cmp(&(b.elem_order(), b.value()))
}

pub fn validate(raw: &RawDatum) -> Result<MonodromyDatum, ValidationErrors> {
    use ValidationKind::*;

    let mut errors = Vec::new();
    let two_q = raw.two_q;
    if two_q < 4 || two_q % 4 != 0 || two_q > MAX_MODULUS as i64 {
        errors.push(ValidationError::new(
            BadOrder,
            format!("two_q = {two_q} must be a multiple of 4 in [4, {MAX_MODULUS}]"),
        ));
        return Err(ValidationErrors(errors));
    }
    if raw.genus < 1 || raw.genus as usize != raw.d.len() {
        errors.push(ValidationError::new(
            BadGenus,
            format!(
                "genus = {} must be ≥ 1 and equal the length of d ({})",
                raw.genus,
                raw.d.len()
            ),
        ));
    }

    let mut in_range = true;
    for (label, values) in [("d", &raw.d), ("x", &raw.x)] {
        for (pos, &v) in values.iter().enumerate() {
            if !(0..two_q).contains(&v) {
                in_range = false;
                errors.push(ValidationError::new(
                    OutOfRange,
                    format!("{label}[{}] = {v} is not reduced mod {two_q}", pos + 1),
                ));
            }
        }
    }
    if !in_range {
        return Err(ValidationErrors(errors));
    }

    let mut parity_ok = true;
    for (pos, &v) in raw.d.iter().enumerate() {
        if v % 2 == 0 {
            parity_ok = false;
            errors.push(ValidationError::new(
                ParityD,
                format!("d[{}] = {v} must be odd", pos + 1),
            ));
        }
    }
    for (pos, &v) in raw.x.iter().enumerate() {
        if v % 2 != 0 {
            parity_ok = false;
            errors.push(ValidationError::new(
                ParityX,
                format!("x[{}] = {v} must be even", pos + 1),
            ));
        } else if v == 0 {
            parity_ok = false;
            errors.push(ValidationError::new(
                ZeroIsotropy,
                format!("x[{}] = 0 is not a cone isotropy", pos + 1),
            ));
        }
    }

    let relation = (2 * raw.d.iter().sum::<i64>() + raw.x.iter().sum::<i64>()).rem_euclid(two_q);
    if relation != 0 {
        errors.push(ValidationError::new(
            LongRelation,
            format!("2·Σd + Σx ≡ {relation} (mod {two_q}), expected 0"),
        ));
    }

    // Odd d entries already force an odd gcd; surjectivity is only meaningful
    // once the parities are right.
    if parity_ok {
        let g = raw
            .d
            .iter()
            .chain(&raw.x)
            .fold(two_q as u32, |acc, &v| gcd(acc, v as u32));
        if g != 1 {
            errors.push(ValidationError::new(
                NotSurjective,
                format!("values generate a subgroup of index {g} in Z_{two_q}"),
            ));
        }
    }

    if !errors.is_empty() {
        return Err(ValidationErrors(errors));
    }
    let n = two_q as u32;
    let reduce = |v: &i64| CyclicValue::from_reduced(*v as u32, n);
    Ok(MonodromyDatum::sorted(
        n,
        raw.d.iter().map(reduce).collect(),
        raw.x.iter().map(reduce).collect(),
    ))
}

impl MonodromyDatum {
    /// Validates `(two_q, d, x)`; the genus is taken from `d.len()`.
    pub fn new(two_q: i64, d: &[i64], x: &[i64]) -> Result<Self, ValidationErrors> {
        validate(&RawDatum {
            two_q,
            genus: d.len() as i64,
            d: d.to_vec(),
            x: x.to_vec(),
        })
    }

    /// Assembles a datum from parts that are known to be admissible, sorting
    /// `x` into canonical order.
    pub(crate) fn from_parts(two_q: u32, d: Vec<CyclicValue>, x: Vec<CyclicValue>) -> Self {
        let datum = Self::sorted(two_q, d, x);
        debug_assert!(validate(&datum.to_raw()).is_ok(), "{datum}");
        datum
    }

    fn sorted(two_q: u32, d: Vec<CyclicValue>, mut x: Vec<CyclicValue>) -> Self {
        x.sort_by(order_then_value);
        Self { two_q, d, x }
    }

    pub fn two_q(&self) -> u32 {
        self.two_q
    }

    pub fn q(&self) -> u32 {
        self.two_q / 2
    }

    /// Crosscap number `g` of the quotient surface.
    pub fn genus(&self) -> usize {
        self.d.len()
    }

    /// Number of cone points `r`.
    pub fn r(&self) -> usize {
        self.x.len()
    }

    pub fn d(&self) -> &[CyclicValue] {
        &self.d
    }

    pub fn x(&self) -> &[CyclicValue] {
        &self.x
    }

    pub fn d_values(&self) -> Vec<u32> {
        self.d.iter().map(|v| v.value()).collect()
    }

    pub fn x_values(&self) -> Vec<u32> {
        self.x.iter().map(|v| v.value()).collect()
    }

    pub fn to_raw(&self) -> RawDatum {
        RawDatum {
            two_q: self.two_q as i64,
            genus: self.genus() as i64,
            d: self.d.iter().map(|v| v.value() as i64).collect(),
            x: self.x.iter().map(|v| v.value() as i64).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("datum serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl TryFrom<RawDatum> for MonodromyDatum {
    type Error = ValidationErrors;

    fn try_from(raw: RawDatum) -> Result<Self, Self::Error> {
        validate(&raw)
    }
}

impl From<MonodromyDatum> for RawDatum {
    fn from(datum: MonodromyDatum) -> Self {
        datum.to_raw()
    }
}

impl fmt::Display for MonodromyDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(2q={}, g={}, d={:?}, x={:?})",
            self.two_q,
            self.genus(),
            self.d_values(),
            self.x_values()
        )
    }
}

/// Multiset of cone orders `m_i = ord(T(X_i))`, in the datum's cone order.
pub fn cone_orders(datum: &MonodromyDatum) -> Vec<u32> {
    datum.x.iter().map(|v| v.elem_order()).collect()
}

/// Euler characteristic and genus of the covering surface `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverGenus {
    pub chi: i64,
    pub genus_cover: i64,
}

/// Riemann–Hurwitz for the orbifold cover `S → S/Φ` of degree `2q`:
/// `χ(S) = 2q·[(2 − g) − Σ(1 − 1/m_i)]`, evaluated in integers.
pub fn cover_genus(datum: &MonodromyDatum) -> CoverGenus {
    let n = datum.two_q as i64;
    let branch: i64 = cone_orders(datum)
        .into_iter()
        .map(|m| n - n / m as i64)
        .sum();
    let chi = n * (2 - datum.genus() as i64) - branch;
    CoverGenus {
        chi,
        genus_cover: 1 - chi / 2,
    }
}

/// Monodromy data for an orientable quotient with boundary.
///
/// Only the isotropy-pair invariant is defined for these, so apart from the
/// modulus and reduced values nothing is enforced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrientableDatum", into = "RawOrientableDatum")]
pub struct OrientableQuotientDatum {
    two_q: u32,
    genus_orientable: u32,
    x: Vec<CyclicValue>,
    c: Vec<CyclicValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawOrientableDatum {
    pub two_q: i64,
    pub genus_orientable: i64,
    pub x: Vec<i64>,
    pub c: Vec<i64>,
}

impl OrientableQuotientDatum {
    pub fn new(
        two_q: i64,
        genus_orientable: i64,
        x: &[i64],
        c: &[i64],
    ) -> Result<Self, ValidationErrors> {
        RawOrientableDatum {
            two_q,
            genus_orientable,
            x: x.to_vec(),
            c: c.to_vec(),
        }
        .try_into()
    }

    pub fn two_q(&self) -> u32 {
        self.two_q
    }

    pub fn genus_orientable(&self) -> u32 {
        self.genus_orientable
    }

    pub fn x(&self) -> &[CyclicValue] {
        &self.x
    }

    /// Boundary values `T(C_j)`; `s = c().len()`.
    pub fn c(&self) -> &[CyclicValue] {
        &self.c
    }
}

impl TryFrom<RawOrientableDatum> for OrientableQuotientDatum {
    type Error = ValidationErrors;

    fn try_from(raw: RawOrientableDatum) -> Result<Self, Self::Error> {
        use ValidationKind::*;
        let mut errors = Vec::new();
        let two_q = raw.two_q;
        if two_q < 4 || two_q % 2 != 0 || two_q > MAX_MODULUS as i64 {
            errors.push(ValidationError::new(
                BadOrder,
                format!("two_q = {two_q} must be even in [4, {MAX_MODULUS}]"),
            ));
            return Err(ValidationErrors(errors));
        }
        if raw.genus_orientable < 0 {
            errors.push(ValidationError::new(
                BadGenus,
                format!("genus_orientable = {} must be ≥ 0", raw.genus_orientable),
            ));
        }
        for (label, values) in [("x", &raw.x), ("c", &raw.c)] {
            for (pos, &v) in values.iter().enumerate() {
                if !(0..two_q).contains(&v) {
                    errors.push(ValidationError::new(
                        OutOfRange,
                        format!("{label}[{}] = {v} is not reduced mod {two_q}", pos + 1),
                    ));
                }
            }
        }
        if !errors.is_empty() {
            return Err(ValidationErrors(errors));
        }
        let n = two_q as u32;
        let reduce = |v: &i64| CyclicValue::from_reduced(*v as u32, n);
        Ok(Self {
            two_q: n,
            genus_orientable: raw.genus_orientable as u32,
            x: raw.x.iter().map(reduce).collect(),
            c: raw.c.iter().map(reduce).collect(),
        })
    }
}

impl From<OrientableQuotientDatum> for RawOrientableDatum {
    fn from(od: OrientableQuotientDatum) -> Self {
        Self {
            two_q: od.two_q as i64,
            genus_orientable: od.genus_orientable as i64,
            x: od.x.iter().map(|v| v.value() as i64).collect(),
            c: od.c.iter().map(|v| v.value() as i64).collect(),
        }
    }
}

/// Parses a file body holding either one JSON document or an array of them.
pub fn parse_documents<T: serde::de::DeserializeOwned>(
    text: &str,
) -> Result<Vec<T>, serde_json::Error> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|one| vec![one])
    }
}
