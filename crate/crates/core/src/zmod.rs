//! Exact arithmetic in finite cyclic groups `Z_n`.
//!
//! Every monodromy value in this crate is an element of `Z_2q`. The helpers
//! here cover the handful of facts the classification needs: the order of an
//! element, the canonical generator of the subgroup spanned by a set of
//! elements, and a canonical representative of the pair `{v, -v}`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

/// Largest modulus accepted anywhere in the crate.
///
/// All intermediate sums are taken in `u64`, so anything up to this bound is
/// safe for the vector lengths that exhaustive enumeration can reach.
pub const MAX_MODULUS: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZmodError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {0} exceeds the supported maximum {MAX_MODULUS}")]
    ModulusTooLarge(u64),
    #[error("mixed moduli: {0} and {1}")]
    MixedModuli(u32, u32),
}

/// An element `[value]` of `Z_modulus`, always stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicValue {
    value: u32,
    modulus: u32,
}

impl CyclicValue {
    /// Reduces `value` into `Z_modulus`. Negative inputs wrap around.
    pub fn new(value: i64, modulus: u32) -> Result<Self, ZmodError> {
        if modulus == 0 {
            return Err(ZmodError::ZeroModulus);
        }
        if modulus > MAX_MODULUS {
            return Err(ZmodError::ModulusTooLarge(modulus as u64));
        }
        Ok(Self {
            value: value.rem_euclid(modulus as i64) as u32,
            modulus,
        })
    }

    /// Builds a value that is already known to be reduced.
    pub(crate) fn from_reduced(value: u32, modulus: u32) -> Self {
        debug_assert!(modulus > 0 && value < modulus);
        Self { value, modulus }
    }

    pub fn zero(modulus: u32) -> Result<Self, ZmodError> {
        Self::new(0, modulus)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// `k · self` for an arbitrary integer `k`.
    pub fn scale(self, k: i64) -> Self {
        let n = self.modulus as i64;
        let v = (self.value as i64 * k.rem_euclid(n)).rem_euclid(n);
        Self::from_reduced(v as u32, self.modulus)
    }

    /// Addition that reports a modulus mismatch instead of panicking.
    pub fn checked_add(self, rhs: Self) -> Result<Self, ZmodError> {
        if self.modulus != rhs.modulus {
            return Err(ZmodError::MixedModuli(self.modulus, rhs.modulus));
        }
        let n = self.modulus as u64;
        let v = (self.value as u64 + rhs.value as u64) % n;
        Ok(Self::from_reduced(v as u32, self.modulus))
    }

    /// Order of the element: the smallest `k ≥ 1` with `k · v ≡ 0`.
    pub fn elem_order(self) -> u32 {
        self.modulus / gcd(self.value, self.modulus)
    }

    /// Canonical representative of `{v, -v}`: the smaller of the two.
    pub fn pm_canonical(self) -> Self {
        let neg = (-self).value;
        Self::from_reduced(self.value.min(neg), self.modulus)
    }
}

impl fmt::Display for CyclicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.value)
    }
}

impl Add for CyclicValue {
    type Output = Self;

    /// # Panics
    ///
    /// Panics if the moduli differ; use [`CyclicValue::checked_add`] when the
    /// operands come from untrusted sources.
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs)
            .expect("CyclicValue addition across different moduli")
    }
}

impl Neg for CyclicValue {
    type Output = Self;

    fn neg(self) -> Self {
        let v = if self.value == 0 {
            0
        } else {
            self.modulus - self.value
        };
        Self::from_reduced(v, self.modulus)
    }
}

impl Sub for CyclicValue {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

pub fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Canonical generator `d` of the subgroup `⟨values⟩ ≤ Z_n`.
///
/// Returns `gcd(values ∪ {n})`, except that the trivial subgroup (no values,
/// or only zeros) is reported as `0` rather than `n`. Otherwise `d | n` and
/// the subgroup is `{0, d, 2d, ...}`.
pub fn subgroup_gcd(values: &[CyclicValue], n: u32) -> Result<u32, ZmodError> {
    if n == 0 {
        return Err(ZmodError::ZeroModulus);
    }
    let mut d = 0;
    for v in values {
        if v.modulus != n {
            return Err(ZmodError::MixedModuli(v.modulus, n));
        }
        d = gcd(d, v.value);
    }
    if d == 0 {
        Ok(0)
    } else {
        Ok(gcd(d, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cv(v: i64, n: u32) -> CyclicValue {
        CyclicValue::new(v, n).unwrap()
    }

    fn order_by_loop(v: CyclicValue) -> u32 {
        (1..=v.modulus())
            .find(|&k| v.scale(k as i64).is_zero())
            .unwrap()
    }

    #[test]
    fn elem_order_examples() {
        assert_eq!(cv(2, 8).elem_order(), 4);
        assert_eq!(cv(0, 8).elem_order(), 1);
        assert_eq!(order_by_loop(cv(6, 8)), 4);
        assert_eq!(cv(6, 8).elem_order(), 4);
    }

    #[test]
    fn subgroup_gcd_examples() {
        assert_eq!(subgroup_gcd(&[cv(2, 8), cv(6, 8)], 8), Ok(2));
        assert_eq!(subgroup_gcd(&[], 8), Ok(0));
        assert_eq!(subgroup_gcd(&[cv(4, 12)], 12), Ok(4));
        assert_eq!(subgroup_gcd(&[cv(0, 12), cv(0, 12)], 12), Ok(0));
    }

    #[test]
    fn subgroup_gcd_rejects_mixed_moduli() {
        assert_eq!(
            subgroup_gcd(&[cv(2, 8), cv(2, 12)], 8),
            Err(ZmodError::MixedModuli(12, 8))
        );
        assert!(cv(1, 8).checked_add(cv(1, 12)).is_err());
    }

    #[test]
    fn pm_canonical_examples() {
        assert_eq!(cv(6, 8).pm_canonical(), cv(2, 8));
        assert_eq!(cv(4, 8).pm_canonical(), cv(4, 8));
        assert_eq!(cv(0, 8).pm_canonical(), cv(0, 8));
    }

    #[test]
    fn construction_reduces_and_rejects_bad_moduli() {
        assert_eq!(cv(-1, 8).value(), 7);
        assert_eq!(cv(17, 8).value(), 1);
        assert_eq!(CyclicValue::new(1, 0), Err(ZmodError::ZeroModulus));
        assert!(CyclicValue::new(1, MAX_MODULUS + 1).is_err());
    }

    #[test]
    #[should_panic(expected = "different moduli")]
    fn add_panics_on_mixed_moduli() {
        let _ = cv(1, 8) + cv(1, 4);
    }

    fn arb_value() -> impl Strategy<Value = CyclicValue> {
        (1u32..200).prop_flat_map(|n| (0..n).prop_map(move |v| cv(v as i64, n)))
    }

    proptest! {
        #[test]
        fn order_divides_modulus_and_annihilates(v in arb_value()) {
            let k = v.elem_order();
            prop_assert_eq!(v.modulus() % k, 0);
            prop_assert!(v.scale(k as i64).is_zero());
            prop_assert_eq!(k, order_by_loop(v));
        }

        #[test]
        fn pm_canonical_is_idempotent_and_sign_blind(v in arb_value()) {
            let c = v.pm_canonical();
            prop_assert_eq!(c.pm_canonical(), c);
            prop_assert_eq!((-v).pm_canonical(), c);
        }

        #[test]
        fn subgroup_gcd_matches_closure(n in 1u32..60, raw in prop::collection::vec(0u32..60, 0..4)) {
            let vals: Vec<_> = raw.iter().map(|&v| cv(v as i64, n)).collect();
            let d = subgroup_gcd(&vals, n).unwrap();
            // brute-force closure of the generated subgroup
            let mut seen = vec![false; n as usize];
            seen[0] = true;
            let mut frontier = vec![0u32];
            while let Some(e) = frontier.pop() {
                for v in &vals {
                    let next = ((e + v.value()) % n) as usize;
                    if !seen[next] {
                        seen[next] = true;
                        frontier.push(next as u32);
                    }
                }
            }
            let size = seen.iter().filter(|s| **s).count() as u32;
            if d == 0 {
                prop_assert_eq!(size, 1);
            } else {
                prop_assert_eq!(n % d, 0);
                prop_assert_eq!(size, n / d);
                for v in &vals {
                    prop_assert_eq!(v.value() % d, 0);
                }
            }
        }
    }
}
