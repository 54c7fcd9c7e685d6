//! Topological invariants of a monodromy datum.
//!
//! * **Isotropy multiset**: the values `±T(X_i)`, each taken as its
//!   [`pm_canonical`](crate::zmod::CyclicValue::pm_canonical) representative.
//! * **`h1`**: after flipping every cone value into `{[2], ..., [q−2]}`, the
//!   half of `Z_2q` containing `T(D_1 + ... + D_g)`. Undefined when some cone
//!   value equals `[q]`, since then that sum is only known up to `[q]`.
//! * **`l`**: the smallest integer with `⟨[2l]⟩` equal to the subgroup
//!   generated by the isotropies (`l = q` when there are none).
//! * **`h2`**: for Klein-bottle quotients, the value set
//!   `{±a, ±a + s}` in `Z_2l` where `a = T(D_1)` and `s = T(D_1 + D_2)`,
//!   i.e. the image of the primitive classes of `H_1(K) = Z ⊕ Z_2` under the
//!   monodromy of the induced free homeomorphism of order `2l`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::datum::{cover_genus, MonodromyDatum};
use crate::zmod::{subgroup_gcd, CyclicValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("h1 undefined: an isotropy equals [q]")]
    H1Undefined,
    #[error("h2 is only defined for quotient genus 2, got {0}")]
    GenusNotTwo(usize),
    #[error("tuple shape (two_q={tuple_two_q}, genus={tuple_genus}) does not match (two_q={two_q}, genus={genus})")]
    ShapeMismatch {
        two_q: u32,
        genus: usize,
        tuple_two_q: u32,
        tuple_genus: usize,
    },
    #[error("no admissible datum realizes the given invariants")]
    Unrealizable,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct H2Set {
    pub modulus: u32,
    pub values: Vec<u32>,
}

/// The complete invariant of an equivalence class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InvariantTuple {
    pub two_q: u32,
    pub genus: usize,
    pub isotropy: Vec<u32>,
    pub h1: Option<u8>,
    pub l: u32,
    pub h2: Option<H2Set>,
    pub h2_applicable: bool,
    pub cover_genus: i64,
}

pub fn isotropy_multiset(datum: &MonodromyDatum) -> Vec<CyclicValue> {
    let mut iso: Vec<_> = datum.x().iter().map(|v| v.pm_canonical()).collect();
    iso.sort();
    iso
}

/// Whether some cone value is `[q]`, i.e. has order 2.
pub fn has_order2_isotropy(datum: &MonodromyDatum) -> bool {
    datum.x().iter().any(|v| v.value() == datum.q())
}

pub fn h1(datum: &MonodromyDatum) -> Result<u8, InvariantError> {
    if has_order2_isotropy(datum) {
        return Err(InvariantError::H1Undefined);
    }
    let q = datum.q();
    // Flipping x_j > q into the lower half is an H2 move: it adds the old
    // x_j to the crosscap sum.
    let sum = datum
        .d()
        .iter()
        .copied()
        .chain(datum.x().iter().copied().filter(|v| v.value() > q))
        .reduce(|a, b| a + b)
        .expect("genus ≥ 1");
    Ok(if sum.value() < q { 0 } else { 1 })
}

pub fn l_value(datum: &MonodromyDatum) -> u32 {
    let d = subgroup_gcd(datum.x(), datum.two_q()).expect("cone values share the modulus");
    if d == 0 {
        datum.q()
    } else {
        d / 2
    }
}

pub fn h2(datum: &MonodromyDatum) -> Result<H2Set, InvariantError> {
    if datum.genus() != 2 {
        return Err(InvariantError::GenusNotTwo(datum.genus()));
    }
    let modulus = 2 * l_value(datum);
    let d = datum.d_values();
    let a = d[0] % modulus;
    let s = (d[0] + d[1]) % modulus;
    debug_assert!(s == 0 || s == modulus / 2);
    let neg_a = (modulus - a) % modulus;
    let values: BTreeSet<u32> = [a, neg_a, (a + s) % modulus, (neg_a + s) % modulus]
        .into_iter()
        .collect();
    Ok(H2Set {
        modulus,
        values: values.into_iter().collect(),
    })
}

pub fn invariant_tuple(datum: &MonodromyDatum) -> InvariantTuple {
    let l = l_value(datum);
    let h2 = h2(datum).ok();
    InvariantTuple {
        two_q: datum.two_q(),
        genus: datum.genus(),
        isotropy: isotropy_multiset(datum).iter().map(|v| v.value()).collect(),
        h1: h1(datum).ok(),
        l,
        h2_applicable: h2.is_some() && l > 1,
        h2,
        cover_genus: cover_genus(datum).genus_cover,
    }
}

/// The smallest admissible datum (by its `x` list, then its `d` list) whose
/// invariant tuple equals `tuple`.
///
/// Searches cone vectors made of the signed isotropy values, and for each
/// the crosscap vectors in lexicographic order.
pub fn canonical_representative(
    two_q: u32,
    genus: usize,
    tuple: &InvariantTuple,
) -> Result<MonodromyDatum, InvariantError> {
    if tuple.two_q != two_q || tuple.genus != genus {
        return Err(InvariantError::ShapeMismatch {
            two_q,
            genus,
            tuple_two_q: tuple.two_q,
            tuple_genus: tuple.genus,
        });
    }
    if genus == 0 || two_q < 4 || !two_q.is_multiple_of(4) {
        return Err(InvariantError::Unrealizable);
    }
    let mut cone_choices: BTreeSet<Vec<i64>> = BTreeSet::new();
    let r = tuple.isotropy.len();
    for signs in 0u32..(1 << r) {
        let x: Vec<i64> = tuple
            .isotropy
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                if signs & (1 << k) != 0 {
                    ((two_q - v) % two_q) as i64
                } else {
                    v as i64
                }
            })
            .collect();
        let mut key = x;
        key.sort();
        cone_choices.insert(key);
    }

    let odd: Vec<i64> = (1..two_q as i64).step_by(2).collect();
    let mut best: Option<MonodromyDatum> = None;
    for x in &cone_choices {
        let mut idx = vec![0usize; genus];
        'crosscaps: loop {
            let d: Vec<i64> = idx.iter().map(|&k| odd[k]).collect();
            if let Ok(candidate) = MonodromyDatum::new(two_q as i64, &d, x) {
                // with x fixed, later candidates only grow
                if best.as_ref().is_some_and(|b| candidate >= *b) {
                    break 'crosscaps;
                }
                if invariant_tuple(&candidate) == *tuple {
                    best = Some(candidate);
                    break 'crosscaps;
                }
            }
            // odometer over d
            let mut pos = genus;
            loop {
                if pos == 0 {
                    break 'crosscaps;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < odd.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    best.ok_or(InvariantError::Unrealizable)
}
