//! The automorphism moves `H1`–`H4` and their orbits.
//!
//! Each move is induced by a homeomorphism of the quotient orbifold and acts
//! on a canonical generator system; the monodromy of the new system is read
//! off by composing. On monodromy values (1-based indices):
//!
//! | move       | effect                                  | legal when                  |
//! |------------|-----------------------------------------|-----------------------------|
//! | `H1(i, j)` | `d_i ← d_i + 2·d_j`, `d_j ← −d_j`       | `i ≠ j`, both ≤ `g`         |
//! | `H2(i, j)` | `d_i ← d_i + x_j`, `x_j ← −x_j`         | `i ≤ g`, `j ≤ r`            |
//! | `H3(i, j)` | swap `x_i`, `x_j`                       | `ord(x_i) = ord(x_j)`       |
//! | `H4(i, j)` | swap `d_i`, `d_j`                       | `i ≠ j`, both ≤ `g`         |
//!
//! All other generators are left alone. After every move `x` is re-sorted;
//! sign flips keep orders, so the re-sort is itself an order-preserving
//! relabelling of cone points.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::datum::MonodromyDatum;

pub const DEFAULT_BFS_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    H1,
    H2,
    H3,
    H4,
}

/// One move with 1-based indices, serialized as `{"kind":"H2","i":2,"j":1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub i: usize,
    pub j: usize,
}

impl Move {
    pub fn new(kind: MoveKind, i: usize, j: usize) -> Self {
        Self { kind, i, j }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({},{})", self.kind, self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{mv}: index out of range for g = {genus}, r = {r}")]
    IndexOutOfRange { mv: Move, genus: usize, r: usize },
    #[error("{0}: indices must differ")]
    SameIndex(Move),
    #[error("{mv}: cone orders differ ({left} vs {right})")]
    OrderMismatch { mv: Move, left: u32, right: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BfsLimits {
    /// Maximum number of distinct states one search may visit.
    pub max_states: usize,
}

impl Default for BfsLimits {
    fn default() -> Self {
        Self {
            max_states: DEFAULT_BFS_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("orbit search from {start} exceeded the cap of {cap} states")]
    CapExceeded { start: String, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("incompatible data: {0}")]
    Incompatible(String),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

fn check_legal(datum: &MonodromyDatum, m: Move) -> Result<(), MoveError> {
    let (g, r) = (datum.genus(), datum.r());
    let in_range = |i: usize, bound: usize| (1..=bound).contains(&i);
    let out = || MoveError::IndexOutOfRange { mv: m, genus: g, r };
    match m.kind {
        MoveKind::H1 | MoveKind::H4 => {
            if !in_range(m.i, g) || !in_range(m.j, g) {
                return Err(out());
            }
            if m.i == m.j {
                return Err(MoveError::SameIndex(m));
            }
        }
        MoveKind::H2 => {
            if !in_range(m.i, g) || !in_range(m.j, r) {
                return Err(out());
            }
        }
        MoveKind::H3 => {
            if !in_range(m.i, r) || !in_range(m.j, r) {
                return Err(out());
            }
            let (left, right) = (
                datum.x()[m.i - 1].elem_order(),
                datum.x()[m.j - 1].elem_order(),
            );
            if left != right {
                return Err(MoveError::OrderMismatch { mv: m, left, right });
            }
        }
    }
    Ok(())
}

pub fn apply_move(datum: &MonodromyDatum, m: Move) -> Result<MonodromyDatum, MoveError> {
    check_legal(datum, m)?;
    let mut d = datum.d().to_vec();
    let mut x = datum.x().to_vec();
    let (i, j) = (m.i - 1, m.j - 1);
    match m.kind {
        MoveKind::H1 => {
            d[i] = d[i] + d[j].scale(2);
            d[j] = -d[j];
        }
        MoveKind::H2 => {
            d[i] = d[i] + x[j];
            x[j] = -x[j];
        }
        MoveKind::H3 => x.swap(i, j),
        MoveKind::H4 => d.swap(i, j),
    }
    Ok(MonodromyDatum::from_parts(datum.two_q(), d, x))
}

/// Every legal non-trivial move, in the fixed exploration order: `H1` by
/// `(i, j)` lexicographically, then `H2`, `H3`, `H4`.
pub fn legal_moves(datum: &MonodromyDatum) -> Vec<Move> {
    let (g, r) = (datum.genus(), datum.r());
    let mut out = Vec::new();
    for i in 1..=g {
        for j in (1..=g).filter(|&j| j != i) {
            out.push(Move::new(MoveKind::H1, i, j));
        }
    }
    for i in 1..=g {
        for j in 1..=r {
            out.push(Move::new(MoveKind::H2, i, j));
        }
    }
    let x = datum.x();
    for i in 1..=r {
        for j in (1..=r).filter(|&j| j != i) {
            if x[i - 1].elem_order() == x[j - 1].elem_order() {
                out.push(Move::new(MoveKind::H3, i, j));
            }
        }
    }
    for i in 1..=g {
        for j in (1..=g).filter(|&j| j != i) {
            out.push(Move::new(MoveKind::H4, i, j));
        }
    }
    out
}

/// Breadth-first search tree rooted at one datum.
struct Search {
    states: Vec<MonodromyDatum>,
    parent: Vec<Option<(usize, Move)>>,
}

impl Search {
    /// Explores until `target` is reached (if given) or the orbit is closed.
    fn run(
        start: &MonodromyDatum,
        target: Option<&MonodromyDatum>,
        limits: BfsLimits,
    ) -> Result<(Self, Option<usize>), OrbitError> {
        let mut search = Search {
            states: vec![start.clone()],
            parent: vec![None],
        };
        if target == Some(start) {
            return Ok((search, Some(0)));
        }
        let mut index: HashMap<MonodromyDatum, usize> = HashMap::new();
        index.insert(start.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(at) = queue.pop_front() {
            let current = search.states[at].clone();
            for m in legal_moves(&current) {
                let next = apply_move(&current, m).expect("legal_moves yields legal moves");
                if index.contains_key(&next) {
                    continue;
                }
                if search.states.len() >= limits.max_states {
                    return Err(OrbitError::CapExceeded {
                        start: start.to_string(),
                        cap: limits.max_states,
                    });
                }
                let id = search.states.len();
                let hit = target == Some(&next);
                index.insert(next.clone(), id);
                search.states.push(next);
                search.parent.push(Some((at, m)));
                if hit {
                    return Ok((search, Some(id)));
                }
                queue.push_back(id);
            }
        }
        Ok((search, None))
    }

    fn path_to(&self, mut id: usize) -> Vec<Move> {
        let mut moves = Vec::new();
        while let Some((prev, m)) = self.parent[id] {
            moves.push(m);
            id = prev;
        }
        moves.reverse();
        moves
    }
}

/// Closure of `{datum}` under all legal moves.
pub fn orbit(
    datum: &MonodromyDatum,
    limits: BfsLimits,
) -> Result<BTreeSet<MonodromyDatum>, OrbitError> {
    let (search, _) = Search::run(datum, None, limits)?;
    Ok(search.states.into_iter().collect())
}

/// A shortest move sequence carrying `a` to `b`, or `None` when `b` lies in
/// a different orbit.
pub fn witness(
    a: &MonodromyDatum,
    b: &MonodromyDatum,
    limits: BfsLimits,
) -> Result<Option<Vec<Move>>, WitnessError> {
    if (a.two_q(), a.genus(), a.r()) != (b.two_q(), b.genus(), b.r()) {
        return Err(WitnessError::Incompatible(format!(
            "{a} and {b} differ in (two_q, genus, r)"
        )));
    }
    let (search, hit) = Search::run(a, Some(b), limits)?;
    Ok(hit.map(|id| search.path_to(id)))
}

/// Applies `moves` in order.
pub fn replay(datum: &MonodromyDatum, moves: &[Move]) -> Result<MonodromyDatum, MoveError> {
    moves
        .iter()
        .try_fold(datum.clone(), |acc, &m| apply_move(&acc, m))
}
