//! The weak order on permutations of `{0, …, n}` and its mirror `δ` into
//! noncrossing arc diagrams.
//!
//! Permutations are handled through their inversion sets (pairs of values in
//! reversed order): containment of inversion sets is the weak order, joins
//! are transitive closures of unions, and covers insert a single inversion.
//! The map [`delta`] turns each descent of a permutation into an arc —
//! endpoints are the descent's values, and each value between them passes
//! right or left according to whether it sits before or after the descent —
//! giving the bijection onto noncrossing arc diagrams that transports
//! canonical join representations onto compatible arc sets.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arcs::{Arc, Side};
use crate::lattice::FiniteLattice;

/// Errors raised by weak-order operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeakError {
    /// The data is not a permutation of `{0, …, n}`.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(&'static str),
    /// A pair set (or its complement) is not transitively closed, so no
    /// permutation has it as inversion set.
    #[error("pair set is not the inversion set of any permutation")]
    ClosureNotRealizable,
    /// The arc set is not `δ` of any permutation.
    #[error("arc set is not in the image of the descent map")]
    NotInImage,
    /// Enumeration exceeded the configured budget.
    #[error("budget of {0} exceeded")]
    BudgetExceeded(usize),
}

/// A permutation of `{0, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates one-line data: each of `0, …, len-1` exactly once.
    pub fn new(line: Vec<usize>) -> Result<Self, WeakError> {
        if line.is_empty() {
            return Err(WeakError::InvalidPermutation("empty one-line notation"));
        }
        let mut seen = vec![false; line.len()];
        for &v in &line {
            if v >= line.len() || seen[v] {
                return Err(WeakError::InvalidPermutation(
                    "entries must be 0..=n, each exactly once",
                ));
            }
            seen[v] = true;
        }
        Ok(Permutation(line))
    }

    /// The identity permutation of `{0, …, n}`.
    pub fn identity(n: usize) -> Self {
        Permutation((0..=n).collect())
    }

    /// Parses either compact digits (`"210"`) or comma-separated values
    /// (`"2,1,0"`, required once entries exceed 9).
    pub fn parse(s: &str) -> Result<Self, WeakError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(WeakError::InvalidPermutation("empty input"));
        }
        let line: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| WeakError::InvalidPermutation("entries must be integers"))
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or(WeakError::InvalidPermutation("entries must be digits"))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(line)
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `n`, where the permutation acts on `{0, …, n}`.
    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    /// Inversions as value pairs `(x, y)` with `x < y` and `y` written
    /// before `x`.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let mut inv = BTreeSet::new();
        for i in 0..self.0.len() {
            for j in (i + 1)..self.0.len() {
                if self.0[i] > self.0[j] {
                    inv.insert((self.0[j], self.0[i]));
                }
            }
        }
        inv
    }

    /// Positions `i` (0-indexed) with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.0.len() - 1)
            .filter(|&i| self.0[i] > self.0[i + 1])
            .collect()
    }

    /// The permutations covered by this one in the weak order: one per
    /// descent, obtained by sorting that descent back.
    pub fn weak_covers_below(&self) -> Vec<Permutation> {
        self.descents()
            .into_iter()
            .map(|i| {
                let mut line = self.0.clone();
                line.swap(i, i + 1);
                Permutation(line)
            })
            .collect()
    }
}

impl std::fmt::Display for Permutation {
    /// Compact digits while entries fit in one character, comma-separated
    /// beyond that (matching what [`Permutation::parse`] accepts).
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.len() <= 10 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Closes a pair set under `(x, y), (y, z) → (x, z)` for `x < y < z`.
fn transitive_closure(n: usize, pairs: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let mut closed = pairs.clone();
    loop {
        let mut added = false;
        for x in 0..n {
            for y in (x + 1)..n {
                for z in (y + 1)..=n {
                    if closed.contains(&(x, y))
                        && closed.contains(&(y, z))
                        && closed.insert((x, z))
                    {
                        added = true;
                    }
                }
            }
        }
        if !added {
            return closed;
        }
    }
}

/// Reconstructs the permutation of `{0, …, n}` with the given inversion
/// set; fails unless both the set and its complement are transitively
/// closed.
pub fn perm_from_inversions(
    n: usize,
    inv: &BTreeSet<(usize, usize)>,
) -> Result<Permutation, WeakError> {
    for &(x, y) in inv {
        if !(x < y && y <= n) {
            return Err(WeakError::InvalidPermutation(
                "inversion pairs must satisfy 0 <= x < y <= n",
            ));
        }
    }
    for x in 0..n {
        for y in (x + 1)..n {
            for z in (y + 1)..=n {
                let xy = inv.contains(&(x, y));
                let yz = inv.contains(&(y, z));
                let xz = inv.contains(&(x, z));
                if (xy && yz && !xz) || (!xy && !yz && xz) {
                    return Err(WeakError::ClosureNotRealizable);
                }
            }
        }
    }
    let mut line: Vec<usize> = (0..=n).collect();
    line.sort_by(|&a, &b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if a < b {
            if inv.contains(&(a, b)) {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Less
            }
        } else if inv.contains(&(b, a)) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let perm = Permutation(line);
    debug_assert_eq!(&perm.inversions(), inv);
    Ok(perm)
}

/// Join in the weak order: the permutation whose inversion set is the
/// transitive closure of the union. The empty join is the identity.
pub fn weak_join(n: usize, perms: &[Permutation]) -> Result<Permutation, WeakError> {
    let mut union = BTreeSet::new();
    for w in perms {
        if w.rank() != n {
            return Err(WeakError::InvalidPermutation("rank mismatch in join"));
        }
        union.extend(w.inversions());
    }
    perm_from_inversions(n, &transitive_closure(n, &union))
}

/// The descent map: one arc per descent `w_i > w_{i+1}`, from `b = w_{i+1}`
/// up to `t = w_i`; a value between them passes on the right when it is
/// written before the descent and on the left when after. Arcs are returned
/// in canonical order and always form a noncrossing diagram.
pub fn delta(w: &Permutation) -> Vec<Arc> {
    let line = w.one_line();
    let n = w.rank();
    let position: HashMap<usize, usize> =
        line.iter().enumerate().map(|(j, &v)| (v, j)).collect();
    let mut arcs: Vec<Arc> = w
        .descents()
        .into_iter()
        .map(|i| {
            let (t, b) = (line[i], line[i + 1]);
            let sides: Vec<Side> = ((b + 1)..t)
                .map(|v| {
                    if position[&v] < i {
                        Side::Right
                    } else {
                        Side::Left
                    }
                })
                .collect();
            Arc::new(n, b, t, sides).expect("descent data is a valid arc")
        })
        .collect();
    arcs.sort();
    arcs
}

/// Inversion pairs forced by one arc: left passes and the bottom endpoint
/// must precede right passes and the top endpoint.
fn arc_inversions(arc: &Arc) -> BTreeSet<(usize, usize)> {
    let mut lows = arc.l_nodes();
    lows.push(arc.bottom());
    let mut highs = arc.r_nodes();
    highs.push(arc.top());
    let mut inv = BTreeSet::new();
    for &x in &lows {
        for &y in &highs {
            if x < y {
                inv.insert((x, y));
            }
        }
    }
    inv
}

/// Inverse of [`delta`]: joins the join-irreducible permutations encoded by
/// the arcs and checks the round trip, failing with
/// [`WeakError::NotInImage`] when the arc set is not a diagram `δ` reaches.
pub fn delta_inv(n: usize, arcs: &[Arc]) -> Result<Permutation, WeakError> {
    let mut union = BTreeSet::new();
    for a in arcs {
        if a.rank() != n {
            return Err(WeakError::NotInImage);
        }
        union.extend(arc_inversions(a));
    }
    let w = perm_from_inversions(n, &transitive_closure(n, &union))
        .map_err(|_| WeakError::NotInImage)?;
    let mut expected: Vec<Arc> = arcs.to_vec();
    expected.sort();
    expected.dedup();
    if delta(&w) == expected {
        Ok(w)
    } else {
        Err(WeakError::NotInImage)
    }
}

/// The weak order on all permutations of `{0, …, n}` as an explicit
/// lattice. Element ids are lexicographic ranks of the one-line notation.
#[derive(Debug, Clone)]
pub struct WeakOrder {
    n: usize,
    perms: Vec<Permutation>,
    lattice: FiniteLattice,
}

impl WeakOrder {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Permutations indexed by element id (lexicographic order).
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn perm_id(&self, w: &Permutation) -> Option<usize> {
        self.perms.binary_search(w).ok()
    }
}

/// Standard in-place next-permutation step; returns `false` after the last
/// (descending) arrangement.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("tail has a larger entry");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Builds the weak order on `(n + 1)!` permutations, with covers given by
/// single descent swaps; fails fast when the element count exceeds `budget`.
pub fn build_weak_order(n: usize, budget: usize) -> Result<WeakOrder, WeakError> {
    if n < 1 {
        return Err(WeakError::InvalidPermutation("rank must be at least 1"));
    }
    let mut size: usize = 1;
    for k in 2..=(n + 1) {
        size = size
            .checked_mul(k)
            .filter(|&s| s <= budget)
            .ok_or(WeakError::BudgetExceeded(budget))?;
    }
    let mut perms = Vec::with_capacity(size);
    let mut line: Vec<usize> = (0..=n).collect();
    loop {
        perms.push(Permutation(line.clone()));
        if !next_permutation(&mut line) {
            break;
        }
    }
    debug_assert_eq!(perms.len(), size);
    let index: HashMap<&Permutation, usize> =
        perms.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut covers = Vec::new();
    for (hi, w) in perms.iter().enumerate() {
        for below in w.weak_covers_below() {
            covers.push((index[&below], hi));
        }
    }
    let ids: Vec<usize> = (0..perms.len()).collect();
    let lattice = FiniteLattice::from_covers(&ids, &covers)
        .expect("weak order is a lattice");
    Ok(WeakOrder { n, perms, lattice })
}
