//! Indecomposable modules of `RA_n`.
//!
//! `RA_n` is the path algebra of the quiver with vertices `1, …, n`, arrows
//! `a_i : i -> i+1` and `a_i* : i+1 -> i`, modulo all compositions
//! `a_i a_i*` and `a_i* a_i`. Its indecomposables are exactly the string
//! modules supported on an interval `[p, q]` with one orientation letter
//! per edge: `R` when `a_i` acts on the module, `L` when `a_i*` does. All
//! vertex spaces are at most one-dimensional, which keeps every operation
//! here purely combinatorial; `hom_dim_oracle` double-checks the interval
//! combinatorics with exact integer linear algebra.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised by string-module operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringError {
    /// Rank must be at least 1.
    #[error("rank must be at least 1")]
    InvalidRank,
    /// Support bounds or word length are inconsistent.
    #[error("invalid module data: {0}")]
    InvalidModule(&'static str),
    /// A requested interval leaves the module's support.
    #[error("interval [{0}, {1}] is not inside the support")]
    OutOfSupport(usize, usize),
    /// Two modules of different rank were combined.
    #[error("modules have different ranks")]
    RankMismatch,
    /// `glue` was applied to modules with intersecting supports.
    #[error("supports overlap; no gluing exists")]
    OverlappingSupports,
}

/// Orientation of one edge of a string: `R` means the raising arrow
/// `a_i : i -> i+1` acts, `L` means the lowering arrow `a_i* : i+1 -> i`
/// does. The derived order `L < R` reads words as binary numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    L,
    R,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::L => Orientation::R,
            Orientation::R => Orientation::L,
        }
    }

    fn to_char(self) -> char {
        match self {
            Orientation::L => 'L',
            Orientation::R => 'R',
        }
    }

    fn from_char(c: char) -> Result<Self, StringError> {
        match c {
            'L' => Ok(Orientation::L),
            'R' => Ok(Orientation::R),
            _ => Err(StringError::InvalidModule("word letters must be L or R")),
        }
    }
}

/// An indecomposable `RA_n`-module: a support interval `[p, q]` inside
/// `[1, n]` and one [`Orientation`] per edge `p, …, q-1`.
///
/// The derived ordering (by support, then word) is the canonical order used
/// for all deterministic enumerations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StringModule {
    n: usize,
    p: usize,
    q: usize,
    word: Vec<Orientation>,
}

/// Stable JSON form of a module: `{"p": 1, "q": 3, "word": "RL"}`. The rank
/// is carried by context, not by the record.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleJson {
    pub p: usize,
    pub q: usize,
    pub word: String,
}

impl StringModule {
    /// Builds the string with support `[p, q]` and the given edge word
    /// (`word.len()` must be `q - p`).
    pub fn new(n: usize, p: usize, q: usize, word: Vec<Orientation>) -> Result<Self, StringError> {
        if n < 1 {
            return Err(StringError::InvalidRank);
        }
        if !(1 <= p && p <= q && q <= n) {
            return Err(StringError::InvalidModule("need 1 <= p <= q <= n"));
        }
        if word.len() != q - p {
            return Err(StringError::InvalidModule("word length must be q - p"));
        }
        Ok(StringModule { n, p, q, word })
    }

    /// The simple module at vertex `i`.
    pub fn simple(n: usize, i: usize) -> Result<Self, StringError> {
        StringModule::new(n, i, i, Vec::new())
    }

    pub fn from_json(n: usize, json: &ModuleJson) -> Result<Self, StringError> {
        let word = json
            .word
            .chars()
            .map(Orientation::from_char)
            .collect::<Result<Vec<_>, _>>()?;
        StringModule::new(n, json.p, json.q, word)
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            p: self.p,
            q: self.q,
            word: self.word.iter().map(|o| o.to_char()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Support interval `(p, q)`.
    pub fn support(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn word(&self) -> &[Orientation] {
        &self.word
    }

    pub fn is_simple(&self) -> bool {
        self.p == self.q
    }

    /// Orientation of edge `i` (connecting vertices `i` and `i+1`), for
    /// `p <= i < q`.
    fn word_at(&self, i: usize) -> Orientation {
        self.word[i - self.p]
    }

    /// Vertices `i` with `a_i*` acting, i.e. edges oriented `L`.
    pub fn l_set(&self) -> Vec<usize> {
        (self.p..self.q)
            .filter(|&i| self.word_at(i) == Orientation::L)
            .collect()
    }

    /// Vertices `i` with `a_i` acting, i.e. edges oriented `R`.
    pub fn r_set(&self) -> Vec<usize> {
        (self.p..self.q)
            .filter(|&i| self.word_at(i) == Orientation::R)
            .collect()
    }

    /// Restriction to the interval `[s, t]`, which must sit inside the
    /// support.
    pub fn substring(&self, s: usize, t: usize) -> Result<StringModule, StringError> {
        if !(self.p <= s && s <= t && t <= self.q) {
            return Err(StringError::OutOfSupport(s, t));
        }
        StringModule::new(self.n, s, t, self.word[s - self.p..t - self.p].to_vec())
    }

    /// Is the substring on `[s, t]` predecessor closed, i.e. a quotient of
    /// this module? Boundary test: the cut edges must point out of the
    /// interval (`L` on the left cut, `R` on the right cut).
    fn factor_interval(&self, s: usize, t: usize) -> bool {
        (s == self.p || self.word_at(s - 1) == Orientation::L)
            && (t == self.q || self.word_at(t) == Orientation::R)
    }

    /// Is the substring on `[s, t]` successor closed, i.e. a submodule?
    fn submodule_interval(&self, s: usize, t: usize) -> bool {
        (s == self.p || self.word_at(s - 1) == Orientation::R)
            && (t == self.q || self.word_at(t) == Orientation::L)
    }

    /// All indecomposable quotients (including the module itself), in
    /// canonical order.
    pub fn indecomposable_factors(&self) -> Vec<StringModule> {
        let mut out = Vec::new();
        for s in self.p..=self.q {
            for t in s..=self.q {
                if self.factor_interval(s, t) {
                    out.push(self.substring(s, t).expect("interval inside support"));
                }
            }
        }
        out.sort();
        out
    }

    /// All indecomposable submodules (including the module itself), in
    /// canonical order.
    pub fn indecomposable_submodules(&self) -> Vec<StringModule> {
        let mut out = Vec::new();
        for s in self.p..=self.q {
            for t in s..=self.q {
                if self.submodule_interval(s, t) {
                    out.push(self.substring(s, t).expect("interval inside support"));
                }
            }
        }
        out.sort();
        out
    }

    /// Whether `sub` occurs as a successor-closed substring (= submodule)
    /// of `self`.
    pub fn has_successor_closed_substring(&self, sub: &StringModule) -> bool {
        self.n == sub.n
            && self.p <= sub.p
            && sub.q <= self.q
            && (sub.p..sub.q).all(|i| self.word_at(i) == sub.word_at(i))
            && self.submodule_interval(sub.p, sub.q)
    }

    /// `dim Hom(self, other)` by the interval rule: common substrings that
    /// are predecessor closed in the source and successor closed in the
    /// target.
    pub fn hom_dim(&self, other: &StringModule) -> Result<usize, StringError> {
        if self.n != other.n {
            return Err(StringError::RankMismatch);
        }
        let lo = self.p.max(other.p);
        let hi = self.q.min(other.q);
        let mut count = 0;
        for s in lo..=hi {
            for t in s..=hi {
                let agree = (s..t).all(|i| self.word_at(i) == other.word_at(i));
                if agree && self.factor_interval(s, t) && other.submodule_interval(s, t) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// `dim Hom(self, other)` by exact linear algebra: one scalar unknown
    /// per common vertex, one commuting condition per quiver arrow.
    pub fn hom_dim_oracle(&self, other: &StringModule) -> Result<usize, StringError> {
        if self.n != other.n {
            return Err(StringError::RankMismatch);
        }
        let lo = self.p.max(other.p);
        let hi = self.q.min(other.q);
        if lo > hi {
            return Ok(0);
        }
        let unknowns: Vec<usize> = (lo..=hi).collect();
        let col = |v: usize| -> Option<usize> { unknowns.iter().position(|&u| u == v) };

        let acts_r = |m: &StringModule, e: usize| m.p <= e && e < m.q && m.word_at(e) == Orientation::R;
        let acts_l = |m: &StringModule, e: usize| m.p <= e && e < m.q && m.word_at(e) == Orientation::L;
        let supports = |m: &StringModule, v: usize| m.p <= v && v <= m.q;

        let mut rows: Vec<Vec<i64>> = Vec::new();
        for e in 1..self.n {
            // Arrow a_e : e -> e+1. Condition f_{e+1} ∘ M(a_e) = M'(a_e) ∘ f_e
            // exists when M has the domain vertex and M' the codomain vertex.
            if supports(self, e) && supports(other, e + 1) {
                let mut row = vec![0i64; unknowns.len()];
                if acts_r(self, e) {
                    row[col(e + 1).expect("codomain in both supports")] += 1;
                }
                if acts_r(other, e) {
                    row[col(e).expect("domain in both supports")] -= 1;
                }
                if row.iter().any(|&c| c != 0) {
                    rows.push(row);
                }
            }
            // Arrow a_e* : e+1 -> e.
            if supports(self, e + 1) && supports(other, e) {
                let mut row = vec![0i64; unknowns.len()];
                if acts_l(self, e) {
                    row[col(e).expect("codomain in both supports")] += 1;
                }
                if acts_l(other, e) {
                    row[col(e + 1).expect("domain in both supports")] -= 1;
                }
                if row.iter().any(|&c| c != 0) {
                    rows.push(row);
                }
            }
        }
        Ok(unknowns.len() - exact_rank(rows, unknowns.len()))
    }

    /// Every string module here is a brick: its endomorphisms are scalars.
    pub fn is_brick(&self) -> bool {
        self.hom_dim(self).expect("same rank") == 1
    }

    /// Reverses all arrows (the standard duality composed with the
    /// algebra's own symmetry `a_i <-> a_i*`): the word flips letterwise.
    pub fn dualize(&self) -> StringModule {
        StringModule {
            n: self.n,
            p: self.p,
            q: self.q,
            word: self.word.iter().map(|o| o.flip()).collect(),
        }
    }

    /// The inversion pair `(p - 1, q)` on the node set `{0, …, n}`.
    pub fn inv_pair(&self) -> (usize, usize) {
        (self.p - 1, self.q)
    }
}

impl std::fmt::Display for StringModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_simple() {
            write!(f, "S{}", self.p)
        } else {
            let word: String = self.word.iter().map(|o| o.to_char()).collect();
            write!(f, "{}-{}:{}", self.p, self.q, word)
        }
    }
}

/// The unique nonsplit extension of `quot` by `sub` when their supports are
/// adjacent intervals: the union string whose connecting edge points toward
/// `sub`, making `sub` successor closed in the result. Returns `Ok(None)`
/// for disjoint non-adjacent supports and an error for overlapping ones.
pub fn glue(sub: &StringModule, quot: &StringModule) -> Result<Option<StringModule>, StringError> {
    if sub.n != quot.n {
        return Err(StringError::RankMismatch);
    }
    if sub.p <= quot.q && quot.p <= sub.q {
        return Err(StringError::OverlappingSupports);
    }
    if quot.q + 1 == sub.p {
        // quot sits below sub: the connecting edge rises into sub.
        let mut word = quot.word.clone();
        word.push(Orientation::R);
        word.extend_from_slice(&sub.word);
        Ok(Some(StringModule::new(sub.n, quot.p, sub.q, word)?))
    } else if sub.q + 1 == quot.p {
        // quot sits above sub: the connecting edge descends into sub.
        let mut word = sub.word.clone();
        word.push(Orientation::L);
        word.extend_from_slice(&quot.word);
        Ok(Some(StringModule::new(sub.n, sub.p, quot.q, word)?))
    } else {
        Ok(None)
    }
}

/// All indecomposables of `RA_n` in canonical order (by support, then word
/// read as binary with `L < R`).
pub fn enumerate_indecomposables(n: usize) -> Result<Vec<StringModule>, StringError> {
    if n < 1 {
        return Err(StringError::InvalidRank);
    }
    let mut out = Vec::new();
    for p in 1..=n {
        for q in p..=n {
            let len = q - p;
            for mask in 0u32..(1 << len) {
                let word: Vec<Orientation> = (0..len)
                    .map(|k| {
                        if mask >> (len - 1 - k) & 1 == 1 {
                            Orientation::R
                        } else {
                            Orientation::L
                        }
                    })
                    .collect();
                out.push(StringModule::new(n, p, q, word)?);
            }
        }
    }
    Ok(out)
}

/// Rank of a small integer matrix by fraction-free Gaussian elimination;
/// exact, no floating point.
fn exact_rank(mut rows: Vec<Vec<i64>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[col];
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[col];
            if factor != 0 {
                for c in 0..cols {
                    row[c] = row[c] * pv - pivot_row[c] * factor;
                }
            }
        }
        rank += 1;
    }
    rank
}
