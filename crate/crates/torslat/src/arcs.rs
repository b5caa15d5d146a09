//! Arcs and noncrossing arc diagrams on `n + 1` nodes.
//!
//! An arc climbs from a bottom node `b` to a top node `t`, passing left or
//! right of each node strictly between them. Arcs are in bijection with the
//! indecomposable `RA_n`-modules ([`sigma`], [`sigma_inv`]): the support
//! `[b, t]` mirrors the module's support `[b+1, t]` and the side at node `k`
//! mirrors the orientation of edge `k`. Under this dictionary,
//! predecessor/successor-closed subarcs are quotients/submodules, so hom
//! spaces — and hence compatibility of canonical joinands — can be read off
//! the arcs alone. The compatible-clique complex assembled here is the
//! canonical join complex in disguise.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::strings::{Orientation, StringModule};

/// Errors raised by arc operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    /// Endpoints or side data are inconsistent.
    #[error("invalid arc data: {0}")]
    InvalidArc(&'static str),
    /// Arcs on different node counts were combined.
    #[error("arcs live on different node counts")]
    NodeCountMismatch,
    /// A pairwise predicate was applied to two copies of one arc.
    #[error("the two arcs are equal")]
    SameArc,
    /// `left_of` was asked about arcs that do not overlap.
    #[error("arcs do not overlap")]
    NotOverlapping,
    /// A diagram was assembled from incompatible arcs.
    #[error("arcs {0} and {1} are incompatible")]
    IncompatibleArcs(usize, usize),
    /// Enumeration exceeded the configured budget.
    #[error("budget of {0} exceeded")]
    BudgetExceeded(usize),
}

/// The side of a node an arc passes on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn from_orientation(o: Orientation) -> Side {
        match o {
            Orientation::L => Side::Left,
            Orientation::R => Side::Right,
        }
    }

    fn to_orientation(self) -> Orientation {
        match self {
            Side::Left => Orientation::L,
            Side::Right => Orientation::R,
        }
    }
}

/// An arc on the nodes `0, …, n`: endpoints `b < t` plus one [`Side`] per
/// node strictly between them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    n: usize,
    b: usize,
    t: usize,
    sides: Vec<Side>,
}

/// Stable JSON form of an arc: endpoints plus a node-to-side map, e.g.
/// `{"b": 0, "t": 3, "sides": {"1": "L", "2": "R"}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArcJson {
    pub b: usize,
    pub t: usize,
    pub sides: std::collections::BTreeMap<String, String>,
}

impl Arc {
    /// Builds an arc on nodes `0, …, n` from `b` to `t` (`sides.len()` must
    /// be `t - b - 1`).
    pub fn new(n: usize, b: usize, t: usize, sides: Vec<Side>) -> Result<Self, ArcError> {
        if n < 1 {
            return Err(ArcError::InvalidArc("need at least two nodes"));
        }
        if !(b < t && t <= n) {
            return Err(ArcError::InvalidArc("need 0 <= b < t <= n"));
        }
        if sides.len() != t - b - 1 {
            return Err(ArcError::InvalidArc("side count must be t - b - 1"));
        }
        Ok(Arc { n, b, t, sides })
    }

    /// Number of nodes minus one (the rank of the mirrored algebra).
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn bottom(&self) -> usize {
        self.b
    }

    pub fn top(&self) -> usize {
        self.t
    }

    /// Side at node `k`, for `b < k < t`.
    pub fn side_at(&self, k: usize) -> Side {
        self.sides[k - self.b - 1]
    }

    /// Nodes passed on the left.
    pub fn l_nodes(&self) -> Vec<usize> {
        self.interior()
            .filter(|&k| self.side_at(k) == Side::Left)
            .collect()
    }

    /// Nodes passed on the right.
    pub fn r_nodes(&self) -> Vec<usize> {
        self.interior()
            .filter(|&k| self.side_at(k) == Side::Right)
            .collect()
    }

    /// Open support `(b, t)`.
    fn interior(&self) -> impl Iterator<Item = usize> + '_ {
        (self.b + 1)..self.t
    }

    fn supports(&self, k: usize) -> bool {
        self.b <= k && k <= self.t
    }

    fn interior_contains(&self, k: usize) -> bool {
        self.b < k && k < self.t
    }

    /// Do the closed support of one arc and the open support of the other
    /// intersect (in either order)?
    pub fn overlaps(&self, other: &Arc) -> bool {
        self.interior().any(|k| other.supports(k))
            || other.interior().any(|k| self.supports(k))
    }

    /// Is `sub` a subarc: support contained in ours, same side at every
    /// node interior to `sub`?
    pub fn is_subarc(&self, sub: &Arc) -> bool {
        self.n == sub.n
            && self.b <= sub.b
            && sub.t <= self.t
            && sub.interior().all(|k| self.side_at(k) == sub.side_at(k))
    }

    /// Subarc whose endpoints we neither pass right of (bottom) nor left of
    /// (top); mirrors indecomposable quotients.
    pub fn is_pred_closed_subarc(&self, sub: &Arc) -> bool {
        self.is_subarc(sub)
            && (sub.b == self.b || self.side_at(sub.b) != Side::Right)
            && (sub.t == self.t || self.side_at(sub.t) != Side::Left)
    }

    /// Subarc whose endpoints we neither pass left of (bottom) nor right of
    /// (top); mirrors indecomposable submodules.
    pub fn is_succ_closed_subarc(&self, sub: &Arc) -> bool {
        self.is_subarc(sub)
            && (sub.b == self.b || self.side_at(sub.b) != Side::Left)
            && (sub.t == self.t || self.side_at(sub.t) != Side::Right)
    }

    pub fn to_json(&self) -> ArcJson {
        ArcJson {
            b: self.b,
            t: self.t,
            sides: self
                .interior()
                .map(|k| {
                    let s = match self.side_at(k) {
                        Side::Left => "L",
                        Side::Right => "R",
                    };
                    (k.to_string(), s.to_string())
                })
                .collect(),
        }
    }
}

impl std::fmt::Display for Arc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}..{}", self.b, self.t)?;
        for k in self.interior() {
            let s = match self.side_at(k) {
                Side::Left => 'L',
                Side::Right => 'R',
            };
            write!(f, " {}{}", s, k)?;
        }
        write!(f, ")")
    }
}

/// The arc of an indecomposable module: endpoints `(p - 1, q)`, side at node
/// `k` given by the orientation of edge `k`.
pub fn sigma(module: &StringModule) -> Arc {
    let (p, q) = module.support();
    Arc {
        n: module.rank(),
        b: p - 1,
        t: q,
        sides: module
            .word()
            .iter()
            .map(|&o| Side::from_orientation(o))
            .collect(),
    }
}

/// Inverse of [`sigma`].
pub fn sigma_inv(arc: &Arc) -> StringModule {
    StringModule::new(
        arc.n,
        arc.b + 1,
        arc.t,
        arc.sides.iter().map(|&s| s.to_orientation()).collect(),
    )
    .expect("arc data is a valid module")
}

/// All arcs on `n + 1` nodes, in the canonical order inherited from the
/// module enumeration.
pub fn enumerate_arcs(n: usize) -> Result<Vec<Arc>, ArcError> {
    let modules = crate::strings::enumerate_indecomposables(n)
        .map_err(|_| ArcError::InvalidArc("need at least two nodes"))?;
    Ok(modules.iter().map(sigma).collect())
}

/// Number of common subarcs that are predecessor closed in `alpha` and
/// successor closed in `alpha_prime`; equals `dim Hom` of the mirrored
/// modules.
pub fn hom_count_via_arcs(alpha: &Arc, alpha_prime: &Arc) -> Result<usize, ArcError> {
    if alpha.n != alpha_prime.n {
        return Err(ArcError::NodeCountMismatch);
    }
    let lo = alpha.b.max(alpha_prime.b);
    let hi = alpha.t.min(alpha_prime.t);
    let mut count = 0;
    for x in lo..hi {
        for y in (x + 1)..=hi {
            let agree = ((x + 1)..y).all(|k| alpha.side_at(k) == alpha_prime.side_at(k));
            if !agree {
                continue;
            }
            let sides: Vec<Side> = ((x + 1)..y).map(|k| alpha.side_at(k)).collect();
            let beta = Arc::new(alpha.n, x, y, sides).expect("interval inside supports");
            if alpha.is_pred_closed_subarc(&beta) && alpha_prime.is_succ_closed_subarc(&beta) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Two distinct arcs are compatible when no subarc is predecessor closed in
/// one and successor closed in the other — i.e. the mirrored modules are
/// hom-orthogonal.
pub fn compatible(alpha: &Arc, alpha_prime: &Arc) -> Result<bool, ArcError> {
    if alpha.n != alpha_prime.n {
        return Err(ArcError::NodeCountMismatch);
    }
    if alpha == alpha_prime {
        return Err(ArcError::SameArc);
    }
    Ok(hom_count_via_arcs(alpha, alpha_prime)? == 0
        && hom_count_via_arcs(alpha_prime, alpha)? == 0)
}

/// Is `alpha` left of `alpha_prime`? Defined for overlapping arcs:
/// everything of `alpha` (right passes and endpoints) seen strictly inside
/// `alpha_prime` lies on its right, and endpoints of `alpha_prime` seen
/// strictly inside `alpha` lie on its left.
pub fn left_of(alpha: &Arc, alpha_prime: &Arc) -> Result<bool, ArcError> {
    if alpha.n != alpha_prime.n {
        return Err(ArcError::NodeCountMismatch);
    }
    if alpha == alpha_prime {
        return Err(ArcError::SameArc);
    }
    if !alpha.overlaps(alpha_prime) {
        return Err(ArcError::NotOverlapping);
    }
    let first = alpha
        .r_nodes()
        .into_iter()
        .chain([alpha.b, alpha.t])
        .filter(|&k| alpha_prime.interior_contains(k))
        .all(|k| alpha_prime.side_at(k) == Side::Right);
    let second = [alpha_prime.b, alpha_prime.t]
        .into_iter()
        .filter(|&k| alpha.interior_contains(k))
        .all(|k| alpha.side_at(k) == Side::Left);
    Ok(first && second)
}

/// A noncrossing arc diagram: a set of pairwise compatible arcs on a common
/// node count, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    n: usize,
    arcs: Vec<Arc>,
}

impl ArcDiagram {
    /// Validates that the arcs share a node count, are distinct, and are
    /// pairwise compatible; sorts them canonically.
    pub fn new(n: usize, mut arcs: Vec<Arc>) -> Result<Self, ArcError> {
        for a in &arcs {
            if a.n != n {
                return Err(ArcError::NodeCountMismatch);
            }
        }
        arcs.sort();
        for i in 1..arcs.len() {
            if arcs[i - 1] == arcs[i] {
                return Err(ArcError::SameArc);
            }
        }
        for i in 0..arcs.len() {
            for j in (i + 1)..arcs.len() {
                if !compatible(&arcs[i], &arcs[j])? {
                    return Err(ArcError::IncompatibleArcs(i, j));
                }
            }
        }
        Ok(ArcDiagram { n, arcs })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }
}

/// All faces of the arc complex on `n + 1` nodes: every set of pairwise
/// compatible arcs (including the empty set), as sorted id vectors into
/// [`enumerate_arcs`]. Fails with [`ArcError::BudgetExceeded`] if more than
/// `budget` faces would be produced.
pub fn arc_complex(n: usize, budget: usize) -> Result<BTreeSet<Vec<usize>>, ArcError> {
    let arcs = enumerate_arcs(n)?;
    let m = arcs.len();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            if compatible(&arcs[i], &arcs[j])? {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    faces.insert(Vec::new());
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, &mut Vec::new(), (0..m).collect(), Vec::new(), &mut cliques);
    for clique in cliques {
        // Downward closure: every subset of a clique is a face.
        let k = clique.len();
        for mask in 1u64..(1 << k) {
            let face: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| clique[i]).collect();
            faces.insert(face);
            if faces.len() > budget {
                return Err(ArcError::BudgetExceeded(budget));
            }
        }
    }
    Ok(faces)
}

/// Pivoting Bron–Kerbosch over the compatibility graph; deterministic
/// (candidates scanned in increasing id, pivot maximizes |P ∩ N(u)| with
/// smallest-id tie break).
fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| {
            let deg = p.iter().filter(|&&v| adj[u][v]).count();
            (deg, std::cmp::Reverse(u))
        })
        .expect("p or x nonempty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let p2: Vec<usize> = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let x2: Vec<usize> = x.iter().copied().filter(|&w| adj[v][w]).collect();
        r.push(v);
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Renders a diagram as a standalone SVG: nodes in a vertical column (node
/// `n` on top), each arc a chain of cubic Bézier bulges, left or right of
/// each interior node per its sides. Deterministic output.
pub fn render_svg(diagram: &ArcDiagram) -> String {
    render_arcs_svg(diagram.n, &diagram.arcs)
}

/// Same rendering for a bare arc list (no compatibility requirement), e.g.
/// to draw every arc on `n + 1` nodes at once.
pub fn render_arcs_svg(n: usize, arcs: &[Arc]) -> String {
    let spacing = 36.0_f64;
    let margin = 24.0_f64;
    let max_amp = 14.0 + 6.0 * arcs.len().saturating_sub(1) as f64;
    let x_col = margin + max_amp;
    let width = 2.0 * x_col + 30.0;
    let height = 2.0 * margin + spacing * n as f64;
    let node_y = |k: usize| margin + spacing * (n - k) as f64;

    let palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.1}\" height=\"{:.1}\" viewBox=\"0 0 {:.1} {:.1}\">\n",
        width, height, width, height
    ));
    for (i, arc) in arcs.iter().enumerate() {
        let amp = 14.0 + 6.0 * i as f64;
        let mut points = vec![(x_col, node_y(arc.b))];
        for k in arc.interior() {
            let x = match arc.side_at(k) {
                Side::Left => x_col - amp,
                Side::Right => x_col + amp,
            };
            points.push((x, node_y(k)));
        }
        points.push((x_col, node_y(arc.t)));
        let mut d = format!("M {:.1} {:.1}", points[0].0, points[0].1);
        for w in points.windows(2) {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            let ym = (y0 + y1) / 2.0;
            d.push_str(&format!(" C {:.1} {:.1}, {:.1} {:.1}, {:.1} {:.1}", x0, ym, x1, ym, x1, y1));
        }
        out.push_str(&format!(
            "  <path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
            d,
            palette[i % palette.len()]
        ));
    }
    for k in 0..=n {
        out.push_str(&format!(
            "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"3.5\" fill=\"black\"/>\n",
            x_col,
            node_y(k)
        ));
        out.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" font-family=\"sans-serif\">{}</text>\n",
            x_col + max_amp + 8.0,
            node_y(k) + 4.0,
            k
        ));
    }
    out.push_str("</svg>\n");
    out
}
