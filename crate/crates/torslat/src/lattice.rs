//! Generic finite lattice engine.
//!
//! A [`FiniteLattice`] is built from an explicit element list and Hasse
//! cover relation via [`FiniteLattice::from_covers`], which rejects cyclic,
//! redundant, or non-lattice input. On top of the verified order it offers
//! joins and meets, join-irreducible elements, canonical join
//! representations and the canonical join complex, exact isomorphism
//! search, and DOT/JSON export. Everything is deterministic and immutable
//! after construction; intended scale is a few hundred elements.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::{json, Value};
use thiserror::Error;

/// Errors raised while building or querying a [`FiniteLattice`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// The element list was empty.
    #[error("lattice needs at least one element")]
    Empty,
    /// An element id appeared twice in the element list.
    #[error("duplicate element id {0}")]
    DuplicateElement(usize),
    /// A cover pair referenced an id missing from the element list.
    #[error("unknown element id {0}")]
    UnknownElement(usize),
    /// The cover relation contains a directed cycle.
    #[error("cover relation contains a cycle")]
    CycleDetected,
    /// A declared cover is implied by transitivity (or duplicated), so the
    /// input is not a Hasse diagram.
    #[error("cover ({0}, {1}) is redundant: implied by other covers")]
    NonHasseEdge(usize, usize),
    /// Witness pair without a unique least upper bound or greatest lower
    /// bound.
    #[error("not a lattice: elements {0} and {1} lack a unique join or meet")]
    NotALattice(usize, usize),
    /// A label was attached to a pair that is not a cover.
    #[error("label attached to non-cover pair ({0}, {1})")]
    LabelOnNonCover(usize, usize),
    /// `count_check_covers_vs_joinands` requires every element to have a
    /// canonical join representation.
    #[error("element {0} has no canonical join representation")]
    MissingCjr(usize),
}

/// Canonical join representation of a single element: the unique lowest
/// irredundant antichain of join-irreducibles joining to `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinRepresentation {
    pub target: usize,
    pub joinands: BTreeSet<usize>,
}

/// Fixed-width bitset used for up-sets and down-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn empty(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn or_assign(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn and(&self, other: &BitRow) -> BitRow {
        BitRow(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(block, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(block * 64 + bit)
                }
            })
        })
    }
}

/// A finite lattice presented by its Hasse diagram.
///
/// Element ids are opaque integers chosen by the caller; covers are `(lower,
/// upper)` pairs and may optionally carry integer labels (e.g. brick ids).
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    ids: Vec<usize>,
    pos: HashMap<usize, usize>,
    covers: Vec<(usize, usize)>,
    labels: BTreeMap<(usize, usize), usize>,
    up: Vec<BitRow>,
    down: Vec<BitRow>,
    up_count: Vec<usize>,
    down_count: Vec<usize>,
    lower_adj: Vec<Vec<usize>>,
    upper_adj: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from distinct element ids and Hasse covers
    /// `(lower, upper)`.
    ///
    /// Rejects cyclic input, covers implied by transitivity, and posets in
    /// which some pair of elements lacks a unique least upper bound or
    /// greatest lower bound.
    pub fn from_covers(elements: &[usize], covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        if elements.is_empty() {
            return Err(LatticeError::Empty);
        }
        let mut pos = HashMap::with_capacity(elements.len());
        for (i, &id) in elements.iter().enumerate() {
            if pos.insert(id, i).is_some() {
                return Err(LatticeError::DuplicateElement(id));
            }
        }
        let k = elements.len();
        let mut cover_pos = Vec::with_capacity(covers.len());
        let mut seen = BTreeSet::new();
        for &(lo, hi) in covers {
            let l = *pos.get(&lo).ok_or(LatticeError::UnknownElement(lo))?;
            let h = *pos.get(&hi).ok_or(LatticeError::UnknownElement(hi))?;
            if l == h {
                return Err(LatticeError::CycleDetected);
            }
            if !seen.insert((l, h)) {
                return Err(LatticeError::NonHasseEdge(lo, hi));
            }
            cover_pos.push((l, h));
        }

        let mut lower_adj = vec![Vec::new(); k];
        let mut upper_adj = vec![Vec::new(); k];
        for &(l, h) in &cover_pos {
            upper_adj[l].push(h);
            lower_adj[h].push(l);
        }
        for adj in lower_adj.iter_mut().chain(upper_adj.iter_mut()) {
            adj.sort_unstable();
        }

        // Kahn topological sort, bottom-up.
        let mut indeg: Vec<usize> = lower_adj.iter().map(Vec::len).collect();
        let mut queue: Vec<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(k);
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &w in &upper_adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if topo.len() != k {
            return Err(LatticeError::CycleDetected);
        }

        // Reflexive-transitive closure along the covers.
        let mut up = vec![BitRow::empty(k); k];
        for &v in topo.iter().rev() {
            up[v].set(v);
            let succs = upper_adj[v].clone();
            for w in succs {
                let row = up[w].clone();
                up[v].or_assign(&row);
            }
        }
        let mut down = vec![BitRow::empty(k); k];
        for (v, row) in up.iter().enumerate() {
            for w in row.ones() {
                down[w].set(v);
            }
        }

        // Hasse minimality: a cover (v, w) must not be implied by a longer
        // path, i.e. no other direct successor of v lies below w.
        for &(v, w) in &cover_pos {
            for &u in &upper_adj[v] {
                if u != w && up[u].get(w) {
                    return Err(LatticeError::NonHasseEdge(elements[v], elements[w]));
                }
            }
        }

        let up_count: Vec<usize> = up.iter().map(BitRow::count).collect();
        let down_count: Vec<usize> = down.iter().map(BitRow::count).collect();

        // Every pair needs a unique least upper bound and greatest lower
        // bound: the bound, if it exists, is the unique member z of the
        // common-bound set whose own bound set equals it.
        for x in 0..k {
            for y in (x + 1)..k {
                let ub = up[x].and(&up[y]);
                let c = ub.count();
                let join_ok = ub
                    .ones()
                    .any(|z| up_count[z] == c && up[z] == ub);
                if !join_ok {
                    return Err(LatticeError::NotALattice(elements[x], elements[y]));
                }
                let lb = down[x].and(&down[y]);
                let c = lb.count();
                let meet_ok = lb
                    .ones()
                    .any(|z| down_count[z] == c && down[z] == lb);
                if !meet_ok {
                    return Err(LatticeError::NotALattice(elements[x], elements[y]));
                }
            }
        }

        let bottom = (0..k)
            .find(|&v| down_count[v] == 1)
            .expect("validated lattice has a minimum");
        let top = (0..k)
            .find(|&v| up_count[v] == 1)
            .expect("validated lattice has a maximum");

        Ok(FiniteLattice {
            ids: elements.to_vec(),
            pos,
            covers: cover_pos,
            labels: BTreeMap::new(),
            up,
            down,
            up_count,
            down_count,
            lower_adj,
            upper_adj,
            bottom,
            top,
        })
    }

    /// Attaches labels to cover pairs (given by external ids).
    pub fn with_labels(
        mut self,
        labels: BTreeMap<(usize, usize), usize>,
    ) -> Result<Self, LatticeError> {
        for &(lo, hi) in labels.keys() {
            let l = self.position(lo)?;
            let h = self.position(hi)?;
            if !self.covers.contains(&(l, h)) {
                return Err(LatticeError::LabelOnNonCover(lo, hi));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    fn position(&self, id: usize) -> Result<usize, LatticeError> {
        self.pos
            .get(&id)
            .copied()
            .ok_or(LatticeError::UnknownElement(id))
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Element ids in construction order.
    pub fn elements(&self) -> &[usize] {
        &self.ids
    }

    /// Cover pairs `(lower, upper)` as external ids, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self
            .covers
            .iter()
            .map(|&(l, h)| (self.ids[l], self.ids[h]))
            .collect();
        v.sort_unstable();
        v
    }

    /// Label of the cover `(lower, upper)`, if any.
    pub fn label(&self, lower: usize, upper: usize) -> Option<usize> {
        self.labels.get(&(lower, upper)).copied()
    }

    pub fn bottom(&self) -> usize {
        self.ids[self.bottom]
    }

    pub fn top(&self) -> usize {
        self.ids[self.top]
    }

    /// Order relation `a <= b`.
    pub fn leq(&self, a: usize, b: usize) -> Result<bool, LatticeError> {
        let (x, y) = (self.position(a)?, self.position(b)?);
        Ok(self.up[x].get(y))
    }

    fn join2(&self, x: usize, y: usize) -> usize {
        let ub = self.up[x].and(&self.up[y]);
        let c = ub.count();
        let z = ub
            .ones()
            .find(|&z| self.up_count[z] == c && self.up[z] == ub)
            .expect("validated lattice has joins");
        z
    }

    fn meet2(&self, x: usize, y: usize) -> usize {
        let lb = self.down[x].and(&self.down[y]);
        let c = lb.count();
        let z = lb
            .ones()
            .find(|&z| self.down_count[z] == c && self.down[z] == lb)
            .expect("validated lattice has meets");
        z
    }

    /// Join of a (possibly empty) list of elements; the empty join is the
    /// bottom element.
    pub fn join(&self, elems: &[usize]) -> Result<usize, LatticeError> {
        let mut acc = self.bottom;
        for &e in elems {
            acc = self.join2(acc, self.position(e)?);
        }
        Ok(self.ids[acc])
    }

    /// Meet of a (possibly empty) list of elements; the empty meet is the
    /// top element.
    pub fn meet(&self, elems: &[usize]) -> Result<usize, LatticeError> {
        let mut acc = self.top;
        for &e in elems {
            acc = self.meet2(acc, self.position(e)?);
        }
        Ok(self.ids[acc])
    }

    /// Elements covered by `w`, sorted by id.
    pub fn lower_covers(&self, w: usize) -> Result<Vec<usize>, LatticeError> {
        let p = self.position(w)?;
        let mut v: Vec<usize> = self.lower_adj[p].iter().map(|&l| self.ids[l]).collect();
        v.sort_unstable();
        Ok(v)
    }

    /// Elements covering `w`, sorted by id.
    pub fn upper_covers(&self, w: usize) -> Result<Vec<usize>, LatticeError> {
        let p = self.position(w)?;
        let mut v: Vec<usize> = self.upper_adj[p].iter().map(|&h| self.ids[h]).collect();
        v.sort_unstable();
        Ok(v)
    }

    /// Elements with exactly one lower cover, sorted by id.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.ids.len())
            .filter(|&p| self.lower_adj[p].len() == 1)
            .map(|p| self.ids[p])
            .collect();
        v.sort_unstable();
        v
    }

    /// Canonical join representation of `w`, or `None` if it does not
    /// exist.
    ///
    /// For each lower cover `m` of `w` the set `K_m = {x <= w : x v m = w}`
    /// must have a unique minimal element `j_m`; the candidate `{j_m}` is
    /// then verified to be an irredundant antichain of join-irreducibles
    /// joining to `w` that lies weakly below every irredundant join
    /// representation of `w` drawn from join-irreducibles below `w`.
    pub fn canonical_join_representation(
        &self,
        w: usize,
    ) -> Result<Option<JoinRepresentation>, LatticeError> {
        let wp = self.position(w)?;
        if wp == self.bottom {
            return Ok(Some(JoinRepresentation {
                target: w,
                joinands: BTreeSet::new(),
            }));
        }

        let mut joinands: BTreeSet<usize> = BTreeSet::new();
        for &m in &self.lower_adj[wp] {
            let mut k_m = BitRow::empty(self.ids.len());
            for x in self.down[wp].ones() {
                if self.join2(x, m) == wp {
                    k_m.set(x);
                }
            }
            let minimals: Vec<usize> = k_m
                .ones()
                .filter(|&x| self.down[x].and(&k_m).count() == 1)
                .collect();
            match minimals.as_slice() {
                &[j] => {
                    joinands.insert(j);
                }
                _ => return Ok(None),
            }
        }

        // The candidate must be an irredundant antichain of
        // join-irreducibles whose join is w.
        let a: Vec<usize> = joinands.iter().copied().collect();
        if a.iter().any(|&j| self.lower_adj[j].len() != 1) {
            return Ok(None);
        }
        for (i, &x) in a.iter().enumerate() {
            for &y in &a[i + 1..] {
                if self.up[x].get(y) || self.up[y].get(x) {
                    return Ok(None);
                }
            }
        }
        let fold_join = |elems: &[usize]| -> usize {
            elems.iter().fold(self.bottom, |acc, &e| self.join2(acc, e))
        };
        if fold_join(&a) != wp {
            return Ok(None);
        }
        for drop in 0..a.len() {
            let rest: Vec<usize> = a
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, &x)| x)
                .collect();
            if fold_join(&rest) == wp {
                return Ok(None);
            }
        }

        // Lowest among irredundant representations: any representation by
        // elements below w refines to one by join-irreducibles below w, so
        // the candidate fails minimality exactly when, for some joinand a,
        // the join-irreducibles below w that do not lie above a still join
        // to w.
        let jis: Vec<usize> = (0..self.ids.len())
            .filter(|&p| self.lower_adj[p].len() == 1 && self.down[wp].get(p))
            .collect();
        for &cand in &a {
            let others: Vec<usize> = jis
                .iter()
                .copied()
                .filter(|&j| !self.up[cand].get(j))
                .collect();
            if fold_join(&others) == wp {
                return Ok(None);
            }
        }

        Ok(Some(JoinRepresentation {
            target: w,
            joinands: joinands.iter().map(|&p| self.ids[p]).collect(),
        }))
    }

    /// Canonical join complex: the set of canonical join representations,
    /// each face sorted by element id. The empty face (representation of
    /// the bottom element) is always present.
    ///
    /// Panics if the computed face set is not downward closed — that would
    /// contradict the defining property of canonical join representations
    /// and indicates an engine bug.
    pub fn canonical_join_complex(&self) -> Result<Vec<Vec<usize>>, LatticeError> {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for &w in &self.ids {
            if let Some(rep) = self.canonical_join_representation(w)? {
                faces.insert(rep.joinands.into_iter().collect());
            }
        }
        for face in &faces {
            for drop in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(drop);
                assert!(
                    faces.contains(&sub),
                    "canonical join complex is not downward closed at {face:?}"
                );
            }
        }
        Ok(faces.into_iter().collect())
    }

    /// `true` when every element has as many canonical joinands as lower
    /// covers. Errors with [`LatticeError::MissingCjr`] if some element has
    /// no canonical join representation at all.
    pub fn count_check_covers_vs_joinands(&self) -> Result<bool, LatticeError> {
        for (p, &id) in self.ids.iter().enumerate() {
            match self.canonical_join_representation(id)? {
                None => return Err(LatticeError::MissingCjr(id)),
                Some(rep) => {
                    if rep.joinands.len() != self.lower_adj[p].len() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Searches for a cover-preserving bijection onto `other` by exact
    /// backtracking over degree/height-refined classes. Returns the mapping
    /// as `(self id, other id)` pairs sorted by the first component, or
    /// `None` if the lattices are not isomorphic.
    pub fn find_isomorphism(&self, other: &FiniteLattice) -> Option<Vec<(usize, usize)>> {
        let k = self.ids.len();
        if k != other.ids.len() || self.covers.len() != other.covers.len() {
            return None;
        }

        let colors_a = self.refined_colors();
        let colors_b = other.refined_colors();
        let mut count_a: BTreeMap<u64, usize> = BTreeMap::new();
        let mut count_b: BTreeMap<u64, usize> = BTreeMap::new();
        for &c in &colors_a {
            *count_a.entry(c).or_default() += 1;
        }
        for &c in &colors_b {
            *count_b.entry(c).or_default() += 1;
        }
        if count_a != count_b {
            return None;
        }

        // Most-constrained-first: rarest colors, then densest neighborhoods.
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&v| {
            (
                count_a[&colors_a[v]],
                usize::MAX - self.lower_adj[v].len() - self.upper_adj[v].len(),
                v,
            )
        });

        let mut image = vec![usize::MAX; k];
        let mut used = vec![false; k];
        if self.assign(other, &order, 0, &colors_a, &colors_b, &mut image, &mut used) {
            let mut pairs: Vec<(usize, usize)> = image
                .iter()
                .enumerate()
                .map(|(v, &u)| (self.ids[v], other.ids[u]))
                .collect();
            pairs.sort_unstable();
            Some(pairs)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn assign(
        &self,
        other: &FiniteLattice,
        order: &[usize],
        depth: usize,
        colors_a: &[u64],
        colors_b: &[u64],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for u in 0..other.ids.len() {
            if used[u] || colors_b[u] != colors_a[v] {
                continue;
            }
            for &x in &self.lower_adj[v] {
                if image[x] != usize::MAX && !other.lower_adj[u].contains(&image[x]) {
                    continue 'cand;
                }
            }
            for &x in &self.upper_adj[v] {
                if image[x] != usize::MAX && !other.upper_adj[u].contains(&image[x]) {
                    continue 'cand;
                }
            }
            // Mapped neighbors of u must correspondingly be neighbors of v.
            for &y in &other.lower_adj[u] {
                if let Some(x) = image.iter().position(|&m| m == y) {
                    if !self.lower_adj[v].contains(&x) {
                        continue 'cand;
                    }
                }
            }
            for &y in &other.upper_adj[u] {
                if let Some(x) = image.iter().position(|&m| m == y) {
                    if !self.upper_adj[v].contains(&x) {
                        continue 'cand;
                    }
                }
            }
            image[v] = u;
            used[u] = true;
            if self.assign(other, order, depth + 1, colors_a, colors_b, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[u] = false;
        }
        false
    }

    /// Iteratively refined node invariants (degrees, height, depth, and
    /// neighbor color multisets), stable under isomorphism.
    fn refined_colors(&self) -> Vec<u64> {
        let k = self.ids.len();
        let mut height = vec![0usize; k];
        let mut depth = vec![0usize; k];
        let topo = self.topo_order();
        for &v in &topo {
            for &w in &self.upper_adj[v] {
                height[w] = height[w].max(height[v] + 1);
            }
        }
        for &v in topo.iter().rev() {
            for &l in &self.lower_adj[v] {
                depth[l] = depth[l].max(depth[v] + 1);
            }
        }
        let mut colors: Vec<u64> = (0..k)
            .map(|v| {
                hash_tuple(&[
                    self.lower_adj[v].len() as u64,
                    self.upper_adj[v].len() as u64,
                    height[v] as u64,
                    depth[v] as u64,
                ])
            })
            .collect();
        for _ in 0..k.min(16) {
            let next: Vec<u64> = (0..k)
                .map(|v| {
                    let mut lo: Vec<u64> = self.lower_adj[v].iter().map(|&x| colors[x]).collect();
                    let mut hi: Vec<u64> = self.upper_adj[v].iter().map(|&x| colors[x]).collect();
                    lo.sort_unstable();
                    hi.sort_unstable();
                    let mut data = vec![colors[v], LO_SEP];
                    data.extend(lo);
                    data.push(HI_SEP);
                    data.extend(hi);
                    hash_tuple(&data)
                })
                .collect();
            if next == colors {
                break;
            }
            colors = next;
        }
        colors
    }

    fn topo_order(&self) -> Vec<usize> {
        let k = self.ids.len();
        let mut indeg: Vec<usize> = self.lower_adj.iter().map(Vec::len).collect();
        let mut queue: Vec<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(k);
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &w in &self.upper_adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        topo
    }

    /// DOT rendering of the Hasse diagram, edges directed lower -> upper.
    /// `node_label` names elements; `edge_label`, if given, renders cover
    /// labels.
    pub fn to_dot(
        &self,
        node_label: &dyn Fn(usize) -> String,
        edge_label: Option<&dyn Fn(usize) -> String>,
    ) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for &id in &self.ids {
            out.push_str(&format!("  \"{}\" [label=\"{}\"];\n", id, node_label(id)));
        }
        for (lo, hi) in self.covers() {
            match (edge_label, self.labels.get(&(lo, hi))) {
                (Some(f), Some(&label)) => {
                    out.push_str(&format!("  \"{lo}\" -> \"{hi}\" [label=\"{}\"];\n", f(label)));
                }
                _ => out.push_str(&format!("  \"{lo}\" -> \"{hi}\";\n")),
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: `{"elements": [...], "covers": [[lo, hi], ...],
    /// "labels": {"lo-hi": label, ...}}`.
    pub fn to_json(&self) -> Value {
        let covers: Vec<Value> = self
            .covers()
            .into_iter()
            .map(|(lo, hi)| json!([lo, hi]))
            .collect();
        let labels: BTreeMap<String, usize> = self
            .labels
            .iter()
            .map(|(&(lo, hi), &label)| (format!("{lo}-{hi}"), label))
            .collect();
        json!({
            "elements": self.ids,
            "covers": covers,
            "labels": labels,
        })
    }
}

fn hash_tuple(data: &[u64]) -> u64 {
    // FNV-1a over the word stream; stable across runs.
    let mut h: u64 = 0xcbf29ce484222325;
    for &word in data {
        for byte in word.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

const LO_SEP: u64 = 0x5eed_0001;
const HI_SEP: u64 = 0x5eed_0002;

#[cfg(test)]
mod tests {
    use super::*;

    /// N5: chain 0 < x < z < 1 and short side 0 < y < 1.
    /// Ids: 0 = bottom, 1 = x, 2 = y, 3 = z, 4 = top.
    fn n5() -> FiniteLattice {
        FiniteLattice::from_covers(&[0, 1, 2, 3, 4], &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)])
            .unwrap()
    }

    /// Diamond with three atoms a=1, b=2, c=3.
    fn diamond3() -> FiniteLattice {
        FiniteLattice::from_covers(
            &[0, 1, 2, 3, 4],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap()
    }

    #[test]
    fn single_element_lattice() {
        let l = FiniteLattice::from_covers(&[7], &[]).unwrap();
        assert_eq!(l.bottom(), 7);
        assert_eq!(l.top(), 7);
        assert_eq!(l.join(&[]).unwrap(), 7);
        assert_eq!(l.meet(&[]).unwrap(), 7);
        assert_eq!(
            l.canonical_join_representation(7).unwrap().unwrap().joinands,
            BTreeSet::new()
        );
    }

    #[test]
    fn n5_joins_meets_covers() {
        let l = n5();
        assert_eq!(l.join(&[1, 2]).unwrap(), 4, "x v y = top");
        assert_eq!(l.meet(&[3, 2]).unwrap(), 0, "z ^ y = bottom");
        assert_eq!(l.lower_covers(4).unwrap(), vec![2, 3]);
        assert_eq!(l.upper_covers(0).unwrap(), vec![1, 2]);
        assert_eq!(l.join_irreducibles(), vec![1, 2, 3]);
        assert_eq!(l.join(&[]).unwrap(), 0);
        assert_eq!(l.meet(&[]).unwrap(), 4);
        assert!(l.leq(1, 3).unwrap());
        assert!(!l.leq(1, 2).unwrap());
    }

    #[test]
    fn n5_canonical_join_representation() {
        let l = n5();
        // top = x v y canonically: K_z has least element y, K_y has least x.
        let rep = l.canonical_join_representation(4).unwrap().unwrap();
        assert_eq!(rep.joinands, BTreeSet::from([1, 2]));
        // join-irreducibles are their own representation
        for j in [1, 2, 3] {
            let rep = l.canonical_join_representation(j).unwrap().unwrap();
            assert_eq!(rep.joinands, BTreeSet::from([j]));
        }
    }

    #[test]
    fn n5_canonical_join_complex() {
        let l = n5();
        let faces = l.canonical_join_complex().unwrap();
        let expect: Vec<Vec<usize>> =
            vec![vec![], vec![1], vec![1, 2], vec![2], vec![3]];
        assert_eq!(faces, expect);
        assert!(l.count_check_covers_vs_joinands().unwrap());
    }

    #[test]
    fn diamond_top_has_no_cjr() {
        let l = diamond3();
        assert_eq!(l.canonical_join_representation(4).unwrap(), None);
        assert_eq!(
            l.count_check_covers_vs_joinands(),
            Err(LatticeError::MissingCjr(4))
        );
        // The complex still exists, consisting of the empty face and atoms.
        let faces = l.canonical_join_complex().unwrap();
        assert_eq!(faces, vec![vec![], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn absorption_on_fixtures() {
        for l in [n5(), diamond3()] {
            for &x in l.elements() {
                for &y in l.elements() {
                    let m = l.meet(&[x, y]).unwrap();
                    assert_eq!(l.join(&[x, m]).unwrap(), x);
                    let j = l.join(&[x, y]).unwrap();
                    assert_eq!(l.meet(&[x, j]).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn rejects_cycle() {
        let err = FiniteLattice::from_covers(&[0, 1], &[(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, LatticeError::CycleDetected);
        let err = FiniteLattice::from_covers(&[0], &[(0, 0)]).unwrap_err();
        assert_eq!(err, LatticeError::CycleDetected);
    }

    #[test]
    fn rejects_transitive_edge() {
        // 0 < 1 < 2 plus the redundant 0 < 2.
        let err =
            FiniteLattice::from_covers(&[0, 1, 2], &[(0, 1), (1, 2), (0, 2)]).unwrap_err();
        assert_eq!(err, LatticeError::NonHasseEdge(0, 2));
    }

    #[test]
    fn rejects_non_lattice() {
        // Two incomparable elements with two incomparable upper bounds.
        let err = FiniteLattice::from_covers(
            &[0, 1, 2, 3, 4, 5],
            &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)],
        )
        .unwrap_err();
        assert_eq!(err, LatticeError::NotALattice(1, 2));
    }

    #[test]
    fn rejects_two_minimal_elements() {
        let err = FiniteLattice::from_covers(&[0, 1, 2], &[(0, 2), (1, 2)]).unwrap_err();
        assert_eq!(err, LatticeError::NotALattice(0, 1));
    }

    #[test]
    fn rejects_bad_ids() {
        assert_eq!(
            FiniteLattice::from_covers(&[0, 0], &[]).unwrap_err(),
            LatticeError::DuplicateElement(0)
        );
        assert_eq!(
            FiniteLattice::from_covers(&[0], &[(0, 1)]).unwrap_err(),
            LatticeError::UnknownElement(1)
        );
        assert_eq!(
            FiniteLattice::from_covers(&[], &[]).unwrap_err(),
            LatticeError::Empty
        );
    }

    #[test]
    fn five_element_nonisomorphic_pair_with_equal_cjc() {
        // Diamond on a stalk: 0 < 1, then 1 < {2, 3} < 4.
        let stalk = FiniteLattice::from_covers(
            &[0, 1, 2, 3, 4],
            &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        let pentagon = n5();
        assert!(stalk.find_isomorphism(&pentagon).is_none());
        assert!(pentagon.find_isomorphism(&stalk).is_none());
        // Both canonical join complexes are an edge plus an isolated vertex.
        let f1 = stalk.canonical_join_complex().unwrap();
        let f2 = pentagon.canonical_join_complex().unwrap();
        let sizes =
            |fs: &[Vec<usize>]| -> Vec<usize> { fs.iter().map(Vec::len).collect() };
        let mut s1 = sizes(&f1);
        let mut s2 = sizes(&f2);
        s1.sort_unstable();
        s2.sort_unstable();
        assert_eq!(s1, vec![0, 1, 1, 1, 2]);
        assert_eq!(s1, s2);
        // An explicit vertex bijection matching the complexes exists.
        assert!(complexes_isomorphic(&f1, &f2));
    }

    #[test]
    fn self_isomorphism_found() {
        let l = n5();
        let iso = l.find_isomorphism(&n5()).unwrap();
        assert_eq!(iso.len(), 5);
    }

    #[test]
    fn dot_and_json_export() {
        let l = FiniteLattice::from_covers(&[0, 1], &[(0, 1)])
            .unwrap()
            .with_labels(BTreeMap::from([((0, 1), 9)]))
            .unwrap();
        let dot = l.to_dot(&|id| format!("e{id}"), Some(&|label| format!("b{label}")));
        assert!(dot.contains("\"0\" -> \"1\" [label=\"b9\"]"));
        assert!(dot.contains("rankdir=BT"));
        let js = l.to_json();
        assert_eq!(js["elements"], json!([0, 1]));
        assert_eq!(js["covers"], json!([[0, 1]]));
        assert_eq!(js["labels"]["0-1"], json!(9));
    }

    #[test]
    fn label_on_non_cover_rejected() {
        let l = FiniteLattice::from_covers(&[0, 1, 2], &[(0, 1), (1, 2)]).unwrap();
        let err = l.with_labels(BTreeMap::from([((0, 2), 5)])).unwrap_err();
        assert_eq!(err, LatticeError::LabelOnNonCover(0, 2));
    }

    /// Brute-force simplicial-complex isomorphism over vertex bijections;
    /// only used on tiny fixtures.
    pub(crate) fn complexes_isomorphic(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
        let verts = |fs: &[Vec<usize>]| -> Vec<usize> {
            let mut v: Vec<usize> = fs.iter().flatten().copied().collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let va = verts(a);
        let vb = verts(b);
        if va.len() != vb.len() || a.len() != b.len() {
            return false;
        }
        let fa: BTreeSet<Vec<usize>> = a.iter().cloned().collect();
        let fb: BTreeSet<Vec<usize>> = b.iter().cloned().collect();
        permutations(&vb).into_iter().any(|perm| {
            let map: HashMap<usize, usize> = va.iter().copied().zip(perm).collect();
            fa.iter()
                .map(|face| {
                    let mut g: Vec<usize> = face.iter().map(|v| map[v]).collect();
                    g.sort_unstable();
                    g
                })
                .collect::<BTreeSet<_>>()
                == fb
        })
    }

    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (i, &x) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
}
