//! The comparison between torsion classes of `RA_n` and the weak order on
//! permutations of `{0, …, n}`.
//!
//! The map [`phi`] reads a torsion class off as an inversion set — each
//! member contributes the pair of its support endpoints, shifted to nodes —
//! and [`phi_via_cjr`] recomputes the same permutation structurally: take
//! the canonical join representation of the class, pass each joinand's
//! brick through the arc bijection, and join the resulting one-descent
//! permutations. [`verify_isomorphism`] checks exhaustively that `phi` is a
//! bijection, that covers match in both directions with the right inversion
//! added, and that both canonical join complexes coincide with the arc
//! complex.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arcs::{arc_complex, sigma, ArcError};
use crate::lattice::LatticeError;
use crate::torsion::{build_tors_lattice, Algebra, TorsLattice, TorsionClass, TorsionError};
use crate::weak::{
    build_weak_order, delta, delta_inv, perm_from_inversions, weak_join, Permutation, WeakError,
};

/// Errors raised during the isomorphism verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error(transparent)]
    Weak(#[from] WeakError),
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    /// A structural invariant failed (e.g. a join-irreducible without a
    /// labeled lower cover).
    #[error("inconsistent structure: {0}")]
    Inconsistent(String),
}

/// The permutation whose inversions are the support pairs of the class
/// members.
pub fn phi(alg: &Algebra, class: &TorsionClass) -> Result<Permutation, IsoError> {
    let inv: BTreeSet<(usize, usize)> = class
        .members()
        .iter()
        .map(|&m| alg.inv_pair(m))
        .collect();
    Ok(perm_from_inversions(alg.rank(), &inv)?)
}

/// The same permutation, assembled structurally: canonical joinands of the
/// class, their bricks' arcs, the join-irreducible permutations below those
/// arcs, and finally their join in the weak order.
pub fn phi_via_cjr(alg: &Algebra, tl: &TorsLattice, id: usize) -> Result<Permutation, IsoError> {
    let cjr = tl
        .lattice()
        .canonical_join_representation(id)?
        .ok_or_else(|| IsoError::Inconsistent(format!("class {id} has no canonical joinands")))?;
    let mut joinands = Vec::new();
    for ji in cjr.joinands {
        let brick = tl
            .ji_brick(ji)
            .ok_or_else(|| IsoError::Inconsistent(format!("class {ji} has no brick label")))?;
        let arc = sigma(&alg.modules()[brick]);
        joinands.push(delta_inv(alg.rank(), &[arc])?);
    }
    Ok(weak_join(alg.rank(), &joinands)?)
}

/// Outcome of the exhaustive rank-`n` comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub n: usize,
    /// `[torsion classes, permutations]`.
    pub sizes: [usize; 2],
    /// `phi` lands on every permutation exactly once.
    pub bijective: bool,
    /// Covers map onto covers in both directions, each adding exactly the
    /// brick's inversion pair.
    pub cover_preserving: bool,
    /// Canonical join complexes of both lattices coincide with the arc
    /// complex under the brick/arc/descent dictionaries.
    pub cjc_isomorphic: bool,
    /// Human-readable descriptions of everything that failed.
    pub failures: Vec<String>,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.sizes[0] == self.sizes[1]
            && self.bijective
            && self.cover_preserving
            && self.cjc_isomorphic
            && self.failures.is_empty()
    }
}

/// Builds both lattices at rank `n` and checks that `phi` is an isomorphism
/// preserving all the labeled structure. `budget` caps every enumeration
/// (classes, permutations, complex faces).
pub fn verify_isomorphism(n: usize, budget: usize) -> Result<IsoReport, IsoError> {
    let alg = Algebra::new(n)?;
    let tl = build_tors_lattice(&alg, budget)?;
    let wo = build_weak_order(n, budget)?;
    let mut failures = Vec::new();

    let sizes = [tl.classes().len(), wo.lattice().len()];
    if sizes[0] != sizes[1] {
        failures.push(format!(
            "size mismatch: {} torsion classes vs {} permutations",
            sizes[0], sizes[1]
        ));
    }

    // phi lands on every permutation exactly once.
    let mut images: Vec<Option<usize>> = Vec::with_capacity(tl.classes().len());
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for class in tl.classes() {
        match phi(&alg, class) {
            Ok(w) => match wo.perm_id(&w) {
                Some(pid) => {
                    if !seen.insert(pid) {
                        failures.push(format!("phi repeats permutation {w}"));
                    }
                    images.push(Some(pid));
                }
                None => {
                    failures.push(format!("phi produced a foreign permutation {w}"));
                    images.push(None);
                }
            },
            Err(e) => {
                failures.push(format!("phi failed on a class: {e}"));
                images.push(None);
            }
        }
    }
    let bijective = seen.len() == wo.lattice().len()
        && images.iter().all(Option::is_some)
        && sizes[0] == sizes[1];
    if !bijective && failures.is_empty() {
        failures.push("phi is not onto".to_string());
    }

    // Covers transport to covers (both directions, by counting), and each
    // cover adds exactly the brick's inversion pair.
    let mut cover_preserving = bijective;
    if bijective {
        let weak_covers: BTreeSet<(usize, usize)> =
            wo.lattice().covers().iter().copied().collect();
        let mut mapped: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(lo, hi, brick) in tl.covers() {
            let (plo, phi_hi) = (images[lo].unwrap(), images[hi].unwrap());
            if !weak_covers.contains(&(plo, phi_hi)) {
                cover_preserving = false;
                failures.push(format!(
                    "torsion cover {lo} -> {hi} does not map to a weak cover"
                ));
                continue;
            }
            mapped.insert((plo, phi_hi));
            let inv_lo = wo.perms()[plo].inversions();
            let inv_hi = wo.perms()[phi_hi].inversions();
            let added: Vec<(usize, usize)> =
                inv_hi.difference(&inv_lo).copied().collect();
            if !inv_lo.is_subset(&inv_hi) || added != vec![alg.inv_pair(brick)] {
                cover_preserving = false;
                failures.push(format!(
                    "cover {lo} -> {hi} does not add exactly the brick's inversion"
                ));
            }
        }
        if mapped.len() != weak_covers.len() {
            cover_preserving = false;
            failures.push(format!(
                "{} weak covers are not reached by torsion covers",
                weak_covers.len() - mapped.len()
            ));
        }
    }

    // Canonical join complexes: torsion side and weak side, both translated
    // into arc id sets, must equal the arc complex.
    let cjc_isomorphic = match cjc_faces(&alg, &tl, &wo, &mut failures) {
        Ok((tors_faces, weak_faces)) => {
            let arcs = arc_complex(n, budget)?;
            let mut ok = true;
            if tors_faces != arcs {
                ok = false;
                failures.push("torsion-side canonical join complex differs from the arc complex".to_string());
            }
            if weak_faces != arcs {
                ok = false;
                failures.push("weak-side canonical join complex differs from the arc complex".to_string());
            }
            ok
        }
        Err(()) => false,
    };

    Ok(IsoReport {
        n,
        sizes,
        bijective,
        cover_preserving,
        cjc_isomorphic,
        failures,
    })
}

type FaceSet = BTreeSet<Vec<usize>>;

/// Translates both canonical join complexes into sets of arc ids (arc ids
/// equal module ids under the canonical enumerations).
#[allow(clippy::result_unit_err)]
fn cjc_faces(
    alg: &Algebra,
    tl: &TorsLattice,
    wo: &crate::weak::WeakOrder,
    failures: &mut Vec<String>,
) -> Result<(FaceSet, FaceSet), ()> {
    let tors_cjc = match tl.lattice().canonical_join_complex() {
        Ok(c) => c,
        Err(e) => {
            failures.push(format!("torsion lattice has no canonical join complex: {e}"));
            return Err(());
        }
    };
    let mut tors_faces: FaceSet = BTreeSet::new();
    for face in tors_cjc {
        let mut arcs = Vec::with_capacity(face.len());
        for ji in face {
            match tl.ji_brick(ji) {
                Some(brick) => arcs.push(brick),
                None => {
                    failures.push(format!("joinand class {ji} has no brick label"));
                    return Err(());
                }
            }
        }
        arcs.sort_unstable();
        tors_faces.insert(arcs);
    }
    let weak_cjc = match wo.lattice().canonical_join_complex() {
        Ok(c) => c,
        Err(e) => {
            failures.push(format!("weak order has no canonical join complex: {e}"));
            return Err(());
        }
    };
    let arc_ids: std::collections::HashMap<crate::arcs::Arc, usize> =
        match crate::arcs::enumerate_arcs(alg.rank()) {
            Ok(all) => all.into_iter().enumerate().map(|(i, a)| (a, i)).collect(),
            Err(e) => {
                failures.push(format!("arc enumeration failed: {e}"));
                return Err(());
            }
        };
    let mut weak_faces: FaceSet = BTreeSet::new();
    for face in weak_cjc {
        let mut arcs = Vec::with_capacity(face.len());
        for ji in face {
            let w = &wo.perms()[ji];
            let ds = delta(w);
            match ds.as_slice() {
                [a] => arcs.push(arc_ids[a]),
                _ => {
                    failures.push(format!(
                        "join-irreducible permutation {w} has {} descents",
                        ds.len()
                    ));
                    return Err(());
                }
            }
        }
        arcs.sort_unstable();
        weak_faces.insert(arcs);
    }
    Ok((tors_faces, weak_faces))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values_at_rank_two() {
        let alg = Algebra::new(2).unwrap();
        let tl = build_tors_lattice(&alg, 1000).unwrap();
        let images: Vec<String> = tl
            .classes()
            .iter()
            .map(|c| phi(&alg, c).unwrap().to_string())
            .collect();
        assert_eq!(images, vec!["012", "102", "021", "120", "201", "210"]);
    }

    #[test]
    fn phi_matches_structural_route() {
        for n in 1..=3 {
            let alg = Algebra::new(n).unwrap();
            let tl = build_tors_lattice(&alg, 10_000).unwrap();
            for id in 0..tl.classes().len() {
                assert_eq!(
                    phi(&alg, &tl.classes()[id]).unwrap(),
                    phi_via_cjr(&alg, &tl, id).unwrap(),
                    "rank {n}, class {id}"
                );
            }
        }
    }

    #[test]
    fn verification_passes_small_ranks() {
        for n in 1..=3 {
            let report = verify_isomorphism(n, 100_000).unwrap();
            assert!(report.ok(), "rank {n}: {:?}", report.failures);
            assert_eq!(report.sizes[0], report.sizes[1]);
        }
    }

    #[test]
    fn report_serializes() {
        let report = verify_isomorphism(2, 1000).unwrap();
        let js = serde_json::to_string(&report).unwrap();
        let back: IsoReport = serde_json::from_str(&js).unwrap();
        assert_eq!(back, report);
        assert!(js.contains("\"bijective\":true"));
    }

    #[test]
    fn budget_propagates() {
        assert!(matches!(
            verify_isomorphism(3, 10),
            Err(IsoError::Torsion(TorsionError::BudgetExceeded(10)))
        ));
    }
}
