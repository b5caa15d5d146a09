//! Torsion-class lattices of the algebra `RA_n`, the quiver `1 ⇄ 2 ⇄ … ⇄ n`
//! modulo all two-cycles, together with the combinatorial models they are
//! isomorphic to: noncrossing arc diagrams on `n + 1` nodes and the weak
//! order on permutations of `{0, …, n}`.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`] — a generic finite-lattice engine (Hasse diagrams, joins,
//!   canonical join representations, isomorphism testing, DOT/JSON export);
//! * [`strings`] — the indecomposable string modules of `RA_n` and their
//!   factor/submodule/hom combinatorics;
//! * [`arcs`] — arcs and noncrossing arc diagrams, the arc complex, and SVG
//!   rendering;
//! * [`weak`] — permutations under the right weak order, inversion sets, and
//!   the descent-to-arc map `delta`;
//! * [`torsion`] — torsion classes of `RA_n` built from minimal extending
//!   modules, and the labelled lattice `tors RA_n`;
//! * [`iso`] — the inversion-set map `phi : tors RA_n -> weak order` and the
//!   exhaustive isomorphism verifier.

pub mod arcs;
pub mod iso;
pub mod lattice;
pub mod strings;
pub mod torsion;
pub mod weak;

pub use arcs::{
    arc_complex, compatible, enumerate_arcs, left_of, render_arcs_svg, render_svg, sigma,
    sigma_inv, Arc, ArcDiagram, Side,
};
pub use iso::{phi, phi_via_cjr, verify_isomorphism, IsoReport};
pub use lattice::{FiniteLattice, JoinRepresentation, LatticeError};
pub use strings::{enumerate_indecomposables, Orientation, StringModule};
pub use torsion::{
    build_tors_lattice, filt, filt_gen, is_torsion_class, minimal_extending, torsion_closure,
    Algebra, TorsLattice, TorsionClass,
};
pub use weak::{
    build_weak_order, delta, delta_inv, perm_from_inversions, weak_join, Permutation, WeakOrder,
};

/// Default element budget for exhaustive lattice constructions.
pub const DEFAULT_BUDGET: usize = 100_000;
