//! Exact constructions attached to binary n-ic forms: the rank-n ring `R_f`,
//! the module family `I_f^k`, and the correspondence with binary n-pairs.

pub mod error;
pub mod exactalg;
pub mod forms;
pub mod pairs;
pub mod random;
pub mod ringmod;
pub mod thetaoracle;

pub use error::{Error, Result};
pub use exactalg::{ContextDescriptor, Integers, IntegersMod, IntMatrix, Poly, PolyRing, Ring};
pub use forms::{universal_form, BinaryForm, Generator, Gl2};
pub use pairs::{
    form_to_pair, normalize, pair_to_form, reconstruct_from_coefficients, validate_pair,
    BasedPair, BinaryPair, ValidationReport, Violation,
};
pub use ringmod::{
    build_module, build_ring, gl2_invariance_witness, is_gorenstein, is_invertible_family,
    ring_disc, ActionTable, BasisKind, MultTable,
};
pub use thetaoracle::{check_tables, ThetaAlgebra};
