//! Module theory, automorphisms and derivations, cross-product identities
//! and subalgebra classification for the Vidinli family.

mod automorphisms;
mod crossprod;
mod lie;
mod module;
mod subalgebras;

pub use automorphisms::{
    automorphism_probes, find_idempotents_vidinli, rho, rho_check, rho_report, semidirect_bracket,
    semidirect_spanning_set, unitary_to_automorphism, AutomorphismProbe, IdempotentAnalysis,
    RhoReport, SemidirectElement,
};
pub use crossprod::{axis_coefficient, axis_plane, cross7_checks, AxisPlane, Cross7Report};
pub use lie::{heisenberg_check, HeisenbergReport};
pub use module::{
    as_matrices, centroid, derivations, is_azumaya, multiplication_algebra,
    multiplication_operators, scalar_matrix, MatrixAlgebraSpan,
};
pub use subalgebras::{
    classify_3plane, coordinate_lagrangians, embed_sub_vidinli, j_map, j_uniqueness_check,
    jordan_from_lagrangian, lagrangian_correspondence, omega, principal_plane_law, unit_probes,
    LagrangianCorrespondence, ThreePlane,
};
