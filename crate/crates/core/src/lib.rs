//! Exact-arithmetic toolkit for graded Betti tables, Hilbert series and
//! multiplicity bounds of monomial ideals, basic double links, and
//! standard determinantal degree data. No floating point anywhere.

pub mod betti;
pub mod checker;
pub mod cone;
pub mod corpus;
pub mod determinantal;
pub mod error;
pub mod hilbert;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod poly;

pub use betti::{betti_koszul, betti_taylor, betti_taylor_guarded, stats, BettiTable, ResolutionStats};
pub use checker::{
    check_curve, check_cyclic, check_dubreil, check_module, check_quasipure, sharp_family,
    vandermonde_identity, BoundContext, BoundReport, Classification, CurveData, SharpFamilyReport,
};
pub use cone::{
    bdl_hypotheses, cancel_splittings, cone_basic_double_link, cone_hypersurface, BdlHypotheses,
    CancelledCone, Provenance, ResolutionShape,
};
pub use determinantal::{
    degree_nested, degree_recursive, det_check_conjecture, en_betti_table,
    en_betti_table_guarded, en_extremal_shifts, DegreeMatrix, EN_MAX_TERMS,
};
pub use error::{Error, Result};
pub use hilbert::{
    hilbert_function, hilbert_numerator, multiplicity_from_betti, numerator_from_generators,
    HilbertData,
};
pub use monomial::{Monomial, MonomialIdeal};
pub use poly::IntPoly;
