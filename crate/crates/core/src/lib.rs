//! Artinian monomial ideals and lex-plus-powers ideals: growth bounds,
//! the vector calculus of lex-plus-powers ideals, residuals and graded
//! Betti numbers.

pub mod error;
pub mod growth;
pub mod harness;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod resolution;
pub mod vector;

pub use error::{Error, Result};
pub use growth::{
    classical_bound, classical_expansion, codim_from_monomial, gk_coefficients, gk_expansion, is_lpp_sequence,
    lpp_bound, lpp_bound_oracle, monomial_from_codim, GkExpansion, GkRectangle, MacaulayExpansion,
};
pub use harness::{enumerate_ideals, CheckReport, Guard, Verdict};
pub use hilbert::HilbertFunction;
pub use ideal::{colon, minimalize, MonomialIdeal, PurePowerProfile};
pub use linalg::FieldSpec;
pub use monomial::{lex_compare, DegreeList, Monomial};
pub use vector::{decompose, vector_of_hf, Decomposition, LppVector, VectorStats, VectorViolation};
pub use resolution::{
    betti_diagram, last_betti_consequences, mapping_cone_check, socle_dims, stanley_check, BettiDiagram,
    MappingConeReport,
};
