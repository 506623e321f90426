//! Exact invariants of monomial quotients and numerical semigroup rings.
//!
//! The crate computes Hilbert series, graded local cohomology lengths, the
//! a-invariant, the Eisenbud-Goto invariant, Ratliff-Rush closures and
//! reduction numbers, and checks the known inequalities between them on
//! concrete and randomly generated instances. All arithmetic is exact.

pub mod artinian;
pub mod bounds;
pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod filtration;
pub mod hilbert;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod semigroup;

pub use bounds::{BoundName, BoundReport, Relation, Status, VerifyOptions};
pub use cohomology::{CohomologyTable, OrthantClass};
pub use corpus::{Aggregate, CorpusReport, CorpusSpec};
pub use error::{Error, Result};
pub use filtration::{Reduction, ReductionOptions};
pub use hilbert::{HilbertData, HilbertPolynomial, HilbertSeries, PivotStrategy};
pub use monomial::{Monomial, MonomialIdeal};
pub use parse::PolyRing;
pub use semigroup::{NumericalSemigroup, SemigroupIdeal};
