//! Monoids generated by closure, interior, complement, boundary and the
//! other basic topological operators.
//!
//! * [`terms`]: the operator alphabet and word syntax.
//! * [`rewrite`]: normalization by universally valid relations.
//! * [`finitetop`]: enumeration of finite topologies and exact operator tables.
//! * [`realline`]: exact subsets of ℝ built from rational cells.
//! * [`laws`]: pointwise sweeps of operator identities.
//! * [`monoid`]: class enumeration, separating witnesses, the inclusion
//!   order and growth experiments.

pub mod error;
pub mod finitetop;
pub mod laws;
pub mod monoid;
pub mod realline;
pub mod rewrite;
pub mod terms;

pub use error::{MonoidError, ParseSetError, ParseWordError, SpaceError};
pub use finitetop::{enumerate_topologies, FiniteSpace, TransformTable};
pub use monoid::{compute_poset, emit_hasse_dot, enumerate_monoid, separate, Budget, Models, MonoidReport, Poset, Witness};
pub use realline::{make_set, RealLineSet};
pub use rewrite::{normalize, syntactically_equal, NormalForm};
pub use terms::{compose, format_word, parse_word, Generator, Word};
