//! Length bounds, explicit constructions and exhaustive searches for small
//! error-correcting codes, with a focus on where systematic nonlinear codes
//! can beat the Griesmer bound.

pub mod bounds;
pub mod code;
pub mod codefile;
pub mod construct;
pub mod field;
pub mod identities;
pub mod par;
pub mod search;

pub use bounds::{BoundClass, BoundError, BoundReport, SizeSpec};
pub use code::{Analysis, Code, CodeError, CodeParams};
pub use codefile::{parse_code, write_code, ParseError};
pub use construct::{BuildError, GeneratorMatrix, HadamardMatrix};
pub use field::{FieldElement, FieldError, FieldSpec};
pub use par::Execution;
pub use search::{Budget, SearchError, SearchOptions, SearchResult, SearchStatus};
