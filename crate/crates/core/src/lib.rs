//! Exact computation in finite commutative rings, their monoid rings,
//! ideal lattices, content theory and zero-divisor graphs.

pub mod content;
pub mod error;
pub mod expr;
pub mod ideal;
pub mod limits;
pub mod literal;
pub mod monoid;
pub mod mring;
pub mod report;
pub mod ring;
pub mod zdgraph;

pub use error::{Error, Result, SyntaxError};
pub use expr::RingExpr;
pub use ideal::Ideal;
pub use limits::Limits;
pub use monoid::{Monoid, MonoidElem};
pub use mring::{MRElem, Truncation};
pub use ring::{Elem, ElemSet, FiniteRing};
pub use report::{Config, Report, Suite};
pub use zdgraph::{Diameter, ZDGraph};
pub use content::{CheckOutcome, Verdict};
