//! Exact symbolic tensor calculus for almost Norden manifolds presented by
//! left-invariant frames on Lie groups, with the twin-interchange
//! invariance suite.

pub mod error;
pub mod example;
pub mod geometry;
pub mod norden;
pub mod scalars;
pub mod specfile;
pub mod tensor;
pub mod twin;

pub use error::{Error, Result};
pub use example::builtin_example;
pub use geometry::{
    curvature, levi_civita, validate_spec, Connection, FrameSpec, ValidationReport,
};
pub use norden::{classify, ClassLabel, NordenObjects, Theorem3Report};
pub use scalars::{Monomial, Polynomial, Rational, Vars};
pub use specfile::{emit_spec, parse_spec};
pub use tensor::{MetricPair, Slot, Tensor, Variance};
pub use twin::{
    build_context, invariance_suite, twin_of, CheckResult, CheckStatus, GeometryContext,
    InvarianceReport,
};
