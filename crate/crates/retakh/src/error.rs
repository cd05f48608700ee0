use thiserror::Error;

/// Failures of the exact pipelines. Everything here is a hard inconsistency:
/// either an iteration map broke its contraction contract, or two routes that
/// must agree coefficient-for-coefficient did not.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A fixed-point map rewrote an already-settled coefficient, or its
    /// alleged solution failed the final `update(s) == s` check.
    #[error("fixed-point iteration is not contracting at order {order}")]
    NonContracting { order: usize },

    /// An identity that must hold exactly was violated.
    #[error("internal consistency violation: {identity}")]
    IdentityViolation { identity: &'static str },
}
