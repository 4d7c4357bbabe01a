//! Exact ring arithmetic: multivariate Laurent polynomials over ℤ,
//! cyclotomic integers, gcds, exact division and unit normalization.

mod cyclo;
mod laurent;

pub use cyclo::{cyclotomic_polynomial, CycloElem, CycloLaurent};
pub use laurent::{lambda1, LaurentPoly};

use core::fmt;

/// Errors raised by ring operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Operands live over different variable lists; callers align first.
    VarMismatch,
    /// Exact division requested but no exact quotient exists.
    NotDivisible,
    /// λ₁(p,q) needs gcd(p,q) = 1.
    NotCoprime,
    /// Division by the zero polynomial.
    DivisionByZero,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::VarMismatch => write!(f, "variable lists differ"),
            AlgebraError::NotDivisible => write!(f, "division is not exact"),
            AlgebraError::NotCoprime => write!(f, "arguments are not coprime"),
            AlgebraError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}
