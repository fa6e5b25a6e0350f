//! Precision context threaded through every numeric operation.

use crate::error::{Error, Result};

/// Log2(10), slightly rounded up; used to convert decimal digits to bits.
const LB10: f64 = 3.321928094887363;

/// Requested decimal digits plus guard digits.
///
/// The working precision of every operation is `digits + guard` decimal
/// digits. The guard absorbs accumulated rounding: `N` additions lose at
/// most `log10(N)` digits, and all series here have geometric tails, so a
/// fixed guard of a few tens of digits is ample at the scales involved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecCtx {
    digits: u32,
    guard: u32,
}

impl PrecCtx {
    pub const MIN_DIGITS: u32 = 10;
    pub const MIN_GUARD: u32 = 20;

    /// Context with the default guard (20 digits plus slack for term counts).
    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, Self::MIN_GUARD + 8)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::Domain(format!(
                "PrecCtx requires digits >= {}, got {digits}",
                Self::MIN_DIGITS
            )));
        }
        if guard < Self::MIN_GUARD {
            return Err(Error::Domain(format!(
                "PrecCtx requires guard >= {}, got {guard}",
                Self::MIN_GUARD
            )));
        }
        Ok(PrecCtx { digits, guard })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// Total working precision in decimal digits.
    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Working precision in bits for the underlying floats.
    pub fn prec_bits(&self) -> u32 {
        (self.working_digits() as f64 * LB10).ceil() as u32 + 12
    }

    /// Same requested digits, `extra` more guard digits.
    pub fn bump(&self, extra: u32) -> PrecCtx {
        PrecCtx {
            digits: self.digits,
            guard: self.guard + extra,
        }
    }

    /// Same working precision budget, re-expressed with `extra` more digits.
    pub fn refine(&self, extra: u32) -> PrecCtx {
        PrecCtx {
            digits: self.digits + extra,
            guard: self.guard,
        }
    }
}
