//! Encoding sizes of an instance before and after scaling to integers.
//!
//! Binary size sums the bit lengths of every numerator and denominator;
//! unary size sums their values. The scaled instance is measured with the
//! same rational conventions, so an all-integer instance measures the same
//! before and after.

use num_bigint::{BigInt, BigUint};

use super::{scale_to_integers, Instance};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeReport {
    pub binary: u64,
    pub unary: BigUint,
    pub scaled_binary: u64,
    pub scaled_unary: BigUint,
    pub alpha: BigInt,
}

impl SizeReport {
    pub const CSV_HEADER: &'static str = "binary,unary,scaled_binary,scaled_unary,alpha";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.binary, self.unary, self.scaled_binary, self.scaled_unary, self.alpha
        )
    }
}

fn binary_size(inst: &Instance) -> u64 {
    inst.values().map(Rational::binary_size).sum()
}

fn unary_size(inst: &Instance) -> BigUint {
    inst.values().map(Rational::unary_size).sum()
}

pub fn measure_sizes(inst: &Instance) -> SizeReport {
    let (scaled, alpha) = scale_to_integers(inst);
    SizeReport {
        binary: binary_size(inst),
        unary: unary_size(inst),
        scaled_binary: binary_size(&scaled),
        scaled_unary: unary_size(&scaled),
        alpha,
    }
}
