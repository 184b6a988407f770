//! Bit-level Monte-Carlo protocol simulator.

mod bitstring;

pub use bitstring::BitString;
