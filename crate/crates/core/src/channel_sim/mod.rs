//! Simulation of permutation channels: transmission, decoding, zero-error
//! certification and ancilla-assisted dense coding.

mod channel;
mod decode;
mod dense;

pub use channel::{
    apply_channel_classical, apply_channel_quantum, decode_classical, ChannelSpec,
    ClassicalDecoder, ElementSelection,
};
pub use decode::{
    decode_quantum, overlaps, verify_zero_error, DecodeFailure, QuantumDecode, ZeroErrorReport,
    DECODE_TIE_TOLERANCE, ZERO_ERROR_TOLERANCE,
};
pub use dense::{
    dense_coding_exhaustive, dense_coding_roundtrip, sector_phase_residual, weyl_operators,
    DenseCodingInstance, DenseCodingSummary, DenseDecode, WeylOperator,
};
