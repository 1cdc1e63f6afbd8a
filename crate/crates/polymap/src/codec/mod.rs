//! Bit-string codes: integers, rationals, algebraic numbers, snapshots and
//! full robot memories, plus the dyadic embedding `r(beta, lambda)` that
//! turns a code into an exact distance or angle tangent.

pub mod bits;
pub mod code;
pub mod dyadic;
pub mod memory;

pub use bits::{BitString, BitsError};
pub use code::{
    encode_algebraic, encode_rational, encode_uint, implicit_arith, recognize_rational,
    AlgebraicCode, ArithOp, CodeError, NumberCode,
};
pub use dyadic::{embed, embed_value, extract, extract_rational, try_extract, Dyadic, DyadicError};
pub use memory::{
    MemoryError, Phase, RobotMemory, SnapshotCode, SnapshotEndpoint, TourProgress, VertexRecord,
    VisitFlag,
};
