//! Command implementations behind the `dwf` binary. Each returns a
//! serializable value; the binary only parses arguments and writes JSON.

pub mod commands;
pub mod statefile;
pub mod verify;

pub use commands::{
    convert, dump_geometry, export_hadamard, measure, report, GeometryDump, KindArg,
    MeasurementReport, ScalarReport, Shots,
};
pub use statefile::{Representation, State, StateFile};
pub use verify::{verify, Check, Depth, VerifyReport};

use crate::error::Error;

/// Process exit code for a failed command: 2 when an input file is
/// malformed or violates a state invariant, 1 for usage and I/O errors.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Invariant { .. }
        | Error::DimensionMismatch { .. }
        | Error::Numerical(_)
        | Error::InvalidState(_)
        | Error::Json(_) => 2,
        _ => 1,
    }
}
