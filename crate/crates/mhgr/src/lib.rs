//! Standard-library companion to `mhgr-core`: group and matrix files,
//! certificates, a threaded search driver and the `mhgr` command line.

pub mod cli;
pub mod error;
pub mod formats;
pub mod groupspec;
pub mod parallel;
pub mod report;

pub use error::{Error, Result};
pub use groupspec::{parse_group, GroupSpec};
pub use report::{Certificate, CertKind};
