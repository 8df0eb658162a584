//! Library side of the command line front end: golden kernel tables and the
//! batch verification suites shared by the binary and the acceptance tests.

pub mod golden;
pub mod verify;
