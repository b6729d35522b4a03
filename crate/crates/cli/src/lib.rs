//! Command-line front end for `arcnerve`: input documents, the verification
//! suites, the homotopy table and reduction timings.

pub mod app;
pub mod bench;
pub mod input;
pub mod random;
pub mod report;
pub mod suites;
pub mod table;
