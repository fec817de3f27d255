//! File formats, reports and command implementations for the `arrlik`
//! command-line tool. The algebra lives in `arrlik-core`.

pub mod commands;
pub mod formats;
pub mod report;
