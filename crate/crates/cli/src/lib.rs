//! Command-line front end: workspace files, example builders, checks and the property suite.

pub mod workspace;
pub mod resolve;
pub mod examples;
pub mod check;
pub mod oracle;
pub mod suite;
