//! IO companion for the exact-arithmetic approximation lab: configuration
//! documents, report rendering, worker-partitioned scans, and the `dioph`
//! command-line interface.

pub mod cli;
pub mod config;
pub mod parallel;
pub mod report;
