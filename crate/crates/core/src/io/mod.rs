//! Reading and writing: the source language, DOT, JSON reports.

pub mod dot;
pub mod dsl;
pub mod report;
