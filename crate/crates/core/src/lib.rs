#![doc = include_str!("../../../README.md")]

pub mod error;
pub mod extension;
pub mod group;
pub mod iso;
pub mod metacyclic;
pub mod report;
pub mod smallgroups;
pub mod presets;
pub mod timespan;
pub mod torsor;
