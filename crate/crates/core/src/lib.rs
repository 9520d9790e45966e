pub mod generators;
pub mod geometry;
pub mod graph;
pub mod quadrature;
pub mod continuum;
pub mod experiments;
pub mod cli;
