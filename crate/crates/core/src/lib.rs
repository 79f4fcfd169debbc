pub mod catalog;
pub mod cli_io;
pub mod colored_graph;
pub mod construct;
pub mod geometry;
pub mod permgroup;
