pub mod fpgroup;
pub mod abelian;
pub mod cosets;
pub mod rewriting;
pub mod derived;
pub mod alexander;
pub mod zoo;
pub mod cli;
