pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod graphs;
pub mod polyq;
pub mod symfunc;
pub mod theorems;
