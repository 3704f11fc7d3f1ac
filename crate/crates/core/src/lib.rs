pub mod betti;
pub mod cli;
pub mod homology;
pub mod semigroup;
pub mod series;
pub mod theorems;
