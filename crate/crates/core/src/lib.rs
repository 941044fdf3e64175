pub mod bitset;
pub mod distance;
pub mod error;
pub mod graph;
pub mod group;
pub mod io;
pub mod perm;
pub mod subsets;
pub mod search;
pub mod theorems;
pub mod token;
