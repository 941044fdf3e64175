//! Shared instance builders for the criterion benchmarks.

use tokenaut::graph::{make_family, FamilySpec, Graph};
use tokenaut::token::TokenGraph;

pub fn cycle(n: usize) -> Graph {
    make_family(FamilySpec::Cycle { n }).expect("valid cycle")
}

pub fn path(n: usize) -> Graph {
    make_family(FamilySpec::Path { n }).expect("valid path")
}

pub fn star(total: usize) -> Graph {
    make_family(FamilySpec::Star { total }).expect("valid star")
}

pub fn wheel(rim: usize) -> Graph {
    make_family(FamilySpec::Wheel { rim }).expect("valid wheel")
}

pub fn tokens(base: &Graph, k: usize) -> TokenGraph {
    TokenGraph::new(base, k).expect("within capacity")
}
