//! Probabilities of the maximal cones under random weights: exact values
//! for exponential weights, the uniform left tail, and seeded Monte Carlo.

pub mod exponential;
pub mod montecarlo;
pub mod pstar;
pub mod uniform;

pub use exponential::{
    cone_prob_exponential, path_distribution_exponential_exact, path_prob_exponential_exact,
    simplex_prob_exponential, ExactPathDistribution, PathProbability,
};
pub use montecarlo::{
    mc_path_distribution, mc_statistics, mc_uniform_left_tail, transversal_deviation, CustomSampler, Estimate,
    LawKind, PathDistribution, PathEstimate, ReplicateRecord, StatisticsReport, WeightLaw,
};
pub use pstar::{lambda_in_pstar_polytope, pstar_components, PStarComponents};
pub use uniform::{chain_polytope_membership, grid_left_tail, uniform_left_tail};
