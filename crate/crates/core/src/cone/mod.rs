//! The cone of weights making a given path longest: its inequality system,
//! extreme rays, facets and two-dimensional faces.

mod faces;
mod facets;
mod rays;
mod system;

pub use faces::{is_two_dim_face, order_graph, perturbation_dim, ray_sum};
pub use facets::{
    classify, corners, disorder_graph, facets, necessity_witness, BipartiteGraph,
    ClassifiedNormal, DisorderGraph, FacetClassification, FacetReason, FacetTag, OrderGraph,
};
pub use rays::{
    antichain_count_block, count_extreme_rays_grid, count_extreme_rays_on_grid, extreme_rays,
    path_span_rank,
};
pub use system::{inequality_system, InequalitySystem, Normal, NormalKind};

use serde::Serialize;

use crate::error::Result;
use crate::poset::{Antichain, Path, Poset};

/// Extreme rays, facet classification and two-dimensional face adjacency of
/// one path's cone.
#[derive(Clone, Debug, Serialize)]
pub struct ConeDescription {
    pub path: Path,
    pub extreme_rays: Vec<Antichain>,
    pub facets: FacetClassification,
    /// Index pairs into `extreme_rays` spanning a two-dimensional face.
    pub two_dim_faces: Vec<(usize, usize)>,
}

pub fn describe_cone(poset: &Poset, path: &Path) -> Result<ConeDescription> {
    let rays = extreme_rays(poset, path)?;
    let facets = facets(poset, path)?;
    let mut two_dim_faces = Vec::new();
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            if is_two_dim_face(poset, path, &rays[i], &rays[j])? {
                two_dim_faces.push((i, j));
            }
        }
    }
    Ok(ConeDescription {
        path: facets.path.clone(),
        extreme_rays: rays,
        facets,
        two_dim_faces,
    })
}
