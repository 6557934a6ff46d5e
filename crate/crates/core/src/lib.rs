//! Exact algebra, region classification and radial shooting for the
//! equation `Δu + |∇u|^q u^p = 0`.

pub mod atlas;
pub mod coeffs;
pub mod domains;
pub mod exprcas;
pub mod radial;
