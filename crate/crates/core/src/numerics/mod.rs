//! Numerical kernels shared by the physics modules.

pub mod bessel;
pub mod quadrature;
pub mod roots;

pub use bessel::{bessel_k0, bessel_k0_scaled, BesselDomainError, K0Value, EULER_GAMMA};
pub use quadrature::{
    gauss_legendre_panels, integrate_singular, integrate_singular_nodes, Node, QuadratureError,
    QuadratureSpec,
};
pub use roots::{find_root, find_root_fallible, Bracket, RootError};
