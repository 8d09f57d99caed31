//! Fixtures shared by the benchmarks.

use taxicab_core::functions::{
    profile_euclidean_circle_quadrant, profile_taxicab_circle_upper, profile_taxicab_ellipse_upper,
    profile_taxicab_parabola,
};
use taxicab_core::ProfileFunction;

/// Named profiles covering smooth, kinked and endpoint-singular integrands.
pub fn profiles() -> Vec<(&'static str, ProfileFunction)> {
    vec![
        ("euclidean_quadrant", profile_euclidean_circle_quadrant(1.0).expect("valid radius")),
        ("taxicab_circle", profile_taxicab_circle_upper(1.0).expect("valid radius")),
        ("paraboloid", profile_taxicab_parabola(1.0, 3.0).expect("valid parameters")),
        ("octagon", profile_taxicab_ellipse_upper(2.0, 1.5, 5.0).expect("valid parameters")),
    ]
}
