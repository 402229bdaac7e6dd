//! Workloads shared by the criterion benches.

use clusterfib_core::bijection::{phi, phi_inv, psi, theta, theta_inv};
use clusterfib_core::clusterseed::{coefficient_free_variable, principal_variable};
use clusterfib_core::maxdyck::greedy_element;
use clusterfib_core::snake::cluster_variable_via_snake;
use clusterfib_core::{LaurentPolynomial, SnakeGraph};

/// Pushes every matching of `H_{2n+1}` through `phi`, `theta`, `psi` and back.
/// Returns how many matchings made the full round trip.
pub fn round_trip_all(n: usize) -> usize {
    SnakeGraph::new(2 * n + 1)
        .expect("odd tile count")
        .enumerate_matchings()
        .iter()
        .filter(|p| {
            let sel = phi(p).expect("odd snake");
            let path = theta(&sel).expect("compatible");
            psi(p).ok().as_ref() == Some(&path)
                && theta_inv(&path).ok().as_ref() == Some(&sel)
                && phi_inv(&sel).ok().as_ref() == Some(*p)
        })
        .count()
}

/// `x_k` with principal coefficients, computed from matchings and by mutation.
pub fn principal_both_ways(k: usize) -> (LaurentPolynomial, LaurentPolynomial) {
    (
        cluster_variable_via_snake(k).expect("k >= 3"),
        principal_variable(k).expect("k >= 3"),
    )
}

/// Coefficient-free `x_k` from the exchange recurrence and as a greedy element.
pub fn coefficient_free_both_ways(k: usize) -> (LaurentPolynomial, LaurentPolynomial) {
    (
        coefficient_free_variable(k).expect("k >= 1"),
        greedy_element(k as i64 - 2, k as i64 - 3, 2, 2).expect("small enough"),
    )
}
