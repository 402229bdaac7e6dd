//! Exact cluster variables of the affine rank-2 cluster algebra `A(2,2)`,
//! and the three Fibonacci-counted families that expand them: perfect
//! matchings of snake graphs, compatible pairs on maximal Dyck paths, and
//! nondecreasing Dyck paths.

pub mod bijection;
pub mod clusterseed;
pub mod exactalg;
pub mod fib;
pub mod maxdyck;
pub mod nondecdyck;
pub mod render;
pub mod snake;
pub mod verify;

pub use bijection::{LetterSequence, Triple};
pub use clusterseed::{Direction, Seed, TropicalMonomial};
pub use exactalg::{AlgebraError, ExponentVector, LaurentPolynomial, Var};
pub use fib::fibonacci;
pub use maxdyck::{CompatibleSelection, MaxDyckPath};
pub use nondecdyck::{Mountain, NonDecreasingPath};
pub use snake::{Edge, PerfectMatching, SnakeGraph};
