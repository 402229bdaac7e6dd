//! Rank-2 seeds with principal coefficients and their mutations.
//!
//! Coefficients live in the tropical semifield on `y1, y2`. Cluster
//! variables are exact Laurent polynomials in `x1, x2` with polynomial
//! coefficients in `y1, y2`; every exchange is an exact division.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::exactalg::{AlgebraError, LaurentPolynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("exchange matrix {0:?} is not skew-symmetrizable")]
    Matrix([[i32; 2]; 2]),
    #[error("cluster variable index {index} is below {min}")]
    Index { index: i64, min: i64 },
}

/// `y1^a y2^b` in `Trop(y1, y2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TropicalMonomial(pub [i32; 2]);

impl TropicalMonomial {
    pub fn one() -> Self {
        TropicalMonomial([0, 0])
    }

    pub fn y1() -> Self {
        TropicalMonomial([1, 0])
    }

    pub fn y2() -> Self {
        TropicalMonomial([0, 1])
    }

    pub fn exponents(self) -> [i32; 2] {
        self.0
    }

    pub fn inv(self) -> Self {
        TropicalMonomial([-self.0[0], -self.0[1]])
    }

    pub fn pow(self, k: i32) -> Self {
        TropicalMonomial([self.0[0] * k, self.0[1] * k])
    }

    /// Tropical sum: componentwise minimum of exponents.
    pub fn oplus(self, other: Self) -> Self {
        TropicalMonomial([self.0[0].min(other.0[0]), self.0[1].min(other.0[1])])
    }

    /// Split into `(positive part, negative part)` so that `self = pos / neg`.
    pub fn split(self) -> (Self, Self) {
        let [a, b] = self.0;
        (
            TropicalMonomial([a.max(0), b.max(0)]),
            TropicalMonomial([(-a).max(0), (-b).max(0)]),
        )
    }

    /// The monomial as a polynomial; fails on negative exponents.
    pub fn to_polynomial(self) -> Result<LaurentPolynomial, AlgebraError> {
        LaurentPolynomial::from_exponents([0, 0, 0, 0, self.0[0], self.0[1]])
    }
}

impl Mul for TropicalMonomial {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        TropicalMonomial([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1]])
    }
}

impl fmt::Display for TropicalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            [0, 0] => f.write_str("1"),
            [a, 0] => write!(f, "y1^{a}"),
            [0, b] => write!(f, "y2^{b}"),
            [a, b] => write!(f, "y1^{a}*y2^{b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    One,
    Two,
}

impl Direction {
    pub fn index(self) -> usize {
        match self {
            Direction::One => 0,
            Direction::Two => 1,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Direction::One => Direction::Two,
            Direction::Two => Direction::One,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    cluster: [LaurentPolynomial; 2],
    coefficients: [TropicalMonomial; 2],
    matrix: [[i32; 2]; 2],
}

impl Seed {
    pub fn new(
        cluster: [LaurentPolynomial; 2],
        coefficients: [TropicalMonomial; 2],
        matrix: [[i32; 2]; 2],
    ) -> Result<Self, SeedError> {
        let [[b11, b12], [b21, b22]] = matrix;
        let skew = b11 == 0 && b22 == 0 && b12.signum() == -b21.signum();
        if !skew {
            return Err(SeedError::Matrix(matrix));
        }
        Ok(Seed {
            cluster,
            coefficients,
            matrix,
        })
    }

    /// `(x1, x2)`, `(y1, y2)` and `B = [[0, b], [-c, 0]]`.
    pub fn initial(b: i32, c: i32) -> Result<Self, SeedError> {
        Seed::new(
            [Var::X1.into(), Var::X2.into()],
            [TropicalMonomial::y1(), TropicalMonomial::y2()],
            [[0, b], [-c, 0]],
        )
    }

    /// The seed of the annulus triangulation: `B = [[0, 2], [-2, 0]]`.
    pub fn principal() -> Self {
        Seed::initial(2, 2).expect("valid exchange matrix")
    }

    pub fn cluster(&self) -> &[LaurentPolynomial; 2] {
        &self.cluster
    }

    pub fn coefficients(&self) -> [TropicalMonomial; 2] {
        self.coefficients
    }

    pub fn matrix(&self) -> [[i32; 2]; 2] {
        self.matrix
    }

    /// Mutation in direction `k`.
    pub fn mutate(&self, k: Direction) -> Result<Seed, SeedError> {
        let k = k.index();
        let j = 1 - k;
        let b = self.matrix;
        let yk = self.coefficients[k];

        // (y_k x^{[b_ik]+} + x^{[-b_ik]+}) / (y_k ⊕ 1) with y_k = pos / neg
        let (pos, neg) = yk.split();
        let bjk = b[j][k];
        let xj = &self.cluster[j];
        let term_pos = &pos.to_polynomial()? * &xj.pow(bjk.max(0) as u32);
        let term_neg = &neg.to_polynomial()? * &xj.pow((-bjk).max(0) as u32);
        let new_x = (&term_pos + &term_neg).exact_divide(&self.cluster[k])?;

        let mut cluster = self.cluster.clone();
        cluster[k] = new_x;

        let mut coefficients = self.coefficients;
        coefficients[k] = yk.inv();
        let bkj = b[k][j];
        coefficients[j] = self.coefficients[j]
            * yk.pow(bkj.max(0))
            * yk.oplus(TropicalMonomial::one()).pow(-bkj);

        let mut matrix = [[0; 2]; 2];
        for (r, row) in matrix.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = if r == k || c == k {
                    -b[r][c]
                } else {
                    b[r][c] + (-b[r][k]).max(0) * b[k][c] + b[r][k] * b[k][c].max(0)
                };
            }
        }

        Ok(Seed {
            cluster,
            coefficients,
            matrix,
        })
    }
}

/// The cluster variable `x_k` (`k >= 3`) with principal coefficients,
/// reached from the initial seed by mutating in directions `1, 2, 1, ...`
/// (`k - 2` steps). The newest variable sits in the slot of the last step.
pub fn principal_variable(k: usize) -> Result<LaurentPolynomial, SeedError> {
    if k < 3 {
        return Err(SeedError::Index {
            index: k as i64,
            min: 3,
        });
    }
    let mut seed = Seed::principal();
    let mut dir = Direction::One;
    for _ in 0..k - 2 {
        seed = seed.mutate(dir)?;
        dir = dir.other();
    }
    Ok(seed.cluster[dir.other().index()].clone())
}

/// The coefficient-free `x_m` (`m >= 1`) from `x_{n+1} = (x_n^2 + 1) / x_{n-1}`.
pub fn coefficient_free_variable(m: usize) -> Result<LaurentPolynomial, SeedError> {
    if m < 1 {
        return Err(SeedError::Index {
            index: m as i64,
            min: 1,
        });
    }
    let (mut prev, mut cur): (LaurentPolynomial, LaurentPolynomial) = (Var::X1.into(), Var::X2.into());
    if m == 1 {
        return Ok(prev);
    }
    for _ in 2..m {
        let next = (&cur.pow(2) + &LaurentPolynomial::one()).exact_divide(&prev)?;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}
