use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational::{self, Rational};
use crate::linalg::{Matrix, Subspace, Vector};

/// Skew-symmetric form on `e1^perp`, as a `2n x 2n` matrix in the ordered
/// basis `e2, ..., e_{2n+1}`. May be degenerate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewForm {
    n: usize,
    matrix: Matrix,
}

impl SkewForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let m = matrix.rows();
        if m == 0 || m % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "skew form must have positive even size, got {m}"
            )));
        }
        for r in 0..m {
            for c in r..m {
                if matrix.get(r, c) != &-matrix.get(c, r) {
                    return Err(Error::NotSkew { row: r, col: c });
                }
            }
        }
        Ok(SkewForm { n: m / 2, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Entry for `V0` indices (0 is `e2`).
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.matrix.get(i, j)
    }

    /// `u^T W v` for `u, v` in `V0` coordinates.
    pub fn eval(&self, u: &Vector, v: &Vector) -> Result<Rational> {
        u.check_dim(2 * self.n)?;
        v.check_dim(2 * self.n)?;
        Ok(u.dot(&self.matrix.mul_vec(v)?))
    }

    /// The form on full coordinates of `Q^{2n+1}`, ignoring the `e1` part.
    pub fn eval_on_full(&self, a: &Vector, b: &Vector) -> Result<Rational> {
        let d = 2 * self.n + 1;
        a.check_dim(d)?;
        b.check_dim(d)?;
        let mut acc = Rational::zero();
        for (i, ai) in a.support().filter(|(i, _)| *i > 0) {
            for (j, bj) in b.support().filter(|(j, _)| *j > 0) {
                let w = self.matrix.get(i - 1, j - 1);
                if !w.is_zero() {
                    acc += ai * bj * w;
                }
            }
        }
        Ok(acc)
    }

    pub fn det(&self) -> Rational {
        self.matrix.det().expect("square by construction")
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    /// `{v in V0 : W v = 0}`.
    pub fn radical(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn is_standard(&self) -> bool {
        standard_symplectic(self.n).is_ok_and(|s| s == *self)
    }
}

/// Block-diagonal `[[0,1],[-1,0]]` coupling `(e_{2i}, e_{2i+1})`.
pub fn standard_symplectic(n: usize) -> Result<SkewForm> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        m.set(2 * i, 2 * i + 1, rational::one());
        m.set(2 * i + 1, 2 * i, rational::int(-1));
    }
    SkewForm::new(m)
}

/// The nonstandard form on `e2..e5` that additionally couples `e3` and `e4`.
pub fn omega_tilde() -> SkewForm {
    SkewForm::new(Matrix::from_int_rows(&[
        &[0, 1, 0, 0],
        &[-1, 0, 1, 0],
        &[0, -1, 0, 1],
        &[0, 0, -1, 0],
    ]))
    .expect("skew-symmetric literal")
}
