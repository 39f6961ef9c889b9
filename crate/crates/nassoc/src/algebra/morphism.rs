use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

/// Linear map between algebras, `matrix` of shape target.dim x source.dim.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Algebra,
    target: Algebra,
    matrix: Matrix,
}

/// Why a linear map fails to be an algebra morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismFailure {
    /// `M(e_i * e_j) != M(e_i) * M(e_j)`.
    NotMultiplicative {
        i: usize,
        j: usize,
        image_of_product: Vector,
        product_of_images: Vector,
    },
    /// Both units declared but the source unit is not sent to the target unit.
    UnitNotPreserved { image: Vector },
}

impl Morphism {
    pub fn new(source: Algebra, target: Algebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(Morphism {
            source,
            target,
            matrix,
        })
    }

    /// Map sending source basis vector `j` to `images[j]`.
    pub fn from_images(source: Algebra, target: Algebra, images: &[Vector]) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                found: images.len(),
            });
        }
        let m = Matrix::from_columns(target.dim(), images)?;
        Self::new(source, target, m)
    }

    pub fn identity(a: &Algebra) -> Self {
        Morphism {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::identity(a.dim()),
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.matrix.mul_vec(x)
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    /// First violation on basis pairs, then the unit condition.
    pub fn failure(&self) -> Option<MorphismFailure> {
        let d = self.source.dim();
        let images: Vec<Vector> = (0..d).map(|j| self.matrix.column(j)).collect();
        for i in 0..d {
            for j in 0..d {
                let lhs = self
                    .matrix
                    .mul_vec(&self.source.product(i, j))
                    .expect("shape checked at construction");
                let rhs = self
                    .target
                    .multiply(&images[i], &images[j])
                    .expect("shape checked at construction");
                if lhs != rhs {
                    return Some(MorphismFailure::NotMultiplicative {
                        i,
                        j,
                        image_of_product: lhs,
                        product_of_images: rhs,
                    });
                }
            }
        }
        if let (Some(us), Some(ut)) = (self.source.unit(), self.target.unit()) {
            if images[us] != self.target.basis(ut) {
                return Some(MorphismFailure::UnitNotPreserved {
                    image: images[us].clone(),
                });
            }
        }
        None
    }

    pub fn check(&self) -> bool {
        self.failure().is_none()
    }
}

/// `true` iff the map is multiplicative on basis pairs and unit-preserving.
pub fn check_morphism(m: &Morphism) -> bool {
    m.check()
}
