//! Projectivities of P² as exact 3×3 matrices.
//!
//! Points transform by the matrix, lines by the inverse transpose, so
//! incidence is preserved by construction.

use crate::exactnum::Cyclo;

use super::{det3, GeomError, ProjLine, ProjPoint};

type Mat3 = [[Cyclo; 3]; 3];

/// An invertible projective transformation of P².
#[derive(Debug, Clone)]
pub struct Projectivity {
    matrix: Mat3,
    inverse: Mat3,
}

fn mat_rows(m: &Mat3) -> [&[Cyclo; 3]; 3] {
    [&m[0], &m[1], &m[2]]
}

fn mat_vec(m: &Mat3, v: &[Cyclo; 3]) -> [Cyclo; 3] {
    [
        super::dot(&m[0], v),
        super::dot(&m[1], v),
        super::dot(&m[2], v),
    ]
}

fn transpose(m: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let bt = transpose(b);
    std::array::from_fn(|i| std::array::from_fn(|j| super::dot(&a[i], &bt[j])))
}

/// Adjugate over the determinant; errors when the determinant vanishes.
fn invert(m: &Mat3) -> Result<Mat3, GeomError> {
    let det = det3(mat_rows(m));
    if det.is_zero() {
        return Err(GeomError::SingularMatrix);
    }
    let d = det.inv().unwrap();
    let cof = |r: usize, c: usize| -> Cyclo {
        let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let minor = &(&m[rs[0]][cs[0]] * &m[rs[1]][cs[1]]) - &(&m[rs[0]][cs[1]] * &m[rs[1]][cs[0]]);
        if (r + c) % 2 == 0 {
            minor
        } else {
            -minor
        }
    };
    // inverse = adj / det, adj = transpose of cofactor matrix
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| &cof(j, i) * &d)
    }))
}

impl Projectivity {
    pub fn new(matrix: Mat3) -> Result<Self, GeomError> {
        let inverse = invert(&matrix)?;
        Ok(Projectivity { matrix, inverse })
    }

    pub fn identity() -> Self {
        let id: Mat3 = std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { Cyclo::one(1) } else { Cyclo::zero(1) })
        });
        Projectivity::new(id).unwrap()
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.matrix
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(mat_vec(&self.matrix, p.coords())).expect("invertible image of a point")
    }

    pub fn apply_line(&self, l: &ProjLine) -> ProjLine {
        let it = transpose(&self.inverse);
        ProjLine::new(mat_vec(&it, l.coords())).expect("invertible image of a line")
    }

    pub fn compose(&self, other: &Projectivity) -> Projectivity {
        Projectivity {
            matrix: mat_mul(&self.matrix, &other.matrix),
            inverse: mat_mul(&other.inverse, &self.inverse),
        }
    }

    pub fn inverse(&self) -> Projectivity {
        Projectivity {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// True iff this transformation fixes every point (scalar matrix).
    pub fn is_identity(&self) -> bool {
        let m = &self.matrix;
        for i in 0..3 {
            for j in 0..3 {
                if i != j && !m[i][j].is_zero() {
                    return false;
                }
            }
        }
        m[0][0] == m[1][1] && m[1][1] == m[2][2] && !m[0][0].is_zero()
    }
}

/// Matrix sending the standard frame e₁, e₂, e₃, [1:1:1] to the given
/// four points; errors when three of them are collinear.
fn frame_to(points: [&ProjPoint; 4]) -> Result<Mat3, GeomError> {
    let cols: Mat3 = transpose(&std::array::from_fn(|i| points[i].coords().clone()));
    // Solve cols · c = p4 by Cramer's rule.
    let base = det3(mat_rows(&transpose(&cols)));
    if base.is_zero() {
        return Err(GeomError::DegenerateTuple);
    }
    let p4 = points[3].coords();
    let mut scaled = cols.clone();
    for j in 0..3 {
        let mut replaced = transpose(&cols);
        replaced[j] = p4.clone();
        let cj = &det3(mat_rows(&replaced)) * &base.inv().unwrap();
        if cj.is_zero() {
            return Err(GeomError::DegenerateTuple);
        }
        for i in 0..3 {
            scaled[i][j] = &scaled[i][j] * &cj;
        }
    }
    Ok(scaled)
}

/// The unique projectivity carrying one general-position 4-tuple of points
/// onto another.
pub fn find_projectivity(
    src: [&ProjPoint; 4],
    dst: [&ProjPoint; 4],
) -> Result<Projectivity, GeomError> {
    let a = frame_to(src)?;
    let b = frame_to(dst)?;
    let a_inv = invert(&a)?;
    Projectivity::new(mat_mul(&b, &a_inv))
}
