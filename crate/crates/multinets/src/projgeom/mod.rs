//! Exact projective geometry over Q(ζ_N): points and lines of P² in
//! homogeneous coordinates, incidence, concurrency, projectivities, and
//! planes of P³ for the restriction construction.
//!
//! Points and lines are kept in canonical form — scaled so the first
//! nonzero coordinate is 1 — which makes equality, hashing and
//! deduplication exact string comparisons with no numeric tolerance.

mod plane;
mod projectivity;

pub use plane::Plane3;
pub use projectivity::{find_projectivity, Projectivity};

use thiserror::Error;

use crate::exactnum::Cyclo;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("homogeneous coordinates must not all be zero")]
    ZeroVector,
    #[error("lines are identical")]
    IdenticalLines,
    #[error("points are identical")]
    IdenticalPoints,
    #[error("triple contains a duplicate element")]
    DuplicateElement,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("tuple is degenerate: three of the four elements are collinear")]
    DegenerateTuple,
    #[error("plane coordinates must not all be zero")]
    ZeroPlane,
}

/// Lifts three coordinates to a common conductor and scales so the first
/// nonzero one equals 1.
fn canonicalize3(coords: [Cyclo; 3]) -> Result<([Cyclo; 3], u32), GeomError> {
    let conductor = coords
        .iter()
        .map(Cyclo::conductor)
        .fold(1u32, |a, b| {
            let l = (a as u64 * b as u64) / num_integer::gcd(a as u64, b as u64);
            u32::try_from(l).expect("conductor lcm out of range")
        });
    let mut lifted = coords.map(|c| c.lift(conductor).unwrap());
    let pivot = lifted
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(GeomError::ZeroVector)?;
    let scale = lifted[pivot].inv().unwrap();
    for c in lifted.iter_mut() {
        *c = &*c * &scale;
    }
    Ok((lifted, conductor))
}

macro_rules! homogeneous_triple {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name {
            coords: [Cyclo; 3],
            conductor: u32,
        }

        impl $name {
            /// Canonicalizes on construction; errors if all coordinates vanish.
            pub fn new(coords: [Cyclo; 3]) -> Result<Self, GeomError> {
                let (coords, conductor) = canonicalize3(coords)?;
                Ok(Self { coords, conductor })
            }

            /// Convenience constructor from small integers.
            pub fn from_ints(coords: [i64; 3]) -> Self {
                Self::new(coords.map(|v| Cyclo::integer(v, 1))).expect("nonzero coordinates")
            }

            pub fn coords(&self) -> &[Cyclo; 3] {
                &self.coords
            }

            pub fn conductor(&self) -> u32 {
                self.conductor
            }

            /// The canonical coordinate string, used as an exact dedup and
            /// hash key. Values compared this way must share a conductor.
            pub fn canonical_key(&self) -> String {
                format!(
                    "[{}:{}:{}]",
                    self.coords[0], self.coords[1], self.coords[2]
                )
            }

            /// The same element with coordinates lifted to conductor `m`.
            pub fn lift(&self, m: u32) -> Result<Self, crate::exactnum::NumError> {
                let coords = [
                    self.coords[0].lift(m)?,
                    self.coords[1].lift(m)?,
                    self.coords[2].lift(m)?,
                ];
                Ok(Self {
                    coords,
                    conductor: m,
                })
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(&self.canonical_key())
            }
        }
    };
}

homogeneous_triple!(
    ProjPoint,
    "A point of P², canonical homogeneous coordinates over Q(ζ_N)."
);
homogeneous_triple!(
    ProjLine,
    "A line of P², canonical dual homogeneous coordinates over Q(ζ_N)."
);

fn cross(a: &[Cyclo; 3], b: &[Cyclo; 3]) -> [Cyclo; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn dot(a: &[Cyclo; 3], b: &[Cyclo; 3]) -> Cyclo {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

pub(crate) fn det3(rows: [&[Cyclo; 3]; 3]) -> Cyclo {
    dot(rows[0], &cross(rows[1], rows[2]))
}

/// The unique intersection point of two distinct lines.
pub fn meet(a: &ProjLine, b: &ProjLine) -> Result<ProjPoint, GeomError> {
    if a == b {
        return Err(GeomError::IdenticalLines);
    }
    ProjPoint::new(cross(a.coords(), b.coords()))
}

/// The unique line through two distinct points.
pub fn join(a: &ProjPoint, b: &ProjPoint) -> Result<ProjLine, GeomError> {
    if a == b {
        return Err(GeomError::IdenticalPoints);
    }
    ProjLine::new(cross(a.coords(), b.coords()))
}

/// Exact incidence: Σ pᵢ ℓᵢ = 0.
pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    dot(p.coords(), l.coords()).is_zero()
}

/// True iff three pairwise distinct lines pass through a common point.
pub fn concurrent(lines: [&ProjLine; 3]) -> Result<bool, GeomError> {
    if lines[0] == lines[1] || lines[0] == lines[2] || lines[1] == lines[2] {
        return Err(GeomError::DuplicateElement);
    }
    Ok(det3([lines[0].coords(), lines[1].coords(), lines[2].coords()]).is_zero())
}

/// True iff three pairwise distinct points lie on a common line.
pub fn collinear(points: [&ProjPoint; 3]) -> Result<bool, GeomError> {
    if points[0] == points[1] || points[0] == points[2] || points[1] == points[2] {
        return Err(GeomError::DuplicateElement);
    }
    Ok(det3([points[0].coords(), points[1].coords(), points[2].coords()]).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Cyclo;

    fn line(c: [i64; 3]) -> ProjLine {
        ProjLine::from_ints(c)
    }
    fn point(c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(c)
    }

    #[test]
    fn meet_of_coordinate_lines() {
        let p = meet(&line([1, 0, 0]), &line([0, 1, 0])).unwrap();
        assert_eq!(p, point([0, 0, 1]));
    }

    #[test]
    fn meet_matches_triple_point() {
        let p = meet(&line([0, 1, -1]), &line([1, 0, -1])).unwrap();
        assert_eq!(p, point([1, 1, 1]));
    }

    #[test]
    fn pencil_lines_meet_at_first_vertex() {
        // [0:1:λ] and [0:1:μ] with λ ≠ μ meet at [1:0:0]
        let a = line([0, 1, 5]);
        let b = line([0, 1, 7]);
        assert_eq!(meet(&a, &b).unwrap(), point([1, 0, 0]));
    }

    #[test]
    fn meet_of_identical_lines_fails() {
        let a = line([1, 2, 3]);
        let scaled = ProjLine::new([
            Cyclo::integer(2, 1),
            Cyclo::integer(4, 1),
            Cyclo::integer(6, 1),
        ])
        .unwrap();
        assert_eq!(a, scaled);
        assert_eq!(meet(&a, &scaled), Err(GeomError::IdenticalLines));
    }

    #[test]
    fn join_of_coordinate_points() {
        assert_eq!(join(&point([0, 0, 1]), &point([0, 1, 0])).unwrap(), line([1, 0, 0]));
    }

    #[test]
    fn join_recovers_line_through_two_meets() {
        let l = line([1, 1, 1]);
        let m = line([1, -1, 0]);
        let n = line([0, 2, -1]);
        let a = meet(&l, &m).unwrap();
        let b = meet(&l, &n).unwrap();
        assert_eq!(join(&a, &b).unwrap(), l);
    }

    #[test]
    fn join_with_cyclotomic_coordinates_is_incident() {
        let xi = Cyclo::root_of_unity(3);
        let a = ProjPoint::new([Cyclo::one(3), Cyclo::one(3), Cyclo::one(3)]).unwrap();
        let b = ProjPoint::new([Cyclo::one(3), xi, Cyclo::one(3)]).unwrap();
        let l = join(&a, &b).unwrap();
        assert!(incident(&a, &l));
        assert!(incident(&b, &l));
    }

    #[test]
    fn incidence_with_roots_of_unity() {
        // [ξ:1:1] lies on [1:ξ²:1] because ξ + ξ² + 1 = 0
        let xi = Cyclo::root_of_unity(3);
        let p = ProjPoint::new([xi.clone(), Cyclo::one(3), Cyclo::one(3)]).unwrap();
        let l = ProjLine::new([Cyclo::one(3), xi.pow(2), Cyclo::one(3)]).unwrap();
        assert!(incident(&p, &l));
        assert!(incident(&point([0, 0, 1]), &line([1, 0, 0])));
        assert!(!incident(&point([1, 1, 1]), &line([1, 0, 0])));
    }

    #[test]
    fn coordinate_triangle_is_not_concurrent() {
        assert!(!concurrent([&line([1, 0, 0]), &line([0, 1, 0]), &line([0, 0, 1])]).unwrap());
    }

    #[test]
    fn concurrent_lines_through_a_vertex() {
        assert!(concurrent([&line([1, 0, 0]), &line([1, 1, 0]), &line([0, 1, 0])]).unwrap());
    }

    #[test]
    fn duplicate_in_triple_is_rejected() {
        let a = line([1, 0, 0]);
        assert_eq!(
            concurrent([&a, &a, &line([0, 1, 0])]),
            Err(GeomError::DuplicateElement)
        );
    }

    #[test]
    fn canonical_form_ignores_scale() {
        let p = ProjPoint::new([
            Cyclo::integer(-3, 1),
            Cyclo::integer(6, 1),
            Cyclo::integer(-9, 1),
        ])
        .unwrap();
        assert_eq!(p, point([1, -2, 3]));
        assert_eq!(p.canonical_key(), point([1, -2, 3]).canonical_key());
    }

    #[test]
    fn zero_vector_is_rejected() {
        assert_eq!(
            ProjPoint::new([Cyclo::zero(1), Cyclo::zero(1), Cyclo::zero(1)]),
            Err(GeomError::ZeroVector)
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_coord() -> impl Strategy<Value = Cyclo> {
            (-6i64..=6).prop_map(|v| Cyclo::integer(v, 1))
        }

        fn arb_line() -> impl Strategy<Value = ProjLine> {
            (arb_coord(), arb_coord(), arb_coord())
                .prop_filter_map("zero vector", |(a, b, c)| ProjLine::new([a, b, c]).ok())
        }

        proptest! {
            #[test]
            fn meets_are_incident((a, b) in (arb_line(), arb_line())) {
                prop_assume!(a != b);
                let p = meet(&a, &b).unwrap();
                prop_assert!(incident(&p, &a));
                prop_assert!(incident(&p, &b));
            }

            #[test]
            fn duality_join_of_meets((a, b, c) in (arb_line(), arb_line(), arb_line())) {
                prop_assume!(a != b && a != c && b != c);
                prop_assume!(!concurrent([&a, &b, &c]).unwrap());
                let p = meet(&a, &b).unwrap();
                let q = meet(&a, &c).unwrap();
                prop_assert_eq!(join(&p, &q).unwrap(), a);
            }
        }
    }
}
