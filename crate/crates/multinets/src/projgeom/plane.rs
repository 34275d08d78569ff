//! Planes of P³ with a deterministic coordinate frame, used to restrict
//! hyperplane arrangements down to P².

use crate::exactnum::Cyclo;

use super::GeomError;

/// A plane H ⊂ P³ in dual coordinates together with three independent
/// points spanning it. The basis identifies H with P²: the point of H with
/// frame coordinates (u₀:u₁:u₂) is u₀b₀ + u₁b₁ + u₂b₂.
#[derive(Debug, Clone)]
pub struct Plane3 {
    coords: [Cyclo; 4],
    basis: [[Cyclo; 4]; 3],
}

fn dot4(a: &[Cyclo; 4], b: &[Cyclo; 4]) -> Cyclo {
    let mut acc = Cyclo::zero(1);
    for (x, y) in a.iter().zip(b.iter()) {
        acc = &acc + &(x * y);
    }
    acc
}

impl Plane3 {
    /// Builds the plane and its frame: with pivot the first nonzero dual
    /// coordinate (scaled to 1), the basis vectors are e_j − h_j·e_pivot
    /// over the three non-pivot indices j.
    pub fn new(coords: [Cyclo; 4]) -> Result<Self, GeomError> {
        let conductor = coords.iter().map(Cyclo::conductor).fold(1u32, |a, b| {
            let l = (a as u64 * b as u64) / num_integer::gcd(a as u64, b as u64);
            u32::try_from(l).expect("conductor lcm out of range")
        });
        let mut h = coords.map(|c| c.lift(conductor).unwrap());
        let pivot = h
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(GeomError::ZeroPlane)?;
        let scale = h[pivot].inv().unwrap();
        for c in h.iter_mut() {
            *c = &*c * &scale;
        }
        let free: Vec<usize> = (0..4).filter(|&j| j != pivot).collect();
        let basis = std::array::from_fn(|row| {
            let j = free[row];
            std::array::from_fn(|i| {
                if i == j {
                    Cyclo::one(conductor)
                } else if i == pivot {
                    -h[j].clone()
                } else {
                    Cyclo::zero(conductor)
                }
            })
        });
        let plane = Plane3 { coords: h, basis };
        debug_assert!(plane
            .basis
            .iter()
            .all(|b| dot4(&plane.coords, b).is_zero()));
        Ok(plane)
    }

    pub fn coords(&self) -> &[Cyclo; 4] {
        &self.coords
    }

    pub fn basis(&self) -> &[[Cyclo; 4]; 3] {
        &self.basis
    }

    /// Pulls a linear form on P³ back to frame coordinates on the plane.
    /// Zero output means the form vanishes identically on H.
    pub fn restrict_form(&self, w: &[Cyclo; 4]) -> [Cyclo; 3] {
        std::array::from_fn(|i| dot4(w, &self.basis[i]))
    }

    /// Embeds frame coordinates back into P³.
    pub fn embed(&self, u: &[Cyclo; 3]) -> [Cyclo; 4] {
        std::array::from_fn(|i| {
            let mut acc = Cyclo::zero(1);
            for (c, b) in u.iter().zip(self.basis.iter()) {
                acc = &acc + &(c * &b[i]);
            }
            acc
        })
    }

    /// True iff the dual coordinates describe the same plane.
    pub fn same_plane(&self, other: &[Cyclo; 4]) -> bool {
        let l = num_integer::lcm(
            self.coords.iter().map(Cyclo::conductor).fold(1u64, |a, b| num_integer::lcm(a, b as u64)),
            other.iter().map(Cyclo::conductor).fold(1u64, |a, b| num_integer::lcm(a, b as u64)),
        );
        let l = u32::try_from(l).expect("conductor lcm out of range");
        let pivot = match other.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        if self.coords[pivot].is_zero() {
            return false;
        }
        let s = &self.coords[pivot].lift(l).unwrap().inv().unwrap()
            * &other[pivot].lift(l).unwrap();
        // other == s · self, coordinatewise
        self.coords
            .iter()
            .zip(other.iter())
            .all(|(a, b)| b.lift(l).unwrap() == &a.lift(l).unwrap() * &s)
    }
}
