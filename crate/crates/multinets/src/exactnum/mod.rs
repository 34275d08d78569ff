//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! Every coordinate in this crate is a [`Cyclo`]: a vector of rationals over
//! the power basis 1, ζ_N, …, ζ_N^{φ(N)−1}, reduced modulo the N-th
//! cyclotomic polynomial. All equality decisions are exact; the floating
//! embedding exists for rendering and debugging only.

mod parse;
mod phi;

pub use phi::{cyclotomic_polynomial, divisors, totient};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar. Always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} does not divide {1}")]
    NotADivisor(u32, u32),
    #[error("syntax error at byte {at}: {msg}")]
    Syntax { at: usize, msg: String },
    #[error("atom conductor {atom} does not divide declared conductor {declared}")]
    ConductorMismatch { atom: u32, declared: u32 },
}

/// An element of Q(ζ_N) for the conductor N fixed at construction.
///
/// Invariants: `coeffs.len() == φ(N)` and the vector is the unique reduced
/// residue modulo Φ_N, so two values at the same conductor are equal iff
/// their coefficient vectors are equal. Values at different conductors are
/// compared after lifting both into the compositum Q(ζ_lcm).
#[derive(Debug, Clone)]
pub struct Cyclo {
    conductor: u32,
    coeffs: Vec<Rat>,
}

fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    let l = (a as u64).lcm(&(b as u64));
    u32::try_from(l).expect("conductor lcm out of range")
}

/// Remainder of `poly` modulo Φ_N, returned with length exactly φ(N).
fn reduce_mod_phi(mut poly: Vec<Rat>, n: u32) -> Vec<Rat> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    while poly.len() > deg {
        let c = poly.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let base = poly.len() - deg;
        for (j, pc) in phi.iter().enumerate().take(deg) {
            let t = &c * Rat::from_integer(pc.clone());
            poly[base + j] -= t;
        }
    }
    poly.resize(deg, Rat::zero());
    poly
}

impl Cyclo {
    /// Builds an element from raw power-basis coefficients (any length),
    /// reducing modulo Φ_N.
    pub fn from_coeffs(conductor: u32, coeffs: Vec<Rat>) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        Cyclo {
            conductor,
            coeffs: reduce_mod_phi(coeffs, conductor),
        }
    }

    pub fn zero(conductor: u32) -> Self {
        Cyclo::from_coeffs(conductor, Vec::new())
    }

    pub fn one(conductor: u32) -> Self {
        Cyclo::from_rat(Rat::from_integer(BigInt::from(1)), conductor)
    }

    pub fn from_rat(r: Rat, conductor: u32) -> Self {
        Cyclo::from_coeffs(conductor, vec![r])
    }

    /// The integer `v` as an element of Q(ζ_N).
    pub fn integer(v: i64, conductor: u32) -> Self {
        Cyclo::from_rat(rat_int(v), conductor)
    }

    /// The rational `num/den` as an element of Q(ζ_N).
    pub fn rational(num: i64, den: i64, conductor: u32) -> Self {
        assert!(den != 0, "zero denominator");
        Cyclo::from_rat(Rat::new(BigInt::from(num), BigInt::from(den)), conductor)
    }

    /// ζ_N, the distinguished primitive N-th root of unity exp(2πi/N).
    pub fn root_of_unity(n: u32) -> Self {
        Cyclo::root_power(n, 1)
    }

    /// ζ_N^k at conductor N.
    pub fn root_power(n: u32, k: u32) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = (k % n) as usize;
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::from_integer(BigInt::from(1));
        Cyclo::from_coeffs(n, coeffs)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Exact zero test: true iff all coefficients vanish. This is the
    /// predicate underlying every incidence decision in the crate.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Some(r) iff the value lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the same field element at conductor `m` via ζ_N = ζ_m^{m/N}.
    pub fn lift(&self, m: u32) -> Result<Cyclo, NumError> {
        if m % self.conductor != 0 {
            return Err(NumError::NotADivisor(self.conductor, m));
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let stride = (m / self.conductor) as usize;
        let mut coeffs = vec![Rat::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * stride] = c.clone();
        }
        Ok(Cyclo::from_coeffs(m, coeffs))
    }

    fn lift_pair(&self, other: &Cyclo) -> (Cyclo, Cyclo) {
        let l = lcm_u32(self.conductor, other.conductor);
        (self.lift(l).unwrap(), other.lift(l).unwrap())
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm on the
    /// residue polynomial and Φ_N over Q.
    pub fn inv(&self) -> Result<Cyclo, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let phi: Vec<Rat> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        let s = poly_modular_inverse(&self.coeffs, &phi)
            .expect("Φ_N is irreducible, nonzero residues are invertible");
        Ok(Cyclo::from_coeffs(self.conductor, s))
    }

    pub fn pow(&self, mut e: u32) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugate, i.e. the Galois image under ζ_N ↦ ζ_N^{-1}.
    pub fn conjugate(&self) -> Cyclo {
        let n = self.conductor as usize;
        let mut coeffs = vec![Rat::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[(n - j) % n] += c;
            }
        }
        Cyclo::from_coeffs(self.conductor, coeffs)
    }

    /// True iff the value is fixed by complex conjugation, exactly.
    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// Floating approximation under ζ_N ↦ exp(2πi/N). Rendering and
    /// debugging only; never used for equality decisions.
    pub fn complex_embed(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / n;
            re += x * theta.cos();
            im += x * theta.sin();
        }
        (re, im)
    }

    /// Parses a coordinate expression at the declared conductor.
    ///
    /// Grammar: a signed sum of terms, where a term is a rational, an atom
    /// `zN` / `zN^k`, or `rational*atom`; every atom's N must divide the
    /// declared conductor.
    pub fn parse(text: &str, conductor: u32) -> Result<Cyclo, NumError> {
        parse::parse_cyclo(text, conductor)
    }

    /// Parses an expression, inferring the conductor as the lcm of all atom
    /// conductors appearing in it (1 for pure rationals).
    pub fn parse_infer(text: &str) -> Result<Cyclo, NumError> {
        parse::parse_cyclo_infer(text)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = self.lift_pair(other);
            a.coeffs == b.coeffs
        }
    }
}
impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format_cyclo(self))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait for &Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                $impl_fn(self, rhs)
            }
        }
        impl $trait for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                $impl_fn(&self, rhs)
            }
        }
        impl $trait<Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                $impl_fn(self, &rhs)
            }
        }
    };
}

fn add_impl(a: &Cyclo, b: &Cyclo) -> Cyclo {
    let (mut x, y) = a.lift_pair(b);
    for (c, d) in x.coeffs.iter_mut().zip(y.coeffs.iter()) {
        *c += d;
    }
    x
}

fn sub_impl(a: &Cyclo, b: &Cyclo) -> Cyclo {
    let (mut x, y) = a.lift_pair(b);
    for (c, d) in x.coeffs.iter_mut().zip(y.coeffs.iter()) {
        *c -= d;
    }
    x
}

fn mul_impl(a: &Cyclo, b: &Cyclo) -> Cyclo {
    let (x, y) = a.lift_pair(b);
    let mut prod = vec![Rat::zero(); x.coeffs.len() + y.coeffs.len() - 1];
    for (i, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, d) in y.coeffs.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            prod[i + j] += c * d;
        }
    }
    Cyclo::from_coeffs(x.conductor, prod)
}

binop!(Add, add, add_impl);
binop!(Sub, sub, sub_impl);
binop!(Mul, mul, mul_impl);

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

fn poly_deg(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// (quotient, remainder) of polynomial division over Q.
fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = poly_deg(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    let nd = match poly_deg(&rem) {
        Some(d) if d >= dd => d,
        _ => return (vec![], rem),
    };
    let mut quot = vec![Rat::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        let c = &rem[i] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate().take(dd + 1) {
            let t = &c * dc;
            rem[i - dd + j] -= t;
        }
        quot[i - dd] = c;
    }
    (quot, rem)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            out[i + j] += c * d;
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rat::zero());
    }
    for (i, d) in b.iter().enumerate() {
        out[i] -= d;
    }
    out
}

/// s with s·a ≡ 1 (mod m), for gcd(a, m) a nonzero constant.
fn poly_modular_inverse(a: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
    // Euclidean chain on (m, a), tracking Bézout coefficients of a.
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    let mut t0: Vec<Rat> = vec![];
    let mut t1: Vec<Rat> = vec![Rat::from_integer(BigInt::from(1))];
    while poly_deg(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    let d = poly_deg(&r0)?;
    if d != 0 {
        return None;
    }
    let g = r0[0].clone();
    Some(t0.iter().map(|c| c / &g).collect())
}

/// Decimal string for a rational, "n" or "n/d".
pub(crate) fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
