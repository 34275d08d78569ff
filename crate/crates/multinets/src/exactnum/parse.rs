//! The coordinate-expression grammar and its canonical formatter.
//!
//! ```text
//! expr     := [sign] term { sign term }
//! term     := rational | rational "*" atom | atom
//! atom     := "z" N | "z" N "^" k
//! rational := int | int "/" posint
//! ```
//!
//! Whitespace is ignored. Every atom conductor N must divide the declared
//! conductor. This grammar is the wire format for all coordinates in JSON
//! documents, so `parse(format(a)) = a` must hold exactly.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{lcm_u32, rat_abs, rat_to_string, Cyclo, NumError, Rat};

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, msg: &str) -> NumError {
        NumError::Syntax {
            at: self.pos,
            msg: msg.to_string(),
        }
    }

    fn digits(&mut self) -> Result<BigInt, NumError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small(&mut self, what: &str) -> Result<u32, NumError> {
        let d = self.digits()?;
        u32::try_from(&d).map_err(|_| self.err(&format!("{what} out of range")))
    }
}

/// One parsed term: optional rational coefficient times optional root atom.
fn parse_term(sc: &mut Scanner<'_>, conductor: u32) -> Result<Cyclo, NumError> {
    let mut coeff = Rat::from_integer(BigInt::from(1));
    let mut have_rational = false;
    match sc.peek() {
        Some(b) if b.is_ascii_digit() => {
            let numer = sc.digits()?;
            let denom = if sc.peek() == Some(b'/') {
                sc.bump();
                let d = sc.digits()?;
                if d.is_zero() {
                    return Err(sc.err("zero denominator"));
                }
                d
            } else {
                BigInt::from(1)
            };
            coeff = Rat::new(numer, denom);
            have_rational = true;
        }
        Some(b'z') => {}
        _ => return Err(sc.err("expected a term")),
    }
    let explicit_star = have_rational && sc.peek() == Some(b'*');
    if explicit_star {
        sc.bump();
    }
    let wants_atom = explicit_star || !have_rational;
    if !wants_atom {
        return Ok(Cyclo::from_rat(coeff, conductor));
    }
    if sc.peek() != Some(b'z') {
        return Err(sc.err("expected root-of-unity atom"));
    }
    sc.bump();
    let n = sc.small("atom conductor")?;
    if n == 0 {
        return Err(sc.err("atom conductor must be positive"));
    }
    let k = if sc.peek() == Some(b'^') {
        sc.bump();
        sc.small("exponent")?
    } else {
        1
    };
    if conductor % n != 0 {
        return Err(NumError::ConductorMismatch {
            atom: n,
            declared: conductor,
        });
    }
    let atom = Cyclo::root_power(n, k).lift(conductor).unwrap();
    Ok(&Cyclo::from_rat(coeff, conductor) * &atom)
}

pub(super) fn parse_cyclo(text: &str, conductor: u32) -> Result<Cyclo, NumError> {
    assert!(conductor >= 1, "conductor must be positive");
    let mut sc = Scanner::new(text);
    let mut acc = Cyclo::zero(conductor);
    let mut negate = false;
    match sc.peek() {
        Some(b'+') => {
            sc.bump();
        }
        Some(b'-') => {
            sc.bump();
            negate = true;
        }
        _ => {}
    }
    loop {
        let term = parse_term(&mut sc, conductor)?;
        acc = if negate { &acc - &term } else { &acc + &term };
        match sc.peek() {
            None => return Ok(acc),
            Some(b'+') => {
                sc.bump();
                negate = false;
            }
            Some(b'-') => {
                sc.bump();
                negate = true;
            }
            Some(_) => return Err(sc.err("expected '+' or '-'")),
        }
    }
}

/// Scans for `zN` atoms and parses at the lcm of their conductors.
pub(super) fn parse_cyclo_infer(text: &str) -> Result<Cyclo, NumError> {
    let bytes = text.as_bytes();
    let mut conductor = 1u32;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'z' {
            let start = i + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end > start {
                let n: u32 = std::str::from_utf8(&bytes[start..end])
                    .unwrap()
                    .parse()
                    .map_err(|_| NumError::Syntax {
                        at: start,
                        msg: "atom conductor out of range".to_string(),
                    })?;
                if n == 0 {
                    return Err(NumError::Syntax {
                        at: start,
                        msg: "atom conductor must be positive".to_string(),
                    });
                }
                conductor = lcm_u32(conductor, n);
            }
            i = end;
        } else {
            i += 1;
        }
    }
    parse_cyclo(text, conductor)
}

/// Canonical string: terms in ascending power order, zero coefficients
/// suppressed, "0" for zero. Inverse of the parser at the same conductor.
pub(super) fn format_cyclo(a: &Cyclo) -> String {
    let n = a.conductor();
    let mut out = String::new();
    for (j, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = rat_abs(c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = if j == 0 {
            rat_to_string(&mag)
        } else {
            let atom = if j == 1 {
                format!("z{n}")
            } else {
                format!("z{n}^{j}")
            };
            if mag == Rat::from_integer(BigInt::from(1)) {
                atom
            } else {
                format!("{}*{}", rat_to_string(&mag), atom)
            }
        };
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{Cyclo, NumError};

    #[test]
    fn parses_mixed_expression() {
        // reduce with Φ_6 = x² − x + 1: ζ_6² = ζ_6 − 1
        let got = Cyclo::parse("1/2*z6^2 - 3", 6).unwrap();
        let expected = &(&Cyclo::rational(1, 2, 6) * &Cyclo::root_of_unity(6))
            + &Cyclo::rational(-7, 2, 6);
        assert_eq!(got, expected);
        let (re, im) = got.complex_embed();
        assert!((re - (-3.25)).abs() < 1e-12);
        assert!((im - 3f64.sqrt() / 4.0).abs() < 1e-12);
    }

    #[test]
    fn parses_zero_at_conductor_one() {
        assert_eq!(Cyclo::parse("0", 1).unwrap(), Cyclo::zero(1));
    }

    #[test]
    fn rejects_conductor_mismatch() {
        assert_eq!(
            Cyclo::parse("z4", 6),
            Err(NumError::ConductorMismatch {
                atom: 4,
                declared: 6
            })
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(Cyclo::parse("1 +", 3), Err(NumError::Syntax { .. })));
        assert!(matches!(Cyclo::parse("3*", 3), Err(NumError::Syntax { .. })));
        assert!(matches!(Cyclo::parse("", 3), Err(NumError::Syntax { .. })));
        assert!(matches!(Cyclo::parse("1/0", 3), Err(NumError::Syntax { .. })));
        assert!(matches!(Cyclo::parse("z0", 3), Err(NumError::Syntax { .. })));
    }

    #[test]
    fn formats_simple_values() {
        assert_eq!(Cyclo::integer(-1, 1).to_string(), "-1");
        assert_eq!((&Cyclo::root_of_unity(6) - &Cyclo::one(6)).to_string(), "-1 + z6");
        assert_eq!(Cyclo::zero(5).to_string(), "0");
        assert_eq!((-Cyclo::root_of_unity(4)).to_string(), "-z4");
        assert_eq!(Cyclo::parse("1/2*z6^2 - 3", 6).unwrap().to_string(), "-7/2 + 1/2*z6");
    }

    #[test]
    fn infer_conductor_from_atoms() {
        assert_eq!(Cyclo::parse_infer("-z3-1").unwrap().conductor(), 3);
        assert_eq!(Cyclo::parse_infer("7/2").unwrap().conductor(), 1);
        assert_eq!(
            Cyclo::parse_infer("z4 + z6").unwrap().conductor(),
            12
        );
    }

    mod properties {
        use super::super::super::{Cyclo, Rat};
        use num_bigint::BigInt;
        use proptest::prelude::*;

        fn arb_cyclo() -> impl Strategy<Value = Cyclo> {
            (1u32..=12, proptest::collection::vec((-99i64..=99, 1i64..=99), 0..5)).prop_map(
                |(n, terms)| {
                    let coeffs = terms
                        .into_iter()
                        .map(|(p, q)| Rat::new(BigInt::from(p), BigInt::from(q)))
                        .collect();
                    Cyclo::from_coeffs(n, coeffs)
                },
            )
        }

        proptest! {
            #[test]
            fn parse_inverts_format(a in arb_cyclo()) {
                let s = a.to_string();
                let back = Cyclo::parse(&s, a.conductor()).unwrap();
                prop_assert_eq!(back, a);
            }

            #[test]
            fn format_is_idempotent_on_canonical_strings(a in arb_cyclo()) {
                let s = a.to_string();
                let t = Cyclo::parse(&s, a.conductor()).unwrap().to_string();
                prop_assert_eq!(s, t);
            }
        }
    }
}
