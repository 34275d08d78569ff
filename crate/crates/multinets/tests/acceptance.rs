//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).
//! Every tolerance is pinned here; arithmetic checks are exact unless a
//! floating embedding is explicitly involved.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use multinets::catalog::{
    fermat, hesse, light34, monomial_g_n13, stipins33, z2z2_net, FamilyParams,
};
use multinets::completeness::{
    complete_3net_structure, eq2_balance, is_complete, local_test, rh_balance,
};
use multinets::induce::{classify_induced, induce, InduceError, TypeTag};
use multinets::multinet::{isotopic_to_group, projectively_equivalent, GroupSpec};
use multinets::projgeom::{incident, join, meet, ProjLine, ProjPoint};
use multinets::{BlockStructure, Cyclo, MultinetCandidate, Rat, VerifiedMultinet, WeightClass};

fn criterion<F>(number: u32, title: &str, body: F)
where
    F: FnOnce() + std::panic::UnwindSafe,
{
    let outcome = std::panic::catch_unwind(body);
    println!(
        "acceptance criterion {number:2} ({title}): {}",
        if outcome.is_ok() { "PASS" } else { "FAIL" }
    );
    if let Err(panic) = outcome {
        std::panic::resume_unwind(panic);
    }
}

fn verified(c: MultinetCandidate) -> VerifiedMultinet {
    VerifiedMultinet::new(c).expect("corpus member must verify")
}

fn rational_params(lambda: (i64, i64), mu: (i64, i64)) -> FamilyParams {
    FamilyParams::rational(lambda, mu)
}

#[test]
fn criterion_01_fermat_completeness() {
    criterion(1, "Fermat completeness for n = 2..6", || {
        for n in 2..=6u32 {
            let start = Instant::now();
            let m = verified(fermat(n));
            assert_eq!(m.k(), 3);
            assert_eq!(m.d(), n as u64);
            assert_eq!(m.weight_class(), WeightClass::Net);
            let (lhs, rhs) = eq2_balance(&m).unwrap();
            assert_eq!(lhs, 3 * (n as i64 - 1), "n = {n}");
            assert_eq!(rhs, 3 * (n as i64 - 1), "n = {n}");
            let b = rh_balance(&m);
            assert!(b.is_equality(), "n = {n}");
            assert!(
                start.elapsed() < Duration::from_secs(5),
                "fermat({n}) took {:?}",
                start.elapsed()
            );
        }
    });
}

#[test]
fn criterion_02_monomial_completeness() {
    criterion(2, "monomial (3,2n)-multinet completeness for n = 2..5", || {
        for n in 2..=5u32 {
            let m = verified(monomial_g_n13(n));
            assert_eq!(m.k(), 3);
            assert_eq!(m.d(), 2 * n as u64);
            assert_eq!(m.weight_class(), WeightClass::ProperHeavy);
            let a = m.analysis();
            assert_eq!(a.base.len(), (n * n + 3) as usize);
            assert_eq!(
                a.base.iter().filter(|p| p.n_p == n as u64).count(),
                3,
                "n = {n}"
            );
            assert!(is_complete(&m).unwrap(), "n = {n}");
            let report = local_test(&m);
            assert!(report.pass(), "n = {n}");
            for p in &report.points {
                assert_eq!(p.line_count, p.n_p + 2, "n = {n} at {}", p.point);
            }
        }
    });
}

#[test]
fn criterion_03_hesse() {
    criterion(3, "Hesse configuration", || {
        let m = verified(hesse());
        assert_eq!(m.k(), 4);
        assert_eq!(m.d(), 3);
        assert!(m.candidate().flat_lines().all(|(_, ml)| ml.mult == 1));
        let a = m.analysis();
        assert_eq!(a.base.len(), 9);
        assert_eq!(a.offbase.len(), 12);
        assert!(a.offbase.iter().all(|p| p.m_p == 2));
        let b = rh_balance(&m);
        assert_eq!((b.lhs, b.rhs), (12, 12));
    });
}

#[test]
fn criterion_04_induced_klein_net() {
    criterion(4, "induced Klein-group (3,4)-net", || {
        let xi = Cyclo::root_of_unity(3);
        let plane = [
            Cyclo::one(3),
            -(&xi + &Cyclo::one(3)),
            xi.clone(),
            Cyclo::zero(3),
        ];
        let r = induce(3, plane).unwrap();
        assert_eq!(r.canceled.iter().map(|&(_, m)| m).sum::<u32>(), 2);
        assert_eq!(r.canceled.len(), 2);
        let m = verified(r.arrangement.clone());
        assert_eq!(m.k(), 3);
        assert_eq!(m.d(), 4);
        assert_eq!(m.weight_class(), WeightClass::Net);
        let a = m.analysis();
        assert_eq!(a.base.len(), 16);
        assert!(a.base.iter().all(|p| p.n_p == 1));
        assert!(projectively_equivalent(&r.arrangement, &z2z2_net())
            .unwrap()
            .is_some());
        let latin = m.extract_latin().unwrap();
        assert!(isotopic_to_group(&latin, &GroupSpec::Klein).unwrap());
        assert_eq!(classify_induced(&r).tag, TypeTag::T8);
    });
}

#[test]
fn criterion_05_induced_monomial() {
    criterion(5, "induced monomial multinets from the plane x0 = 0", || {
        for n in [2u32, 3] {
            let r = induce(n, [
                Cyclo::one(1),
                Cyclo::zero(1),
                Cyclo::zero(1),
                Cyclo::zero(1),
            ])
            .unwrap();
            assert!(
                projectively_equivalent(&r.arrangement, &monomial_g_n13(n))
                    .unwrap()
                    .is_some(),
                "n = {n}"
            );
            assert_eq!(classify_induced(&r).tag, TypeTag::T1, "n = {n}");
        }
    });
}

fn rational_square_root(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let is_square = |x: &BigInt| -> Option<BigInt> {
        let s = x.sqrt();
        (&s * &s == *x).then_some(s)
    };
    let n = is_square(r.numer())?;
    let d = is_square(r.denom())?;
    Some(Rat::new(n, d))
}

#[test]
fn criterion_06_stipins_specializations() {
    criterion(6, "(3,3) specializations and the pencil-condition sweep", || {
        let all_gp = verified(stipins33(&rational_params((2, 1), (5, 1))).unwrap());
        for i in 0..3 {
            assert_eq!(
                all_gp.candidate().block_structure(i).unwrap(),
                BlockStructure::GeneralPosition
            );
        }
        assert!(!is_complete(&all_gp).unwrap());

        for (lambda, mu) in [((4i64, 1i64), (-2i64, 1i64)), ((-1, 2), (-2, 1))] {
            let c = stipins33(&rational_params(lambda, mu)).unwrap();
            // oracle: concurrency is a vanishing 3x3 determinant
            let block2: Vec<&ProjLine> = c.blocks()[1].iter().map(|ml| &ml.line).collect();
            assert!(multinets::projgeom::concurrent([block2[0], block2[1], block2[2]]).unwrap());
            assert_eq!(c.block_structure(0).unwrap(), BlockStructure::GeneralPosition);
            assert_eq!(c.block_structure(1).unwrap(), BlockStructure::Pencil);
            assert_eq!(c.block_structure(2).unwrap(), BlockStructure::GeneralPosition);
        }

        // sweep: rational solutions of μ² + (λ² − 3λ)μ + λ = 0 over the grid
        // |λ| <= 10 with denominators <= 4 never make block 3 a pencil too
        let mut solutions = 0usize;
        for den in 1i64..=4 {
            for num in -10 * den..=10 * den {
                if num_integer::gcd(num, den) != 1 {
                    continue;
                }
                let lambda = Rat::new(BigInt::from(num), BigInt::from(den));
                if lambda.is_zero() || lambda == Rat::from_integer(BigInt::from(1)) {
                    continue;
                }
                let b = &lambda * &lambda - Rat::from_integer(BigInt::from(3)) * &lambda;
                let disc = &b * &b - Rat::from_integer(BigInt::from(4)) * &lambda;
                let Some(sqrt) = rational_square_root(&disc) else {
                    continue;
                };
                for sign in [1i64, -1] {
                    let mu = (-&b + Rat::from_integer(BigInt::from(sign)) * &sqrt)
                        / Rat::from_integer(BigInt::from(2));
                    if mu.is_zero()
                        || mu == Rat::from_integer(BigInt::from(1))
                        || mu == lambda
                    {
                        continue;
                    }
                    let p = FamilyParams::new(
                        Cyclo::from_rat(lambda.clone(), 1),
                        Cyclo::from_rat(mu.clone(), 1),
                    );
                    let c = stipins33(&p).unwrap();
                    solutions += 1;
                    assert_eq!(
                        c.block_structure(1).unwrap(),
                        BlockStructure::Pencil,
                        "λ={lambda} μ={mu}"
                    );
                    assert_ne!(
                        c.block_structure(2).unwrap(),
                        BlockStructure::Pencil,
                        "λ={lambda} μ={mu}: one general-position and two pencil blocks"
                    );
                }
            }
        }
        assert!(solutions > 0, "the sweep must exercise real solutions");
    });
}

#[test]
fn criterion_07_light34_specializations() {
    criterion(7, "light (3,4) specializations", || {
        let cases: [((i64, i64), (i64, i64), [BlockStructure; 3]); 4] = [
            (
                (-1, 1),
                (3, 1),
                [BlockStructure::Easel, BlockStructure::Easel, BlockStructure::Easel],
            ),
            (
                (-1, 1),
                (1, 3),
                [BlockStructure::Easel, BlockStructure::Easel, BlockStructure::Easel],
            ),
            (
                (-1, 1),
                (2, 1),
                [
                    BlockStructure::GeneralPosition,
                    BlockStructure::Easel,
                    BlockStructure::GeneralPosition,
                ],
            ),
            (
                (2, 1),
                (5, 1),
                [
                    BlockStructure::GeneralPosition,
                    BlockStructure::GeneralPosition,
                    BlockStructure::GeneralPosition,
                ],
            ),
        ];
        for (lambda, mu, expected) in cases {
            let c = light34(&rational_params(lambda, mu)).unwrap();
            for (i, want) in expected.iter().enumerate() {
                assert_eq!(
                    c.block_structure(i).unwrap(),
                    *want,
                    "λ={lambda:?} μ={mu:?} block {i}"
                );
            }
            let m = verified(c);
            assert_eq!(m.weight_class(), WeightClass::ProperLight);
            let doubles: Vec<_> = m.analysis().base.iter().filter(|p| p.n_p == 2).collect();
            assert_eq!(doubles.len(), 1, "λ={lambda:?} μ={mu:?}");
            assert_eq!(doubles[0].point, ProjPoint::from_ints([1, 0, 0]));
            assert!(!is_complete(&m).unwrap(), "λ={lambda:?} μ={mu:?}");
        }
    });
}

#[test]
fn criterion_08_local_test_necessity() {
    criterion(8, "local test necessity", || {
        let nets: Vec<(String, VerifiedMultinet)> = vec![
            ("fermat(2)".into(), verified(fermat(2))),
            ("fermat(4)".into(), verified(fermat(4))),
            ("hesse".into(), verified(hesse())),
            ("z2z2".into(), verified(z2z2_net())),
            (
                "stipins(2,5)".into(),
                verified(stipins33(&rational_params((2, 1), (5, 1))).unwrap()),
            ),
        ];
        for (name, m) in &nets {
            assert_eq!(m.weight_class(), WeightClass::Net, "{name}");
            assert!(local_test(m).pass(), "{name}");
        }
        // lowering one coordinate-line multiplicity must never produce a
        // complete verdict: verification or the local test has to fail
        for n in 2..=5u32 {
            let c = monomial_g_n13(n);
            let mut blocks = c.blocks().to_vec();
            blocks[0][0].mult = 1;
            let tampered = MultinetCandidate::new(c.conductor(), blocks).unwrap();
            let rejected = match VerifiedMultinet::new(tampered) {
                Err(_) => true,
                Ok(m) => !local_test(&m).pass() || !is_complete(&m).unwrap(),
            };
            assert!(rejected, "n = {n}: a type-2-like input reached a complete verdict");
        }
    });
}

#[test]
fn criterion_09_property_suites() {
    criterion(9, "randomized property suites", || {
        let started = Instant::now();
        let mut rng = StdRng::seed_from_u64(0x6d756c74696e6574);

        // exact field axioms and text round-trips, 500 cases at N <= 12
        let random_cyclo = |rng: &mut StdRng| -> Cyclo {
            let n = rng.random_range(1u32..=12);
            let terms = rng.random_range(0usize..4);
            let coeffs: Vec<Rat> = (0..=terms)
                .map(|_| {
                    Rat::new(
                        BigInt::from(rng.random_range(-999i64..=999)),
                        BigInt::from(rng.random_range(1i64..=999)),
                    )
                })
                .collect();
            Cyclo::from_coeffs(n, coeffs)
        };
        for _ in 0..500 {
            let (a, b, c) = (
                random_cyclo(&mut rng),
                random_cyclo(&mut rng),
                random_cyclo(&mut rng),
            );
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                assert!((&a * &a.inv().unwrap()).is_one());
            }
            let round = Cyclo::parse(&a.to_string(), a.conductor()).unwrap();
            assert_eq!(round, a);
        }

        // duality laws, 500 cases
        let random_line = |rng: &mut StdRng| -> ProjLine {
            loop {
                let coords = [
                    Cyclo::integer(rng.random_range(-9i64..=9), 1),
                    Cyclo::integer(rng.random_range(-9i64..=9), 1),
                    Cyclo::integer(rng.random_range(-9i64..=9), 1),
                ];
                if let Ok(l) = ProjLine::new(coords) {
                    return l;
                }
            }
        };
        let mut checked = 0usize;
        while checked < 500 {
            let (a, b, c) = (
                random_line(&mut rng),
                random_line(&mut rng),
                random_line(&mut rng),
            );
            if a == b || a == c || b == c {
                continue;
            }
            let p = meet(&a, &b).unwrap();
            assert!(incident(&p, &a) && incident(&p, &b));
            if multinets::projgeom::concurrent([&a, &b, &c]).unwrap() {
                continue;
            }
            let q = meet(&a, &c).unwrap();
            assert_eq!(join(&p, &q).unwrap(), a);
            checked += 1;
        }

        // induced arrangements over 50 small rational planes, n <= 3
        let mut classified = 0usize;
        while classified < 50 {
            let n = rng.random_range(1u32..=3);
            let coords = [
                Cyclo::integer(rng.random_range(-3i64..=3), 1),
                Cyclo::integer(rng.random_range(-3i64..=3), 1),
                Cyclo::integer(rng.random_range(-3i64..=3), 1),
                Cyclo::integer(rng.random_range(-3i64..=3), 1),
            ];
            if coords.iter().all(Cyclo::is_zero) {
                continue;
            }
            let r = match induce(n, coords.clone()) {
                Ok(r) => r,
                Err(InduceError::PlaneInArrangement) => continue,
                Err(e) => panic!("unexpected induce error: {e}"),
            };
            match VerifiedMultinet::new(r.arrangement.clone()) {
                Ok(m) => {
                    let p = m.property_checks();
                    assert!(p.bezout, "Bézout fails for n={n}");
                    assert!(p.all_hold(), "identities fail for n={n}");
                }
                Err(_) => {
                    assert_eq!(classify_induced(&r).tag, TypeTag::Trivial, "n={n}");
                }
            }
            classified += 1;
        }

        assert!(
            started.elapsed() < Duration::from_secs(120),
            "property suites took {:?}",
            started.elapsed()
        );
    });
}

#[test]
fn criterion_10_complete_three_nets_are_fermat() {
    criterion(10, "complete 3-nets of degree 2..6 are Fermat", || {
        let mut corpus: Vec<(String, VerifiedMultinet)> = Vec::new();
        for n in 2..=6 {
            corpus.push((format!("fermat({n})"), verified(fermat(n))));
        }
        for n in 2..=5 {
            corpus.push((format!("monomial({n})"), verified(monomial_g_n13(n))));
        }
        corpus.push(("hesse".into(), verified(hesse())));
        corpus.push(("z2z2".into(), verified(z2z2_net())));
        corpus.push((
            "stipins(2,5)".into(),
            verified(stipins33(&rational_params((2, 1), (5, 1))).unwrap()),
        ));
        corpus.push((
            "stipins(4,-2)".into(),
            verified(stipins33(&rational_params((4, 1), (-2, 1))).unwrap()),
        ));
        corpus.push((
            "light34(-1,3)".into(),
            verified(light34(&rational_params((-1, 1), (3, 1))).unwrap()),
        ));

        let mut certified = 0usize;
        for (name, m) in &corpus {
            let complete_net = m.k() == 3
                && m.weight_class() == WeightClass::Net
                && (2..=6).contains(&m.d())
                && is_complete(m).unwrap();
            if !complete_net {
                continue;
            }
            for i in 0..3 {
                assert_eq!(
                    m.candidate().block_structure(i).unwrap(),
                    BlockStructure::Pencil,
                    "{name} block {i}"
                );
            }
            let cert = complete_3net_structure(m)
                .unwrap_or_else(|e| panic!("{name}: structure violation: {e}"));
            assert_eq!(cert.d, m.d(), "{name}");
            certified += 1;
        }
        assert_eq!(certified, 5, "expected exactly the five Fermat nets");
    });
}
