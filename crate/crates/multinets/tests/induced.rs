//! Restriction of Q_n to planes: fibers, cancellation, assembly, and the
//! ten-type classification.

use multinets::catalog::{monomial_g_n13, qn_in_p3, z2z2_net};
use multinets::induce::{
    cancel_fixed, classify_induced, induce, plane_basis, restrict_arrangement, InduceError,
    RestrictedFiber, TypeTag,
};
use multinets::multinet::{isotopic_to_group, projectively_equivalent, GroupSpec};
use multinets::projgeom::{meet, ProjLine};
use multinets::{Cyclo, VerifiedMultinet};

fn ints4(v: [i64; 4]) -> [Cyclo; 4] {
    v.map(|x| Cyclo::integer(x, 1))
}

/// Dual coordinates of the plane x₀ = (ξ+1)x₁ − ξx₂ from the Klein-group
/// construction.
fn klein_plane() -> [Cyclo; 4] {
    let xi = Cyclo::root_of_unity(3);
    [
        Cyclo::one(3),
        -(&xi + &Cyclo::one(3)),
        xi,
        Cyclo::zero(3),
    ]
}

#[test]
fn coordinate_plane_restricts_to_monomial_pattern() {
    for n in [2u32, 3] {
        let q = qn_in_p3(n);
        let h = plane_basis(ints4([1, 0, 0, 0])).unwrap();
        let fibers = restrict_arrangement(&q, &h).unwrap();
        for fiber in &fibers {
            assert_eq!(fiber.total_multiplicity(), 2 * n);
        }
        // each fiber: one line of multiplicity n plus n simple lines
        for fiber in &fibers {
            let mut mults: Vec<u32> = fiber.lines.iter().map(|&(_, m)| m).collect();
            mults.sort_unstable();
            let mut expected = vec![1u32; n as usize];
            expected.push(n);
            assert_eq!(mults, expected);
        }
    }
}

#[test]
fn q1_generic_plane_gives_three_fibers_of_two_lines() {
    let q = qn_in_p3(1);
    let h = plane_basis(ints4([1, 2, 3, 5])).unwrap();
    let fibers = restrict_arrangement(&q, &h).unwrap();
    for fiber in &fibers {
        assert_eq!(fiber.lines.len(), 2);
        assert!(fiber.lines.iter().all(|&(_, m)| m == 1));
    }
}

#[test]
fn plane_inside_the_arrangement_is_rejected() {
    let q = qn_in_p3(2);
    // x0 - x1 is a hyperplane of Q_2
    let h = plane_basis(ints4([1, -1, 0, 0])).unwrap();
    assert!(matches!(
        restrict_arrangement(&q, &h),
        Err(InduceError::PlaneInArrangement)
    ));
}

#[test]
fn klein_plane_cancels_exactly_two_lines() {
    let r = induce(3, klein_plane()).unwrap();
    assert_eq!(r.canceled.len(), 2);
    assert_eq!(r.canceled.iter().map(|&(_, m)| m).sum::<u32>(), 2);
    // in frame coordinates the fixed components are u₁ − u₂ and u₁ − ξu₂
    let xi = Cyclo::root_of_unity(3);
    let expect1 = ProjLine::new([Cyclo::one(3), -Cyclo::one(3), Cyclo::zero(3)]).unwrap();
    let expect2 = ProjLine::new([Cyclo::one(3), -xi, Cyclo::zero(3)]).unwrap();
    let keys: Vec<String> = r.canceled.iter().map(|(l, _)| l.canonical_key()).collect();
    assert!(keys.contains(&expect1.canonical_key()));
    assert!(keys.contains(&expect2.canonical_key()));
    // degree bookkeeping: d = 2n − canceled multiplicity
    assert_eq!(r.arrangement.line_count(), 12);
    let m = VerifiedMultinet::new(r.arrangement.clone()).unwrap();
    assert_eq!(m.d(), 4);
    assert_eq!(m.analysis().base.len(), 16);
}

#[test]
fn coordinate_plane_cancels_nothing() {
    let r = induce(3, ints4([1, 0, 0, 0])).unwrap();
    assert!(r.canceled.is_empty());
    let m = VerifiedMultinet::new(r.arrangement.clone()).unwrap();
    assert_eq!(m.d(), 6);
}

#[test]
fn cancel_is_identity_without_common_lines() {
    let line = |c: [i64; 3]| ProjLine::from_ints(c);
    let fibers = [
        RestrictedFiber {
            lines: vec![(line([1, 0, 0]), 2)],
        },
        RestrictedFiber {
            lines: vec![(line([0, 1, 0]), 2)],
        },
        RestrictedFiber {
            lines: vec![(line([0, 0, 1]), 1), (line([1, 1, 1]), 1)],
        },
    ];
    let (out, canceled) = cancel_fixed(fibers).unwrap();
    assert!(canceled.is_empty());
    assert_eq!(out[0].lines.len(), 1);
    assert_eq!(out[2].lines.len(), 2);
}

#[test]
fn identical_fibers_cancel_to_nothing() {
    let line = |c: [i64; 3]| ProjLine::from_ints(c);
    let fiber = || RestrictedFiber {
        lines: vec![(line([1, 0, 0]), 1), (line([0, 1, 0]), 1)],
    };
    assert!(matches!(
        cancel_fixed([fiber(), fiber(), fiber()]),
        Err(InduceError::EverythingCanceled)
    ));
}

#[test]
fn klein_plane_induces_the_klein_net() {
    let r = induce(3, klein_plane()).unwrap();
    let t = classify_induced(&r);
    assert_eq!(t.tag, TypeTag::T8, "evidence: {}", t.evidence);
    let equivalent = projectively_equivalent(&r.arrangement, &z2z2_net()).unwrap();
    assert!(equivalent.is_some());
}

#[test]
fn coordinate_plane_induces_monomial_multinets() {
    for n in [2u32, 3] {
        let r = induce(n, ints4([1, 0, 0, 0])).unwrap();
        let t = classify_induced(&r);
        assert_eq!(t.tag, TypeTag::T1, "n = {n}, evidence: {}", t.evidence);
        let equivalent = projectively_equivalent(&r.arrangement, &monomial_g_n13(n)).unwrap();
        assert!(equivalent.is_some(), "n = {n}");
    }
}

#[test]
fn q1_induced_multinets_are_small_nets_or_trivial() {
    for coords in [[1, 2, 3, 5], [1, 1, 2, 3], [2, -1, 1, 1], [1, 1, 1, 1]] {
        let r = match induce(1, ints4(coords)) {
            Ok(r) => r,
            Err(InduceError::PlaneInArrangement) => continue,
            Err(e) => panic!("unexpected error {e}"),
        };
        let t = classify_induced(&r);
        match t.tag {
            TypeTag::Trivial => {}
            TypeTag::T10 => {
                // a degree-2n net realizing the dihedral group of order 2n
                let m = VerifiedMultinet::new(r.arrangement.clone()).unwrap();
                assert_eq!(m.d(), 2);
                let latin = m.extract_latin().unwrap();
                assert!(isotopic_to_group(&latin, &GroupSpec::Dihedral(1)).unwrap());
            }
            other => panic!("unexpected type {other} for {coords:?}"),
        }
    }
}

#[test]
fn restriction_preserves_incidence() {
    let q = qn_in_p3(2);
    let h = plane_basis(ints4([1, 2, -1, 3])).unwrap();
    let fibers = restrict_arrangement(&q, &h).unwrap();
    // a point of H on two restricted lines embeds to a P³ point on both
    // hyperplanes and on H
    let l1 = &fibers[0].lines[0].0;
    let l2 = &fibers[1].lines[0].0;
    let p = meet(l1, l2).unwrap();
    let embedded = h.embed(p.coords());
    let dot4 = |a: &[Cyclo; 4], b: &[Cyclo; 4]| -> Cyclo {
        let mut acc = Cyclo::zero(1);
        for (x, y) in a.iter().zip(b.iter()) {
            acc = &acc + &(x * y);
        }
        acc
    };
    assert!(dot4(&embedded, h.coords()).is_zero());
    let w1 = q.blocks[0]
        .iter()
        .find(|hp| {
            ProjLine::new(h.restrict_form(&hp.coords)).unwrap() == *l1
        })
        .unwrap();
    assert!(dot4(&embedded, &w1.coords).is_zero());
}

#[test]
fn small_rational_planes_always_verify_or_are_trivial() {
    let planes = [
        [1, 1, 1, 1],
        [1, 2, 3, 4],
        [2, -1, 1, 3],
        [1, 0, 2, -1],
        [3, 1, -2, 1],
        [1, -2, 0, 3],
    ];
    for n in 1..=2u32 {
        for coords in planes {
            let r = match induce(n, ints4(coords)) {
                Ok(r) => r,
                Err(InduceError::PlaneInArrangement) => continue,
                Err(e) => panic!("unexpected error {e} at n={n} {coords:?}"),
            };
            let d = 2 * n - r.canceled.iter().map(|&(_, m)| m).sum::<u32>();
            match VerifiedMultinet::new(r.arrangement.clone()) {
                Ok(m) => {
                    assert_eq!(m.d(), d as u64);
                    let p = m.property_checks();
                    assert!(p.all_hold(), "n={n} {coords:?}");
                    // odd-degree induced nets exist only as the degree-3
                    // net at n = 2
                    if n > 1
                        && m.d() % 2 == 1
                        && m.d() > 1
                        && m.weight_class() == multinets::WeightClass::Net
                    {
                        assert_eq!((n, m.d()), (2, 3), "{coords:?}");
                    }
                }
                Err(_) => {
                    assert_eq!(
                        classify_induced(&r).tag,
                        TypeTag::Trivial,
                        "n={n} {coords:?}"
                    );
                }
            }
        }
    }
}
