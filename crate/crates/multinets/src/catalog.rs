//! Exact constructors for the named arrangements and parameterized
//! families: Fermat pencils, full monomial multinets, the Hesse
//! configuration, the two-parameter (3,3) and light (3,4) families, the
//! Klein-group (3,4)-net, trivial pencils, and the P³ arrangement Q_n.

use thiserror::Error;

use crate::exactnum::Cyclo;
use crate::multinet::{MultiLine, MultinetCandidate};
use crate::projgeom::ProjLine;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
}

/// The (λ, μ) parameters of the two-parameter families. Values are field
/// elements, so the families can be evaluated at roots of unity as well as
/// rationals; validity is decided by exact zero tests.
#[derive(Debug, Clone)]
pub struct FamilyParams {
    pub lambda: Cyclo,
    pub mu: Cyclo,
}

impl FamilyParams {
    pub fn new(lambda: Cyclo, mu: Cyclo) -> Self {
        FamilyParams { lambda, mu }
    }

    /// Rational parameters given as numerator/denominator pairs.
    pub fn rational(lambda: (i64, i64), mu: (i64, i64)) -> Self {
        FamilyParams {
            lambda: Cyclo::rational(lambda.0, lambda.1, 1),
            mu: Cyclo::rational(mu.0, mu.1, 1),
        }
    }

    fn conductor(&self) -> u32 {
        u32::try_from(num_integer::lcm(
            self.lambda.conductor() as u64,
            self.mu.conductor() as u64,
        ))
        .expect("conductor lcm")
    }

    /// λ, μ ∉ {0, 1} and λ ≠ μ.
    fn check_common(&self) -> Result<(), CatalogError> {
        let bad = |c: &Cyclo| c.is_zero() || c.is_one();
        if bad(&self.lambda) || bad(&self.mu) {
            return Err(CatalogError::InvalidParams(
                "lambda and mu must avoid 0 and 1".into(),
            ));
        }
        if self.lambda == self.mu {
            return Err(CatalogError::InvalidParams("lambda must differ from mu".into()));
        }
        Ok(())
    }
}

fn line(coords: [Cyclo; 3]) -> ProjLine {
    ProjLine::new(coords).expect("catalog coordinates are nonzero")
}

fn simple(coords: [Cyclo; 3]) -> MultiLine {
    MultiLine::simple(line(coords))
}

fn candidate(conductor: u32, blocks: Vec<Vec<MultiLine>>) -> MultinetCandidate {
    MultinetCandidate::new(conductor, blocks).expect("catalog arrangements are valid candidates")
}

/// The Fermat pencil arrangement: blocks {x − ζy}, {x − ζz}, {y − ζz} over
/// the n-th roots of unity ζ, each block a pencil. A (3,n)-net.
pub fn fermat(n: u32) -> MultinetCandidate {
    assert!(n >= 1, "fermat requires n >= 1");
    let zero = || Cyclo::zero(n);
    let one = || Cyclo::one(n);
    let roots: Vec<Cyclo> = (0..n).map(|j| Cyclo::root_power(n, j)).collect();
    let block = |a: usize, b: usize| -> Vec<MultiLine> {
        roots
            .iter()
            .map(|z| {
                let mut coords = [zero(), zero(), zero()];
                coords[a] = one();
                coords[b] = -z.clone();
                simple(coords)
            })
            .collect()
    };
    candidate(n, vec![block(0, 1), block(0, 2), block(1, 2)])
}

/// The full monomial (3,2n)-multinet: block i is the i-th coordinate line
/// with multiplicity n together with n simple lines, matching
/// xⁿ(yⁿ−zⁿ) · yⁿ(xⁿ−zⁿ) · zⁿ(xⁿ−yⁿ). Heavy for n > 1.
pub fn monomial_g_n13(n: u32) -> MultinetCandidate {
    assert!(n >= 1, "monomial_g_n13 requires n >= 1");
    let zero = || Cyclo::zero(n);
    let one = || Cyclo::one(n);
    let roots: Vec<Cyclo> = (0..n).map(|j| Cyclo::root_power(n, j)).collect();
    let axis = |i: usize| -> MultiLine {
        let mut coords = [zero(), zero(), zero()];
        coords[i] = one();
        MultiLine::new(line(coords), n)
    };
    let fan = |a: usize, b: usize| -> Vec<MultiLine> {
        roots
            .iter()
            .map(|z| {
                let mut coords = [zero(), zero(), zero()];
                coords[a] = one();
                coords[b] = -z.clone();
                simple(coords)
            })
            .collect()
    };
    let mut b1 = vec![axis(0)];
    b1.extend(fan(1, 2));
    let mut b2 = vec![axis(1)];
    b2.extend(fan(0, 2));
    let mut b3 = vec![axis(2)];
    b3.extend(fan(0, 1));
    candidate(n, vec![b1, b2, b3])
}

/// The Hesse configuration: the (4,3)-net formed by the four completely
/// reducible fibers of the pencil spanned by xyz and x³+y³+z³.
pub fn hesse() -> MultinetCandidate {
    let w = Cyclo::root_of_unity(3);
    let one = || Cyclo::one(3);
    let zero = || Cyclo::zero(3);
    let triangle = vec![
        simple([one(), zero(), zero()]),
        simple([zero(), one(), zero()]),
        simple([zero(), zero(), one()]),
    ];
    // x³+y³+z³ − 3ω^t·xyz splits into x + ω^{j+t} y + ω^{2j} z, j = 0,1,2
    let fiber = |t: u32| -> Vec<MultiLine> {
        (0..3)
            .map(|j| simple([one(), w.pow(j + t), w.pow(2 * j)]))
            .collect()
    };
    candidate(3, vec![triangle, fiber(0), fiber(1), fiber(2)])
}

/// The two-parameter family of (3,3)-nets with block 1 the coordinate
/// triangle. Valid for λ, μ ∉ {0, 1}, λ ≠ μ.
pub fn stipins33(params: &FamilyParams) -> Result<MultinetCandidate, CatalogError> {
    params.check_common()?;
    let n = params.conductor();
    let l = params.lambda.lift(n).unwrap();
    let m = params.mu.lift(n).unwrap();
    let one = || Cyclo::one(n);
    let zero = || Cyclo::zero(n);
    let b1 = vec![
        simple([one(), zero(), zero()]),
        simple([zero(), one(), zero()]),
        simple([zero(), zero(), one()]),
    ];
    let b2 = vec![
        simple([one(), one(), one()]),
        simple([m.clone(), &l * &m, l.clone()]),
        simple([one(), m.clone(), l.clone()]),
    ];
    let b3 = vec![
        simple([one(), l.clone(), l.clone()]),
        simple([one(), m.clone(), one()]),
        simple([m.clone(), m.clone(), l.clone()]),
    ];
    Ok(candidate(n, vec![b1, b2, b3]))
}

/// The two-parameter family of light (3,4)-multinets with a unique double
/// point at [1:0:0]. Valid for λ, μ ∉ {0, 1}, λ ≠ μ, λμ ≠ 1.
pub fn light34(params: &FamilyParams) -> Result<MultinetCandidate, CatalogError> {
    params.check_common()?;
    let lm = &params.lambda * &params.mu;
    if lm.is_one() {
        return Err(CatalogError::InvalidParams(
            "lambda * mu must differ from 1".into(),
        ));
    }
    let n = params.conductor();
    let l = params.lambda.lift(n).unwrap();
    let m = params.mu.lift(n).unwrap();
    let lm = lm.lift(n).unwrap();
    let one = || Cyclo::one(n);
    let zero = || Cyclo::zero(n);
    let b1 = vec![
        simple([one(), one(), one()]),
        simple([zero(), one(), l.clone()]),
        simple([zero(), one(), m.clone()]),
        simple([l.clone(), one(), lm.clone()]),
    ];
    let b2 = vec![
        simple([one(), zero(), zero()]),
        simple([zero(), one(), zero()]),
        simple([zero(), zero(), one()]),
        simple([
            l.clone(),
            &one() + &l,
            &l * &(&one() + &m),
        ]),
    ];
    let b3 = vec![
        simple([l.clone(), one(), l.clone()]),
        simple([zero(), one(), one()]),
        simple([zero(), one(), lm.clone()]),
        simple([one(), one(), m.clone()]),
    ];
    Ok(candidate(n, vec![b1, b2, b3]))
}

/// The (3,4)-net realizing the Klein four-group, at conductor 3.
pub fn z2z2_net() -> MultinetCandidate {
    let xi = Cyclo::root_of_unity(3);
    let one = || Cyclo::one(3);
    let zero = || Cyclo::zero(3);
    let two = || Cyclo::integer(2, 3);
    let b1 = vec![
        simple([zero(), one(), -one()]),
        simple([&two() * &xi, one(), zero()]),
        simple([zero(), one(), -xi.clone()]),
        simple([zero(), one(), -xi.pow(2)]),
    ];
    let b2 = vec![
        simple([one(), zero(), -one()]),
        simple([one(), zero(), -xi.clone()]),
        simple([one(), zero(), -xi.pow(2)]),
        simple([xi.clone(), two(), zero()]),
    ];
    let b3 = vec![
        simple([one(), xi.pow(2), xi.clone()]),
        simple([one(), xi.pow(2), one()]),
        simple([one(), -xi.pow(2), zero()]),
        simple([xi.clone(), one(), one()]),
    ];
    candidate(3, vec![b1, b2, b3])
}

/// k concurrent lines, one per block: the trivial (k,1)-net.
pub fn trivial_pencil(k: usize) -> MultinetCandidate {
    assert!(k >= 3, "trivial_pencil requires k >= 3");
    let mut blocks: Vec<Vec<MultiLine>> = vec![vec![simple([
        Cyclo::zero(1),
        Cyclo::one(1),
        Cyclo::zero(1),
    ])]];
    for j in 0..k - 1 {
        blocks.push(vec![simple([
            Cyclo::one(1),
            Cyclo::integer(j as i64, 1),
            Cyclo::zero(1),
        ])]);
    }
    candidate(1, blocks)
}

/// One reflection hyperplane x_i − ζ x_j of Q_n, tagged by its half-block.
#[derive(Debug, Clone)]
pub struct Hyperplane {
    pub coords: [Cyclo; 4],
    /// 0 or 1: position of the parenthesized factor inside the block.
    pub half: usize,
}

/// The reflection arrangement Q_n in P³: 6n hyperplanes in 3 blocks of two
/// half-blocks, [(x₀ⁿ−x₁ⁿ)(x₂ⁿ−x₃ⁿ)][(x₀ⁿ−x₂ⁿ)(x₁ⁿ−x₃ⁿ)][(x₀ⁿ−x₃ⁿ)(x₁ⁿ−x₂ⁿ)].
#[derive(Debug, Clone)]
pub struct Hyper3Arrangement {
    pub conductor: u32,
    pub blocks: [Vec<Hyperplane>; 3],
}

impl Hyper3Arrangement {
    pub fn hyperplane_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// Q_n, the reflection arrangement of the order-n monomial subgroup acting
/// on C⁴, with its block and half-block structure.
pub fn qn_in_p3(n: u32) -> Hyper3Arrangement {
    assert!(n >= 1, "qn_in_p3 requires n >= 1");
    let pairs: [[(usize, usize); 2]; 3] = [
        [(0, 1), (2, 3)],
        [(0, 2), (1, 3)],
        [(0, 3), (1, 2)],
    ];
    let blocks = pairs.map(|halves| {
        let mut out = Vec::with_capacity(2 * n as usize);
        for (half, &(i, j)) in halves.iter().enumerate() {
            for t in 0..n {
                let mut coords = [
                    Cyclo::zero(n),
                    Cyclo::zero(n),
                    Cyclo::zero(n),
                    Cyclo::zero(n),
                ];
                coords[i] = Cyclo::one(n);
                coords[j] = -Cyclo::root_power(n, t);
                out.push(Hyperplane { coords, half });
            }
        }
        out
    });
    Hyper3Arrangement {
        conductor: n,
        blocks,
    }
}
