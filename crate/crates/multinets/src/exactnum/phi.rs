//! Cyclotomic polynomials Φ_N with a process-wide cache.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Euler totient φ(n).
pub fn totient(n: u32) -> u32 {
    assert!(n >= 1, "totient of 0 is undefined");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// All positive divisors of n, ascending.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut divs: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    divs.sort_unstable();
    divs
}

static PHI_CACHE: LazyLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Coefficients of Φ_N, ascending powers, monic, length φ(N)+1.
///
/// Computed once per conductor via Φ_N(x) = (x^N − 1) / ∏_{d|N, d<N} Φ_d(x)
/// and cached for concurrent reuse.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(hit) = PHI_CACHE.read().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let computed = Arc::new(compute_cyclotomic(n));
    let mut cache = PHI_CACHE.write().unwrap();
    Arc::clone(cache.entry(n).or_insert(computed))
}

fn compute_cyclotomic(n: u32) -> Vec<BigInt> {
    if n == 1 {
        // x - 1
        return vec![-BigInt::one(), BigInt::one()];
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Exact division of integer polynomials; the divisor must be monic and divide evenly.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate().take(dd) {
            let t = &c * dc;
            rem[i - dd + j] -= t;
        }
        quot[i - dd] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "non-exact polynomial division");
    quot
}
