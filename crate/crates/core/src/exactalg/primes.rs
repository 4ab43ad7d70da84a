//! Primality testing and integer factorization for determinant-sized integers.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::modp::pow_mod;

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_LIMIT: u64 = 1_000_000;

fn strong_probable_prime_u64(n: u64, a: u64) -> bool {
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = ((x as u128 * x as u128) % n as u128) as u64;
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic for every `u64`: trial division by small primes, then
/// Miller-Rabin with the first twelve prime bases.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    SMALL_PRIMES.iter().all(|&a| strong_probable_prime_u64(n, a))
}

/// Primality for arbitrary-size integers. Exact below 2^64; above that the
/// same twelve Miller-Rabin bases are used and a composite slipping through
/// is astronomically unlikely.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &SMALL_PRIMES {
        if n.is_multiple_of(&BigUint::from(p)) {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &SMALL_PRIMES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; returns a non-trivial factor of the odd
/// composite `n`.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Prime factorization `n = ∏ p^e` with primes in increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    pub factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors.iter().find(|(q, _)| q == p).map(|&(_, e)| e).unwrap_or(0)
    }

    pub fn value(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e <= 1)
    }

    pub fn is_cube_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e <= 2)
    }

    fn push(&mut self, p: BigUint, e: u32) {
        match self.factors.iter_mut().find(|(q, _)| *q == p) {
            Some(entry) => entry.1 += e,
            None => self.factors.push((p, e)),
        }
    }
}

/// Prints as `2^4 × 3^2 × 71`; the empty product prints as `1`.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" × "))
    }
}

/// Factors `n > 0`: trial division up to 10^6, then Miller-Rabin and Pollard
/// rho on whatever remains.
pub fn factorize(n: &BigUint) -> Factorization {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out = Factorization::default();
    let mut rest = n.clone();

    let mut trial = |d: u64, rest: &mut BigUint| {
        let dd = BigUint::from(d);
        let mut e = 0;
        while rest.is_multiple_of(&dd) {
            *rest /= &dd;
            e += 1;
        }
        if e > 0 {
            out.push(dd, e);
        }
    };
    trial(2, &mut rest);
    let mut d = 3u64;
    while d <= TRIAL_LIMIT && BigUint::from(d * d) <= rest {
        trial(d, &mut rest);
        d += 2;
    }

    let mut stack = Vec::new();
    if !rest.is_one() {
        stack.push(rest);
    }
    while let Some(m) = stack.pop() {
        if is_prime(&m) {
            out.push(m, 1);
        } else {
            let f = pollard_rho(&m);
            stack.push(&m / &f);
            stack.push(f);
        }
    }
    out.factors.sort();
    out
}

/// Factorization of `|n|`.
pub fn factorize_int(n: &BigInt) -> Factorization {
    factorize(n.magnitude())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
    }

    #[test]
    fn big_primality() {
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert!(is_prime(&m127));
        assert!(!is_prime(&(&m127 * BigUint::from(3u32))));
    }

    #[test]
    fn factor_and_print() {
        let f = factorize(&BigUint::from(10224u32));
        assert_eq!(f.to_string(), "2^4 × 3^2 × 71");
        assert_eq!(f.value(), BigUint::from(10224u32));
        assert!(!f.is_cube_free());
        let odd = factorize(&BigUint::from(639u32));
        assert!(odd.is_cube_free() && !odd.is_square_free());
        assert_eq!(factorize(&BigUint::one()).to_string(), "1");
        assert_eq!(factorize_int(&BigInt::from(-1936)).to_string(), "2^4 × 11^2");
    }

    #[test]
    fn factor_beyond_trial_division() {
        let p = BigUint::from(1_000_003u64);
        let q = BigUint::from(1_000_033u64);
        let n = &p * &p * &q * 12u32;
        let f = factorize(&n);
        assert_eq!(f.value(), n);
        assert_eq!(f.exponent_of(&p), 2);
        assert_eq!(f.exponent_of(&q), 1);
        let big = BigUint::from(4_294_967_311u64) * BigUint::from(4_294_967_357u64);
        let f = factorize(&big);
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.value(), big);
    }
}
