//! Trial-division arithmetic on the multiplicative monoid `(N, ·)`.

use crate::error::{Error, Result};

/// Prime factors of `n` with multiplicity, in increasing order.
pub fn prime_factorize(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroNatural);
    }
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        while rest % p == 0 {
            out.push(p);
            rest /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push(rest);
    }
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factorize(n).map(|f| f.len() == 1).unwrap_or(false)
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&p| is_prime(p)).collect()
}

/// Ordered pairs `(m, n / m)` over the divisors `m` of `n`, increasing in `m`.
pub fn divisor_pairs(n: u64) -> Vec<(u64, u64)> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut m = 1;
    while m * m <= n {
        if n % m == 0 {
            small.push((m, n / m));
            if m * m != n {
                large.push((n / m, m));
            }
        }
        m += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations() {
        assert_eq!(prime_factorize(12).unwrap(), vec![2, 2, 3]);
        assert_eq!(prime_factorize(1).unwrap(), Vec::<u64>::new());
        assert_eq!(prime_factorize(97).unwrap(), vec![97]);
        assert_eq!(prime_factorize(0), Err(Error::ZeroNatural));
    }

    #[test]
    fn factorization_soundness() {
        for n in 1..=10_000u64 {
            let f = prime_factorize(n).unwrap();
            assert_eq!(f.iter().product::<u64>(), n);
            assert!(f.iter().all(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)));
        }
    }

    #[test]
    fn ordered_divisor_pairs() {
        assert_eq!(divisor_pairs(6), vec![(1, 6), (2, 3), (3, 2), (6, 1)]);
        assert_eq!(divisor_pairs(1), vec![(1, 1)]);
        assert_eq!(divisor_pairs(4), vec![(1, 4), (2, 2), (4, 1)]);
        for n in 1..=500u64 {
            let brute: Vec<(u64, u64)> = (1..=n).filter(|m| n % m == 0).map(|m| (m, n / m)).collect();
            assert_eq!(divisor_pairs(n), brute);
        }
    }

    #[test]
    fn small_primes() {
        assert_eq!(primes_up_to(31), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
        assert!(!is_prime(1));
    }
}
