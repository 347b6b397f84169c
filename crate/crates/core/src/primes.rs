//! Small prime utilities: sieve, primality, factorization.

/// Primes up to `n` inclusive, by Eratosthenes.
pub fn sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

/// Deterministic Miller-Rabin for u64 (the base set below is exact for all u64).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u128(a as u128, d as u128, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x * x % n as u128;
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod_u128(mut base: u128, mut exp: u128, modulus: u128) -> u128 {
    let mut acc: u128 = 1;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Prime factorization of `n` as (prime, multiplicity) pairs, ascending.
///
/// Trial division; group orders at desk scale factor instantly. A u64-sized
/// prime cofactor is recognized by Miller-Rabin so enormous chain orders
/// don't spin the divisor loop.
pub fn factorize(n: u128) -> Vec<(u128, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        if n > 1 && n <= u64::MAX as u128 && is_prime_u64(n as u64) {
            break;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Smallest prime strictly greater than `n`, within `bound`.
pub fn next_prime_above(n: u64, bound: u64) -> Option<u64> {
    let mut c = n + 1;
    while c <= bound {
        if is_prime_u64(c) {
            return Some(c);
        }
        c += 1;
    }
    None
}

/// Primes in the open interval (lo, hi).
pub fn primes_in_open_interval(lo: u64, hi: u64) -> Vec<u64> {
    (lo + 1..hi).filter(|&c| is_prime_u64(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_miller_rabin() {
        let ps = sieve(1000);
        for n in 0..=1000u64 {
            assert_eq!(ps.contains(&n), is_prime_u64(n), "n = {n}");
        }
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(factorize(294), vec![(2, 1), (3, 1), (7, 2)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn factorize_large_prime_cofactor() {
        // 2^4 * 2147483647 (Mersenne prime)
        let n = 16u128 * 2147483647;
        assert_eq!(factorize(n), vec![(2, 4), (2147483647, 1)]);
    }

    #[test]
    fn next_prime_scan() {
        assert_eq!(next_prime_above(5, 100), Some(7));
        assert_eq!(next_prime_above(14, 100), Some(17));
        assert_eq!(next_prime_above(22, 100), Some(23));
        assert_eq!(next_prime_above(89, 90), None);
    }

    #[test]
    fn interval_primes() {
        assert_eq!(primes_in_open_interval(8, 17), vec![11, 13]);
        assert_eq!(primes_in_open_interval(11, 23), vec![13, 17, 19]);
    }
}
