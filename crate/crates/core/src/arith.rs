//! Small integer helpers shared by the group and field code.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Returns `(q, k)` when `n = q^k` with `q` prime and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let ps = prime_divisors(n);
    if ps.len() != 1 {
        return None;
    }
    let q = ps[0];
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= q;
        k += 1;
    }
    Some((q, k))
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

/// Multiplicative order of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mult_order_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    Some(k)
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_number_theory() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert!(is_prime(11) && !is_prime(1) && !is_prime(25));
        assert_eq!(prime_divisors(100), vec![2, 5]);
        assert_eq!(prime_power(625), Some((5, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(p_part(100, 5), 25);
        assert_eq!(mult_order_mod(2, 5), Some(4));
        assert_eq!(mult_order_mod(11, 5), Some(1));
        assert_eq!(mult_order_mod(5, 5), None);
        assert_eq!(mod_pow(3, 5, 11), 1);
    }
}
