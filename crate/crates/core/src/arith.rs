//! Small integer helpers for group orders.

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Prime factorization as ascending `(p, e)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [single] => Some(*single),
        _ => None,
    }
}

pub fn num_divisors(n: u64) -> usize {
    factorize(n).iter().map(|&(_, e)| e as usize + 1).product()
}

/// Exact base-`p` logarithm, if `n` is a power of `p`.
pub fn log_exact(mut n: u64, p: u64) -> Option<u32> {
    let mut e = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        e += 1;
    }
    (n == 1).then_some(e)
}
