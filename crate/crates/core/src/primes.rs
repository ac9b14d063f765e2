//! Primality and factorization for machine integers.

use num_prime::nt_funcs;

pub fn is_prime(n: u64) -> bool {
    nt_funcs::is_prime64(n)
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
/// Returns an empty list for 0 and 1.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    if n < 2 {
        return Vec::new();
    }
    nt_funcs::factorize64(n)
        .into_iter()
        .map(|(p, e)| (p, e as u32))
        .collect()
}

/// Human-readable factorization, e.g. `12 = 2^2 * 3`.
pub fn describe_factorization(n: u64) -> String {
    match n {
        0 => "0 is not prime".to_string(),
        1 => "1 is a unit, not a prime".to_string(),
        _ => {
            let parts: Vec<String> = factorize(n)
                .into_iter()
                .map(|(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
                .collect();
            format!("{n} = {}", parts.join(" * "))
        }
    }
}
