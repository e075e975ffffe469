//! Step-`p` recursions for `N`, `Sym` and `Psym` at `p = 3, 4`, with their
//! starting values. Each function returns the value at `q` by unrolling the
//! recursion down to the base case.

use num::Integer;

use crate::error::{Error, Result};

/// Increment `N(3,q) - N(3,q-3)` for `q > 3`.
pub fn n3_step(q: u64) -> u64 {
    q / 2 + 1
}

pub fn sym3_step(q: u64) -> u64 {
    if q.is_multiple_of(2) {
        2
    } else {
        1
    }
}

pub fn psym3_step(q: u64) -> u64 {
    if q.is_multiple_of(2) {
        1
    } else {
        2
    }
}

/// Increment `N(4,q) - N(4,q-4)` for odd `q > 4`:
/// `(q^2 + 4q + 3)/8 + (k + 1)((q - 1)/2 - 3k/2)` with `k = (q - 1) div 6`.
pub fn n4_step(q: u64) -> u64 {
    let k = (q - 1) / 6;
    // (k + 1)(q - 1 - 3k) is even since q - 1 is even and k(k + 1) is even.
    (q * q + 4 * q + 3) / 8 + (k + 1) * (q - 1 - 3 * k) / 2
}

/// Increment `Sym(4,q) - Sym(4,q-4)` for odd `q >= 7`.
pub fn sym4_step(q: u64) -> u64 {
    1 + (q - 1) / 6 + (q - 1) / 2 + (q % 6 != 1) as u64
}

pub fn psym4_step(_q: u64) -> u64 {
    2
}

fn check(p: u64, q: u64) -> Result<()> {
    if q == 0 || q.gcd(&p) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    Ok(())
}

fn unroll(p: u64, q: u64, base: impl Fn(u64) -> Option<u64>, step: fn(u64) -> u64) -> u64 {
    let mut total = 0;
    let mut q = q;
    loop {
        if let Some(b) = base(q) {
            return total + b;
        }
        total += step(q);
        q -= p;
    }
}

pub fn n3(q: u64) -> Result<u64> {
    check(3, q)?;
    Ok(unroll(3, q, |q| (q < 3).then_some(q), n3_step))
}

pub fn sym3(q: u64) -> Result<u64> {
    check(3, q)?;
    Ok(unroll(3, q, |q| (q < 3).then_some(q), sym3_step))
}

pub fn psym3(q: u64) -> Result<u64> {
    check(3, q)?;
    Ok(unroll(3, q, |q| (q < 3).then_some(0), psym3_step))
}

pub fn n4(q: u64) -> Result<u64> {
    check(4, q)?;
    Ok(unroll(4, q, |q| match q {
        1 => Some(1),
        3 => Some(4),
        _ => None,
    }, n4_step))
}

pub fn sym4(q: u64) -> Result<u64> {
    check(4, q)?;
    Ok(unroll(4, q, |q| match q {
        1 => Some(1),
        3 => Some(3),
        5 => Some(5),
        _ => None,
    }, sym4_step))
}

pub fn psym4(q: u64) -> Result<u64> {
    check(4, q)?;
    Ok(unroll(4, q, |q| match q {
        1 => Some(0),
        3 => Some(1),
        5 => Some(2),
        _ => None,
    }, psym4_step))
}
