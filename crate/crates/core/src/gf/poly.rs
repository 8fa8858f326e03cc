//! Dense polynomials over the prime field GF(p), coefficients stored
//! constant term first. Only what field construction needs: reduction,
//! modular powering and gcd for the irreducibility test.

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Remainder of `a` modulo `f` (any nonzero `f`).
pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Poly {
    let mut a: Poly = a.to_vec();
    trim(&mut a);
    let df = f.len() - 1;
    let lead_inv = inv_mod_p(f[df], p);
    while a.len() > df {
        let top = a.len() - 1;
        let c = a[top] * lead_inv % p;
        if c != 0 {
            let shift = top - df;
            for (i, &fi) in f.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - c * fi % p) % p;
            }
        }
        trim(&mut a);
    }
    a
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Poly {
    let mut result: Poly = vec![1];
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    rem(&result, f, p)
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a: Poly = a.to_vec();
    let mut b: Poly = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin-style test: `f` of degree r is irreducible iff
/// gcd(x^(p^i) - x, f) = 1 for every 1 <= i <= r/2.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let r = f.len() - 1;
    if r == 0 {
        return false;
    }
    if r == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    let mut h = x.clone();
    for _ in 1..=r / 2 {
        h = pow_mod(&h, p, f, p);
        let g = gcd(&sub(&h, &x, p), f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_irreducibles() {
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2)); // x^4+x+1
        assert!(is_irreducible(&[1, 1, 1], 2)); // x^2+x+1
        assert!(!is_irreducible(&[0, 1, 1], 2)); // x^2+x
        assert!(!is_irreducible(&[1, 0, 1], 2)); // (x+1)^2
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2)); // (x+1)^4
        assert!(is_irreducible(&[1, 1, 0, 0, 0, 0, 1, 1, 1], 2)); // x^8+x^7+x^6+x+1
                                                                  // x^4+x^2+1 = (x^2+x+1)^2 has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn odd_irreducibles() {
        assert!(is_irreducible(&[1, 0, 1], 3)); // x^2+1 over GF(3)
        assert!(!is_irreducible(&[1, 0, 1], 5)); // x^2+1 = (x+2)(x+3) over GF(5)
        assert!(is_irreducible(&[2, 1, 1], 3)); // x^2+x+2
    }

    #[test]
    fn brute_force_agreement_degree_three_and_four() {
        // A polynomial of degree <= 3 is reducible iff it has a root; for
        // degree 4 over GF(2) also check the single quadratic irreducible.
        for p in [2u64, 3] {
            for code in 0..p.pow(3) {
                let f: Poly = vec![code % p, (code / p) % p, (code / (p * p)) % p, 1];
                let has_root = (0..p).any(|x| {
                    let v = f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p);
                    v == 0
                });
                assert_eq!(is_irreducible(&f, p), !has_root, "p={p} f={f:?}");
            }
        }
    }
}
