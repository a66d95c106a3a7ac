//! Small finite fields `GF(p^k)` for `q <= 32`, table-driven.
//!
//! Elements are indices `0..q` encoding polynomial coefficients base `p`
//! (little-endian), reduced modulo a fixed irreducible polynomial.

/// A small finite field with full operation tables.
pub struct Gf {
    pub p: u32,
    pub q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
}

/// Fixed irreducible polynomials (coefficients of x^0..x^k, monic).
fn modulus(p: u32, k: u32) -> Vec<u32> {
    match (p, k) {
        (2, 2) => vec![1, 1, 1],          // x^2 + x + 1
        (2, 3) => vec![1, 1, 0, 1],       // x^3 + x + 1
        (2, 4) => vec![1, 1, 0, 0, 1],    // x^4 + x + 1
        (3, 2) => vec![1, 0, 1],          // x^2 + 1
        (3, 3) => vec![1, 2, 0, 1],       // x^3 + 2x + 1
        (5, 2) => vec![1, 1, 1],          // x^2 + x + 1
        _ => panic!("no modulus stored for GF({p}^{k})"),
    }
}

fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = vec![0; k as usize];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl Gf {
    /// Builds `GF(q)` for a prime power `q <= 32`.
    pub fn new(q: u32) -> Gf {
        let (p, k) = factor_prime_power(q).expect("q must be a prime power");
        let poly = if k > 1 { modulus(p, k) } else { vec![] };
        let mut add = vec![0u8; (q * q) as usize];
        let mut mul = vec![0u8; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                let da = digits(a, p, k);
                let db = digits(b, p, k);
                let sum: Vec<u32> =
                    da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum, p) as u8;
                // polynomial product, reduced mod the modulus
                let mut prod = vec![0u32; (2 * k) as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                if k > 1 {
                    for i in (k as usize..prod.len()).rev() {
                        let c = prod[i];
                        if c == 0 {
                            continue;
                        }
                        prod[i] = 0;
                        for (j, &m) in poly.iter().enumerate().take(k as usize) {
                            let idx = i - k as usize + j;
                            prod[idx] = (prod[idx] + c * (p - m % p)) % p;
                        }
                    }
                }
                mul[(a * q + b) as usize] = undigits(&prod[..k as usize], p) as u8;
            }
        }
        let mut inv = vec![0u8; q as usize];
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as u8;
                    break;
                }
            }
            assert!(inv[a as usize] != 0, "not a field: {a} has no inverse mod GF({q})");
        }
        Gf { p, q, add, mul, inv }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize] as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "division by zero");
        self.inv[a as usize] as u32
    }

    /// Frobenius `x -> x^p` (conjugation for quadratic extensions).
    pub fn frob(&self, a: u32) -> u32 {
        let mut out = 1;
        for _ in 0..self.p {
            out = self.mul(out, a);
        }
        if a == 0 {
            0
        } else {
            out
        }
    }

    /// A multiplicative generator (smallest index of maximal order).
    pub fn primitive(&self) -> u32 {
        'outer: for g in 2..self.q {
            let mut x = g;
            for _ in 1..self.q - 2 {
                if x == 1 {
                    continue 'outer;
                }
                x = self.mul(x, g);
            }
            if self.mul(x, g) == 1 && x != 1 {
                return g;
            }
        }
        // q = 2 or 3: the element 1 resp. 2
        if self.q <= 3 {
            self.q - 1
        } else {
            panic!("no primitive element found")
        }
    }
}

pub fn factor_prime_power(q: u32) -> Option<(u32, u32)> {
    for p in 2..=q {
        if q % p == 0 {
            let mut k = 0;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 { Some((p, k)) } else { None };
        }
    }
    None
}
