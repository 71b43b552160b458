use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A prime field `F_p`, carried as a lightweight descriptor.
///
/// Scalars are plain `u64` residues kept reduced (`0 <= x < p`) by every
/// operation here; the descriptor is copied freely into matrices and
/// complexes so that mixed-field arithmetic can be rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Fp> {
        if is_prime(p) {
            Ok(Fp { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        let p = self.p as i64;
        (a.rem_euclid(p)) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    /// Multiplicative inverse by Fermat; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The sign `(-1)^k` as a field element.
    #[inline]
    pub fn sign(&self, k: usize) -> u64 {
        if k % 2 == 0 {
            1
        } else {
            self.neg(1)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    // keep matrix arithmetic inside u64
    n < (1 << 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(3).is_ok());
        assert!(Fp::new(97).is_ok());
        assert!(Fp::new(1).is_err());
        assert!(Fp::new(4).is_err());
        assert!(Fp::new(0).is_err());
    }

    #[test]
    fn arithmetic_mod_3() {
        let f = Fp::new(3).unwrap();
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.sub(0, 1), 2);
        assert_eq!(f.mul(2, 2), 1);
        assert_eq!(f.inv(2), 2);
        assert_eq!(f.sign(1), 2);
        assert_eq!(f.sign(2), 1);
        assert_eq!(f.reduce(-4), 2);
    }
}
