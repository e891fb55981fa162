//! Scalar arithmetic: prime fields F_p, residue rings Z/p^N, the additive
//! character psi and the fixed square root of q.
//!
//! Conventions fixed here and recorded in every report:
//! - psi(t) = exp(2*pi*i*t/p), so psi is nontrivial and psi(0) = 1;
//! - q^(1/2) is the positive real square root;
//! - Hom(F_q^x, C^x) is identified with F_q^x through the smallest primitive
//!   root mod p.

use num::complex::Complex64;

/// Normalizes `v` into `0..m`.
#[inline]
pub fn modu(v: i64, m: i64) -> i64 {
    let r = v % m;
    if r < 0 {
        r + m
    } else {
        r
    }
}

/// Modular exponentiation.
pub fn pow_mod(mut b: i64, mut e: u64, m: i64) -> i64 {
    let mut acc = 1i64;
    b = modu(b, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Inverse of `a` mod `m` for gcd(a, m) = 1.
pub fn inv_mod(a: i64, m: i64) -> i64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m, modu(a, m));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "inv_mod of a non-unit {a} mod {m}");
    modu(t, m)
}

/// Multiplicative order of `a` mod `m`.
pub fn order_mod(a: i64, m: i64) -> u64 {
    let mut x = modu(a, m);
    assert_ne!(x, 0);
    let mut k = 1u64;
    while x != 1 {
        x = x * modu(a, m) % m;
        k += 1;
    }
    k
}

/// The smallest primitive root mod the odd prime `p`.
///
/// Deterministic; this generator fixes the identification of multiplicative
/// character groups with the groups themselves everywhere downstream.
pub fn unit_group_generator(p: i64) -> i64 {
    for g in 2..p {
        if order_mod(g, p) == (p - 1) as u64 {
            return g;
        }
    }
    unreachable!("no primitive root mod {p}")
}

/// The additive character psi(t) = exp(2*pi*i*t/p) of F_p.
pub fn psi(t: i64, p: i64) -> Complex64 {
    let arg = 2.0 * std::f64::consts::PI * (modu(t, p) as f64) / (p as f64);
    Complex64::new(arg.cos(), arg.sin())
}

/// Positive real square root of q, as a complex scalar.
pub fn sqrt_q(q: i64) -> Complex64 {
    Complex64::new((q as f64).sqrt(), 0.0)
}

/// The discrete logarithm of `a` with respect to the fixed generator mod p.
pub fn dlog(a: i64, p: i64) -> u64 {
    let g = unit_group_generator(p);
    let mut x = 1i64;
    for k in 0..(p - 1) as u64 {
        if x == modu(a, p) {
            return k;
        }
        x = x * g % p;
    }
    panic!("dlog of a non-unit {a} mod {p}")
}

/// Quadratic extension F_{p^2} = F_p[x]/(x^2 - d), d the smallest non-residue.
///
/// Elements are pairs (a, b) for a + b*sqrt(d). Used to realize the nonsplit
/// maximal torus mu_{q+1} of SL2(F_q) concretely.
#[derive(Debug, Clone, Copy)]
pub struct Fq2 {
    pub p: i64,
    pub d: i64,
}

pub type Fq2El = (i64, i64);

impl Fq2 {
    pub fn new(p: i64) -> Self {
        let d = (2..p)
            .find(|&d| !is_square_mod(d, p))
            .expect("odd prime has a non-residue");
        Fq2 { p, d }
    }

    pub fn one(&self) -> Fq2El {
        (1, 0)
    }

    pub fn mul(&self, x: Fq2El, y: Fq2El) -> Fq2El {
        let p = self.p;
        (
            modu(x.0 * y.0 + self.d * x.1 * y.1, p),
            modu(x.0 * y.1 + x.1 * y.0, p),
        )
    }

    pub fn pow(&self, mut x: Fq2El, mut e: u64) -> Fq2El {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    /// Frobenius x -> x^p, i.e. conjugation a + b*sqrt(d) -> a - b*sqrt(d).
    pub fn frob(&self, x: Fq2El) -> Fq2El {
        (x.0, modu(-x.1, self.p))
    }

    /// Norm to F_p.
    pub fn norm(&self, x: Fq2El) -> i64 {
        modu(x.0 * x.0 - self.d * x.1 * x.1, self.p)
    }

    /// Trace to F_p.
    pub fn trace(&self, x: Fq2El) -> i64 {
        modu(2 * x.0, self.p)
    }

    pub fn order(&self, x: Fq2El) -> u64 {
        let mut y = x;
        let mut k = 1u64;
        while y != self.one() {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// A fixed generator of the norm-one subgroup mu_{q+1}.
    ///
    /// Deterministic: the first norm-one element (in lexicographic order of
    /// coordinates) of full order q + 1.
    pub fn norm_one_generator(&self) -> Fq2El {
        let p = self.p;
        for a in 0..p {
            for b in 0..p {
                let x = (a, b);
                if self.norm(x) == 1 && x != self.one() && self.order(x) == (p + 1) as u64 {
                    return x;
                }
            }
        }
        unreachable!("mu_{{q+1}} is cyclic of order q+1 > 1")
    }
}

pub fn is_square_mod(a: i64, p: i64) -> bool {
    let a = modu(a, p);
    if a == 0 {
        return true;
    }
    pow_mod(a, ((p - 1) / 2) as u64, p) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol;

    #[test]
    fn psi_is_a_nontrivial_character() {
        for &p in &[3i64, 5, 7] {
            // homomorphism to machine precision
            let mut worst: f64 = 0.0;
            for a in 0..p {
                for b in 0..p {
                    let lhs = psi(a + b, p);
                    let rhs = psi(a, p) * psi(b, p);
                    worst = worst.max((lhs - rhs).norm());
                }
            }
            assert!(worst < tol::CHARACTER, "psi hom residual {worst} at p={p}");
            assert!((psi(0, p) - Complex64::new(1.0, 0.0)).norm() < tol::CHARACTER);
            assert!((1..p).any(|t| (psi(t, p) - Complex64::new(1.0, 0.0)).norm() > 0.5));
            // full character sum vanishes
            let s: Complex64 = (0..p).map(|t| psi(t, p)).sum();
            assert!(s.norm() < tol::CHARACTER);
        }
        // p=3, t=1 -> (-1/2, sqrt(3)/2)
        let z = psi(1, 3);
        assert!((z.re + 0.5).abs() < 1e-12 && (z.im - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn sqrt_q_squares_back() {
        for &q in &[3i64, 5, 7, 9, 27] {
            let r = sqrt_q(q);
            assert!(((r * r).re - q as f64).abs() < tol::CHARACTER);
        }
    }

    #[test]
    fn smallest_primitive_roots() {
        assert_eq!(unit_group_generator(3), 2);
        assert_eq!(unit_group_generator(5), 2);
        assert_eq!(unit_group_generator(7), 3);
    }

    #[test]
    fn fq2_norm_one_generator_has_order_q_plus_one() {
        for &p in &[3i64, 5, 7] {
            let f = Fq2::new(p);
            let z = f.norm_one_generator();
            assert_eq!(f.order(z), (p + 1) as u64);
            assert_eq!(f.norm(z), 1);
            // frobenius inverts norm-one elements
            assert_eq!(f.mul(z, f.frob(z)), f.one());
        }
    }
}
