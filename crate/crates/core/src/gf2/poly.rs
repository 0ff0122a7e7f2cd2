//! Univariate polynomial arithmetic over a tower level.
//!
//! Coefficients are raw packed elements of one level (`u64`); the level
//! supplies the arithmetic. Used for septic sets, embedding roots,
//! bitangent elimination and the smoothness test.

use alloc::vec;
use alloc::vec::Vec;

use super::{FFElem, FieldTower, Level};

/// Dense polynomial c[0] + c[1] x + ... with coefficients in one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub c: Vec<u64>,
}

impl Poly {
    pub fn new(c: Vec<u64>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![1] }
    }

    pub fn x() -> Self {
        Poly { c: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let mut c = vec![0u64; n];
        for (i, v) in self.c.iter().enumerate() {
            c[i] ^= v;
        }
        for (i, v) in other.c.iter().enumerate() {
            c[i] ^= v;
        }
        Poly::new(c)
    }

    pub(crate) fn mul(&self, other: &Poly, lv: &Level) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                c[i + j] ^= lv.mul(a, b);
            }
        }
        Poly::new(c)
    }

    pub(crate) fn scale(&self, s: u64, lv: &Level) -> Poly {
        Poly::new(self.c.iter().map(|&a| lv.mul(a, s)).collect())
    }

    /// Euclidean division; divisor need not be monic.
    pub(crate) fn divrem(&self, div: &Poly, lv: &Level) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.deg() < div.deg() {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = lv.inv(*div.c.last().unwrap());
        let mut rem = self.c.clone();
        let dd = div.c.len() - 1;
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i] == 0 {
                continue;
            }
            let f = lv.mul(rem[i], lead_inv);
            quot[i - dd] = f;
            for (j, &dc) in div.c.iter().enumerate() {
                rem[i - dd + j] ^= lv.mul(f, dc);
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub(crate) fn rem(&self, div: &Poly, lv: &Level) -> Poly {
        self.divrem(div, lv).1
    }

    pub(crate) fn monic(&self, lv: &Level) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(lv.inv(*self.c.last().unwrap()), lv)
    }

    pub(crate) fn gcd(&self, other: &Poly, lv: &Level) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, lv);
            a = b;
            b = r;
        }
        a.monic(lv)
    }

    pub(crate) fn eval(&self, x: u64, lv: &Level) -> u64 {
        let mut acc = 0u64;
        for &co in self.c.iter().rev() {
            acc = lv.mul(acc, x) ^ co;
        }
        acc
    }

    /// Formal derivative (char 2: even-degree terms vanish).
    pub fn derivative(&self) -> Poly {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| if i & 1 == 1 { a } else { 0 })
            .collect();
        Poly::new(c)
    }

    /// x^(2^e) mod self, by square-and-reduce.
    pub(crate) fn xpow2e_mod(&self, e: usize, lv: &Level) -> Poly {
        let mut x = Poly::x().rem(self, lv);
        for _ in 0..e {
            x = x.mul(&x, lv).rem(self, lv);
        }
        x
    }
}

/// Product of all linear factors: gcd(f, x^(2^m) - x) where m is the level
/// bit width, then deterministic char-2 trace splitting to list the roots.
pub(crate) fn roots_over_level(coeffs: &[u64], lv: &Level) -> Vec<u64> {
    let f = Poly::new(coeffs.to_vec());
    if f.deg() <= 0 {
        return Vec::new();
    }
    let fq = f.xpow2e_mod(lv.m, lv).add(&Poly::x().rem(&f, lv));
    let mut lin = f.gcd(&fq, lv);
    let mut roots = Vec::new();
    if lin.eval(0, lv) == 0 {
        roots.push(0);
        lin = lin.divrem(&Poly::new(vec![0, 1]), lv).0;
    }
    split_linear_product(&lin, lv, &mut roots);
    roots.sort_unstable();
    roots
}

fn split_linear_product(g: &Poly, lv: &Level, out: &mut Vec<u64>) {
    match g.deg() {
        d if d <= 0 => {}
        1 => {
            // monic: x + r
            let r = lv.mul(g.c[0], lv.inv(g.c[1]));
            out.push(r);
        }
        _ => {
            // Split by the F_2-trace of c·x. Conjugate roots share their
            // trace against subfield elements, so scan c in bit-reversed
            // order to hit generic elements first.
            for j in 1u64..(1 << lv.m) {
                let cbits = j.reverse_bits() >> (64 - lv.m);
                let mut tr = Poly::new(vec![0, cbits]).rem(g, lv);
                let mut acc = tr.clone();
                for _ in 1..lv.m {
                    tr = tr.mul(&tr, lv).rem(g, lv);
                    acc = acc.add(&tr);
                }
                let h = g.gcd(&acc, lv);
                if h.deg() > 0 && h.deg() < g.deg() {
                    let (q, r) = g.divrem(&h, lv);
                    debug_assert!(r.is_zero());
                    split_linear_product(&h, lv, out);
                    split_linear_product(&q, lv, out);
                    return;
                }
            }
            unreachable!("trace splitting failed on a product of distinct linear factors");
        }
    }
}

// Public wrappers in terms of FFElem.

/// Polynomial with `FFElem` coefficients, all at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPoly {
    pub d: usize,
    pub p: Poly,
}

impl FPoly {
    pub fn from_elems(d: usize, coeffs: &[FFElem]) -> Self {
        let c = coeffs
            .iter()
            .map(|e| {
                assert_eq!(e.d as usize, d);
                e.bits
            })
            .collect();
        FPoly { d, p: Poly::new(c) }
    }

    pub fn coeff(&self, tower: &FieldTower, i: usize) -> FFElem {
        tower.elem(self.d, self.p.c.get(i).copied().unwrap_or(0))
    }

    pub fn deg(&self) -> i64 {
        self.p.deg()
    }

    pub fn eval(&self, tower: &FieldTower, x: FFElem) -> FFElem {
        assert_eq!(x.d as usize, self.d);
        tower.elem(self.d, self.p.eval(x.bits, tower.level(self.d)))
    }

    pub fn mul(&self, tower: &FieldTower, other: &FPoly) -> FPoly {
        assert_eq!(self.d, other.d);
        FPoly { d: self.d, p: self.p.mul(&other.p, tower.level(self.d)) }
    }

    pub fn add(&self, other: &FPoly) -> FPoly {
        assert_eq!(self.d, other.d);
        FPoly { d: self.d, p: self.p.add(&other.p) }
    }

    pub fn gcd(&self, tower: &FieldTower, other: &FPoly) -> FPoly {
        assert_eq!(self.d, other.d);
        FPoly { d: self.d, p: self.p.gcd(&other.p, tower.level(self.d)) }
    }

    /// Roots lying in the coefficient level itself.
    pub fn roots(&self, tower: &FieldTower) -> Vec<FFElem> {
        roots_over_level(&self.p.c, tower.level(self.d))
            .into_iter()
            .map(|b| tower.elem(self.d, b))
            .collect()
    }

    /// Whether the polynomial is irreducible over its coefficient level.
    pub fn is_irreducible(&self, tower: &FieldTower) -> bool {
        let lv = tower.level(self.d);
        let n = self.p.deg();
        if n <= 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let n = n as usize;
        // x^(|K|^n) = x mod f, and no factor of degree n/p for prime p | n.
        let xq_n = self.p.xpow2e_mod(lv.m * n, lv).add(&Poly::x().rem(&self.p, lv));
        if !xq_n.is_zero() {
            return false;
        }
        let mut primes = Vec::new();
        let mut k = n;
        let mut p = 2;
        while p * p <= k {
            if k % p == 0 {
                primes.push(p);
                while k % p == 0 {
                    k /= p;
                }
            }
            p += 1;
        }
        if k > 1 {
            primes.push(k);
        }
        primes
            .iter()
            .all(|&p| self.coprime_with_field_poly(n / p, lv))
    }

    fn coprime_with_field_poly(&self, e: usize, lv: &Level) -> bool {
        let g = self.p.xpow2e_mod(lv.m * e, lv).add(&Poly::x().rem(&self.p, lv));
        self.p.gcd(&g, lv).deg() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::FieldTower;

    #[test]
    fn roots_of_split_polynomial() {
        let t = FieldTower::new(2, &[1, 3]);
        let lv = t.level(3);
        // (x - a)(x - b)(x - c) for distinct a, b, c.
        let (a, b, c) = (3u64, 17u64, 40u64);
        let p = Poly::new(vec![a, 1])
            .mul(&Poly::new(vec![b, 1]), lv)
            .mul(&Poly::new(vec![c, 1]), lv);
        let mut roots = roots_over_level(&p.c, lv);
        roots.sort_unstable();
        assert_eq!(roots, vec![a, b, c]);
    }

    #[test]
    fn irreducibility_over_extension() {
        let t = FieldTower::new(2, &[1, 3]);
        // x^3 + x + 1 stays irreducible over F_4 (roots generate F_8).
        let f = FPoly { d: 1, p: Poly::new(vec![1, 1, 0, 1]) };
        assert!(f.is_irreducible(&t));
        // x^2 + x + 1 splits over F_4 with both roots rational.
        let g = FPoly { d: 1, p: Poly::new(vec![1, 1, 1]) };
        assert!(!g.is_irreducible(&t));
        assert_eq!(g.roots(&t).len(), 2);
    }
}
