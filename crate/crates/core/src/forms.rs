//! Quadratic forms, ternary quartics and the substitution action.
//!
//! A quadratic form (a,b,c,d,e,f) stands for ax²+by²+cz²+dxy+eyz+fzx; a
//! ternary quartic carries 15 coefficients indexed by exponent triples in
//! lexicographic order. Coefficients are raw packed elements of a single
//! tower level.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf2::{FFElem, FieldTower};

/// Exponent triples (i,j,k) with i+j+k = 4, lexicographically ascending.
pub const MONOMIALS: [(u8, u8, u8); 15] = [
    (0, 0, 4),
    (0, 1, 3),
    (0, 2, 2),
    (0, 3, 1),
    (0, 4, 0),
    (1, 0, 3),
    (1, 1, 2),
    (1, 2, 1),
    (1, 3, 0),
    (2, 0, 2),
    (2, 1, 1),
    (2, 2, 0),
    (3, 0, 1),
    (3, 1, 0),
    (4, 0, 0),
];

pub fn mono_index(i: u8, j: u8, k: u8) -> usize {
    MONOMIALS
        .iter()
        .position(|&m| m == (i, j, k))
        .expect("exponents must sum to 4")
}

/// Quadratic-form coefficient order: x², y², z², xy, yz, zx.
pub const QUAD_MONOMIALS: [(u8, u8, u8); 6] =
    [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (0, 1, 1), (1, 0, 1)];

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuadForm {
    pub lvl: u8,
    pub c: [u64; 6],
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TernaryQuartic {
    pub lvl: u8,
    pub c: [u64; 15],
}

impl QuadForm {
    pub fn new(lvl: usize, c: [u64; 6]) -> Self {
        QuadForm { lvl: lvl as u8, c }
    }

    pub fn from_elems(e: [FFElem; 6]) -> Self {
        let lvl = e[0].d;
        assert!(e.iter().all(|x| x.d == lvl));
        QuadForm { lvl, c: [e[0].bits, e[1].bits, e[2].bits, e[3].bits, e[4].bits, e[5].bits] }
    }

    pub fn zero(lvl: usize) -> Self {
        QuadForm { lvl: lvl as u8, c: [0; 6] }
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; 6]
    }

    pub fn elem(&self, i: usize) -> FFElem {
        FFElem { d: self.lvl, bits: self.c[i] }
    }

    pub fn add(&self, other: &QuadForm) -> QuadForm {
        assert_eq!(self.lvl, other.lvl);
        let mut c = [0u64; 6];
        for i in 0..6 {
            c[i] = self.c[i] ^ other.c[i];
        }
        QuadForm { lvl: self.lvl, c }
    }

    pub fn eval(&self, t: &FieldTower, p: [FFElem; 3]) -> FFElem {
        let lvl = self.lvl as usize;
        assert!(p.iter().all(|v| v.d as usize == lvl));
        let mut acc = t.zero(lvl);
        for (idx, &(i, j, k)) in QUAD_MONOMIALS.iter().enumerate() {
            if self.c[idx] == 0 {
                continue;
            }
            let mut term = t.elem(lvl, self.c[idx]);
            for _ in 0..i {
                term = t.mul(term, p[0]);
            }
            for _ in 0..j {
                term = t.mul(term, p[1]);
            }
            for _ in 0..k {
                term = t.mul(term, p[2]);
            }
            acc = t.add(acc, term);
        }
        acc
    }

    /// Q², expanded: squaring doubles exponents coefficient-wise in char 2.
    pub fn square(&self, t: &FieldTower) -> TernaryQuartic {
        let lvl = self.lvl as usize;
        let mut c = [0u64; 15];
        for (idx, &(i, j, k)) in QUAD_MONOMIALS.iter().enumerate() {
            let sq = t.square(t.elem(lvl, self.c[idx]));
            c[mono_index(2 * i, 2 * j, 2 * k)] = sq.bits;
        }
        TernaryQuartic { lvl: self.lvl, c }
    }

    /// Coefficient-wise Frobenius x ↦ x^q (the paper's Q′).
    pub fn frobenius(&self, t: &FieldTower) -> QuadForm {
        let mut c = [0u64; 6];
        for i in 0..6 {
            c[i] = t.frobenius(self.elem(i)).bits;
        }
        QuadForm { lvl: self.lvl, c }
    }

    pub fn embed(&self, t: &FieldTower, to: usize) -> QuadForm {
        let mut c = [0u64; 6];
        for i in 0..6 {
            c[i] = t.embed(self.elem(i), to).bits;
        }
        QuadForm { lvl: to as u8, c }
    }

    pub fn section(&self, t: &FieldTower, to: usize) -> Option<QuadForm> {
        let mut c = [0u64; 6];
        for i in 0..6 {
            c[i] = t.section(self.elem(i), to)?.bits;
        }
        Some(QuadForm { lvl: to as u8, c })
    }
}

impl TernaryQuartic {
    pub fn zero(lvl: usize) -> Self {
        TernaryQuartic { lvl: lvl as u8, c: [0; 15] }
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; 15]
    }

    pub fn elem(&self, i: usize) -> FFElem {
        FFElem { d: self.lvl, bits: self.c[i] }
    }

    pub fn coeff(&self, i: u8, j: u8, k: u8) -> u64 {
        self.c[mono_index(i, j, k)]
    }

    pub fn add(&self, other: &TernaryQuartic) -> TernaryQuartic {
        assert_eq!(self.lvl, other.lvl);
        let mut c = [0u64; 15];
        for i in 0..15 {
            c[i] = self.c[i] ^ other.c[i];
        }
        TernaryQuartic { lvl: self.lvl, c }
    }

    pub fn scale(&self, t: &FieldTower, s: FFElem) -> TernaryQuartic {
        assert_eq!(s.d, self.lvl);
        let mut c = [0u64; 15];
        for i in 0..15 {
            c[i] = t.mul(self.elem(i), s).bits;
        }
        TernaryQuartic { lvl: self.lvl, c }
    }

    pub fn eval(&self, t: &FieldTower, p: [FFElem; 3]) -> FFElem {
        let lvl = self.lvl as usize;
        assert!(p.iter().all(|v| v.d as usize == lvl));
        let mut pw = [[t.one(lvl); 5]; 3];
        for c in 0..3 {
            for e in 1..5 {
                pw[c][e] = t.mul(pw[c][e - 1], p[c]);
            }
        }
        let mut acc = t.zero(lvl);
        for (idx, &(i, j, k)) in MONOMIALS.iter().enumerate() {
            if self.c[idx] == 0 {
                continue;
            }
            let term = t.mul(
                t.elem(lvl, self.c[idx]),
                t.mul(pw[0][i as usize], t.mul(pw[1][j as usize], pw[2][k as usize])),
            );
            acc = t.add(acc, term);
        }
        acc
    }

    pub fn frobenius(&self, t: &FieldTower) -> TernaryQuartic {
        let mut c = [0u64; 15];
        for i in 0..15 {
            c[i] = t.frobenius(self.elem(i)).bits;
        }
        TernaryQuartic { lvl: self.lvl, c }
    }

    pub fn embed(&self, t: &FieldTower, to: usize) -> TernaryQuartic {
        let mut c = [0u64; 15];
        for i in 0..15 {
            c[i] = t.embed(self.elem(i), to).bits;
        }
        TernaryQuartic { lvl: to as u8, c }
    }

    pub fn section(&self, t: &FieldTower, to: usize) -> Option<TernaryQuartic> {
        let mut c = [0u64; 15];
        for i in 0..15 {
            c[i] = t.section(self.elem(i), to)?.bits;
        }
        Some(TernaryQuartic { lvl: to as u8, c })
    }

    /// Coefficient-wise square root if every monomial has all-even
    /// exponents, i.e. F = Q² for the returned Q.
    pub fn sqrt(&self, t: &FieldTower) -> Option<QuadForm> {
        let lvl = self.lvl as usize;
        let mut q = [0u64; 6];
        for (idx, &(i, j, k)) in MONOMIALS.iter().enumerate() {
            if self.c[idx] == 0 {
                continue;
            }
            if i % 2 != 0 || j % 2 != 0 || k % 2 != 0 {
                return None;
            }
            let pos = QUAD_MONOMIALS
                .iter()
                .position(|&m| m == (i / 2, j / 2, k / 2))
                .unwrap();
            q[pos] = t.sqrt(self.elem(idx)).bits;
        }
        Some(QuadForm { lvl: self.lvl, c: q })
    }

    /// The monomials with some odd exponent (the part not of the form Q²).
    pub fn odd_part(&self) -> TernaryQuartic {
        let mut c = [0u64; 15];
        for (idx, &(i, j, k)) in MONOMIALS.iter().enumerate() {
            if i % 2 == 1 || j % 2 == 1 || k % 2 == 1 {
                c[idx] = self.c[idx];
            }
        }
        TernaryQuartic { lvl: self.lvl, c }
    }

    /// ∂F/∂x_v as a dense cubic (char 2: only odd exponents survive).
    pub fn partial(&self, v: usize) -> TernPoly {
        let mut out = TernPoly::zero(self.lvl as usize, 3);
        for (idx, &(i, j, k)) in MONOMIALS.iter().enumerate() {
            let e = [i, j, k];
            if e[v] % 2 == 1 {
                let mut ne = e;
                ne[v] -= 1;
                out.set(ne[0], ne[1], ne[2], self.c[idx]);
            }
        }
        out
    }

    pub fn to_tern(&self) -> TernPoly {
        TernPoly { lvl: self.lvl, deg: 4, c: self.c.to_vec() }
    }

    pub fn from_tern(p: &TernPoly) -> TernaryQuartic {
        assert_eq!(p.deg, 4);
        let mut c = [0u64; 15];
        c.copy_from_slice(&p.c);
        TernaryQuartic { lvl: p.lvl, c }
    }
}

/// Number of monomials of total degree d in three variables.
pub fn mono_count(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

/// Exponent triples of total degree d, lexicographically ascending.
pub fn mono_list(d: usize) -> Vec<(u8, u8, u8)> {
    let mut v = Vec::with_capacity(mono_count(d));
    for i in 0..=d as u8 {
        for j in 0..=(d as u8 - i) {
            let k = d as u8 - i - j;
            v.push((i, j, k));
        }
    }
    v
}

fn mono_pos(d: usize, i: u8, j: u8) -> usize {
    let i = i as usize;
    let j = j as usize;
    (0..i).map(|ii| d - ii + 1).sum::<usize>() + j
}

/// Dense homogeneous ternary polynomial of degree ≤ 8.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernPoly {
    pub lvl: u8,
    pub deg: usize,
    pub c: Vec<u64>,
}

impl TernPoly {
    pub fn zero(lvl: usize, deg: usize) -> Self {
        TernPoly { lvl: lvl as u8, deg, c: vec![0; mono_count(deg)] }
    }

    pub fn constant(lvl: usize, v: u64) -> Self {
        TernPoly { lvl: lvl as u8, deg: 0, c: vec![v] }
    }

    /// Linear form with the given x, y, z coefficients
    /// (the degree-1 monomial list is z, y, x).
    pub fn linear(lvl: usize, c: [u64; 3]) -> Self {
        TernPoly { lvl: lvl as u8, deg: 1, c: vec![c[2], c[1], c[0]] }
    }

    pub fn get(&self, i: u8, j: u8, k: u8) -> u64 {
        assert_eq!(i as usize + j as usize + k as usize, self.deg);
        self.c[mono_pos(self.deg, i, j)]
    }

    pub fn set(&mut self, i: u8, j: u8, k: u8, v: u64) {
        assert_eq!(i as usize + j as usize + k as usize, self.deg);
        let p = mono_pos(self.deg, i, j);
        self.c[p] = v;
    }

    pub fn xor_at(&mut self, i: u8, j: u8, v: u64) {
        let p = mono_pos(self.deg, i, j);
        self.c[p] ^= v;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &TernPoly) -> TernPoly {
        assert_eq!(self.deg, other.deg);
        assert_eq!(self.lvl, other.lvl);
        let c = self.c.iter().zip(&other.c).map(|(a, b)| a ^ b).collect();
        TernPoly { lvl: self.lvl, deg: self.deg, c }
    }

    pub fn mul(&self, t: &FieldTower, other: &TernPoly) -> TernPoly {
        assert_eq!(self.lvl, other.lvl);
        let lvl = self.lvl as usize;
        let deg = self.deg + other.deg;
        let mut out = TernPoly::zero(lvl, deg);
        let la = mono_list(self.deg);
        let lb = mono_list(other.deg);
        for (ia, &(ai, aj, _)) in la.iter().enumerate() {
            if self.c[ia] == 0 {
                continue;
            }
            let av = t.elem(lvl, self.c[ia]);
            for (ib, &(bi, bj, _)) in lb.iter().enumerate() {
                if other.c[ib] == 0 {
                    continue;
                }
                let prod = t.mul(av, t.elem(lvl, other.c[ib]));
                out.xor_at(ai + bi, aj + bj, prod.bits);
            }
        }
        out
    }

    pub fn scale(&self, t: &FieldTower, s: FFElem) -> TernPoly {
        assert_eq!(s.d, self.lvl);
        let c = self
            .c
            .iter()
            .map(|&v| t.mul(t.elem(self.lvl as usize, v), s).bits)
            .collect();
        TernPoly { lvl: self.lvl, deg: self.deg, c }
    }

    pub fn eval(&self, t: &FieldTower, p: [FFElem; 3]) -> FFElem {
        let lvl = self.lvl as usize;
        let mut acc = t.zero(lvl);
        for (idx, &(i, j, k)) in mono_list(self.deg).iter().enumerate() {
            if self.c[idx] == 0 {
                continue;
            }
            let mut term = t.elem(lvl, self.c[idx]);
            for _ in 0..i {
                term = t.mul(term, p[0]);
            }
            for _ in 0..j {
                term = t.mul(term, p[1]);
            }
            for _ in 0..k {
                term = t.mul(term, p[2]);
            }
            acc = t.add(acc, term);
        }
        acc
    }
}

/// Substitute three linear forms into a homogeneous polynomial:
/// F ↦ F(ℓ₁, ℓ₂, ℓ₃) where ℓ_i has the coefficients of `rows[i]`.
pub fn substitute(t: &FieldTower, rows: &[[u64; 3]; 3], f: &TernPoly) -> TernPoly {
    let lvl = f.lvl as usize;
    let mut pows: Vec<Vec<TernPoly>> = Vec::with_capacity(3);
    for r in rows {
        let l = TernPoly::linear(lvl, *r);
        let mut p = vec![TernPoly::constant(lvl, 1)];
        for e in 1..=f.deg {
            let next = p[e - 1].mul(t, &l);
            p.push(next);
        }
        pows.push(p);
    }
    let mut out = TernPoly::zero(lvl, f.deg);
    for (idx, &(i, j, k)) in mono_list(f.deg).iter().enumerate() {
        if f.c[idx] == 0 {
            continue;
        }
        let term = pows[0][i as usize]
            .mul(t, &pows[1][j as usize])
            .mul(t, &pows[2][k as usize])
            .scale(t, t.elem(lvl, f.c[idx]));
        out = out.add(&term);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::FieldTower;

    #[test]
    fn square_and_sqrt_round_trip() {
        let t = FieldTower::new(2, &[1, 2]);
        for bits in 0..64u64 {
            let q = QuadForm::new(
                1,
                [bits & 3, (bits >> 2) & 3, (bits >> 4) & 3, bits & 3 ^ 1, 2, 3],
            );
            let f = q.square(&t);
            assert_eq!(f.sqrt(&t), Some(q));
        }
        // x³y is not a square.
        let mut c = [0u64; 15];
        c[mono_index(3, 1, 0)] = 1;
        assert_eq!(TernaryQuartic { lvl: 1, c }.sqrt(&t), None);
    }

    #[test]
    fn eval_matches_mul() {
        let t = FieldTower::new(3, &[1]);
        let q = QuadForm::new(1, [1, 2, 3, 4, 5, 6]);
        let f = q.square(&t);
        for xb in 0..8u64 {
            for yb in 0..8u64 {
                let p = [t.elem(1, xb), t.elem(1, yb), t.one(1)];
                let qv = q.eval(&t, p);
                assert_eq!(f.eval(&t, p), t.mul(qv, qv));
            }
        }
    }

    #[test]
    fn substitution_is_functorial_on_eval() {
        // (F ∘ M)(P) = F(M·P) pointwise.
        let t = FieldTower::new(2, &[1]);
        let mut c = [0u64; 15];
        for (i, ci) in c.iter_mut().enumerate() {
            *ci = (i as u64 * 7 + 1) & 3;
        }
        let f = TernaryQuartic { lvl: 1, c };
        let rows = [[1, 2, 0], [0, 1, 3], [2, 0, 1]];
        let g = TernaryQuartic::from_tern(&substitute(&t, &rows, &f.to_tern()));
        let mv = |r: [u64; 3], p: [FFElem; 3]| {
            t.add(
                t.add(t.mul(t.elem(1, r[0]), p[0]), t.mul(t.elem(1, r[1]), p[1])),
                t.mul(t.elem(1, r[2]), p[2]),
            )
        };
        for xb in 0..4u64 {
            for yb in 0..4u64 {
                for zb in 0..4u64 {
                    let p = [t.elem(1, xb), t.elem(1, yb), t.elem(1, zb)];
                    let mp = [mv(rows[0], p), mv(rows[1], p), mv(rows[2], p)];
                    assert_eq!(g.eval(&t, p), f.eval(&t, mp));
                }
            }
        }
    }
}
