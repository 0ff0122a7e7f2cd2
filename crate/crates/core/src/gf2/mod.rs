//! The field tower F_2 ⊆ k = GF(2^n) ⊆ k_d = GF(2^{nd}).
//!
//! Elements are bit-packed polynomial representatives modulo a fixed
//! defining polynomial per level, so equality is bitwise and every level
//! fits in a `u64` (m = n·d ≤ 60). Defining polynomials are the
//! lexicographically least irreducibles of each degree, and subfield
//! embeddings are chosen so that k → k_d → k_{d·e} always agrees with
//! k → k_{d·e}.

pub mod generators;
pub mod poly;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::BitMatrix;

/// Element of the tower: `d` is the extension degree over k, `bits` the
/// packed polynomial representative of degree < n·d.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FFElem {
    pub d: u8,
    pub bits: u64,
}

impl FFElem {
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerError {
    UnknownLevel(usize),
    LevelMismatch { expected: usize, got: usize },
    NotASubfield { from: usize, to: usize },
    BadConfigLine(String),
    NotIrreducible { degree: usize, poly: u64 },
}

struct Embedding {
    fwd: BitMatrix,
    back: BitMatrix,
}

pub(crate) struct Level {
    pub d: usize,
    pub m: usize,
    pub poly: u64,
    sq: BitMatrix,
    frob_q: BitMatrix,
    sqrt: BitMatrix,
    log: Option<Vec<u32>>,
    exp: Option<Vec<u64>>,
    embeds: BTreeMap<usize, Embedding>,
}

const LOG_TABLE_MAX_M: usize = 16;

#[inline]
pub(crate) fn clmul(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let x = a as u128;
    let mut rem = b;
    while rem != 0 {
        let i = rem.trailing_zeros();
        acc ^= x << i;
        rem &= rem - 1;
    }
    acc
}

#[inline]
pub(crate) fn reduce128(mut p: u128, poly: u64, m: u32) -> u64 {
    while p >> m != 0 {
        let h = 127 - p.leading_zeros();
        p ^= (poly as u128) << (h - m);
    }
    p as u64
}

/// F_2[x] helpers on packed polynomials.
pub(crate) mod f2x {
    use super::{clmul, reduce128};

    pub fn deg(a: u64) -> i32 {
        if a == 0 {
            -1
        } else {
            63 - a.leading_zeros() as i32
        }
    }

    pub fn mulmod(a: u64, b: u64, f: u64, m: u32) -> u64 {
        reduce128(clmul(a, b), f, m)
    }

    pub fn rem(mut a: u64, b: u64) -> u64 {
        let db = deg(b);
        assert!(db >= 0);
        while deg(a) >= db {
            a ^= b << (deg(a) - db);
        }
        a
    }

    pub fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let r = rem(a, b);
            a = b;
            b = r;
        }
        a
    }

    /// x^(2^e) mod f, f of degree m.
    pub fn xpow2e_mod(e: usize, f: u64, m: u32) -> u64 {
        let mut x = rem(2, f);
        for _ in 0..e {
            x = mulmod(x, x, f, m);
        }
        x
    }

    pub fn is_irreducible(f: u64, m: usize) -> bool {
        if m == 0 || f & 1 == 0 && m > 1 {
            return false;
        }
        if xpow2e_mod(m, f, m as u32) != rem(2, f) {
            return false;
        }
        let mut k = m;
        let mut p = 2;
        while p * p <= k {
            if k % p == 0 {
                let g = xpow2e_mod(m / p, f, m as u32) ^ rem(2, f);
                if gcd(f, g) != 1 {
                    return false;
                }
                while k % p == 0 {
                    k /= p;
                }
            }
            p += 1;
        }
        if k > 1 {
            let g = xpow2e_mod(m / k, f, m as u32) ^ rem(2, f);
            if gcd(f, g) != 1 {
                return false;
            }
        }
        true
    }

    /// Lexicographically least monic irreducible of degree m with
    /// nonzero constant term.
    pub fn least_irreducible(m: usize) -> u64 {
        let base = 1u64 << m;
        let mut t = 1u64;
        loop {
            let cand = base | t;
            if is_irreducible(cand, m) {
                return cand;
            }
            t += 2;
        }
    }
}

impl Level {
    fn new(d: usize, m: usize, poly: u64) -> Self {
        let m32 = m as u32;
        let sq_cols: Vec<u64> = (0..m)
            .map(|i| {
                let xi = reduce128(1u128 << i, poly, m32);
                f2x::mulmod(xi, xi, poly, m32)
            })
            .collect();
        let sq = BitMatrix::from_columns(m, &sq_cols);
        Level {
            d,
            m,
            poly,
            frob_q: BitMatrix::identity(m),
            sqrt: sq.pow(if m > 1 { m - 1 } else { 1 }),
            sq,
            log: None,
            exp: None,
            embeds: BTreeMap::new(),
        }
    }

    fn build_tables(&mut self) {
        if self.m > LOG_TABLE_MAX_M {
            return;
        }
        if self.m == 1 {
            self.log = Some(alloc::vec![u32::MAX, 0]);
            self.exp = Some(alloc::vec![1, 1]);
            return;
        }
        let ord = (1u64 << self.m) - 1;
        'outer: for g in 2..(1u64 << self.m) {
            let mut log = alloc::vec![u32::MAX; 1 << self.m];
            let mut exp = alloc::vec![0u64; 2 * ord as usize];
            let mut v = 1u64;
            for i in 0..ord {
                if log[v as usize] != u32::MAX {
                    continue 'outer;
                }
                log[v as usize] = i as u32;
                exp[i as usize] = v;
                exp[i as usize + ord as usize] = v;
                v = self.mul_slow(v, g);
            }
            if v == 1 {
                self.log = Some(log);
                self.exp = Some(exp);
                return;
            }
        }
        unreachable!("no generator found");
    }

    #[inline]
    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        f2x::mulmod(a, b, self.poly, self.m as u32)
    }

    #[inline]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        match (&self.log, &self.exp) {
            (Some(log), Some(exp)) => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize]
                }
            }
            _ => self.mul_slow(a, b),
        }
    }

    pub(crate) fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        if let (Some(log), Some(exp)) = (&self.log, &self.exp) {
            let ord = (1u64 << self.m) - 1;
            return exp[(ord as usize) - log[a as usize] as usize];
        }
        // a^(2^m - 2)
        let mut acc = 1u64;
        let mut base = a;
        let mut e = (1u128 << self.m) - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub(crate) fn square(&self, a: u64) -> u64 {
        self.sq.apply(a)
    }

    pub(crate) fn pow(&self, a: u64, mut e: u128) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// The tower of fields over F_2 for a fixed ground field k = GF(2^n).
pub struct FieldTower {
    n: usize,
    levels: BTreeMap<usize, Level>,
}

impl FieldTower {
    /// Tower with levels k_d for every d in `degrees` (level 1 is always
    /// included), using the compiled-in defining polynomials.
    pub fn new(n: usize, degrees: &[usize]) -> Self {
        assert!(n >= 1 && n <= 5, "ground field limited to GF(2^n), n <= 5");
        let mut ds: Vec<usize> = degrees.to_vec();
        ds.push(1);
        ds.sort_unstable();
        ds.dedup();
        assert!(ds.iter().all(|&d| d >= 1 && n * d <= 60));
        let mut tower = FieldTower { n, levels: BTreeMap::new() };
        for &d in &ds {
            let m = n * d;
            let poly = f2x::least_irreducible(m);
            tower.insert_level(d, m, poly);
        }
        tower.build_embeddings();
        tower
    }

    /// All levels needed by the census: d = 1..12 (singular-point degrees)
    /// which covers the bitangent levels {2,3,4,7} and 9, 12.
    pub fn standard(n: usize) -> Self {
        let ds: Vec<usize> = (1..=12).collect();
        Self::new(n, &ds)
    }

    fn insert_level(&mut self, d: usize, m: usize, poly: u64) {
        let mut lv = Level::new(d, m, poly);
        lv.frob_q = lv.sq.pow(self.n);
        lv.build_tables();
        self.levels.insert(d, lv);
    }

    fn build_embeddings(&mut self) {
        let ds: Vec<usize> = self.levels.keys().copied().collect();
        for &d in &ds {
            for &e in &ds {
                if e >= d || d % e != 0 {
                    continue;
                }
                let emb = self.make_embedding(e, d);
                self.levels.get_mut(&d).unwrap().embeds.insert(e, emb);
            }
        }
        #[cfg(debug_assertions)]
        self.check_embedding_coherence();
    }

    fn make_embedding(&self, e: usize, d: usize) -> Embedding {
        let src = &self.levels[&e];
        let dst = &self.levels[&d];
        // Roots of the level-e defining polynomial inside level d.
        let coeffs: Vec<u64> = (0..=src.m).map(|i| (src.poly >> i) & 1).collect();
        let mut roots = poly::roots_over_level(&coeffs, dst);
        roots.sort_unstable();
        let root = if e == 1 {
            roots[0]
        } else {
            // Pick the root whose embedding agrees with the level-1 maps on
            // the generator of k, so k -> k_e -> k_d equals k -> k_d.
            let gen1 = if self.levels[&1].m == 1 { 1u64 } else { 2u64 };
            let gen1_in_e = src.embeds[&1].fwd.apply(gen1);
            let gen1_in_d = dst.embeds[&1].fwd.apply(gen1);
            *roots
                .iter()
                .find(|&&r| {
                    let cols: Vec<u64> =
                        (0..src.m).map(|i| dst.pow(r, i as u128)).collect();
                    let fwd = BitMatrix::from_columns(dst.m, &cols);
                    fwd.apply(gen1_in_e) == gen1_in_d
                })
                .expect("no k-compatible embedding root")
        };
        let cols: Vec<u64> = (0..src.m).map(|i| dst.pow(root, i as u128)).collect();
        let fwd = BitMatrix::from_columns(dst.m, &cols);
        let back = fwd.left_inverse();
        Embedding { fwd, back }
    }

    #[cfg(debug_assertions)]
    fn check_embedding_coherence(&self) {
        let ds: Vec<usize> = self.levels.keys().copied().collect();
        for &e in &ds {
            for &d in &ds {
                if e >= d || d % e != 0 || e == 1 {
                    continue;
                }
                // k -> k_e -> k_d must equal k -> k_d on the generator of k.
                let g = if self.levels[&1].m == 1 { 1u64 } else { 2u64 };
                let via = self.levels[&d].embeds[&e]
                    .fwd
                    .apply(self.levels[&e].embeds[&1].fwd.apply(g));
                let direct = self.levels[&d].embeds[&1].fwd.apply(g);
                assert_eq!(via, direct, "incoherent embeddings 1 -> {} -> {}", e, d);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        1 << self.n
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.levels.keys().copied().collect()
    }

    pub fn has_level(&self, d: usize) -> bool {
        self.levels.contains_key(&d)
    }

    /// Bits in a level-d element (= n·d).
    pub fn bit_width(&self, d: usize) -> usize {
        self.levels[&d].m
    }

    pub(crate) fn level(&self, d: usize) -> &Level {
        self.levels.get(&d).unwrap_or_else(|| panic!("no tower level {}", d))
    }

    pub fn elem(&self, d: usize, bits: u64) -> FFElem {
        debug_assert!(bits >> self.level(d).m == 0);
        FFElem { d: d as u8, bits }
    }

    pub fn zero(&self, d: usize) -> FFElem {
        self.elem(d, 0)
    }

    pub fn one(&self, d: usize) -> FFElem {
        self.elem(d, 1)
    }

    #[inline]
    fn same_level(&self, x: FFElem, y: FFElem) -> usize {
        assert_eq!(x.d, y.d, "tower level mismatch");
        x.d as usize
    }

    #[inline]
    pub fn add(&self, x: FFElem, y: FFElem) -> FFElem {
        let d = self.same_level(x, y);
        self.elem(d, x.bits ^ y.bits)
    }

    #[inline]
    pub fn mul(&self, x: FFElem, y: FFElem) -> FFElem {
        let d = self.same_level(x, y);
        self.elem(d, self.level(d).mul(x.bits, y.bits))
    }

    pub fn inv(&self, x: FFElem) -> FFElem {
        self.elem(x.d as usize, self.level(x.d as usize).inv(x.bits))
    }

    pub fn div(&self, x: FFElem, y: FFElem) -> FFElem {
        self.mul(x, self.inv(y))
    }

    pub fn square(&self, x: FFElem) -> FFElem {
        self.elem(x.d as usize, self.level(x.d as usize).square(x.bits))
    }

    /// Inverse of squaring; total since squaring is bijective in char 2.
    pub fn sqrt(&self, x: FFElem) -> FFElem {
        self.elem(x.d as usize, self.level(x.d as usize).sqrt.apply(x.bits))
    }

    pub fn pow(&self, x: FFElem, e: u128) -> FFElem {
        self.elem(x.d as usize, self.level(x.d as usize).pow(x.bits, e))
    }

    /// x ↦ x^q, the Frobenius of k̄ relative to k (the paper's x′).
    pub fn frobenius(&self, x: FFElem) -> FFElem {
        self.elem(x.d as usize, self.level(x.d as usize).frob_q.apply(x.bits))
    }

    /// j-fold Frobenius x ↦ x^(q^j).
    pub fn frob_pow(&self, x: FFElem, j: usize) -> FFElem {
        let lv = self.level(x.d as usize);
        let mut b = x.bits;
        for _ in 0..(j % lv.d) {
            b = lv.frob_q.apply(b);
        }
        self.elem(x.d as usize, b)
    }

    pub fn embed(&self, x: FFElem, to_d: usize) -> FFElem {
        let from = x.d as usize;
        if from == to_d {
            return x;
        }
        assert!(to_d % from == 0, "no embedding k_{} -> k_{}", from, to_d);
        let lv = self.level(to_d);
        self.elem(to_d, lv.embeds[&from].fwd.apply(x.bits))
    }

    /// Write x as an element of the subfield k_e (e | d) if it lies there.
    pub fn section(&self, x: FFElem, to_e: usize) -> Option<FFElem> {
        let from = x.d as usize;
        if from == to_e {
            return Some(x);
        }
        assert!(from % to_e == 0, "k_{} is not a subfield of k_{}", to_e, from);
        let emb = &self.level(from).embeds[&to_e];
        let down = emb.back.apply(x.bits);
        if emb.fwd.apply(down) == x.bits {
            Some(self.elem(to_e, down))
        } else {
            None
        }
    }

    /// Smallest e | d with x defined over k_e.
    pub fn min_level(&self, x: FFElem) -> usize {
        let d = x.d as usize;
        for e in 1..=d {
            if d % e == 0 && self.has_level(e) && self.section(x, e).is_some() {
                return e;
            }
        }
        d
    }

    /// Relative trace Σ_i x^(q_e^i) from level `from = x.d` down to level
    /// `to_e` (must divide it); the result lies in k_e.
    pub fn rel_trace(&self, x: FFElem, to_e: usize) -> FFElem {
        let d = x.d as usize;
        assert!(d % to_e == 0, "trace target k_{} not a subfield of k_{}", to_e, d);
        let steps = d / to_e;
        let mut acc = x;
        let mut cur = x;
        for _ in 1..steps {
            cur = self.frob_pow(cur, to_e);
            acc = self.add(acc, cur);
        }
        self.section(acc, to_e)
            .expect("relative trace must land in the subfield")
    }

    /// Absolute trace to F_2 of an element at any level.
    pub fn trace_to_f2(&self, x: FFElem) -> u64 {
        let lv = self.level(x.d as usize);
        let mut acc = x.bits;
        let mut cur = x.bits;
        for _ in 1..lv.m {
            cur = lv.square(cur);
            acc ^= cur;
        }
        debug_assert!(acc <= 1);
        acc
    }

    /// r ∈ AS(k) = {x + x² | x ∈ k} iff Tr_{k/F_2}(r) = 0.
    pub fn in_artin_schreier(&self, r: FFElem) -> bool {
        assert_eq!(r.d, 1, "Artin-Schreier membership is asked at level 1");
        self.trace_to_f2(r) == 0
    }

    /// All elements of level d in the fixed enumeration order.
    pub fn elements(&self, d: usize) -> impl Iterator<Item = FFElem> + Clone + '_ {
        let m = self.level(d).m;
        (0u64..(1 << m)).map(move |b| FFElem { d: d as u8, bits: b })
    }

    pub fn nonzero_elements(&self, d: usize) -> impl Iterator<Item = FFElem> + Clone + '_ {
        let m = self.level(d).m;
        (1u64..(1 << m)).map(move |b| FFElem { d: d as u8, bits: b })
    }

    /// Defining polynomials as a plain-text table `deg:hex-coeffs`.
    pub fn dump_config(&self) -> String {
        let mut s = String::new();
        for lv in self.levels.values() {
            s.push_str(&format!("{}:{:x}\n", lv.m, lv.poly));
        }
        s
    }

    /// Build a tower for ground degree n from a dumped table; entries whose
    /// degree is not a multiple of n are ignored.
    pub fn from_config(n: usize, table: &str) -> Result<Self, TowerError> {
        let mut tower = FieldTower { n, levels: BTreeMap::new() };
        for line in table.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (ms, ps) = line
                .split_once(':')
                .ok_or_else(|| TowerError::BadConfigLine(String::from(line)))?;
            let m: usize = ms
                .parse()
                .map_err(|_| TowerError::BadConfigLine(String::from(line)))?;
            let poly = u64::from_str_radix(ps, 16)
                .map_err(|_| TowerError::BadConfigLine(String::from(line)))?;
            if m % n != 0 {
                continue;
            }
            if !f2x::is_irreducible(poly, m) {
                return Err(TowerError::NotIrreducible { degree: m, poly });
            }
            tower.insert_level(m / n, m, poly);
        }
        if !tower.levels.contains_key(&1) {
            return Err(TowerError::UnknownLevel(1));
        }
        tower.build_embeddings();
        Ok(tower)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_irreducibles_match_known_table() {
        // x+1, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, ...
        assert_eq!(f2x::least_irreducible(1), 0b11);
        assert_eq!(f2x::least_irreducible(2), 0b111);
        assert_eq!(f2x::least_irreducible(3), 0b1011);
        assert_eq!(f2x::least_irreducible(4), 0b10011);
        assert_eq!(f2x::least_irreducible(5), 0b100101);
        assert_eq!(f2x::least_irreducible(7), 0b10000011);
    }

    fn axioms(n: usize) {
        let t = FieldTower::new(n, &[1, 2, 3, 4, 6]);
        for d in [1usize, 2, 3] {
            let m = t.bit_width(d);
            let mask = (1u64 << m) - 1;
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut rnd = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 16) & mask
            };
            for _ in 0..2000 {
                let a = t.elem(d, rnd());
                let b = t.elem(d, rnd());
                let c = t.elem(d, rnd());
                assert_eq!(t.mul(a, t.mul(b, c)), t.mul(t.mul(a, b), c));
                assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
                if !a.is_zero() {
                    assert_eq!(t.mul(a, t.inv(a)), t.one(d));
                }
                // Frobenius is a field automorphism.
                assert_eq!(t.frobenius(t.add(a, b)), t.add(t.frobenius(a), t.frobenius(b)));
                assert_eq!(t.frobenius(t.mul(a, b)), t.mul(t.frobenius(a), t.frobenius(b)));
                assert_eq!(t.sqrt(t.square(a)), a);
            }
        }
    }

    #[test]
    fn field_axioms_random_samples() {
        axioms(1);
        axioms(2);
        axioms(3);
    }

    #[test]
    fn frobenius_fixes_exactly_k() {
        for n in 1..=3 {
            let t = FieldTower::new(n, &[1, 2, 3]);
            for d in [2usize, 3] {
                let mut fixed = 0usize;
                for x in t.elements(d) {
                    if t.frobenius(x) == x {
                        fixed += 1;
                        assert_eq!(t.min_level(x), 1);
                    }
                }
                assert_eq!(fixed as u64, t.q());
            }
            // Applying sigma d times is the identity on k_d.
            for x in t.elements(3) {
                assert_eq!(t.frob_pow(x, 3), x);
            }
        }
    }

    #[test]
    fn embeddings_commute_via_intermediate() {
        for n in 1..=3 {
            let t = FieldTower::new(n, &[1, 2, 3, 4, 6, 12]);
            for a in t.elements(1) {
                assert_eq!(t.embed(t.embed(a, 2), 4), t.embed(a, 4));
                assert_eq!(t.embed(t.embed(a, 2), 12), t.embed(a, 12));
                assert_eq!(t.embed(t.embed(a, 3), 6), t.embed(a, 6));
                assert_eq!(t.embed(t.embed(a, 6), 12), t.embed(a, 12));
                assert_eq!(t.embed(t.embed(a, 4), 12), t.embed(a, 12));
            }
        }
    }

    #[test]
    fn trace_properties() {
        let t = FieldTower::new(2, &[1, 2, 3, 6]);
        // Tr_{k/k} is the identity.
        for x in t.elements(1) {
            assert_eq!(t.rel_trace(x, 1), x);
        }
        // Trace lands in the subfield and is transitive through k_2 | k_6.
        for x in t.elements(6).take(512) {
            let down = t.rel_trace(x, 1);
            assert_eq!(down.d, 1);
            let via = t.rel_trace(t.rel_trace(x, 2), 1);
            assert_eq!(via, down);
            let via3 = t.rel_trace(t.rel_trace(x, 3), 1);
            assert_eq!(via3, down);
        }
        // k-linearity of Tr_{k_2/k}.
        for a in t.elements(1) {
            for x in t.elements(2).take(64) {
                let ax = t.mul(t.embed(a, 2), x);
                assert_eq!(t.rel_trace(ax, 1), t.mul(a, t.rel_trace(x, 1)));
            }
        }
    }

    #[test]
    fn trace_balanced_over_f8() {
        // Tr_{F8/F2} summed over all x is 0, and the trace is onto.
        let t = FieldTower::new(3, &[1]);
        let mut sum = 0u64;
        let mut ones = 0usize;
        for x in t.elements(1) {
            let tr = t.trace_to_f2(x);
            sum ^= tr;
            ones += tr as usize;
        }
        assert_eq!(sum, 0);
        assert_eq!(ones, 4);
    }

    #[test]
    fn artin_schreier_counts() {
        for n in 1..=4 {
            let t = FieldTower::new(n, &[1]);
            let q = t.q();
            let in_as = t.elements(1).filter(|&r| t.in_artin_schreier(r)).count() as u64;
            assert_eq!(in_as, q / 2);
            assert!(t.in_artin_schreier(t.zero(1)));
            // Exhaustive cross-check against the defining set {x + x^2}.
            let mut seen = alloc::collections::BTreeSet::new();
            for x in t.elements(1) {
                seen.insert(t.add(x, t.square(x)));
            }
            for r in t.elements(1) {
                assert_eq!(seen.contains(&r), t.in_artin_schreier(r));
            }
        }
        // k = F_2: r = 1 is not Artin-Schreier.
        let t = FieldTower::new(1, &[1]);
        assert!(!t.in_artin_schreier(t.one(1)));
    }

    #[test]
    fn config_round_trip() {
        let t = FieldTower::new(2, &[1, 2, 3]);
        let dump = t.dump_config();
        let t2 = FieldTower::from_config(2, &dump).unwrap();
        assert_eq!(t2.dump_config(), dump);
        // A reducible entry is rejected, and so is a table without level 1.
        assert!(FieldTower::from_config(2, "2:5\n").is_err()); // x^2+1 = (x+1)^2
        assert!(FieldTower::from_config(2, "4:13\n").is_err()); // no level 1
        assert!(FieldTower::from_config(2, "bogus").is_err());
    }
}
