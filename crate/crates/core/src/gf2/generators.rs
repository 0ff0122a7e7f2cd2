//! The special elements every rational normal model is built from, plus
//! power-class data, Hilbert 90 and the additive kernels of family S.
//!
//! All searches scan elements in the fixed bit order, first admissible hit,
//! so normal models are reproducible across runs.

use alloc::vec::Vec;

use super::poly::{FPoly, Poly};
use super::{FFElem, FieldTower};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    NormNotOne,
}

/// Coset representatives of k*/(k*)^e and the e-th roots of unity in k,
/// both in scan order. e ∈ {3, 9}.
pub fn power_class_data(t: &FieldTower, e: u32) -> (Vec<FFElem>, Vec<FFElem>) {
    assert!(e == 3 || e == 9);
    let mu: Vec<FFElem> = t
        .nonzero_elements(1)
        .filter(|&x| t.pow(x, e as u128) == t.one(1))
        .collect();
    let powers: Vec<FFElem> = {
        let mut p: Vec<FFElem> = t.nonzero_elements(1).map(|x| t.pow(x, e as u128)).collect();
        p.sort_unstable();
        p.dedup();
        p
    };
    let mut reps = Vec::new();
    let mut seen = hashbrown::HashSet::new();
    for x in t.nonzero_elements(1) {
        if seen.contains(&x) {
            continue;
        }
        reps.push(x);
        for &p in &powers {
            seen.insert(t.mul(x, p));
        }
    }
    assert_eq!(reps.len(), mu.len());
    (reps, mu)
}

/// Solve t = s/σ(s) in k_d*, given that the norm of t down to k is 1.
pub fn hilbert90_solve(t: &FieldTower, val: FFElem, d: usize) -> Result<FFElem, GenError> {
    assert_eq!(val.d as usize, d);
    let mut norm = val;
    for i in 1..d {
        norm = t.mul(norm, t.frob_pow(val, i));
    }
    if t.section(norm, 1) != Some(t.one(1)) {
        return Err(GenError::NormNotOne);
    }
    // s(θ) = Σ b_i σ^i(θ) with b_0 = 1, b_{i+1} = t·σ(b_i); then s = t·σ(s).
    for theta in t.nonzero_elements(d) {
        let mut s = theta;
        let mut b = t.one(d);
        for i in 1..d {
            b = t.mul(val, t.frobenius(b));
            s = t.add(s, t.mul(b, t.frob_pow(theta, i)));
        }
        if !s.is_zero() {
            debug_assert_eq!(t.div(s, t.frobenius(s)), val);
            return Ok(s);
        }
    }
    unreachable!("Hilbert 90 twisted sums cannot all vanish")
}

/// ker(E_{c,f}) for E_{c,f}(x) = cx² + fx + √x on k; an F_2-subspace of
/// size 1, 2 or 4.
pub fn additive_kernel(t: &FieldTower, c: FFElem, f: FFElem) -> Vec<FFElem> {
    assert!(!c.is_zero());
    t.elements(1)
        .filter(|&x| {
            t.add(t.add(t.mul(c, t.square(x)), t.mul(f, x)), t.sqrt(x)).is_zero()
        })
        .collect()
}

/// Monic irreducible septics x⁷+ax³+bx+c over k dividing x^(q³)+x^q+x
/// (S₀) resp. x^(q³)+x^(q²)+x (S₁), in scan order of (a,b,c).
pub fn septic_sets(t: &FieldTower) -> (Vec<FPoly>, Vec<FPoly>) {
    let n = t.n();
    let lv = t.level(1);
    let mut s0 = Vec::new();
    let mut s1 = Vec::new();
    for a in t.elements(1) {
        for b in t.elements(1) {
            for c in t.elements(1) {
                let mut coeffs = [0u64; 8];
                coeffs[7] = 1;
                coeffs[3] = a.bits;
                coeffs[1] = b.bits;
                coeffs[0] = c.bits;
                let f = Poly::new(coeffs.to_vec());
                // x^(q³) + x^(q^i) + x ≡ 0 mod f for i = 1 (S₀) or 2 (S₁).
                let xq3 = f.xpow2e_mod(3 * n, lv);
                let xq1 = f.xpow2e_mod(n, lv);
                let xq2 = f.xpow2e_mod(2 * n, lv);
                let x = Poly::x().rem(&f, lv);
                let in0 = xq3.add(&xq1).add(&x).is_zero();
                let in1 = xq3.add(&xq2).add(&x).is_zero();
                if !in0 && !in1 {
                    continue;
                }
                let fp = FPoly { d: 1, p: f };
                if !fp.is_irreducible(t) {
                    continue;
                }
                if in0 {
                    s0.push(fp.clone());
                }
                if in1 {
                    s1.push(fp);
                }
            }
        }
    }
    let q = t.q() as usize;
    let expect = (q * q * q - 1) / 7;
    assert_eq!(s0.len(), expect, "|S0| must be (q^3-1)/7");
    assert_eq!(s1.len(), expect, "|S1| must be (q^3-1)/7");
    (s0, s1)
}

/// Shape of the cubic generator equation: the ordinary O₃ models use
/// v³+v² = s, the four-bitangent models use v³+v = s.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubicShape {
    VCubePlusVSquare,
    VCubePlusV,
}

/// A cubic generator v of k₃/k with its equation data.
#[derive(Clone, Debug)]
pub struct CubicGen {
    pub shape: CubicShape,
    pub s: FFElem,
    /// Solution of t²+t+1 = s⁻¹, preferring the root matching the closed
    /// conjugate formula for this shape when one does.
    pub t: FFElem,
    pub v: FFElem,
}

/// The full deterministic generator set for one ground field.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    /// First non-Artin-Schreier element of k.
    pub r: FFElem,
    /// u ∈ k₂ with u² + u = r (least root).
    pub u: FFElem,
    pub o3: CubicGen,
    pub n43: CubicGen,
    /// t ∈ k* with t⁻¹ ∉ AS(k).
    pub t4: FFElem,
    /// w ∈ k₄ \ k₂ with w⁴ + (t+t²)w² + t²w = 1.
    pub w: FFElem,
    /// α = w + w′, satisfying α² + tα = t.
    pub alpha: FFElem,
    /// Root of the first polynomial of S₀ resp. S₁.
    pub zeta0: FFElem,
    pub zeta1: FFElem,
    /// Fixed non-AS element reused by the two-bitangent family (= r).
    pub r0: FFElem,
    pub cube_reps: Vec<FFElem>,
    pub mu3: Vec<FFElem>,
    pub ninth_reps: Vec<FFElem>,
    pub mu9: Vec<FFElem>,
}

fn min_root_at_level(t: &FieldTower, f: &FPoly, lvl: usize) -> FFElem {
    let coeffs: Vec<FFElem> = (0..=f.deg() as usize)
        .map(|i| t.embed(f.coeff(t, i), lvl))
        .collect();
    let fe = FPoly::from_elems(lvl, &coeffs);
    let roots = fe.roots(t);
    *roots.first().expect("polynomial has no root at the requested level")
}

fn find_cubic_gen(t: &FieldTower, shape: CubicShape) -> CubicGen {
    for s in t.nonzero_elements(1) {
        // t² + t + 1 = s⁻¹ needs s⁻¹ + 1 ∈ AS(k).
        let target = t.add(t.inv(s), t.one(1));
        let tt = match t.elements(1).find(|&x| t.add(t.square(x), x) == target) {
            Some(x) => x,
            None => continue,
        };
        let coeffs = match shape {
            CubicShape::VCubePlusVSquare => [s, t.zero(1), t.one(1), t.one(1)],
            CubicShape::VCubePlusV => [s, t.one(1), t.zero(1), t.one(1)],
        };
        let f = FPoly::from_elems(1, &coeffs);
        if !f.is_irreducible(t) {
            continue;
        }
        let v = min_root_at_level(t, &f, 3);
        let tt = [tt, t.add(tt, t.one(1))]
            .into_iter()
            .find(|&cand| conjugate_formula_matches(t, shape, v, cand))
            .unwrap_or(tt);
        return CubicGen { shape, s, t: tt, v };
    }
    unreachable!("no admissible cubic generator over k")
}

/// v′ = v²(tv+1)⁻¹ (v³+v² = s) resp. v′ = s⁻¹v² + tv (v³+v = s).
pub fn conjugate_formula_matches(
    t: &FieldTower,
    shape: CubicShape,
    v: FFElem,
    tval: FFElem,
) -> bool {
    let t3 = t.embed(tval, 3);
    let vq = t.frobenius(v);
    match shape {
        CubicShape::VCubePlusVSquare => {
            let den = t.add(t.mul(t3, v), t.one(3));
            !den.is_zero() && vq == t.div(t.square(v), den)
        }
        CubicShape::VCubePlusV => {
            let s = t.add(t.mul(t.square(v), v), v);
            vq == t.add(t.mul(t.inv(s), t.square(v)), t.mul(t3, v))
        }
    }
}

pub fn find_family_generators(t: &FieldTower) -> GeneratorSet {
    let r = t
        .elements(1)
        .find(|&x| !t.in_artin_schreier(x))
        .expect("AS(k) has index 2");
    let r2 = t.embed(r, 2);
    let u = t
        .elements(2)
        .find(|&x| t.add(t.square(x), x) == r2)
        .expect("u exists in k2 by non-membership of r in AS(k)");
    debug_assert!(t.section(u, 1).is_none());

    let o3 = find_cubic_gen(t, CubicShape::VCubePlusVSquare);
    let n43 = find_cubic_gen(t, CubicShape::VCubePlusV);

    let t4 = t
        .nonzero_elements(1)
        .find(|&x| !t.in_artin_schreier(t.inv(x)))
        .expect("t with 1/t not in AS(k)");
    // w⁴ + (t+t²)w² + t²w + 1 = 0, w ∉ k₂.
    let tsq = t.square(t4);
    let wpoly = FPoly::from_elems(
        1,
        &[t.one(1), tsq, t.add(t4, tsq), t.zero(1), t.one(1)],
    );
    let wcoeffs: Vec<FFElem> = (0..=4).map(|i| t.embed(wpoly.coeff(t, i), 4)).collect();
    let w = FPoly::from_elems(4, &wcoeffs)
        .roots(t)
        .into_iter()
        .find(|&x| t.section(x, 2).is_none())
        .expect("w generates k4 over k2");
    let alpha = t.add(w, t.frobenius(w));
    debug_assert_eq!(t.add(w, t.frob_pow(w, 2)), t.embed(t4, 4), "w + w'' = t");
    debug_assert_eq!(
        t.add(t.square(alpha), t.mul(t.embed(t4, 4), alpha)),
        t.embed(t4, 4),
        "alpha² + t·alpha = t"
    );

    let (s0, s1) = septic_sets(t);
    let zeta0 = min_root_at_level(t, &s0[0], 7);
    let zeta1 = min_root_at_level(t, &s1[0], 7);
    // Case 0: ζ + ζ''' = ζ′; case 1: ζ + ζ''' = ζ″.
    debug_assert_eq!(t.add(zeta0, t.frob_pow(zeta0, 3)), t.frobenius(zeta0));
    debug_assert_eq!(t.add(zeta1, t.frob_pow(zeta1, 3)), t.frob_pow(zeta1, 2));

    let (cube_reps, mu3) = power_class_data(t, 3);
    let (ninth_reps, mu9) = power_class_data(t, 9);

    GeneratorSet {
        r,
        u,
        o3,
        n43,
        t4,
        w,
        alpha,
        zeta0,
        zeta1,
        r0: r,
        cube_reps,
        mu3,
        ninth_reps,
        mu9,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::FieldTower;

    #[test]
    fn power_classes_small_fields() {
        // q=2: reps {1}, μ₃ = {1}; q=4: both have 3 elements; q=4, e=9: N=3.
        let t2 = FieldTower::new(1, &[1]);
        let (reps, mu) = power_class_data(&t2, 3);
        assert_eq!(reps, alloc::vec![t2.one(1)]);
        assert_eq!(mu, alloc::vec![t2.one(1)]);
        let t4 = FieldTower::new(2, &[1]);
        let (reps, mu) = power_class_data(&t4, 3);
        assert_eq!((reps.len(), mu.len()), (3, 3));
        let (reps9, mu9) = power_class_data(&t4, 9);
        assert_eq!((reps9.len(), mu9.len()), (3, 3));
        // q=8: 8 ≡ 2 mod 3, so N = 1.
        let t8 = FieldTower::new(3, &[1]);
        assert_eq!(power_class_data(&t8, 3).0.len(), 1);
        assert_eq!(power_class_data(&t8, 9).0.len(), 1);
        // q=16: 16 ≡ 7 mod 9, so |μ₉| = 3.
        let t16 = FieldTower::new(4, &[1]);
        assert_eq!(power_class_data(&t16, 9).0.len(), 3);
    }

    #[test]
    fn hilbert90_basics() {
        let t = FieldTower::new(2, &[1, 2, 3]);
        assert!(!hilbert90_solve(&t, t.one(2), 2).unwrap().is_zero());
        // t = u'/u has norm 1; the solver's output satisfies t = s/σs.
        for u in t.nonzero_elements(2) {
            let val = t.div(t.frobenius(u), u);
            let s = hilbert90_solve(&t, val, 2).unwrap();
            assert_eq!(t.div(s, t.frobenius(s)), val);
        }
        // An element with norm ≠ 1 is rejected.
        let bad = t
            .nonzero_elements(2)
            .find(|&x| {
                let norm = t.mul(x, t.frobenius(x));
                t.section(norm, 1) != Some(t.one(1))
            })
            .unwrap();
        assert_eq!(hilbert90_solve(&t, bad, 2), Err(GenError::NormNotOne));
    }

    #[test]
    fn additive_kernel_sizes() {
        // q=2, c=1, f=0: kernel = {0,1}; all kernels have size 1, 2 or 4.
        let t2 = FieldTower::new(1, &[1]);
        let k = additive_kernel(&t2, t2.one(1), t2.zero(1));
        assert_eq!(k.len(), 2);
        for n in 1..=4usize {
            let t = FieldTower::new(n, &[1]);
            for c in t.nonzero_elements(1) {
                for f in t.elements(1) {
                    let k = additive_kernel(&t, c, f);
                    assert!(matches!(k.len(), 1 | 2 | 4));
                    assert!(k.contains(&t.zero(1)));
                    for &a in &k {
                        for &b in &k {
                            assert!(k.contains(&t.add(a, b)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn septics_q2_and_q4() {
        let t2 = FieldTower::new(1, &[1, 7]);
        let (s0, s1) = septic_sets(&t2);
        assert_eq!((s0.len(), s1.len()), (1, 1));
        // x⁷+x+1 ∈ S₀ and x⁷+x³+1 ∈ S₁.
        assert_eq!(s0[0].p.c, alloc::vec![1, 1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(s1[0].p.c, alloc::vec![1, 0, 0, 1, 0, 0, 0, 1]);

        let t4 = FieldTower::new(2, &[1, 7]);
        let (s0, s1) = septic_sets(&t4);
        assert_eq!((s0.len(), s1.len()), (9, 9));
        for f in s0.iter().chain(&s1) {
            assert!(f.is_irreducible(&t4));
        }
    }

    #[test]
    fn septic_product_identity() {
        // (x^(q³)+x^q+x)(x^(q³)+x^(q²)+x) = x² · Π_{f ∈ S} f(x) at q = 2.
        let t = FieldTower::new(1, &[1, 7]);
        let big = 1usize << (3 * t.n());
        let q = t.q() as usize;
        let mut lhs1 = alloc::vec![0u64; big + 1];
        lhs1[big] = 1;
        lhs1[q] ^= 1;
        lhs1[1] ^= 1;
        let mut lhs2 = alloc::vec![0u64; big + 1];
        lhs2[big] = 1;
        lhs2[q * q] ^= 1;
        lhs2[1] ^= 1;
        let lv = t.level(1);
        let lhs = Poly::new(lhs1).mul(&Poly::new(lhs2), lv);
        let (s0, s1) = septic_sets(&t);
        let mut rhs = Poly::new(alloc::vec![0, 0, 1]);
        for f in s0.iter().chain(&s1) {
            rhs = rhs.mul(&f.p, lv);
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn generator_sets_all_q() {
        for n in 1..=4usize {
            let t = FieldTower::new(n, &[1, 2, 3, 4, 7]);
            let g = find_family_generators(&t);
            // u² + u = r and u′ also satisfies the equation.
            let r2 = t.embed(g.r, 2);
            assert_eq!(t.add(t.square(g.u), g.u), r2);
            let uq = t.frobenius(g.u);
            assert_eq!(t.add(t.square(uq), uq), r2);
            assert_eq!(uq, t.add(g.u, t.one(2)));
            // Tr(u) = u + u' lies in k.
            let tr = t.add(g.u, uq);
            assert_eq!(t.square(tr), tr);
            // Cubic generators solve their equations.
            let s3 = t.embed(g.o3.s, 3);
            assert_eq!(t.add(t.mul(t.square(g.o3.v), g.o3.v), t.square(g.o3.v)), s3);
            let s3b = t.embed(g.n43.s, 3);
            assert_eq!(t.add(t.mul(t.square(g.n43.v), g.n43.v), g.n43.v), s3b);
            // t² + t + 1 = s⁻¹ for both.
            for c in [&g.o3, &g.n43] {
                assert_eq!(t.add(t.add(t.square(c.t), c.t), t.one(1)), t.inv(c.s));
            }
            assert!(!t.in_artin_schreier(t.inv(g.t4)));
            if n % 2 == 1 {
                // t = 1 is admissible iff q is not a square; the scan finds it.
                assert_eq!(g.t4, t.one(1));
            }
            // ζ case split.
            assert_eq!(t.add(g.zeta0, t.frob_pow(g.zeta0, 3)), t.frobenius(g.zeta0));
            assert_eq!(t.add(g.zeta1, t.frob_pow(g.zeta1, 3)), t.frob_pow(g.zeta1, 2));
        }
        // q = 2: r = 1 is the unique non-AS element.
        let t = FieldTower::new(1, &[1, 2, 3, 4, 7]);
        let g = find_family_generators(&t);
        assert_eq!(g.r, t.one(1));
    }

    #[test]
    fn frobenius_of_septic_root_is_square_at_q2() {
        let t = FieldTower::new(1, &[1, 2, 3, 4, 7]);
        let g = find_family_generators(&t);
        // q = 2: Frobenius is squaring, and ζ² is again a root of x⁷+x+1.
        let z2 = t.frobenius(g.zeta0);
        assert_eq!(z2, t.square(g.zeta0));
        let f = &septic_sets(&t).0[0];
        let coeffs: Vec<FFElem> = (0..=7).map(|i| t.embed(f.coeff(&t, i), 7)).collect();
        let f7 = FPoly::from_elems(7, &coeffs);
        assert!(f7.eval(&t, z2).is_zero());
    }
}
