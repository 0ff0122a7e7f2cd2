//! The projective plane over tower levels and the group Γ = PGL(3, F_2).
//!
//! Γ is stored as an explicit 168-element table with conjugacy-class labels,
//! centralizer lists and, per element, the F_2-linear coefficient action on
//! quadratic forms together with the cocycle mask H (see `descent`): both
//! are consulted in enumeration inner loops.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSystem;
use crate::forms::{mono_list, substitute, QuadForm, TernPoly, TernaryQuartic, QUAD_MONOMIALS};
use crate::gf2::{FFElem, FieldTower};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjPoint {
    pub lvl: u8,
    pub x: [u64; 3],
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearForm {
    pub lvl: u8,
    pub c: [u64; 3],
}

/// Invertible 3×3 matrix modulo scalars; normalized so the first nonzero
/// entry in row-major order is 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjMap {
    pub lvl: u8,
    pub m: [[u64; 3]; 3],
}

fn canonical3(t: &FieldTower, lvl: usize, v: [u64; 3]) -> [u64; 3] {
    let lead = v.iter().find(|&&c| c != 0).copied().expect("zero vector");
    if lead == 1 {
        return v;
    }
    let inv = t.inv(t.elem(lvl, lead));
    [
        t.mul(t.elem(lvl, v[0]), inv).bits,
        t.mul(t.elem(lvl, v[1]), inv).bits,
        t.mul(t.elem(lvl, v[2]), inv).bits,
    ]
}

impl ProjPoint {
    pub fn new(t: &FieldTower, lvl: usize, x: [u64; 3]) -> Self {
        ProjPoint { lvl: lvl as u8, x: canonical3(t, lvl, x) }
    }

    pub fn coords(&self) -> [FFElem; 3] {
        [
            FFElem { d: self.lvl, bits: self.x[0] },
            FFElem { d: self.lvl, bits: self.x[1] },
            FFElem { d: self.lvl, bits: self.x[2] },
        ]
    }

    pub fn embed(&self, t: &FieldTower, to: usize) -> ProjPoint {
        let c = self.coords().map(|e| t.embed(e, to).bits);
        ProjPoint { lvl: to as u8, x: c }
    }
}

impl LinearForm {
    pub fn new(t: &FieldTower, lvl: usize, c: [u64; 3]) -> Self {
        LinearForm { lvl: lvl as u8, c: canonical3(t, lvl, c) }
    }

    pub fn coeffs(&self) -> [FFElem; 3] {
        [
            FFElem { d: self.lvl, bits: self.c[0] },
            FFElem { d: self.lvl, bits: self.c[1] },
            FFElem { d: self.lvl, bits: self.c[2] },
        ]
    }

    /// Pairing ℓ(P); zero/nonzero is independent of representatives.
    pub fn pair(&self, t: &FieldTower, p: &ProjPoint) -> FFElem {
        assert_eq!(self.lvl, p.lvl);
        let lvl = self.lvl as usize;
        let mut acc = t.zero(lvl);
        for i in 0..3 {
            acc = t.add(acc, t.mul(t.elem(lvl, self.c[i]), t.elem(lvl, p.x[i])));
        }
        acc
    }

    pub fn add(&self, t: &FieldTower, other: &LinearForm) -> Option<LinearForm> {
        assert_eq!(self.lvl, other.lvl);
        let c = [self.c[0] ^ other.c[0], self.c[1] ^ other.c[1], self.c[2] ^ other.c[2]];
        if c == [0, 0, 0] {
            None
        } else {
            Some(LinearForm::new(t, self.lvl as usize, c))
        }
    }

    pub fn frobenius(&self, t: &FieldTower) -> LinearForm {
        let c = self.coeffs().map(|e| t.frobenius(e).bits);
        LinearForm::new(t, self.lvl as usize, c)
    }

    pub fn embed(&self, t: &FieldTower, to: usize) -> LinearForm {
        let c = self.coeffs().map(|e| t.embed(e, to).bits);
        LinearForm::new(t, to as usize, c)
    }

    pub fn section(&self, t: &FieldTower, to: usize) -> Option<LinearForm> {
        let mut c = [0u64; 3];
        for i in 0..3 {
            c[i] = t.section(self.coeffs()[i], to)?.bits;
        }
        Some(LinearForm { lvl: to as u8, c })
    }

    /// Smallest tower level over which the canonical form is defined.
    pub fn min_level(&self, t: &FieldTower) -> usize {
        let d = self.lvl as usize;
        for e in 1..=d {
            if d % e == 0 && t.has_level(e) && self.section(t, e).is_some() {
                return e;
            }
        }
        d
    }

    /// Two independent points spanning the line, deterministically.
    pub fn span_points(&self, t: &FieldTower) -> [ProjPoint; 2] {
        let lvl = self.lvl as usize;
        let [a, b, c] = self.c;
        let (p, q) = if a != 0 {
            // a·x + b·y + c·z = 0 with a = 1 after canonicalization.
            ([b, 1, 0], [c, 0, 1])
        } else if b != 0 {
            ([1, 0, 0], [0, c, 1])
        } else {
            ([1, 0, 0], [0, 1, 0])
        };
        [ProjPoint::new(t, lvl, p), ProjPoint::new(t, lvl, q)]
    }
}

impl ProjMap {
    pub fn new(t: &FieldTower, lvl: usize, m: [[u64; 3]; 3]) -> Self {
        let mut pm = ProjMap { lvl: lvl as u8, m };
        pm.normalize(t);
        assert!(!pm.det(t).is_zero(), "singular projective map");
        pm
    }

    fn normalize(&mut self, t: &FieldTower) {
        let lvl = self.lvl as usize;
        let lead = self
            .m
            .iter()
            .flatten()
            .find(|&&c| c != 0)
            .copied()
            .expect("zero matrix");
        if lead == 1 {
            return;
        }
        let inv = t.inv(t.elem(lvl, lead));
        for r in 0..3 {
            for c in 0..3 {
                self.m[r][c] = t.mul(t.elem(lvl, self.m[r][c]), inv).bits;
            }
        }
    }

    pub fn identity(lvl: usize) -> Self {
        ProjMap { lvl: lvl as u8, m: [[1, 0, 0], [0, 1, 0], [0, 0, 1]] }
    }

    pub fn entry(&self, r: usize, c: usize) -> FFElem {
        FFElem { d: self.lvl, bits: self.m[r][c] }
    }

    pub fn det(&self, t: &FieldTower) -> FFElem {
        let lvl = self.lvl as usize;
        let e = |r: usize, c: usize| t.elem(lvl, self.m[r][c]);
        let m2 = |a: FFElem, b: FFElem, c: FFElem, d: FFElem| t.add(t.mul(a, d), t.mul(b, c));
        let d0 = t.mul(e(0, 0), m2(e(1, 1), e(1, 2), e(2, 1), e(2, 2)));
        let d1 = t.mul(e(0, 1), m2(e(1, 0), e(1, 2), e(2, 0), e(2, 2)));
        let d2 = t.mul(e(0, 2), m2(e(1, 0), e(1, 1), e(2, 0), e(2, 1)));
        t.add(t.add(d0, d1), d2)
    }

    /// Matrix product: `(self ∘ other)` acting on points as self(other(P)).
    pub fn compose(&self, t: &FieldTower, other: &ProjMap) -> ProjMap {
        assert_eq!(self.lvl, other.lvl);
        let lvl = self.lvl as usize;
        let mut m = [[0u64; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = t.zero(lvl);
                for i in 0..3 {
                    acc = t.add(acc, t.mul(self.entry(r, i), other.entry(i, c)));
                }
                m[r][c] = acc.bits;
            }
        }
        ProjMap::new(t, lvl, m)
    }

    pub fn inverse(&self, t: &FieldTower) -> ProjMap {
        let lvl = self.lvl as usize;
        let e = |r: usize, c: usize| t.elem(lvl, self.m[r][c]);
        let m2 = |a: FFElem, b: FFElem, c: FFElem, d: FFElem| t.add(t.mul(a, d), t.mul(b, c));
        // Adjugate (char 2: signs vanish); projectively the determinant
        // scalar is irrelevant.
        let mut adj = [[0u64; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                let (r1, r2) = match r {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                let (c1, c2) = match c {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                adj[c][r] = m2(e(r1, c1), e(r1, c2), e(r2, c1), e(r2, c2)).bits;
            }
        }
        ProjMap::new(t, lvl, adj)
    }

    pub fn apply_point(&self, t: &FieldTower, p: &ProjPoint) -> ProjPoint {
        assert_eq!(self.lvl, p.lvl);
        let lvl = self.lvl as usize;
        let mut x = [0u64; 3];
        for r in 0..3 {
            let mut acc = t.zero(lvl);
            for c in 0..3 {
                acc = t.add(acc, t.mul(self.entry(r, c), t.elem(lvl, p.x[c])));
            }
            x[r] = acc.bits;
        }
        ProjPoint::new(t, lvl, x)
    }

    /// Right action on linear forms: ℓ ↦ ℓ·M, i.e. ℓ^M(v) = ℓ(M·v).
    pub fn apply_form(&self, t: &FieldTower, l: &LinearForm) -> LinearForm {
        assert_eq!(self.lvl, l.lvl);
        let lvl = self.lvl as usize;
        let mut c = [0u64; 3];
        for col in 0..3 {
            let mut acc = t.zero(lvl);
            for r in 0..3 {
                acc = t.add(acc, t.mul(t.elem(lvl, l.c[r]), self.entry(r, col)));
            }
            c[col] = acc.bits;
        }
        LinearForm::new(t, lvl, c)
    }

    pub fn frobenius(&self, t: &FieldTower) -> ProjMap {
        let lvl = self.lvl as usize;
        let mut m = [[0u64; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                m[r][c] = t.frobenius(self.entry(r, c)).bits;
            }
        }
        ProjMap::new(t, lvl, m)
    }

    pub fn embed(&self, t: &FieldTower, to: usize) -> ProjMap {
        let mut m = [[0u64; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                m[r][c] = t.embed(self.entry(r, c), to).bits;
            }
        }
        ProjMap { lvl: to as u8, m }
    }

    pub fn section(&self, t: &FieldTower, to: usize) -> Option<ProjMap> {
        let mut m = [[0u64; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                m[r][c] = t.section(self.entry(r, c), to)?.bits;
            }
        }
        Some(ProjMap { lvl: to as u8, m })
    }
}

/// Right action on homogeneous forms: F^γ(x,y,z) = F(ℓ₁, ℓ₂, ℓ₃) where the
/// ℓ_i are the rows of γ. Satisfies (F^γ)^ρ = F^{γρ}.
pub fn act_on_form(t: &FieldTower, g: &ProjMap, f: &TernaryQuartic) -> TernaryQuartic {
    assert_eq!(g.lvl, f.lvl);
    TernaryQuartic::from_tern(&substitute(t, &g.m, &f.to_tern()))
}

/// Same substitution action on quadratic forms.
pub fn act_on_quad(t: &FieldTower, g: &ProjMap, q: &QuadForm) -> QuadForm {
    assert_eq!(g.lvl, q.lvl);
    let lvl = q.lvl as usize;
    let mut tp = TernPoly::zero(lvl, 2);
    for (idx, &(i, j, k)) in QUAD_MONOMIALS.iter().enumerate() {
        tp.set(i, j, k, q.c[idx]);
    }
    let sub = substitute(t, &g.m, &tp);
    let mut c = [0u64; 6];
    for (idx, &(i, j, k)) in QUAD_MONOMIALS.iter().enumerate() {
        c[idx] = sub.get(i, j, k);
    }
    QuadForm { lvl: q.lvl, c }
}

/// A Fano plane given as its 7 canonical lines, sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FanoPlane {
    pub lines: [LinearForm; 7],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneError {
    DependentLines,
    DegenerateFrame,
}

/// Closure {ℓ₁, ℓ₂, ℓ₃, ℓ₁+ℓ₂+ℓ₃, ℓ₁+ℓ₂, ℓ₂+ℓ₃, ℓ₁+ℓ₃} of three
/// independent lines.
pub fn fano_closure(
    t: &FieldTower,
    l1: &LinearForm,
    l2: &LinearForm,
    l3: &LinearForm,
) -> Result<FanoPlane, PlaneError> {
    let m = ProjMap { lvl: l1.lvl, m: [l1.c, l2.c, l3.c] };
    if m.det(t).is_zero() {
        return Err(PlaneError::DependentLines);
    }
    let s12 = l1.add(t, l2).unwrap();
    let s23 = l2.add(t, l3).unwrap();
    let s13 = l1.add(t, l3).unwrap();
    let s123 = s12.add(t, l3).unwrap();
    let mut lines = [*l1, *l2, *l3, s123, s12, s23, s13];
    lines.sort_unstable();
    debug_assert!(lines.windows(2).all(|w| w[0] != w[1]));
    Ok(FanoPlane { lines })
}

impl FanoPlane {
    pub fn contains(&self, l: &LinearForm) -> bool {
        self.lines.contains(l)
    }

    /// The seven intersection points (each on exactly three lines).
    pub fn points(&self, t: &FieldTower) -> Vec<ProjPoint> {
        let lvl = self.lines[0].lvl as usize;
        let mut pts: Vec<ProjPoint> = Vec::new();
        for i in 0..7 {
            for j in (i + 1)..7 {
                let p = line_intersection(t, &self.lines[i], &self.lines[j]);
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
        }
        assert_eq!(pts.len(), 7, "not a Fano configuration");
        let _ = lvl;
        pts.sort_unstable();
        pts
    }
}

/// Intersection point of two distinct lines (cross product of coefficient
/// vectors; char 2 drops the signs).
pub fn line_intersection(t: &FieldTower, l1: &LinearForm, l2: &LinearForm) -> ProjPoint {
    assert_eq!(l1.lvl, l2.lvl);
    let lvl = l1.lvl as usize;
    let a = l1.coeffs();
    let b = l2.coeffs();
    let cross = [
        t.add(t.mul(a[1], b[2]), t.mul(a[2], b[1])).bits,
        t.add(t.mul(a[2], b[0]), t.mul(a[0], b[2])).bits,
        t.add(t.mul(a[0], b[1]), t.mul(a[1], b[0])).bits,
    ];
    ProjPoint::new(t, lvl, cross)
}

/// Unique projectivity sending one frame (4 points, no 3 collinear) to
/// another.
pub fn map_from_correspondence(
    t: &FieldTower,
    src: &[ProjPoint; 4],
    dst: &[ProjPoint; 4],
) -> Result<ProjMap, PlaneError> {
    let a = frame_matrix(t, src)?;
    let b = frame_matrix(t, dst)?;
    Ok(b.compose(t, &a.inverse(t)))
}

/// Matrix sending the standard frame e1, e2, e3, e1+e2+e3 to the given one.
fn frame_matrix(t: &FieldTower, f: &[ProjPoint; 4]) -> Result<ProjMap, PlaneError> {
    let lvl = f[0].lvl as usize;
    // Solve f3 = α f0 + β f1 + γ f2 by Cramer; columns are then α f0 | β f1 | γ f2.
    let m = ProjMap { lvl: f[0].lvl, m: [f[0].x, f[1].x, f[2].x] };
    let det = m.det(t);
    if det.is_zero() {
        return Err(PlaneError::DegenerateFrame);
    }
    let col = |i: usize| f[i].coords();
    let mut cols = [[0u64; 3]; 3];
    for i in 0..3 {
        // Replace column i of [f0 f1 f2] (as columns) by f3 and take det ratio.
        let mut mm = [[0u64; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                mm[r][c] = if c == i { col(3)[r].bits } else { col(c)[r].bits };
            }
        }
        // Determinant of mm.
        let pm = ProjMap { lvl: f[0].lvl, m: mm };
        let di = pm.det(t);
        if di.is_zero() {
            return Err(PlaneError::DegenerateFrame);
        }
        let coef = t.div(di, det_of_columns(t, lvl, [col(0), col(1), col(2)]));
        for r in 0..3 {
            cols[r][i] = t.mul(coef, col(i)[r]).bits;
        }
    }
    Ok(ProjMap::new(t, lvl, cols))
}

fn det_of_columns(t: &FieldTower, lvl: usize, cols: [[FFElem; 3]; 3]) -> FFElem {
    let mut m = [[0u64; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            m[r][c] = cols[c][r].bits;
        }
    }
    ProjMap { lvl: lvl as u8, m }.det(t)
}

/// All projectivities M with rows over level `m_lvl` mapping src[i]·M ∝
/// dst[i] for each i; src/dst live at `lvl` (a multiple of `m_lvl`).
/// Solved as an F_2 linear system in the bits of M and the scalars.
pub fn solve_line_correspondence(
    t: &FieldTower,
    m_lvl: usize,
    src: &[LinearForm],
    dst: &[LinearForm],
) -> Vec<ProjMap> {
    assert_eq!(src.len(), dst.len());
    let lvl = src[0].lvl as usize;
    assert!(src.iter().chain(dst).all(|l| l.lvl as usize == lvl));
    assert!(lvl % m_lvl == 0);
    let nm = t.bit_width(m_lvl);
    let nl = t.bit_width(lvl);
    let cols = 9 * nm + src.len() * nl;
    assert!(cols <= 128, "correspondence system too wide");
    // Unknown layout: M[r][c] bits (9 blocks of nm), then λ_i (blocks of nl).
    let mbit = |r: usize, c: usize, b: usize| (r * 3 + c) * nm + b;
    let lbit = |i: usize, b: usize| 9 * nm + i * nl + b;

    let mut sys = BitSystem::new(cols);
    for (i, (s, d)) in src.iter().zip(dst).enumerate() {
        for col in 0..3 {
            // Σ_r s[r]·M[r][col] + λ_i·d[col] = 0, expanded over F_2 basis.
            for out_bit in 0..nl {
                let mut row = 0u128;
                for r in 0..3 {
                    let sc = t.elem(lvl, s.c[r]);
                    for b in 0..nm {
                        // basis vector b of level m_lvl, embedded and scaled.
                        let basis = t.embed(t.elem(m_lvl, 1 << b), lvl);
                        let prod = t.mul(sc, basis);
                        if (prod.bits >> out_bit) & 1 == 1 {
                            row ^= 1 << mbit(r, col, b);
                        }
                    }
                }
                let dc = t.elem(lvl, d.c[col]);
                for b in 0..nl {
                    let prod = t.mul(dc, t.elem(lvl, 1 << b));
                    if (prod.bits >> out_bit) & 1 == 1 {
                        row ^= 1 << lbit(i, b);
                    }
                }
                sys.push(row, false);
            }
        }
    }
    let (_, null) = match sys.solve() {
        Some(sol) => sol,
        None => return Vec::new(),
    };
    assert!(null.len() <= 16, "correspondence solution space too large");
    let mut out: Vec<ProjMap> = Vec::new();
    for combo in 1u32..(1 << null.len()) {
        let mut v = 0u128;
        for (i, nb) in null.iter().enumerate() {
            if (combo >> i) & 1 == 1 {
                v ^= nb;
            }
        }
        let mut m = [[0u64; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                let mut bits = 0u64;
                for b in 0..nm {
                    bits |= (((v >> mbit(r, c, b)) & 1) as u64) << b;
                }
                m[r][c] = bits;
            }
        }
        if m.iter().flatten().all(|&x| x == 0) {
            continue;
        }
        let pm = ProjMap { lvl: m_lvl as u8, m };
        if pm.det(t).is_zero() {
            continue;
        }
        let mut pm = pm;
        pm.normalize(t);
        if !out.contains(&pm) {
            out.push(pm);
        }
    }
    out
}

/// The group Γ = PGL(3, F_2) = GL(3, F_2) with precomputed structure.
pub struct Gamma {
    /// 3×3 F_2 matrices, row-major 9-bit packing, in enumeration order.
    pub mats: Vec<u16>,
    /// index lookup by packed matrix
    lookup: Vec<u8>,
    pub mul: Vec<u8>,
    pub inv: Vec<u8>,
    pub order: Vec<u8>,
    pub class: Vec<ClassId>,
    pub centralizer: Vec<Vec<u8>>,
    /// F_2-linear action Q ↦ Q^g as six 6-bit rows per element.
    pub sub_rows: Vec<[u8; 6]>,
    /// 6-bit coefficient mask of the cocycle H_g.
    pub h_mask: Vec<u8>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassId {
    C1,
    C2,
    C3,
    C4,
    C70,
    C71,
}

impl ClassId {
    pub const ALL: [ClassId; 6] =
        [ClassId::C1, ClassId::C2, ClassId::C3, ClassId::C4, ClassId::C70, ClassId::C71];

    pub fn name(&self) -> &'static str {
        match self {
            ClassId::C1 => "1",
            ClassId::C2 => "gamma2",
            ClassId::C3 => "gamma3",
            ClassId::C4 => "gamma4",
            ClassId::C70 => "gamma7_0",
            ClassId::C71 => "gamma7_1",
        }
    }

    /// Descent degree (order of the class representatives).
    pub fn degree(&self) -> usize {
        match self {
            ClassId::C1 => 1,
            ClassId::C2 => 2,
            ClassId::C3 => 3,
            ClassId::C4 => 4,
            ClassId::C70 | ClassId::C71 => 7,
        }
    }
}

/// Fixed conjugacy-class representatives.
pub const GAMMA2: [[u64; 3]; 3] = [[0, 1, 0], [1, 0, 0], [0, 0, 1]];
pub const GAMMA3: [[u64; 3]; 3] = [[0, 1, 0], [0, 0, 1], [1, 0, 0]];
pub const GAMMA4: [[u64; 3]; 3] = [[0, 1, 0], [0, 0, 1], [1, 1, 1]];
pub const GAMMA70: [[u64; 3]; 3] = [[0, 1, 0], [0, 0, 1], [1, 1, 0]];
pub const GAMMA71: [[u64; 3]; 3] = [[0, 1, 0], [0, 0, 1], [1, 0, 1]];
/// The centralizer D₈ of γ₂ is generated by γ₂ and these two elements.
pub const TAU: [[u64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [1, 1, 1]];
pub const RHO: [[u64; 3]; 3] = [[1, 0, 1], [0, 1, 1], [1, 1, 1]];

pub fn pack3(m: &[[u64; 3]; 3]) -> u16 {
    let mut v = 0u16;
    for r in 0..3 {
        for c in 0..3 {
            if m[r][c] & 1 == 1 {
                v |= 1 << (r * 3 + c);
            }
        }
    }
    v
}

fn unpack3(v: u16) -> [[u64; 3]; 3] {
    let mut m = [[0u64; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            m[r][c] = ((v >> (r * 3 + c)) & 1) as u64;
        }
    }
    m
}

fn mul3_f2(a: u16, b: u16) -> u16 {
    let ma = unpack3(a);
    let mb = unpack3(b);
    let mut m = [[0u64; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            let mut acc = 0;
            for i in 0..3 {
                acc ^= ma[r][i] & mb[i][c];
            }
            m[r][c] = acc;
        }
    }
    pack3(&m)
}

fn det3_f2(a: u16) -> u64 {
    let m = unpack3(a);
    (m[0][0] & (m[1][1] & m[2][2] ^ m[1][2] & m[2][1]))
        ^ (m[0][1] & (m[1][0] & m[2][2] ^ m[1][2] & m[2][0]))
        ^ (m[0][2] & (m[1][0] & m[2][1] ^ m[1][1] & m[2][0]))
}

/// Multiply two F_2 ternary polys given as (monomial-list, mask) pairs —
/// only used to derive the cocycle masks at construction time.
fn f2_tern_mul(a: &[( u8, u8, u8)], am: &[bool], b: &[(u8, u8, u8)], bm: &[bool], deg: usize) -> Vec<bool> {
    let out_list = mono_list(deg);
    let mut out = vec![false; out_list.len()];
    for (ia, &(ai, aj, ak)) in a.iter().enumerate() {
        if !am[ia] {
            continue;
        }
        for (ib, &(bi, bj, bk)) in b.iter().enumerate() {
            if !bm[ib] {
                continue;
            }
            let m = (ai + bi, aj + bj, ak + bk);
            let pos = out_list.iter().position(|&x| x == m).unwrap();
            out[pos] ^= true;
        }
    }
    out
}

/// The quartic ℓ₁ℓ₂ℓ₃(ℓ₁+ℓ₂+ℓ₃) over F_2 for the rows of a packed matrix.
fn four_line_product_f2(g: u16) -> Vec<bool> {
    let m = unpack3(g);
    let l1 = mono_list(1);
    // Degree-1 monomials are listed z, y, x.
    let row_mask = |r: usize| vec![m[r][2] == 1, m[r][1] == 1, m[r][0] == 1];
    let sum_mask =
        vec![(m[0][2] ^ m[1][2] ^ m[2][2]) == 1, (m[0][1] ^ m[1][1] ^ m[2][1]) == 1, (m[0][0] ^ m[1][0] ^ m[2][0]) == 1];
    let l12 = f2_tern_mul(&l1, &row_mask(0), &l1, &row_mask(1), 2);
    let l2list = mono_list(2);
    let l123 = f2_tern_mul(&l2list, &l12, &l1, &row_mask(2), 3);
    let l3list = mono_list(3);
    f2_tern_mul(&l3list, &l123, &l1, &sum_mask, 4)
}

impl Gamma {
    pub fn new() -> Gamma {
        let mut mats = Vec::with_capacity(168);
        let mut lookup = vec![u8::MAX; 512];
        for v in 0..512u16 {
            if det3_f2(v) == 1 {
                lookup[v as usize] = mats.len() as u8;
                mats.push(v);
            }
        }
        assert_eq!(mats.len(), 168);
        let n = mats.len();
        let mut mul = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = lookup[mul3_f2(mats[i], mats[j]) as usize];
            }
        }
        let id = lookup[pack3(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]) as usize];
        let mut inv = vec![0u8; n];
        let mut order = vec![0u8; n];
        for i in 0..n {
            let mut p = i as u8;
            let mut o = 1;
            while p != id {
                if mul[p as usize * n + i] == id {
                    inv[i] = p;
                }
                p = mul[p as usize * n + i];
                o += 1;
            }
            if o == 1 {
                inv[i] = id;
            }
            order[i] = o;
        }
        let trace = |v: u16| ((v & 1) ^ ((v >> 4) & 1) ^ ((v >> 8) & 1)) as u8;
        let mut class = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (order[i], trace(mats[i])) {
                (1, _) => ClassId::C1,
                (2, _) => ClassId::C2,
                (3, _) => ClassId::C3,
                (4, _) => ClassId::C4,
                (7, 0) => ClassId::C70,
                (7, 1) => ClassId::C71,
                _ => unreachable!("orders in Γ are 1,2,3,4,7"),
            };
            class.push(c);
        }
        let mut centralizer = Vec::with_capacity(n);
        for i in 0..n {
            let c: Vec<u8> = (0..n as u8)
                .filter(|&j| {
                    mul[i * n + j as usize] == mul[j as usize * n + i]
                })
                .collect();
            centralizer.push(c);
        }
        // Coefficient action Q ↦ Q^g on basis quadforms, over F_2.
        let mut sub_rows = Vec::with_capacity(n);
        for &g in &mats {
            let m = unpack3(g);
            let mut rows = [0u8; 6];
            for (jbas, &(bi, bj, bk)) in QUAD_MONOMIALS.iter().enumerate() {
                // Substitute rows into the basis monomial.
                let l1 = mono_list(1);
                let ms = |r: usize| vec![m[r][2] == 1, m[r][1] == 1, m[r][0] == 1];
                let mut acc = vec![true];
                let mut acc_list_deg = 0usize;
                for (var, &e) in [bi, bj, bk].iter().enumerate() {
                    for _ in 0..e {
                        let cur = mono_list(acc_list_deg);
                        acc = f2_tern_mul(&cur, &acc, &l1, &ms(var), acc_list_deg + 1);
                        acc_list_deg += 1;
                    }
                }
                let l2 = mono_list(2);
                for (pos, &(i2, j2, k2)) in l2.iter().enumerate() {
                    if acc[pos] {
                        let out = QUAD_MONOMIALS.iter().position(|&x| x == (i2, j2, k2)).unwrap();
                        rows[out] |= 1 << jbas;
                    }
                }
            }
            sub_rows.push(rows);
        }
        // Cocycle masks: H_g² = ℓ₁ℓ₂ℓ₃(Σℓ) + xyz(x+y+z).
        let base = four_line_product_f2(pack3(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
        let l4 = mono_list(4);
        let mut h_mask = Vec::with_capacity(n);
        for &g in &mats {
            let prod = four_line_product_f2(g);
            let mut mask = 0u8;
            for (pos, &(i, j, k)) in l4.iter().enumerate() {
                if prod[pos] ^ base[pos] {
                    assert!(i % 2 == 0 && j % 2 == 0 && k % 2 == 0, "cocycle difference must be a square");
                    let out = QUAD_MONOMIALS
                        .iter()
                        .position(|&x| x == (i / 2, j / 2, k / 2))
                        .unwrap();
                    mask |= 1 << out;
                }
            }
            h_mask.push(mask);
        }
        Gamma { mats, lookup, mul, inv, order, class, centralizer, sub_rows, h_mask }
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity(&self) -> u8 {
        self.lookup[pack3(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]) as usize]
    }

    pub fn index_of(&self, m: &[[u64; 3]; 3]) -> u8 {
        let i = self.lookup[pack3(m) as usize];
        assert!(i != u8::MAX, "not an invertible F_2 matrix");
        i
    }

    pub fn matrix(&self, i: u8) -> [[u64; 3]; 3] {
        unpack3(self.mats[i as usize])
    }

    pub fn proj_map(&self, i: u8, lvl: usize) -> ProjMap {
        ProjMap { lvl: lvl as u8, m: self.matrix(i) }
    }

    #[inline]
    pub fn compose(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * 168 + b as usize]
    }

    pub fn class_rep(&self, c: ClassId) -> u8 {
        match c {
            ClassId::C1 => self.identity(),
            ClassId::C2 => self.index_of(&GAMMA2),
            ClassId::C3 => self.index_of(&GAMMA3),
            ClassId::C4 => self.index_of(&GAMMA4),
            ClassId::C70 => self.index_of(&GAMMA70),
            ClassId::C71 => self.index_of(&GAMMA71),
        }
    }

    /// Raw substitution action Q ↦ Q^g (no cocycle term).
    #[inline]
    pub fn substitute_quad(&self, g: u8, q: &QuadForm) -> QuadForm {
        let rows = &self.sub_rows[g as usize];
        let mut c = [0u64; 6];
        for i in 0..6 {
            let mut acc = 0u64;
            let r = rows[i];
            for j in 0..6 {
                if (r >> j) & 1 == 1 {
                    acc ^= q.c[j];
                }
            }
            c[i] = acc;
        }
        QuadForm { lvl: q.lvl, c }
    }

    /// The cocycle H_g as a quadratic form at the requested level
    /// (coefficients are 0 or 1).
    pub fn cocycle(&self, g: u8, lvl: usize) -> QuadForm {
        let mut c = [0u64; 6];
        for i in 0..6 {
            c[i] = ((self.h_mask[g as usize] >> i) & 1) as u64;
        }
        QuadForm { lvl: lvl as u8, c }
    }
}

impl Default for Gamma {
    fn default() -> Self {
        Gamma::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::FieldTower;

    #[test]
    fn gamma_group_structure() {
        let g = Gamma::new();
        assert_eq!(g.len(), 168);
        // Class sizes partition 168 as 1+21+56+42+24+24 and centralizer
        // sizes match 168/|class|.
        let mut sizes = [0usize; 6];
        for i in 0..168u8 {
            let k = ClassId::ALL.iter().position(|&c| c == g.class[i as usize]).unwrap();
            sizes[k] += 1;
        }
        assert_eq!(sizes, [1, 21, 56, 42, 24, 24]);
        for c in ClassId::ALL {
            let rep = g.class_rep(c);
            assert_eq!(g.class[rep as usize], c);
            let csize = sizes[ClassId::ALL.iter().position(|&x| x == c).unwrap()];
            assert_eq!(g.centralizer[rep as usize].len() * csize, 168);
        }
        let expected = [168usize, 8, 3, 4, 7, 7];
        for (c, want) in ClassId::ALL.iter().zip(expected) {
            assert_eq!(g.centralizer[g.class_rep(*c) as usize].len(), want);
        }
        // The D₈ centralizer of γ₂ is exactly {1, γ, τ, γτ, ρ, ρ³, ρτ, τρ}.
        let gam = g.index_of(&GAMMA2);
        let tau = g.index_of(&TAU);
        let rho = g.index_of(&RHO);
        let rho3 = g.compose(rho, g.compose(rho, rho));
        let members = [
            g.identity(),
            gam,
            tau,
            g.compose(gam, tau),
            rho,
            rho3,
            g.compose(rho, tau),
            g.compose(tau, rho),
        ];
        let mut want: Vec<u8> = members.to_vec();
        want.sort_unstable();
        want.dedup();
        assert_eq!(want.len(), 8);
        let mut have = g.centralizer[gam as usize].clone();
        have.sort_unstable();
        assert_eq!(have, want);
        // ρ² = γ, τ² = 1.
        assert_eq!(g.compose(rho, rho), gam);
        assert_eq!(g.compose(tau, tau), g.identity());
    }

    #[test]
    fn substitution_rows_match_generic_action() {
        let g = Gamma::new();
        let t = FieldTower::new(2, &[1]);
        for i in (0..168u8).step_by(7) {
            let pm = g.proj_map(i, 1);
            for bits in 0..64u64 {
                let q = QuadForm::new(
                    1,
                    [bits & 3, 3, (bits >> 2) & 3, (bits >> 4) & 3, 1, 2],
                );
                assert_eq!(g.substitute_quad(i, &q), act_on_quad(&t, &pm, &q));
            }
        }
    }

    #[test]
    fn frame_map_and_inverse() {
        let t = FieldTower::new(3, &[1]);
        let e1 = ProjPoint::new(&t, 1, [1, 0, 0]);
        let e2 = ProjPoint::new(&t, 1, [0, 1, 0]);
        let e3 = ProjPoint::new(&t, 1, [0, 0, 1]);
        let e4 = ProjPoint::new(&t, 1, [1, 1, 1]);
        let id = map_from_correspondence(&t, &[e1, e2, e3, e4], &[e1, e2, e3, e4]).unwrap();
        assert_eq!(id, ProjMap::identity(1));
        // A random-ish frame over F_8: all four incidences verified.
        let src = [e1, e2, e3, e4];
        let dst = [
            ProjPoint::new(&t, 1, [3, 1, 0]),
            ProjPoint::new(&t, 1, [0, 5, 1]),
            ProjPoint::new(&t, 1, [1, 1, 1]),
            ProjPoint::new(&t, 1, [2, 7, 6]),
        ];
        let m = map_from_correspondence(&t, &src, &dst).unwrap();
        for (s, d) in src.iter().zip(&dst) {
            assert_eq!(m.apply_point(&t, s), *d);
        }
        let mi = m.inverse(&t);
        assert_eq!(m.compose(&t, &mi), ProjMap::identity(1));
        // Swapping two points yields an order-2 map on the frame.
        let m2 = map_from_correspondence(&t, &[e1, e2, e3, e4], &[e2, e1, e3, e4]).unwrap();
        assert_eq!(m2.compose(&t, &m2), ProjMap::identity(1));
    }

    #[test]
    fn fano_closure_of_standard_triple() {
        let t = FieldTower::new(1, &[1]);
        let x = LinearForm::new(&t, 1, [1, 0, 0]);
        let y = LinearForm::new(&t, 1, [0, 1, 0]);
        let z = LinearForm::new(&t, 1, [0, 0, 1]);
        let f = fano_closure(&t, &x, &y, &z).unwrap();
        // B₀ = all 7 lines of P²(F_2).
        assert_eq!(f.lines.len(), 7);
        for l in &f.lines {
            assert!(l.c.iter().all(|&c| c <= 1));
        }
        // Permuting the generators yields the same set.
        let f2 = fano_closure(&t, &z, &x, &y).unwrap();
        assert_eq!(f, f2);
        assert_eq!(f.points(&t).len(), 7);
        // Dependent lines are rejected.
        let xy = x.add(&t, &y).unwrap();
        assert!(fano_closure(&t, &x, &y, &xy).is_err());
    }

    #[test]
    fn line_correspondence_solver_frame() {
        let t = FieldTower::new(2, &[1, 2]);
        // Map the frame lines x,y,z,x+y+z to themselves: solutions are the
        // maps permuting... at least the identity must appear.
        let lines: Vec<LinearForm> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
            .iter()
            .map(|c| LinearForm::new(&t, 1, *c))
            .collect();
        let sols = solve_line_correspondence(&t, 1, &lines, &lines);
        assert!(sols.contains(&ProjMap::identity(1)));
        for m in &sols {
            for l in &lines {
                let img = m.apply_form(&t, l);
                assert!(lines.contains(&img));
            }
        }
    }
}
