use quartics_core::gf2::generators::*;
use quartics_core::gf2::FieldTower;

#[test]
fn n43_line_product_q8() {
    let t = FieldTower::new(3, &[1, 2, 3, 4, 7]);
    let g = find_family_generators(&t);
    let c = &g.n43;
    println!("q=8 n43: s={:?} t={:?} v={:?}", c.s, c.t, c.v);
    // do the formulas give the OTHER conjugate?
    for (lbl, w) in [("v", c.v), ("v'", t.frobenius(c.v)), ("v''", t.frob_pow(c.v, 2))] {
        for (tl, tc) in [("t", c.t), ("t+1", t.add(c.t, t.one(1)))] {
            let s3 = t.add(t.mul(t.square(w), w), w);
            let rhs = t.add(t.mul(t.inv(s3), t.square(w)), t.mul(t.embed(tc, 3), w));
            let which = if rhs == t.frobenius(w) { "= sigma(w)" }
                else if rhs == t.frob_pow(w, 2) { "= sigma^2(w)" }
                else if rhs == w { "= w" } else { "= other" };
            println!("  base {} with {}: s^-1 w^2 + t w {}", lbl, tl, which);
        }
    }
    // actual ratios product: l = y + (v'/v) z etc; coefficients of y^2 z and y z^2
    let v = c.v;
    let r0 = t.div(t.frobenius(v), v);
    let r1 = t.frobenius(r0);
    let r2 = t.frobenius(r1);
    let e1 = t.add(t.add(r0, r1), r2);
    let e2 = t.add(t.add(t.mul(r0, r1), t.mul(r1, r2)), t.mul(r0, r2));
    let e3 = t.mul(t.mul(r0, r1), r2);
    println!("  e1={:?} e2={:?} e3={:?} (t={:?}, t+1={:?})", t.section(e1,1), t.section(e2,1), t.section(e3,1), c.t, t.add(c.t, t.one(1)));
}
