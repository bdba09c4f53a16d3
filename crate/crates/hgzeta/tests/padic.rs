mod common;

use common::dwork;
use hgzeta::ffield::{FieldCtx, FqElem};
use hgzeta::padic::{
    eval_f_trunc, f11_residue, f_series, fgl_log_coefficient, height_one_test, unit_root,
    PadicCtx,
};
use proptest::prelude::*;
use rug::{Integer, Rational};

#[test]
fn ring_axioms_unramified_extension() {
    // W(F_49)/7⁵: Teichmüller lifts, Frobenius, and inverses.
    let field = FieldCtx::new(7, 2, 1).unwrap();
    let ctx = PadicCtx::new(&field, 5);
    for enc in [1u64, 3, 10, 23, 48] {
        let a = FqElem(enc);
        let t = ctx.teichmuller(&field, a);
        // ω^{q−1} = 1 and σ(ω) = ω^p.
        assert_eq!(ctx.pow(&t, 48), ctx.one(), "enc={enc}");
        let st = ctx.frobenius(&t);
        assert_eq!(st, ctx.pow(&t, 7), "enc={enc}");
        assert_eq!(ctx.residue(&field, &t), a);
        // σ is a ring homomorphism.
        let expr = ctx.add(&ctx.mul(&t, &t), &ctx.one());
        assert_eq!(
            ctx.frobenius(&expr),
            ctx.add(&ctx.mul(&st, &st), &ctx.one())
        );
        // Units invert.
        let it = ctx.inv(&t).unwrap();
        assert_eq!(ctx.mul(&t, &it), ctx.one());
    }
    // Frobenius has order f: σ² = id on W(F_49).
    let t = ctx.teichmuller(&field, FqElem(10));
    assert_eq!(ctx.frobenius(&ctx.frobenius(&t)), t);
}

#[test]
fn non_units_and_precision() {
    let field = FieldCtx::new(7, 1, 1).unwrap();
    let ctx = PadicCtx::new(&field, 4);
    let seven = ctx.from_int(7);
    assert!(!ctx.is_unit(&seven));
    assert!(ctx.inv(&seven).is_err());
    assert!(ctx.is_zero(&ctx.pow(&seven, 4))); // 7⁴ ≡ 0 mod 7⁴
    assert!(!ctx.is_zero(&ctx.pow(&seven, 3)));
    // eq_mod compares to reduced precision.
    let a = ctx.from_int(3);
    let b = ctx.from_int(3 + 343);
    assert!(ctx.eq_mod(&a, &b, 3));
    assert!(!ctx.eq_mod(&a, &b, 4));
}

#[test]
fn rational_lifts() {
    let field = FieldCtx::new(7, 1, 1).unwrap();
    let ctx = PadicCtx::new(&field, 6);
    let r = Rational::from((2, 3));
    let x = ctx.from_rational(&r).unwrap();
    assert_eq!(ctx.scale(&x, &Integer::from(3)), ctx.from_int(2));
    // Denominators divisible by p are rejected.
    assert!(ctx.from_rational(&Rational::from((1, 7))).is_err());
}

#[test]
fn deformation_series_basics() {
    let cubic = dwork(2, 7);
    let ctx = PadicCtx::new(&cubic.field, 4);
    let series = f_series(&cubic, &ctx, 10).unwrap();
    // Constant term 1: the k = 0 term of the multinomial stream.
    let at_zero = series.eval(&ctx, &ctx.zero());
    assert_eq!(at_zero, ctx.one());
    // Truncated evaluation at s agrees with the explicit series of the same
    // length (degree < p^s).
    let x = ctx.from_int(3);
    let full = f_series(&cubic, &ctx, 7).unwrap().eval(&ctx, &x);
    let trunc = eval_f_trunc(&cubic, &ctx, &x, 1).unwrap();
    assert_eq!(full, trunc);
}

#[test]
fn residue_criterion_matches_unit_root_classes() {
    // At q=11 the fiber is supersingular exactly for λ ∈ {5, 7, 10}.
    let cubic = dwork(2, 11);
    let ctx = PadicCtx::new(&cubic.field, 3);
    let mut supersingular = Vec::new();
    for lam in cubic.field.units() {
        if !cubic.lambda_admissible(lam) {
            continue;
        }
        let ordinary = f11_residue(&cubic, lam).0 != 0;
        let ur = unit_root(&cubic, &ctx, lam).unwrap();
        assert_eq!(ur.is_some(), ordinary, "λ={}", lam.0);
        if !ordinary {
            supersingular.push(lam.0);
        }
    }
    supersingular.sort();
    assert_eq!(supersingular, vec![5, 7, 10]);
}

#[test]
fn unit_root_value_properties() {
    let cubic = dwork(2, 7);
    let ctx = PadicCtx::new(&cubic.field, 4);
    for lv in [1i64, 2, 4] {
        let lam = cubic.lambda_from_int(lv);
        let g = unit_root(&cubic, &ctx, lam).unwrap().expect("ordinary");
        // The unit root is a unit and reduces to the residue of the
        // truncated series at λ^{−α}.
        assert!(height_one_test(&ctx, &g));
        assert_eq!(ctx.residue(&cubic.field, &g), f11_residue(&cubic, lam));
    }
    // λ = 0 is outside the deformation torus.
    assert!(unit_root(&cubic, &ctx, cubic.field.zero()).is_err());
}

#[test]
fn unit_root_precision_consistency() {
    // Computing at precision 2 must agree with the precision-4 value mod p².
    let cubic = dwork(2, 7);
    let ctx2 = PadicCtx::new(&cubic.field, 2);
    let ctx4 = PadicCtx::new(&cubic.field, 4);
    for lv in [1i64, 2, 4] {
        let lam = cubic.lambda_from_int(lv);
        let g2 = unit_root(&cubic, &ctx2, lam).unwrap().unwrap();
        let g4 = unit_root(&cubic, &ctx4, lam).unwrap().unwrap();
        let g4_red = ctx2.from_integer(&g4.coeffs[0]);
        assert_eq!(g2, g4_red, "λ={lv}");
    }
}

#[test]
fn log_coefficient_forms_small() {
    let cubic = dwork(2, 7);
    let ctx = PadicCtx::new(&cubic.field, 5);
    let lam = ctx.add(
        &ctx.teichmuller(&cubic.field, cubic.lambda_from_int(2)),
        &ctx.from_int(7),
    );
    for m in 0..=12u64 {
        let (a, b) = fgl_log_coefficient(&cubic, &ctx, &lam, m).unwrap();
        assert_eq!(a, b, "m={m}");
    }
}

proptest! {
    #[test]
    fn ring_ops_random(x in -500i64..500, y in -500i64..500, z in -500i64..500) {
        let field = FieldCtx::new(5, 2, 1).unwrap();
        let ctx = PadicCtx::new(&field, 4);
        let gen = ctx.teichmuller(&field, FqElem(5)); // a non-prime-field unit
        let a = ctx.mul(&ctx.from_int(x), &gen);
        let b = ctx.add(&ctx.from_int(y), &gen);
        let c = ctx.from_int(z);
        prop_assert_eq!(ctx.add(&a, &b), ctx.add(&b, &a));
        prop_assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
        prop_assert_eq!(
            ctx.mul(&a, &ctx.add(&b, &c)),
            ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
        );
        prop_assert_eq!(ctx.sub(&ctx.add(&a, &b), &b), a.clone());
        // Frobenius is additive and multiplicative.
        prop_assert_eq!(
            ctx.frobenius(&ctx.mul(&a, &b)),
            ctx.mul(&ctx.frobenius(&a), &ctx.frobenius(&b))
        );
        prop_assert_eq!(
            ctx.frobenius(&ctx.add(&a, &b)),
            ctx.add(&ctx.frobenius(&a), &ctx.frobenius(&b))
        );
    }
}
