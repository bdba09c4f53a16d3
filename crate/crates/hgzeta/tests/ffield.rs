mod common;

use hgzeta::ffield::{FieldCtx, FqElem};
use proptest::prelude::*;

#[test]
fn prime_field_arithmetic() {
    let f = FieldCtx::new(7, 1, 1).unwrap();
    assert_eq!(f.q, 7);
    let a = f.from_int(3);
    let b = f.from_int(5);
    assert_eq!(f.add(a, b), f.from_int(1));
    assert_eq!(f.mul(a, b), f.from_int(1));
    assert_eq!(f.sub(a, b), f.from_int(-2));
    assert_eq!(f.neg(a), f.from_int(4));
    assert_eq!(f.inv(a), b);
    assert_eq!(f.pow(a, 6), f.one());
    assert_eq!(f.pow(a, -1), b);
}

#[test]
fn extension_field_axioms() {
    for (p, fdeg, r) in [(7u64, 2u32, 1u32), (5, 1, 2), (3, 2, 2), (13, 1, 1)] {
        let f = FieldCtx::new(p, fdeg, r).unwrap();
        let size = f.size;
        let elems: Vec<FqElem> = f.elements().collect();
        assert_eq!(elems.len() as u64, size);
        let units: Vec<FqElem> = f.units().collect();
        assert_eq!(units.len() as u64, size - 1);
        for &a in units.iter().take(20) {
            assert_eq!(f.mul(a, f.inv(a)), f.one());
            assert_eq!(f.pow(a, f.m as i64), f.one());
            let k = f.dlog(a).unwrap();
            assert_eq!(f.exp_gen(k), a);
        }
        // Distributivity on a sample.
        let (a, b, c) = (elems[1], elems[size as usize / 2], elems[size as usize - 1]);
        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    }
}

#[test]
fn frobenius_invariants() {
    let f = FieldCtx::new(5, 2, 1).unwrap(); // F_25
    for a in f.elements() {
        // x^q = x and the trace lands in F_p.
        assert_eq!(f.pow(a, 25), a);
        let t = f.trace_to_prime(a);
        assert!(t < 5);
    }
    // Trace is additive.
    for a in f.elements().take(10) {
        for b in f.elements().take(10) {
            let lhs = f.trace_to_prime(f.add(a, b));
            let rhs = (f.trace_to_prime(a) + f.trace_to_prime(b)) % 5;
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn embedding_is_a_ring_homomorphism() {
    let base = FieldCtx::new(7, 1, 1).unwrap();
    let ext = FieldCtx::new(7, 1, 3).unwrap(); // F_343
    for a in base.elements() {
        for b in base.elements() {
            assert_eq!(
                ext.embed(&base, base.add(a, b)),
                ext.add(ext.embed(&base, a), ext.embed(&base, b))
            );
            assert_eq!(
                ext.embed(&base, base.mul(a, b)),
                ext.mul(ext.embed(&base, a), ext.embed(&base, b))
            );
        }
    }
    // Norm compatibility: N(embed(a)) = a^{(q^r−1)/(q−1)} = a^{r-fold}.
    for a in base.units() {
        let n = ext.norm_to_base(ext.embed(&base, a));
        assert_eq!(n, base.pow(a, (343 - 1) / 6));
    }
}

#[test]
fn rejects_composite_characteristic() {
    assert!(FieldCtx::new(6, 1, 1).is_err());
    assert!(FieldCtx::new(1, 1, 1).is_err());
}

proptest! {
    #[test]
    fn field_ops_random(pi in 0usize..3, xs in proptest::collection::vec(0u64..168, 3)) {
        let p = [5u64, 7, 13][pi];
        let f = FieldCtx::new(p, 1, 2).unwrap();
        let m = f.m;
        let a = f.exp_gen(xs[0] % m);
        let b = f.exp_gen(xs[1] % m);
        let c = f.exp_gen(xs[2] % m);
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        // dlog of a product adds.
        let ka = f.dlog(a).unwrap();
        let kb = f.dlog(b).unwrap();
        prop_assert_eq!(f.dlog(f.mul(a, b)).unwrap(), (ka + kb) % m);
    }
}
