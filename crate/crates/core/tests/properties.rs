mod common;

use common::pv;
use pandiag_core::lattice::{shift_axis, view_rows, SymbolPermutation};
use pandiag_core::magic::compose;
use pandiag_core::modarith::is_coprime;
use pandiag_core::params::is_feasible;
use pandiag_core::{
    build, compose_checked, enumerate, permute_symbols, scale, slice, verify_latin_pandiagonal,
    verify_magic_pandiagonal, verify_orthogonal_brute, ParamVector, SliceSpec,
};
use proptest::prelude::*;

fn arb_vector() -> impl Strategy<Value = ParamVector> {
    (2usize..=3, prop::sample::select(vec![5u64, 7, 9, 11, 13]))
        .prop_flat_map(|(d, n)| prop::collection::vec(1..n, d).prop_map(move |a| pv(n, &a)))
}

fn arb_perm(n: usize) -> impl Strategy<Value = SymbolPermutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|p| SymbolPermutation::new(p).unwrap())
}

/// An orthogonal pair of feasible vectors plus a relabeling for each.
fn pair_family() -> impl Strategy<Value = (Vec<ParamVector>, [SymbolPermutation; 2])> {
    prop::sample::select(vec![7u64, 11, 13]).prop_flat_map(|n| {
        let feasible = enumerate(2, n, false).unwrap();
        (
            prop::sample::select(feasible.clone()),
            prop::sample::select(feasible),
            arb_perm(n as usize),
            arb_perm(n as usize),
        )
            .prop_filter("orthogonal", move |(a, b, _, _)| {
                let (a, b) = (a.alphas(), b.alphas());
                is_coprime(a[0] as i64 * b[1] as i64 - a[1] as i64 * b[0] as i64, n)
            })
            .prop_map(|(a, b, p, q)| (vec![a, b], [p, q]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scaling_is_relabeling(v in arb_vector(), k in 1i64..13) {
        let n = v.order();
        prop_assume!(is_coprime(k, n));
        let scaled = build(&scale(&v, k).unwrap()).unwrap();
        let relabeled = permute_symbols(
            &build(&v).unwrap(),
            &SymbolPermutation::multiply(n as usize, k).unwrap(),
        ).unwrap();
        prop_assert_eq!(scaled.values(), relabeled.values());
    }

    #[test]
    fn adding_constant_is_cyclic_relabeling(v in arb_vector(), x in 0i64..13) {
        let a = build(&v).unwrap();
        let n = v.order() as u32;
        let added: Vec<u32> = a.values().iter().map(|&s| (s + x as u32) % n).collect();
        let relabeled = permute_symbols(&a, &SymbolPermutation::cyclic(n as usize, x)).unwrap();
        prop_assert_eq!(added, relabeled.values().to_vec());
    }

    #[test]
    fn shift_preserves_multiset_and_verdict(v in arb_vector(), axis in 0usize..3, amount in -20i64..20) {
        let a = build(&v).unwrap();
        let axis = axis % v.dimension();
        let shifted = shift_axis(&a, axis, amount).unwrap();
        let mut x = a.values().to_vec();
        let mut y = shifted.values().to_vec();
        x.sort_unstable();
        y.sort_unstable();
        prop_assert_eq!(x, y);
        prop_assert_eq!(
            verify_latin_pandiagonal(&a).passed,
            verify_latin_pandiagonal(&shifted).passed
        );
        let alpha = v.alphas()[axis] as i64;
        let relabeled = permute_symbols(
            &a,
            &SymbolPermutation::cyclic(v.order() as usize, alpha * amount),
        ).unwrap();
        prop_assert_eq!(shifted.values(), relabeled.values());
    }

    #[test]
    fn equal_tie_merges_components(a in 1u64..11, b in 1u64..11, c in 1u64..11) {
        let n = 11;
        let cube = build(&pv(n, &[a, b, c])).unwrap();
        let rows = slice(&cube, &"j=i".parse::<SliceSpec>().unwrap()).unwrap();
        for (i, row) in rows.iter().enumerate() {
            for (k, &s) in row.iter().enumerate() {
                prop_assert_eq!(s as u64, ((a + b) * i as u64 + c * k as u64) % n);
            }
        }
        let merged = (a + b) % n;
        if merged != 0 {
            prop_assert_eq!(rows.concat(), build(&pv(n, &[merged, c])).unwrap().values().to_vec());
        }
    }

    #[test]
    fn latin_verdict_ignores_relabeling(
        (v, perm) in arb_vector().prop_flat_map(|v| {
            let n = v.order() as usize;
            (Just(v), arb_perm(n))
        })
    ) {
        let a = build(&v).unwrap();
        let b = permute_symbols(&a, &perm).unwrap();
        prop_assert_eq!(verify_latin_pandiagonal(&a).passed, verify_latin_pandiagonal(&b).passed);
        prop_assert_eq!(verify_latin_pandiagonal(&a).passed, is_feasible(&v));
    }

    #[test]
    fn magic_square_pipeline(
        (family, perms) in pair_family(),
        axis in 0usize..2,
        amount in 0i64..13,
    ) {
        let n = family[0].order() as usize;
        let m = compose_checked(&family, Some(&perms)).unwrap();
        let r = verify_magic_pandiagonal(&m);
        prop_assert!(r.passed, "{}", r);
        prop_assert_eq!(r.magic_sum, Some(pandiag_core::sigma(2, n as u64)));
        prop_assert!(verify_magic_pandiagonal(&m.shift_axis(axis, amount).unwrap()).passed);
        for (idx, (v, perm)) in family.iter().zip(&perms).enumerate() {
            let expected = permute_symbols(&build(v).unwrap(), perm).unwrap();
            prop_assert_eq!(m.digit(idx).unwrap().values().to_vec(), expected.values().to_vec());
        }
        let digits = [m.digit(0).unwrap(), m.digit(1).unwrap()];
        prop_assert!(verify_orthogonal_brute(&digits).unwrap());
        prop_assert_eq!(compose(&digits).unwrap().values().to_vec(), m.values().to_vec());
    }
}

#[test]
fn view_rows_works_on_magic_values() {
    let m = compose_checked(&[pv(5, &[1, 2]), pv(5, &[1, 3])], None).unwrap();
    let view = SliceSpec::new().resolve(m.shape()).unwrap();
    let rows = view_rows(m.shape(), m.values(), &view);
    assert_eq!(rows.concat(), m.values());
}
