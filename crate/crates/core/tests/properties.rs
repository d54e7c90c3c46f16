use diagalg::algebra::{
    augmentation, group_algebra, identity, in_ideal, multiply, quotient_structure, Algebra,
    AlgebraElement, AlgebraSpec, GroupSpec, QuotientSpec,
};
use diagalg::coeff::{AbelianInvariants, RingSpec};
use diagalg::diagram::{compose, enumerate, Diagram, FamilyTag};
use diagalg::homology::{tor_ext, AugmentedAlgebra, DEFAULT_BUDGET};
use diagalg::tate::tate_group;
use proptest::prelude::*;

fn families(n: usize) -> Vec<FamilyTag> {
    let mut v = vec![
        FamilyTag::RookBrauer,
        FamilyTag::Motzkin,
        FamilyTag::Rook,
        FamilyTag::PlanarRook,
        FamilyTag::Brauer,
        FamilyTag::TemperleyLieb,
        FamilyTag::Blob,
        FamilyTag::DiluteTL,
    ];
    v.extend((0..=n).map(|r| FamilyTag::WalledBrauer { r, s: n - r }));
    v
}

fn family_strategy() -> impl Strategy<Value = FamilyTag> {
    prop::sample::select(
        families(3)
            .into_iter()
            .filter(|f| match f {
                FamilyTag::WalledBrauer { r, .. } => *r == 1,
                _ => true,
            })
            .collect::<Vec<_>>(),
    )
}

fn size(fam: FamilyTag, n: usize) -> usize {
    match fam {
        FamilyTag::WalledBrauer { r, s } => r + s,
        _ => n,
    }
}

fn spec(fam: FamilyTag, n: usize, ring: RingSpec, d: i64, e: i64, g: i64) -> AlgebraSpec {
    AlgebraSpec::with_ints(fam, size(fam, n), ring, d, e, g).unwrap()
}

fn add(a: (u32, u32, u32), b: (u32, u32, u32)) -> (u32, u32, u32) {
    (a.0 + b.0, a.1 + b.1, a.2 + b.2)
}

/// `(d1 d2) d3` and `d1 (d2 d3)` as (diagram, total exponents), or `None` if zero.
fn triple(
    fam: FamilyTag,
    a: &Diagram,
    b: &Diagram,
    c: &Diagram,
) -> [Option<(Diagram, (u32, u32, u32))>; 2] {
    let left = {
        let ab = compose(a, b, fam).unwrap();
        ab.diagram.as_ref().and_then(|ab_d| {
            let abc = compose(ab_d, c, fam).unwrap();
            let e = abc.exponents();
            abc.diagram.map(|d| (d, add(ab.exponents(), e)))
        })
    };
    let right = {
        let bc = compose(b, c, fam).unwrap();
        bc.diagram.as_ref().and_then(|bc_d| {
            let abc = compose(a, bc_d, fam).unwrap();
            let e = abc.exponents();
            abc.diagram.map(|d| (d, add(bc.exponents(), e)))
        })
    };
    [left, right]
}

#[test]
fn composition_closure_and_propagating_bound() {
    for n in 0..=4 {
        for fam in families(n) {
            if n == 4 && !fam.is_planar() {
                continue;
            }
            let basis = enumerate(fam, size(fam, n)).unwrap();
            for x in &basis {
                for y in &basis {
                    let res = compose(x, y, fam).unwrap();
                    assert_eq!(res.is_zero, res.diagram.is_none());
                    if let Some(z) = res.diagram {
                        assert!(z.is_member(fam), "{fam}: {x} {y} -> {z}");
                        assert!(
                            z.propagating_count()
                                <= x.propagating_count().min(y.propagating_count())
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn composition_associative_at_two() {
    for fam in families(2) {
        let basis = enumerate(fam, size(fam, 2)).unwrap();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    let [l, r] = triple(fam, a, b, c);
                    assert_eq!(l, r, "{fam}: {a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn blobbed_edges_compose_to_one_blob() {
    let d = Diagram::parse(1, "1-1'*").unwrap();
    let res = compose(&d, &d, FamilyTag::Blob).unwrap();
    assert_eq!(res.diagram, Some(d));
    assert_eq!(res.exponents(), (0, 0, 0));
}

#[test]
fn unit_and_associativity_at_two() {
    for fam in families(2) {
        let s = spec(fam, 2, RingSpec::Integers, 2, 3, 5);
        let one = identity(&s);
        let basis: Vec<AlgebraElement> = enumerate(fam, size(fam, 2))
            .unwrap()
            .into_iter()
            .map(|d| AlgebraElement::basis(&s, d).unwrap())
            .collect();
        for x in &basis {
            assert_eq!(&multiply(&one, x).unwrap(), x, "{s}");
            assert_eq!(&multiply(x, &one).unwrap(), x, "{s}");
            for y in &basis {
                let xy = multiply(x, y).unwrap();
                for z in &basis {
                    assert_eq!(
                        multiply(&xy, z).unwrap(),
                        multiply(x, &multiply(y, z).unwrap()).unwrap(),
                        "{s}"
                    );
                }
            }
        }
    }
}

#[test]
fn augmentation_is_unital_algebra_map() {
    for n in 0..=3 {
        for fam in families(n) {
            for (d, e, g) in [(1, 1, 1), (0, 0, 1), (0, 1, 0), (2, 3, 5)] {
                let s = spec(fam, n, RingSpec::Integers, d, e, g);
                let alg = Algebra::new(s.clone()).unwrap();
                alg.check_augmentation()
                    .unwrap_or_else(|err| panic!("{s}: {err}"));
                assert_eq!(augmentation(&identity(&s)), RingSpec::Integers.one(), "{s}");
            }
        }
    }
}

#[test]
fn ideals_are_two_sided() {
    for n in 0..=3 {
        for fam in families(n) {
            let basis = enumerate(fam, size(fam, n)).unwrap();
            let top = spec(fam, n, RingSpec::Integers, 1, 1, 1).max_ideal_level();
            for level in -1..=top {
                for x in basis.iter().filter(|x| in_ideal(x, fam, level)) {
                    for y in &basis {
                        for res in [compose(x, y, fam).unwrap(), compose(y, x, fam).unwrap()] {
                            if let Some(z) = res.diagram {
                                assert!(
                                    in_ideal(&z, fam, level),
                                    "{fam} level {level}: {x} {y} -> {z}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

/// The group element of a permutation diagram. Stacking applies the left
/// factor first, so the diagram of `i -> sigma(i)` maps to `sigma^-1`.
fn group_element(d: &Diagram) -> Vec<usize> {
    let n = d.n();
    let p = d.partner_array();
    let mut inv = vec![0; n];
    for i in 0..n {
        inv[p[i] - n - 1] = i;
    }
    inv
}

#[test]
fn rook_brauer_top_quotient_is_symmetric_group() {
    for n in 1..=3 {
        let s = spec(FamilyTag::RookBrauer, n, RingSpec::Integers, 1, 1, 0);
        let (basis, table) =
            quotient_structure(&QuotientSpec::new(s, n as i64 - 1).unwrap()).unwrap();
        let group = group_algebra(GroupSpec::Symmetric(n), RingSpec::Integers).unwrap();
        let elems = GroupSpec::Symmetric(n).elements();
        assert_eq!(basis.len(), elems.len());
        let to_group: Vec<usize> = basis
            .iter()
            .map(|d| elems.iter().position(|g| *g == group_element(d)).unwrap())
            .collect();
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let mapped: Vec<_> = table.products[i][j]
                    .iter()
                    .map(|(k, c)| (to_group[*k], c.clone()))
                    .collect();
                assert_eq!(mapped, group.products[to_group[i]][to_group[j]], "n = {n}");
            }
        }
        let unit: Vec<_> = table
            .unit
            .iter()
            .map(|(k, c)| (to_group[*k], c.clone()))
            .collect();
        assert_eq!(unit, group.unit);
    }
}

#[test]
fn ext_and_tor_dimensions_agree_over_fields() {
    for n in 1..=2 {
        for fam in families(n) {
            for ring in [
                RingSpec::Rationals,
                RingSpec::IntegersMod(2),
                RingSpec::IntegersMod(3),
            ] {
                for (d, e, g) in [(1, 1, 1), (0, 1, 1), (2, 0, 1)] {
                    let s = spec(fam, n, ring, d, e, g);
                    let (t, x) =
                        tor_ext(&AugmentedAlgebra::from_spec(&s).unwrap(), 3, DEFAULT_BUDGET)
                            .unwrap();
                    assert_eq!(t.ranks(), x.ranks(), "{s}");
                    assert_eq!(t.degrees[0], AbelianInvariants::free(1), "{s}");
                    assert_eq!(x.degrees[0], AbelianInvariants::free(1), "{s}");
                }
            }
        }
    }
}

#[test]
fn group_algebras_over_rationals_are_acyclic() {
    for g in [
        GroupSpec::Trivial,
        GroupSpec::Symmetric(2),
        GroupSpec::Symmetric(3),
        GroupSpec::Cyclic(3),
        GroupSpec::Cyclic(4),
        GroupSpec::ProductSymmetric(1, 2),
    ] {
        let a = AugmentedAlgebra::group(g, RingSpec::Rationals).unwrap();
        let (t, e) = tor_ext(&a, 2, DEFAULT_BUDGET).unwrap();
        assert!(t.is_concentrated_in_degree_zero(), "{g}");
        assert!(e.is_concentrated_in_degree_zero(), "{g}");
    }
}

#[test]
fn tate_degree_zero_divides_order() {
    for g in [
        GroupSpec::Trivial,
        GroupSpec::Symmetric(2),
        GroupSpec::Symmetric(3),
        GroupSpec::Cyclic(4),
    ] {
        let t = tate_group(g, 1, RingSpec::Integers).unwrap();
        let h0 = t.get(0).unwrap();
        assert_eq!(h0.free_rank, 0);
        let order: u64 = h0.torsion.iter().product();
        assert_eq!(g.order() % order, 0, "{g}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn composition_associative_at_three(fam in family_strategy(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let basis = enumerate(fam, size(fam, 3)).unwrap();
        let [l, r] = triple(fam, i.get(&basis), j.get(&basis), k.get(&basis));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn multiply_associative_at_three(
        fam in family_strategy(),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        k in any::<prop::sample::Index>(),
        d in -3i64..4,
        e in -3i64..4,
        g in -3i64..4,
    ) {
        let s = spec(fam, 3, RingSpec::Integers, d, e, g);
        let basis = enumerate(fam, size(fam, 3)).unwrap();
        let el = |ix: &prop::sample::Index| AlgebraElement::basis(&s, ix.get(&basis).clone()).unwrap();
        let (x, y, z) = (el(&i), el(&j), el(&k));
        let one = identity(&s);
        prop_assert_eq!(&multiply(&one, &x).unwrap(), &x);
        prop_assert_eq!(&multiply(&x, &one).unwrap(), &x);
        prop_assert_eq!(
            multiply(&multiply(&x, &y).unwrap(), &z).unwrap(),
            multiply(&x, &multiply(&y, &z).unwrap()).unwrap()
        );
    }
}
