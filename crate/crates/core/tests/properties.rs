use germlab::jaceuler::{chi_report, semigroup};
use germlab::localalg::{colength, standard_basis, LocalIdeal};
use germlab::multiplicity::intersection_multiplicity;
use germlab::polyring::{parse, q, qi};
use germlab::resolution::field::{Field, NumberField, Rationals};
use germlab::resolution::nffactor::factor_over;
use germlab::resolution::upoly;
use germlab::resolution::zfactor::factor_q;
use germlab::resolution::{blowup_tree, delta};
use germlab::{ExpVec, ExtNat, PolyQ, Q};
use proptest::prelude::*;

fn poly_from(terms: Vec<(u32, u32, i64)>) -> PolyQ {
    PolyQ::from_terms(
        2,
        terms.into_iter().map(|(i, j, c)| (ExpVec::xy(i, j), qi(c))),
    )
}

fn poly() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec((0u32..4, 0u32..4, -4i64..=4), 0..6).prop_map(poly_from)
}

/// Nonzero and vanishing at the origin.
fn germ() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec((0u32..4, 0u32..4, -4i64..=4), 1..6)
        .prop_map(|t| poly_from(t.into_iter().filter(|(i, j, _)| i + j > 0).collect()))
        .prop_filter("nonzero", |f| !f.is_zero())
}

fn coprime(a: u64, b: u64) -> bool {
    num_integer::gcd(a, b) == 1
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn parse_inverts_print(a in poly()) {
        prop_assert_eq!(parse(&a.to_string(), 2).unwrap(), a);
    }

    #[test]
    fn ord_is_multiplicative(a in germ(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).ord(), a.ord() + b.ord());
    }

    #[test]
    fn linear_change_keeps_ord(a in poly(), m in prop::array::uniform4(-3i64..=3)) {
        let mat = [[qi(m[0]), qi(m[1])], [qi(m[2]), qi(m[3])]];
        match a.substitute_linear(&mat) {
            Ok(b) => prop_assert_eq!(b.ord(), a.ord()),
            Err(_) => prop_assert_eq!(m[0] * m[3], m[1] * m[2]),
        }
    }

    #[test]
    fn ideal_members_reduce_to_zero(a in poly(), b in poly()) {
        let gens = vec![parse("x^2 - y^3", 2).unwrap(), parse("x*y + y^4", 2).unwrap()];
        let sb = standard_basis(&LocalIdeal::new(gens.clone()).unwrap()).unwrap();
        let member = &(&a * &gens[0]) + &(&b * &gens[1]);
        prop_assert!(sb.contains(&member).unwrap());
        // a unit multiple of a member is still a member
        let unit = &PolyQ::one(2) + &parse("x + 2*y", 2).unwrap();
        prop_assert!(sb.contains(&(&unit * &member)).unwrap());
    }

    #[test]
    fn monomial_staircase(mut exps in prop::collection::vec((0u32..7, 0u32..7), 0..4), a in 1u32..8, b in 1u32..8) {
        exps.push((a, 0));
        exps.push((0, b));
        let gens: Vec<PolyQ> = exps.iter().map(|&(i, j)| PolyQ::monomial(2, ExpVec::xy(i, j), qi(1))).collect();
        let count = (0..a).flat_map(|i| (0..b).map(move |j| (i, j)))
            .filter(|&(i, j)| !exps.iter().any(|&(u, v)| u <= i && v <= j))
            .count() as u64;
        prop_assert_eq!(colength(&LocalIdeal::new(gens).unwrap()).unwrap(), ExtNat::Finite(count));
    }

    #[test]
    fn intersection_is_symmetric_and_additive(f in germ(), g in germ(), h in germ()) {
        let ifg = intersection_multiplicity(&f, &g).unwrap();
        prop_assert_eq!(ifg, intersection_multiplicity(&g, &f).unwrap());
        let ifh = intersection_multiplicity(&f, &h).unwrap();
        prop_assert_eq!(intersection_multiplicity(&f, &(&g * &h)).unwrap(), ifg + ifh);
        if let (ExtNat::Finite(a), ExtNat::Finite(b)) = (f.ord(), g.ord()) {
            prop_assert!(ifg >= ExtNat::Finite(a * b));
        }
    }

    #[test]
    fn intersection_with_monomial_curve(g in germ(), pq in (2u32..5, 3u32..8)) {
        let (p, qq) = pq;
        prop_assume!(p < qq && coprime(p as u64, qq as u64));
        let f = parse(&format!("x^{p} - y^{qq}"), 2).unwrap();
        let t = PolyQ::var(1, 0);
        let want = g.compose(&[t.pow(qq), t.pow(p)]).ord();
        prop_assert_eq!(intersection_multiplicity(&f, &g).unwrap(), want);
    }

    #[test]
    fn delta_of_two_smooth_branches(a in -3i64..=3, b in -3i64..=3, k in 1u32..5, l in 1u32..5) {
        let f = parse(&format!("y - {a}*x^{k}"), 2).unwrap();
        let g = parse(&format!("y - {b}*x^{l} - x^5"), 2).unwrap();
        let i = intersection_multiplicity(&f, &g).unwrap().finite().unwrap();
        let fg = &f * &g;
        let t = blowup_tree(&fg).unwrap();
        prop_assert_eq!(t.delta(), i);
        prop_assert_eq!(t.branches(), 2);
        prop_assert!(t.is_monotone());
    }

    #[test]
    fn rational_factors_multiply_back(roots in prop::collection::vec(-4i64..=4, 1..4), quad in prop::collection::vec((-3i64..=3, -3i64..=3), 0..3)) {
        let k = Rationals;
        let mut f = vec![qi(1)];
        for r in &roots {
            f = upoly::mul(&k, &f, &[qi(-*r), qi(1)]);
        }
        for (b, c) in &quad {
            f = upoly::mul(&k, &f, &[qi(*c), qi(*b), qi(1)]);
        }
        let fs = factor_q(&f);
        let mut prod = vec![qi(1)];
        for g in &fs {
            prod = upoly::mul(&k, &prod, g);
        }
        prop_assert_eq!(prod, upoly::squarefree_part(&k, &f));
        prop_assert!(fs.len() >= roots.iter().collect::<std::collections::BTreeSet<_>>().len());
    }

    #[test]
    fn sqrt2_factors_multiply_back(coeffs in prop::collection::vec((-3i64..=3, -2i64..=2), 2..5)) {
        let k = NumberField::new(vec![qi(-2), qi(0), qi(1)]);
        let mut f: Vec<Vec<Q>> = coeffs.iter().map(|&(a, b)| vec![qi(a), qi(b)]).collect();
        f.push(k.one());
        let f = upoly::trim(&k, f);
        let fs = factor_over(&k, &f);
        let mut prod = vec![k.one()];
        for g in &fs {
            prod = upoly::mul(&k, &prod, g);
        }
        prop_assert_eq!(prod, upoly::squarefree_part(&k, &f));
    }

    #[test]
    fn three_jacobian_counts_agree(p in 2u64..9, qq in 2u64..12) {
        prop_assume!(coprime(p, qq));
        let r = chi_report(p, qq).unwrap();
        prop_assert!(r.agree);
    }
}

#[test]
fn powers_of_the_maximal_ideal() {
    for k in 1..=12u64 {
        let ideal = LocalIdeal::maximal(2).power(k as usize);
        assert_eq!(
            colength(&ideal).unwrap(),
            ExtNat::Finite(k * (k + 1) / 2),
            "m^{k}"
        );
    }
}

#[test]
fn delta_equals_gap_count() {
    for qq in 3..=7u64 {
        for p in 2..qq {
            if coprime(p, qq) {
                let f = parse(&format!("x^{p} - y^{qq}"), 2).unwrap();
                assert_eq!(delta(&f).unwrap(), semigroup(p, qq).unwrap().genus());
            }
        }
    }
}

#[test]
fn rational_coefficients_in_germs() {
    let f = parse("1/2*x^2 - 3/4*y^3", 2).unwrap();
    assert_eq!(f.coeff(&ExpVec::xy(2, 0)), q(1, 2));
    assert_eq!(delta(&f).unwrap(), 1);
}
