//! Exact values checked against independent computations: truncated linear
//! algebra for colengths, parametrisations for intersection numbers, and
//! tables of simple singularities.

use germlab::localalg::{colength, milnor, tjurina, LocalIdeal};
use germlab::multiplicity::{hs_multiplicity, intersection_multiplicity};
use germlab::polyring::parse;
use germlab::resolution::germ_invariants;
use germlab::{ExpVec, ExtNat, PolyQ, Q};
use num_traits::Zero;

fn p(s: &str) -> PolyQ {
    parse(s, 2).unwrap()
}

fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = Q::from_integer(1.into()) / rows[r][c].clone();
        let pivot_row: Vec<Q> = rows[r].iter().map(|v| v * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    r
}

/// `dim Q[x,y] / (I + m^n)`, which equals the local colength once `m^n ⊆ I`.
fn truncated_colength(gens: &[PolyQ], n: u32) -> usize {
    let monos: Vec<ExpVec> = (0..n)
        .flat_map(|d| (0..=d).map(move |i| ExpVec::xy(i, d - i)))
        .collect();
    let index = |e: &ExpVec| monos.iter().position(|m| m == e);
    let mut rows = Vec::new();
    for g in gens {
        for m in &monos {
            let shifted = g * &PolyQ::monomial(2, *m, Q::from_integer(1.into()));
            let mut row = vec![Q::zero(); monos.len()];
            let mut any = false;
            for (e, c) in shifted.terms() {
                if let Some(i) = index(e) {
                    row[i] = c.clone();
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    monos.len() - rank(rows)
}

fn local_colength(gens: &[PolyQ]) -> u64 {
    colength(&LocalIdeal::new(gens.to_vec()).unwrap())
        .unwrap()
        .finite()
        .unwrap()
}

#[test]
fn colength_matches_truncated_linear_algebra() {
    let ideals: &[&[&str]] = &[
        &["x^2", "y^3"],
        &["x*y", "x^3 + y^3"],
        &["x^2 - y^3", "x*y"],
        &["2*x", "-3*y^2"],
        &["x^3 + y^4 + x*y^3", "x^2*y + y^3"],
        &["y^2 - x^3", "x^2 - y^3"],
        &[
            "x^4 + y^5 + x^2*y^3",
            "4*x^3 + 2*x*y^3",
            "5*y^4 + 3*x^2*y^2",
        ],
    ];
    for gens in ideals {
        let gens: Vec<PolyQ> = gens.iter().map(|s| p(s)).collect();
        let local = local_colength(&gens);
        let n = local as u32 + 2;
        assert_eq!(truncated_colength(&gens, n) as u64, local, "{gens:?}");
        assert_eq!(
            truncated_colength(&gens, n + 3) as u64,
            local,
            "{gens:?} not yet stable"
        );
    }
}

#[test]
fn simple_singularity_table() {
    // germ, mu, tau, delta, r
    let table = [
        ("y^2 - x^2", 1, 1, 1, 2),
        ("y^2 - x^3", 2, 2, 1, 1),
        ("y^2 - x^4", 3, 3, 2, 2),
        ("y^2 - x^5", 4, 4, 2, 1),
        ("y^2 - x^6", 5, 5, 3, 2),
        ("x^2*y + y^3", 4, 4, 3, 3),
        ("x^2*y + y^4", 5, 5, 3, 2),
        ("x^2*y + y^5", 6, 6, 4, 3),
        ("x^3 + y^4", 6, 6, 3, 1),
        ("x^3 + x*y^3", 7, 7, 4, 2),
        ("x^3 + y^5", 8, 8, 4, 1),
        ("x^4 + y^5 + x^2*y^3", 12, 11, 6, 1),
        ("x^4 - y^4", 9, 9, 6, 4),
    ];
    for (s, mu, tau, delta, r) in table {
        let f = p(s);
        assert_eq!(milnor(&f).unwrap(), ExtNat::Finite(mu), "{s}");
        assert_eq!(tjurina(&f).unwrap(), ExtNat::Finite(tau), "{s}");
        let g = germ_invariants(&f).unwrap();
        assert_eq!((g.delta, g.branches), (delta, r), "{s}");
        let jac = [f.partial(0), f.partial(1)];
        assert_eq!(truncated_colength(&jac, mu as u32 + 2) as u64, mu, "{s}");
    }
}

/// `ord_t g(t^q, t^p)`, the intersection number of `g` with `x^p = y^q`.
fn param_order(g: &PolyQ, p: u32, q: u32) -> u64 {
    let t = PolyQ::var(1, 0);
    g.compose(&[t.pow(q), t.pow(p)]).ord().finite().unwrap()
}

#[test]
fn intersection_numbers_from_parametrisations() {
    let others = [
        "x",
        "y",
        "x + y",
        "y^2 - x^3",
        "x^2 - y^3 + x*y^2",
        "x*y - y^4",
        "x^3 - 2*y^5",
    ];
    for (pp, qq) in [(2, 3), (3, 4), (3, 5), (2, 7)] {
        let f = p(&format!("x^{pp} - y^{qq}"));
        for g in others {
            let g = p(g);
            let want = param_order(&g, pp, qq);
            assert_eq!(
                intersection_multiplicity(&f, &g).unwrap(),
                ExtNat::Finite(want),
                "{f} . {g}"
            );
        }
    }
}

#[test]
fn hilbert_samuel_multiplicities() {
    let full: &[(&[&str], u64)] = &[
        (&["x", "y"], 1),
        (&["x^2", "y^3"], 6),
        (&["x^2", "x*y", "y^2"], 4),
        (&["x", "y^4"], 4),
        (&["x^2 - y^3", "x*y"], 5),
    ];
    for (gens, e) in full {
        let ideal = LocalIdeal::new(gens.iter().map(|s| p(s)).collect()).unwrap();
        assert_eq!(hs_multiplicity(&ideal).unwrap().e, Some(*e), "{gens:?}");
    }
    for (f, e) in [("x^5 - y^2*x", 3), ("x^4 + y^7", 4), ("y - x^3", 1)] {
        let ideal = LocalIdeal::maximal_in(p(f)).unwrap();
        assert_eq!(hs_multiplicity(&ideal).unwrap().e, Some(e), "{f}");
    }
}
