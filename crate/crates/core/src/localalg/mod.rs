//! Computations in the local ring at the origin: standard bases, colengths,
//! ideal powers, Milnor and Tjurina numbers.

mod mora;

use std::collections::BTreeSet;

pub use mora::{all_s_pairs_reduce, mora_normal_form, Limits};

use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::polyring::{ExpVec, MonomialOrder, PolyQ};

/// Colength of an ideal; infinite when the ideal is not zero-dimensional.
pub type LengthValue = ExtNat;

/// Where an ideal lives: the full local ring of affine space, or the local
/// ring of a hypersurface `{f = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambient {
    Full { nvars: usize },
    Hypersurface(PolyQ),
}

impl Ambient {
    pub fn nvars(&self) -> usize {
        match self {
            Ambient::Full { nvars } => *nvars,
            Ambient::Hypersurface(f) => f.nvars(),
        }
    }
}

/// Ideal of the local ring at the origin, given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIdeal {
    generators: Vec<PolyQ>,
    ambient: Ambient,
}

impl LocalIdeal {
    /// Ideal in the full local ring. Zero generators are dropped.
    pub fn new(generators: Vec<PolyQ>) -> Result<Self> {
        let nvars = generators
            .first()
            .map(PolyQ::nvars)
            .ok_or_else(|| Error::Invalid("an ideal needs at least one generator".into()))?;
        Self::build(generators, Ambient::Full { nvars })
    }

    /// Ideal of `𝒪/⟨f⟩`, the local ring of the hypersurface `f = 0`.
    pub fn in_hypersurface(generators: Vec<PolyQ>, f: PolyQ) -> Result<Self> {
        match f.ord() {
            ExtNat::Finite(d) if d >= 1 => {}
            _ => {
                return Err(Error::Invalid(
                    "hypersurface equation must be nonzero and vanish at the origin".into(),
                ))
            }
        }
        Self::build(generators, Ambient::Hypersurface(f))
    }

    fn build(generators: Vec<PolyQ>, ambient: Ambient) -> Result<Self> {
        let n = ambient.nvars();
        if let Some(g) = generators.iter().find(|g| g.nvars() != n) {
            return Err(Error::NvarsMismatch {
                left: n,
                right: g.nvars(),
            });
        }
        let generators: Vec<PolyQ> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(LocalIdeal {
            generators,
            ambient,
        })
    }

    /// The maximal ideal `⟨x_1, …, x_n⟩` of the full local ring.
    pub fn maximal(nvars: usize) -> Self {
        LocalIdeal {
            generators: (0..nvars).map(|i| PolyQ::var(nvars, i)).collect(),
            ambient: Ambient::Full { nvars },
        }
    }

    /// The maximal ideal of the local ring of `{f = 0}`.
    pub fn maximal_in(f: PolyQ) -> Result<Self> {
        let n = f.nvars();
        Self::in_hypersurface((0..n).map(|i| PolyQ::var(n, i)).collect(), f)
    }

    pub fn generators(&self) -> &[PolyQ] {
        &self.generators
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    /// Generators with the hypersurface equation appended, as an ideal of the full ring.
    pub fn lifted_generators(&self) -> Vec<PolyQ> {
        let mut g = self.generators.clone();
        if let Ambient::Hypersurface(f) = &self.ambient {
            g.push(f.clone());
        }
        g
    }

    /// `I^k`: all `k`-fold products of generators.
    pub fn power(&self, k: usize) -> LocalIdeal {
        ideal_power(self, k)
    }
}

/// Standard basis together with its minimal leading ideal.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    elements: Vec<PolyQ>,
    order: MonomialOrder,
    leading: Vec<ExpVec>,
    nvars: usize,
    steps: u64,
}

impl StandardBasis {
    pub fn elements(&self) -> &[PolyQ] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Minimal generators of the leading ideal, sorted.
    pub fn leading_ideal(&self) -> &[ExpVec] {
        &self.leading
    }

    /// Reduction steps spent computing the basis.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn in_leading_ideal(&self, e: &ExpVec) -> bool {
        self.leading.iter().any(|l| l.divides(e))
    }

    /// Whether the leading ideal contains a pure power of every variable.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.leading.contains(&ExpVec::ONE) {
            return true;
        }
        (0..self.nvars).all(|i| self.pure_power_bound(i).is_some())
    }

    fn pure_power_bound(&self, var: usize) -> Option<u32> {
        self.leading
            .iter()
            .filter_map(|l| match l.pure_power() {
                Some((i, k)) if i == var => Some(k),
                _ => None,
            })
            .min()
    }

    /// Number of monomials outside the leading ideal.
    pub fn colength(&self) -> LengthValue {
        if self.leading.contains(&ExpVec::ONE) {
            return ExtNat::Finite(0);
        }
        let bounds: Option<Vec<u32>> = (0..self.nvars).map(|i| self.pure_power_bound(i)).collect();
        let Some(bounds) = bounds else {
            return ExtNat::Infinite;
        };
        let mut count = 0u64;
        let mut e = ExpVec::ONE;
        self.count_standard(0, &bounds, &mut e, &mut count);
        ExtNat::Finite(count)
    }

    fn count_standard(&self, var: usize, bounds: &[u32], e: &mut ExpVec, count: &mut u64) {
        if var == self.nvars {
            *count += 1;
            return;
        }
        for k in 0..bounds[var] {
            e.0[var] = k;
            // leading ideal is an order ideal complement: once in, larger exponents stay in
            let mut probe = *e;
            for v in probe.0[var + 1..self.nvars].iter_mut() {
                *v = 0;
            }
            if self.in_leading_ideal(&probe) {
                break;
            }
            self.count_standard(var + 1, bounds, e, count);
        }
        e.0[var] = 0;
    }

    /// Weak normal form of `f` against this basis (leading coefficient 1).
    pub fn normal_form(&self, f: &PolyQ) -> Result<PolyQ> {
        mora_normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &PolyQ) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

fn minimalize(leads: impl IntoIterator<Item = ExpVec>) -> Vec<ExpVec> {
    let all: BTreeSet<ExpVec> = leads.into_iter().collect();
    let mut out: Vec<ExpVec> = all
        .iter()
        .filter(|e| !all.iter().any(|o| o != *e && o.divides(e)))
        .copied()
        .collect();
    out.sort();
    out
}

/// Standard basis of `I` (with the hypersurface equation appended when present)
/// under the default local order.
pub fn standard_basis(ideal: &LocalIdeal) -> Result<StandardBasis> {
    standard_basis_with(ideal, &MonomialOrder::local(), Limits::default())
}

pub fn standard_basis_with(
    ideal: &LocalIdeal,
    order: &MonomialOrder,
    limits: Limits,
) -> Result<StandardBasis> {
    assert!(order.is_local(), "standard bases here use local orders");
    let nvars = ideal.nvars();
    let (elements, steps) = mora::standard_basis_polys(&ideal.lifted_generators(), order, limits)?;
    let leading = minimalize(elements.iter().filter_map(|p| p.leading_exp(order)));
    Ok(StandardBasis {
        elements,
        order: *order,
        leading,
        nvars,
        steps,
    })
}

/// `length(𝒪/I)`, computed in the hypersurface quotient when `I` has one.
pub fn colength(ideal: &LocalIdeal) -> Result<LengthValue> {
    colength_with(ideal, Limits::default())
}

pub fn colength_with(ideal: &LocalIdeal, limits: Limits) -> Result<LengthValue> {
    if ideal.lifted_generators().is_empty() {
        return Ok(ExtNat::Infinite);
    }
    Ok(standard_basis_with(ideal, &MonomialOrder::local(), limits)?.colength())
}

/// `I^k` as the ideal generated by all `k`-fold products of generators.
pub fn ideal_power(ideal: &LocalIdeal, k: usize) -> LocalIdeal {
    assert!(k >= 1, "ideal powers start at 1");
    let gens = &ideal.generators;
    let mut products: Vec<PolyQ> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    // multisets of size k as non-decreasing index sequences
    let mut idx = vec![0usize; k];
    if gens.is_empty() {
        return ideal.clone();
    }
    loop {
        let mut p = gens[idx[0]].clone();
        for &i in &idx[1..] {
            p = &p * &gens[i];
        }
        if seen.insert(p.to_string()) {
            products.push(p);
        }
        // advance
        let mut pos = k;
        while pos > 0 && idx[pos - 1] == gens.len() - 1 {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        idx[pos - 1] += 1;
        let v = idx[pos - 1];
        for slot in idx[pos..].iter_mut() {
            *slot = v;
        }
    }
    LocalIdeal {
        generators: products,
        ambient: ideal.ambient.clone(),
    }
}

fn require_singular_point(f: &PolyQ) -> Result<()> {
    match f.ord() {
        ExtNat::Finite(d) if d >= 1 => Ok(()),
        _ => Err(Error::Invalid(format!(
            "germ must be nonzero and vanish at the origin: {f}"
        ))),
    }
}

/// Milnor number: colength of the Jacobian ideal in the full local ring.
pub fn milnor(f: &PolyQ) -> Result<ExtNat> {
    milnor_with(f, Limits::default())
}

pub fn milnor_with(f: &PolyQ, limits: Limits) -> Result<ExtNat> {
    require_singular_point(f)?;
    let jac: Vec<PolyQ> = (0..f.nvars()).map(|i| f.partial(i)).collect();
    if jac.iter().all(PolyQ::is_zero) {
        return Ok(ExtNat::Infinite);
    }
    colength_with(&LocalIdeal::new(jac)?, limits)
}

/// Tjurina number: colength of `⟨f, ∂f⟩`.
pub fn tjurina(f: &PolyQ) -> Result<ExtNat> {
    tjurina_with(f, Limits::default())
}

pub fn tjurina_with(f: &PolyQ, limits: Limits) -> Result<ExtNat> {
    require_singular_point(f)?;
    let mut gens = vec![f.clone()];
    gens.extend((0..f.nvars()).map(|i| f.partial(i)));
    colength_with(&LocalIdeal::new(gens)?, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn p(s: &str) -> PolyQ {
        parse(s, 2).unwrap()
    }

    fn ideal(gens: &[&str]) -> LocalIdeal {
        LocalIdeal::new(gens.iter().map(|s| p(s)).collect()).unwrap()
    }

    fn len(gens: &[&str]) -> ExtNat {
        colength(&ideal(gens)).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let o = MonomialOrder::local();
        assert_eq!(
            mora_normal_form(&p("x^2"), &[p("x^2 - y^3")], &o).unwrap(),
            p("y^3")
        );
        let g = p("x^2 - y^3 + 5*x*y^7");
        assert!(mora_normal_form(&g, std::slice::from_ref(&g), &o)
            .unwrap()
            .is_zero());
        assert_eq!(
            mora_normal_form(&p("y"), &[p("x^2 - y^3")], &o).unwrap(),
            p("y")
        );
    }

    #[test]
    fn normal_form_uses_local_units() {
        // x - x^2 = x(1 - x) is a unit multiple of x
        let o = MonomialOrder::local();
        assert!(mora_normal_form(&p("x"), &[p("x - x^2")], &o)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn leading_ideals() {
        let sb = standard_basis(&ideal(&["x", "y"])).unwrap();
        assert_eq!(sb.leading_ideal(), &[ExpVec::xy(0, 1), ExpVec::xy(1, 0)]);
        let sb = standard_basis(&ideal(&["x^2 - y^3", "2*x", "-3*y^2"])).unwrap();
        assert_eq!(sb.leading_ideal(), &[ExpVec::xy(0, 2), ExpVec::xy(1, 0)]);
        let sb = standard_basis(&ideal(&["x^2 - y^3"])).unwrap();
        assert_eq!(sb.leading_ideal(), &[ExpVec::xy(2, 0)]);
        assert!(all_s_pairs_reduce(sb.elements(), sb.order()).unwrap());
    }

    #[test]
    fn colength_examples() {
        assert_eq!(len(&["x^2", "x*y", "y^2"]), ExtNat::Finite(3));
        assert_eq!(len(&["x^2", "y^3"]), ExtNat::Finite(6));
        assert_eq!(len(&["x^2 - y^3", "y"]), ExtNat::Finite(2));
        assert_eq!(len(&["x^2 - y^3"]), ExtNat::Infinite);
        assert_eq!(len(&["1 + x", "y"]), ExtNat::Finite(0));
    }

    #[test]
    fn colength_ignores_points_away_from_origin() {
        // y = 0 meets x(x-1) at the origin and at (1, 0); only the origin counts
        assert_eq!(len(&["x^2 - x", "y"]), ExtNat::Finite(1));
        assert_eq!(len(&["x^3 - x^2", "y"]), ExtNat::Finite(2));
    }

    #[test]
    fn hypersurface_quotient() {
        let i = LocalIdeal::in_hypersurface(vec![p("y")], p("x^2 - y^3")).unwrap();
        assert_eq!(colength(&i).unwrap(), ExtNat::Finite(2));
        assert!(LocalIdeal::in_hypersurface(vec![p("y")], p("1 + x")).is_err());
    }

    #[test]
    fn powers() {
        let m = ideal(&["x", "y"]);
        assert_eq!(ideal_power(&m, 2), ideal(&["x^2", "x*y", "y^2"]));
        assert_eq!(ideal_power(&m, 1), m);
        assert_eq!(
            ideal_power(&ideal(&["x", "y^2"]), 2),
            ideal(&["x^2", "x*y^2", "y^4"])
        );
    }

    #[test]
    fn milnor_and_tjurina() {
        assert_eq!(milnor(&p("x^2 - y^3")).unwrap(), ExtNat::Finite(2));
        assert_eq!(milnor(&p("x*y")).unwrap(), ExtNat::Finite(1));
        assert_eq!(milnor(&p("x^2 - y^4")).unwrap(), ExtNat::Finite(3));
        assert_eq!(milnor(&p("x^3 - y^5")).unwrap(), ExtNat::Finite(8));
        assert_eq!(milnor(&p("x^2*y")).unwrap(), ExtNat::Infinite);
        assert_eq!(tjurina(&p("x^2 - y^3")).unwrap(), ExtNat::Finite(2));
        assert_eq!(tjurina(&p("x*y")).unwrap(), ExtNat::Finite(1));
        assert_eq!(tjurina(&p("x^3 - y^5")).unwrap(), ExtNat::Finite(8));
        assert!(milnor(&p("1 + x")).is_err());
    }

    #[test]
    fn tjurina_differs_for_non_quasihomogeneous() {
        // x^4 + y^5 + x^2 y^3 (W-type perturbation): mu = 12, tau = 11
        let f = p("x^4 + y^5 + x^2*y^3");
        assert_eq!(milnor(&f).unwrap(), ExtNat::Finite(12));
        assert_eq!(tjurina(&f).unwrap(), ExtNat::Finite(11));
    }

    #[test]
    fn step_cap_is_an_error() {
        let i = ideal(&["x^3 + y^3 + x*y", "x^2*y + y^4"]);
        let steps = standard_basis(&i).unwrap().steps();
        assert!(steps >= 1);
        let r = colength_with(
            &i,
            Limits {
                step_cap: steps - 1,
            },
        );
        assert!(matches!(r, Err(Error::StepCap { .. })));
        assert!(colength_with(&i, Limits { step_cap: steps }).is_ok());
    }
}
