//! Mora's tangent-cone algorithm for standard bases under a local order.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{ExpVec, MonomialOrder, PolyQ};

/// Resource limits for standard-basis computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of single-term reductions before giving up.
    pub step_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            step_cap: 1_000_000,
        }
    }
}

/// A polynomial cached with its leading exponent and écart.
#[derive(Clone, Debug)]
struct Entry {
    poly: PolyQ,
    lead: ExpVec,
    ecart: u32,
}

impl Entry {
    fn new(poly: PolyQ, order: &MonomialOrder) -> Option<Entry> {
        let lead = poly.leading_exp(order)?;
        let ecart = poly.total_degree().unwrap_or(0) - lead.degree();
        Some(Entry { poly, lead, ecart })
    }
}

pub(crate) struct Counter {
    pub steps: u64,
    pub cap: u64,
}

impl Counter {
    pub fn new(limits: Limits) -> Self {
        Counter {
            steps: 0,
            cap: limits.step_cap,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            return Err(Error::StepCap {
                cap: self.cap,
                context: "standard basis",
            });
        }
        Ok(())
    }
}

/// Cancels the leading term of `h` against `g`, whose leading monomial divides it.
fn reduce_step(h: &PolyQ, h_lead: &ExpVec, g: &Entry) -> PolyQ {
    let hc = h.coeff(h_lead);
    let gc = g.poly.coeff(&g.lead);
    let shift = g.lead.quotient_of(h_lead);
    let r = h - &g.poly.mul_term(&shift, &(hc / gc));
    debug_assert!(r.coeff(h_lead).is_zero());
    r
}

/// Drops every term of degree `≥ n`.
fn truncate(f: &PolyQ, n: u32) -> PolyQ {
    PolyQ::from_terms(
        f.nvars(),
        f.terms()
            .filter(|(e, _)| e.degree() < n)
            .map(|(e, c)| (*e, c.clone())),
    )
}

fn nf_entries(
    f: &PolyQ,
    basis: &[Entry],
    order: &MonomialOrder,
    counter: &mut Counter,
    corner: Option<u32>,
) -> Result<PolyQ> {
    let mut h = match corner {
        Some(n) => truncate(f, n),
        None => f.clone(),
    };
    // reducers that were appended during this normal form (Mora's set T)
    let mut extra: Vec<Entry> = Vec::new();
    loop {
        let Some(cur) = Entry::new(h.clone(), order) else {
            return Ok(h);
        };
        let best = basis
            .iter()
            .chain(extra.iter())
            .filter(|g| g.lead.divides(&cur.lead))
            .min_by_key(|g| g.ecart)
            .cloned();
        let Some(g) = best else {
            return Ok(h);
        };
        counter.tick()?;
        if g.ecart > cur.ecart {
            extra.push(cur.clone());
        }
        h = reduce_step(&h, &cur.lead, &g);
        if let Some(n) = corner {
            h = truncate(&h, n);
        }
    }
}

/// Smallest `n` such that every monomial of degree `n` is divisible by one of
/// `leads`, in which case `m^n` lies in the ideal.
fn covered_degree(leads: &[ExpVec], nvars: usize) -> Option<u32> {
    let mut powers = vec![None; nvars];
    for e in leads {
        if let Some((v, k)) = e.pure_power() {
            powers[v] = Some(powers[v].map_or(k, |old: u32| old.min(k)));
        }
    }
    let bound = powers
        .iter()
        .map(|p| p.map(|k| k - 1))
        .sum::<Option<u32>>()?
        + 1;
    if nvars != 2 {
        return Some(bound);
    }
    let covered = |n: u32| (0..=n).all(|i| leads.iter().any(|l| l.divides(&ExpVec::xy(i, n - i))));
    let lowest = leads.iter().map(ExpVec::degree).min().unwrap_or(0);
    (lowest..bound).find(|&n| covered(n)).or(Some(bound))
}

/// Replaces an ideal element by its part below degree `n`, or by its leading
/// monomial when that part is empty.
fn truncate_entry(e: &Entry, n: u32, order: &MonomialOrder) -> Entry {
    if e.lead.degree() >= n {
        let mono = PolyQ::monomial(e.poly.nvars(), e.lead, num_traits::One::one());
        return Entry::new(mono, order).expect("nonzero");
    }
    Entry::new(truncate(&e.poly, n), order).expect("lead survives")
}

/// Mora weak normal form of `f` with respect to `basis`.
///
/// The result `r` satisfies `u·f − r ∈ ⟨basis⟩` for a unit `u` of the local
/// ring, and its leading monomial is not divisible by any leading monomial of
/// `basis`. Non-zero results are scaled to leading coefficient 1.
pub fn mora_normal_form(f: &PolyQ, basis: &[PolyQ], order: &MonomialOrder) -> Result<PolyQ> {
    assert!(order.is_local(), "Mora normal form needs a local order");
    let entries: Vec<Entry> = basis
        .iter()
        .filter_map(|g| Entry::new(g.clone(), order))
        .collect();
    let mut counter = Counter::new(Limits::default());
    Ok(nf_entries(f, &entries, order, &mut counter, None)?.monic(order))
}

fn s_poly(a: &Entry, b: &Entry) -> PolyQ {
    let l = a.lead.lcm(&b.lead);
    let ca = a.poly.coeff(&a.lead);
    let cb = b.poly.coeff(&b.lead);
    let ta = a.poly.mul_term(&a.lead.quotient_of(&l), &cb);
    let tb = b.poly.mul_term(&b.lead.quotient_of(&l), &ca);
    &ta - &tb
}

/// Standard basis of the ideal generated by `gens` in the local ring at the origin.
///
/// Returns the basis elements (leading coefficient 1) and the number of
/// reduction steps used.
pub(crate) fn standard_basis_polys(
    gens: &[PolyQ],
    order: &MonomialOrder,
    limits: Limits,
) -> Result<(Vec<PolyQ>, u64)> {
    let mut counter = Counter::new(limits);
    let mut basis: Vec<Entry> = Vec::new();
    for g in gens {
        if let Some(e) = Entry::new(g.monic(order), order) {
            if e.lead == ExpVec::ONE {
                // unit ideal
                let one = Entry::new(PolyQ::one(g.nvars()), order).expect("nonzero");
                return Ok((vec![one.poly], counter.steps));
            }
            basis.push(e);
        }
    }
    let nvars = gens.first().map_or(0, PolyQ::nvars);
    let mut corner: Option<u32> = None;
    let update_corner = |basis: &mut Vec<Entry>, corner: &mut Option<u32>| {
        let leads: Vec<ExpVec> = basis.iter().map(|e| e.lead).collect();
        if let Some(n) = covered_degree(&leads, nvars) {
            if corner.is_none_or(|c| n < c) {
                *corner = Some(n);
                for e in basis.iter_mut() {
                    *e = truncate_entry(e, n, order);
                }
            }
        }
    };
    update_corner(&mut basis, &mut corner);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // process the pair with the lowest lcm degree first
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, (i, j))| {
                let l = basis[*i].lead.lcm(&basis[*j].lead);
                (l.degree(), *j, *i)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(k);
        let lcm = basis[i].lead.lcm(&basis[j].lead);
        if basis[i].lead.is_coprime(&basis[j].lead) || corner.is_some_and(|n| lcm.degree() >= n) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j]);
        let h = nf_entries(&s, &basis, order, &mut counter, corner)?;
        if let Some(e) = Entry::new(h.monic(order), order) {
            if e.lead == ExpVec::ONE {
                let one = PolyQ::one(e.poly.nvars());
                return Ok((vec![one], counter.steps));
            }
            let n = basis.len();
            basis.push(e);
            for i in 0..n {
                pairs.push((i, n));
            }
            update_corner(&mut basis, &mut corner);
        }
    }
    Ok((basis.into_iter().map(|e| e.poly).collect(), counter.steps))
}

/// Checks that every S-pair of `basis` has weak normal form zero.
pub fn all_s_pairs_reduce(basis: &[PolyQ], order: &MonomialOrder) -> Result<bool> {
    let entries: Vec<Entry> = basis
        .iter()
        .filter_map(|g| Entry::new(g.clone(), order))
        .collect();
    let mut counter = Counter::new(Limits::default());
    for j in 0..entries.len() {
        for i in 0..j {
            let s = s_poly(&entries[i], &entries[j]);
            if !nf_entries(&s, &entries, order, &mut counter, None)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
