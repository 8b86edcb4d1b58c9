//! Embedded point blowups of a plane curve germ, one representative per
//! Galois orbit of centres.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::field::{Field, NumberField};
use super::nffactor::{adjoin_root, factor_over, NfPoly};
use super::upoly;
use crate::error::{Error, Result};
use crate::localalg::{milnor_with, Limits};
use crate::polyring::{ExpVec, PolyQ, Q};

/// A plane germ with coefficients in a number field.
#[derive(Clone, Debug)]
pub struct FieldGerm {
    field: NumberField,
    terms: BTreeMap<(u32, u32), Vec<Q>>,
}

impl FieldGerm {
    pub fn from_poly(f: &PolyQ) -> Self {
        let field = NumberField::rationals();
        let terms = f
            .terms()
            .map(|(e, c)| ((e.get(0), e.get(1)), field.from_q(c)))
            .collect();
        FieldGerm { field, terms }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Vec<Q> {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn ord(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).min().unwrap_or(0)
    }

    /// The germ as a rational polynomial, when all coefficients are rational.
    pub fn to_poly(&self) -> Option<PolyQ> {
        let mut out = PolyQ::zero(2);
        for (&(i, j), c) in &self.terms {
            if c.iter().skip(1).any(|x| !x.is_zero()) {
                return None;
            }
            out.add_term(ExpVec::xy(i, j), c[0].clone());
        }
        Some(out)
    }

    fn insert(
        terms: &mut BTreeMap<(u32, u32), Vec<Q>>,
        k: &NumberField,
        key: (u32, u32),
        c: Vec<Q>,
    ) {
        let v = match terms.remove(&key) {
            Some(old) => k.add(&old, &c),
            None => c,
        };
        if !k.is_zero(&v) {
            terms.insert(key, v);
        }
    }

    /// `h(1, t)` for the tangent cone `h` of a germ of order `m`.
    fn tangent_polynomial(&self, m: u32) -> NfPoly {
        let p: NfPoly = (0..=m).map(|j| self.coeff(m - j, j)).collect();
        upoly::trim(&self.field, p)
    }

    /// Strict transform in the chart `y = x (y1 + r)`.
    fn chart_x(&self, m: u32, r: &[Q]) -> FieldGerm {
        let k = &self.field;
        let r = r.to_vec();
        let maxj = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut rpow = vec![k.one()];
        for l in 1..=maxj {
            rpow.push(k.mul(&rpow[l - 1], &r));
        }
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let mut binom = Q::one();
            for l in 0..=j {
                // binom = C(j, l)
                let coef = k.mul(&k.mul(c, &k.from_q(&binom)), &rpow[(j - l) as usize]);
                Self::insert(&mut terms, k, (i + j - m, l), coef);
                binom = binom * Q::from_integer((j - l).into()) / Q::from_integer((l + 1).into());
            }
        }
        FieldGerm {
            field: k.clone(),
            terms,
        }
    }

    /// Strict transform in the chart `x = x1 y`, at the origin of that chart.
    fn chart_y(&self, m: u32) -> FieldGerm {
        let terms = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((i, i + j - m), c.clone()))
            .collect();
        FieldGerm {
            field: self.field.clone(),
            terms,
        }
    }

    fn embed(&self, ext: &super::nffactor::Extension) -> FieldGerm {
        let terms = self
            .terms
            .iter()
            .map(|(&key, c)| (key, ext.embed(&self.field, c)))
            .collect();
        FieldGerm {
            field: ext.field.clone(),
            terms,
        }
    }
}

impl fmt::Display for FieldGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.to_poly() {
            return write!(f, "{p}");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        let mut out = String::new();
        for key in &keys {
            let c = &self.terms[key];
            let mono = match *key {
                (0, 0) => String::new(),
                (i, j) => {
                    let pw = |v: &str, e: u32| match e {
                        0 => None,
                        1 => Some(v.to_string()),
                        _ => Some(format!("{v}^{e}")),
                    };
                    [pw("x", i), pw("y", j)]
                        .into_iter()
                        .flatten()
                        .collect::<Vec<_>>()
                        .join("*")
                }
            };
            let rational = c.iter().skip(1).all(Zero::is_zero);
            let (neg, body) = if rational {
                let v = &c[0];
                let mag = if v < &Q::zero() {
                    -v.clone()
                } else {
                    v.clone()
                };
                let body = match (mono.is_empty(), mag.is_one()) {
                    (false, true) => mono.clone(),
                    (true, _) => mag.to_string(),
                    (false, false) => format!("{mag}*{mono}"),
                };
                (v < &Q::zero(), body)
            } else {
                let e = self.field.format_elem(c, "a");
                (
                    false,
                    if mono.is_empty() {
                        e
                    } else {
                        format!("{e}*{mono}")
                    },
                )
            };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

/// Which exceptional line passes through a node, in that node's coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionalAxis {
    /// `x = 0`
    X,
    /// `y = 0`
    Y,
}

#[derive(Clone, Debug)]
pub struct BlowupNode {
    pub germ: FieldGerm,
    pub mult: u32,
    /// Number of conjugate points this node stands for.
    pub orbit_degree: usize,
    /// How many algebraic extensions of ℚ were adjoined on the way here.
    pub tower_depth: usize,
    pub center: String,
    pub exceptional: Option<ExceptionalAxis>,
    /// For smooth leaves, whether the branch crosses the last exceptional
    /// line transversally.
    pub transverse: Option<bool>,
    pub children: Vec<BlowupNode>,
}

impl BlowupNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(BlowupNode::node_count)
            .sum::<usize>()
    }

    pub fn delta(&self) -> u64 {
        let m = self.mult as u64;
        self.orbit_degree as u64 * m * (m - 1) / 2
            + self.children.iter().map(BlowupNode::delta).sum::<u64>()
    }

    pub fn branches(&self) -> u64 {
        if self.is_leaf() {
            self.orbit_degree as u64
        } else {
            self.children.iter().map(BlowupNode::branches).sum()
        }
    }

    /// Multiplicities ≥ 2 along the tree when it is a single chain.
    pub fn multiplicity_sequence(&self) -> Option<Vec<u32>> {
        let mut out = Vec::new();
        let mut node = self;
        loop {
            if node.mult >= 2 {
                out.push(node.mult);
            }
            match node.children.as_slice() {
                [] => return Some(out),
                [c] => node = c,
                _ => return None,
            }
        }
    }

    /// Checks that multiplicities never increase from parent to child.
    pub fn is_monotone(&self) -> bool {
        self.children
            .iter()
            .all(|c| c.mult <= self.mult && c.is_monotone())
    }

    fn render(&self, indent: usize, out: &mut String) {
        out.push_str(&format!(
            "{}[{}] mult {} orbit {}{}: {}\n",
            "  ".repeat(indent),
            self.center,
            self.mult,
            self.orbit_degree,
            match self.transverse {
                Some(false) => " (tangent to exceptional line)",
                _ => "",
            },
            self.germ
        ));
        for c in &self.children {
            c.render(indent + 1, out);
        }
    }
}

impl fmt::Display for BlowupNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        write!(f, "{}", s.trim_end())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ResolutionConfig {
    pub node_cap: usize,
    pub max_tower_depth: usize,
    pub limits: Limits,
}

impl Default for ResolutionConfig {
    fn default() -> Self {
        ResolutionConfig {
            node_cap: 10_000,
            max_tower_depth: 2,
            limits: Limits::default(),
        }
    }
}

/// Rejects zero, non-vanishing and non-reduced germs.
pub fn check_reduced_germ(f: &PolyQ, limits: Limits) -> Result<()> {
    if f.nvars() != 2 {
        return Err(Error::Invalid(format!(
            "expected a plane germ, got {} variables",
            f.nvars()
        )));
    }
    if f.is_zero() {
        return Err(Error::Invalid("zero polynomial".into()));
    }
    if f.ord().finite() == Some(0) {
        return Err(Error::Invalid(
            "polynomial does not vanish at the origin".into(),
        ));
    }
    if !milnor_with(f, limits)?.is_finite() {
        return Err(Error::Invalid("germ is not reduced at the origin".into()));
    }
    Ok(())
}

pub fn blowup_tree(f: &PolyQ) -> Result<BlowupNode> {
    blowup_tree_with(f, ResolutionConfig::default())
}

pub fn blowup_tree_with(f: &PolyQ, cfg: ResolutionConfig) -> Result<BlowupNode> {
    check_reduced_germ(f, cfg.limits)?;
    let mut budget = cfg.node_cap;
    build(
        FieldGerm::from_poly(f),
        "origin".into(),
        0,
        None,
        &cfg,
        &mut budget,
    )
}

fn build(
    germ: FieldGerm,
    center: String,
    depth: usize,
    exceptional: Option<ExceptionalAxis>,
    cfg: &ResolutionConfig,
    budget: &mut usize,
) -> Result<BlowupNode> {
    if *budget == 0 {
        return Err(Error::StepCap {
            cap: cfg.node_cap as u64,
            context: "blowup tree",
        });
    }
    *budget -= 1;
    let m = germ.ord();
    if germ.is_zero() || m == 0 {
        return Err(Error::Inconsistent(format!(
            "strict transform does not pass through {center}"
        )));
    }
    let orbit_degree = germ.field().degree();
    let mut node = BlowupNode {
        germ,
        mult: m,
        orbit_degree,
        tower_depth: depth,
        center,
        exceptional,
        transverse: None,
        children: Vec::new(),
    };
    if m == 1 {
        let k = node.germ.field();
        let (cx, cy) = (node.germ.coeff(1, 0), node.germ.coeff(0, 1));
        node.transverse = Some(match exceptional {
            None => true,
            Some(ExceptionalAxis::X) => !k.is_zero(&cy),
            Some(ExceptionalAxis::Y) => !k.is_zero(&cx),
        });
        return Ok(node);
    }
    let germ = &node.germ;
    let k = germ.field().clone();
    let c = germ.tangent_polynomial(m);
    let mut children = Vec::new();
    for phi in factor_over(&k, &c) {
        let (child, label) = if phi.len() == 2 {
            let root = k.neg(&phi[0]);
            let label = if k.is_zero(&root) {
                "y = x*y1".to_string()
            } else {
                format!("y = x*(y1 + {})", k.format_elem(&root, "a")).replace("+ -", "- ")
            };
            (germ.chart_x(m, &root), label)
        } else {
            if depth + 1 > cfg.max_tower_depth {
                return Err(Error::Unsupported(format!(
                    "unsupported tower: centre needs extension depth {} (limit {})",
                    depth + 1,
                    cfg.max_tower_depth
                )));
            }
            let ext = adjoin_root(&k, &phi);
            let label = format!(
                "y = x*(y1 + r), r root of {} over {}",
                format_nf_poly(&k, &phi),
                field_name(&k)
            );
            (germ.embed(&ext).chart_x(m, &ext.root), label)
        };
        let d = if phi.len() == 2 { depth } else { depth + 1 };
        children.push(build(
            child,
            label,
            d,
            Some(ExceptionalAxis::X),
            cfg,
            budget,
        )?);
    }
    if k.is_zero(&germ.coeff(0, m)) {
        children.push(build(
            germ.chart_y(m),
            "x = x1*y".into(),
            depth,
            Some(ExceptionalAxis::Y),
            cfg,
            budget,
        )?);
    }
    node.children = children;
    Ok(node)
}

fn field_name(k: &NumberField) -> String {
    if k.is_rational() {
        "Q".into()
    } else {
        format!("Q(a), {} = 0", upoly::format(k.minpoly(), "a"))
    }
}

fn format_nf_poly(k: &NumberField, p: &[Vec<Q>]) -> String {
    if p.iter().all(|c| c.iter().skip(1).all(Zero::is_zero)) {
        let q: Vec<Q> = p.iter().map(|c| c[0].clone()).collect();
        return upoly::format(&q, "t");
    }
    let mut parts = Vec::new();
    for (i, c) in p.iter().enumerate().rev() {
        if k.is_zero(c) {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        let coef = k.format_elem(c, "a");
        parts.push(match (mono.is_empty(), k.is_one(c)) {
            (true, _) => coef,
            (false, true) => mono,
            (false, false) => format!("{coef}*{mono}"),
        });
    }
    parts.join(" + ")
}
