use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::localalg::{colength_with, ideal_power, Ambient, Limits, LocalIdeal};

/// Lengths `length(𝒪/I^i)` for `i = 1..` and the multiplicity read off them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSRecord {
    /// `lengths[i - 1] = length(𝒪/I^i)`.
    pub lengths: Vec<u64>,
    /// Dimension of the ambient local ring.
    pub dim: usize,
    /// Hilbert–Samuel multiplicity, once the differences have stabilised.
    pub e: Option<u64>,
    /// First `i` from which the lengths follow the fitted polynomial.
    pub stabilization_index: Option<usize>,
}

#[derive(Clone, Copy, Debug)]
pub struct HsConfig {
    /// Largest power tried before reporting non-stabilisation.
    pub imax_cap: usize,
    /// Number of consecutive equal top differences required.
    pub stable_run: usize,
    pub limits: Limits,
}

impl Default for HsConfig {
    fn default() -> Self {
        HsConfig {
            imax_cap: 64,
            stable_run: 3,
            limits: Limits::default(),
        }
    }
}

fn ambient_dim(ideal: &LocalIdeal) -> usize {
    match ideal.ambient() {
        Ambient::Full { nvars } => *nvars,
        Ambient::Hypersurface(f) => f.nvars() - 1,
    }
}

fn length_of_power(ideal: &LocalIdeal, i: usize, limits: Limits) -> Result<u64> {
    match colength_with(&ideal_power(ideal, i), limits)? {
        ExtNat::Finite(v) => Ok(v),
        ExtNat::Infinite => Err(Error::NotMPrimary { power: i }),
    }
}

/// `length(𝒪/I^i)` for `i = 1..=imax`, in the hypersurface quotient when `I` has one.
pub fn hilbert_samuel_sequence(ideal: &LocalIdeal, imax: usize) -> Result<HSRecord> {
    if imax < 3 {
        return Err(Error::Invalid("imax must be at least 3".into()));
    }
    let limits = Limits::default();
    let lengths = (1..=imax)
        .map(|i| length_of_power(ideal, i, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(HSRecord {
        lengths,
        dim: ambient_dim(ideal),
        e: None,
        stabilization_index: None,
    })
}

/// Backward `n`-th difference of `L` at index `i`, with `L(0) = 0`.
fn nth_difference(values: &[i128], n: usize, i: usize) -> i128 {
    let mut acc = 0i128;
    let mut binom = 1i128;
    for k in 0..=n {
        let term = binom * values[i - k];
        acc += if k % 2 == 0 { term } else { -term };
        binom = binom * (n - k) as i128 / (k as i128 + 1);
    }
    acc
}

/// Hilbert–Samuel multiplicity `e(I)`.
///
/// Extends the length sequence until the `dim`-th finite difference has been
/// constant for `stable_run` consecutive indices; that constant is `e(I)`.
pub fn hs_multiplicity(ideal: &LocalIdeal) -> Result<HSRecord> {
    hs_multiplicity_with(ideal, HsConfig::default())
}

pub fn hs_multiplicity_with(ideal: &LocalIdeal, cfg: HsConfig) -> Result<HSRecord> {
    let dim = ambient_dim(ideal);
    // values[0] = length(𝒪/I^0) = 0
    let mut values: Vec<i128> = vec![0];
    for i in 1..=cfg.imax_cap {
        values.push(length_of_power(ideal, i, cfg.limits)? as i128);
        let first = dim.max(1);
        if i < first + cfg.stable_run - 1 {
            continue;
        }
        let tail: Vec<i128> = (i + 1 - cfg.stable_run..=i)
            .map(|j| nth_difference(&values, dim, j))
            .collect();
        if tail.iter().all(|d| *d == tail[0]) {
            let c = tail[0];
            if c <= 0 {
                return Err(Error::Inconsistent(format!(
                    "non-positive leading difference {c}"
                )));
            }
            // earliest index from which the differences stay at c
            let mut start = i + 1 - cfg.stable_run;
            while start > dim && nth_difference(&values, dim, start - 1) == c {
                start -= 1;
            }
            let lengths = values[1..].iter().map(|&v| v as u64).collect();
            return Ok(HSRecord {
                lengths,
                dim,
                e: Some(c as u64),
                stabilization_index: Some(start.saturating_sub(dim).max(1)),
            });
        }
    }
    Err(Error::NoStabilization { cap: cfg.imax_cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse, PolyQ};

    fn p(s: &str) -> PolyQ {
        parse(s, 2).unwrap()
    }

    #[test]
    fn curve_sequences() {
        let cusp = LocalIdeal::maximal_in(p("x^2 - y^3")).unwrap();
        assert_eq!(
            hilbert_samuel_sequence(&cusp, 5).unwrap().lengths,
            vec![1, 3, 5, 7, 9]
        );
        let node = LocalIdeal::maximal_in(p("x*y")).unwrap();
        assert_eq!(
            hilbert_samuel_sequence(&node, 4).unwrap().lengths,
            vec![1, 3, 5, 7]
        );
        let smooth = LocalIdeal::maximal_in(p("y")).unwrap();
        assert_eq!(
            hilbert_samuel_sequence(&smooth, 4).unwrap().lengths,
            vec![1, 2, 3, 4]
        );
        assert!(hilbert_samuel_sequence(&smooth, 2).is_err());
    }

    #[test]
    fn multiplicities() {
        let cusp = hs_multiplicity(&LocalIdeal::maximal_in(p("x^2 - y^3")).unwrap()).unwrap();
        assert_eq!(cusp.e, Some(2));
        assert_eq!(cusp.dim, 1);
        assert_eq!(cusp.stabilization_index, Some(1));
        let smooth = hs_multiplicity(&LocalIdeal::maximal_in(p("y")).unwrap()).unwrap();
        assert_eq!(smooth.e, Some(1));
        let plane = hs_multiplicity(&LocalIdeal::maximal(2)).unwrap();
        assert_eq!(plane.e, Some(1));
        assert_eq!(plane.dim, 2);
        assert_eq!(&plane.lengths[..4], &[1, 3, 6, 10]);
    }

    #[test]
    fn higher_order_germ_stabilises_late() {
        // x^4 - y^5: lengths i(i+1)/2 up to i = 4, then 4i - 6
        let r = hs_multiplicity(&LocalIdeal::maximal_in(p("x^4 - y^5")).unwrap()).unwrap();
        assert_eq!(r.e, Some(4));
        assert_eq!(r.stabilization_index, Some(3));
        assert_eq!(&r.lengths[..6], &[1, 3, 6, 10, 14, 18]);
    }

    #[test]
    fn non_maximal_ideals() {
        // e(⟨x, y^2⟩) in the plane is 2; e(⟨x^2, y^3⟩) is 6
        let i = LocalIdeal::new(vec![p("x"), p("y^2")]).unwrap();
        assert_eq!(hs_multiplicity(&i).unwrap().e, Some(2));
        let i = LocalIdeal::new(vec![p("x^2"), p("y^3")]).unwrap();
        assert_eq!(hs_multiplicity(&i).unwrap().e, Some(6));
        // on the cusp, the ideal ⟨y⟩ has e = i(cusp, y) = 2
        let i = LocalIdeal::in_hypersurface(vec![p("y")], p("x^2 - y^3")).unwrap();
        assert_eq!(hs_multiplicity(&i).unwrap().e, Some(2));
    }

    #[test]
    fn non_primary_ideal_is_rejected() {
        let i = LocalIdeal::new(vec![p("x")]).unwrap();
        assert_eq!(hs_multiplicity(&i), Err(Error::NotMPrimary { power: 1 }));
    }
}
