use std::cmp::Ordering;

use super::monomial::{ExpVec, MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Degree first (higher degree is larger), ties by reverse lexicographic.
    GlobalDegRevLex,
    /// Degree first with *lower* degree larger, ties by reverse lexicographic.
    /// Leading terms are lowest-order parts, as local computations need.
    LocalNegDegRevLex,
}

/// A monomial order together with a variable priority permutation.
///
/// `perm[k]` is the variable placed at priority position `k`; position 0 is
/// the most significant variable in the reverse-lexicographic tie-break.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    perm: [u8; MAX_VARS],
}

const IDENTITY: [u8; MAX_VARS] = [0, 1, 2, 3, 4, 5, 6, 7];

impl MonomialOrder {
    pub const fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::GlobalDegRevLex,
            perm: IDENTITY,
        }
    }

    pub const fn local() -> Self {
        MonomialOrder {
            kind: OrderKind::LocalNegDegRevLex,
            perm: IDENTITY,
        }
    }

    /// Same kind with variables reprioritised. `perm` must be a permutation of
    /// `0..perm.len()`; remaining variables keep their positions.
    pub fn with_permutation(kind: OrderKind, perm: &[usize]) -> Self {
        let mut p = IDENTITY;
        let mut seen = [false; MAX_VARS];
        assert!(perm.len() <= MAX_VARS);
        for (k, &v) in perm.iter().enumerate() {
            assert!(v < perm.len() && !seen[v], "not a permutation: {perm:?}");
            seen[v] = true;
            p[k] = v as u8;
        }
        MonomialOrder { kind, perm: p }
    }

    pub fn is_local(&self) -> bool {
        self.kind == OrderKind::LocalNegDegRevLex
    }

    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        let by_degree = match self.kind {
            OrderKind::GlobalDegRevLex => da.cmp(&db),
            OrderKind::LocalNegDegRevLex => db.cmp(&da),
        };
        by_degree.then_with(|| {
            for &v in self.perm.iter().rev() {
                let (ea, eb) = (a.get(v as usize), b.get(v as usize));
                if ea != eb {
                    // smaller exponent in the least significant variable wins
                    return eb.cmp(&ea);
                }
            }
            Ordering::Equal
        })
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::degrevlex()
    }
}
