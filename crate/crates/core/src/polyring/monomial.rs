use std::fmt;

/// Maximum number of variables a polynomial may carry.
pub const MAX_VARS: usize = 8;

/// Exponent vector of a monomial. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExpVec(pub [u32; MAX_VARS]);

impl ExpVec {
    pub const ONE: ExpVec = ExpVec([0; MAX_VARS]);

    pub fn from_slice(e: &[u32]) -> ExpVec {
        assert!(e.len() <= MAX_VARS, "too many exponents");
        let mut v = [0; MAX_VARS];
        v[..e.len()].copy_from_slice(e);
        ExpVec(v)
    }

    pub fn xy(a: u32, b: u32) -> ExpVec {
        ExpVec::from_slice(&[a, b])
    }

    /// The monomial `x_i`.
    pub fn var(i: usize) -> ExpVec {
        let mut v = [0; MAX_VARS];
        v[i] = 1;
        ExpVec(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        let mut v = self.0;
        for (a, b) in v.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        ExpVec(v)
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &ExpVec) -> ExpVec {
        let mut v = other.0;
        for (a, b) in v.iter_mut().zip(self.0.iter()) {
            debug_assert!(*a >= *b);
            *a -= b;
        }
        ExpVec(v)
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        let mut v = self.0;
        for (a, b) in v.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        ExpVec(v)
    }

    pub fn is_coprime(&self, other: &ExpVec) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If the monomial is a pure power `x_i^k` with `k > 0`, returns `(i, k)`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let used = self.0.iter().rposition(|&e| e != 0).map_or(1, |i| i + 1);
        f.debug_list().entries(&self.0[..used.max(2)]).finish()
    }
}
