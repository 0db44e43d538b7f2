//! Saturating face-cover counts and the fcn profile of an enhancement.

use core::fmt;

/// A face-cover count capped at the budget `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Count {
    Finite(u32),
    /// Coverable, but only with more than `k` faces.
    AboveK,
    /// Not coverable at all under the constraint.
    Infinity,
}

impl Count {
    pub fn saturate(value: u32, k: u32) -> Count {
        if value > k {
            Count::AboveK
        } else {
            Count::Finite(value)
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Count::Finite(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Count::Finite(_))
    }

    /// Equality as far as a budget-`k` decision can tell: both values at
    /// most `k` and equal, or both above `k`.
    pub fn capped_eq(self, other: Count) -> bool {
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => a == b,
            (Count::Finite(_), _) | (_, Count::Finite(_)) => false,
            _ => true,
        }
    }

    /// Saturating sum; `Infinity` absorbs.
    pub fn add(self, other: Count, k: u32) -> Count {
        match (self, other) {
            (Count::Infinity, _) | (_, Count::Infinity) => Count::Infinity,
            (Count::Finite(a), Count::Finite(b)) => Count::saturate(a.saturating_add(b), k),
            _ => Count::AboveK,
        }
    }

    pub fn add_const(self, c: u32, k: u32) -> Count {
        self.add(Count::Finite(c), k)
    }

    /// Saturating difference for values known to be at least `c`.
    pub fn sub_const(self, c: u32) -> Count {
        match self {
            Count::Finite(a) => Count::Finite(a.saturating_sub(c)),
            other => other,
        }
    }

    pub fn min(self, other: Count) -> Count {
        core::cmp::min(self, other)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(x) => write!(f, "{x}"),
            Count::AboveK => f.write_str("above_k"),
            Count::Infinity => f.write_str("inf"),
        }
    }
}

/// Corner subset as a bit mask: bit 0 is `c1`, bit 1 is `c2`.
pub type CornerSet = usize;

/// Minimum face covers of an enhancement using exactly 0, 1 or 2 of its
/// external faces, and the 0-external variant with corner subsets removed
/// from the terminal set. `f0_minus[0] == f0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FcnProfile {
    pub f0: Count,
    pub f1: Count,
    pub f2: Count,
    pub f0_minus: [Count; 4],
}

impl FcnProfile {
    pub fn capped_eq(&self, other: &FcnProfile) -> bool {
        self.f0.capped_eq(other.f0)
            && self.f1.capped_eq(other.f1)
            && self.f2.capped_eq(other.f2)
            && (0..4).all(|c| self.f0_minus[c].capped_eq(other.f0_minus[c]))
    }

    /// Minimum over all external-face usages.
    pub fn best(&self) -> Count {
        self.f0.min(self.f1).min(self.f2)
    }

    /// Capped profile with every value above `k` mapped to `AboveK`
    /// except `Infinity`.
    pub fn recap(&self, k: u32) -> FcnProfile {
        let r = |c: Count| match c {
            Count::Finite(x) => Count::saturate(x, k),
            other => other,
        };
        FcnProfile {
            f0: r(self.f0),
            f1: r(self.f1),
            f2: r(self.f2),
            f0_minus: [r(self.f0_minus[0]), r(self.f0_minus[1]), r(self.f0_minus[2]), r(self.f0_minus[3])],
        }
    }
}

impl fmt::Display for FcnProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f0={} f1={} f2={} f0-c1={} f0-c2={} f0-c1c2={}",
            self.f0, self.f1, self.f2, self.f0_minus[1], self.f0_minus[2], self.f0_minus[3]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturation_and_capped_equality() {
        assert_eq!(Count::saturate(3, 2), Count::AboveK);
        assert!(Count::AboveK.capped_eq(Count::Infinity));
        assert!(!Count::Finite(2).capped_eq(Count::AboveK));
        assert_eq!(Count::Finite(2).add(Count::Finite(1), 2), Count::AboveK);
        assert_eq!(Count::Finite(1).add(Count::Infinity, 5), Count::Infinity);
        assert!(Count::Finite(9) < Count::AboveK && Count::AboveK < Count::Infinity);
    }
}
