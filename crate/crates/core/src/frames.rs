//! Finite frames. Carriers are `{0..n-1}`; subsets are bitmasks. For a
//! frame on `W` the second carrier of its two-sorted companion is the full
//! powerset `P(W)`, indexed in binary counting order: the index of a
//! neighbourhood IS its bitmask over `W`. That convention keeps all frame
//! constructions and golden outputs canonical.

use std::fmt;
use thiserror::Error;

/// A subset of a carrier of size <= 32, one bit per element.
pub type Set = u32;

/// A set of subsets of a carrier of size <= 6; bit `z` is the subset whose
/// bitmask is `z`.
pub type Family = u64;

pub fn full_set(n: usize) -> Set {
    debug_assert!(n <= 32);
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn complement(s: Set, n: usize) -> Set {
    !s & full_set(n)
}

pub fn contains(s: Set, i: usize) -> bool {
    s & (1 << i) != 0
}

pub fn singleton(i: usize) -> Set {
    1 << i
}

pub fn is_subset(a: Set, b: Set) -> bool {
    a & !b == 0
}

pub fn elements(s: Set) -> impl Iterator<Item = usize> {
    (0..32u32).filter(move |i| s & (1 << i) != 0).map(|i| i as usize)
}

/// All subsets of `{0..n-1}` in binary counting order.
pub fn subsets(n: usize) -> impl Iterator<Item = Set> {
    debug_assert!(n < 32);
    0..(1u32 << n)
}

pub fn family_contains(f: Family, z: Set) -> bool {
    f & (1u64 << z) != 0
}

pub fn family_insert(f: Family, z: Set) -> Family {
    f | (1u64 << z)
}

/// Upward closed within `P({0..n-1})`: closed under adding one element.
pub fn family_is_monotone(f: Family, n: usize) -> bool {
    for z in subsets(n) {
        if family_contains(f, z) {
            for i in 0..n {
                if !family_contains(f, z | singleton(i)) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("neighbourhood family of world {world} is not upward closed: contains {missing_superset_of:?} but not a superset")]
    NotMonotone {
        world: usize,
        missing_superset_of: Vec<usize>,
    },
    #[error("two-sorted frame is not supported (equation (1) fails for some D)")]
    NotSupported,
    #[error("expected an n-kind two-sorted frame")]
    ExpectedNKind,
    #[error("expected a c-kind two-sorted frame")]
    ExpectedCKind,
    #[error("carrier too large: {0} (limit {1})")]
    CarrierTooLarge(usize, usize),
}

/// Neighbourhood frame `(W, nu)`. `nu[w]` is the family of neighbourhoods
/// of world `w`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct NFrame {
    pub worlds: usize,
    pub nu: Vec<Family>,
}

impl NFrame {
    pub fn new(worlds: usize, nu: Vec<Family>) -> NFrame {
        assert_eq!(nu.len(), worlds);
        assert!(worlds <= 5, "n-frame carrier limited to 5 worlds");
        NFrame { worlds, nu }
    }

    pub fn is_monotone(&self) -> bool {
        self.nu.iter().all(|&f| family_is_monotone(f, self.worlds))
    }

    /// First monotonicity violation, for strict-mode diagnostics.
    pub fn monotonicity_violation(&self) -> Option<FrameError> {
        for (w, &f) in self.nu.iter().enumerate() {
            if !family_is_monotone(f, self.worlds) {
                let witness = subsets(self.worlds)
                    .find(|&z| {
                        family_contains(f, z)
                            && (0..self.worlds)
                                .any(|i| !family_contains(f, z | singleton(i)))
                    })
                    .unwrap_or(0);
                return Some(FrameError::NotMonotone {
                    world: w,
                    missing_superset_of: elements(witness).collect(),
                });
            }
        }
        None
    }
}

/// Conditional frame `(W, f)`. `f[w][z]` is the selected subset for world
/// `w` and antecedent-set `z` (indexed by bitmask).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct CFrame {
    pub worlds: usize,
    pub f: Vec<Vec<Set>>,
}

impl CFrame {
    pub fn new(worlds: usize, f: Vec<Vec<Set>>) -> CFrame {
        assert_eq!(f.len(), worlds);
        assert!(worlds <= 5, "c-frame carrier limited to 5 worlds");
        for per_world in &f {
            assert_eq!(per_world.len(), 1 << worlds, "selection function must be total");
        }
        CFrame { worlds, f }
    }

    pub fn select(&self, w: usize, z: Set) -> Set {
        self.f[w][z as usize]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FrameKind {
    N,
    C,
}

impl fmt::Display for FrameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameKind::N => write!(f, "n"),
            FrameKind::C => write!(f, "c"),
        }
    }
}

/// Two-sorted Kripke frame with carriers `X` (states) and `Y`
/// (neighbourhoods). Relation encoding, by direction:
///
/// - `r_nu[x]`, `r_nuc[x]`: subsets of `Y` (successors along `R_nu`, `R_nuc`)
/// - `r_ni[y]`, `r_notni[y]`: subsets of `X` (successors along `R_ni`, `R_notni`)
/// - `t_f[x * ny + y]`: subset of `X` (third components of `T_f(x, y, -)`)
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct TwoSortedFrame {
    pub nx: usize,
    pub ny: usize,
    pub rels: TwoSortedRels,
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum TwoSortedRels {
    N {
        r_ni: Vec<Set>,
        r_notni: Vec<Set>,
        r_nu: Vec<Set>,
        r_nuc: Vec<Set>,
    },
    C {
        r_ni: Vec<Set>,
        r_notni: Vec<Set>,
        t_f: Vec<Set>,
    },
}

impl TwoSortedFrame {
    pub fn kind(&self) -> FrameKind {
        match self.rels {
            TwoSortedRels::N { .. } => FrameKind::N,
            TwoSortedRels::C { .. } => FrameKind::C,
        }
    }

    pub fn new_n(
        nx: usize,
        ny: usize,
        r_ni: Vec<Set>,
        r_notni: Vec<Set>,
        r_nu: Vec<Set>,
        r_nuc: Vec<Set>,
    ) -> TwoSortedFrame {
        assert!(nx <= 32 && ny <= 32);
        assert_eq!(r_ni.len(), ny);
        assert_eq!(r_notni.len(), ny);
        assert_eq!(r_nu.len(), nx);
        assert_eq!(r_nuc.len(), nx);
        TwoSortedFrame {
            nx,
            ny,
            rels: TwoSortedRels::N {
                r_ni,
                r_notni,
                r_nu,
                r_nuc,
            },
        }
    }

    pub fn new_c(
        nx: usize,
        ny: usize,
        r_ni: Vec<Set>,
        r_notni: Vec<Set>,
        t_f: Vec<Set>,
    ) -> TwoSortedFrame {
        assert!(nx <= 32 && ny <= 32);
        assert_eq!(r_ni.len(), ny);
        assert_eq!(r_notni.len(), ny);
        assert_eq!(t_f.len(), nx * ny);
        TwoSortedFrame {
            nx,
            ny,
            rels: TwoSortedRels::C { r_ni, r_notni, t_f },
        }
    }

    pub fn r_ni(&self) -> &[Set] {
        match &self.rels {
            TwoSortedRels::N { r_ni, .. } | TwoSortedRels::C { r_ni, .. } => r_ni,
        }
    }

    pub fn r_notni(&self) -> &[Set] {
        match &self.rels {
            TwoSortedRels::N { r_notni, .. } | TwoSortedRels::C { r_notni, .. } => r_notni,
        }
    }

    pub fn t_f(&self, x: usize, y: usize) -> Result<Set, FrameError> {
        match &self.rels {
            TwoSortedRels::C { t_f, .. } => Ok(t_f[x * self.ny + y]),
            TwoSortedRels::N { .. } => Err(FrameError::ExpectedCKind),
        }
    }
}
