//! The operator algebra of binary and ternary relations: the four modal
//! operators a binary relation induces, their adjoints along the converse
//! relation, and the three residuated maps of a ternary relation.

use crate::frames::{complement, contains, Set};

/// Binary relation `R <= S x T` between carriers of the given sizes.
/// `adj[s]` is the set of `t` with `s R t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rel {
    pub src: usize,
    pub dst: usize,
    pub adj: Vec<Set>,
}

impl Rel {
    pub fn new(src: usize, dst: usize, adj: Vec<Set>) -> Rel {
        assert_eq!(adj.len(), src);
        Rel { src, dst, adj }
    }

    pub fn from_pairs(src: usize, dst: usize, pairs: &[(usize, usize)]) -> Rel {
        let mut adj = vec![0; src];
        for &(s, t) in pairs {
            assert!(s < src && t < dst);
            adj[s] |= 1 << t;
        }
        Rel::new(src, dst, adj)
    }

    pub fn converse(&self) -> Rel {
        let mut adj = vec![0; self.dst];
        for s in 0..self.src {
            for t in 0..self.dst {
                if contains(self.adj[s], t) {
                    adj[t] |= 1 << s;
                }
            }
        }
        Rel::new(self.dst, self.src, adj)
    }
}

/// `<R> T' = R^{-1}[T']`: sources with some successor in `T'`.
pub fn rel_dia(r: &Rel, t: Set) -> Set {
    let mut out = 0;
    for s in 0..r.src {
        if r.adj[s] & t != 0 {
            out |= 1 << s;
        }
    }
    out
}

/// `[R] T'`: sources all of whose successors lie in `T'`.
pub fn rel_box(r: &Rel, t: Set) -> Set {
    let mut out = 0;
    for s in 0..r.src {
        if r.adj[s] & !t == 0 {
            out |= 1 << s;
        }
    }
    out
}

/// `[R> T'`: sources none of whose successors lie in `T'`.
pub fn rel_boxr(r: &Rel, t: Set) -> Set {
    complement(rel_dia(r, t), r.src)
}

/// `<R] T'`: sources with some successor outside `T'`.
pub fn rel_diar(r: &Rel, t: Set) -> Set {
    rel_dia(r, complement(t, r.dst))
}

/// Ternary relation `R <= S x T x U`. `adj[s * t_size + t]` is the set of
/// `u` with `R(s, t, u)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TernRel {
    pub s_size: usize,
    pub t_size: usize,
    pub u_size: usize,
    pub adj: Vec<Set>,
}

impl TernRel {
    pub fn new(s_size: usize, t_size: usize, u_size: usize, adj: Vec<Set>) -> TernRel {
        assert_eq!(adj.len(), s_size * t_size);
        TernRel {
            s_size,
            t_size,
            u_size,
            adj,
        }
    }

    pub fn from_triples(
        s_size: usize,
        t_size: usize,
        u_size: usize,
        triples: &[(usize, usize, usize)],
    ) -> TernRel {
        let mut adj = vec![0; s_size * t_size];
        for &(s, t, u) in triples {
            assert!(s < s_size && t < t_size && u < u_size);
            adj[s * t_size + t] |= 1 << u;
        }
        TernRel::new(s_size, t_size, u_size, adj)
    }

    fn holds(&self, s: usize, t: usize, u: usize) -> bool {
        contains(self.adj[s * self.t_size + t], u)
    }
}

/// `T' |>_R U' = {s | forall t,u: R(s,t,u) and t in T' => u in U'}`.
pub fn tern_tri(r: &TernRel, ts: Set, us: Set) -> Set {
    let mut out = 0;
    's: for s in 0..r.s_size {
        for t in 0..r.t_size {
            if contains(ts, t) && r.adj[s * r.t_size + t] & !us != 0 {
                continue 's;
            }
        }
        out |= 1 << s;
    }
    out
}

/// `T' ^_R S' = R^(2)[T', S'] = {u | exists t in T', s in S': R(s,t,u)}`.
pub fn tern_btri(r: &TernRel, ts: Set, ss: Set) -> Set {
    let mut out = 0;
    for u in 0..r.u_size {
        'found: for s in 0..r.s_size {
            if !contains(ss, s) {
                continue;
            }
            for t in 0..r.t_size {
                if contains(ts, t) && r.holds(s, t, u) {
                    out |= 1 << u;
                    break 'found;
                }
            }
        }
    }
    out
}

/// `S' |>>_R U' = {t | forall s,u: R(s,t,u) and s in S' => u in U'}`.
pub fn tern_btrir(r: &TernRel, ss: Set, us: Set) -> Set {
    let mut out = 0;
    't: for t in 0..r.t_size {
        for s in 0..r.s_size {
            if contains(ss, s) && r.adj[s * r.t_size + t] & !us != 0 {
                continue 't;
            }
        }
        out |= 1 << t;
    }
    out
}
