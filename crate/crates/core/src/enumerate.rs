//! Exhaustive, duplicate-free enumeration of finite frames: the substrate
//! for brute-force correspondence verification and the soundness harness.

use crate::frames::*;

/// All upward-closed families over `P({0..n-1})`, in increasing order of
/// their bitmask encoding. Counts: 3 at n=1, 6 at n=2, 20 at n=3.
pub fn monotone_families(n: usize) -> Vec<Family> {
    assert!(n <= 4, "family enumeration limited to 4 worlds");
    let total = 1u64 << (1 << n);
    (0..total).filter(|&f| family_is_monotone(f, n)).collect()
}

/// Every monotone n-frame on `{0..n-1}`, exactly once: each world's
/// neighbourhood family ranges over the upward-closed families.
pub fn monotone_nframes(n: usize) -> Vec<NFrame> {
    let families = monotone_families(n);
    let mut out = Vec::new();
    let mut pick = vec![0usize; n];
    loop {
        out.push(NFrame::new(n, pick.iter().map(|&i| families[i]).collect()));
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            pick[i] += 1;
            if pick[i] < families.len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Every c-frame on `{0..n-1}`: all selection functions
/// `f : W x P(W) -> P(W)`, count `(2^n)^(n * 2^n)`.
pub fn cframes(n: usize) -> impl Iterator<Item = CFrame> {
    assert!(n <= 2, "c-frame enumeration limited to 2 worlds (the count explodes)");
    let inputs = n << n; // n * 2^n
    let outputs = 1u64 << n;
    let total: u64 = outputs.pow(inputs as u32);
    (0..total).map(move |code| {
        let mut c = code;
        let mut f = vec![vec![0; 1 << n]; n];
        for w in 0..n {
            for z in 0..(1usize << n) {
                f[w][z] = (c % outputs) as Set;
                c /= outputs;
            }
        }
        CFrame::new(n, f)
    })
}

pub fn cframe_count(n: usize) -> u64 {
    assert!(n <= 2, "c-frame enumeration limited to 2 worlds (the count explodes)");
    (1u64 << n).pow((n << n) as u32)
}

/// Every n-kind two-sorted frame on carriers of sizes `nx`, `ny`:
/// all assignments of the four relations. With `supported_only`, only
/// those satisfying equation (1).
pub fn two_sorted_nframes(nx: usize, ny: usize, supported_only: bool) -> Vec<TwoSortedFrame> {
    let bits = 4 * nx * ny;
    assert!(bits <= 26, "two-sorted enumeration limited to 2^26 frames");
    let mut out = Vec::new();
    for code in 0..(1u64 << bits) {
        let frame = decode_two_sorted_n(nx, ny, code);
        if supported_only && !crate::semantics::is_supported(&frame).unwrap() {
            continue;
        }
        out.push(frame);
    }
    out
}

/// Decode an n-kind frame from a `4 * nx * ny`-bit code. Bit layout:
/// `r_ni`, then `r_notni` (each `ny` rows of `nx` bits), then `r_nu`,
/// then `r_nuc` (each `nx` rows of `ny` bits).
pub fn decode_two_sorted_n(nx: usize, ny: usize, code: u64) -> TwoSortedFrame {
    let mut pos = 0;
    let mut take = |width: usize| {
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        let v = (code >> pos) & mask;
        pos += width;
        v as Set
    };
    let r_ni: Vec<Set> = (0..ny).map(|_| take(nx)).collect();
    let r_notni: Vec<Set> = (0..ny).map(|_| take(nx)).collect();
    let r_nu: Vec<Set> = (0..nx).map(|_| take(ny)).collect();
    let r_nuc: Vec<Set> = (0..nx).map(|_| take(ny)).collect();
    TwoSortedFrame::new_n(nx, ny, r_ni, r_notni, r_nu, r_nuc)
}

pub fn two_sorted_n_count(nx: usize, ny: usize) -> u64 {
    1u64 << (4 * nx * ny)
}

/// Every c-kind two-sorted frame on carriers of sizes `nx`, `ny`.
pub fn two_sorted_cframes(nx: usize, ny: usize) -> impl Iterator<Item = TwoSortedFrame> {
    let bits = 2 * nx * ny + nx * ny * nx;
    assert!(bits <= 26, "two-sorted enumeration limited to 2^26 frames");
    (0..(1u64 << bits)).map(move |code| decode_two_sorted_c(nx, ny, code))
}

pub fn decode_two_sorted_c(nx: usize, ny: usize, code: u64) -> TwoSortedFrame {
    let mut pos = 0;
    let mut take = |width: usize| {
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        let v = (code >> pos) & mask;
        pos += width;
        v as Set
    };
    let r_ni: Vec<Set> = (0..ny).map(|_| take(nx)).collect();
    let r_notni: Vec<Set> = (0..ny).map(|_| take(nx)).collect();
    let t_f: Vec<Set> = (0..nx * ny).map(|_| take(nx)).collect();
    TwoSortedFrame::new_c(nx, ny, r_ni, r_notni, t_f)
}

pub fn two_sorted_c_count(nx: usize, ny: usize) -> u64 {
    1u64 << (2 * nx * ny + nx * ny * nx)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: upward-closedness by the full pairwise
    /// definition (X in F and X <= Y implies Y in F), rather than the
    /// one-element-extension closure the production check uses.
    fn upward_closed_oracle(f: Family, n: usize) -> bool {
        for x in subsets(n) {
            for y in subsets(n) {
                if family_contains(f, x) && is_subset(x, y) && !family_contains(f, y) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn family_counts_match_oracle() {
        for (n, expected) in [(0usize, 2usize), (1, 3), (2, 6), (3, 20)] {
            let families = monotone_families(n);
            assert_eq!(families.len(), expected, "n = {n}");
            let oracle_count = (0..(1u64 << (1 << n)))
                .filter(|&f| upward_closed_oracle(f, n))
                .count();
            assert_eq!(families.len(), oracle_count, "oracle disagrees at n = {n}");
            for &f in &families {
                assert!(upward_closed_oracle(f, n));
            }
        }
    }

    #[test]
    fn nframe_counts() {
        assert_eq!(monotone_nframes(1).len(), 3);
        assert_eq!(monotone_nframes(2).len(), 36);
        assert_eq!(monotone_nframes(3).len(), 8000);
    }

    #[test]
    fn nframes_are_distinct_and_monotone() {
        let frames = monotone_nframes(2);
        let mut seen = std::collections::HashSet::new();
        for f in &frames {
            assert!(f.is_monotone());
            assert!(seen.insert(f.nu.clone()), "duplicate frame");
        }
    }

    #[test]
    fn cframe_counts() {
        assert_eq!(cframe_count(0), 1);
        assert_eq!(cframe_count(1), 4);
        assert_eq!(cframe_count(2), 65536);
        assert_eq!(cframes(1).count(), 4);
        assert_eq!(cframes(0).count(), 1);
    }

    #[test]
    fn two_sorted_counts() {
        assert_eq!(two_sorted_n_count(1, 1), 16);
        assert_eq!(two_sorted_nframes(1, 1, false).len(), 16);
        let supported = two_sorted_nframes(1, 1, true);
        assert!(!supported.is_empty());
        assert!(supported.len() < 16);
        for k in &supported {
            assert!(crate::semantics::is_supported(k).unwrap());
        }
        // nx = 0: the single empty frame, vacuously supported
        assert_eq!(two_sorted_nframes(0, 1, true).len(), 1);
    }
}
