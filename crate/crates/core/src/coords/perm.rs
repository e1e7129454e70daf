//! Factorial-base (Lehmer) ranking of permutations and colex ranking of subsets.

pub const FACT: [u32; 13] = [
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800, 479001600,
];

/// Binomial coefficients `C(n, k)` for `n, k <= 12`.
pub const fn binomial(n: u32, k: u32) -> u32 {
    if k > n {
        return 0;
    }
    let mut r = 1u32;
    let mut i = 0;
    while i < k {
        r = r * (n - i) / (i + 1);
        i += 1;
    }
    r
}

/// Lehmer rank of a permutation of `0..p.len()`; the identity ranks 0.
pub fn rank_perm(p: &[u8]) -> u32 {
    let n = p.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count() as u32;
        r += smaller * FACT[n - 1 - i];
    }
    r
}

pub fn unrank_perm(mut r: u32, out: &mut [u8]) {
    let n = out.len();
    let mut avail: Vec<u8> = (0..n as u8).collect();
    for i in 0..n {
        let f = FACT[n - 1 - i];
        let d = (r / f) as usize;
        r %= f;
        out[i] = avail.remove(d);
    }
}

pub fn perm_parity(p: &[u8]) -> u8 {
    let mut s = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s ^= 1;
            }
        }
    }
    s
}

/// Colex rank of a 4-element subset given as sorted keys.
pub fn rank_subset4(sorted: [u8; 4]) -> u32 {
    sorted
        .iter()
        .enumerate()
        .map(|(j, &k)| binomial(k as u32, j as u32 + 1))
        .sum()
}

pub fn unrank_subset4(mut r: u32) -> [u8; 4] {
    let mut out = [0u8; 4];
    for j in (0..4).rev() {
        let mut k = j as u32;
        while binomial(k + 1, j as u32 + 1) <= r {
            k += 1;
        }
        out[j] = k as u8;
        r -= binomial(k, j as u32 + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_rank_bijection_small() {
        let mut buf = [0u8; 5];
        for r in 0..FACT[5] {
            unrank_perm(r, &mut buf);
            assert_eq!(rank_perm(&buf), r);
        }
        unrank_perm(0, &mut buf);
        assert_eq!(buf, [0, 1, 2, 3, 4]);
    }

    #[test]
    fn lehmer_parity_pairs() {
        // Consecutive even/odd ranks differ by swapping the last two entries.
        let mut a = [0u8; 4];
        let mut b = [0u8; 4];
        for k in 0..12 {
            unrank_perm(2 * k, &mut a);
            unrank_perm(2 * k + 1, &mut b);
            assert_ne!(perm_parity(&a), perm_parity(&b));
            assert_eq!(perm_parity(&a) as u32, (k / 3 + k % 3) & 1);
        }
    }

    #[test]
    fn subset_rank_bijection() {
        let mut seen = vec![false; 495];
        for a in 0..12u8 {
            for b in a + 1..12 {
                for c in b + 1..12 {
                    for d in c + 1..12 {
                        let r = rank_subset4([a, b, c, d]) as usize;
                        assert!(!seen[r]);
                        seen[r] = true;
                        assert_eq!(unrank_subset4(r as u32), [a, b, c, d]);
                    }
                }
            }
        }
        assert!(seen.iter().all(|&x| x));
        assert_eq!(binomial(12, 4), 495);
    }
}
