//! Permutation models of `W(A_n)` and `W(D_n)`.

use num_bigint::BigInt;

use crate::Polynomial;

/// One-line notation of a permutation of `1..=len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len() + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > images.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// `#{i : w(i) > w(i+1)}`.
    pub fn descents(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }
}

/// Signed permutation `w(1), .., w(n)` with `|w|` a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation(Vec<i8>);

impl SignedPermutation {
    pub fn new(images: Vec<i8>) -> Option<Self> {
        let abs: Vec<u8> = images.iter().map(|x| x.unsigned_abs()).collect();
        Permutation::new(abs).map(|_| SignedPermutation(images))
    }

    pub fn images(&self) -> &[i8] {
        &self.0
    }

    pub fn negatives(&self) -> usize {
        self.0.iter().filter(|&&x| x < 0).count()
    }

    /// Even number of sign changes.
    pub fn is_type_d(&self) -> bool {
        self.negatives() % 2 == 0
    }

    /// Type D descents: position 0 when `w(1) + w(2) < 0`, position `i >= 1`
    /// when `w(i) > w(i+1)`.
    pub fn type_d_descents(&self) -> usize {
        let w = &self.0;
        let zero = usize::from(w.len() >= 2 && w[0] + w[1] < 0);
        zero + w.windows(2).filter(|p| p[0] > p[1]).count()
    }
}

fn histogram_to_poly(h: &[u128]) -> Polynomial {
    Polynomial::new(h.iter().map(|&c| BigInt::from(c)).collect())
}

/// `Eul(A_k; t)` by visiting every permutation of `1..=k+1` in lexicographic
/// order and counting its descents.
pub fn eulerian_a_enumerate(k: usize) -> Polynomial {
    let n = k + 1;
    let mut hist = vec![0u128; n];
    let mut images: Vec<u8> = (1..=n as u8).collect();
    loop {
        let w = Permutation(images.clone());
        hist[w.descents()] += 1;
        if !next_permutation(&mut images) {
            break;
        }
    }
    histogram_to_poly(&hist)
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|x| *x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `Eul(A_k; t)` by building permutations left to right, grouping partial
/// words by (set of used letters, last letter). Each state carries the
/// descent histogram of all prefixes reaching it.
pub fn eulerian_a_prefix_count(k: usize) -> Polynomial {
    let n = k + 1;
    assert!(n <= 20, "A_{k} is too large for prefix counting");
    let full = (1usize << n) - 1;
    // dp[mask][last] -> histogram
    let mut dp: Vec<Vec<Vec<u128>>> = vec![vec![Vec::new(); n]; 1 << n];
    for v in 0..n {
        dp[1 << v][v] = vec![1];
    }
    for mask in 1..=full {
        for last in 0..n {
            if dp[mask][last].is_empty() {
                continue;
            }
            let hist = std::mem::take(&mut dp[mask][last]);
            if mask == full {
                dp[mask][last] = hist;
                continue;
            }
            for next in (0..n).filter(|v| mask & (1 << v) == 0) {
                let bump = usize::from(last > next);
                let target = &mut dp[mask | (1 << next)][next];
                if target.len() < hist.len() + bump {
                    target.resize(hist.len() + bump, 0);
                }
                for (d, c) in hist.iter().enumerate() {
                    target[d + bump] += c;
                }
            }
        }
    }
    let mut total = vec![0u128; n];
    for hist in &dp[full] {
        for (d, c) in hist.iter().enumerate() {
            total[d] += c;
        }
    }
    histogram_to_poly(&total)
}

/// Calls `f` on every signed permutation of `1..=n` with an even number of
/// negative entries.
pub fn for_each_type_d(n: usize, mut f: impl FnMut(&SignedPermutation)) {
    let mut images: Vec<i8> = (1..=n as i8).collect();
    loop {
        for signs in 0u32..(1 << n) {
            if signs.count_ones() % 2 == 1 {
                continue;
            }
            let w: Vec<i8> = images
                .iter()
                .enumerate()
                .map(|(i, &x)| if signs & (1 << i) != 0 { -x } else { x })
                .collect();
            f(&SignedPermutation(w));
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
}

/// `Eul(D_n; t)` by enumerating all `2^(n-1) n!` even signed permutations.
pub fn eulerian_d_enumerate(n: usize) -> Polynomial {
    let mut hist = vec![0u128; n + 1];
    for_each_type_d(n, |w| hist[w.type_d_descents()] += 1);
    histogram_to_poly(&hist)
}

/// `Eul(D_n; t)` by prefix counting over (used absolute values, last signed
/// entry, sign parity). The position-0 descent is decided when the second
/// entry is placed.
pub fn eulerian_d_prefix_count(n: usize) -> Polynomial {
    assert!((2..=16).contains(&n));
    // signed value v in -n..=n, v != 0, encoded as index
    let enc = |v: i32| -> usize { (v + n as i32) as usize };
    let width = 2 * n + 1;
    let full = (1usize << n) - 1;
    let idx = |mask: usize, last: usize, parity: usize| (mask * width + last) * 2 + parity;
    let mut dp: Vec<Vec<u128>> = vec![Vec::new(); (1 << n) * width * 2];
    for a in 1..=n as i32 {
        for v in [a, -a] {
            dp[idx(1 << (a - 1), enc(v), usize::from(v < 0))] = vec![1];
        }
    }
    // process masks in increasing popcount order (numeric order suffices)
    for mask in 1..full {
        let placed = mask.count_ones();
        for last in 0..width {
            for parity in 0..2 {
                let i = idx(mask, last, parity);
                if dp[i].is_empty() {
                    continue;
                }
                let hist = std::mem::take(&mut dp[i]);
                let lv = last as i32 - n as i32;
                for a in (1..=n as i32).filter(|a| mask & (1 << (a - 1)) == 0) {
                    for v in [a, -a] {
                        let mut bump = usize::from(lv > v);
                        if placed == 1 && lv + v < 0 {
                            bump += 1;
                        }
                        let np = parity ^ usize::from(v < 0);
                        let t = idx(mask | (1 << (a - 1)), enc(v), np);
                        let target = &mut dp[t];
                        if target.len() < hist.len() + bump {
                            target.resize(hist.len() + bump, 0);
                        }
                        for (d, c) in hist.iter().enumerate() {
                            target[d + bump] += c;
                        }
                    }
                }
            }
        }
    }
    let mut total = vec![0u128; n + 1];
    for last in 0..width {
        for (d, c) in dp[idx(full, last, 0)].iter().enumerate() {
            total[d] += c;
        }
    }
    histogram_to_poly(&total)
}
