//! Enumeration of positive braid words up to cyclic rotation.

use hopfplumb_core::BraidWord;

/// Every word of length `c` on `s` strands in which each generator occurs at
/// least `min_each` times, one per rotation class (the least rotation).
pub fn necklaces(s: usize, c: usize, min_each: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if s < 2 || c == 0 {
        return out;
    }
    let k = s - 1;
    let mut a = vec![0u8; c + 1];
    let mut counts = vec![0usize; k + 1];
    fkm(1, 1, k, c, min_each, &mut a, &mut counts, &mut out);
    out
}

// Fredricksen-Kessler-Maiorana generation, pruned by the occurrence requirement.
#[allow(clippy::too_many_arguments)]
fn fkm(
    t: usize,
    p: usize,
    k: usize,
    n: usize,
    min_each: usize,
    a: &mut [u8],
    counts: &mut [usize],
    out: &mut Vec<Vec<u8>>,
) {
    if t > n {
        if n.is_multiple_of(p) {
            out.push(a[1..].to_vec());
        }
        return;
    }
    let lo = if t == 1 { 1 } else { a[t - p] };
    for x in lo..=k as u8 {
        a[t] = x;
        counts[x as usize] += 1;
        let missing: usize = counts[1..]
            .iter()
            .map(|&m| min_each.saturating_sub(m))
            .sum();
        if missing <= n - t {
            let np = if t == 1 || x > a[t - p] { t } else { p };
            fkm(t + 1, np, k, n, min_each, a, counts, out);
        }
        counts[x as usize] -= 1;
    }
}

/// Connected reduced positive words with at most `max_c` letters whose
/// closure is a knot, one per rotation class.
pub fn reduced_knot_words(max_c: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for s in 2..=max_c / 2 + 1 {
        for c in 2 * (s - 1)..=max_c {
            // A knot has even first Betti number c - s + 1.
            if (c + 1 - s) % 2 != 0 {
                continue;
            }
            for letters in necklaces(s, c, 2) {
                let w = BraidWord::new(s, letters).expect("letters in range");
                if w.component_count() == 1 {
                    out.push(w);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn brute(s: usize, c: usize, min_each: usize) -> BTreeSet<Vec<u8>> {
        let k = s - 1;
        let mut set = BTreeSet::new();
        let total = k.pow(c as u32);
        for mut code in 0..total {
            let mut w = Vec::with_capacity(c);
            for _ in 0..c {
                w.push((code % k) as u8 + 1);
                code /= k;
            }
            if (1..=k as u8).all(|g| w.iter().filter(|&&x| x == g).count() >= min_each) {
                let r = (0..c).map(|r| [&w[r..], &w[..r]].concat()).min().unwrap();
                set.insert(r);
            }
        }
        set
    }

    #[test]
    fn matches_brute_force() {
        for (s, c, m) in [(2, 5, 2), (3, 6, 2), (4, 7, 2), (3, 5, 1), (4, 8, 2)] {
            let fast: BTreeSet<Vec<u8>> = necklaces(s, c, m).into_iter().collect();
            assert_eq!(fast, brute(s, c, m), "s={s} c={c}");
        }
    }

    #[test]
    fn small_corpus() {
        let words = reduced_knot_words(6);
        let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert!(shown.contains(&"1 1 1".to_string()));
        assert!(shown.contains(&"1 2 1 2".to_string()));
        assert!(!shown.contains(&"1 1 2 2".to_string()));
        assert!(shown.contains(&"1 1 1 1 1".to_string()));
        assert!(words
            .iter()
            .all(|w| w.is_reduced() && w.component_count() == 1));
    }
}
