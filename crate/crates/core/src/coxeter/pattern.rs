//! Classical permutation pattern containment on one-line notation.

/// True iff some subsequence of `word` is order-isomorphic to `pattern`.
///
/// Backtracking over positions of `word`; a partial embedding is abandoned as
/// soon as the relative order of the chosen values disagrees with the prefix of
/// the pattern.
pub fn contains(word: &[u8], pattern: &[u8]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > word.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(k);
    extend(word, pattern, 0, &mut chosen)
}

fn extend(word: &[u8], pattern: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    for pos in start..=word.len() - remaining {
        let v = word[pos];
        let p = pattern[depth];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&cv, &cp)| (cv < v) == (cp < p));
        if consistent {
            chosen.push(v);
            if extend(word, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// True iff `word` avoids every pattern in `patterns`.
pub fn avoids_all(word: &[u8], patterns: &[&[u8]]) -> bool {
    patterns.iter().all(|p| !contains(word, p))
}

pub const SMOOTHNESS_PATTERNS: [&[u8]; 2] = [&[3, 4, 1, 2], &[4, 2, 3, 1]];

pub const COMPLETE_BP_PATTERNS: [&[u8]; 3] = [&[3, 4, 1, 2], &[5, 2, 3, 4, 1], &[6, 3, 5, 2, 4, 1]];
