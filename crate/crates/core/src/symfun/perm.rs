//! Permutations of 0..n in lexicographic order, with signs.

/// Every permutation of `0..n` paired with its sign (+1 or -1).
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![(cur.clone(), 1)];
    while next_permutation(&mut cur) {
        out.push((cur.clone(), sign(&cur)));
    }
    out
}

pub fn sign(p: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_signs() {
        let perms = signed_permutations(4);
        assert_eq!(perms.len(), 24);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i32>(), 0);
        assert_eq!(perms[1], (vec![0, 1, 3, 2], -1));
        assert_eq!(signed_permutations(0), vec![(vec![], 1)]);
    }
}
