//! Lexicographic combinatorics of strictly increasing index tuples.
//!
//! Degree-p forms are stored as coefficient vectors over the C(n,p)
//! increasing p-tuples of {0..n-1} in lexicographic order; everything here
//! manipulates those tuples and the signs of the permutations that sort them.

/// Binomial coefficient, 0 when k > n.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        // exact at every step: acc always holds C(n, i+1)'s running product
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All strictly increasing k-tuples over 0..n, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next increasing tuple
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Lexicographic rank of an increasing tuple among all k-subsets of 0..n.
pub fn lex_rank(n: usize, tuple: &[usize]) -> usize {
    let k = tuple.len();
    let mut rank = 0usize;
    let mut prev: isize = -1;
    for (pos, &c) in tuple.iter().enumerate() {
        let mut j = (prev + 1) as usize;
        while j < c {
            rank += binomial(n - 1 - j, k - 1 - pos);
            j += 1;
        }
        prev = c as isize;
    }
    rank
}

/// Merge two disjoint increasing tuples into one, returning the sign of the
/// sorting permutation. `None` when the tuples share an index.
pub fn merge_sign(a: &[usize], b: &[usize]) -> Option<(i32, Vec<usize>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the a.len()-i remaining entries of a
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Some((sign, out))
}

/// Remove index `x` from an increasing tuple: the position sign (-1)^pos and
/// the remaining tuple. `None` when `x` does not occur.
pub fn remove_sign(tuple: &[usize], x: usize) -> Option<(i32, Vec<usize>)> {
    let pos = tuple.iter().position(|&t| t == x)?;
    let mut rest = tuple.to_vec();
    rest.remove(pos);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((sign, rest))
}

/// Rank of the pair {i, j}, i != j, among increasing 2-tuples of 0..n.
pub fn pair_rank(n: usize, i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    // rank of (a,b): a * n - a(a+1)/2 + (b - a - 1)
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}
