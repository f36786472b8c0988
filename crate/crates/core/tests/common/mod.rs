//! Independent oracles and generators shared by the integration tests. None of
//! these call into the code paths they check.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{HashSet, VecDeque};

use raagkit::{Alphabet, FlagComplex, Letter, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random graph on `n` vertices `r0, r1, ...` with edge probability `p`.
pub fn random_complex(rng: &mut StdRng, n: usize, p: f64) -> FlagComplex {
    let names: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    FlagComplex::from_graph(&names, &edges, None).expect("random graphs are well formed")
}

/// Random connected complex: draws until the graph is connected.
pub fn random_connected_complex(rng: &mut StdRng, n: usize, p: f64) -> FlagComplex {
    loop {
        let c = random_complex(rng, n, p);
        if c.is_connected() {
            return c;
        }
    }
}

/// Every vertex subset that is pairwise adjacent, grouped by size, each
/// group in lexicographic order.
pub fn brute_force_cliques(c: &FlagComplex) -> Vec<Vec<Vec<usize>>> {
    let n = c.num_vertices();
    assert!(n <= 16);
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 1u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let clique = vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| c.adjacent(u, v)));
        if clique {
            by_size[vs.len()].push(vs);
        }
    }
    for group in &mut by_size {
        group.sort();
    }
    by_size.into_iter().skip(1).take_while(|g| !g.is_empty()).collect()
}

/// Euler characteristic from brute-force face counts.
pub fn brute_force_euler(c: &FlagComplex) -> i64 {
    brute_force_cliques(c)
        .iter()
        .enumerate()
        .map(|(k, g)| if k % 2 == 0 { g.len() as i64 } else { -(g.len() as i64) })
        .sum()
}

/// Invariant factors by plain row and column reduction over `i128`: move the
/// smallest nonzero entry to the corner, reduce its row and column by
/// division with remainder until they vanish, then restore divisibility by
/// adding a row that the pivot fails to divide.
pub fn naive_invariant_factors(rows: &[Vec<i64>]) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..m {
            let q = a[i][t].div_euclid(a[t][t]);
            for j in t..n {
                a[i][j] -= q * a[t][j];
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..n {
            let q = a[t][j].div_euclid(a[t][t]);
            for i in t..m {
                a[i][j] -= q * a[i][t];
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        let p = a[t][t];
        let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
        if let Some(i) = bad {
            for j in t..n {
                let x = a[i][j];
                a[t][j] += x;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}

/// Determinantal divisors: `d_k` is the gcd of all k x k minors; invariant
/// factors are `d_k / d_{k-1}`. Exponential, for small matrices only.
pub fn determinantal_invariant_factors(rows: &[Vec<i64>]) -> Vec<i128> {
    let m = rows.len();
    let n = if m == 0 { 0 } else { rows[0].len() };
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=m.min(n) {
        let mut g = 0i128;
        for rs in subsets(m, k) {
            for cs in subsets(n, k) {
                let minor: Vec<Vec<i128>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j] as i128).collect()).collect();
                g = gcd(g, det(minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Bareiss fraction-free determinant.
fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// A letter as `(generator, inverse)`.
pub type L = (usize, bool);

/// Exhaustive word-problem oracle for the Artin group: the word is trivial
/// iff the empty word is reachable by swapping adjacent commuting letters and
/// deleting adjacent inverse pairs. Neither move lengthens the word, so the
/// search is finite.
pub fn shuffle_closure_is_identity(c: &FlagComplex, w: &[L]) -> bool {
    let commute = |x: usize, y: usize| x == y || c.adjacent(x, y);
    let mut seen: HashSet<Vec<L>> = HashSet::new();
    let mut queue = VecDeque::from([w.to_vec()]);
    seen.insert(w.to_vec());
    while let Some(cur) = queue.pop_front() {
        if cur.is_empty() {
            return true;
        }
        for i in 0..cur.len().saturating_sub(1) {
            let (x, y) = (cur[i], cur[i + 1]);
            let next = if x.0 == y.0 && x.1 != y.1 {
                let mut v = cur.clone();
                v.drain(i..i + 2);
                v
            } else if commute(x.0, y.0) {
                let mut v = cur.clone();
                v.swap(i, i + 1);
                v
            } else {
                continue;
            };
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

pub fn vertex_word(letters: &[L]) -> Word {
    Word::new(Alphabet::Vertices, letters.iter().map(|&(g, inverse)| Letter { gen: g, inverse }))
}

/// Random vertex word of the given length; free reduction may shorten it.
pub fn random_vertex_letters(rng: &mut StdRng, nv: usize, len: usize) -> Vec<L> {
    (0..len).map(|_| (rng.random_range(0..nv), rng.random_bool(0.5))).collect()
}

/// Random vertex word with exponent sum zero.
pub fn random_zero_sum_word(rng: &mut StdRng, nv: usize, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    let mut letters = random_vertex_letters(rng, nv, len);
    let sum: i64 = letters.iter().map(|&(_, inv)| if inv { -1 } else { 1 }).sum();
    for _ in 0..sum.unsigned_abs() {
        letters.push((rng.random_range(0..nv), sum > 0));
    }
    vertex_word(&letters)
}

/// Random integer matrix with entries in `[-bound, bound]`.
pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-bound..=bound)).collect()).collect()
}

/// All words of length exactly `len` over `nv` generators and their inverses.
pub fn all_words(nv: usize, len: usize) -> Vec<Vec<L>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * 2 * nv);
        for w in &out {
            for g in 0..nv {
                for inv in [false, true] {
                    let mut v = w.clone();
                    v.push((g, inv));
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}
