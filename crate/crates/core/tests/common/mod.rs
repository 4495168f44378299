#![allow(dead_code)]

use std::collections::HashSet;

use nodal_core::nodal::Point;
use nodal_core::poly::{Cyclo5, Rational};
use nodal_core::random::SeededRng;
use num_traits::{One, Zero};
use rand::Rng;

/// Degree-`d` monomials in `n` variables as sorted index tuples, largest lex first.
pub fn lex_monomials(n: usize, d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(n: usize, d: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v as u8);
            rec(n, d, v, cur, out);
            cur.pop();
        }
    }
    rec(n, d, 0, &mut cur, &mut out);
    out
}

fn binom(a: u64, b: u64) -> u64 {
    (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1))
}

/// Sizes `(h(d+1), h(d-1))` for the order ideal spanned in degree `d` by the
/// last `c` lex monomials, in the fewest variables that have `c` of them.
pub fn lex_segment_oracle(c: usize, d: usize) -> (u64, u64) {
    let mut n = 1;
    while (binom((n + d - 1) as u64, d as u64) as usize) < c {
        n += 1;
    }
    let all = lex_monomials(n, d);
    let last: HashSet<Vec<u8>> = all[all.len() - c..].iter().cloned().collect();
    let drop = |m: &[u8], j: usize| -> Vec<u8> {
        let mut v = m.to_vec();
        v.remove(j);
        v
    };
    let up = lex_monomials(n, d + 1)
        .iter()
        .filter(|m| (0..=d).all(|j| last.contains(&drop(m, j))))
        .count() as u64;
    let mut down: HashSet<Vec<u8>> = HashSet::new();
    for m in &last {
        for j in 0..d {
            down.insert(drop(m, j));
        }
    }
    (up, down.len() as u64)
}

/// Textbook Gaussian elimination over the rationals.
pub fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = Rational::one() / m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone() * &inv;
                for c in col..ncols {
                    let sub = f.clone() * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Up to `max_points` distinct rational points of P^4 with small coordinates.
pub fn random_points(rng: &mut SeededRng, max_points: usize) -> Vec<Point> {
    let count = rng.gen_range(1..=max_points);
    let mut pts: Vec<Vec<i64>> = Vec::new();
    while pts.len() < count {
        let p: Vec<i64> = (0..5).map(|_| rng.gen_range(-3..=3)).collect();
        if p.iter().all(|&c| c == 0) {
            continue;
        }
        let same = pts.iter().any(|o| {
            (0..5).all(|i| (0..5).all(|j| p[i] * o[j] == p[j] * o[i]))
        });
        if !same {
            pts.push(p);
        }
    }
    pts.iter()
        .map(|p| p.iter().map(|&c| Cyclo5::from_int(c)).collect())
        .collect()
}
