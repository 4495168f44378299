//! Exact linear algebra over the rationals by fraction-free integer elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Cyclo5;
use super::Rational;

/// Clears denominators of a rational row, giving a primitive integer row.
pub fn integer_row(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut row: Vec<BigInt> = v
        .iter()
        .map(|c| {
            if c.is_zero() {
                BigInt::zero()
            } else {
                c.numer() * (&lcm / c.denom())
            }
        })
        .collect();
    make_primitive(&mut row);
    row
}

fn content(row: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in row {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Divides out the content; returns it (zero for the zero row).
fn make_primitive(row: &mut [BigInt]) -> BigInt {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x /= &g;
            }
        }
    }
    g
}

/// `target <- a*target - b*pivot_row`, with `a = p/g`, `b = t/g`; the pivot row is zero before `col`.
/// Returns the factor `a` applied to `target`.
fn eliminate(target: &mut [BigInt], pivot_row: &[BigInt], col: usize) -> BigInt {
    let p = &pivot_row[col];
    let t = target[col].clone();
    let g = p.gcd(&t);
    let a = p / &g;
    let b = &t / &g;
    let a_is_one = a.is_one();
    if !a_is_one {
        for x in target[..col].iter_mut() {
            if !x.is_zero() {
                *x *= &a;
            }
        }
    }
    for j in col..target.len() {
        let pj = &pivot_row[j];
        if a_is_one {
            if !pj.is_zero() {
                target[j] -= &b * pj;
            }
        } else if pj.is_zero() {
            if !target[j].is_zero() {
                target[j] *= &a;
            }
        } else {
            target[j] = &a * &target[j] - &b * pj;
        }
    }
    a
}

/// Rank over `Q`, by fraction-free elimination with the fixed pivot rule
/// "first nonzero column, then first row holding a nonzero entry there".
pub fn exact_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    rank_integer(&mut m)
}

pub(crate) fn rank_integer(m: &mut [Vec<BigInt>]) -> usize {
    let Some(ncols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut top = 0;
    for col in 0..ncols {
        if top == m.len() {
            break;
        }
        let Some(r) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(top, r);
        let (head, tail) = m.split_at_mut(top + 1);
        let pivot = &head[top];
        for row in tail.iter_mut() {
            if !row[col].is_zero() {
                eliminate(row, pivot, col);
                make_primitive(row);
            }
        }
        top += 1;
    }
    top
}

/// Rank over `Q(z5)`: each entry becomes its 4x4 rational multiplication block,
/// and the rational rank of the block matrix is four times the field rank.
pub fn rank_cyclo(rows: &[Vec<Cyclo5>]) -> usize {
    let mut big = Vec::with_capacity(rows.len() * 4);
    for row in rows {
        let blocks: Vec<[[Rational; 4]; 4]> = row.iter().map(Cyclo5::companion).collect();
        for i in 0..4 {
            let r: Vec<Rational> = blocks.iter().flat_map(|b| b[i].iter().cloned()).collect();
            big.push(r);
        }
    }
    let r = exact_rank(&big);
    debug_assert_eq!(r % 4, 0);
    r / 4
}

/// Incrementally maintained row echelon form with primitive integer rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    pivot_row: Vec<Option<usize>>,
}

/// Result of reducing a vector modulo an echelon span:
/// `scale * v - (combination of rows) = residue`.
pub struct Reduction {
    pub scale: Rational,
    pub residue: Vec<BigInt>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    pub fn reduce_integer(&self, mut v: Vec<BigInt>) -> Reduction {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut since_cleanup = 0;
        for col in 0..self.ncols {
            if v[col].is_zero() {
                continue;
            }
            let Some(r) = self.pivot_row[col] else {
                continue;
            };
            num *= eliminate(&mut v, &self.rows[r], col);
            since_cleanup += 1;
            if since_cleanup >= 4 {
                let g = make_primitive(&mut v);
                if !g.is_zero() {
                    den *= g;
                }
                since_cleanup = 0;
            }
        }
        let g = make_primitive(&mut v);
        if !g.is_zero() {
            den *= g;
        }
        Reduction {
            scale: Rational::new(num, den),
            residue: v,
        }
    }

    pub fn reduce(&self, v: &[Rational]) -> Reduction {
        assert_eq!(v.len(), self.ncols);
        let lcm = v
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = v
            .iter()
            .map(|c| {
                if c.is_zero() {
                    BigInt::zero()
                } else {
                    c.numer() * (&lcm / c.denom())
                }
            })
            .collect();
        let mut red = self.reduce_integer(ints);
        red.scale *= Rational::from_integer(lcm);
        red
    }

    /// Exact normal form of `v`: the unique representative of `v + span`
    /// supported off the pivot columns.
    pub fn normal_form(&self, v: &[Rational]) -> Vec<Rational> {
        let red = self.reduce(v);
        if red.residue.iter().all(Zero::is_zero) {
            return vec![Rational::zero(); self.ncols];
        }
        let inv = red.scale.recip();
        red.residue
            .iter()
            .map(|x| Rational::from_integer(x.clone()) * &inv)
            .collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).residue.iter().all(Zero::is_zero)
    }

    /// Adds a vector; returns true when it was independent of the current span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let red = self.reduce(v);
        self.push_residue(red.residue)
    }

    pub fn insert_integer(&mut self, v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.ncols);
        let red = self.reduce_integer(v);
        self.push_residue(red.residue)
    }

    fn push_residue(&mut self, mut row: Vec<BigInt>) -> bool {
        let Some(col) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if row[col].is_negative() {
            for x in row.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        self.pivot_row[col] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Reduced row echelon form: `(pivot column, row with pivot 1)` sorted by pivot.
    pub fn rref(&self) -> Vec<(usize, Vec<Rational>)> {
        let mut out: Vec<(usize, Vec<Rational>)> = self
            .pivot_columns()
            .into_iter()
            .map(|c| {
                let r = &self.rows[self.pivot_row[c].unwrap()];
                let p = Rational::from_integer(r[c].clone());
                (c, r.iter().map(|x| Rational::from_integer(x.clone()) / &p).collect())
            })
            .collect();
        for i in (0..out.len()).rev() {
            let (ci, ri) = out[i].clone();
            for (_, row) in out.iter_mut().take(i) {
                if row[ci].is_zero() {
                    continue;
                }
                let f = row[ci].clone();
                for j in ci..self.ncols {
                    if !ri[j].is_zero() {
                        row[j] -= &f * &ri[j];
                    }
                }
            }
        }
        out
    }

    /// Basis of `{x : row . x = 0 for every row}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let rref = self.rref();
        let free: Vec<usize> = (0..self.ncols)
            .filter(|&c| self.pivot_row[c].is_none())
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.ncols];
                x[f] = Rational::one();
                for (c, row) in &rref {
                    if !row[f].is_zero() {
                        x[*c] = -row[f].clone();
                    }
                }
                x
            })
            .collect()
    }
}

/// Null space of the matrix with the given rows (right kernel).
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(exact_rank(&mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), 3);
        assert_eq!(exact_rank(&mat(&[&[2, 4, 6], &[-1, -2, -3]])), 1);
        let (a, b) = (3, -7);
        let h = mat(&[&[0, 0, -a, 0], &[0, 0, a, -b], &[-a, a, 0, 0], &[0, -b, 0, 0]]);
        assert_eq!(exact_rank(&h), 4);
        assert_eq!(exact_rank(&[]), 0);
    }

    #[test]
    fn echelon_normal_form_and_kernel() {
        let rows = mat(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let mut e = Echelon::new(4);
        for r in &rows {
            assert!(e.insert(r));
        }
        assert!(!e.insert(&mat(&[&[3, 6, 10, 13]])[0]));
        let nf = e.normal_form(&mat(&[&[0, 0, 1, 0]])[0]);
        // e_2 is reducible to something supported on the free columns 1 and 3
        assert!(nf[0].is_zero() && nf[2].is_zero());
        let ker = e.kernel();
        assert_eq!(ker.len(), 2);
        for k in &ker {
            for r in &rows {
                let dot: Rational = r.iter().zip(k).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn normal_form_is_canonical() {
        let mut e = Echelon::new(3);
        e.insert(&mat(&[&[1, 1, 0]])[0]);
        let a = e.normal_form(&mat(&[&[1, 0, 5]])[0]);
        let b = e.normal_form(&mat(&[&[0, -1, 5]])[0]);
        assert_eq!(a, b);
    }

    #[test]
    fn cyclotomic_rank() {
        let z = Cyclo5::zeta();
        let one = Cyclo5::from_int(1);
        // rows (1, z) and (z, z^2) are proportional over Q(z)
        let rows = vec![vec![one.clone(), z.clone()], vec![z.clone(), &z * &z]];
        assert_eq!(rank_cyclo(&rows), 1);
        let rows = vec![vec![one.clone(), z.clone()], vec![one, &z * &z]];
        assert_eq!(rank_cyclo(&rows), 2);
    }
}
