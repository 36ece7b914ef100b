//! Smith normal form over the integers.
//!
//! [`smith_normal_form`] is the dense elimination with unimodular transforms.
//! [`invariant_factors`] reaches the same diagonal for large sparse boundary
//! matrices by first pivoting on unit entries and only then falling back to
//! the dense routine on whatever is left.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{Matrix, SparseMatrix};

/// `row_transform * M * col_transform` is diagonal with entries `diagonal`,
/// each nonnegative and dividing the next nonzero one; zeros come last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub row_transform: Matrix,
    pub col_transform: Matrix,
    pub(crate) row_inverse: Matrix,
    pub(crate) col_inverse: Matrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    /// `col_transform^{-1}`.
    pub fn col_inverse(&self) -> &Matrix {
        &self.col_inverse
    }

    /// `row_transform^{-1}`.
    pub fn row_inverse(&self) -> &Matrix {
        &self.row_inverse
    }

    /// The rectangular diagonal matrix `D`.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> Matrix {
        let mut d = Matrix::zeros(rows, cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }

    /// Checks `P M Q = D` exactly, both transforms unimodular and the divisor chain.
    pub fn verify(&self, m: &Matrix) -> bool {
        let d = self.diagonal_matrix(m.rows(), m.cols());
        self.row_transform.mul(m).mul(&self.col_transform) == d
            && self.row_transform.is_unimodular()
            && self.col_transform.is_unimodular()
            && is_divisor_chain(&self.diagonal)
    }
}

/// Nonnegative entries, each dividing the next, zeros only at the end.
pub fn is_divisor_chain(diag: &[BigInt]) -> bool {
    let nonzero = diag.iter().take_while(|d| !d.is_zero()).count();
    diag[nonzero..].iter().all(Zero::is_zero)
        && diag.iter().all(|d| !d.is_negative())
        && diag[..nonzero].windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}

pub fn smith_normal_form(m: &Matrix) -> SnfResult {
    let mut e = Elimination::new(m.clone(), true);
    e.run();
    let n = m.rows().min(m.cols());
    let diagonal = (0..n).map(|i| e.a.get(i, i).clone()).collect();
    let t = e.transforms.expect("transforms tracked");
    SnfResult { diagonal, row_transform: t.p, col_transform: t.q, row_inverse: t.p_inv, col_inverse: t.q_inv }
}

/// The diagonal of the Smith form without transforms, zeros included.
pub fn smith_diagonal(m: &Matrix) -> Vec<BigInt> {
    let mut e = Elimination::new(m.clone(), false);
    e.run();
    (0..m.rows().min(m.cols())).map(|i| e.a.get(i, i).clone()).collect()
}

struct Transforms {
    p: Matrix,
    p_inv: Matrix,
    q: Matrix,
    q_inv: Matrix,
}

struct Elimination {
    a: Matrix,
    transforms: Option<Transforms>,
}

impl Elimination {
    fn new(a: Matrix, track: bool) -> Self {
        let transforms = track.then(|| Transforms {
            p: Matrix::identity(a.rows()),
            p_inv: Matrix::identity(a.rows()),
            q: Matrix::identity(a.cols()),
            q_inv: Matrix::identity(a.cols()),
        });
        Elimination { a, transforms }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(t) = &mut self.transforms {
            t.p.swap_rows(i, j);
            t.p_inv.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(t) = &mut self.transforms {
            t.q.swap_cols(i, j);
            t.q_inv.swap_rows(i, j);
        }
    }

    /// `row[dst] += k row[src]`
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row(dst, src, k);
        if let Some(t) = &mut self.transforms {
            t.p.add_row(dst, src, k);
            t.p_inv.add_col(src, dst, &-k);
        }
    }

    /// `col[dst] += k col[src]`
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col(dst, src, k);
        if let Some(t) = &mut self.transforms {
            t.q.add_col(dst, src, k);
            t.q_inv.add_row(src, dst, &-k);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(t) = &mut self.transforms {
            t.p.negate_row(i);
            t.p_inv.negate_col(i);
        }
    }

    fn smallest_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let abs = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                    let unit = abs.is_one();
                    best = Some((i, j, abs));
                    if unit {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            let Some((pi, pj)) = self.smallest_in(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.a.rows() {
                    if !self.a.get(i, t).is_zero() {
                        let q = self.a.get(i, t).div_floor(self.a.get(t, t));
                        self.add_row(i, t, &-q);
                        clean &= self.a.get(i, t).is_zero();
                    }
                }
                for j in t + 1..self.a.cols() {
                    if !self.a.get(t, j).is_zero() {
                        let q = self.a.get(t, j).div_floor(self.a.get(t, t));
                        self.add_col(j, t, &-q);
                        clean &= self.a.get(t, j).is_zero();
                    }
                }
                if !clean {
                    self.pull_smaller_remainder(t);
                    continue;
                }
                let pivot = self.a.get(t, t).clone();
                let bad = (t + 1..self.a.rows())
                    .find(|&i| (t + 1..self.a.cols()).any(|j| !self.a.get(i, j).is_multiple_of(&pivot)));
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }

    /// Moves the smallest nonzero entry of row `t` or column `t` into the pivot.
    fn pull_smaller_remainder(&mut self, t: usize) {
        let mut best: Option<(bool, usize, BigInt)> = None;
        for i in t + 1..self.a.rows() {
            let v = self.a.get(i, t);
            if !v.is_zero() && best.as_ref().is_none_or(|(_, _, b)| v.abs() < *b) {
                best = Some((true, i, v.abs()));
            }
        }
        for j in t + 1..self.a.cols() {
            let v = self.a.get(t, j);
            if !v.is_zero() && best.as_ref().is_none_or(|(_, _, b)| v.abs() < *b) {
                best = Some((false, j, v.abs()));
            }
        }
        match best {
            Some((true, i, _)) => self.swap_rows(t, i),
            Some((false, j, _)) => self.swap_cols(t, j),
            None => {}
        }
    }
}

/// The nonzero invariant factors of `m`, in divisor-chain order.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let mut lines: Vec<Vec<(usize, BigInt)>> = m.columns().to_vec();
    let mut occ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.rows()];
    for (l, line) in lines.iter().enumerate() {
        for (r, _) in line {
            occ[*r].insert(l);
        }
    }
    let mut units = 0usize;
    loop {
        let mut progress = false;
        for r in 0..m.rows() {
            let pivot = occ[r]
                .iter()
                .copied()
                .filter(|&l| entry(&lines[l], r).is_some_and(|v| v.abs().is_one()))
                .min_by_key(|&l| (lines[l].len(), l));
            let Some(p) = pivot else { continue };
            let pivot_line = std::mem::take(&mut lines[p]);
            let u = entry(&pivot_line, r).expect("pivot entry").clone();
            for (i, _) in &pivot_line {
                occ[*i].remove(&p);
            }
            let others: Vec<usize> = occ[r].iter().copied().collect();
            for l in others {
                let factor = entry(&lines[l], r).expect("occupancy is exact") * &u;
                let old = std::mem::take(&mut lines[l]);
                let new = axpy(&old, &pivot_line, &-factor);
                for (i, _) in &old {
                    occ[*i].remove(&l);
                }
                for (i, _) in &new {
                    occ[*i].insert(l);
                }
                lines[l] = new;
            }
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let live: Vec<&Vec<(usize, BigInt)>> = lines.iter().filter(|l| !l.is_empty()).collect();
    let mut rows: Vec<usize> = live.iter().flat_map(|l| l.iter().map(|(r, _)| *r)).collect();
    rows.sort_unstable();
    rows.dedup();
    let mut dense = Matrix::zeros(rows.len(), live.len());
    for (j, line) in live.iter().enumerate() {
        for (r, v) in line.iter() {
            let i = rows.binary_search(r).expect("row collected");
            dense.set(i, j, v.clone());
        }
    }
    let mut out = vec![BigInt::one(); units];
    out.extend(smith_diagonal(&dense).into_iter().filter(|d| !d.is_zero()));
    out
}

fn entry(line: &[(usize, BigInt)], r: usize) -> Option<&BigInt> {
    line.binary_search_by_key(&r, |(i, _)| *i).ok().map(|k| &line[k].1)
}

/// `x + k y` on sorted sparse vectors.
fn axpy(x: &[(usize, BigInt)], y: &[(usize, BigInt)], k: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut a, mut b) = (0, 0);
    while a < x.len() || b < y.len() {
        let take_x = b == y.len() || (a < x.len() && x[a].0 < y[b].0);
        let take_y = a == x.len() || (b < y.len() && y[b].0 < x[a].0);
        if take_x {
            out.push(x[a].clone());
            a += 1;
        } else if take_y {
            out.push((y[b].0, &y[b].1 * k));
            b += 1;
        } else {
            let v = &x[a].1 + &y[b].1 * k;
            if !v.is_zero() {
                out.push((x[a].0, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_examples() {
        let r = smith_normal_form(&Matrix::from_rows(&[vec![2]]));
        assert_eq!(r.diagonal, ints(&[2]));
        let m = Matrix::from_rows(&[vec![1, 0], vec![0, 0]]);
        assert_eq!(smith_normal_form(&m).diagonal, ints(&[1, 0]));
        let m = Matrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let r = smith_normal_form(&m);
        assert_eq!(r.diagonal, ints(&[2, 4]));
        assert!(r.verify(&m));
    }

    #[test]
    fn inverses_are_tracked() {
        let m = Matrix::from_rows(&[vec![4, 6, 2], vec![2, -3, 7], vec![0, 5, 5], vec![1, 1, 1]]);
        let r = smith_normal_form(&m);
        assert!(r.verify(&m));
        assert_eq!(r.row_transform.mul(&r.row_inverse), Matrix::identity(4));
        assert_eq!(r.col_transform.mul(&r.col_inverse), Matrix::identity(3));
    }

    #[test]
    fn diagonal_needs_divisibility_fix() {
        // diag(2, 3) is not in normal form: the chain is (1, 6)
        let m = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let r = smith_normal_form(&m);
        assert_eq!(r.diagonal, ints(&[1, 6]));
        assert!(r.verify(&m));
    }

    #[test]
    fn sparse_route_matches_dense() {
        let m = Matrix::from_rows(&[
            vec![1, -1, 0, 0],
            vec![0, 1, -1, 2],
            vec![-1, 0, 1, 0],
            vec![0, 0, 0, 4],
        ]);
        let dense: Vec<BigInt> = smith_diagonal(&m).into_iter().filter(|d| !d.is_zero()).collect();
        assert_eq!(invariant_factors(&m.to_sparse()), dense);
        assert_eq!(dense, ints(&[1, 1, 2]));
    }

    #[test]
    fn empty_matrices() {
        assert!(smith_normal_form(&Matrix::zeros(0, 3)).diagonal.is_empty());
        assert!(invariant_factors(&SparseMatrix::zeros(3, 0)).is_empty());
        assert!(invariant_factors(&SparseMatrix::zeros(2, 2)).is_empty());
    }
}
