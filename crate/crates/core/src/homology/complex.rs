//! Bounded integer chain complexes, chain maps and their homology.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::{Matrix, SparseMatrix};
use super::snf::{invariant_factors, smith_diagonal, smith_normal_form};
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`, `t_i | t_{i+1}`, `t_i > 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        HomologyGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    /// Normalizes an arbitrary list of cyclic orders; orders `0` count as free
    /// summands and orders `1` vanish.
    pub fn from_cyclic(rank: usize, orders: &[BigInt]) -> Self {
        let mut rank = rank;
        let mut finite = Vec::new();
        for o in orders {
            if o.is_zero() {
                rank += 1;
            } else {
                finite.push(o.clone());
            }
        }
        let torsion = smith_diagonal(&Matrix::diagonal(&finite)).into_iter().filter(|d| *d > BigInt::one()).collect();
        HomologyGroup { rank, torsion }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Tensor product of the two groups.
    pub fn tensor(&self, other: &HomologyGroup) -> HomologyGroup {
        let mut orders = Vec::new();
        for _ in 0..other.rank {
            orders.extend(self.torsion.iter().cloned());
        }
        for _ in 0..self.rank {
            orders.extend(other.torsion.iter().cloned());
        }
        for a in &self.torsion {
            for b in &other.torsion {
                orders.push(a.gcd(b));
            }
        }
        HomologyGroup::from_cyclic(self.rank * other.rank, &orders)
    }

    /// `Tor(self, other)`.
    pub fn tor(&self, other: &HomologyGroup) -> HomologyGroup {
        let orders: Vec<BigInt> =
            self.torsion.iter().flat_map(|a| other.torsion.iter().map(move |b| a.gcd(b))).collect();
        HomologyGroup::from_cyclic(0, &orders)
    }

    /// Direct sum.
    pub fn sum(&self, other: &HomologyGroup) -> HomologyGroup {
        let orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        HomologyGroup::from_cyclic(self.rank + other.rank, &orders)
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Homology in every degree; only nonzero groups are stored, so equality is
/// degreewise isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Homology {
    groups: BTreeMap<i64, HomologyGroup>,
}

impl Homology {
    pub fn from_groups(groups: impl IntoIterator<Item = (i64, HomologyGroup)>) -> Self {
        let mut out = Homology::default();
        for (d, g) in groups {
            out.insert(d, g);
        }
        out
    }

    fn insert(&mut self, d: i64, g: HomologyGroup) {
        if !g.is_zero() {
            let merged = match self.groups.remove(&d) {
                Some(prev) => prev.sum(&g),
                None => g,
            };
            self.groups.insert(d, merged);
        }
    }

    pub fn get(&self, d: i64) -> HomologyGroup {
        self.groups.get(&d).cloned().unwrap_or_default()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (i64, &HomologyGroup)> {
        self.groups.iter().map(|(d, g)| (*d, g))
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    /// Moves every group up by `k` degrees.
    pub fn shift(&self, k: i64) -> Homology {
        Homology { groups: self.groups.iter().map(|(d, g)| (d + k, g.clone())).collect() }
    }

    /// The homology of a tensor product predicted from the factors alone.
    pub fn kunneth(&self, other: &Homology) -> Homology {
        let mut out = Homology::default();
        for (i, a) in self.nonzero() {
            for (j, b) in other.nonzero() {
                out.insert(i + j, a.tensor(b));
                out.insert(i + j + 1, a.tor(b));
            }
        }
        out
    }
}

impl fmt::Display for Homology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.groups.iter().map(|(d, g)| format!("H{d}={g}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// A chain complex of finitely generated free abelian groups supported in
/// degrees `lo..lo + ranks.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    lo: i64,
    ranks: Vec<usize>,
    /// `boundaries[k]` is `∂` out of degree `lo + k`; the first is always `rank x 0`-shaped.
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// `boundaries[k]` is the differential out of degree `lo + k`, with
    /// `ranks[k-1]` rows (zero rows for `k = 0`) and `ranks[k]` columns.
    pub fn new(lo: i64, ranks: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if boundaries.len() != ranks.len() {
            return Err(Error::InvalidComplex("one differential per degree is required".into()));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let rows = if k == 0 { 0 } else { ranks[k - 1] };
            if b.rows() != rows || b.cols() != ranks[k] {
                return Err(Error::InvalidComplex(format!(
                    "differential out of degree {} is {}x{}, expected {}x{}",
                    lo + k as i64,
                    b.rows(),
                    b.cols(),
                    rows,
                    ranks[k]
                )));
            }
        }
        let c = ChainComplex { lo, ranks, boundaries };
        for k in 1..c.ranks.len() {
            if !c.boundaries[k - 1].mul(&c.boundaries[k]).is_zero() {
                return Err(Error::BoundarySquare { degree: lo + k as i64 });
            }
        }
        Ok(c)
    }

    pub(crate) fn from_parts(lo: i64, ranks: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Self {
        ChainComplex { lo, ranks, boundaries }
    }

    pub fn zero() -> Self {
        ChainComplex { lo: 0, ranks: Vec::new(), boundaries: Vec::new() }
    }

    /// `Z` concentrated in degree `d`.
    pub fn unit(d: i64) -> Self {
        ChainComplex { lo: d, ranks: vec![1], boundaries: vec![SparseMatrix::zeros(0, 1)] }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// One past the top supported degree.
    pub fn end(&self) -> i64 {
        self.lo + self.ranks.len() as i64
    }

    pub fn degrees(&self) -> std::ops::Range<i64> {
        self.lo..self.end()
    }

    pub fn rank(&self, d: i64) -> usize {
        self.slot(d).map_or(0, |k| self.ranks[k])
    }

    /// `∂_d : C_d -> C_{d-1}`, zero-shaped outside the support.
    pub fn boundary(&self, d: i64) -> SparseMatrix {
        match self.slot(d) {
            Some(0) => SparseMatrix::zeros(self.rank(d - 1), self.ranks[0]),
            Some(k) => self.boundaries[k].clone(),
            None => SparseMatrix::zeros(self.rank(d - 1), 0),
        }
    }

    fn slot(&self, d: i64) -> Option<usize> {
        (d >= self.lo && d < self.end()).then(|| (d - self.lo) as usize)
    }

    /// The same groups and differentials, relabelled `d -> d + k`.
    pub fn shift(&self, k: i64) -> ChainComplex {
        ChainComplex { lo: self.lo + k, ranks: self.ranks.clone(), boundaries: self.boundaries.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    pub fn homology(&self) -> Homology {
        let factors: Vec<Vec<BigInt>> = self.boundaries.iter().map(invariant_factors).collect();
        let mut out = Homology::default();
        for (k, &rank) in self.ranks.iter().enumerate() {
            let out_rank = factors[k].len();
            let (in_rank, torsion) = match factors.get(k + 1) {
                Some(f) => (f.len(), f.iter().filter(|t| **t > BigInt::one()).cloned().collect()),
                None => (0, Vec::new()),
            };
            out.insert(self.lo + k as i64, HomologyGroup { rank: rank - out_rank - in_rank, torsion });
        }
        out
    }
}

pub fn homology(c: &ChainComplex) -> Homology {
    c.homology()
}

/// `(C ⊗ D)_n = ⊕ C_i ⊗ D_j` with `∂(x ⊗ y) = ∂x ⊗ y + (-1)^i x ⊗ ∂y`.
///
/// Basis elements of degree `n` are ordered by `i`, then `x`, then `y`.
pub fn tensor(c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    if c.is_zero() || d.is_zero() {
        return ChainComplex::zero();
    }
    let lo = c.lo + d.lo;
    let end = c.end() + d.end() - 1;
    // offsets[n][i]: position of the C_i ⊗ D_{n-i} block inside degree n
    let offset = |n: i64, i: i64| -> usize { (c.lo..i).map(|a| c.rank(a) * d.rank(n - a)).sum() };
    let rank = |n: i64| -> usize { c.degrees().map(|i| c.rank(i) * d.rank(n - i)).sum() };
    let ranks: Vec<usize> = (lo..end).map(rank).collect();
    let boundaries = (lo..end)
        .map(|n| {
            let mut columns = Vec::with_capacity(rank(n));
            for i in c.degrees() {
                let j = n - i;
                let (dc, dd) = (c.boundary(i), d.boundary(j));
                let sign = if i.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
                for x in 0..c.rank(i) {
                    for y in 0..d.rank(j) {
                        let mut col = Vec::new();
                        if i > c.lo {
                            let base = offset(n - 1, i - 1);
                            col.extend(dc.column(x).iter().map(|(x2, v)| (base + x2 * d.rank(j) + y, v.clone())));
                        }
                        if j > d.lo {
                            let base = offset(n - 1, i);
                            col.extend(
                                dd.column(y).iter().map(|(y2, v)| (base + x * d.rank(j - 1) + y2, &sign * v)),
                            );
                        }
                        columns.push(col);
                    }
                }
            }
            let rows = if n == lo { 0 } else { rank(n - 1) };
            SparseMatrix::from_columns(rows, columns)
        })
        .collect();
    let out = ChainComplex::from_parts(lo, ranks, boundaries);
    debug_assert!(ChainComplex::new(out.lo, out.ranks.clone(), out.boundaries.clone()).is_ok());
    out
}

/// A degreewise family of matrices `f_d : S_d -> T_d` commuting with the differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: Arc<ChainComplex>,
    target: Arc<ChainComplex>,
    maps: BTreeMap<i64, SparseMatrix>,
}

impl ChainMap {
    /// Degrees absent from `maps` are zero.
    pub fn new(source: Arc<ChainComplex>, target: Arc<ChainComplex>, maps: BTreeMap<i64, SparseMatrix>) -> Result<Self> {
        for (d, m) in &maps {
            if m.rows() != target.rank(*d) || m.cols() != source.rank(*d) {
                return Err(Error::InvalidChainMap(format!("matrix in degree {d} has the wrong shape")));
            }
        }
        let f = ChainMap { source, target, maps };
        let lo = f.source.lo().min(f.target.lo());
        let end = f.source.end().max(f.target.end());
        for d in lo..=end {
            let lhs = f.target.boundary(d).mul(&f.at(d));
            let rhs = f.at(d - 1).mul(&f.source.boundary(d));
            if lhs != rhs {
                return Err(Error::InvalidChainMap(format!("map does not commute with the differential out of degree {d}")));
            }
        }
        Ok(f)
    }

    pub fn identity(c: Arc<ChainComplex>) -> Self {
        let maps = c.degrees().map(|d| (d, SparseMatrix::identity(c.rank(d)))).collect();
        ChainMap { source: c.clone(), target: c, maps }
    }

    pub fn zero(source: Arc<ChainComplex>, target: Arc<ChainComplex>) -> Self {
        ChainMap { source, target, maps: BTreeMap::new() }
    }

    pub fn source(&self) -> &Arc<ChainComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ChainComplex> {
        &self.target
    }

    pub fn at(&self, d: i64) -> SparseMatrix {
        self.maps.get(&d).cloned().unwrap_or_else(|| SparseMatrix::zeros(self.target.rank(d), self.source.rank(d)))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMap) -> Result<ChainMap> {
        if *self.target != *other.source {
            return Err(Error::Mismatch("composable chain maps must share the middle complex".into()));
        }
        let maps = self.source.degrees().map(|d| (d, other.at(d).mul(&self.at(d)))).collect();
        Ok(ChainMap { source: self.source.clone(), target: other.target.clone(), maps })
    }

    /// The same matrices between the shifted complexes.
    pub fn shift(&self, k: i64) -> ChainMap {
        ChainMap {
            source: Arc::new(self.source.shift(k)),
            target: Arc::new(self.target.shift(k)),
            maps: self.maps.iter().map(|(d, m)| (d + k, m.clone())).collect(),
        }
    }

    /// `Cone_d = S_{d-1} ⊕ T_d`, `∂(s, t) = (-∂s, f s + ∂t)`.
    pub fn mapping_cone(&self) -> ChainComplex {
        let (s, t) = (&self.source, &self.target);
        if s.is_zero() && t.is_zero() {
            return ChainComplex::zero();
        }
        let lo = (s.lo() + 1).min(t.lo());
        let end = (s.end() + 1).max(t.end());
        let ranks: Vec<usize> = (lo..end).map(|d| s.rank(d - 1) + t.rank(d)).collect();
        let boundaries = (lo..end)
            .map(|d| {
                let m = SparseMatrix::block2(
                    &s.boundary(d - 1).neg(),
                    &SparseMatrix::zeros(s.rank(d - 2), t.rank(d)),
                    &self.at(d - 1),
                    &t.boundary(d),
                );
                if d == lo {
                    SparseMatrix::zeros(0, m.cols())
                } else {
                    m
                }
            })
            .collect();
        ChainComplex::from_parts(lo, ranks, boundaries)
    }
}

/// True iff `f` induces isomorphisms in every degree, decided by acyclicity of
/// its mapping cone.
pub fn is_homology_iso(f: &ChainMap) -> bool {
    f.mapping_cone().homology().is_zero()
}

/// `H_d(C)` with explicit generating cycles.
///
/// Generators are listed torsion first (with their orders) and then free.
#[derive(Clone, Debug)]
struct Presentation {
    group: HomologyGroup,
    /// one column per generator, as a cycle in `C_d`
    generators: Vec<Vec<BigInt>>,
    /// order of each generator, `0` for free generators
    orders: Vec<BigInt>,
    /// `C_d`-coordinates of a cycle to kernel coordinates (rows `r..` of `Q^{-1}`)
    to_kernel: Matrix,
    /// kernel coordinates to generator coordinates (kept rows of `P'`)
    to_generators: Matrix,
}

impl Presentation {
    fn new(c: &ChainComplex, d: i64) -> Self {
        let n = c.rank(d);
        let out = smith_normal_form(&c.boundary(d).to_dense());
        let r = out.rank();
        let kernel = out.col_transform.block(0, n, r, n);
        let to_kernel = out.col_inverse().block(r, n, 0, n);
        let k = n - r;
        let incoming = c.boundary(d + 1).to_dense();
        let x = to_kernel.mul(&incoming);
        let snf = smith_normal_form(&x);
        let basis = kernel.mul(snf.row_inverse());
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        let mut kept = Vec::new();
        for i in 0..k {
            let order = snf.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero);
            if order.is_one() {
                continue;
            }
            kept.push(i);
            generators.push(basis.column(i));
            orders.push(order);
        }
        let mut to_generators = Matrix::zeros(kept.len(), k);
        for (row, &i) in kept.iter().enumerate() {
            for j in 0..k {
                to_generators.set(row, j, snf.row_transform.get(i, j).clone());
            }
        }
        let torsion = orders.iter().filter(|o| !o.is_zero()).cloned().collect();
        let rank = orders.iter().filter(|o| o.is_zero()).count();
        Presentation { group: HomologyGroup { rank, torsion }, generators, orders, to_kernel, to_generators }
    }

    fn coordinates(&self, cycle: &[BigInt]) -> Vec<BigInt> {
        let raw = self.to_generators.mul_vec(&self.to_kernel.mul_vec(cycle));
        raw.into_iter().zip(&self.orders).map(|(v, o)| if o.is_zero() { v } else { v.mod_floor(o) }).collect()
    }
}

/// The map induced on homology in one degree, in the generators of the SNF presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub degree: i64,
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    /// target generators by source generators; torsion generators come first
    pub matrix: Matrix,
}

/// Induced maps in every degree where source or target homology is nonzero.
pub fn induced_homology_map(f: &ChainMap) -> Vec<InducedMap> {
    let lo = f.source.lo().min(f.target.lo());
    let end = f.source.end().max(f.target.end());
    let mut out = Vec::new();
    for d in lo..end {
        let ps = Presentation::new(&f.source, d);
        let pt = Presentation::new(&f.target, d);
        if ps.group.is_zero() && pt.group.is_zero() {
            continue;
        }
        let m = f.at(d);
        let mut matrix = Matrix::zeros(pt.generators.len(), ps.generators.len());
        for (j, z) in ps.generators.iter().enumerate() {
            for (i, v) in pt.coordinates(&m.mul_vec(z)).into_iter().enumerate() {
                matrix.set(i, j, v);
            }
        }
        out.push(InducedMap { degree: d, source: ps.group, target: pt.group, matrix });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(lo: i64, ranks: Vec<usize>, mats: Vec<Vec<Vec<i64>>>) -> ChainComplex {
        let mut boundaries = vec![SparseMatrix::zeros(0, ranks[0])];
        for m in mats {
            boundaries.push(Matrix::from_rows(&m).to_sparse());
        }
        ChainComplex::new(lo, ranks, boundaries).unwrap()
    }

    #[test]
    fn multiplication_by_two() {
        let c = complex(0, vec![1, 1], vec![vec![vec![2]]]);
        let h = c.homology();
        assert_eq!(h.get(0), HomologyGroup { rank: 0, torsion: vec![2.into()] });
        assert!(h.get(1).is_zero());
    }

    #[test]
    fn zero_complex_has_no_homology() {
        assert!(ChainComplex::zero().homology().is_zero());
        assert!(tensor(&ChainComplex::unit(0), &ChainComplex::zero()).is_zero());
    }

    #[test]
    fn nonzero_square_rejected() {
        let b0 = SparseMatrix::zeros(0, 1);
        let b1 = Matrix::from_rows(&[vec![1]]).to_sparse();
        let b2 = Matrix::from_rows(&[vec![1]]).to_sparse();
        let err = ChainComplex::new(0, vec![1, 1, 1], vec![b0, b1, b2]).unwrap_err();
        assert!(matches!(err, Error::BoundarySquare { degree: 2 }));
    }

    #[test]
    fn unit_tensor() {
        let c = complex(0, vec![2, 1], vec![vec![vec![1], vec![-1]]]);
        let t = tensor(&ChainComplex::unit(0), &c);
        assert_eq!(t, c);
        assert_eq!(tensor(&c, &ChainComplex::unit(3)).homology(), c.homology().shift(3));
    }

    #[test]
    fn from_cyclic_normalizes() {
        let g = HomologyGroup::from_cyclic(0, &[2.into(), 3.into(), 1.into(), 0.into()]);
        assert_eq!(g, HomologyGroup { rank: 1, torsion: vec![6.into()] });
        let two = HomologyGroup { rank: 0, torsion: vec![2.into()] };
        assert_eq!(two.tensor(&two), two);
        assert_eq!(two.tor(&two), two);
        assert_eq!(two.tensor(&HomologyGroup::free(1)), two);
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = Arc::new(complex(0, vec![1, 1], vec![vec![vec![2]]]));
        let id = ChainMap::identity(c.clone());
        assert!(is_homology_iso(&id));
        assert!(!is_homology_iso(&ChainMap::zero(c.clone(), c)));
    }

    #[test]
    fn induced_by_two() {
        let z = Arc::new(ChainComplex::unit(1));
        let mut maps = BTreeMap::new();
        maps.insert(1, Matrix::from_rows(&[vec![2]]).to_sparse());
        let f = ChainMap::new(z.clone(), z, maps).unwrap();
        let induced = induced_homology_map(&f);
        assert_eq!(induced.len(), 1);
        assert_eq!(induced[0].matrix, Matrix::from_rows(&[vec![2]]));
        assert!(!is_homology_iso(&f));
    }

    #[test]
    fn noncommuting_map_rejected() {
        let c = Arc::new(complex(0, vec![1, 1], vec![vec![vec![1]]]));
        let mut maps = BTreeMap::new();
        maps.insert(1, SparseMatrix::identity(1));
        assert!(ChainMap::new(c.clone(), c, maps).is_err());
    }
}
