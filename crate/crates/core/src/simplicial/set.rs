use std::fmt;

use serde::Serialize;

use super::simplex::{coface, codegeneracy, degeneracy_words, epi_mono, FormalSimplex};
use crate::error::{Error, Result};
use crate::limits::limits;

/// A finite simplicial set presented by its nondegenerate simplices.
///
/// `faces[d][id]` lists the `d + 1` faces of the nondegenerate simplex `(d, id)`
/// (empty for vertices). Degenerate simplices are never stored; they are the
/// formal degeneracies of the stored ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSimplicialSet {
    faces: Vec<Vec<Vec<FormalSimplex>>>,
    basepoint: Option<usize>,
}

/// One violated invariant, pinned to the offending nondegenerate simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub dim: usize,
    pub id: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn push(&mut self, dim: usize, id: usize, message: String) {
        self.violations.push(Violation { dim, id, message });
    }

    fn finish(mut self) -> Self {
        self.valid = self.violations.is_empty();
        self
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "simplex ({}, {}): {}", v.dim, v.id, v.message)?;
        }
        Ok(())
    }
}

impl FiniteSimplicialSet {
    /// Builds and validates a simplicial set from its face table.
    pub fn new(faces: Vec<Vec<Vec<FormalSimplex>>>, basepoint: Option<usize>) -> Result<Self> {
        let set = FiniteSimplicialSet::from_parts(faces, basepoint);
        let report = set.validate();
        if !report.valid {
            return Err(Error::InvalidSet(report.to_string()));
        }
        limits().check_dim(set.dim().unwrap_or(0))?;
        Ok(set)
    }

    /// Assembles a face table without validation; trailing empty dimensions are dropped.
    pub(crate) fn from_parts(mut faces: Vec<Vec<Vec<FormalSimplex>>>, basepoint: Option<usize>) -> Self {
        while faces.last().is_some_and(|d| d.is_empty()) {
            faces.pop();
        }
        FiniteSimplicialSet { faces, basepoint }
    }

    /// The one-point pointed simplicial set.
    pub fn point() -> Self {
        FiniteSimplicialSet { faces: vec![vec![Vec::new()]], basepoint: Some(0) }
    }

    pub fn empty() -> Self {
        FiniteSimplicialSet { faces: Vec::new(), basepoint: None }
    }

    /// Top dimension, `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    /// Number of nondegenerate simplices per dimension.
    pub fn dims(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.faces.get(dim).map_or(0, Vec::len)
    }

    pub fn total_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    pub fn is_pointed(&self) -> bool {
        self.basepoint.is_some()
    }

    pub(crate) fn require_pointed(&self, op: &'static str) -> Result<usize> {
        self.basepoint.ok_or(Error::Unpointed(op))
    }

    /// The point, or a set whose only nondegenerate simplex is its basepoint.
    pub fn is_point(&self) -> bool {
        self.basepoint.is_some() && self.total_count() == 1
    }

    /// Stored faces of the nondegenerate simplex `(dim, id)`.
    pub fn faces_of(&self, dim: usize, id: usize) -> &[FormalSimplex] {
        &self.faces[dim][id]
    }

    /// Whether `s` is (a degeneracy of) the basepoint.
    pub fn is_base(&self, s: &FormalSimplex) -> bool {
        s.target_dim() == 0 && Some(s.target()) == self.basepoint
    }

    /// The basepoint degenerated up to dimension `dim`.
    pub fn base_simplex(&self, dim: usize) -> Option<FormalSimplex> {
        self.basepoint.map(|b| FormalSimplex::on_vertex(dim, b))
    }

    /// Whether `s` names a simplex of this set.
    pub fn contains(&self, s: &FormalSimplex) -> bool {
        s.target() < self.count(s.target_dim())
    }

    /// Iterates over the nondegenerate simplices as `(dim, id)`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.faces.iter().enumerate().flat_map(|(d, cells)| (0..cells.len()).map(move |i| (d, i)))
    }

    /// `theta^* s` for a monotone `theta : [m] -> [s.dim()]`.
    pub fn apply(&self, theta: &[usize], s: &FormalSimplex) -> FormalSimplex {
        let eta = s.surjection();
        let composite: Vec<usize> = theta.iter().map(|&t| eta[t]).collect();
        let (eps, mono) = epi_mono(&composite);
        let inner = self.restrict(s.target_dim(), s.target(), &mono);
        inner.pull_back(&eps)
    }

    /// `mono^* x` for a nondegenerate `x` and an injective `mono` given as a sorted image.
    fn restrict(&self, dim: usize, id: usize, mono: &[usize]) -> FormalSimplex {
        if mono.len() == dim + 1 {
            return FormalSimplex::nondegenerate(dim, id);
        }
        let missing = (0..=dim).rev().find(|v| !mono.contains(v)).expect("a missing vertex");
        let face = &self.faces[dim][id][missing];
        let shifted: Vec<usize> = mono.iter().map(|&v| if v < missing { v } else { v - 1 }).collect();
        self.apply(&shifted, face)
    }

    /// `d_i s`.
    pub fn face(&self, s: &FormalSimplex, i: usize) -> FormalSimplex {
        self.apply(&coface(s.dim(), i), s)
    }

    /// `s_j s`.
    pub fn degeneracy(&self, s: &FormalSimplex, j: usize) -> FormalSimplex {
        self.apply(&codegeneracy(s.dim(), j), s)
    }

    /// Every simplex of dimension `m`, degenerate ones included, in a fixed order.
    pub fn all_simplices(&self, m: usize) -> Vec<FormalSimplex> {
        let mut out = Vec::new();
        for k in 0..=m.min(self.faces.len().saturating_sub(1)) {
            if self.faces.is_empty() {
                break;
            }
            let words = degeneracy_words(m, m - k);
            for id in 0..self.count(k) {
                for w in &words {
                    out.push(FormalSimplex::new_unchecked(m, w.clone(), id));
                }
            }
        }
        out
    }

    /// Checks every structural invariant and every face identity `d_i d_j = d_{j-1} d_i`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if let Some(b) = self.basepoint {
            if b >= self.count(0) {
                report.push(0, b, "basepoint is not a vertex".into());
            }
        }
        let mut well_formed = true;
        for (d, cells) in self.faces.iter().enumerate() {
            for (id, faces) in cells.iter().enumerate() {
                let expected = if d == 0 { 0 } else { d + 1 };
                if faces.len() != expected {
                    report.push(d, id, format!("has {} faces, expected {expected}", faces.len()));
                    well_formed = false;
                    continue;
                }
                for (i, face) in faces.iter().enumerate() {
                    if FormalSimplex::new(face.dim(), face.word().to_vec(), face.target()).is_none() {
                        report.push(d, id, format!("face {i} has a degeneracy word out of normal form"));
                        well_formed = false;
                    } else if face.dim() + 1 != d {
                        report.push(d, id, format!("face {i} has dimension {}", face.dim()));
                        well_formed = false;
                    } else if !self.contains(face) {
                        report.push(d, id, format!("face {i} targets missing simplex ({}, {})", face.target_dim(), face.target()));
                        well_formed = false;
                    }
                }
            }
        }
        if well_formed {
            for (d, cells) in self.faces.iter().enumerate().skip(2) {
                for id in 0..cells.len() {
                    let x = FormalSimplex::nondegenerate(d, id);
                    for j in 1..=d {
                        let dj = self.face(&x, j);
                        for i in 0..j {
                            let lhs = self.face(&dj, i);
                            let rhs = self.face(&self.face(&x, i), j - 1);
                            if lhs != rhs {
                                report.push(d, id, format!("d{i} d{j} differs from d{} d{i}", j - 1));
                            }
                        }
                    }
                }
            }
        }
        report.finish()
    }

    /// Same set with a different (or no) basepoint.
    pub fn with_basepoint(&self, basepoint: Option<usize>) -> Result<Self> {
        if let Some(b) = basepoint {
            if b >= self.count(0) {
                return Err(Error::InvalidSet(format!("vertex {b} does not exist")));
            }
        }
        Ok(FiniteSimplicialSet { faces: self.faces.clone(), basepoint })
    }

    /// `X_+`: a new vertex appended as the basepoint.
    pub fn add_disjoint_basepoint(&self) -> Self {
        let mut faces = self.faces.clone();
        if faces.is_empty() {
            faces.push(Vec::new());
        }
        faces[0].push(Vec::new());
        let b = faces[0].len() - 1;
        FiniteSimplicialSet { faces, basepoint: Some(b) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{circle, standard_simplex};

    #[test]
    fn faces_of_standard_triangle() {
        let d2 = standard_simplex(2).unwrap();
        let x = FormalSimplex::nondegenerate(2, 0);
        // d_0 [0,1,2] = [1,2], the last edge in lexicographic order
        assert_eq!(d2.face(&x, 0), FormalSimplex::nondegenerate(1, 2));
        assert_eq!(d2.face(&x, 2), FormalSimplex::nondegenerate(1, 0));
    }

    #[test]
    fn face_of_degeneracy() {
        let d1 = standard_simplex(1).unwrap();
        let e = FormalSimplex::nondegenerate(1, 0);
        let s0e = d1.degeneracy(&e, 0);
        assert_eq!(s0e.word(), &[0]);
        assert_eq!(d1.face(&s0e, 0), e);
        assert_eq!(d1.face(&s0e, 1), e);
        assert_eq!(d1.face(&s0e, 2), d1.degeneracy(&d1.face(&e, 1), 0));
    }

    #[test]
    fn injected_fault_is_named() {
        // a triangle whose faces do not agree on vertices
        let d2 = standard_simplex(2).unwrap();
        let mut faces = d2.faces.clone();
        faces[1][2][1] = FormalSimplex::nondegenerate(0, 0);
        let broken = FiniteSimplicialSet::from_parts(faces, None);
        let report = broken.validate();
        assert!(!report.valid);
        assert!(report.violations.iter().any(|v| v.dim == 2 && v.id == 0 && v.message.contains("d0")));
        assert!(FiniteSimplicialSet::new(broken.faces.clone(), None).is_err());
    }

    #[test]
    fn all_simplices_counts() {
        let s1 = circle();
        // s0 s0 v, s1 e, s0 e
        assert_eq!(s1.all_simplices(2).len(), 3);
        let d2 = standard_simplex(2).unwrap();
        // 3 vertices * C(2,2) + 3 edges * C(2,1) + 1 triangle
        assert_eq!(d2.all_simplices(2).len(), 3 + 6 + 1);
    }

    #[test]
    fn disjoint_basepoint() {
        let d1 = standard_simplex(1).unwrap().add_disjoint_basepoint();
        assert_eq!(d1.dims(), vec![3, 1]);
        assert_eq!(d1.basepoint(), Some(2));
        assert!(d1.validate().valid);
    }
}
