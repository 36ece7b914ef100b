use std::collections::HashMap;
use std::sync::Arc;

use super::set::FiniteSimplicialSet;
use super::simplex::FormalSimplex;
use crate::error::{Error, Result};

/// A simplicial map, recorded by the image of each nondegenerate source simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<FiniteSimplicialSet>,
    target: Arc<FiniteSimplicialSet>,
    images: Vec<Vec<FormalSimplex>>,
}

impl SimplicialMap {
    /// Builds and validates a map.
    pub fn new(
        source: Arc<FiniteSimplicialSet>,
        target: Arc<FiniteSimplicialSet>,
        images: Vec<Vec<FormalSimplex>>,
    ) -> Result<Self> {
        let map = SimplicialMap { source, target, images };
        let problems = map.problems();
        if let Some(first) = problems.first() {
            return Err(Error::InvalidMap(first.clone()));
        }
        Ok(map)
    }

    pub(crate) fn from_parts(
        source: Arc<FiniteSimplicialSet>,
        target: Arc<FiniteSimplicialSet>,
        images: Vec<Vec<FormalSimplex>>,
    ) -> Self {
        SimplicialMap { source, target, images }
    }

    /// Builds a map from its action on nondegenerate simplices, then validates it.
    pub fn from_fn<F>(source: Arc<FiniteSimplicialSet>, target: Arc<FiniteSimplicialSet>, mut f: F) -> Result<Self>
    where
        F: FnMut(&FormalSimplex) -> Result<FormalSimplex>,
    {
        let images = source
            .dims()
            .iter()
            .enumerate()
            .map(|(d, &n)| (0..n).map(|id| f(&FormalSimplex::nondegenerate(d, id))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(source, target, images)
    }

    pub fn identity(set: Arc<FiniteSimplicialSet>) -> Self {
        let images = set
            .dims()
            .iter()
            .enumerate()
            .map(|(d, &n)| (0..n).map(|id| FormalSimplex::nondegenerate(d, id)).collect())
            .collect();
        SimplicialMap { source: set.clone(), target: set, images }
    }

    /// The map sending everything to the basepoint of `target`.
    pub fn constant(source: Arc<FiniteSimplicialSet>, target: Arc<FiniteSimplicialSet>) -> Result<Self> {
        let b = target.require_pointed("constant map")?;
        let images = source
            .dims()
            .iter()
            .enumerate()
            .map(|(d, &n)| vec![FormalSimplex::on_vertex(d, b); n])
            .collect();
        Ok(SimplicialMap { source, target, images })
    }

    pub fn source(&self) -> &Arc<FiniteSimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSimplicialSet> {
        &self.target
    }

    pub fn images(&self) -> &[Vec<FormalSimplex>] {
        &self.images
    }

    pub fn image(&self, dim: usize, id: usize) -> &FormalSimplex {
        &self.images[dim][id]
    }

    /// Image of an arbitrary (possibly degenerate) simplex.
    pub fn apply(&self, s: &FormalSimplex) -> FormalSimplex {
        let img = &self.images[s.target_dim()][s.target()];
        if s.is_degenerate() {
            img.pull_back(&s.surjection())
        } else {
            img.clone()
        }
    }

    /// Lists every way the recorded data fails to define a pointed simplicial map.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let dims = self.source.dims();
        if self.images.len() != dims.len() || self.images.iter().zip(&dims).any(|(v, &n)| v.len() != n) {
            out.push("image table does not match the source's simplices".to_string());
            return out;
        }
        for (d, imgs) in self.images.iter().enumerate() {
            for (id, img) in imgs.iter().enumerate() {
                if img.dim() != d {
                    out.push(format!("image of ({d}, {id}) has dimension {}", img.dim()));
                } else if !self.target.contains(img) {
                    out.push(format!("image of ({d}, {id}) is not a simplex of the target"));
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (d, imgs) in self.images.iter().enumerate().skip(1) {
            for (id, img) in imgs.iter().enumerate() {
                let x = FormalSimplex::nondegenerate(d, id);
                for i in 0..=d {
                    let lhs = self.apply(&self.source.face(&x, i));
                    let rhs = self.target.face(img, i);
                    if lhs != rhs {
                        out.push(format!("face {i} of ({d}, {id}) does not commute"));
                    }
                }
            }
        }
        if let (Some(sb), Some(tb)) = (self.source.basepoint(), self.target.basepoint()) {
            if self.images[0][sb] != FormalSimplex::nondegenerate(0, tb) {
                out.push("basepoint is not preserved".to_string());
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.problems().is_empty()
    }

    /// `other . self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if !Arc::ptr_eq(&self.target, &other.source) && *self.target != *other.source {
            return Err(Error::Mismatch("composable maps must share the middle object".into()));
        }
        let images = self.images.iter().map(|v| v.iter().map(|s| other.apply(s)).collect()).collect();
        Ok(SimplicialMap { source: self.source.clone(), target: other.target.clone(), images })
    }

    /// Injective on simplices in every dimension: injective on nondegenerate simplices
    /// with nondegenerate images.
    pub fn is_injective(&self) -> bool {
        let mut seen = HashMap::new();
        for imgs in &self.images {
            for img in imgs {
                if img.is_degenerate() || seen.insert(img.clone(), ()).is_some() {
                    return false;
                }
            }
        }
        true
    }

    /// Every nondegenerate target simplex is the image of a nondegenerate source simplex.
    pub fn is_surjective(&self) -> bool {
        let seen: std::collections::HashSet<&FormalSimplex> =
            self.images.iter().flatten().filter(|s| !s.is_degenerate()).collect();
        seen.len() == self.target.total_count()
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.source.total_count() == self.target.total_count()
    }

    pub fn inverse(&self) -> Result<SimplicialMap> {
        if !self.is_iso() {
            return Err(Error::Precondition("map is not an isomorphism".into()));
        }
        let mut images: Vec<Vec<FormalSimplex>> =
            self.target.dims().iter().map(|&n| vec![FormalSimplex::nondegenerate(0, 0); n]).collect();
        for (d, imgs) in self.images.iter().enumerate() {
            for (id, img) in imgs.iter().enumerate() {
                images[d][img.target()] = FormalSimplex::nondegenerate(d, id);
            }
        }
        Ok(SimplicialMap { source: self.target.clone(), target: self.source.clone(), images })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{boundary_inclusion, standard_simplex};

    #[test]
    fn boundary_inclusion_is_injective() {
        let inc = boundary_inclusion();
        assert!(inc.is_valid());
        assert!(inc.is_injective());
        assert!(!inc.is_surjective());
    }

    #[test]
    fn collapse_is_not_injective() {
        let d1 = Arc::new(standard_simplex(1).unwrap());
        let d0 = Arc::new(standard_simplex(0).unwrap());
        let collapse = SimplicialMap::from_fn(d1, d0, |x| Ok(FormalSimplex::on_vertex(x.dim(), 0))).unwrap();
        assert!(!collapse.is_injective());
        assert!(collapse.is_surjective());
    }

    #[test]
    fn non_commuting_faces_rejected() {
        let d1 = Arc::new(standard_simplex(1).unwrap());
        // swap the two vertices but keep the edge: faces no longer commute
        let images = vec![
            vec![FormalSimplex::nondegenerate(0, 1), FormalSimplex::nondegenerate(0, 0)],
            vec![FormalSimplex::nondegenerate(1, 0)],
        ];
        assert!(SimplicialMap::new(d1.clone(), d1, images).is_err());
    }

    #[test]
    fn identity_inverse() {
        let d2 = Arc::new(standard_simplex(2).unwrap());
        let id = SimplicialMap::identity(d2);
        assert!(id.is_iso());
        assert_eq!(id.inverse().unwrap(), id);
        assert_eq!(id.then(&id).unwrap(), id);
    }
}
