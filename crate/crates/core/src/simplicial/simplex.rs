//! Possibly-degenerate simplices in Eilenberg–Zilber normal form.
//!
//! A simplex of dimension `m` is written uniquely as `s_{i_1} ... s_{i_r} x` with
//! `i_1 > ... > i_r` and `x` nondegenerate of dimension `m - r`. Internally the
//! word is often handled as the monotone surjection `[m] -> [m - r]` it denotes:
//! the word is exactly the set of positions `t` where the surjection does not
//! increase between `t` and `t + 1`.

use serde::{Deserialize, Serialize};

/// `s_{word} target`, with `target` indexing a nondegenerate simplex of
/// dimension `dim - word.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalSimplex {
    dim: usize,
    word: Vec<usize>,
    target: usize,
}

/// Wire form of a [`FormalSimplex`]; the dimension is implied by context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalSimplexDoc {
    pub word: Vec<usize>,
    pub target: usize,
}

impl FormalSimplex {
    /// Builds a formal simplex, checking the normal-form conditions on the word.
    pub fn new(dim: usize, word: Vec<usize>, target: usize) -> Option<Self> {
        if word.len() > dim {
            return None;
        }
        if word.windows(2).any(|w| w[0] <= w[1]) {
            return None;
        }
        if word.first().is_some_and(|&i| i >= dim) {
            return None;
        }
        Some(FormalSimplex { dim, word, target })
    }

    pub(crate) fn new_unchecked(dim: usize, word: Vec<usize>, target: usize) -> Self {
        debug_assert!(FormalSimplex::new(dim, word.clone(), target).is_some());
        FormalSimplex { dim, word, target }
    }

    pub fn nondegenerate(dim: usize, target: usize) -> Self {
        FormalSimplex { dim, word: Vec::new(), target }
    }

    /// The totally degenerate `dim`-simplex on vertex `vertex`.
    pub fn on_vertex(dim: usize, vertex: usize) -> Self {
        FormalSimplex { dim, word: (0..dim).rev().collect(), target: vertex }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn target_dim(&self) -> usize {
        self.dim - self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// The degeneracy operator as a monotone surjection `[dim] -> [target_dim]`.
    pub fn surjection(&self) -> Vec<usize> {
        surjection_from_word(self.dim, &self.word)
    }

    /// Pulls back along a monotone surjection `eps: [m] -> [dim]`.
    pub fn pull_back(&self, eps: &[usize]) -> FormalSimplex {
        debug_assert_eq!(eps.last().copied(), Some(self.dim));
        let eta = self.surjection();
        let composite: Vec<usize> = eps.iter().map(|&t| eta[t]).collect();
        FormalSimplex { dim: eps.len() - 1, word: word_from_surjection(&composite), target: self.target }
    }

    /// Applies further degeneracies given as a normal-form word on top of this simplex.
    pub fn degenerate(&self, word: &[usize]) -> FormalSimplex {
        if word.is_empty() {
            return self.clone();
        }
        let m = self.dim + word.len();
        self.pull_back(&surjection_from_word(m, word))
    }

    /// Removes the degeneracies listed in `common` (a subset of this word),
    /// returning the simplex `y` with `self = s_common y`.
    pub fn strip(&self, common: &[usize]) -> FormalSimplex {
        if common.is_empty() {
            return self.clone();
        }
        let word = self
            .word
            .iter()
            .filter(|t| !common.contains(t))
            .map(|&t| t - common.iter().filter(|&&u| u < t).count())
            .collect();
        FormalSimplex { dim: self.dim - common.len(), word, target: self.target }
    }

    pub fn with_target(&self, target: usize) -> FormalSimplex {
        FormalSimplex { dim: self.dim, word: self.word.clone(), target }
    }

    pub fn to_doc(&self) -> FormalSimplexDoc {
        FormalSimplexDoc { word: self.word.clone(), target: self.target }
    }

    pub fn from_doc(dim: usize, doc: &FormalSimplexDoc) -> Option<Self> {
        FormalSimplex::new(dim, doc.word.clone(), doc.target)
    }
}

/// `eta(t) = t - #{w in word : w < t}` on `[m]`.
pub fn surjection_from_word(m: usize, word: &[usize]) -> Vec<usize> {
    (0..=m).map(|t| t - word.iter().filter(|&&w| w < t).count()).collect()
}

/// Positions where a monotone surjection repeats, in decreasing order.
pub fn word_from_surjection(eta: &[usize]) -> Vec<usize> {
    let mut word: Vec<usize> = (0..eta.len().saturating_sub(1)).filter(|&t| eta[t] == eta[t + 1]).collect();
    word.reverse();
    word
}

/// Coface `delta_i : [m-1] -> [m]`.
pub fn coface(m: usize, i: usize) -> Vec<usize> {
    (0..m).map(|v| if v < i { v } else { v + 1 }).collect()
}

/// Codegeneracy `sigma_j : [m+1] -> [m]`.
pub fn codegeneracy(m: usize, j: usize) -> Vec<usize> {
    (0..=m + 1).map(|v| if v <= j { v } else { v - 1 }).collect()
}

/// A monotone section of the surjection `eps`: the first preimage of each value.
pub fn section(eps: &[usize]) -> Vec<usize> {
    let top = eps.last().copied().unwrap_or(0);
    let mut out = Vec::with_capacity(top + 1);
    for (t, &v) in eps.iter().enumerate() {
        if v == out.len() {
            out.push(t);
        }
    }
    debug_assert_eq!(out.len(), top + 1);
    out
}

/// Writes a monotone map as `mu . eps` with `eps` surjective and `mu` injective.
/// `mu` is returned as its sorted image.
pub fn epi_mono(theta: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut image: Vec<usize> = Vec::new();
    let mut eps = Vec::with_capacity(theta.len());
    for &v in theta {
        if image.last() != Some(&v) {
            image.push(v);
        }
        eps.push(image.len() - 1);
    }
    (eps, image)
}

/// All subsets of `{0, .., m-1}` of size `r`, each as a decreasing vector.
pub fn degeneracy_words(m: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > m {
        return out;
    }
    let mut combo: Vec<usize> = (0..r).collect();
    loop {
        out.push(combo.iter().rev().copied().collect());
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < m - r + i {
                combo[i] += 1;
                for k in i + 1..r {
                    combo[k] = combo[k - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Intersection of two decreasing words.
pub fn common_word(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|t| b.contains(t)).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_and_surjection_round_trip() {
        let eta = surjection_from_word(4, &[3, 1]);
        assert_eq!(eta, vec![0, 1, 1, 2, 2]);
        assert_eq!(word_from_surjection(&eta), vec![3, 1]);
    }

    #[test]
    fn degeneracy_applies_simplicial_identity() {
        // s_i s_j = s_{j+1} s_i for i <= j
        let x = FormalSimplex::nondegenerate(2, 0);
        let a = x.degenerate(&[1]).degenerate(&[0]);
        let b = x.degenerate(&[0]).degenerate(&[2]);
        assert_eq!(a, b);
        assert_eq!(a.word(), &[2, 0]);
    }

    #[test]
    fn strip_inverts_degenerate() {
        let x = FormalSimplex::new(3, vec![2], 5).unwrap();
        let y = x.degenerate(&[3, 0]);
        assert_eq!(y.word(), &[4, 3, 0]);
        assert_eq!(y.strip(&[4, 0]), FormalSimplex::new(3, vec![2], 5).unwrap());
    }

    #[test]
    fn words_counted_by_binomials() {
        assert_eq!(degeneracy_words(4, 2).len(), 6);
        assert_eq!(degeneracy_words(3, 0), vec![Vec::<usize>::new()]);
        assert!(degeneracy_words(2, 3).is_empty());
        assert!(degeneracy_words(5, 3).iter().all(|w| w.windows(2).all(|p| p[0] > p[1])));
    }

    #[test]
    fn rejects_non_normal_words() {
        assert!(FormalSimplex::new(3, vec![0, 1], 0).is_none());
        assert!(FormalSimplex::new(2, vec![2], 0).is_none());
        assert!(FormalSimplex::new(1, vec![0, 0], 0).is_none());
    }

    #[test]
    fn epi_mono_factorization() {
        let (eps, mono) = epi_mono(&[0, 0, 2, 3, 3]);
        assert_eq!(eps, vec![0, 0, 1, 2, 2]);
        assert_eq!(mono, vec![0, 2, 3]);
        assert_eq!(section(&eps), vec![0, 2, 3]);
    }
}
