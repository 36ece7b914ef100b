//! Finite colimits of simplicial sets: wedges, coequalizers and pushouts.
//!
//! Colimits of simplicial sets are computed dimensionwise. The coequalizer of
//! `f, g : A ⇉ B` identifies `f(a) ~ g(a)` for every simplex `a` of `A`,
//! degenerate ones included; that relation is already closed under simplicial
//! operators, so a union-find per dimension (up to `dim B`) computes the quotient
//! exactly. A class is degenerate in the quotient precisely when it contains a
//! degenerate simplex of `B`, which yields the nondegenerate presentation.

use std::collections::HashMap;
use std::sync::Arc;

use super::map::SimplicialMap;
use super::set::FiniteSimplicialSet;
use super::simplex::FormalSimplex;
use crate::error::{Error, Result};

/// `X_1 ∨ .. ∨ X_r`, the disjoint union with all basepoints identified to vertex 0.
#[derive(Clone, Debug)]
pub struct Wedge {
    set: Arc<FiniteSimplicialSet>,
    summands: Vec<Arc<FiniteSimplicialSet>>,
    index: Vec<Vec<Vec<usize>>>,
    owner: Vec<Vec<Option<(usize, usize)>>>,
}

impl Wedge {
    pub fn of(summands: &[Arc<FiniteSimplicialSet>]) -> Result<Wedge> {
        for s in summands {
            s.require_pointed("wedge")?;
        }
        let top = summands.iter().filter_map(|s| s.dim()).max().unwrap_or(0);
        let mut owner: Vec<Vec<Option<(usize, usize)>>> = vec![Vec::new(); top + 1];
        owner[0].push(None);
        let mut index = Vec::with_capacity(summands.len());
        for (k, x) in summands.iter().enumerate() {
            let base = x.basepoint().expect("checked pointed");
            let mut local = Vec::with_capacity(top + 1);
            for d in 0..=top {
                let mut ids = Vec::with_capacity(x.count(d));
                for id in 0..x.count(d) {
                    if d == 0 && id == base {
                        ids.push(0);
                    } else {
                        ids.push(owner[d].len());
                        owner[d].push(Some((k, id)));
                    }
                }
                local.push(ids);
            }
            index.push(local);
        }
        let faces = owner
            .iter()
            .enumerate()
            .map(|(d, cells)| {
                cells
                    .iter()
                    .map(|cell| match cell {
                        None => Vec::new(),
                        Some((k, id)) => summands[*k]
                            .faces_of(d, *id)
                            .iter()
                            .map(|f| f.with_target(index[*k][f.target_dim()][f.target()]))
                            .collect(),
                    })
                    .collect()
            })
            .collect();
        Ok(Wedge {
            set: Arc::new(FiniteSimplicialSet::from_parts(faces, Some(0))),
            summands: summands.to_vec(),
            index,
            owner,
        })
    }

    pub fn set(&self) -> &Arc<FiniteSimplicialSet> {
        &self.set
    }

    pub fn summands(&self) -> &[Arc<FiniteSimplicialSet>] {
        &self.summands
    }

    /// A simplex of summand `k`, seen in the wedge.
    pub fn include(&self, k: usize, s: &FormalSimplex) -> FormalSimplex {
        s.with_target(self.index[k][s.target_dim()][s.target()])
    }

    /// Summand and local simplex; `None` on the basepoint.
    pub fn locate(&self, s: &FormalSimplex) -> Option<(usize, FormalSimplex)> {
        self.owner[s.target_dim()][s.target()].map(|(k, id)| (k, s.with_target(id)))
    }

    pub fn inclusion(&self, k: usize) -> SimplicialMap {
        let x = &self.summands[k];
        let images = x
            .dims()
            .iter()
            .enumerate()
            .map(|(d, &n)| (0..n).map(|id| FormalSimplex::nondegenerate(d, self.index[k][d][id])).collect())
            .collect();
        SimplicialMap::from_parts(x.clone(), self.set.clone(), images)
    }

    /// The map out of the wedge restricting to `maps[k]` on summand `k`.
    pub fn copair(&self, maps: &[SimplicialMap], target: Arc<FiniteSimplicialSet>) -> Result<SimplicialMap> {
        if maps.len() != self.summands.len() {
            return Err(Error::Mismatch(format!("{} maps for {} summands", maps.len(), self.summands.len())));
        }
        let base = target.require_pointed("copairing")?;
        SimplicialMap::from_fn(self.set.clone(), target, |s| match self.locate(s) {
            None => Ok(FormalSimplex::on_vertex(s.dim(), base)),
            Some((k, local)) => Ok(maps[k].apply(&local)),
        })
    }
}

/// A quotient of `B` with its projection and a chosen nondegenerate preimage of
/// each nondegenerate simplex of the quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    projection: SimplicialMap,
    representatives: Vec<Vec<FormalSimplex>>,
}

impl Quotient {
    pub fn set(&self) -> &Arc<FiniteSimplicialSet> {
        self.projection.target()
    }

    pub fn projection(&self) -> &SimplicialMap {
        &self.projection
    }

    /// A simplex of `B` projecting onto `q`.
    pub fn lift(&self, q: &FormalSimplex) -> FormalSimplex {
        self.representatives[q.target_dim()][q.target()].degenerate(q.word())
    }

    /// The map `Q -> C` through which `h : B -> C` factors; fails if `h` does not
    /// identify what the quotient identifies.
    pub fn descend(&self, h: &SimplicialMap) -> Result<SimplicialMap> {
        let source = self.projection.source();
        if !Arc::ptr_eq(source, h.source()) && **source != **h.source() {
            return Err(Error::Mismatch("map to descend must start at the quotiented object".into()));
        }
        let induced = SimplicialMap::from_fn(self.set().clone(), h.target().clone(), |q| Ok(h.apply(&self.lift(q))))?;
        for (d, id) in source.cells() {
            let b = FormalSimplex::nondegenerate(d, id);
            if induced.apply(&self.projection.apply(&b)) != h.apply(&b) {
                return Err(Error::Mismatch(format!("map does not respect the identification at ({d}, {id})")));
            }
        }
        Ok(induced)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so class order follows simplex order
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

fn same_object(a: &Arc<FiniteSimplicialSet>, b: &Arc<FiniteSimplicialSet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// The coequalizer of `f, g : A ⇉ B` with its projection `B -> Q`.
pub fn coequalizer(f: &SimplicialMap, g: &SimplicialMap) -> Result<Quotient> {
    if !same_object(f.source(), g.source()) || !same_object(f.target(), g.target()) {
        return Err(Error::Mismatch("coequalizer needs parallel maps".into()));
    }
    let a = f.source();
    let b = f.target().clone();
    let top = match b.dim() {
        Some(d) => d,
        None => {
            let empty = Arc::new(FiniteSimplicialSet::empty());
            return Ok(Quotient { projection: SimplicialMap::from_parts(b, empty, Vec::new()), representatives: Vec::new() });
        }
    };

    struct Level {
        index: HashMap<FormalSimplex, usize>,
        class_form: Vec<FormalSimplex>,
    }
    let mut levels: Vec<Level> = Vec::with_capacity(top + 1);
    let mut faces: Vec<Vec<Vec<FormalSimplex>>> = Vec::with_capacity(top + 1);
    let mut representatives: Vec<Vec<FormalSimplex>> = Vec::with_capacity(top + 1);

    for m in 0..=top {
        let all = b.all_simplices(m);
        let index: HashMap<FormalSimplex, usize> = all.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut uf = UnionFind::new(all.len());
        for s in a.all_simplices(m) {
            uf.union(index[&f.apply(&s)], index[&g.apply(&s)]);
        }
        let roots: Vec<usize> = (0..all.len()).map(|i| uf.find(i)).collect();
        let mut degenerate_member: HashMap<usize, usize> = HashMap::new();
        for (i, s) in all.iter().enumerate() {
            if s.is_degenerate() {
                degenerate_member.entry(roots[i]).or_insert(i);
            }
        }
        let mut root_form: HashMap<usize, FormalSimplex> = HashMap::new();
        let mut cells: Vec<Vec<FormalSimplex>> = Vec::new();
        let mut reps: Vec<FormalSimplex> = Vec::new();
        for (i, s) in all.iter().enumerate() {
            let r = roots[i];
            if root_form.contains_key(&r) {
                continue;
            }
            let form = match degenerate_member.get(&r) {
                Some(&j) => {
                    let d = &all[j];
                    let base = FormalSimplex::nondegenerate(d.target_dim(), d.target());
                    let lower = &levels[d.target_dim()];
                    lower.class_form[lower.index[&base]].degenerate(d.word())
                }
                None => {
                    let id = cells.len();
                    let cell_faces = if m == 0 {
                        Vec::new()
                    } else {
                        let lower = &levels[m - 1];
                        (0..=m).map(|k| lower.class_form[lower.index[&b.face(s, k)]].clone()).collect()
                    };
                    cells.push(cell_faces);
                    reps.push(s.clone());
                    FormalSimplex::nondegenerate(m, id)
                }
            };
            root_form.insert(r, form);
        }
        let class_form = roots.iter().map(|r| root_form[r].clone()).collect();
        faces.push(cells);
        representatives.push(reps);
        levels.push(Level { index, class_form });
    }

    let basepoint = b.basepoint().map(|v| {
        let lvl = &levels[0];
        lvl.class_form[lvl.index[&FormalSimplex::nondegenerate(0, v)]].target()
    });
    let quotient = Arc::new(FiniteSimplicialSet::from_parts(faces, basepoint));
    let images = b
        .dims()
        .iter()
        .enumerate()
        .map(|(d, &n)| {
            let lvl = &levels[d];
            (0..n).map(|id| lvl.class_form[lvl.index[&FormalSimplex::nondegenerate(d, id)]].clone()).collect()
        })
        .collect();
    Ok(Quotient { projection: SimplicialMap::from_parts(b, quotient, images), representatives })
}

/// A pointed pushout `X ∪_A Y`, computed as the coequalizer of `A ⇉ X ∨ Y`.
#[derive(Clone, Debug)]
pub struct Pushout {
    wedge: Wedge,
    quotient: Quotient,
    left: SimplicialMap,
    right: SimplicialMap,
}

impl Pushout {
    pub fn set(&self) -> &Arc<FiniteSimplicialSet> {
        self.quotient.set()
    }

    pub fn left(&self) -> &SimplicialMap {
        &self.left
    }

    pub fn right(&self) -> &SimplicialMap {
        &self.right
    }

    pub fn wedge(&self) -> &Wedge {
        &self.wedge
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    /// The map out of the pushout determined by `u` on `X` and `v` on `Y`.
    pub fn copair(&self, u: &SimplicialMap, v: &SimplicialMap) -> Result<SimplicialMap> {
        if !same_object(u.target(), v.target()) {
            return Err(Error::Mismatch("cocone legs must share a target".into()));
        }
        let joint = self.wedge.copair(&[u.clone(), v.clone()], u.target().clone())?;
        self.quotient.descend(&joint)
    }
}

pub fn pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout> {
    if !same_object(f.source(), g.source()) {
        return Err(Error::Mismatch("pushout legs must share a source".into()));
    }
    f.source().require_pointed("pushout")?;
    let wedge = Wedge::of(&[f.target().clone(), g.target().clone()])?;
    let into_left = f.then(&wedge.inclusion(0))?;
    let into_right = g.then(&wedge.inclusion(1))?;
    let quotient = coequalizer(&into_left, &into_right)?;
    let left = wedge.inclusion(0).then(quotient.projection())?;
    let right = wedge.inclusion(1).then(quotient.projection())?;
    Ok(Pushout { wedge, quotient, left, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{boundary_inclusion, circle, circle_arc, point_arc, sphere, standard_simplex};

    #[test]
    fn equal_maps_give_identity() {
        let d2 = Arc::new(standard_simplex(2).unwrap());
        let id = SimplicialMap::identity(d2.clone());
        let q = coequalizer(&id, &id).unwrap();
        assert_eq!(**q.set(), *d2);
        assert_eq!(q.projection().images(), SimplicialMap::identity(d2).images());
    }

    #[test]
    fn collapsing_boundary_gives_circle() {
        let inc = boundary_inclusion();
        let collapse = SimplicialMap::from_parts(
            inc.source().clone(),
            inc.target().clone(),
            vec![vec![FormalSimplex::nondegenerate(0, 0); 2]],
        );
        let q = coequalizer(&inc, &collapse).unwrap();
        assert_eq!(q.set().dims(), vec![1, 1]);
        let pointed = q.set().with_basepoint(Some(0)).unwrap();
        assert_eq!(pointed, circle());
    }

    #[test]
    fn two_points_identify_two_vertices() {
        let d1 = Arc::new(standard_simplex(1).unwrap());
        let two = Arc::new(FiniteSimplicialSet::from_parts(vec![vec![Vec::new()]], None));
        let f = SimplicialMap::from_parts(two.clone(), d1.clone(), vec![vec![FormalSimplex::nondegenerate(0, 0)]]);
        let g = SimplicialMap::from_parts(two, d1, vec![vec![FormalSimplex::nondegenerate(0, 1)]]);
        let q = coequalizer(&f, &g).unwrap();
        assert_eq!(q.set().dims(), vec![1, 1]);
    }

    #[test]
    fn wedge_counts() {
        let s0 = sphere(0);
        let w = Wedge::of(&[s0.clone(), s0]).unwrap();
        assert_eq!(w.set().dims(), vec![3]);
        let s1 = circle_arc();
        let w = Wedge::of(&[point_arc(), s1.clone()]).unwrap();
        assert_eq!(**w.set(), *s1);
        assert!(Wedge::of(&[s1.clone(), s1]).unwrap().set().validate().valid);
    }

    #[test]
    fn wedge_inclusions_are_injective() {
        let w = Wedge::of(&[sphere(2), circle_arc()]).unwrap();
        for k in 0..2 {
            let inc = w.inclusion(k);
            assert!(inc.is_valid());
            assert!(inc.is_injective());
        }
    }

    #[test]
    fn pushout_of_basepoints_is_wedge() {
        let p = point_arc();
        let x = sphere(2);
        let y = circle_arc();
        let f = SimplicialMap::constant(p.clone(), x.clone()).unwrap();
        let g = SimplicialMap::constant(p, y.clone()).unwrap();
        let po = pushout(&f, &g).unwrap();
        let w = Wedge::of(&[x, y]).unwrap();
        assert_eq!(po.set().dims(), w.set().dims());
        assert!(po.left().is_injective() && po.right().is_injective());
    }

    #[test]
    fn pushout_along_identity_is_other_leg() {
        let x = sphere(2);
        let a = circle_arc();
        let id = SimplicialMap::identity(a.clone());
        let f = SimplicialMap::constant(a, x.clone()).unwrap();
        let po = pushout(&f, &id).unwrap();
        assert_eq!(po.set().dims(), x.dims());
        assert!(po.left().is_iso());
    }

    #[test]
    fn mismatched_maps_rejected() {
        let id1 = SimplicialMap::identity(circle_arc());
        let id2 = SimplicialMap::identity(sphere(2));
        assert!(matches!(coequalizer(&id1, &id2), Err(Error::Mismatch(_))));
    }
}
