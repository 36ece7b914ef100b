//! Standard simplices, spheres and the small fixed models used throughout.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::map::SimplicialMap;
use super::set::FiniteSimplicialSet;
use super::simplex::FormalSimplex;
use super::smash::SmashProduct;
use crate::error::Result;
use crate::limits::limits;

/// `Δ[n]`, unpointed; nondegenerate `k`-simplices are the `(k+1)`-subsets of
/// `{0..n}` in lexicographic order.
pub fn standard_simplex(n: usize) -> Result<FiniteSimplicialSet> {
    limits().check_dim(n)?;
    let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 1u64..(1u64 << (n + 1)) {
        let verts: Vec<usize> = (0..=n).filter(|&v| mask & (1 << v) != 0).collect();
        by_dim[verts.len() - 1].push(verts);
    }
    for level in &mut by_dim {
        level.sort();
    }
    let index: Vec<HashMap<Vec<usize>, usize>> = by_dim
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect())
        .collect();
    let faces = by_dim
        .iter()
        .enumerate()
        .map(|(k, level)| {
            level
                .iter()
                .map(|verts| {
                    if k == 0 {
                        return Vec::new();
                    }
                    (0..=k)
                        .map(|i| {
                            let mut face = verts.clone();
                            face.remove(i);
                            FormalSimplex::nondegenerate(k - 1, index[k - 1][&face])
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(FiniteSimplicialSet::from_parts(faces, None))
}

/// `S^1 = Δ[1]/∂Δ[1]`: one vertex (the basepoint) and one edge.
pub fn circle() -> FiniteSimplicialSet {
    let v = FormalSimplex::nondegenerate(0, 0);
    FiniteSimplicialSet::from_parts(vec![vec![Vec::new()], vec![vec![v.clone(), v]]], Some(0))
}

/// `Δ[1]` pointed at vertex 1; smashing with it forms the reduced cone.
pub fn cone_interval() -> FiniteSimplicialSet {
    let d1 = standard_simplex(1).expect("Δ[1] is within every cap");
    d1.with_basepoint(Some(1)).expect("vertex 1 exists")
}

/// A circle subdivided into three edges, pointed at vertex 0.
pub fn three_edge_circle() -> FiniteSimplicialSet {
    let v = |i| FormalSimplex::nondegenerate(0, i);
    // edge k runs from vertex k to vertex k+1 mod 3; faces are (d0, d1) = (end, start)
    let edges = (0..3).map(|k| vec![v((k + 1) % 3), v(k)]).collect();
    FiniteSimplicialSet::from_parts(vec![vec![Vec::new(); 3], edges], Some(0))
}

/// The degree-two map from the three-edge circle onto `S^1`: the first two edges
/// wrap around the circle, the third is collapsed.
pub fn degree_two_map() -> SimplicialMap {
    let source = Arc::new(three_edge_circle());
    let target = circle_arc();
    let images = vec![
        vec![FormalSimplex::nondegenerate(0, 0); 3],
        vec![FormalSimplex::nondegenerate(1, 0), FormalSimplex::nondegenerate(1, 0), FormalSimplex::on_vertex(1, 0)],
    ];
    SimplicialMap::from_parts(source, target, images)
}

/// The inclusion `∂Δ[1] -> Δ[1]` of the two endpoints.
pub fn boundary_inclusion() -> SimplicialMap {
    let ends = Arc::new(FiniteSimplicialSet::from_parts(vec![vec![Vec::new(); 2]], None));
    let d1 = Arc::new(standard_simplex(1).expect("Δ[1] is within every cap"));
    SimplicialMap::from_parts(ends, d1, vec![vec![FormalSimplex::nondegenerate(0, 0), FormalSimplex::nondegenerate(0, 1)]])
}

fn shared(slot: &'static OnceLock<Arc<FiniteSimplicialSet>>, make: fn() -> FiniteSimplicialSet) -> Arc<FiniteSimplicialSet> {
    slot.get_or_init(|| Arc::new(make())).clone()
}

/// The shared one-point set.
pub fn point_arc() -> Arc<FiniteSimplicialSet> {
    static SLOT: OnceLock<Arc<FiniteSimplicialSet>> = OnceLock::new();
    shared(&SLOT, FiniteSimplicialSet::point)
}

/// The shared `S^1`.
pub fn circle_arc() -> Arc<FiniteSimplicialSet> {
    static SLOT: OnceLock<Arc<FiniteSimplicialSet>> = OnceLock::new();
    shared(&SLOT, circle)
}

/// `S^0`: vertex 0 is the basepoint, vertex 1 the other point.
pub fn sphere0() -> FiniteSimplicialSet {
    FiniteSimplicialSet::from_parts(vec![vec![Vec::new(), Vec::new()]], Some(0))
}

/// `S^n` as the flat `n`-fold smash power of `S^1` (coordinates in order), `n >= 1`.
///
/// The flat power is canonically the right-nested smash `S^1 ∧ (S^1 ∧ ...)`;
/// its tuples are the flattened nested tuples.
pub fn sphere_product(n: usize) -> Result<Arc<SmashProduct>> {
    assert!(n >= 1, "sphere_product needs n >= 1");
    limits().check_dim(n)?;
    static SPHERES: OnceLock<Mutex<HashMap<usize, Arc<SmashProduct>>>> = OnceLock::new();
    let table = SPHERES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = table.lock().expect("sphere table poisoned").get(&n) {
        return Ok(hit.clone());
    }
    let built = SmashProduct::of(&vec![circle_arc(); n])?;
    table.lock().expect("sphere table poisoned").insert(n, built.clone());
    Ok(built)
}

/// The shared `S^n`. Panics above the dimension cap; see [`simplicial_sphere`].
pub fn sphere(n: usize) -> Arc<FiniteSimplicialSet> {
    simplicial_sphere(n).expect("sphere dimension within cap")
}

/// The shared `S^n`, failing above the dimension cap.
pub fn simplicial_sphere(n: usize) -> Result<Arc<FiniteSimplicialSet>> {
    match n {
        0 => {
            static SLOT: OnceLock<Arc<FiniteSimplicialSet>> = OnceLock::new();
            Ok(shared(&SLOT, sphere0))
        }
        1 => Ok(circle_arc()),
        _ => Ok(sphere_product(n)?.set().clone()),
    }
}

/// Circle coordinates of a simplex of `S^n`, `n >= 1`; `None` on the basepoint.
pub fn sphere_coords(n: usize, s: &FormalSimplex) -> Result<Option<Vec<FormalSimplex>>> {
    if n == 1 {
        let base = s.target_dim() == 0;
        return Ok((!base).then(|| vec![s.clone()]));
    }
    Ok(sphere_product(n)?.components(s))
}

/// The simplex of `S^n` with the given circle coordinates, `n = coords.len() >= 1`.
pub fn sphere_simplex(coords: &[FormalSimplex]) -> Result<FormalSimplex> {
    if coords.len() == 1 {
        return Ok(coords[0].clone());
    }
    Ok(sphere_product(coords.len())?.normalize(coords))
}

/// The identification `S^a ∧ S^b -> S^{a+b}` concatenating coordinates.
pub fn sphere_concat(a: usize, b: usize) -> Result<SimplicialMap> {
    let prod = SmashProduct::pair(&simplicial_sphere(a)?, &simplicial_sphere(b)?)?;
    prod.map_out(simplicial_sphere(a + b)?, |comps| {
        let mut coords = sphere_coords(a, &comps[0])?.expect("non-basepoint component");
        coords.extend(sphere_coords(b, &comps[1])?.expect("non-basepoint component"));
        sphere_simplex(&coords)
    })
}
