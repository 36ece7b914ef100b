//! Exhaustive enumeration of simplicial maps between small finite sets.

use std::collections::HashMap;
use std::sync::Arc;

use super::map::SimplicialMap;
use super::set::FiniteSimplicialSet;
use super::simplex::FormalSimplex;
use crate::error::{Error, Result};
use crate::limits::limits;

/// Counts candidate assignments visited across one or more enumerations.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn from_limits() -> Self {
        Budget::new(limits().budget)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn spend(&mut self, n: u64) -> Result<()> {
        self.used += n;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded { budget: self.limit });
        }
        Ok(())
    }
}

/// All pointed simplicial maps `K -> L`, without duplicates, in a fixed order.
pub fn enumerate_pointed_maps(
    k: &Arc<FiniteSimplicialSet>,
    l: &Arc<FiniteSimplicialSet>,
    budget: &mut Budget,
) -> Result<Vec<SimplicialMap>> {
    k.require_pointed("pointed map enumeration")?;
    l.require_pointed("pointed map enumeration")?;
    enumerate_maps(k, l, &HashMap::new(), budget)
}

/// All simplicial maps `K -> L` extending the `forced` images (keyed by
/// nondegenerate `(dim, id)` of `K`), preserving basepoints when both are pointed.
pub fn enumerate_maps(
    k: &Arc<FiniteSimplicialSet>,
    l: &Arc<FiniteSimplicialSet>,
    forced: &HashMap<(usize, usize), FormalSimplex>,
    budget: &mut Budget,
) -> Result<Vec<SimplicialMap>> {
    let mut forced = forced.clone();
    if let (Some(kb), Some(lb)) = (k.basepoint(), l.basepoint()) {
        let want = FormalSimplex::nondegenerate(0, lb);
        if forced.insert((0, kb), want.clone()).is_some_and(|prev| prev != want) {
            return Ok(Vec::new());
        }
    }
    let mut search = Search {
        source: k,
        target: l,
        forced: &forced,
        cells: k.cells().collect(),
        assignment: k.dims().iter().map(|&n| vec![None; n]).collect(),
        candidates: HashMap::new(),
        out: Vec::new(),
    };
    search.run(0, budget)?;
    Ok(search.out)
}

struct Search<'a> {
    source: &'a Arc<FiniteSimplicialSet>,
    target: &'a Arc<FiniteSimplicialSet>,
    forced: &'a HashMap<(usize, usize), FormalSimplex>,
    cells: Vec<(usize, usize)>,
    assignment: Vec<Vec<Option<FormalSimplex>>>,
    candidates: HashMap<usize, Vec<(FormalSimplex, Vec<FormalSimplex>)>>,
    out: Vec<SimplicialMap>,
}

impl Search<'_> {
    fn image_of(&self, s: &FormalSimplex) -> FormalSimplex {
        let img = self.assignment[s.target_dim()][s.target()].as_ref().expect("faces assigned first");
        img.pull_back(&s.surjection())
    }

    fn candidates(&mut self, d: usize) -> &[(FormalSimplex, Vec<FormalSimplex>)] {
        let target = self.target;
        self.candidates.entry(d).or_insert_with(|| {
            target
                .all_simplices(d)
                .into_iter()
                .map(|y| {
                    let faces = if d == 0 { Vec::new() } else { (0..=d).map(|i| target.face(&y, i)).collect() };
                    (y, faces)
                })
                .collect()
        })
    }

    fn run(&mut self, pos: usize, budget: &mut Budget) -> Result<()> {
        if pos == self.cells.len() {
            let images = self
                .assignment
                .iter()
                .map(|v| v.iter().map(|s| s.clone().expect("complete assignment")).collect())
                .collect();
            self.out.push(SimplicialMap::from_parts(self.source.clone(), self.target.clone(), images));
            return Ok(());
        }
        let (d, id) = self.cells[pos];
        let x = FormalSimplex::nondegenerate(d, id);
        let required: Vec<FormalSimplex> =
            if d == 0 { Vec::new() } else { (0..=d).map(|i| self.image_of(&self.source.face(&x, i))).collect() };
        if let Some(y) = self.forced.get(&(d, id)).cloned() {
            budget.spend(1)?;
            let ok = y.dim() == d
                && self.target.contains(&y)
                && (0..required.len()).all(|i| self.target.face(&y, i) == required[i]);
            if ok {
                self.assignment[d][id] = Some(y);
                self.run(pos + 1, budget)?;
                self.assignment[d][id] = None;
            }
            return Ok(());
        }
        let matching: Vec<FormalSimplex> =
            self.candidates(d).iter().filter(|(_, faces)| *faces == required).map(|(y, _)| y.clone()).collect();
        for y in matching {
            budget.spend(1)?;
            self.assignment[d][id] = Some(y);
            self.run(pos + 1, budget)?;
        }
        self.assignment[d][id] = None;
        Ok(())
    }
}
