//! JSON documents for simplicial sets, maps, spectra, cospectra and homology.
//!
//! Simplices are listed in `(dimension, id)` order everywhere, so serializing the
//! same object twice gives the same bytes.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cospectrum::TruncatedCospectrum;
use crate::error::{Error, Result};
use crate::homology::{Homology, HomologyGroup};
use crate::limits::limits;
use crate::simplicial::standard::circle_arc;
use crate::simplicial::{FiniteSimplicialSet, FormalSimplex, FormalSimplexDoc, SimplicialMap};
use crate::spectra::spectrum::suspend;
use crate::spectra::{smash_with_sset, Spectrum, SpectrumMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialSetDoc {
    pub dims: Vec<usize>,
    /// one entry per nondegenerate simplex, each listing its faces
    pub faces: Vec<Vec<FormalSimplexDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    /// one entry per nondegenerate source simplex
    pub images: Vec<FormalSimplexDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub truncation: usize,
    pub levels: Vec<SimplicialSetDoc>,
    pub structure_maps: Vec<MapDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumMapDoc {
    pub source: SpectrumDoc,
    pub target: SpectrumDoc,
    pub components: Vec<MapDoc>,
}

/// Structure map `m` runs from `X_m ∧ S^1` to `X_{m-1}`; only its components are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CospectrumDoc {
    pub degree: usize,
    pub truncation: usize,
    pub objects: Vec<SpectrumDoc>,
    pub structure_maps: Vec<Vec<MapDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroupDoc {
    pub degree: i64,
    pub rank: usize,
    /// a number when it fits in 64 bits, a decimal string otherwise
    pub torsion: Vec<serde_json::Value>,
}

fn bad(what: impl Into<String>) -> Error {
    Error::Document(what.into())
}

impl SimplicialSetDoc {
    pub fn of(x: &FiniteSimplicialSet) -> Self {
        let faces = x.cells().map(|(d, id)| x.faces_of(d, id).iter().map(FormalSimplex::to_doc).collect()).collect();
        SimplicialSetDoc { dims: x.dims(), faces, basepoint: x.basepoint() }
    }

    pub fn build(&self) -> Result<FiniteSimplicialSet> {
        if let Some(top) = self.dims.len().checked_sub(1) {
            limits().check_dim(top)?;
        }
        let total: usize = self.dims.iter().sum();
        if total != self.faces.len() {
            return Err(bad(format!("dims count {total} simplices but {} face lists are given", self.faces.len())));
        }
        let mut rest = self.faces.iter();
        let mut faces = Vec::with_capacity(self.dims.len());
        for (d, &n) in self.dims.iter().enumerate() {
            let mut here = Vec::with_capacity(n);
            for id in 0..n {
                let list = rest.next().expect("counted above");
                let expected = if d == 0 { 0 } else { d + 1 };
                if list.len() != expected {
                    return Err(bad(format!("simplex ({d}, {id}) has {} faces, expected {expected}", list.len())));
                }
                let parsed = list
                    .iter()
                    .map(|f| {
                        FormalSimplex::from_doc(d - 1, f)
                            .ok_or_else(|| bad(format!("simplex ({d}, {id}) has a malformed face {f:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                here.push(parsed);
            }
            faces.push(here);
        }
        FiniteSimplicialSet::new(faces, self.basepoint)
    }
}

impl MapDoc {
    pub fn of(f: &SimplicialMap) -> Self {
        MapDoc { images: f.images().iter().flatten().map(FormalSimplex::to_doc).collect() }
    }

    pub fn build(&self, source: Arc<FiniteSimplicialSet>, target: Arc<FiniteSimplicialSet>) -> Result<SimplicialMap> {
        if self.images.len() != source.total_count() {
            return Err(bad(format!("{} images for {} source simplices", self.images.len(), source.total_count())));
        }
        let mut rest = self.images.iter();
        let mut images = Vec::new();
        for (d, &n) in source.dims().iter().enumerate() {
            let mut here = Vec::with_capacity(n);
            for id in 0..n {
                let doc = rest.next().expect("counted above");
                here.push(
                    FormalSimplex::from_doc(d, doc)
                        .ok_or_else(|| bad(format!("image of ({d}, {id}) is malformed: {doc:?}")))?,
                );
            }
            images.push(here);
        }
        SimplicialMap::new(source, target, images)
    }
}

impl SpectrumDoc {
    pub fn of(a: &Spectrum) -> Self {
        SpectrumDoc {
            truncation: a.truncation(),
            levels: a.levels().iter().map(|l| SimplicialSetDoc::of(l)).collect(),
            structure_maps: a.structure_maps().iter().map(MapDoc::of).collect(),
        }
    }

    pub fn build(&self) -> Result<Spectrum> {
        limits().check_level(self.truncation)?;
        if self.levels.len() != self.truncation + 1 {
            return Err(bad(format!("truncation {} needs {} levels, got {}", self.truncation, self.truncation + 1, self.levels.len())));
        }
        if self.structure_maps.len() != self.truncation {
            return Err(bad(format!("truncation {} needs {} structure maps, got {}", self.truncation, self.truncation, self.structure_maps.len())));
        }
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(m, l)| l.build().map(Arc::new).map_err(|e| bad(format!("level {m}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let structure = self
            .structure_maps
            .iter()
            .enumerate()
            .map(|(m, doc)| {
                let source = suspend(&levels[m])?.set().clone();
                doc.build(source, levels[m + 1].clone()).map_err(|e| bad(format!("structure map {m}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Spectrum::new(levels, structure)
    }
}

fn components_of(f: &SpectrumMap) -> Vec<MapDoc> {
    f.components().iter().map(MapDoc::of).collect()
}

fn build_components(docs: &[MapDoc], source: Arc<Spectrum>, target: Arc<Spectrum>) -> Result<SpectrumMap> {
    if source.truncation() != target.truncation() {
        return Err(bad("source and target are at different truncations"));
    }
    if docs.len() != source.truncation() + 1 {
        return Err(bad(format!("{} components for truncation {}", docs.len(), source.truncation())));
    }
    let components = docs
        .iter()
        .enumerate()
        .map(|(m, doc)| doc.build(source.levels()[m].clone(), target.levels()[m].clone()))
        .collect::<Result<Vec<_>>>()?;
    SpectrumMap::new(source, target, components)
}

impl SpectrumMapDoc {
    pub fn of(f: &SpectrumMap) -> Self {
        SpectrumMapDoc { source: SpectrumDoc::of(f.source()), target: SpectrumDoc::of(f.target()), components: components_of(f) }
    }

    pub fn build(&self) -> Result<SpectrumMap> {
        build_components(&self.components, Arc::new(self.source.build()?), Arc::new(self.target.build()?))
    }
}

impl CospectrumDoc {
    pub fn of(x: &TruncatedCospectrum) -> Self {
        CospectrumDoc {
            degree: x.degree(),
            truncation: x.truncation(),
            objects: x.objects().iter().map(|o| SpectrumDoc::of(o)).collect(),
            structure_maps: x.structure_maps().iter().map(components_of).collect(),
        }
    }

    pub fn build(&self) -> Result<TruncatedCospectrum> {
        if self.objects.len() != self.degree + 1 {
            return Err(bad(format!("degree {} needs {} objects, got {}", self.degree, self.degree + 1, self.objects.len())));
        }
        let objects = self.objects.iter().map(|o| o.build().map(Arc::new)).collect::<Result<Vec<_>>>()?;
        if let Some(n) = objects.iter().position(|o| o.truncation() != self.truncation) {
            return Err(bad(format!("object {n} is not at truncation {}", self.truncation)));
        }
        if self.structure_maps.len() != self.degree {
            return Err(bad(format!("degree {} needs {} structure maps", self.degree, self.degree)));
        }
        let structure = self
            .structure_maps
            .iter()
            .enumerate()
            .map(|(i, docs)| {
                let source = Arc::new(smash_with_sset(&objects[i + 1], &circle_arc())?);
                build_components(docs, source, objects[i].clone())
            })
            .collect::<Result<Vec<_>>>()?;
        TruncatedCospectrum::new(objects, structure)
    }
}

/// Nonzero groups only, in increasing degree.
pub fn homology_doc(h: &Homology) -> Vec<HomologyGroupDoc> {
    h.nonzero()
        .map(|(d, g)| HomologyGroupDoc {
            degree: d,
            rank: g.rank,
            torsion: g.torsion.iter().map(number).collect(),
        })
        .collect()
}

fn number(t: &BigInt) -> serde_json::Value {
    match u64::try_from(t) {
        Ok(small) => small.into(),
        Err(_) => t.to_string().into(),
    }
}

pub fn homology_from_doc(docs: &[HomologyGroupDoc]) -> Result<Homology> {
    let mut groups = BTreeMap::new();
    for doc in docs {
        let torsion = doc
            .torsion
            .iter()
            .map(|n| {
                let text = n.as_str().map_or_else(|| n.to_string(), str::to_owned);
                text.parse::<BigInt>().map_err(|_| bad(format!("bad torsion coefficient {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if groups.insert(doc.degree, HomologyGroup { rank: doc.rank, torsion }).is_some() {
            return Err(bad(format!("degree {} listed twice", doc.degree)));
        }
    }
    Ok(Homology::from_groups(groups))
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

pub fn parse_spectrum(text: &str) -> Result<Spectrum> {
    serde_json::from_str::<SpectrumDoc>(text)?.build()
}

pub fn spectrum_to_string(a: &Spectrum) -> String {
    to_string(&SpectrumDoc::of(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cospectrum::standard_frame;
    use crate::simplicial::standard::{degree_two_map, sphere, standard_simplex};
    use crate::spectra::{canonical_lambda, free_map, free_spectrum, mapping_cone, sphere_spectrum};

    #[test]
    fn simplicial_sets_round_trip() {
        let sets = [sphere(0), sphere(2), Arc::new(standard_simplex(2).unwrap()), Arc::new(standard_simplex(3).unwrap().add_disjoint_basepoint())];
        for x in sets {
            let doc = SimplicialSetDoc::of(&x);
            let text = to_string(&doc);
            let back: SimplicialSetDoc = serde_json::from_str(&text).unwrap();
            assert_eq!(back.build().unwrap(), *x);
        }
    }

    #[test]
    fn spectra_round_trip() {
        let moore = mapping_cone(&free_map(1, &degree_two_map()).unwrap()).unwrap();
        for a in [sphere_spectrum(), free_spectrum(2, &sphere(1)).unwrap(), moore] {
            let text = spectrum_to_string(&a);
            assert_eq!(parse_spectrum(&text).unwrap(), a);
            assert_eq!(spectrum_to_string(&parse_spectrum(&text).unwrap()), text);
        }
    }

    #[test]
    fn maps_and_cospectra_round_trip() {
        let l = canonical_lambda(2).unwrap();
        let back = SpectrumMapDoc::of(&l).build().unwrap();
        assert_eq!(SpectrumMapDoc::of(&back), SpectrumMapDoc::of(&l));
        let x = standard_frame(2).unwrap();
        let doc = CospectrumDoc::of(&x);
        let text = to_string(&doc);
        let back = serde_json::from_str::<CospectrumDoc>(&text).unwrap().build().unwrap();
        assert_eq!(CospectrumDoc::of(&back), doc);
    }

    #[test]
    fn homology_round_trip() {
        let h = Homology::from_groups([(-1, HomologyGroup { rank: 2, torsion: vec![2.into(), 6.into()] }), (3, HomologyGroup::free(1))]);
        let docs = homology_doc(&h);
        let text = serde_json::to_string(&docs).unwrap();
        assert_eq!(text, r#"[{"degree":-1,"rank":2,"torsion":[2,6]},{"degree":3,"rank":1,"torsion":[]}]"#);
        let back: Vec<HomologyGroupDoc> = serde_json::from_str(&text).unwrap();
        assert_eq!(homology_from_doc(&back).unwrap(), h);
    }

    #[test]
    fn malformed_documents() {
        let mut doc = SpectrumDoc::of(&free_spectrum(1, &sphere(1)).unwrap());
        doc.structure_maps[0].images.pop();
        assert!(matches!(doc.build(), Err(Error::Document(_))));
        let mut doc = SimplicialSetDoc::of(&sphere(1));
        doc.faces[1][0].target = 7;
        assert!(doc.build().is_err());
        assert!(parse_spectrum("{").is_err());
    }
}
