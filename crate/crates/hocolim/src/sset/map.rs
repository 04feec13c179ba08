//! Simplicial maps and the double mapping cylinder.

use super::{product_with_origin, FacePointer, SimplexId, SimplicialSet, SsetError};
use crate::operator::DegeneracyWord;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    MissingAssignment { gen: String },
    Dangling { gen: String },
    DimensionMismatch { gen: String },
    /// The assignment fails `f(d_i σ) = d_i f(σ)`.
    DoesNotCommute {
        gen: String,
        face: usize,
        left: String,
        right: String,
    },
    /// The two maps of a double mapping cylinder must share a source.
    SourceMismatch,
    Sset(SsetError),
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::MissingAssignment { gen } => {
                write!(f, "no image assigned to generator '{}'", gen)
            }
            MapError::Dangling { gen } => write!(f, "image of '{}' is not in the target", gen),
            MapError::DimensionMismatch { gen } => {
                write!(f, "image of '{}' has the wrong dimension", gen)
            }
            MapError::DoesNotCommute {
                gen,
                face,
                left,
                right,
            } => write!(
                f,
                "map does not commute with d{} on '{}': image of face is {}, face of image is {}",
                face, gen, left, right
            ),
            MapError::SourceMismatch => write!(f, "the two maps have different sources"),
            MapError::Sset(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for MapError {}

impl From<SsetError> for MapError {
    fn from(e: SsetError) -> Self {
        MapError::Sset(e)
    }
}

/// A map of simplicial sets, given on nondegenerate generators. The
/// constructor checks compatibility with every face; compatibility with
/// degeneracies is then automatic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialSet,
    target: SimplicialSet,
    assignment: Vec<Vec<FacePointer>>,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialSet,
        target: SimplicialSet,
        assignment: BTreeMap<SimplexId, FacePointer>,
    ) -> Result<Self, MapError> {
        let mut table: Vec<Vec<FacePointer>> = Vec::new();
        for id in source.generators() {
            let gen = source.label(id).unwrap_or("?").to_string();
            let fp = assignment
                .get(&id)
                .ok_or(MapError::MissingAssignment { gen: gen.clone() })?;
            if target.label(fp.target).is_none() {
                return Err(MapError::Dangling { gen });
            }
            if fp.denoted_dim() != id.dim {
                return Err(MapError::DimensionMismatch { gen });
            }
            while table.len() <= id.dim {
                table.push(Vec::new());
            }
            table[id.dim].push(fp.clone());
        }
        let map = SimplicialMap {
            source,
            target,
            assignment: table,
        };
        map.check_commutes()?;
        Ok(map)
    }

    fn check_commutes(&self) -> Result<(), MapError> {
        for id in self.source.generators() {
            if id.dim == 0 {
                continue;
            }
            for i in 0..=id.dim {
                let face = self.source.stored_face(id, i)?.clone();
                let image_of_face = self.apply(&face);
                let face_of_image = self
                    .target
                    .resolve_face(i, self.image(id))?;
                if image_of_face != face_of_image {
                    return Err(MapError::DoesNotCommute {
                        gen: self.source.label(id).unwrap_or("?").to_string(),
                        face: i,
                        left: self.target.pointer_string(&image_of_face),
                        right: self.target.pointer_string(&face_of_image),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &SimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &SimplicialSet {
        &self.target
    }

    /// Image pointer of a nondegenerate source generator.
    pub fn image(&self, id: SimplexId) -> &FacePointer {
        &self.assignment[id.dim][id.index]
    }

    /// Image of an arbitrary simplex of the source, written as a pointer.
    pub fn apply(&self, fp: &FacePointer) -> FacePointer {
        let img = self.image(fp.target);
        FacePointer {
            word: fp.word.compose(&img.word),
            target: img.target,
        }
    }

    /// The map sending every label of `source` to the same label in
    /// `target`; fails unless that assignment is a simplicial map.
    pub fn inclusion_by_labels(
        source: &SimplicialSet,
        target: &SimplicialSet,
    ) -> Result<Self, MapError> {
        let mut assignment = BTreeMap::new();
        for id in source.generators() {
            let label = source.label(id).unwrap();
            let t = target
                .id_by_label(label)
                .ok_or(MapError::Dangling {
                    gen: label.to_string(),
                })?;
            assignment.insert(id, FacePointer::direct(t));
        }
        SimplicialMap::new(source.clone(), target.clone(), assignment)
    }

    /// Collapses everything onto one vertex of the target.
    pub fn collapse_to_vertex(
        source: &SimplicialSet,
        target: &SimplicialSet,
        vertex: SimplexId,
    ) -> Result<Self, MapError> {
        let mut assignment = BTreeMap::new();
        for id in source.generators() {
            assignment.insert(
                id,
                FacePointer {
                    word: DegeneracyWord::collapse_to_point(id.dim),
                    target: vertex,
                },
            );
        }
        SimplicialMap::new(source.clone(), target.clone(), assignment)
    }
}

/// The double mapping cylinder of `B ←f– A –g→ C`: the prism `A × Δ¹`
/// glued to `B` and `C` along its two ends. The end generators are
/// dropped from the presentation and every pointer into them is
/// rerouted through `f` or `g`, re-resolving degeneracy words in the
/// codomain.
pub fn double_mapping_cylinder(
    f: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<SimplicialSet, MapError> {
    if f.source() != g.source() {
        return Err(MapError::SourceMismatch);
    }
    let a = f.source();
    let interval = super::standard_simplex(1);
    let v0 = interval.id_by_label("v0").unwrap();
    let v1 = interval.id_by_label("v1").unwrap();
    let (prism, origins) = product_with_origin(a, &interval);

    // End generators are exactly the pairs whose interval factor is a
    // vertex; joint injectivity forces the other factor to carry the
    // identity surjection.
    let mut end: BTreeMap<SimplexId, (bool, SimplexId)> = BTreeMap::new();
    for (dim, bucket) in origins.iter().enumerate() {
        for (index, origin) in bucket.iter().enumerate() {
            let id = SimplexId { dim, index };
            if origin.y == v0 {
                end.insert(id, (false, origin.x));
            } else if origin.y == v1 {
                end.insert(id, (true, origin.x));
            }
        }
    }

    let mut out = SimplicialSet::new();
    let mut b_ids: BTreeMap<SimplexId, SimplexId> = BTreeMap::new();
    let mut c_ids: BTreeMap<SimplexId, SimplexId> = BTreeMap::new();
    let mut p_ids: BTreeMap<SimplexId, SimplexId> = BTreeMap::new();

    let reroute = |fp: &FacePointer,
                   out_ids_b: &BTreeMap<SimplexId, SimplexId>,
                   out_ids_c: &BTreeMap<SimplexId, SimplexId>,
                   out_ids_p: &BTreeMap<SimplexId, SimplexId>|
     -> FacePointer {
        match end.get(&fp.target) {
            None => FacePointer {
                word: fp.word.clone(),
                target: out_ids_p[&fp.target],
            },
            Some((through_g, a_gen)) => {
                let img = if *through_g {
                    g.image(*a_gen)
                } else {
                    f.image(*a_gen)
                };
                let ids = if *through_g { out_ids_c } else { out_ids_b };
                FacePointer {
                    word: fp.word.compose(&img.word),
                    target: ids[&img.target],
                }
            }
        }
    };

    // Dimension by dimension so that face targets are present before the
    // generators that reference them.
    let top = [
        f.target().top_dim(),
        g.target().top_dim(),
        prism.top_dim(),
    ]
    .into_iter()
    .flatten()
    .max();
    let Some(top) = top else {
        return Ok(out);
    };
    for dim in 0..=top {
        for id in f.target().generators_of_dim(dim) {
            let label = out.fresh_label(f.target().label(id).unwrap());
            let new = if dim == 0 {
                out.add_vertex(label)?
            } else {
                let faces = (0..=dim)
                    .map(|i| {
                        let fp = f.target().stored_face(id, i).expect("validated");
                        FacePointer {
                            word: fp.word.clone(),
                            target: b_ids[&fp.target],
                        }
                    })
                    .collect();
                out.add_generator(label, faces)?
            };
            b_ids.insert(id, new);
        }
        for id in g.target().generators_of_dim(dim) {
            let label = out.fresh_label(g.target().label(id).unwrap());
            let new = if dim == 0 {
                out.add_vertex(label)?
            } else {
                let faces = (0..=dim)
                    .map(|i| {
                        let fp = g.target().stored_face(id, i).expect("validated");
                        FacePointer {
                            word: fp.word.clone(),
                            target: c_ids[&fp.target],
                        }
                    })
                    .collect();
                out.add_generator(label, faces)?
            };
            c_ids.insert(id, new);
        }
        for id in prism.generators_of_dim(dim) {
            if end.contains_key(&id) {
                continue;
            }
            let label = out.fresh_label(prism.label(id).unwrap());
            let new = if dim == 0 {
                out.add_vertex(label)?
            } else {
                let faces = (0..=dim)
                    .map(|i| {
                        let fp = prism.stored_face(id, i).expect("validated");
                        reroute(fp, &b_ids, &c_ids, &p_ids)
                    })
                    .collect();
                out.add_generator(label, faces)?
            };
            p_ids.insert(id, new);
        }
    }
    Ok(out)
}
