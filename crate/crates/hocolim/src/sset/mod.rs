//! Finite simplicial sets presented by nondegenerate generators.
//!
//! A set is stored as one list of generators per dimension. Each
//! generator of dimension `n ≥ 1` carries `n + 1` face pointers; a face
//! pointer is a degeneracy word applied to a lower-dimensional
//! generator, so every simplex is addressed in Eilenberg-Zilber normal
//! form and equality of simplices is syntactic equality of pointers.

mod iso;
mod map;
mod product;

pub use iso::isomorphic;
pub use map::{double_mapping_cylinder, MapError, SimplicialMap};
pub use product::{cylinder, product};
pub(crate) use product::product_with_origin;

use crate::operator::{DegeneracyWord, SimplicialOperator};
use std::collections::BTreeMap;
use std::fmt;

/// Identifies one nondegenerate generator: its dimension and its index
/// in that dimension's list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

/// A (possibly degenerate) simplex, written as a degeneracy word applied
/// to a nondegenerate generator. The denoted simplex has dimension
/// `target.dim + word.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacePointer {
    pub word: DegeneracyWord,
    pub target: SimplexId,
}

impl FacePointer {
    pub fn direct(target: SimplexId) -> Self {
        FacePointer {
            word: DegeneracyWord::identity(),
            target,
        }
    }

    pub fn denoted_dim(&self) -> usize {
        self.target.dim + self.word.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct GenData {
    label: String,
    faces: Vec<FacePointer>,
}

/// Errors from structural operations on simplicial sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SsetError {
    DuplicateLabel(String),
    UnknownLabel(String),
    UnknownId(SimplexId),
    /// A generator of dimension `n ≥ 1` needs exactly `n + 1` faces.
    FaceCount {
        label: String,
        expected: usize,
        found: usize,
    },
    /// Pointer dimensions must satisfy `target.dim + |word| = n - 1`.
    PointerDimension {
        label: String,
        face: usize,
    },
    /// An operator was applied to a simplex it does not fit.
    Inapplicable {
        dim: usize,
    },
    /// The boundary matrices do not compose to zero.
    NotAComplex {
        dim: usize,
    },
}

impl fmt::Display for SsetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SsetError::DuplicateLabel(l) => write!(f, "duplicate generator label '{}'", l),
            SsetError::UnknownLabel(l) => write!(f, "unknown generator '{}'", l),
            SsetError::UnknownId(id) => write!(f, "dangling simplex id {}/{}", id.dim, id.index),
            SsetError::FaceCount {
                label,
                expected,
                found,
            } => write!(
                f,
                "generator '{}' has {} faces, expected {}",
                label, found, expected
            ),
            SsetError::PointerDimension { label, face } => {
                write!(f, "face {} of '{}' has inconsistent dimensions", face, label)
            }
            SsetError::Inapplicable { dim } => {
                write!(f, "operator does not apply at dimension {}", dim)
            }
            SsetError::NotAComplex { dim } => write!(
                f,
                "boundary composite in dimensions {}..{} is nonzero",
                dim.saturating_sub(1),
                dim
            ),
        }
    }
}

impl std::error::Error for SsetError {}

/// One violated presentation invariant, as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    FaceCount {
        gen: String,
        expected: usize,
        found: usize,
    },
    Dangling {
        gen: String,
        face: usize,
    },
    PointerDimension {
        gen: String,
        face: usize,
    },
    /// `d_i d_j = d_{j-1} d_i` failed on a generator.
    Identity {
        gen: String,
        i: usize,
        j: usize,
        left: String,
        right: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FaceCount {
                gen,
                expected,
                found,
            } => write!(f, "{}: {} faces listed, expected {}", gen, found, expected),
            Violation::Dangling { gen, face } => write!(f, "{}: face {} dangles", gen, face),
            Violation::PointerDimension { gen, face } => {
                write!(f, "{}: face {} has inconsistent dimensions", gen, face)
            }
            Violation::Identity {
                gen,
                i,
                j,
                left,
                right,
            } => write!(
                f,
                "{}: d{} d{} resolves to {} but d{} d{} resolves to {}",
                gen,
                i,
                j,
                left,
                j - 1,
                i,
                right
            ),
        }
    }
}

/// Result of checking every presentation invariant of a set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "{}", v)?;
            }
            Ok(())
        }
    }
}

/// A finite simplicial set. Values are immutable once built; every
/// operation below is a pure function of its inputs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialSet {
    dims: Vec<Vec<GenData>>,
    labels: BTreeMap<String, SimplexId>,
}

impl SimplicialSet {
    pub fn new() -> Self {
        SimplicialSet::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<SimplexId, SsetError> {
        let label = label.into();
        if self.labels.contains_key(&label) {
            return Err(SsetError::DuplicateLabel(label));
        }
        if self.dims.is_empty() {
            self.dims.push(Vec::new());
        }
        let id = SimplexId {
            dim: 0,
            index: self.dims[0].len(),
        };
        self.dims[0].push(GenData {
            label: label.clone(),
            faces: Vec::new(),
        });
        self.labels.insert(label, id);
        Ok(id)
    }

    /// Adds a generator of dimension `faces.len() - 1 ≥ 1`. Checks that
    /// the pointers exist and have consistent dimensions; the simplicial
    /// identities are checked separately by [`SimplicialSet::validate`].
    pub fn add_generator(
        &mut self,
        label: impl Into<String>,
        faces: Vec<FacePointer>,
    ) -> Result<SimplexId, SsetError> {
        let label = label.into();
        if self.labels.contains_key(&label) {
            return Err(SsetError::DuplicateLabel(label));
        }
        if faces.len() < 2 {
            return Err(SsetError::FaceCount {
                label,
                expected: 2,
                found: faces.len(),
            });
        }
        let dim = faces.len() - 1;
        for (i, fp) in faces.iter().enumerate() {
            if self.gen(fp.target).is_none() {
                return Err(SsetError::UnknownId(fp.target));
            }
            if fp.denoted_dim() != dim - 1 {
                return Err(SsetError::PointerDimension { label, face: i });
            }
        }
        while self.dims.len() <= dim {
            self.dims.push(Vec::new());
        }
        let id = SimplexId {
            dim,
            index: self.dims[dim].len(),
        };
        self.dims[dim].push(GenData {
            label: label.clone(),
            faces,
        });
        self.labels.insert(label, id);
        Ok(id)
    }

    fn gen(&self, id: SimplexId) -> Option<&GenData> {
        self.dims.get(id.dim).and_then(|v| v.get(id.index))
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.dims.iter().rposition(|v| !v.is_empty())
    }

    pub fn generator_count(&self) -> usize {
        self.dims.iter().map(|v| v.len()).sum()
    }

    /// Number of nondegenerate generators per dimension, up to the top
    /// nonempty dimension.
    pub fn counts_by_dimension(&self) -> Vec<usize> {
        match self.top_dim() {
            None => Vec::new(),
            Some(top) => self.dims[..=top].iter().map(|v| v.len()).collect(),
        }
    }

    pub fn label(&self, id: SimplexId) -> Option<&str> {
        self.gen(id).map(|g| g.label.as_str())
    }

    pub fn id_by_label(&self, label: &str) -> Option<SimplexId> {
        self.labels.get(label).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = SimplexId> + '_ {
        let n = self.dims.first().map_or(0, |v| v.len());
        (0..n).map(|index| SimplexId { dim: 0, index })
    }

    pub fn generators(&self) -> impl Iterator<Item = SimplexId> + '_ {
        self.dims.iter().enumerate().flat_map(|(dim, v)| {
            (0..v.len()).map(move |index| SimplexId { dim, index })
        })
    }

    pub fn generators_of_dim(&self, dim: usize) -> impl Iterator<Item = SimplexId> + '_ {
        let n = self.dims.get(dim).map_or(0, |v| v.len());
        (0..n).map(move |index| SimplexId { dim, index })
    }

    /// The stored pointer for `d_i` of a generator.
    pub fn stored_face(&self, id: SimplexId, i: usize) -> Result<&FacePointer, SsetError> {
        let g = self.gen(id).ok_or(SsetError::UnknownId(id))?;
        g.faces.get(i).ok_or(SsetError::Inapplicable { dim: id.dim })
    }

    /// Applies an operator to the simplex a pointer denotes and returns
    /// the normalized pointer. Faces are pushed through the pointer's
    /// degeneracy word and then resolved by recursive lookup; each
    /// lookup strictly lowers dimension, so this terminates.
    pub fn resolve(
        &self,
        op: &SimplicialOperator,
        fp: &FacePointer,
    ) -> Result<FacePointer, SsetError> {
        let total = op.compose(&SimplicialOperator::from_degeneracies(fp.word.clone()));
        self.resolve_op(total, fp.target)
    }

    pub fn resolve_face(&self, i: usize, fp: &FacePointer) -> Result<FacePointer, SsetError> {
        self.resolve(&SimplicialOperator::face(i), fp)
    }

    fn resolve_op(
        &self,
        op: SimplicialOperator,
        target: SimplexId,
    ) -> Result<FacePointer, SsetError> {
        self.gen(target).ok_or(SsetError::UnknownId(target))?;
        let dim = target.dim;
        if !op.applies_to(dim) {
            return Err(SsetError::Inapplicable { dim });
        }
        match op.faces().split_last() {
            None => Ok(FacePointer {
                word: op.into_degeneracies(),
                target,
            }),
            Some((&innermost, rest)) => {
                let stored = self.stored_face(target, innermost)?.clone();
                let outer =
                    SimplicialOperator::from_parts(op.degeneracies().clone(), rest.to_vec())
                        .expect("prefix of an increasing run is increasing");
                let combined =
                    outer.compose(&SimplicialOperator::from_degeneracies(stored.word));
                self.resolve_op(combined, stored.target)
            }
        }
    }

    /// Vertex 0 of a generator: `d_1 d_2 … d_n` applied to it.
    pub fn initial_vertex(&self, id: SimplexId) -> Result<SimplexId, SsetError> {
        let op = SimplicialOperator::from_parts(
            DegeneracyWord::identity(),
            (1..=id.dim).collect(),
        )
        .expect("increasing");
        let fp = self.resolve_op(op, id)?;
        debug_assert!(fp.word.is_empty());
        Ok(fp.target)
    }

    /// Vertex n of a generator: `d_0 … d_0` applied to it.
    pub fn terminal_vertex(&self, id: SimplexId) -> Result<SimplexId, SsetError> {
        let op = SimplicialOperator::from_parts(
            DegeneracyWord::identity(),
            (0..id.dim).collect(),
        )
        .expect("increasing");
        let fp = self.resolve_op(op, id)?;
        debug_assert!(fp.word.is_empty());
        Ok(fp.target)
    }

    /// Checks every presentation invariant: face counts, pointer
    /// targets and dimensions, and the identity
    /// `d_i d_j = d_{j-1} d_i` for all `i < j` on every generator of
    /// dimension at least 2. Violations are data, not errors.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (dim, gens) in self.dims.iter().enumerate() {
            for g in gens {
                let expected = if dim == 0 { 0 } else { dim + 1 };
                if g.faces.len() != expected {
                    report.violations.push(Violation::FaceCount {
                        gen: g.label.clone(),
                        expected,
                        found: g.faces.len(),
                    });
                    continue;
                }
                let mut structural_ok = true;
                for (i, fp) in g.faces.iter().enumerate() {
                    if self.gen(fp.target).is_none() {
                        report.violations.push(Violation::Dangling {
                            gen: g.label.clone(),
                            face: i,
                        });
                        structural_ok = false;
                    } else if fp.denoted_dim() + 1 != dim {
                        report.violations.push(Violation::PointerDimension {
                            gen: g.label.clone(),
                            face: i,
                        });
                        structural_ok = false;
                    }
                }
                if !structural_ok || dim < 2 {
                    continue;
                }
                for j in 0..=dim {
                    for i in 0..j {
                        let left = self.resolve_face(i, &g.faces[j]);
                        let right = self.resolve_face(j - 1, &g.faces[i]);
                        match (left, right) {
                            (Ok(l), Ok(r)) if l == r => {}
                            (l, r) => {
                                report.violations.push(Violation::Identity {
                                    gen: g.label.clone(),
                                    i,
                                    j,
                                    left: self.describe(&l),
                                    right: self.describe(&r),
                                });
                            }
                        }
                    }
                }
            }
        }
        report
    }

    fn describe(&self, fp: &Result<FacePointer, SsetError>) -> String {
        match fp {
            Err(e) => format!("<error: {}>", e),
            Ok(fp) => self.pointer_string(fp),
        }
    }

    /// Renders a pointer in the `s3 s1 label` form used by the text
    /// format.
    pub fn pointer_string(&self, fp: &FacePointer) -> String {
        let mut parts: Vec<String> = fp
            .word
            .indices()
            .iter()
            .map(|j| format!("s{}", j))
            .collect();
        parts.push(
            self.label(fp.target)
                .map(str::to_owned)
                .unwrap_or_else(|| format!("<{}/{}>", fp.target.dim, fp.target.index)),
        );
        parts.join(" ")
    }

    /// Picks a label not yet in use, appending `_2`, `_3`, … if needed.
    pub(crate) fn fresh_label(&self, base: &str) -> String {
        if !self.labels.contains_key(base) {
            return base.to_string();
        }
        let mut k = 2usize;
        loop {
            let cand = format!("{}_{}", base, k);
            if !self.labels.contains_key(&cand) {
                return cand;
            }
            k += 1;
        }
    }
}

/// Alternating sum of nondegenerate generator counts.
pub fn euler_char_combinatorial(k: &SimplicialSet) -> i64 {
    k.counts_by_dimension()
        .iter()
        .enumerate()
        .map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// The standard n-simplex: one generator per nonempty subset of its
/// n + 1 vertices, faces by vertex deletion.
pub fn standard_simplex(n: usize) -> SimplicialSet {
    simplex_skeleton(n, n)
}

/// The boundary of the standard n-simplex (`n ≥ 1`): every proper face,
/// omitting only the top cell.
pub fn boundary(n: usize) -> SimplicialSet {
    assert!(n >= 1, "boundary requires n >= 1");
    simplex_skeleton(n, n - 1)
}

fn simplex_skeleton(n: usize, max_dim: usize) -> SimplicialSet {
    let mut k = SimplicialSet::new();
    let mut ids: BTreeMap<Vec<usize>, SimplexId> = BTreeMap::new();
    for v in 0..=n {
        let id = k.add_vertex(format!("v{}", v)).expect("fresh");
        ids.insert(vec![v], id);
    }
    for dim in 1..=max_dim {
        for subset in subsets_of_size(n + 1, dim + 1) {
            let faces = (0..=dim)
                .map(|i| {
                    let mut sub = subset.clone();
                    sub.remove(i);
                    FacePointer::direct(ids[&sub])
                })
                .collect();
            let label = format!(
                "x{}",
                subset
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join("_")
            );
            let id = k.add_generator(label, faces).expect("consistent");
            ids.insert(subset, id);
        }
    }
    k
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// The cyclic model of the circle with `k` vertices and `k` edges; edge
/// `e_i` runs from `v_i` to `v_{i+1 mod k}`. With `k = 1` this is the
/// one-vertex loop whose both faces sit at the vertex.
pub fn circle(k: usize) -> SimplicialSet {
    assert!(k >= 1, "circle requires k >= 1");
    let mut s = SimplicialSet::new();
    let vs: Vec<SimplexId> = (0..k)
        .map(|i| s.add_vertex(format!("v{}", i)).expect("fresh"))
        .collect();
    for i in 0..k {
        // d1 = initial vertex, d0 = terminal vertex
        let faces = vec![
            FacePointer::direct(vs[(i + 1) % k]),
            FacePointer::direct(vs[i]),
        ];
        s.add_generator(format!("e{}", i), faces).expect("consistent");
    }
    s
}

/// Concatenates the generator lists of two sets, dimension by
/// dimension. Left generators keep their ids; a right generator
/// `(d, i)` moves to `(d, i + |X_d|)`. Clashing labels from the right
/// set are freshened deterministically.
pub fn disjoint_union(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
    let mut out = x.clone();
    let x_counts: Vec<usize> = (0..y.dims.len())
        .map(|d| out.dims.get(d).map_or(0, |v| v.len()))
        .collect();
    let shift = |id: SimplexId| SimplexId {
        dim: id.dim,
        index: id.index + x_counts[id.dim],
    };
    for (dim, gens) in y.dims.iter().enumerate() {
        for g in gens {
            let label = out.fresh_label(&g.label);
            if dim == 0 {
                out.add_vertex(label).expect("fresh");
            } else {
                let faces = g
                    .faces
                    .iter()
                    .map(|fp| FacePointer {
                        word: fp.word.clone(),
                        target: shift(fp.target),
                    })
                    .collect();
                out.add_generator(label, faces).expect("consistent");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<SimplicialSet>();
        assert_send_sync::<SimplicialMap>();
        assert_send_sync::<FacePointer>();
        assert_send_sync::<ValidationReport>();
        assert_send_sync::<crate::mobius::MobiusTable>();
        assert_send_sync::<crate::mobius::VertexWeights>();
        assert_send_sync::<crate::category::FiniteCategory>();
        assert_send_sync::<crate::category::DiagramOfPosets>();
        assert_send_sync::<crate::homology::BoundaryMatrix>();
        assert_send_sync::<crate::oracle::OracleReport>();
    }

    #[test]
    fn standard_simplex_counts() {
        assert_eq!(standard_simplex(2).counts_by_dimension(), vec![3, 3, 1]);
        assert_eq!(standard_simplex(3).counts_by_dimension(), vec![4, 6, 4, 1]);
        assert_eq!(standard_simplex(0).counts_by_dimension(), vec![1]);
    }

    #[test]
    fn boundary_counts_and_euler() {
        let b2 = boundary(2);
        assert_eq!(b2.counts_by_dimension(), vec![3, 3]);
        assert_eq!(euler_char_combinatorial(&b2), 0);
        assert_eq!(boundary(3).counts_by_dimension(), vec![4, 6, 4]);
        assert_eq!(boundary(1).counts_by_dimension(), vec![2]);
    }

    #[test]
    fn circle_counts() {
        assert_eq!(circle(1).counts_by_dimension(), vec![1, 1]);
        assert_eq!(circle(3).counts_by_dimension(), vec![3, 3]);
        assert_eq!(euler_char_combinatorial(&circle(2)), 0);
    }

    #[test]
    fn corpus_shapes_validate() {
        for k in [
            standard_simplex(3),
            boundary(3),
            circle(1),
            circle(3),
            disjoint_union(&standard_simplex(1), &circle(2)),
        ] {
            let report = k.validate();
            assert!(report.is_valid(), "{}", report);
        }
    }

    #[test]
    fn resolve_in_standard_simplex() {
        let d2 = standard_simplex(2);
        let top = d2.id_by_label("x0_1_2").unwrap();
        let got = d2
            .resolve_face(0, &FacePointer::direct(top))
            .unwrap();
        assert_eq!(d2.label(got.target), Some("x1_2"));
        assert!(got.word.is_empty());
        // identity operator is a no-op
        let fp = FacePointer::direct(top);
        assert_eq!(
            d2.resolve(&SimplicialOperator::identity(), &fp).unwrap(),
            fp
        );
    }

    #[test]
    fn resolve_degenerate_face_in_circle() {
        let c = circle(1);
        let e = c.id_by_label("e0").unwrap();
        let v = c.id_by_label("v0").unwrap();
        let got = c.resolve_face(0, &FacePointer::direct(e)).unwrap();
        assert_eq!(got, FacePointer::direct(v));
        // s0 e has faces: d0 (s0 e) = e, d1 (s0 e) = e, d2 (s0 e) = s0 d... check d1 s0 = id
        let degen = FacePointer {
            word: DegeneracyWord::new(vec![0]).unwrap(),
            target: e,
        };
        let f1 = c.resolve_face(1, &degen).unwrap();
        assert_eq!(f1, FacePointer::direct(e));
    }

    #[test]
    fn initial_and_terminal_vertices() {
        let d2 = standard_simplex(2);
        let top = d2.id_by_label("x0_1_2").unwrap();
        assert_eq!(
            d2.label(d2.initial_vertex(top).unwrap()),
            Some("v0")
        );
        assert_eq!(
            d2.label(d2.terminal_vertex(top).unwrap()),
            Some("v2")
        );

        let c = circle(1);
        let e = c.id_by_label("e0").unwrap();
        assert_eq!(c.initial_vertex(e).unwrap(), c.terminal_vertex(e).unwrap());

        let b2 = boundary(2);
        let e12 = b2.id_by_label("x1_2").unwrap();
        assert_eq!(b2.label(b2.initial_vertex(e12).unwrap()), Some("v1"));
    }

    #[test]
    fn corrupted_presentation_is_reported() {
        // Delta^2 with d0 and d1 of the top cell swapped.
        let mut k = SimplicialSet::new();
        let v0 = k.add_vertex("v0").unwrap();
        let v1 = k.add_vertex("v1").unwrap();
        let v2 = k.add_vertex("v2").unwrap();
        let e01 = k
            .add_generator("e01", vec![FacePointer::direct(v1), FacePointer::direct(v0)])
            .unwrap();
        let e02 = k
            .add_generator("e02", vec![FacePointer::direct(v2), FacePointer::direct(v0)])
            .unwrap();
        let e12 = k
            .add_generator("e12", vec![FacePointer::direct(v2), FacePointer::direct(v1)])
            .unwrap();
        k.add_generator(
            "t",
            vec![
                FacePointer::direct(e02), // should be e12
                FacePointer::direct(e12), // should be e02
                FacePointer::direct(e01),
            ],
        )
        .unwrap();
        let report = k.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Identity { gen, .. } if gen == "t")));
    }

    #[test]
    fn disjoint_union_adds_counts_and_freshens_labels() {
        let two_points = disjoint_union(&standard_simplex(0), &standard_simplex(0));
        assert_eq!(two_points.counts_by_dimension(), vec![2]);
        assert!(two_points.id_by_label("v0").is_some());
        assert!(two_points.id_by_label("v0_2").is_some());

        let u = disjoint_union(&standard_simplex(2), &circle(2));
        assert_eq!(u.counts_by_dimension(), vec![5, 5, 1]);
        assert!(u.validate().is_valid());
    }

    #[test]
    fn builder_rejects_inconsistent_input() {
        let mut k = SimplicialSet::new();
        let v = k.add_vertex("v").unwrap();
        assert!(matches!(
            k.add_vertex("v"),
            Err(SsetError::DuplicateLabel(_))
        ));
        // edge pointing at a missing id
        let bad = SimplexId { dim: 0, index: 7 };
        assert!(matches!(
            k.add_generator(
                "e",
                vec![FacePointer::direct(bad), FacePointer::direct(v)]
            ),
            Err(SsetError::UnknownId(_))
        ));
        // word length inconsistent with dimensions
        assert!(matches!(
            k.add_generator(
                "e",
                vec![
                    FacePointer {
                        word: DegeneracyWord::new(vec![0]).unwrap(),
                        target: v
                    },
                    FacePointer::direct(v)
                ]
            ),
            Err(SsetError::PointerDimension { .. })
        ));
    }
}
