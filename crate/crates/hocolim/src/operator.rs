//! Normal forms for composites of simplicial face and degeneracy maps.
//!
//! Every word in the generators `d_i`, `s_j` rewrites, via the five
//! simplicial identities, to a unique canonical form: a strictly
//! decreasing run of degeneracies applied after a strictly increasing
//! run of faces. Operators act on simplices, so in a composite the
//! rightmost symbol is applied first.

use std::fmt;

/// A single face (`d_i`, delete vertex `i`) or degeneracy (`s_j`,
/// repeat vertex `j`) generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpSymbol {
    Face(usize),
    Degeneracy(usize),
}

/// Error constructing an operator from raw index data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorError {
    /// Degeneracy indices must be strictly decreasing.
    WordNotDecreasing(Vec<usize>),
    /// Face indices must be strictly increasing.
    FacesNotIncreasing(Vec<usize>),
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::WordNotDecreasing(w) => {
                write!(f, "degeneracy word {:?} is not strictly decreasing", w)
            }
            OperatorError::FacesNotIncreasing(w) => {
                write!(f, "face word {:?} is not strictly increasing", w)
            }
        }
    }
}

impl std::error::Error for OperatorError {}

/// A composite of degeneracy maps `s_{j1} ∘ … ∘ s_{jp}` with
/// `j1 > … > jp`. The empty word is the identity; applying a word of
/// length `p` raises dimension by `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegeneracyWord(Vec<usize>);

impl DegeneracyWord {
    pub fn identity() -> Self {
        DegeneracyWord(Vec::new())
    }

    /// Builds a word from indices listed outermost first, checking that
    /// they strictly decrease.
    pub fn new(indices: Vec<usize>) -> Result<Self, OperatorError> {
        if indices.windows(2).all(|w| w[0] > w[1]) {
            Ok(DegeneracyWord(indices))
        } else {
            Err(OperatorError::WordNotDecreasing(indices))
        }
    }

    /// The word `s_{n-1} … s_1 s_0` collapsing an n-simplex onto a vertex.
    pub fn collapse_to_point(dim: usize) -> Self {
        DegeneracyWord((0..dim).rev().collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ∘ inner`, again a degeneracy word.
    pub fn compose(&self, inner: &DegeneracyWord) -> DegeneracyWord {
        let op = SimplicialOperator::from_degeneracies(self.clone())
            .compose(&SimplicialOperator::from_degeneracies(inner.clone()));
        debug_assert!(op.faces().is_empty());
        op.into_degeneracies()
    }

    /// Values of the order-preserving surjection `[base+len] ↠ [base]`
    /// this word encodes: position `t` repeats exactly when `t` is an
    /// index of the word.
    pub fn to_surjection(&self, base_dim: usize) -> Vec<usize> {
        let total = base_dim + self.len();
        let mut out = Vec::with_capacity(total + 1);
        let mut val = 0usize;
        out.push(0);
        for t in 0..total {
            if !self.0.contains(&t) {
                val += 1;
            }
            out.push(val);
        }
        debug_assert_eq!(val, base_dim);
        out
    }

    /// Inverse of [`DegeneracyWord::to_surjection`]: reads the repeat
    /// positions off a monotone surjective value sequence.
    pub fn from_surjection(values: &[usize]) -> DegeneracyWord {
        let mut indices: Vec<usize> = values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == w[1])
            .map(|(t, _)| t)
            .collect();
        indices.reverse();
        DegeneracyWord(indices)
    }
}

/// Canonical form of an arbitrary composite of faces and degeneracies:
/// faces `d_{i1} ∘ … ∘ d_{iq}` (strictly increasing) applied first, then
/// degeneracies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SimplicialOperator {
    degeneracies: DegeneracyWord,
    faces: Vec<usize>,
}

impl SimplicialOperator {
    pub fn identity() -> Self {
        SimplicialOperator::default()
    }

    pub fn face(i: usize) -> Self {
        SimplicialOperator {
            degeneracies: DegeneracyWord::identity(),
            faces: vec![i],
        }
    }

    pub fn degeneracy(j: usize) -> Self {
        SimplicialOperator {
            degeneracies: DegeneracyWord(vec![j]),
            faces: Vec::new(),
        }
    }

    pub fn from_degeneracies(word: DegeneracyWord) -> Self {
        SimplicialOperator {
            degeneracies: word,
            faces: Vec::new(),
        }
    }

    pub fn from_parts(
        degeneracies: DegeneracyWord,
        faces: Vec<usize>,
    ) -> Result<Self, OperatorError> {
        if faces.windows(2).all(|w| w[0] < w[1]) {
            Ok(SimplicialOperator {
                degeneracies,
                faces,
            })
        } else {
            Err(OperatorError::FacesNotIncreasing(faces))
        }
    }

    /// Normalizes a word of generators listed outermost first (the last
    /// symbol is applied first).
    pub fn normalize(symbols: &[OpSymbol]) -> Self {
        let mut acc = SimplicialOperator::identity();
        for sym in symbols.iter().rev() {
            acc = acc.left_mul(*sym);
        }
        acc
    }

    pub fn degeneracies(&self) -> &DegeneracyWord {
        &self.degeneracies
    }

    pub fn into_degeneracies(self) -> DegeneracyWord {
        self.degeneracies
    }

    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn is_identity(&self) -> bool {
        self.degeneracies.is_empty() && self.faces.is_empty()
    }

    /// Generator symbols of the normal form, outermost first.
    pub fn symbols(&self) -> Vec<OpSymbol> {
        let mut out: Vec<OpSymbol> = self
            .degeneracies
            .indices()
            .iter()
            .map(|&j| OpSymbol::Degeneracy(j))
            .collect();
        out.extend(self.faces.iter().map(|&i| OpSymbol::Face(i)));
        out
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &SimplicialOperator) -> SimplicialOperator {
        let mut acc = inner.clone();
        for sym in self.symbols().into_iter().rev() {
            acc = acc.left_mul(sym);
        }
        acc
    }

    /// Dimension change: output dim = input dim + shift.
    pub fn dim_shift(&self) -> isize {
        self.degeneracies.len() as isize - self.faces.len() as isize
    }

    /// Whether the operator can be applied to a simplex of dimension
    /// `dim` (every intermediate face and degeneracy index stays in
    /// range).
    pub fn applies_to(&self, dim: usize) -> bool {
        let mut cur = dim;
        for &i in self.faces.iter().rev() {
            if cur == 0 || i > cur {
                return false;
            }
            cur -= 1;
        }
        for &j in self.degeneracies.indices().iter().rev() {
            if j > cur {
                return false;
            }
            cur += 1;
        }
        true
    }

    pub fn output_dim(&self, input_dim: usize) -> Option<usize> {
        if self.applies_to(input_dim) {
            Some((input_dim as isize + self.dim_shift()) as usize)
        } else {
            None
        }
    }

    /// Smallest input dimension the operator applies to.
    pub fn min_input_dim(&self) -> usize {
        let mut n = 0;
        loop {
            if self.applies_to(n) {
                return n;
            }
            n += 1;
        }
    }

    fn left_mul(&self, sym: OpSymbol) -> SimplicialOperator {
        match sym {
            OpSymbol::Degeneracy(j) => SimplicialOperator {
                degeneracies: DegeneracyWord(insert_degeneracy(j, self.degeneracies.indices())),
                faces: self.faces.clone(),
            },
            OpSymbol::Face(i) => {
                let (degs, faces) = push_face(i, self.degeneracies.indices(), &self.faces);
                SimplicialOperator {
                    degeneracies: DegeneracyWord(degs),
                    faces,
                }
            }
        }
    }
}

impl fmt::Display for SimplicialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let mut parts = Vec::new();
        for &j in self.degeneracies.indices() {
            parts.push(format!("s{}", j));
        }
        for &i in &self.faces {
            parts.push(format!("d{}", i));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// `s_j ∘ (word)` renormalized, using `s_j s_e = s_{e+1} s_j` for `j ≤ e`.
fn insert_degeneracy(j: usize, word: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(word.len() + 1);
    let mut inserted = false;
    for &e in word {
        if inserted {
            out.push(e);
        } else if j > e {
            out.push(j);
            out.push(e);
            inserted = true;
        } else {
            out.push(e + 1);
        }
    }
    if !inserted {
        out.push(j);
    }
    out
}

/// `d_f ∘ (word)(faces)` renormalized. The face either cancels against a
/// degeneracy (`d_j s_j = d_{j+1} s_j = id`) or passes through and is
/// merged into the increasing face run.
fn push_face(f: usize, word: &[usize], faces: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut out_degs = Vec::with_capacity(word.len());
    let mut f = f;
    for (k, &j) in word.iter().enumerate() {
        if f < j {
            // d_f s_j = s_{j-1} d_f
            out_degs.push(j - 1);
        } else if f == j || f == j + 1 {
            out_degs.extend_from_slice(&word[k + 1..]);
            return (out_degs, faces.to_vec());
        } else {
            // d_f s_j = s_j d_{f-1}
            out_degs.push(j);
            f -= 1;
        }
    }
    // survived: insert into the increasing face run via d_f d_e = d_e d_{f+1}
    let mut out_faces = Vec::with_capacity(faces.len() + 1);
    let mut inserted = false;
    for &e in faces {
        if inserted {
            out_faces.push(e);
        } else if e > f {
            out_faces.push(f);
            out_faces.push(e);
            inserted = true;
        } else {
            out_faces.push(e);
            f += 1;
        }
    }
    if !inserted {
        out_faces.push(f);
    }
    (out_degs, out_faces)
}
