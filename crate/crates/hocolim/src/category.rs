//! Finite categories, posets, nerves, and the total category of a
//! poset-valued diagram.
//!
//! Categories are given by explicit composition tables on nonidentity
//! morphisms; identities are implicit. The nerve has finitely many
//! nondegenerate simplices exactly when the category has no nonidentity
//! endomorphism and no cycle of nonidentity morphisms, which the nerve
//! constructor checks up front and reports with a witness.

use crate::operator::DegeneracyWord;
use crate::sset::{FacePointer, SimplexId, SimplicialSet};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId(pub usize);

/// A composition result: either an identity or a named nonidentity
/// morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arrow {
    Id(ObjId),
    Mor(MorId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct MorData {
    name: String,
    src: ObjId,
    dst: ObjId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryError {
    DuplicateName(String),
    UnknownObject(String),
    UnknownMorphism(String),
    NotComposable { g: String, f: String },
    DuplicateComposite { g: String, f: String },
    MissingComposite { g: String, f: String },
    /// `g ∘ f` recorded with endpoints other than src(f) → dst(g).
    BadCompositeEndpoints { g: String, f: String },
    NotAssociative { h: String, g: String, f: String },
    NotNerveFinite(NerveWitness),
}

/// Why a category fails the finiteness condition for its nerve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NerveWitness {
    Endomorphism { morphism: String },
    Cycle { objects: Vec<String> },
}

impl fmt::Display for CategoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryError::DuplicateName(n) => write!(f, "duplicate name '{}'", n),
            CategoryError::UnknownObject(n) => write!(f, "unknown object '{}'", n),
            CategoryError::UnknownMorphism(n) => write!(f, "unknown morphism '{}'", n),
            CategoryError::NotComposable { g, f: ff } => {
                write!(f, "'{}' and '{}' are not composable", g, ff)
            }
            CategoryError::DuplicateComposite { g, f: ff } => {
                write!(f, "composite '{} * {}' given twice", g, ff)
            }
            CategoryError::MissingComposite { g, f: ff } => {
                write!(f, "no composite given for '{} * {}'", g, ff)
            }
            CategoryError::BadCompositeEndpoints { g, f: ff } => {
                write!(f, "composite '{} * {}' has wrong endpoints", g, ff)
            }
            CategoryError::NotAssociative { h, g, f: ff } => {
                write!(f, "composition is not associative on '{}', '{}', '{}'", h, g, ff)
            }
            CategoryError::NotNerveFinite(w) => match w {
                NerveWitness::Endomorphism { morphism } => {
                    write!(f, "nonidentity endomorphism '{}'", morphism)
                }
                NerveWitness::Cycle { objects } => {
                    write!(f, "cycle of nonidentity morphisms through {}", objects.join(" -> "))
                }
            },
        }
    }
}

impl std::error::Error for CategoryError {}

/// A finite category: objects, nonidentity morphisms, and a total
/// composition table on composable nonidentity pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    mors: Vec<MorData>,
    comp: BTreeMap<(MorId, MorId), Arrow>,
    names: BTreeMap<String, usize>,
}

impl FiniteCategory {
    pub fn new(objects: Vec<String>) -> Result<Self, CategoryError> {
        let mut names = BTreeMap::new();
        for (i, o) in objects.iter().enumerate() {
            if names.insert(o.clone(), i).is_some() {
                return Err(CategoryError::DuplicateName(o.clone()));
            }
        }
        Ok(FiniteCategory {
            objects,
            mors: Vec::new(),
            comp: BTreeMap::new(),
            names,
        })
    }

    pub fn add_morphism(
        &mut self,
        name: impl Into<String>,
        src: ObjId,
        dst: ObjId,
    ) -> Result<MorId, CategoryError> {
        let name = name.into();
        if self.names.contains_key(&name) {
            return Err(CategoryError::DuplicateName(name));
        }
        if src.0 >= self.objects.len() {
            return Err(CategoryError::UnknownObject(format!("#{}", src.0)));
        }
        if dst.0 >= self.objects.len() {
            return Err(CategoryError::UnknownObject(format!("#{}", dst.0)));
        }
        let id = MorId(self.mors.len());
        self.names.insert(name.clone(), id.0);
        self.mors.push(MorData { name, src, dst });
        Ok(id)
    }

    /// Records `g ∘ f = result` for a composable nonidentity pair.
    pub fn set_composite(
        &mut self,
        g: MorId,
        f: MorId,
        result: Arrow,
    ) -> Result<(), CategoryError> {
        if self.mor_dst(f) != self.mor_src(g) {
            return Err(CategoryError::NotComposable {
                g: self.mor_name(g).to_string(),
                f: self.mor_name(f).to_string(),
            });
        }
        if self.comp.insert((g, f), result).is_some() {
            return Err(CategoryError::DuplicateComposite {
                g: self.mor_name(g).to_string(),
                f: self.mor_name(f).to_string(),
            });
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_name(&self, o: ObjId) -> &str {
        &self.objects[o.0]
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        let idx = *self.names.get(name)?;
        if self.objects.get(idx).map(String::as_str) == Some(name) {
            Some(ObjId(idx))
        } else {
            None
        }
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphism_count(&self) -> usize {
        self.mors.len()
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        (0..self.mors.len()).map(MorId)
    }

    pub fn mor_name(&self, m: MorId) -> &str {
        &self.mors[m.0].name
    }

    pub fn mor_src(&self, m: MorId) -> ObjId {
        self.mors[m.0].src
    }

    pub fn mor_dst(&self, m: MorId) -> ObjId {
        self.mors[m.0].dst
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<MorId> {
        let idx = *self.names.get(name)?;
        if self.mors.get(idx).map(|m| m.name.as_str()) == Some(name) {
            Some(MorId(idx))
        } else {
            None
        }
    }

    fn arrow_src(&self, a: Arrow) -> ObjId {
        match a {
            Arrow::Id(o) => o,
            Arrow::Mor(m) => self.mor_src(m),
        }
    }

    fn arrow_dst(&self, a: Arrow) -> ObjId {
        match a {
            Arrow::Id(o) => o,
            Arrow::Mor(m) => self.mor_dst(m),
        }
    }

    /// `g ∘ f` with identity absorption; errors if the table misses a
    /// composable nonidentity pair.
    pub fn compose(&self, g: Arrow, f: Arrow) -> Result<Arrow, CategoryError> {
        if self.arrow_dst(f) != self.arrow_src(g) {
            return Err(CategoryError::NotComposable {
                g: self.arrow_name(g),
                f: self.arrow_name(f),
            });
        }
        match (g, f) {
            (Arrow::Id(_), x) => Ok(x),
            (x, Arrow::Id(_)) => Ok(x),
            (Arrow::Mor(g), Arrow::Mor(f)) => {
                self.comp
                    .get(&(g, f))
                    .copied()
                    .ok_or(CategoryError::MissingComposite {
                        g: self.mor_name(g).to_string(),
                        f: self.mor_name(f).to_string(),
                    })
            }
        }
    }

    fn arrow_name(&self, a: Arrow) -> String {
        match a {
            Arrow::Id(o) => format!("id_{}", self.object_name(o)),
            Arrow::Mor(m) => self.mor_name(m).to_string(),
        }
    }

    /// Checks totality and endpoints of the composition table and
    /// associativity over all composable triples. Unit laws hold by
    /// construction since identities are implicit.
    pub fn validate(&self) -> Result<(), CategoryError> {
        for g in self.morphisms() {
            for f in self.morphisms() {
                if self.mor_dst(f) != self.mor_src(g) {
                    continue;
                }
                let c = self
                    .comp
                    .get(&(g, f))
                    .copied()
                    .ok_or(CategoryError::MissingComposite {
                        g: self.mor_name(g).to_string(),
                        f: self.mor_name(f).to_string(),
                    })?;
                if self.arrow_src(c) != self.mor_src(f) || self.arrow_dst(c) != self.mor_dst(g) {
                    return Err(CategoryError::BadCompositeEndpoints {
                        g: self.mor_name(g).to_string(),
                        f: self.mor_name(f).to_string(),
                    });
                }
            }
        }
        for h in self.morphisms() {
            for g in self.morphisms() {
                if self.mor_dst(g) != self.mor_src(h) {
                    continue;
                }
                for f in self.morphisms() {
                    if self.mor_dst(f) != self.mor_src(g) {
                        continue;
                    }
                    let gf = self.compose(Arrow::Mor(g), Arrow::Mor(f))?;
                    let hg = self.compose(Arrow::Mor(h), Arrow::Mor(g))?;
                    if self.compose(Arrow::Mor(h), gf)? != self.compose(hg, Arrow::Mor(f))? {
                        return Err(CategoryError::NotAssociative {
                            h: self.mor_name(h).to_string(),
                            g: self.mor_name(g).to_string(),
                            f: self.mor_name(f).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The nerve is finite iff there is no nonidentity endomorphism and
    /// no directed cycle of nonidentity morphisms.
    pub fn check_nerve_finite(&self) -> Result<(), NerveWitness> {
        for m in self.morphisms() {
            if self.mor_src(m) == self.mor_dst(m) {
                return Err(NerveWitness::Endomorphism {
                    morphism: self.mor_name(m).to_string(),
                });
            }
        }
        // depth-first search for a directed cycle
        let n = self.objects.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for m in self.morphisms() {
            succ[self.mor_src(m).0].push(self.mor_dst(m).0);
        }
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            White,
            Gray,
            Black,
        }
        let mut mark = vec![Mark::White; n];
        let mut stack_path: Vec<usize> = Vec::new();
        fn dfs(
            v: usize,
            succ: &[Vec<usize>],
            mark: &mut [Mark],
            path: &mut Vec<usize>,
        ) -> Option<Vec<usize>> {
            mark[v] = Mark::Gray;
            path.push(v);
            for &w in &succ[v] {
                match mark[w] {
                    Mark::Gray => {
                        let start = path.iter().position(|&x| x == w).unwrap();
                        let mut cycle = path[start..].to_vec();
                        cycle.push(w);
                        return Some(cycle);
                    }
                    Mark::White => {
                        if let Some(c) = dfs(w, succ, mark, path) {
                            return Some(c);
                        }
                    }
                    Mark::Black => {}
                }
            }
            path.pop();
            mark[v] = Mark::Black;
            None
        }
        for v in 0..n {
            if mark[v] == Mark::White {
                if let Some(cycle) = dfs(v, &succ, &mut mark, &mut stack_path) {
                    return Err(NerveWitness::Cycle {
                        objects: cycle
                            .into_iter()
                            .map(|i| self.objects[i].clone())
                            .collect(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn composites(&self) -> impl Iterator<Item = (MorId, MorId, Arrow)> + '_ {
        self.comp.iter().map(|(&(g, f), &a)| (g, f, a))
    }
}

/// The nerve of a validated, nerve-finite category: one vertex per
/// object, one nondegenerate n-simplex per chain of n composable
/// nonidentity morphisms. Face 0 drops the first arrow, face n the
/// last, and inner faces compose; a composite that collapses to an
/// identity produces a degenerate face pointer.
pub fn nerve(c: &FiniteCategory) -> Result<SimplicialSet, CategoryError> {
    c.validate()?;
    c.check_nerve_finite().map_err(CategoryError::NotNerveFinite)?;

    let mut out = SimplicialSet::new();
    let mut vertex_ids = Vec::new();
    for o in c.objects() {
        let label = out.fresh_label(c.object_name(o));
        vertex_ids.push(out.add_vertex(label).expect("fresh"));
    }
    let mut chain_ids: HashMap<Vec<MorId>, SimplexId> = HashMap::new();
    let mut current: Vec<Vec<MorId>> = c.morphisms().map(|m| vec![m]).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for chain in &current {
            let n = chain.len();
            let faces: Vec<FacePointer> = (0..=n)
                .map(|i| nerve_face(c, chain, i, &vertex_ids, &chain_ids))
                .collect();
            let label = out.fresh_label(
                &chain
                    .iter()
                    .map(|&m| c.mor_name(m).to_string())
                    .collect::<Vec<_>>()
                    .join("_"),
            );
            let id = out.add_generator(label, faces).expect("consistent");
            chain_ids.insert(chain.clone(), id);
            for m in c.morphisms() {
                if c.mor_src(m) == c.mor_dst(*chain.last().unwrap()) {
                    let mut longer = chain.clone();
                    longer.push(m);
                    next.push(longer);
                }
            }
        }
        current = next;
    }
    Ok(out)
}

fn nerve_face(
    c: &FiniteCategory,
    chain: &[MorId],
    i: usize,
    vertex_ids: &[SimplexId],
    chain_ids: &HashMap<Vec<MorId>, SimplexId>,
) -> FacePointer {
    let n = chain.len();
    if n == 1 {
        let m = chain[0];
        let v = if i == 0 { c.mor_dst(m) } else { c.mor_src(m) };
        return FacePointer::direct(vertex_ids[v.0]);
    }
    if i == 0 {
        return FacePointer::direct(chain_ids[&chain[1..].to_vec()]);
    }
    if i == n {
        return FacePointer::direct(chain_ids[&chain[..n - 1].to_vec()]);
    }
    let composite = c
        .compose(Arrow::Mor(chain[i]), Arrow::Mor(chain[i - 1]))
        .expect("validated");
    match composite {
        Arrow::Mor(m) => {
            let mut shorter: Vec<MorId> = chain[..i - 1].to_vec();
            shorter.push(m);
            shorter.extend_from_slice(&chain[i + 1..]);
            FacePointer::direct(chain_ids[&shorter])
        }
        Arrow::Id(_) => {
            // the composed chain carries an identity in slot i: it is the
            // degeneracy s_{i-1} of the chain with that slot removed
            let mut shorter: Vec<MorId> = chain[..i - 1].to_vec();
            shorter.extend_from_slice(&chain[i + 1..]);
            FacePointer {
                word: DegeneracyWord::new(vec![i - 1]).expect("single index"),
                target: chain_ids[&shorter],
            }
        }
    }
}

/// A finite poset with its full order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    DuplicateElement(String),
    UnknownElement(String),
    /// Two distinct elements below each other.
    Antisymmetry { a: String, b: String },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::DuplicateElement(e) => write!(f, "duplicate element '{}'", e),
            PosetError::UnknownElement(e) => write!(f, "unknown element '{}'", e),
            PosetError::Antisymmetry { a, b } => {
                write!(f, "antisymmetry fails: '{}' < '{}' < '{}'", a, b, a)
            }
        }
    }
}

impl std::error::Error for PosetError {}

impl Poset {
    /// Builds a poset from generating relations: the order is the
    /// reflexive-transitive closure of the given pairs, and
    /// antisymmetry of the closure is checked.
    pub fn new(elements: Vec<String>, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = elements.len();
        {
            let mut seen = BTreeMap::new();
            for (i, e) in elements.iter().enumerate() {
                if seen.insert(e.clone(), i).is_some() {
                    return Err(PosetError::DuplicateElement(e.clone()));
                }
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in relations {
            if a >= n {
                return Err(PosetError::UnknownElement(format!("#{}", a)));
            }
            if b >= n {
                return Err(PosetError::UnknownElement(format!("#{}", b)));
            }
            leq[a][b] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i][j] && leq[j][i] {
                    return Err(PosetError::Antisymmetry {
                        a: elements[i].clone(),
                        b: elements[j].clone(),
                    });
                }
            }
        }
        Ok(Poset { elements, leq })
    }

    pub fn chain(labels: Vec<String>) -> Self {
        let n = labels.len();
        let rels: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(labels, &rels).expect("a chain is a poset")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Strict covering pairs: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.le(a, b) {
                    continue;
                }
                let between = (0..n)
                    .any(|c| c != a && c != b && self.le(a, c) && self.le(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Element indices in an order compatible with the relation.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut remaining: Vec<usize> = (0..n).collect();
        let mut out = Vec::with_capacity(n);
        while !remaining.is_empty() {
            let pos = remaining
                .iter()
                .position(|&x| {
                    remaining
                        .iter()
                        .all(|&y| y == x || !self.le(y, x))
                })
                .expect("finite posets have minimal elements");
            out.push(remaining.remove(pos));
        }
        out
    }

    /// Restriction to a subset of element indices (ascending order).
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let elements = subset.iter().map(|&i| self.elements[i].clone()).collect();
        let n = subset.len();
        let mut leq = vec![vec![false; n]; n];
        for (a, &i) in subset.iter().enumerate() {
            for (b, &j) in subset.iter().enumerate() {
                leq[a][b] = self.le(i, j);
            }
        }
        Poset { elements, leq }
    }
}

/// The category with one morphism per strict related pair.
/// Generated morphism names follow `src__dst` (freshened on clash).
pub fn poset_as_category(p: &Poset) -> FiniteCategory {
    let mut c = FiniteCategory::new(p.elements().to_vec()).expect("unique elements");
    let mut ids: BTreeMap<(usize, usize), MorId> = BTreeMap::new();
    for a in 0..p.len() {
        for b in 0..p.len() {
            if a != b && p.le(a, b) {
                let base = format!("{}__{}", p.element(a), p.element(b));
                let name = fresh_name(&c, &base);
                let id = c.add_morphism(name, ObjId(a), ObjId(b)).expect("fresh");
                ids.insert((a, b), id);
            }
        }
    }
    let pairs: Vec<((usize, usize), MorId)> = ids.iter().map(|(&k, &v)| (k, v)).collect();
    for &((a, b), f) in &pairs {
        for &((b2, c2), g) in &pairs {
            if b == b2 {
                let h = ids[&(a, c2)];
                c.set_composite(g, f, Arrow::Mor(h)).expect("composable");
            }
        }
    }
    c
}

fn fresh_name(c: &FiniteCategory, base: &str) -> String {
    if !c.names.contains_key(base) {
        return base.to_string();
    }
    let mut k = 2usize;
    loop {
        let cand = format!("{}_{}", base, k);
        if !c.names.contains_key(&cand) {
            return cand;
        }
        k += 1;
    }
}

/// Reports the first order-reversed pair of a would-be monotone map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneWitness {
    pub x: String,
    pub y: String,
}

impl fmt::Display for MonotoneWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "'{}' <= '{}' but the images are not ordered", self.x, self.y)
    }
}

/// Checks that `map` (indices into `q` per element of `p`) preserves
/// order.
pub fn monotone_map_check(map: &[usize], p: &Poset, q: &Poset) -> Result<(), MonotoneWitness> {
    for a in 0..p.len() {
        for b in 0..p.len() {
            if p.le(a, b) && !q.le(map[a], map[b]) {
                return Err(MonotoneWitness {
                    x: p.element(a).to_string(),
                    y: p.element(b).to_string(),
                });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    FiberCount { expected: usize, found: usize },
    MissingTransition { morphism: String },
    TransitionLength { morphism: String },
    TransitionRange { morphism: String },
    NotMonotone { morphism: String, witness: MonotoneWitness },
    /// `transition(g ∘ f)` differs from `transition(g) ∘ transition(f)`.
    NotFunctorial { g: String, f: String },
    Category(CategoryError),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::FiberCount { expected, found } => {
                write!(f, "{} fibers given, expected {}", found, expected)
            }
            DiagramError::MissingTransition { morphism } => {
                write!(f, "no transition for morphism '{}'", morphism)
            }
            DiagramError::TransitionLength { morphism } => {
                write!(f, "transition for '{}' has the wrong length", morphism)
            }
            DiagramError::TransitionRange { morphism } => {
                write!(f, "transition for '{}' maps outside its target fiber", morphism)
            }
            DiagramError::NotMonotone { morphism, witness } => {
                write!(f, "transition for '{}' is not monotone: {}", morphism, witness)
            }
            DiagramError::NotFunctorial { g, f: ff } => {
                write!(f, "transitions do not compose along '{} * {}'", g, ff)
            }
            DiagramError::Category(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for DiagramError {}

impl From<CategoryError> for DiagramError {
    fn from(e: CategoryError) -> Self {
        DiagramError::Category(e)
    }
}

/// A functor from a finite index category to posets and monotone maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramOfPosets {
    index: FiniteCategory,
    fibers: Vec<Poset>,
    transitions: BTreeMap<MorId, Vec<usize>>,
}

impl DiagramOfPosets {
    pub fn new(
        index: FiniteCategory,
        fibers: Vec<Poset>,
        transitions: BTreeMap<MorId, Vec<usize>>,
    ) -> Result<Self, DiagramError> {
        index.validate()?;
        if fibers.len() != index.object_count() {
            return Err(DiagramError::FiberCount {
                expected: index.object_count(),
                found: fibers.len(),
            });
        }
        for m in index.morphisms() {
            let name = index.mor_name(m).to_string();
            let t = transitions
                .get(&m)
                .ok_or(DiagramError::MissingTransition {
                    morphism: name.clone(),
                })?;
            let src = &fibers[index.mor_src(m).0];
            let dst = &fibers[index.mor_dst(m).0];
            if t.len() != src.len() {
                return Err(DiagramError::TransitionLength { morphism: name });
            }
            if t.iter().any(|&x| x >= dst.len()) {
                return Err(DiagramError::TransitionRange { morphism: name });
            }
            monotone_map_check(t, src, dst).map_err(|witness| DiagramError::NotMonotone {
                morphism: name,
                witness,
            })?;
        }
        for (g, f, c) in index.composites() {
            let tf = &transitions[&f];
            let tg = &transitions[&g];
            let composed: Vec<usize> = tf.iter().map(|&x| tg[x]).collect();
            let expected: Vec<usize> = match c {
                Arrow::Mor(h) => transitions[&h].clone(),
                Arrow::Id(_) => (0..composed.len()).collect(),
            };
            if composed != expected {
                return Err(DiagramError::NotFunctorial {
                    g: index.mor_name(g).to_string(),
                    f: index.mor_name(f).to_string(),
                });
            }
        }
        Ok(DiagramOfPosets {
            index,
            fibers,
            transitions,
        })
    }

    pub fn index(&self) -> &FiniteCategory {
        &self.index
    }

    pub fn fiber(&self, o: ObjId) -> &Poset {
        &self.fibers[o.0]
    }

    pub fn fibers(&self) -> &[Poset] {
        &self.fibers
    }

    pub fn transition(&self, m: MorId) -> &[usize] {
        &self.transitions[&m]
    }
}

/// The total category of a poset-valued diagram: objects are pairs of
/// an index object and a fiber element; a morphism `(c,p) → (c',p')`
/// is an index arrow `φ: c → c'` with `transition(φ)(p) ≤ p'`. The
/// result is nerve-finite whenever the index is.
pub fn grothendieck(d: &DiagramOfPosets) -> Result<FiniteCategory, CategoryError> {
    let index = d.index();
    let mut names = Vec::new();
    let mut pair_ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in index.objects() {
        for p in 0..d.fiber(c).len() {
            pair_ids.insert((c.0, p), names.len());
            names.push(format!("{}__{}", index.object_name(c), d.fiber(c).element(p)));
        }
    }
    // names might collide across fibers; freshen deterministically
    {
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        for name in names.iter_mut() {
            match seen.get_mut(name.as_str()) {
                None => {
                    seen.insert(name.clone(), 1);
                }
                Some(count) => {
                    *count += 1;
                    *name = format!("{}_{}", name, count);
                }
            }
        }
    }
    let mut total = FiniteCategory::new(names)?;

    // fiber morphisms: identity index arrow, strictly related elements
    let mut fiber_mor: BTreeMap<(usize, usize, usize), MorId> = BTreeMap::new();
    // index-arrow morphisms: (morphism, src element, dst element)
    let mut trans_mor: BTreeMap<(usize, usize, usize), MorId> = BTreeMap::new();

    for c in index.objects() {
        let fib = d.fiber(c);
        for p in 0..fib.len() {
            for q in 0..fib.len() {
                if p != q && fib.le(p, q) {
                    let base = format!(
                        "{}__{}__{}",
                        index.object_name(c),
                        fib.element(p),
                        fib.element(q)
                    );
                    let name = fresh_name(&total, &base);
                    let src = ObjId(pair_ids[&(c.0, p)]);
                    let dst = ObjId(pair_ids[&(c.0, q)]);
                    let id = total.add_morphism(name, src, dst)?;
                    fiber_mor.insert((c.0, p, q), id);
                }
            }
        }
    }
    for m in index.morphisms() {
        let (cs, cd) = (index.mor_src(m), index.mor_dst(m));
        let t = d.transition(m);
        for p in 0..d.fiber(cs).len() {
            for q in 0..d.fiber(cd).len() {
                if d.fiber(cd).le(t[p], q) {
                    let base = format!(
                        "{}__{}__{}",
                        index.mor_name(m),
                        d.fiber(cs).element(p),
                        d.fiber(cd).element(q)
                    );
                    let name = fresh_name(&total, &base);
                    let src = ObjId(pair_ids[&(cs.0, p)]);
                    let dst = ObjId(pair_ids[&(cd.0, q)]);
                    let id = total.add_morphism(name, src, dst)?;
                    trans_mor.insert((m.0, p, q), id);
                }
            }
        }
    }

    // composition table
    #[derive(Clone, Copy)]
    struct TotalMor {
        phi: Option<MorId>, // None = identity index arrow
        c_src: usize,
        p_src: usize,
        c_dst: usize,
        p_dst: usize,
        id: MorId,
    }
    let mut all: Vec<TotalMor> = Vec::new();
    for (&(c, p, q), &id) in &fiber_mor {
        all.push(TotalMor {
            phi: None,
            c_src: c,
            p_src: p,
            c_dst: c,
            p_dst: q,
            id,
        });
    }
    for (&(m, p, q), &id) in &trans_mor {
        let m = MorId(m);
        all.push(TotalMor {
            phi: Some(m),
            c_src: index.mor_src(m).0,
            p_src: p,
            c_dst: index.mor_dst(m).0,
            p_dst: q,
            id,
        });
    }
    for f in &all {
        for g in &all {
            if (f.c_dst, f.p_dst) != (g.c_src, g.p_src) {
                continue;
            }
            let phi = match (g.phi, f.phi) {
                (None, None) => None,
                (Some(m), None) | (None, Some(m)) => Some(Arrow::Mor(m)),
                (Some(mg), Some(mf)) => Some(index.compose(Arrow::Mor(mg), Arrow::Mor(mf))?),
            };
            let result = match phi {
                None => {
                    // both in one fiber; strictness is preserved unless p = q
                    if f.p_src == g.p_dst {
                        Arrow::Id(ObjId(pair_ids[&(f.c_src, f.p_src)]))
                    } else {
                        Arrow::Mor(fiber_mor[&(f.c_src, f.p_src, g.p_dst)])
                    }
                }
                Some(Arrow::Id(_)) => {
                    // a cyclic index would be needed; possible only when the
                    // index composition collapses, in which case both fibers
                    // coincide
                    if f.p_src == g.p_dst {
                        Arrow::Id(ObjId(pair_ids[&(f.c_src, f.p_src)]))
                    } else {
                        Arrow::Mor(fiber_mor[&(f.c_src, f.p_src, g.p_dst)])
                    }
                }
                Some(Arrow::Mor(m)) => Arrow::Mor(trans_mor[&(m.0, f.p_src, g.p_dst)]),
            };
            total.set_composite(g.id, f.id, result)?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::mobius_function;
    use crate::sset::{euler_char_combinatorial, isomorphic, standard_simplex};

    fn span_category() -> FiniteCategory {
        let mut c = FiniteCategory::new(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        c.add_morphism("f", ObjId(0), ObjId(1)).unwrap();
        c.add_morphism("g", ObjId(0), ObjId(2)).unwrap();
        c
    }

    /// Objects A, B, C, D; f: A→B, g1, g2: B→C, h: A→D, and one
    /// morphism A→C equal to both composites.
    pub(crate) fn elaborate_category() -> FiniteCategory {
        let mut c = FiniteCategory::new(vec![
            "A".into(),
            "B".into(),
            "C".into(),
            "D".into(),
        ])
        .unwrap();
        let f = c.add_morphism("f", ObjId(0), ObjId(1)).unwrap();
        let g1 = c.add_morphism("g1", ObjId(1), ObjId(2)).unwrap();
        let g2 = c.add_morphism("g2", ObjId(1), ObjId(2)).unwrap();
        c.add_morphism("h", ObjId(0), ObjId(3)).unwrap();
        let k = c.add_morphism("k", ObjId(0), ObjId(2)).unwrap();
        c.set_composite(g1, f, Arrow::Mor(k)).unwrap();
        c.set_composite(g2, f, Arrow::Mor(k)).unwrap();
        c
    }

    #[test]
    fn chain_nerve_is_a_simplex() {
        let p = Poset::chain(vec!["p0".into(), "p1".into(), "p2".into()]);
        let c = poset_as_category(&p);
        let n = nerve(&c).unwrap();
        assert_eq!(n.counts_by_dimension(), vec![3, 3, 1]);
        assert!(n.validate().is_valid());
        assert!(isomorphic(&n, &standard_simplex(2)));
    }

    #[test]
    fn span_nerve_counts() {
        let n = nerve(&span_category()).unwrap();
        assert_eq!(n.counts_by_dimension(), vec![3, 2]);
        assert!(n.validate().is_valid());
    }

    #[test]
    fn elaborate_nerve_counts_and_mobius() {
        let c = elaborate_category();
        assert!(c.validate().is_ok());
        let n = nerve(&c).unwrap();
        assert_eq!(n.counts_by_dimension(), vec![4, 5, 2]);
        assert!(n.validate().is_valid());
        let t = mobius_function(&n).unwrap();
        let mu = |label: &str| t.get(n.id_by_label(label).unwrap()).unwrap();
        assert_eq!(mu("A"), 0);
        assert_eq!(mu("B"), -1);
        assert_eq!(mu("C"), 1);
        assert_eq!(mu("D"), 1);
        assert_eq!(euler_char_combinatorial(&n), 1);
    }

    #[test]
    fn endomorphisms_and_cycles_are_rejected() {
        let mut c = FiniteCategory::new(vec!["x".into()]).unwrap();
        let e = c.add_morphism("e", ObjId(0), ObjId(0)).unwrap();
        c.set_composite(e, e, Arrow::Mor(e)).unwrap();
        assert!(c.validate().is_ok());
        assert!(matches!(
            nerve(&c),
            Err(CategoryError::NotNerveFinite(NerveWitness::Endomorphism { .. }))
        ));

        let mut c = FiniteCategory::new(vec!["x".into(), "y".into()]).unwrap();
        let f = c.add_morphism("f", ObjId(0), ObjId(1)).unwrap();
        let g = c.add_morphism("g", ObjId(1), ObjId(0)).unwrap();
        c.set_composite(g, f, Arrow::Id(ObjId(0))).unwrap();
        c.set_composite(f, g, Arrow::Id(ObjId(1))).unwrap();
        assert!(c.validate().is_ok());
        assert!(matches!(
            nerve(&c),
            Err(CategoryError::NotNerveFinite(NerveWitness::Cycle { .. }))
        ));
    }

    #[test]
    fn validation_catches_missing_and_bad_tables() {
        let mut c = FiniteCategory::new(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let f = c.add_morphism("f", ObjId(0), ObjId(1)).unwrap();
        let g = c.add_morphism("g", ObjId(1), ObjId(2)).unwrap();
        assert!(matches!(
            c.validate(),
            Err(CategoryError::MissingComposite { .. })
        ));
        let h = c.add_morphism("h", ObjId(0), ObjId(2)).unwrap();
        c.set_composite(g, f, Arrow::Mor(h)).unwrap();
        assert!(c.validate().is_ok());
        assert!(matches!(
            c.set_composite(f, g, Arrow::Mor(h)),
            Err(CategoryError::NotComposable { .. })
        ));
    }

    #[test]
    fn poset_construction_and_monotone_checks() {
        let p = Poset::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        assert!(p.le(0, 2), "closure adds a <= c");
        let cat = poset_as_category(&Poset::chain(vec!["x".into(), "y".into()]));
        assert_eq!(cat.morphism_count(), 1);

        assert!(matches!(
            Poset::new(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]),
            Err(PosetError::Antisymmetry { .. })
        ));

        let q = Poset::chain(vec!["0".into(), "1".into()]);
        assert!(monotone_map_check(&[0, 1], &q, &q).is_ok());
        assert!(monotone_map_check(&[0, 0], &q, &q).is_ok());
        let err = monotone_map_check(&[1, 0], &q, &q).unwrap_err();
        assert_eq!(err.x, "0");
    }

    fn collapse_diagram() -> DiagramOfPosets {
        // index: 0 -> 1; fiber(0) a two-element chain, fiber(1) a point
        let idx = poset_as_category(&Poset::chain(vec!["c0".into(), "c1".into()]));
        let m = idx.morphisms().next().unwrap();
        let fibers = vec![
            Poset::chain(vec!["p".into(), "q".into()]),
            Poset::chain(vec!["z".into()]),
        ];
        let mut transitions = BTreeMap::new();
        transitions.insert(m, vec![0, 0]);
        DiagramOfPosets::new(idx, fibers, transitions).unwrap()
    }

    #[test]
    fn grothendieck_collapse_example() {
        let d = collapse_diagram();
        let total = grothendieck(&d).unwrap();
        assert_eq!(total.object_count(), 3);
        assert!(total.validate().is_ok());
        let n = nerve(&total).unwrap();
        assert_eq!(n.counts_by_dimension(), vec![3, 3, 1]);
        assert_eq!(euler_char_combinatorial(&n), 1);
    }

    #[test]
    fn grothendieck_of_constant_point_diagram_is_the_index() {
        let idx = poset_as_category(
            &Poset::new(
                vec!["a".into(), "b".into(), "c".into(), "d".into()],
                &[(0, 1), (0, 2), (1, 3), (2, 3)],
            )
            .unwrap(),
        );
        let fibers: Vec<Poset> = (0..4)
            .map(|_| Poset::chain(vec!["z".into()]))
            .collect();
        let transitions = idx.morphisms().map(|m| (m, vec![0])).collect();
        let d = DiagramOfPosets::new(idx.clone(), fibers, transitions).unwrap();
        let total = grothendieck(&d).unwrap();
        assert_eq!(total.object_count(), idx.object_count());
        assert_eq!(total.morphism_count(), idx.morphism_count());
        assert!(isomorphic(&nerve(&total).unwrap(), &nerve(&idx).unwrap()));
    }

    #[test]
    fn grothendieck_over_discrete_index_is_a_disjoint_union() {
        let idx = FiniteCategory::new(vec!["u".into(), "v".into()]).unwrap();
        let fibers = vec![
            Poset::chain(vec!["p0".into(), "p1".into()]),
            Poset::chain(vec!["q0".into(), "q1".into(), "q2".into()]),
        ];
        let d = DiagramOfPosets::new(idx, fibers, BTreeMap::new()).unwrap();
        let total = grothendieck(&d).unwrap();
        let n = nerve(&total).unwrap();
        // chi adds over the two nerve components: 1 + 1
        assert_eq!(euler_char_combinatorial(&n), 2);
        assert_eq!(
            crate::mobius::component_partition(&n).unwrap().len(),
            2
        );
    }

    #[test]
    fn diagram_validation_catches_functoriality_failures() {
        // index: chain 0 < 1 < 2 (three morphisms incl. the composite)
        let idx = poset_as_category(&Poset::chain(vec!["a".into(), "b".into(), "c".into()]));
        let fib = Poset::chain(vec!["x".into(), "y".into()]);
        let fibers = vec![fib.clone(), fib.clone(), fib.clone()];
        let mut transitions: BTreeMap<MorId, Vec<usize>> = BTreeMap::new();
        for m in idx.morphisms() {
            transitions.insert(m, vec![0, 1]); // identity maps
        }
        // break the long composite: a__c gets the collapse while the
        // covers stay identity
        let long = idx.morphism_by_name("a__c").unwrap();
        transitions.insert(long, vec![0, 0]);
        let err = DiagramOfPosets::new(idx, fibers, transitions).unwrap_err();
        assert!(matches!(err, DiagramError::NotFunctorial { .. }));
    }

    #[test]
    fn empty_category_and_empty_fibers() {
        let empty = FiniteCategory::new(vec![]).unwrap();
        assert!(empty.validate().is_ok());
        let n = nerve(&empty).unwrap();
        assert_eq!(n.generator_count(), 0);
        assert_eq!(euler_char_combinatorial(&n), 0);

        // an empty fiber over one end of the chain contributes nothing
        let idx = poset_as_category(&Poset::chain(vec!["c0".into(), "c1".into()]));
        let m = idx.morphisms().next().unwrap();
        let fibers = vec![
            Poset::new(vec![], &[]).unwrap(),
            Poset::chain(vec!["z".into()]),
        ];
        let transitions = [(m, Vec::new())].into_iter().collect();
        let d = DiagramOfPosets::new(idx, fibers, transitions).unwrap();
        let total = grothendieck(&d).unwrap();
        assert_eq!(total.object_count(), 1);
        assert_eq!(
            euler_char_combinatorial(&nerve(&total).unwrap()),
            1
        );
    }

    #[test]
    fn nerve_vertices_follow_object_order() {
        let c = span_category();
        let n = nerve(&c).unwrap();
        let labels: Vec<&str> = n.vertices().map(|v| n.label(v).unwrap()).collect();
        assert_eq!(labels, vec!["a", "b", "c"]);
    }
}
