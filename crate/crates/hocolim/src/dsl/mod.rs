//! Text format for simplicial sets, maps, posets, categories, poset
//! diagrams, and vertex weights.
//!
//! Parsing is purely syntactic; [`elaborate`] resolves names and runs
//! every mathematical validation, reporting semantic diagnostics
//! separately from parse errors. [`serialize`] is the canonical
//! printer: LF line endings, two-space indentation, generators sorted
//! by dimension then name. Canonical documents round-trip exactly
//! through `parse`.

mod lexer;
mod parser;

pub use parser::parse;

use crate::category::{
    poset_as_category, Arrow, DiagramOfPosets, FiniteCategory, MorId, ObjId, Poset,
};
use crate::mobius::VertexWeights;
use crate::operator::DegeneracyWord;
use crate::sset::{FacePointer, SimplicialMap, SimplicialSet};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// A parse failure, pointing at the first offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {} (expected {})",
            self.line,
            self.column,
            self.message,
            self.expected.join(" or ")
        )
    }
}

impl std::error::Error for ParseError {}

/// A diagnostic produced after parsing: unresolved references, broken
/// invariants, failed validations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticError {
    pub decl: String,
    pub message: String,
}

impl fmt::Display for SemanticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.decl, self.message)
    }
}

impl std::error::Error for SemanticError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub decls: Vec<Decl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Sset(SsetDecl),
    Map(MapDecl),
    Poset(PosetDecl),
    Category(CategoryDecl),
    Diagram(DiagramDecl),
    Weights(WeightsDecl),
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Sset(d) => &d.name,
            Decl::Map(d) => &d.name,
            Decl::Poset(d) => &d.name,
            Decl::Category(d) => &d.name,
            Decl::Diagram(d) => &d.name,
            Decl::Weights(d) => &d.name,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsetDecl {
    pub name: String,
    pub gens: Vec<GenDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenDecl {
    pub name: String,
    pub dim: usize,
    /// Pointers `d_0 … d_n` in order; empty when no clause was given.
    pub faces: Vec<FpDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpDecl {
    pub word: Vec<usize>,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub entries: Vec<(String, FpDecl)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetDecl {
    pub name: String,
    pub elements: Vec<String>,
    /// Generating relations; the order is their reflexive-transitive
    /// closure.
    pub relations: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorDecl {
    pub name: String,
    pub src: String,
    pub dst: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryDecl {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorDecl>,
    /// `(g, f, h)` meaning `g ∘ f = h` (f applied first).
    pub composites: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDecl {
    pub name: String,
    /// Names a category declaration, or a poset declaration which is
    /// then taken as a category.
    pub index: String,
    pub fibers: Vec<(String, String)>,
    pub transitions: Vec<(String, Vec<(String, String)>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightsDecl {
    pub name: String,
    pub over: String,
    pub arity: usize,
    pub entries: Vec<(String, Vec<BigInt>)>,
}

/// Everything a document declares, fully resolved and validated.
#[derive(Debug, Clone, Default)]
pub struct Entities {
    pub ssets: BTreeMap<String, SimplicialSet>,
    pub maps: BTreeMap<String, SimplicialMap>,
    pub posets: BTreeMap<String, Poset>,
    pub categories: BTreeMap<String, FiniteCategory>,
    pub diagrams: BTreeMap<String, DiagramOfPosets>,
    /// Weight name -> (name of the set it is over, the weights).
    pub weights: BTreeMap<String, (String, VertexWeights)>,
}

/// Resolves and validates a parsed document. Collects every diagnostic
/// rather than stopping at the first.
pub fn elaborate(doc: &Document) -> Result<Entities, Vec<SemanticError>> {
    let mut errors = Vec::new();
    let mut entities = Entities::default();

    {
        let mut seen = BTreeMap::new();
        for d in &doc.decls {
            if let Some(()) = seen.insert(d.name().to_string(), ()) {
                errors.push(SemanticError {
                    decl: d.name().to_string(),
                    message: "declared more than once".to_string(),
                });
            }
        }
    }

    // Kind order fixes all cross-references: posets and categories first,
    // then sets, then maps, diagrams, and weights.
    for d in &doc.decls {
        if let Decl::Poset(p) = d {
            match elaborate_poset(p) {
                Ok(v) => {
                    entities.posets.insert(p.name.clone(), v);
                }
                Err(mut e) => errors.append(&mut e),
            }
        }
    }
    for d in &doc.decls {
        if let Decl::Category(c) = d {
            match elaborate_category(c) {
                Ok(v) => {
                    entities.categories.insert(c.name.clone(), v);
                }
                Err(mut e) => errors.append(&mut e),
            }
        }
    }
    for d in &doc.decls {
        if let Decl::Sset(s) = d {
            match elaborate_sset(s) {
                Ok(v) => {
                    entities.ssets.insert(s.name.clone(), v);
                }
                Err(mut e) => errors.append(&mut e),
            }
        }
    }
    for d in &doc.decls {
        if let Decl::Map(m) = d {
            match elaborate_map(m, &entities) {
                Ok(v) => {
                    entities.maps.insert(m.name.clone(), v);
                }
                Err(mut e) => errors.append(&mut e),
            }
        }
    }
    for d in &doc.decls {
        if let Decl::Diagram(dg) = d {
            match elaborate_diagram(dg, &entities) {
                Ok(v) => {
                    entities.diagrams.insert(dg.name.clone(), v);
                }
                Err(mut e) => errors.append(&mut e),
            }
        }
    }
    for d in &doc.decls {
        if let Decl::Weights(w) = d {
            match elaborate_weights(w, &entities) {
                Ok(v) => {
                    entities.weights.insert(w.name.clone(), (w.over.clone(), v));
                }
                Err(mut e) => errors.append(&mut e),
            }
        }
    }

    if errors.is_empty() {
        Ok(entities)
    } else {
        Err(errors)
    }
}

fn is_degeneracy_marker(name: &str) -> bool {
    name.len() > 1 && name.starts_with('s') && name[1..].chars().all(|c| c.is_ascii_digit())
}

fn elaborate_sset(decl: &SsetDecl) -> Result<SimplicialSet, Vec<SemanticError>> {
    let err = |message: String| SemanticError {
        decl: decl.name.clone(),
        message,
    };
    let mut errors = Vec::new();
    let mut dims: BTreeMap<&str, usize> = BTreeMap::new();
    for g in &decl.gens {
        if is_degeneracy_marker(&g.name) {
            errors.push(err(format!(
                "generator name '{}' is reserved for degeneracy markers",
                g.name
            )));
        }
        if dims.insert(&g.name, g.dim).is_some() {
            errors.push(err(format!("generator '{}' declared twice", g.name)));
        }
        if g.dim == 0 && !g.faces.is_empty() {
            errors.push(err(format!("vertex '{}' must not list faces", g.name)));
        }
        if g.dim >= 1 && g.faces.len() != g.dim + 1 {
            errors.push(err(format!(
                "generator '{}' of dimension {} needs {} faces, found {}",
                g.name,
                g.dim,
                g.dim + 1,
                g.faces.len()
            )));
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let mut k = SimplicialSet::new();
    let max_dim = decl.gens.iter().map(|g| g.dim).max().unwrap_or(0);
    for dim in 0..=max_dim {
        for g in decl.gens.iter().filter(|g| g.dim == dim) {
            if dim == 0 {
                k.add_vertex(&g.name).expect("checked unique");
                continue;
            }
            let mut faces = Vec::new();
            for (i, fp) in g.faces.iter().enumerate() {
                let Some(&target_dim) = dims.get(fp.target.as_str()) else {
                    errors.push(err(format!(
                        "face {} of '{}' points at unknown generator '{}'",
                        i, g.name, fp.target
                    )));
                    continue;
                };
                let word = match DegeneracyWord::new(fp.word.clone()) {
                    Ok(w) => w,
                    Err(_) => {
                        errors.push(err(format!(
                            "face {} of '{}' has a degeneracy word that is not strictly decreasing",
                            i, g.name
                        )));
                        continue;
                    }
                };
                if target_dim + word.len() + 1 != g.dim {
                    errors.push(err(format!(
                        "face {} of '{}' has inconsistent dimensions",
                        i, g.name
                    )));
                    continue;
                }
                let target = k
                    .id_by_label(&fp.target)
                    .expect("lower dimension already inserted");
                faces.push(FacePointer { word, target });
            }
            if faces.len() == g.dim + 1 {
                k.add_generator(&g.name, faces).expect("checked");
            }
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let report = k.validate();
    if !report.is_valid() {
        return Err(report
            .violations
            .iter()
            .map(|v| err(v.to_string()))
            .collect());
    }
    Ok(k)
}

fn elaborate_map(decl: &MapDecl, env: &Entities) -> Result<SimplicialMap, Vec<SemanticError>> {
    let err = |message: String| {
        vec![SemanticError {
            decl: decl.name.clone(),
            message,
        }]
    };
    let source = env
        .ssets
        .get(&decl.source)
        .ok_or_else(|| err(format!("unknown source sset '{}'", decl.source)))?;
    let target = env
        .ssets
        .get(&decl.target)
        .ok_or_else(|| err(format!("unknown target sset '{}'", decl.target)))?;
    let mut assignment = BTreeMap::new();
    for (gen, fp) in &decl.entries {
        let id = source
            .id_by_label(gen)
            .ok_or_else(|| err(format!("'{}' is not a generator of '{}'", gen, decl.source)))?;
        let t = target
            .id_by_label(&fp.target)
            .ok_or_else(|| {
                err(format!(
                    "'{}' is not a generator of '{}'",
                    fp.target, decl.target
                ))
            })?;
        let word = DegeneracyWord::new(fp.word.clone()).map_err(|_| {
            err(format!(
                "image of '{}' has a degeneracy word that is not strictly decreasing",
                gen
            ))
        })?;
        if assignment
            .insert(id, FacePointer { word, target: t })
            .is_some()
        {
            return Err(err(format!("'{}' is assigned twice", gen)));
        }
    }
    SimplicialMap::new(source.clone(), target.clone(), assignment)
        .map_err(|e| err(e.to_string()))
}

fn elaborate_poset(decl: &PosetDecl) -> Result<Poset, Vec<SemanticError>> {
    let err = |message: String| {
        vec![SemanticError {
            decl: decl.name.clone(),
            message,
        }]
    };
    let index_of = |label: &str| decl.elements.iter().position(|e| e == label);
    let mut relations = Vec::new();
    for (a, b) in &decl.relations {
        let ia = index_of(a).ok_or_else(|| err(format!("unknown element '{}'", a)))?;
        let ib = index_of(b).ok_or_else(|| err(format!("unknown element '{}'", b)))?;
        relations.push((ia, ib));
    }
    Poset::new(decl.elements.clone(), &relations).map_err(|e| err(e.to_string()))
}

fn elaborate_category(decl: &CategoryDecl) -> Result<FiniteCategory, Vec<SemanticError>> {
    let err = |message: String| {
        vec![SemanticError {
            decl: decl.name.clone(),
            message,
        }]
    };
    let mut c =
        FiniteCategory::new(decl.objects.clone()).map_err(|e| err(e.to_string()))?;
    for m in &decl.morphisms {
        let src = c
            .object_by_name(&m.src)
            .ok_or_else(|| err(format!("unknown object '{}'", m.src)))?;
        let dst = c
            .object_by_name(&m.dst)
            .ok_or_else(|| err(format!("unknown object '{}'", m.dst)))?;
        c.add_morphism(&m.name, src, dst)
            .map_err(|e| err(e.to_string()))?;
    }
    for (g, f, h) in &decl.composites {
        let find = |name: &str| {
            c.morphism_by_name(name).ok_or_else(|| {
                err(format!(
                    "composition entry names '{}', which is not a declared morphism",
                    name
                ))
            })
        };
        let (g, f, h) = (find(g)?, find(f)?, find(h)?);
        c.set_composite(g, f, Arrow::Mor(h))
            .map_err(|e| err(e.to_string()))?;
    }
    c.validate().map_err(|e| err(e.to_string()))?;
    Ok(c)
}

fn elaborate_diagram(
    decl: &DiagramDecl,
    env: &Entities,
) -> Result<DiagramOfPosets, Vec<SemanticError>> {
    let err = |message: String| {
        vec![SemanticError {
            decl: decl.name.clone(),
            message,
        }]
    };
    let index: FiniteCategory = if let Some(c) = env.categories.get(&decl.index) {
        c.clone()
    } else if let Some(p) = env.posets.get(&decl.index) {
        poset_as_category(p)
    } else {
        return Err(err(format!(
            "unknown index category or poset '{}'",
            decl.index
        )));
    };

    let mut fibers: Vec<Option<Poset>> = vec![None; index.object_count()];
    for (obj, poset_name) in &decl.fibers {
        let o = index
            .object_by_name(obj)
            .ok_or_else(|| err(format!("unknown index object '{}'", obj)))?;
        let p = env
            .posets
            .get(poset_name)
            .ok_or_else(|| err(format!("unknown poset '{}'", poset_name)))?;
        if fibers[o.0].replace(p.clone()).is_some() {
            return Err(err(format!("fiber of '{}' given twice", obj)));
        }
    }
    let mut resolved = Vec::with_capacity(fibers.len());
    for (i, f) in fibers.into_iter().enumerate() {
        resolved.push(f.ok_or_else(|| {
            err(format!(
                "no fiber given for object '{}'",
                index.object_name(ObjId(i))
            ))
        })?);
    }

    let mut transitions: BTreeMap<MorId, Vec<usize>> = BTreeMap::new();
    for (mor, entries) in &decl.transitions {
        let m = index
            .morphism_by_name(mor)
            .ok_or_else(|| err(format!("unknown index morphism '{}'", mor)))?;
        let src = &resolved[index.mor_src(m).0];
        let dst = &resolved[index.mor_dst(m).0];
        let mut table: Vec<Option<usize>> = vec![None; src.len()];
        for (from, to) in entries {
            let fi = src
                .index_of(from)
                .ok_or_else(|| err(format!("'{}' is not in the source fiber of '{}'", from, mor)))?;
            let ti = dst
                .index_of(to)
                .ok_or_else(|| err(format!("'{}' is not in the target fiber of '{}'", to, mor)))?;
            if table[fi].replace(ti).is_some() {
                return Err(err(format!(
                    "transition '{}' maps '{}' twice",
                    mor, from
                )));
            }
        }
        let mut complete = Vec::with_capacity(table.len());
        for (i, slot) in table.into_iter().enumerate() {
            complete.push(slot.ok_or_else(|| {
                err(format!(
                    "transition '{}' does not map '{}'",
                    mor,
                    src.element(i)
                ))
            })?);
        }
        if transitions.insert(m, complete).is_some() {
            return Err(err(format!("transition '{}' given twice", mor)));
        }
    }

    DiagramOfPosets::new(index, resolved, transitions).map_err(|e| err(e.to_string()))
}

fn elaborate_weights(
    decl: &WeightsDecl,
    env: &Entities,
) -> Result<VertexWeights, Vec<SemanticError>> {
    let err = |message: String| {
        vec![SemanticError {
            decl: decl.name.clone(),
            message,
        }]
    };
    let k = env
        .ssets
        .get(&decl.over)
        .ok_or_else(|| err(format!("unknown sset '{}'", decl.over)))?;
    let mut values = BTreeMap::new();
    for (vertex, vector) in &decl.entries {
        let id = k
            .id_by_label(vertex)
            .filter(|id| id.dim == 0)
            .ok_or_else(|| err(format!("'{}' is not a vertex of '{}'", vertex, decl.over)))?;
        if values.insert(id, vector.clone()).is_some() {
            return Err(err(format!("weight for '{}' given twice", vertex)));
        }
    }
    VertexWeights::new(k, decl.arity, values).map_err(|e| err(e.to_string()))
}

// ---------------------------------------------------------------------------
// canonical printing

/// Canonical text for a document: the normative on-disk form.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    for d in &doc.decls {
        match d {
            Decl::Sset(s) => print_sset(&mut out, s),
            Decl::Map(m) => print_map(&mut out, m),
            Decl::Poset(p) => print_poset(&mut out, p),
            Decl::Category(c) => print_category(&mut out, c),
            Decl::Diagram(dg) => print_diagram(&mut out, dg),
            Decl::Weights(w) => print_weights(&mut out, w),
        }
    }
    out
}

fn fp_text(fp: &FpDecl) -> String {
    let mut parts: Vec<String> = fp.word.iter().map(|j| format!("s{}", j)).collect();
    parts.push(fp.target.clone());
    parts.join(" ")
}

fn print_sset(out: &mut String, s: &SsetDecl) {
    out.push_str(&format!("sset {} {{\n", s.name));
    let mut gens = s.gens.clone();
    gens.sort_by(|a, b| (a.dim, &a.name).cmp(&(b.dim, &b.name)));
    for g in &gens {
        if g.faces.is_empty() {
            out.push_str(&format!("  {}: {}\n", g.name, g.dim));
        } else {
            let faces: Vec<String> = g.faces.iter().map(fp_text).collect();
            out.push_str(&format!(
                "  {}: {} faces = {}\n",
                g.name,
                g.dim,
                faces.join(", ")
            ));
        }
    }
    out.push_str("}\n");
}

fn print_map(out: &mut String, m: &MapDecl) {
    out.push_str(&format!("map {} : {} -> {} {{\n", m.name, m.source, m.target));
    for (gen, fp) in &m.entries {
        out.push_str(&format!("  {} |-> {}\n", gen, fp_text(fp)));
    }
    out.push_str("}\n");
}

fn print_poset(out: &mut String, p: &PosetDecl) {
    out.push_str(&format!("poset {} {{\n", p.name));
    out.push_str(&format!("  elements {};\n", p.elements.join(" ")));
    for (a, b) in &p.relations {
        out.push_str(&format!("  rel {} < {};\n", a, b));
    }
    out.push_str("}\n");
}

fn print_category(out: &mut String, c: &CategoryDecl) {
    out.push_str(&format!("category {} {{\n", c.name));
    out.push_str(&format!("  objects {};\n", c.objects.join(" ")));
    for m in &c.morphisms {
        out.push_str(&format!("  mor {} : {} -> {};\n", m.name, m.src, m.dst));
    }
    for (g, f, h) in &c.composites {
        out.push_str(&format!("  comp {} * {} = {};\n", g, f, h));
    }
    out.push_str("}\n");
}

fn print_diagram(out: &mut String, d: &DiagramDecl) {
    out.push_str(&format!("diagram {} {{\n", d.name));
    out.push_str(&format!("  index {};\n", d.index));
    for (obj, poset) in &d.fibers {
        out.push_str(&format!("  fiber {} = {};\n", obj, poset));
    }
    for (mor, entries) in &d.transitions {
        out.push_str(&format!("  transition {} = {{\n", mor));
        for (from, to) in entries {
            out.push_str(&format!("    {} |-> {}\n", from, to));
        }
        out.push_str("  };\n");
    }
    out.push_str("}\n");
}

fn print_weights(out: &mut String, w: &WeightsDecl) {
    out.push_str(&format!("weights {} {{\n", w.name));
    out.push_str(&format!("  over {};\n", w.over));
    out.push_str(&format!("  arity {};\n", w.arity));
    for (vertex, vector) in &w.entries {
        let nums: Vec<String> = vector.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("  {} = [{}];\n", vertex, nums.join(", ")));
    }
    out.push_str("}\n");
}

// ---------------------------------------------------------------------------
// entity -> declaration converters (canonical ordering built in)

pub fn sset_to_decl(name: &str, k: &SimplicialSet) -> SsetDecl {
    let mut gens = Vec::new();
    for id in k.generators() {
        let faces = if id.dim == 0 {
            Vec::new()
        } else {
            (0..=id.dim)
                .map(|i| {
                    let fp = k.stored_face(id, i).expect("valid");
                    FpDecl {
                        word: fp.word.indices().to_vec(),
                        target: k.label(fp.target).expect("valid").to_string(),
                    }
                })
                .collect()
        };
        gens.push(GenDecl {
            name: k.label(id).expect("valid").to_string(),
            dim: id.dim,
            faces,
        });
    }
    gens.sort_by(|a, b| (a.dim, &a.name).cmp(&(b.dim, &b.name)));
    SsetDecl {
        name: name.to_string(),
        gens,
    }
}

pub fn map_to_decl(
    name: &str,
    source_name: &str,
    target_name: &str,
    f: &SimplicialMap,
) -> MapDecl {
    let mut entries = Vec::new();
    for id in f.source().generators() {
        let fp = f.image(id);
        entries.push((
            f.source().label(id).expect("valid").to_string(),
            FpDecl {
                word: fp.word.indices().to_vec(),
                target: f.target().label(fp.target).expect("valid").to_string(),
            },
        ));
    }
    MapDecl {
        name: name.to_string(),
        source: source_name.to_string(),
        target: target_name.to_string(),
        entries,
    }
}

pub fn poset_to_decl(name: &str, p: &Poset) -> PosetDecl {
    let relations = p
        .covers()
        .into_iter()
        .map(|(a, b)| (p.element(a).to_string(), p.element(b).to_string()))
        .collect();
    PosetDecl {
        name: name.to_string(),
        elements: p.elements().to_vec(),
        relations,
    }
}

/// Composites valued in identities are not representable in the text
/// format; callers serialize nerve-finite categories, where they do not
/// occur.
pub fn category_to_decl(name: &str, c: &FiniteCategory) -> CategoryDecl {
    let objects = c.objects().map(|o| c.object_name(o).to_string()).collect();
    let morphisms = c
        .morphisms()
        .map(|m| MorDecl {
            name: c.mor_name(m).to_string(),
            src: c.object_name(c.mor_src(m)).to_string(),
            dst: c.object_name(c.mor_dst(m)).to_string(),
        })
        .collect();
    let mut composites = Vec::new();
    for (g, f, a) in c.composites() {
        if let Arrow::Mor(h) = a {
            composites.push((
                c.mor_name(g).to_string(),
                c.mor_name(f).to_string(),
                c.mor_name(h).to_string(),
            ));
        } else {
            debug_assert!(false, "identity-valued composite is not serializable");
        }
    }
    CategoryDecl {
        name: name.to_string(),
        objects,
        morphisms,
        composites,
    }
}

/// Caller supplies the document names of the index and of each fiber
/// poset (one per index object, in object order).
pub fn diagram_to_decl(
    name: &str,
    index_name: &str,
    fiber_names: &[String],
    d: &DiagramOfPosets,
) -> DiagramDecl {
    let index = d.index();
    let fibers = index
        .objects()
        .map(|o| {
            (
                index.object_name(o).to_string(),
                fiber_names[o.0].clone(),
            )
        })
        .collect();
    let transitions = index
        .morphisms()
        .map(|m| {
            let src = d.fiber(index.mor_src(m));
            let dst = d.fiber(index.mor_dst(m));
            let entries = d
                .transition(m)
                .iter()
                .enumerate()
                .map(|(i, &t)| (src.element(i).to_string(), dst.element(t).to_string()))
                .collect();
            (index.mor_name(m).to_string(), entries)
        })
        .collect();
    DiagramDecl {
        name: name.to_string(),
        index: index_name.to_string(),
        fibers,
        transitions,
    }
}

pub fn weights_to_decl(
    name: &str,
    over: &str,
    k: &SimplicialSet,
    w: &VertexWeights,
) -> WeightsDecl {
    let entries = k
        .vertices()
        .map(|v| {
            (
                k.label(v).expect("valid").to_string(),
                w.get(v).expect("total").to_vec(),
            )
        })
        .collect();
    WeightsDecl {
        name: name.to_string(),
        over: over.to_string(),
        arity: w.arity(),
        entries,
    }
}
