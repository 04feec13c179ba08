//! Isomorphism testing by color refinement and greedy matching.

use super::{FacePointer, SimplexId, SimplicialSet};
use std::collections::BTreeMap;

type Color = u64;
type CofaceIndex = BTreeMap<SimplexId, Vec<(usize, Vec<usize>, SimplexId)>>;

/// Decides whether two sets are isomorphic up to relabeling, by
/// refining generator colors (faces and cofaces) to a fixed point and
/// then matching dimension by dimension, lowest first. The candidate
/// bijection is verified on every face pointer before reporting
/// success, so a `true` answer is always correct; highly symmetric
/// inputs can in principle defeat the greedy matching, making this a
/// sound but incomplete test.
pub fn isomorphic(a: &SimplicialSet, b: &SimplicialSet) -> bool {
    if a.counts_by_dimension() != b.counts_by_dimension() {
        return false;
    }
    let colors_a = stable_colors(a, b);
    let (ca, cb) = match colors_a {
        Some(pair) => pair,
        None => return false,
    };

    // Greedy matching: within each dimension, pair each generator of
    // `a` with the first unused generator of `b` of the same color
    // whose (already matched) faces agree.
    let mut matched: BTreeMap<SimplexId, SimplexId> = BTreeMap::new();
    let top = a.top_dim();
    let Some(top) = top else {
        return true;
    };
    for dim in 0..=top {
        let mut used: Vec<bool> = vec![false; b.generators_of_dim(dim).count()];
        for ga in a.generators_of_dim(dim) {
            let want_faces: Option<Vec<FacePointer>> = if dim == 0 {
                None
            } else {
                Some(
                    (0..=dim)
                        .map(|i| {
                            let fp = a.stored_face(ga, i).expect("valid");
                            FacePointer {
                                word: fp.word.clone(),
                                target: matched[&fp.target],
                            }
                        })
                        .collect(),
                )
            };
            let mut found = false;
            for gb in b.generators_of_dim(dim) {
                if used[gb.index] || ca[&ga] != cb[&gb] {
                    continue;
                }
                let ok = match &want_faces {
                    None => true,
                    Some(want) => (0..=dim).all(|i| {
                        b.stored_face(gb, i).expect("valid") == &want[i]
                    }),
                };
                if ok {
                    used[gb.index] = true;
                    matched.insert(ga, gb);
                    found = true;
                    break;
                }
            }
            if !found {
                return false;
            }
        }
    }
    true
}

/// Runs joint color refinement over both sets; returns `None` as soon
/// as the color histograms diverge.
fn stable_colors(
    a: &SimplicialSet,
    b: &SimplicialSet,
) -> Option<(BTreeMap<SimplexId, Color>, BTreeMap<SimplexId, Color>)> {
    let mut ca: BTreeMap<SimplexId, Color> = a.generators().map(|g| (g, g.dim as Color)).collect();
    let mut cb: BTreeMap<SimplexId, Color> = b.generators().map(|g| (g, g.dim as Color)).collect();

    let cofaces = |k: &SimplicialSet| {
        let mut co: CofaceIndex = BTreeMap::new();
        for g in k.generators().filter(|g| g.dim > 0) {
            for i in 0..=g.dim {
                let fp = k.stored_face(g, i).expect("valid");
                co.entry(fp.target).or_default().push((
                    i,
                    fp.word.indices().to_vec(),
                    g,
                ));
            }
        }
        co
    };
    let co_a = cofaces(a);
    let co_b = cofaces(b);

    for _ in 0..(a.generator_count() + 2) {
        let sig = |k: &SimplicialSet,
                   colors: &BTreeMap<SimplexId, Color>,
                   co: &CofaceIndex,
                   g: SimplexId| {
            let faces: Vec<(usize, Vec<usize>, Color)> = if g.dim == 0 {
                Vec::new()
            } else {
                (0..=g.dim)
                    .map(|i| {
                        let fp = k.stored_face(g, i).expect("valid");
                        (i, fp.word.indices().to_vec(), colors[&fp.target])
                    })
                    .collect()
            };
            let mut up: Vec<(usize, Vec<usize>, Color)> = co
                .get(&g)
                .map(|v| {
                    v.iter()
                        .map(|(i, w, h)| (*i, w.clone(), colors[h]))
                        .collect()
                })
                .unwrap_or_default();
            up.sort();
            (colors[&g], faces, up)
        };

        let mut intern: BTreeMap<_, Color> = BTreeMap::new();
        let mut next_a = BTreeMap::new();
        let mut next_b = BTreeMap::new();
        let mut sigs_a = Vec::new();
        let mut sigs_b = Vec::new();
        for g in a.generators() {
            sigs_a.push((g, sig(a, &ca, &co_a, g)));
        }
        for g in b.generators() {
            sigs_b.push((g, sig(b, &cb, &co_b, g)));
        }
        // Intern signatures from both sets in one shared table so the
        // new colors are comparable across sets.
        let mut all: Vec<&(SimplexId, _)> = Vec::new();
        all.extend(sigs_a.iter());
        all.extend(sigs_b.iter());
        let mut sorted_sigs: Vec<_> = all.iter().map(|(_, s)| s).collect();
        sorted_sigs.sort();
        sorted_sigs.dedup();
        for (idx, s) in sorted_sigs.into_iter().enumerate() {
            intern.insert(s.clone(), idx as Color);
        }
        for (g, s) in &sigs_a {
            next_a.insert(*g, intern[s]);
        }
        for (g, s) in &sigs_b {
            next_b.insert(*g, intern[s]);
        }

        let hist = |c: &BTreeMap<SimplexId, Color>| {
            let mut h: BTreeMap<Color, usize> = BTreeMap::new();
            for v in c.values() {
                *h.entry(*v).or_default() += 1;
            }
            h
        };
        if hist(&next_a) != hist(&next_b) {
            return None;
        }
        let stable = next_a == ca && next_b == cb;
        ca = next_a;
        cb = next_b;
        if stable {
            break;
        }
    }
    Some((ca, cb))
}
