//! Products of finite simplicial sets.
//!
//! A nondegenerate d-simplex of `X × Y` is a pair of order-preserving
//! surjections `α: [d] ↠ [m]`, `β: [d] ↠ [n]` that is jointly injective,
//! applied to a pair of nondegenerate generators of dimensions `m`, `n`.
//! Such pairs are lattice paths from `(0,0)` to `(m,n)` whose steps
//! advance one coordinate or both.

use super::{FacePointer, SimplexId, SimplicialSet};
use crate::operator::DegeneracyWord;
use std::collections::HashMap;

/// Where a product generator came from: the factor generators and the
/// surjection values (length `d + 1` each).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct ProductOrigin {
    pub x: SimplexId,
    pub alpha: Vec<usize>,
    pub y: SimplexId,
    pub beta: Vec<usize>,
}

/// Enumerates jointly injective surjection pairs onto `[m] × [n]` as
/// pairs of coordinate sequences, in a fixed deterministic order.
fn joint_surjections(m: usize, n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    let mut xs = vec![0usize];
    let mut ys = vec![0usize];
    fn rec(
        m: usize,
        n: usize,
        xs: &mut Vec<usize>,
        ys: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        let (a, b) = (*xs.last().unwrap(), *ys.last().unwrap());
        if a == m && b == n {
            out.push((xs.clone(), ys.clone()));
            return;
        }
        // steps: advance x, advance y, advance both
        if a < m {
            xs.push(a + 1);
            ys.push(b);
            rec(m, n, xs, ys, out);
            xs.pop();
            ys.pop();
        }
        if b < n {
            xs.push(a);
            ys.push(b + 1);
            rec(m, n, xs, ys, out);
            xs.pop();
            ys.pop();
        }
        if a < m && b < n {
            xs.push(a + 1);
            ys.push(b + 1);
            rec(m, n, xs, ys, out);
            xs.pop();
            ys.pop();
        }
    }
    rec(m, n, &mut xs, &mut ys, &mut out);
    out
}

fn path_label(x_label: &str, y_label: &str, alpha: &[usize], beta: &[usize]) -> String {
    if alpha.len() == 1 {
        return format!("{}__{}", x_label, y_label);
    }
    let steps: String = (1..alpha.len())
        .map(|t| {
            match (alpha[t] > alpha[t - 1], beta[t] > beta[t - 1]) {
                (true, false) => 'x',
                (false, true) => 'y',
                (true, true) => 'b',
                (false, false) => unreachable!("jointly injective"),
            }
        })
        .collect();
    format!("{}__{}_{}", x_label, y_label, steps)
}

pub(crate) fn product_with_origin(
    x: &SimplicialSet,
    y: &SimplicialSet,
) -> (SimplicialSet, Vec<Vec<ProductOrigin>>) {
    let mut out = SimplicialSet::new();
    let mut origins: Vec<Vec<ProductOrigin>> = Vec::new();
    let mut ids: HashMap<ProductOrigin, SimplexId> = HashMap::new();
    let (x_top, y_top) = match (x.top_dim(), y.top_dim()) {
        (Some(a), Some(b)) => (a, b),
        _ => return (out, origins),
    };
    // Bucket generator data per product dimension before inserting, so
    // lower dimensions exist when faces are wired up.
    let mut buckets: Vec<Vec<ProductOrigin>> = vec![Vec::new(); x_top + y_top + 1];
    for xg in x.generators() {
        for yg in y.generators() {
            for (alpha, beta) in joint_surjections(xg.dim, yg.dim) {
                let d = alpha.len() - 1;
                buckets[d].push(ProductOrigin {
                    x: xg,
                    alpha,
                    y: yg,
                    beta,
                });
            }
        }
    }
    for (d, bucket) in buckets.iter().enumerate() {
        origins.push(Vec::new());
        for origin in bucket {
            let label = out.fresh_label(&path_label(
                x.label(origin.x).unwrap(),
                y.label(origin.y).unwrap(),
                &origin.alpha,
                &origin.beta,
            ));
            let id = if d == 0 {
                out.add_vertex(label).expect("fresh")
            } else {
                let faces = (0..=d)
                    .map(|i| {
                        product_face(x, y, origin, i, &ids)
                    })
                    .collect();
                out.add_generator(label, faces).expect("consistent")
            };
            ids.insert(origin.clone(), id);
            origins[d].push(origin.clone());
        }
    }
    (out, origins)
}

/// Face `d_i` of the product simplex `(α·x, β·y)`: take the face in each
/// factor, then refactor the resulting pair of degenerate simplices
/// through their joint surjection.
fn product_face(
    x: &SimplicialSet,
    y: &SimplicialSet,
    origin: &ProductOrigin,
    i: usize,
    ids: &HashMap<ProductOrigin, SimplexId>,
) -> FacePointer {
    let fx = x
        .resolve_face(
            i,
            &FacePointer {
                word: DegeneracyWord::from_surjection(&origin.alpha),
                target: origin.x,
            },
        )
        .expect("valid factor");
    let fy = y
        .resolve_face(
            i,
            &FacePointer {
                word: DegeneracyWord::from_surjection(&origin.beta),
                target: origin.y,
            },
        )
        .expect("valid factor");
    let tau1 = fx.word.to_surjection(fx.target.dim);
    let tau2 = fy.word.to_surjection(fy.target.dim);
    debug_assert_eq!(tau1.len(), tau2.len());
    let mut joint_repeats = Vec::new();
    let mut alpha_bar = vec![tau1[0]];
    let mut beta_bar = vec![tau2[0]];
    for t in 1..tau1.len() {
        if tau1[t] == tau1[t - 1] && tau2[t] == tau2[t - 1] {
            joint_repeats.push(t - 1);
        } else {
            alpha_bar.push(tau1[t]);
            beta_bar.push(tau2[t]);
        }
    }
    joint_repeats.reverse();
    let word = DegeneracyWord::new(joint_repeats).expect("decreasing");
    let key = ProductOrigin {
        x: fx.target,
        alpha: alpha_bar,
        y: fy.target,
        beta: beta_bar,
    };
    let target = *ids.get(&key).expect("face carrier exists");
    FacePointer { word, target }
}

/// The product of two finite simplicial sets.
pub fn product(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
    product_with_origin(x, y).0
}

/// `X × Δ¹`.
pub fn cylinder(x: &SimplicialSet) -> SimplicialSet {
    product(x, &super::standard_simplex(1))
}
