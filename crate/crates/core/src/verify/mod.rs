//! Machine-checkable certificates for the statements behind the
//! nontriviality of wheel classes.
//!
//! Every verifier returns a [`Certificate`]; computation errors are
//! returned as `Err` and are distinct from a `FAIL` verdict.

use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::feynman::{
    build_complex, gc2_slice, omega_chain, omega_graph, polygon_count_formula, theta_coefficient, theta_graph,
    x_labeled_polygon_legs, x_labeled_polygons, BasisRef, ComplexOptions, DifferentialMode, FeynmanTransform, Operad,
};
use crate::graph::{canonical_form, enumerate_graphs, GraphFilter, ModularGraph};
use crate::hlie::{kernel_identity, massey_closed_form, x_class, LabeledPolygon};
use crate::linalg::{in_span, RationalMatrix, SparseVec};
use crate::rational::{format_q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub params: Value,
    pub verdict: Verdict,
    pub witness: Value,
    pub ms: u64,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Runs the verifier named by `claim` again on the stored parameters.
    pub fn rerun(&self) -> Result<Certificate> {
        let p = &self.params;
        let int = |k: &str| {
            p.get(k)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("certificate parameter {k} missing")))
        };
        match self.claim.as_str() {
            "wheel-cycle" => verify_wheel_cycle(int("j")?),
            "theta" => verify_theta_coefficient(int("j")?),
            "propzero" => {
                let filtered = p.get("no_simple_loops").and_then(Value::as_bool).unwrap_or(true);
                verify_propzero_with(int("j")?, filtered)
            }
            "deg0" => verify_deg0(int("j")?),
            "nontrivial" => {
                let brute = p.get("route").and_then(Value::as_str) == Some("brute-force");
                verify_nontriviality(int("j")?, brute)
            }
            "dsquared" => {
                let op: Operad = p.get("operad").and_then(Value::as_str).unwrap_or_default().parse()?;
                verify_dsquared(op, int("g")?, int("n")?)
            }
            other => Err(Error::Parse(format!("unknown claim {other:?}"))),
        }
    }
}

fn timed(claim: &str, params: Value, f: impl FnOnce() -> Result<(bool, Value)>) -> Result<Certificate> {
    let start = Instant::now();
    let (ok, witness) = f()?;
    Ok(Certificate {
        claim: claim.into(),
        params,
        verdict: Verdict::from_bool(ok),
        witness,
        ms: start.elapsed().as_millis() as u64,
    })
}

fn check_j(j: usize, max: usize) -> Result<()> {
    if j == 0 || j > max {
        return Err(Error::InvalidParameter(format!("j must lie in 1..={max}, got {j}")));
    }
    Ok(())
}

/// `∂ω_{2j+1} = 0` in `B(Com)`.
pub fn verify_wheel_cycle(j: usize) -> Result<Certificate> {
    check_j(j, 3)?;
    timed("wheel-cycle", json!({ "j": j }), || {
        let t = FeynmanTransform::new(Operad::Com);
        let omega = omega_chain(&t, j)?;
        let d = t.differential(&omega, DifferentialMode::Full, None)?;
        // each contraction separately, to show the cancellation
        let mut per_edge = Vec::new();
        for b in omega.terms().keys() {
            for (nest, term) in t.nest_terms(b, DifferentialMode::Full, None)? {
                per_edge.push(json!({ "edges": nest, "terms": term.len() }));
            }
        }
        let ok = !omega.is_zero() && d.is_zero();
        Ok((
            ok,
            json!({
                "omega_nonzero": !omega.is_zero(),
                "boundary_terms": d.len(),
                "contractions": per_edge,
                "graph": omega_graph(j).to_json(),
            }),
        ))
    })
}

/// Whether `x_{2j+1}` lies in the span of the Massey products of the
/// `X`-labelled polygons.
pub fn x_in_polygon_image(j: usize) -> Result<bool> {
    let l = 2 * j + 1;
    let cols: Vec<SparseVec> = x_labeled_polygon_legs(j)
        .into_iter()
        .map(|legs| {
            let p = LabeledPolygon {
                legs,
                edges: (0..l).collect(),
                orientation: (0..l).collect(),
            };
            massey_closed_form(&p)
                .coords()
                .iter()
                .map(|(&m, c)| (m as usize, c.clone()))
                .collect()
        })
        .collect();
    let rows = 1usize << (4 * j);
    let m = RationalMatrix::from_columns(rows, cols);
    let mut x = vec![Q::zero(); rows];
    for (&mask, c) in x_class(j).coords() {
        x[mask as usize] = c.clone();
    }
    in_span(&x, &m)
}

/// The θ component of `∂ω_{2j+1}` in `B(H_Lie)` is a nonzero multiple of
/// `β_{2j+1}`, together with the algebraic input behind it.
pub fn verify_theta_coefficient(j: usize) -> Result<Certificate> {
    check_j(j, 3)?;
    timed("theta", json!({ "j": j }), || {
        let t = FeynmanTransform::new(Operad::HLie);
        let c = theta_coefficient(&t, j)?;
        let mut ok = c.theta_dim == 1 && c.beta_nonzero && !c.coefficient.is_zero();
        let mut witness = json!({
            "theta_dim": c.theta_dim,
            "beta_nonzero": c.beta_nonzero,
            "coefficient": format_q(&c.coefficient),
            "nests": c.per_nest.iter().map(|(n, x)| json!({ "edges": n, "coefficient": format_q(x) })).collect::<Vec<_>>(),
        });
        if j >= 2 {
            let k = kernel_identity(j);
            let polygons = x_labeled_polygons(j)?.len();
            let x_hit = x_in_polygon_image(j)?;
            let kernel_ok = k.combination.is_zero() && k.claim_one && k.claim_two && k.v_over_x.is_some();
            ok &= kernel_ok && polygons == polygon_count_formula(j) && x_hit;
            witness["kernel_identity"] = json!({
                "combination_vanishes": k.combination.is_zero(),
                "claim_one": k.claim_one,
                "claim_two": k.claim_two,
                "v_over_x": k.v_over_x.as_ref().map(format_q),
            });
            witness["polygons"] = json!({
                "count": polygons,
                "formula": polygon_count_formula(j),
                "x_in_image": x_hit,
            });
        }
        Ok((ok, witness))
    })
}

/// A nonzero entry of a θ row.
#[derive(Clone, Debug)]
pub struct ThetaEntry {
    pub source: ModularGraph,
    pub basis_index: usize,
    pub value: Q,
}

/// The θ row of the differential on sources with `edges` edges and
/// internal degree `degree` in `B(H_Lie)(2j+1, 0)`.
pub fn theta_row(
    j: usize,
    edges: usize,
    degree: usize,
    mode: DifferentialMode,
    no_simple_loops: bool,
) -> Result<(usize, Vec<ThetaEntry>)> {
    let t = FeynmanTransform::new(Operad::HLie);
    let theta = canonical_form(&theta_graph(j))?.0;
    let filter = GraphFilter {
        max_vertex_genus: Some(1),
        no_simple_loops,
        min_edges: Some(edges),
        max_edges: Some(edges),
        ..Default::default()
    };
    let graphs = enumerate_graphs(2 * j + 1, 0, &filter)?;
    let keep = |g: &ModularGraph| *g == theta;
    let per_graph: Vec<(usize, Vec<ThetaEntry>)> = graphs
        .par_iter()
        .map(|g| {
            let s = t.summand(g, degree);
            let key = std::sync::Arc::new(s.key.clone());
            let mut entries = Vec::new();
            for index in 0..s.dim() {
                let b = BasisRef {
                    key: key.clone(),
                    index,
                };
                let image = t.differential_of(&b, mode, Some(&keep))?;
                for value in image.project(&t, &theta, 2 * j) {
                    if !value.is_zero() {
                        entries.push(ThetaEntry {
                            source: g.clone(),
                            basis_index: index,
                            value,
                        });
                    }
                }
            }
            Ok((s.dim(), entries))
        })
        .collect::<Result<_>>()?;
    let sources = per_graph.iter().map(|(d, _)| d).sum();
    Ok((sources, per_graph.into_iter().flat_map(|(_, e)| e).collect()))
}

fn entries_json(entries: &[ThetaEntry]) -> Value {
    entries
        .iter()
        .take(8)
        .map(|e| json!({ "source": e.source.to_json(), "basis_index": e.basis_index, "value": format_q(&e.value) }))
        .collect()
}

/// The θ row of `∂_1` on bidegree `(2j+2, 2j)` of the complex without
/// simple loops is zero.
pub fn verify_propzero(j: usize) -> Result<Certificate> {
    verify_propzero_with(j, true)
}

/// As [`verify_propzero`]; with `no_simple_loops = false` the row is
/// computed on the whole complex instead.
pub fn verify_propzero_with(j: usize, no_simple_loops: bool) -> Result<Certificate> {
    check_j(j, 3)?;
    timed(
        "propzero",
        json!({ "j": j, "no_simple_loops": no_simple_loops }),
        || {
            let (sources, entries) = theta_row(j, 2 * j + 2, 2 * j, DifferentialMode::SingleEdges, no_simple_loops)?;
            Ok((
                entries.is_empty(),
                json!({ "sources": sources, "nonzero_entries": entries.len(), "entries": entries_json(&entries) }),
            ))
        },
    )
}

/// In every bidegree `(4j+2-s, s)` with `s > 0` the θ component of `∂` on
/// the complex without simple loops vanishes.
pub fn verify_deg0(j: usize) -> Result<Certificate> {
    check_j(j, 2)?;
    timed("deg0", json!({ "j": j }), || {
        let mut ok = true;
        let mut rows = Vec::new();
        for s in (2..=2 * j).step_by(2) {
            let (sources, entries) = theta_row(j, 4 * j + 2 - s, s, DifferentialMode::Full, true)?;
            ok &= entries.is_empty();
            rows.push(json!({ "s": s, "sources": sources, "nonzero_entries": entries.len(), "entries": entries_json(&entries) }));
        }
        Ok((ok, json!({ "bidegrees": rows })))
    })
}

/// `[ω_{2j+1}] ≠ 0` in `H_0(GC_2)`. The pipeline route combines the four
/// statements above; the brute force route builds `GC_2` around degree 0.
pub fn verify_nontriviality(j: usize, brute_force: bool) -> Result<Certificate> {
    check_j(j, 2)?;
    let route = if brute_force { "brute-force" } else { "pipeline" };
    timed("nontrivial", json!({ "j": j, "route": route }), || {
        if brute_force {
            let genus = 2 * j + 1;
            let slice = gc2_slice(genus, 0)?;
            let t = FeynmanTransform::new(Operad::Com);
            let omega = omega_chain(&t, j)?;
            let (b, c) = omega
                .terms()
                .iter()
                .next()
                .ok_or_else(|| Error::InvalidParameter("ω vanishes".into()))?;
            let basis = slice.basis(0);
            let i = basis
                .iter()
                .position(|g| *g == b.key.graph)
                .ok_or_else(|| Error::InvalidParameter("ω not in GC_2 basis".into()))?;
            let mut v = vec![Q::zero(); basis.len()];
            v[i] = c.clone();
            let cycle = slice.slice.boundaries[&0].mul_vec(&v).iter().all(Zero::is_zero);
            let boundary = in_span(&v, &slice.slice.boundaries[&1])?;
            let h0 = slice.slice.homology_rank(0)?;
            Ok((
                cycle && !boundary,
                json!({
                    "dims": slice.slice.dims.iter().map(|(d, n)| (d.to_string(), *n)).collect::<std::collections::BTreeMap<_, _>>(),
                    "cycle": cycle,
                    "in_boundary_image": boundary,
                    "h0": h0,
                }),
            ))
        } else {
            let parts = [
                verify_wheel_cycle(j)?,
                verify_theta_coefficient(j)?,
                verify_propzero(j)?,
                verify_deg0(j)?,
            ];
            let ok = parts.iter().all(Certificate::passed);
            Ok((
                ok,
                json!({ "parts": parts.iter().map(|c| json!({ "claim": c.claim, "verdict": c.verdict })).collect::<Vec<_>>() }),
            ))
        }
    })
}

/// `∂ ∘ ∂ = 0` on `B(P)(g, n)` as a matrix identity in every degree.
pub fn verify_dsquared(operad: Operad, g: usize, n: usize) -> Result<Certificate> {
    timed(
        "dsquared",
        json!({ "operad": operad.to_string(), "g": g, "n": n }),
        || {
            let c = build_complex(operad, g, n, ComplexOptions::default())?;
            let slice = c.slice()?;
            let mut checked = Vec::new();
            let mut failure = Value::Null;
            for (&d, a) in &slice.boundaries {
                if let Some(b) = slice.boundaries.get(&(d + 1)) {
                    let p = a.mul(b)?;
                    checked.push(d + 1);
                    if let Some((r, col, x)) = p.entries().into_iter().next() {
                        failure = json!({ "degree": d + 1, "row": r, "col": col, "value": format_q(&x) });
                        break;
                    }
                }
            }
            let dims: std::collections::BTreeMap<String, usize> =
                c.dims().iter().map(|(d, n)| (d.to_string(), *n)).collect();
            Ok((
                failure.is_null(),
                json!({ "dims": dims, "degrees_checked": checked, "failure": failure }),
            ))
        },
    )
}
