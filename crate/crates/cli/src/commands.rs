use std::collections::BTreeMap;

use serde_json::{json, Value};

use graphcx::feynman::{build_complex, gc2_slice, ComplexOptions, FeynmanComplex, Operad};
use graphcx::graph::{automorphisms, enumerate_graphs, GraphFilter, ModularGraph};
use graphcx::rational::format_q;
use graphcx::symrep::{
    cyclic_multiplicity, full_restriction_multiplicity, partitions, relation_span_dimension, wreath_hook_multiplicity,
    Partition,
};
use graphcx::verify::{
    verify_deg0, verify_dsquared, verify_nontriviality, verify_propzero, verify_theta_coefficient, verify_wheel_cycle,
    Certificate,
};

use crate::config::Settings;
use crate::output::Report;
use crate::CliError;

/// A rendered result and whether every check in it passed.
pub struct Outcome {
    pub report: Report,
    pub ok: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, ok: true }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Genus and legs, checked against `2g + n ≥ 3`.
fn genus_legs(s: &Settings) -> Result<(usize, usize), CliError> {
    let g: usize = s.require("genus")?;
    let n: usize = s.get("legs")?.unwrap_or(0);
    if 2 * g + n < 3 {
        return Err(usage(format!("unstable parameters: 2g + n = {} < 3", 2 * g + n)));
    }
    Ok((g, n))
}

fn operad(s: &Settings, default: Operad) -> Result<Operad, CliError> {
    match s.raw("operad") {
        None => Ok(default),
        Some(v) => v
            .parse()
            .map_err(|_| usage(format!("--operad {v:?}: expected com or hlie"))),
    }
}

fn j_param(s: &Settings) -> Result<usize, CliError> {
    let j: usize = s.require("j")?;
    if j == 0 {
        return Err(usage("--j must be at least 1"));
    }
    Ok(j)
}

fn options(s: &Settings) -> Result<ComplexOptions, CliError> {
    Ok(ComplexOptions {
        no_loops: s.enabled("no-loops")?,
        no_simple_loops: s.enabled("no-simple-loops")?,
        ..Default::default()
    })
}

fn partition(s: &Settings, key: &str) -> Result<Option<Partition>, CliError> {
    s.raw(key)
        .map(|v| v.parse::<Partition>().map_err(|e| usage(format!("--{key} {v:?}: {e}"))))
        .transpose()
}

fn describe(g: &ModularGraph) -> String {
    let edges: Vec<String> = (0..g.edge_count())
        .map(|e| {
            let (a, b) = g.edge_endpoints(e);
            format!("{a}-{b}")
        })
        .collect();
    let legs: Vec<String> = g.legs().iter().map(|&f| g.vertex_of(f).to_string()).collect();
    format!(
        "genera {:?}  edges [{}]  legs [{}]",
        g.genera(),
        edges.join(" "),
        legs.join(" ")
    )
}

pub fn enumerate(s: &Settings) -> Result<Outcome, CliError> {
    let (g, n) = genus_legs(s)?;
    let filter = GraphFilter {
        max_vertex_genus: match s.raw("operad") {
            Some(_) => Some(operad(s, Operad::HLie)?.max_vertex_genus()),
            None => None,
        },
        no_loops: s.enabled("no-loops")?,
        no_simple_loops: s.enabled("no-simple-loops")?,
        ..Default::default()
    };
    let mut graphs = enumerate_graphs(g, n, &filter)?;
    graphs.sort_by_cached_key(|x| (x.edge_count(), x.vertex_count(), x.to_json_string()));
    let mut rows = Vec::new();
    let mut human = format!("{} graphs of genus {g} with {n} legs\n", graphs.len());
    for (i, x) in graphs.iter().enumerate() {
        let aut = automorphisms(x).len();
        rows.push(vec![
            i.to_string(),
            x.vertex_count().to_string(),
            x.edge_count().to_string(),
            aut.to_string(),
            x.to_json_string(),
        ]);
        human.push_str(&format!("{i:>4}  |Aut| {aut:<4} {}\n", describe(x)));
    }
    // graph JSON has a fixed key order, so it is not routed through `Value`
    let texts: Vec<String> = graphs.iter().map(|x| format!("  {}", x.to_json_string())).collect();
    let raw = if texts.is_empty() {
        "[]\n".to_string()
    } else {
        format!("[\n{}\n]\n", texts.join(",\n"))
    };
    Ok(Report::table(
        Value::Null,
        &["index", "vertices", "edges", "automorphisms", "graph"],
        rows,
    )
    .with_human(human)
    .with_raw_json(raw)
    .into())
}

fn complex_from(s: &Settings) -> Result<(FeynmanComplex, usize, usize), CliError> {
    let (g, n) = genus_legs(s)?;
    let op = operad(s, Operad::HLie)?;
    Ok((build_complex(op, g, n, options(s)?)?, g, n))
}

pub fn complex(s: &Settings) -> Result<Outcome, CliError> {
    let (c, g, n) = complex_from(s)?;
    let dims = c.dims();
    let bidegrees: Vec<Value> = c
        .bidegree_dims()
        .iter()
        .map(|(&(e, d), &k)| json!({ "edges": e, "internal_degree": d, "dim": k }))
        .collect();
    let json = json!({
        "operad": c.operad().to_string(),
        "g": g,
        "n": n,
        "no_loops": s.enabled("no-loops")?,
        "no_simple_loops": s.enabled("no-simple-loops")?,
        "dims": dims.iter().map(|(d, k)| (d.to_string(), *k)).collect::<BTreeMap<_, _>>(),
        "bidegrees": bidegrees,
        "total": dims.values().sum::<usize>(),
    });
    let rows = dims.iter().map(|(d, k)| vec![d.to_string(), k.to_string()]).collect();
    Ok(Report::table(json, &["degree", "dim"], rows).into())
}

pub fn differential(s: &Settings) -> Result<Outcome, CliError> {
    let (c, g, n) = complex_from(s)?;
    let d: i64 = s.require("degree")?;
    if !c.dims().contains_key(&d) {
        let range: Vec<i64> = c.degrees().collect();
        return Err(usage(format!(
            "degree {d} is outside the complex, which lives in {range:?}"
        )));
    }
    let m = c.differential_matrix(d)?;
    let entries = m.entries();
    let json = json!({
        "operad": c.operad().to_string(),
        "g": g,
        "n": n,
        "degree": d,
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries.iter().map(|(r, col, x)| json!([r, col, format_q(x)])).collect::<Vec<_>>(),
    });
    let rows = entries
        .iter()
        .map(|(r, col, x)| vec![r.to_string(), col.to_string(), format_q(x)])
        .collect();
    let human = format!(
        "# {} x {} matrix, degree {d} -> {}\n{}",
        m.rows(),
        m.cols(),
        d - 1,
        m.to_coordinate_text()
    );
    Ok(Report::table(json, &["row", "col", "value"], rows)
        .with_human(human)
        .into())
}

pub fn homology(s: &Settings) -> Result<Outcome, CliError> {
    let ranks: Vec<(usize, i64, usize)> = if s.enabled("gc2")? {
        let g: usize = s.require("genus")?;
        if g < 2 {
            return Err(usage("GC2 needs genus at least 2"));
        }
        let d: i64 = s.get("degree")?.unwrap_or(0);
        let slice = gc2_slice(g, d)?;
        vec![(g, d, slice.slice.homology_rank(d)?)]
    } else {
        let (c, g, _) = complex_from(s)?;
        c.homology()?.into_iter().map(|(d, r)| (g, d, r)).collect()
    };
    let json = Value::Array(
        ranks
            .iter()
            .map(|(g, d, r)| json!({ "genus": g, "degree": d, "rank": r }))
            .collect(),
    );
    let rows = ranks
        .iter()
        .map(|(g, d, r)| vec![g.to_string(), d.to_string(), r.to_string()])
        .collect();
    Ok(Report::table(json, &["genus", "degree", "rank"], rows).into())
}

/// Rows of `partition, subgroup, irrep, multiplicity`.
fn rep_report(rows: Vec<[String; 4]>) -> Outcome {
    let json = Value::Array(
        rows.iter()
            .map(|[p, g, i, m]| json!({ "partition": p, "subgroup": g, "irrep": i, "multiplicity": m.parse::<u64>().unwrap_or(0) }))
            .collect(),
    );
    Report::table(
        json,
        &["partition", "subgroup", "irrep", "multiplicity"],
        rows.into_iter().map(Vec::from).collect(),
    )
    .into()
}

pub fn rep_wreath(s: &Settings) -> Result<Outcome, CliError> {
    let q: usize = s.require("q")?;
    if q == 0 {
        return Err(usage("--q must be at least 1"));
    }
    let hooks = match partition(s, "hook")? {
        Some(h) if h.size() != 2 * q => return Err(usage(format!("--hook {h} must have {} boxes", 2 * q))),
        Some(h) => vec![h],
        None => partitions(2 * q).into_iter().filter(Partition::is_hook).collect(),
    };
    let rows = hooks
        .iter()
        .map(|h| {
            [
                h.to_string(),
                format!("S2 wr S{q}"),
                format!("L{q}"),
                wreath_hook_multiplicity(h, q).to_string(),
            ]
        })
        .collect();
    Ok(rep_report(rows))
}

pub fn rep_restrict(s: &Settings) -> Result<Outcome, CliError> {
    let shape = partition(s, "shape")?.ok_or_else(|| usage("--shape is required"))?;
    let q: usize = s.require("q")?;
    if 2 * q > shape.size() {
        return Err(usage(format!("2q = {} exceeds |{shape}|", 2 * q)));
    }
    let m = shape.size() - 2 * q;
    let betas = match partition(s, "beta")? {
        Some(b) if b.size() != m => return Err(usage(format!("--beta {b} must have {m} boxes"))),
        Some(b) => vec![b],
        None => partitions(m),
    };
    let rows = betas
        .iter()
        .map(|b| {
            [
                shape.to_string(),
                format!("S2 wr S{q} x S{m}"),
                format!("L{q} x {b}"),
                full_restriction_multiplicity(&shape, q, b).to_string(),
            ]
        })
        .collect();
    Ok(rep_report(rows))
}

pub fn rep_cyclic(s: &Settings) -> Result<Outcome, CliError> {
    let shape = partition(s, "shape")?.ok_or_else(|| usage("--shape is required"))?;
    let n = shape.size();
    if n == 0 {
        return Err(usage("--shape must be nonempty"));
    }
    let indices = match s.get::<usize>("i")? {
        Some(i) if i >= n => return Err(usage(format!("--i must be below {n}"))),
        Some(i) => vec![i],
        None => (0..n).collect(),
    };
    let rows = indices
        .iter()
        .map(|&i| {
            [
                shape.to_string(),
                format!("Z{n}"),
                format!("W{i}"),
                cyclic_multiplicity(&shape, i).to_string(),
            ]
        })
        .collect();
    Ok(rep_report(rows))
}

pub fn rep_relations(s: &Settings) -> Result<Outcome, CliError> {
    let t: usize = s.require("t")?;
    let j = j_param(s)?;
    if t == 0 {
        return Err(usage("--t must be at least 1"));
    }
    let dim = relation_span_dimension(t, j);
    let hook = binomial(t + 2 * j - 1, 2 * j - 1);
    let json = json!({ "t": t, "j": j, "span_dimension": dim, "hook_dimension": hook, "equal": dim == hook });
    let rows = vec![vec![t.to_string(), j.to_string(), dim.to_string(), hook.to_string()]];
    Ok(Outcome {
        report: Report::table(json, &["t", "j", "span_dimension", "hook_dimension"], rows),
        ok: dim == hook,
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Claim {
    WheelCycle,
    Theta,
    Propzero,
    Deg0,
    Nontrivial,
    Dsquared,
    All,
}

fn slow_guard(s: &Settings, j: usize, what: &str) -> Result<(), CliError> {
    if j >= 3 && !s.enabled("opt-in-slow")? {
        return Err(usage(format!("{what} with j = {j} is slow; pass --opt-in-slow")));
    }
    Ok(())
}

fn dsquared(s: &Settings) -> Result<Certificate, CliError> {
    let op = operad(s, Operad::HLie)?;
    let (g, n) = genus_legs(s)?;
    if g + n > 6 && !s.enabled("opt-in-slow")? {
        return Err(usage(format!("({g},{n}) is slow; pass --opt-in-slow")));
    }
    Ok(verify_dsquared(op, g, n)?)
}

fn certificate(s: &Settings, claim: Claim) -> Result<Certificate, CliError> {
    if claim == Claim::Dsquared {
        return dsquared(s);
    }
    let j = j_param(s)?;
    Ok(match claim {
        Claim::WheelCycle => verify_wheel_cycle(j)?,
        Claim::Theta => {
            slow_guard(s, j, "theta")?;
            verify_theta_coefficient(j)?
        }
        Claim::Propzero => {
            slow_guard(s, j, "propzero")?;
            verify_propzero(j)?
        }
        Claim::Deg0 => verify_deg0(j)?,
        Claim::Nontrivial => verify_nontriviality(j, s.enabled("brute-force")?)?,
        Claim::Dsquared | Claim::All => unreachable!("handled by the caller"),
    })
}

fn certificates_report(certs: &[Certificate], single: bool) -> Report {
    let json = if single {
        serde_json::to_value(&certs[0]).expect("certificate json")
    } else {
        serde_json::to_value(certs).expect("certificate json")
    };
    let verdict = |c: &Certificate| if c.passed() { "PASS" } else { "FAIL" };
    let rows = certs
        .iter()
        .map(|c| {
            vec![
                c.claim.clone(),
                verdict(c).to_string(),
                c.ms.to_string(),
                c.params.to_string(),
                c.witness.to_string(),
            ]
        })
        .collect();
    let human = certs
        .iter()
        .map(|c| format!("{}  {}  {}  ({} ms)\n", verdict(c), c.claim, c.params, c.ms))
        .collect();
    Report::table(json, &["claim", "verdict", "ms", "params", "witness"], rows).with_human(human)
}

pub fn verify(s: &Settings, claim: Claim) -> Result<Outcome, CliError> {
    let certs = if claim == Claim::All {
        let j = j_param(s)?;
        let mut s = s.clone();
        if s.raw("genus").is_none() {
            s.set("genus", 2 * j + 1).expect("known key");
        }
        if j == 1 {
            s.set("brute-force", "true").expect("known key");
        }
        let mut certs = Vec::new();
        for c in [
            Claim::WheelCycle,
            Claim::Theta,
            Claim::Propzero,
            Claim::Deg0,
            Claim::Nontrivial,
            Claim::Dsquared,
        ] {
            certs.push(certificate(&s, c)?);
        }
        certs.sort_by(|a, b| a.claim.cmp(&b.claim));
        certs
    } else {
        vec![certificate(s, claim)?]
    };
    Ok(Outcome {
        ok: certs.iter().all(Certificate::passed),
        report: certificates_report(&certs, claim != Claim::All),
    })
}
