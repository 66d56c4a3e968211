//! Graph JSON: `{"vertices":[{"id","genus"}],"flags":[{"id","vertex"}],
//! "edges":[[a,b]],"legs":{"1":f,...}}`. Unlisted flags are legs.

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;

use super::{AbstractGraph, FlagId, ModularGraph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: VertexId,
    pub genus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagJson {
    pub id: FlagId,
    pub vertex: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub flags: Vec<FlagJson>,
    pub edges: Vec<[FlagId; 2]>,
    pub legs: BTreeMap<String, FlagId>,
}

struct NumericLegs<'a>(&'a BTreeMap<String, FlagId>);

impl Serialize for NumericLegs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut entries: Vec<(&String, &FlagId)> = self.0.iter().collect();
        entries.sort_by_key(|(k, _)| (k.len(), (*k).clone()));
        let mut map = s.serialize_map(Some(entries.len()))?;
        for (k, v) in entries {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for GraphJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("vertices", &self.vertices)?;
        map.serialize_entry("flags", &self.flags)?;
        map.serialize_entry("edges", &self.edges)?;
        map.serialize_entry("legs", &NumericLegs(&self.legs))?;
        map.end()
    }
}

impl From<&ModularGraph> for GraphJson {
    fn from(g: &ModularGraph) -> Self {
        GraphJson {
            vertices: (0..g.vertex_count())
                .map(|v| VertexJson {
                    id: v,
                    genus: g.genus_of(v),
                })
                .collect(),
            flags: (0..g.flag_count())
                .map(|f| FlagJson {
                    id: f,
                    vertex: g.vertex_of(f),
                })
                .collect(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            legs: g
                .legs()
                .iter()
                .enumerate()
                .map(|(i, &f)| ((i + 1).to_string(), f))
                .collect(),
        }
    }
}

impl TryFrom<&GraphJson> for ModularGraph {
    type Error = Error;

    fn try_from(j: &GraphJson) -> Result<ModularGraph> {
        let nv = j.vertices.len();
        let mut genus = vec![None; nv];
        for v in &j.vertices {
            if v.id >= nv || genus[v.id].is_some() {
                return Err(Error::InvalidGraph(format!("bad vertex id {}", v.id)));
            }
            genus[v.id] = Some(v.genus);
        }
        let nf = j.flags.len();
        let mut adjacency = vec![None; nf];
        for f in &j.flags {
            if f.id >= nf || adjacency[f.id].is_some() {
                return Err(Error::InvalidGraph(format!("bad flag id {}", f.id)));
            }
            adjacency[f.id] = Some(f.vertex);
        }
        let mut involution: Vec<FlagId> = (0..nf).collect();
        for &[a, b] in &j.edges {
            if a >= nf || b >= nf || a == b || involution[a] != a || involution[b] != b {
                return Err(Error::InvalidGraph(format!("bad edge [{a},{b}]")));
            }
            involution[a] = b;
            involution[b] = a;
        }
        let mut legs = vec![None; j.legs.len()];
        for (k, &f) in &j.legs {
            let label: usize = k
                .parse()
                .map_err(|_| Error::InvalidGraph(format!("bad leg label {k:?}")))?;
            if label == 0 || label > legs.len() || legs[label - 1].is_some() {
                return Err(Error::InvalidGraph(format!("bad leg label {k:?}")));
            }
            legs[label - 1] = Some(f);
        }
        let graph = AbstractGraph::new(
            nv,
            adjacency.into_iter().map(|v| v.expect("checked")).collect(),
            involution,
        )?;
        ModularGraph::new(
            graph,
            genus.into_iter().map(|g| g.expect("checked")).collect(),
            legs.into_iter().map(|f| f.expect("checked")).collect(),
        )
    }
}

impl ModularGraph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson::from(self)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph json serializes")
    }

    pub fn from_json_str(s: &str) -> Result<ModularGraph> {
        let j: GraphJson = serde_json::from_str(s)?;
        ModularGraph::try_from(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_layout() {
        let g = ModularGraph::from_edges(vec![1], &[], &[0]).unwrap();
        assert_eq!(
            g.to_json_string(),
            r#"{"vertices":[{"id":0,"genus":1}],"flags":[{"id":0,"vertex":0}],"edges":[],"legs":{"1":0}}"#
        );
    }

    #[test]
    fn legs_sort_numerically() {
        let g = ModularGraph::from_edges(
            vec![0; 10],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)],
            &[0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 9],
        )
        .unwrap();
        let s = g.to_json_string();
        let i9 = s.find("\"9\":").unwrap();
        let i10 = s.find("\"10\":").unwrap();
        assert!(i9 < i10);
        assert_eq!(ModularGraph::from_json_str(&s).unwrap(), g);
    }
}
