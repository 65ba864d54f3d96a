//! JSON instance files.
//!
//! ```json
//! {
//!   "vertices": [0, 1, 2, 3],
//!   "edges": [[0, 1], [1, 2], [2, 3], [3, 0]],
//!   "rotations": [[0, 3], [1, 0], [2, 1], [3, 2]],
//!   "angles": {"0:+": 180, "0:-": 180, "1:+": 180, "1:-": 180,
//!              "2:+": 180, "2:-": 180, "3:+": 180, "3:-": 180},
//!   "outer": "0:-",
//!   "central": "0:+",
//!   "reference": "0:+"
//! }
//! ```
//!
//! Edge `i` is `edges[i]`; its dart `i:+` runs from the first endpoint to
//! the second and `i:-` back. `rotations[v]` lists the edges at `v` in
//! clockwise order. The angle of a dart is the corner at its head between
//! it and the next dart of the face on its right. A face is named by any
//! dart of its boundary walk; files written here use the smallest one.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DartId, EmbeddedGraph, GraphError};
use crate::rep::{OrthoRadialRep, RepError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed instance: {0}")]
    Json(#[from] serde_json::Error),
    #[error("vertices must be 0..{0} in order")]
    VertexIds(usize),
    #[error("bad dart key {0:?}")]
    DartKey(String),
    #[error("vertex {vertex} lists edge {edge}, which does not touch it")]
    Rotation { vertex: usize, edge: usize },
    #[error("angle missing for dart {0}")]
    MissingAngle(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub rotations: Vec<Vec<usize>>,
    pub angles: BTreeMap<String, u16>,
    pub outer: String,
    pub central: String,
    pub reference: String,
}

pub fn dart_key(d: DartId) -> String {
    format!("{}:{}", d / 2, if d.is_multiple_of(2) { '+' } else { '-' })
}

pub fn parse_dart_key(key: &str) -> Result<DartId, FormatError> {
    let bad = || FormatError::DartKey(key.to_string());
    let (e, s) = key.split_once(':').ok_or_else(bad)?;
    let e: usize = e.trim().parse().map_err(|_| bad())?;
    match s.trim() {
        "+" => Ok(2 * e),
        "-" => Ok(2 * e + 1),
        _ => Err(bad()),
    }
}

impl Instance {
    pub fn from_rep(rep: &OrthoRadialRep) -> Self {
        let g = rep.graph();
        let face_key = |f: usize| dart_key(*g.face(f).iter().min().expect("faces are non-empty"));
        Instance {
            vertices: (0..g.vertex_count()).collect(),
            edges: g.edge_list().into_iter().map(|(u, v)| [u, v]).collect(),
            rotations: (0..g.vertex_count())
                .map(|v| g.rotation(v).iter().map(|&d| d / 2).collect())
                .collect(),
            angles: (0..g.dart_count()).map(|d| (dart_key(d), rep.angle(d))).collect(),
            outer: face_key(rep.outer()),
            central: face_key(rep.central()),
            reference: dart_key(rep.reference()),
        }
    }

    pub fn to_rep(&self) -> Result<OrthoRadialRep, FormatError> {
        let n = self.vertices.len();
        if self.vertices.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(FormatError::VertexIds(n));
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let mut rotation = Vec::with_capacity(self.rotations.len());
        for (v, list) in self.rotations.iter().enumerate() {
            let darts = list
                .iter()
                .map(|&e| match edges.get(e) {
                    Some(&(a, _)) if a == v => Ok(2 * e),
                    Some(&(_, b)) if b == v => Ok(2 * e + 1),
                    _ => Err(FormatError::Rotation { vertex: v, edge: e }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            rotation.push(darts);
        }
        let g = EmbeddedGraph::new(n, &edges, rotation)?;
        for key in self.angles.keys() {
            let d = parse_dart_key(key)?;
            if d >= g.dart_count() {
                return Err(FormatError::DartKey(key.clone()));
            }
        }
        let angles = (0..g.dart_count())
            .map(|d| {
                let key = dart_key(d);
                self.angles.get(&key).copied().ok_or(FormatError::MissingAngle(key))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let face = |key: &str| -> Result<usize, FormatError> {
            let d = parse_dart_key(key)?;
            if d >= g.dart_count() {
                return Err(FormatError::DartKey(key.to_string()));
            }
            Ok(g.face_of(d))
        };
        let outer = face(&self.outer)?;
        let central = face(&self.central)?;
        let reference = parse_dart_key(&self.reference)?;
        Ok(OrthoRadialRep::new(g, &angles, outer, central, reference)?)
    }
}

pub fn parse_instance(text: &str) -> Result<OrthoRadialRep, FormatError> {
    serde_json::from_str::<Instance>(text)?.to_rep()
}

pub fn write_instance(rep: &OrthoRadialRep) -> String {
    serde_json::to_string_pretty(&Instance::from_rep(rep)).expect("instances serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_round_trip() {
        for rep in [fixtures::ring4(), fixtures::spiral4(), fixtures::theta(), fixtures::square()] {
            let text = write_instance(&rep);
            assert_eq!(parse_instance(&text).unwrap(), rep);
        }
    }

    #[test]
    fn unknown_field_is_rejected() {
        let mut v: serde_json::Value = serde_json::from_str(&write_instance(&fixtures::ring4())).unwrap();
        v["colour"] = "red".into();
        assert!(matches!(parse_instance(&v.to_string()), Err(FormatError::Json(_))));
    }

    #[test]
    fn missing_reference_is_rejected() {
        let mut v: serde_json::Value = serde_json::from_str(&write_instance(&fixtures::ring4())).unwrap();
        v.as_object_mut().unwrap().remove("reference");
        assert!(matches!(parse_instance(&v.to_string()), Err(FormatError::Json(_))));
    }

    #[test]
    fn dart_keys() {
        assert_eq!(dart_key(7), "3:-");
        assert_eq!(parse_dart_key("3:-").unwrap(), 7);
        assert!(parse_dart_key("3:x").is_err());
    }
}
