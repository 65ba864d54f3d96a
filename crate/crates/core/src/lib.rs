//! Ortho-radial representations of planar 4-graphs: validity testing,
//! rectangulation and grid drawings on the cylinder.

pub mod cycle;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod layout;
pub mod oracle;
pub mod rectangulate;
pub mod rep;
pub mod sketch;
pub mod transform;
pub mod validity;

pub use cycle::{is_essential, labeling, CycleError, CycleLabeling};
pub use graph::{twin, DartId, EdgeId, EmbeddedGraph, FaceId, GraphError, VertexId};
pub use format::{parse_instance, write_instance, FormatError, Instance};
pub use layout::{assign_coordinates, draw, project_back, realize_check, GridDrawing, PolylineDrawing};
pub use rectangulate::{rectangulate, AugmentMap, Mode, Port, PortKind, RectError};
pub use rep::{Direction, OrthoRadialRep, RepError, Violation};
pub use sketch::{Anchors, Sketch, SketchError};
pub use transform::{flip, mirror, normalize, Lineage, NormalizationMap, TransformError};
pub use validity::{find_decreasing, is_valid, MonotoneReport, ValidityError, Verdict};
