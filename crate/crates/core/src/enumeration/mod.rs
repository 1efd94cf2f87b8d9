//! Counting plane tropical curves through generic points with floor
//! diagrams, the Kontsevich recursion, and cross-ratio coordinates on the
//! moduli of rational tropical curves.

mod floor;
mod kontsevich;
mod moduli;

pub use floor::{count_curves, enumerate_floor_diagrams, max_genus, FloorDiagram, FloorEdge};
pub use kontsevich::kontsevich_n;
pub use moduli::{CrossRatio, TropicalTree};

/// Default ceiling on the degree accepted by the enumeration front end.
pub const DEFAULT_MAX_DEGREE: usize = 6;
