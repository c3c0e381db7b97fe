//! Exact enumeration of plane partitions, shifted plane partitions and lozenge
//! tilings of triangular-lattice regions with free boundaries.

pub mod error;
pub mod exactlinalg;
pub mod exactnum;
pub mod formulas;
pub mod lattice;
pub mod ppcore;
pub mod shapes;

pub use error::{Error, Result};
pub use exactnum::{Count, ExactRational, QPoly};
pub use formulas::FlashlightParams;
pub use lattice::{
    Budget, DualGraph, KuoVertices, Provenance, Region, Tiling, Tri,
};
pub use ppcore::PlanePartition;
pub use shapes::{Partition, Shape, ShapeFamily, StrictPartition};
