//! 1-planar diagrams as rotation systems of their associated plane graphs,
//! with charge bookkeeping, discharging rule sets, witness extraction and
//! degree-typed subgraph search.

pub mod charge;
pub mod cli;
pub mod construct;
pub mod diagram;
pub mod embedding;
pub mod patterns;
