//! File formats, the parallel ratio-experiment driver and the `qupart`
//! command-line interface on top of [`qupart_core`].

pub mod cli;
pub mod experiment;
pub mod io;
