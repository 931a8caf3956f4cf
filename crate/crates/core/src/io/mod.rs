//! On-disk artifact formats: PGM images, GAFT tensors, checkpoints.

pub mod checkpoint;
pub mod gaft;
pub mod pgm;

pub use checkpoint::{read_checkpoint, write_checkpoint};
pub use gaft::{read_gaft, write_gaft, GaftData, GaftTensor};
pub use pgm::{read_pgm, write_pgm};
