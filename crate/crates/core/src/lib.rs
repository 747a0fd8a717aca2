//! Jack deformations of monotone Hurwitz numbers: the tau function and its
//! structural identities, the orthogonal and symplectic specializations, the
//! Pfaffian representations and the BKP hierarchy.

pub mod bgw;
pub mod bkp;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod ortho;
pub mod pfaffian;
pub mod powerseries;
pub mod report;
pub mod suite;
pub mod symmetric;
pub mod tau;

pub use error::{CoreError, Result};
