//! Bhargava cubes, binary quadratic forms and oriented ideals over the rings
//! of integers of `Q` and `Q(sqrt 2)`, with exact arithmetic throughout.

pub mod base;
pub mod cli;
pub mod cube;
pub mod error;
pub mod extension;
pub mod forms;
pub mod ideal;
pub mod json;
pub mod matrix;
pub mod oracle;
pub mod triple;
pub mod verify;

pub use base::{BaseElement, BaseField, BaseRational, SignVector};
pub use error::{Error, Result};
pub use extension::{ExtElement, Extension};
pub use forms::QuadForm;
pub use ideal::OrientedIdeal;
pub use matrix::Mat2;
