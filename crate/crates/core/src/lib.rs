//! Radii of starlikeness, convexity and strong starlikeness for normalized
//! Wright, Mittag-Leffler, Lommel, Struve, Legendre and Ramanujan-type
//! functions.

pub mod domains;
pub mod error;
pub mod family;
pub mod normalize;
pub mod series;
pub mod solver;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
