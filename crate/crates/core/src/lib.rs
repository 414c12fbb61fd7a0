//! Exact dimensions and nonemptiness of affine Deligne-Lusztig varieties
//! through the folding combinatorics of alcove walks.

pub mod adlv_flag;
pub mod adlv_grass;
pub mod affweyl;
pub mod error;
pub mod folding;
pub mod levi;
pub mod report;
pub mod rootsys;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/root-data.md")]
    mod root_data {}
    #[doc = include_str!("../../../book/src/alcoves.md")]
    mod alcoves {}
    #[doc = include_str!("../../../book/src/folding.md")]
    mod folding {}
    #[doc = include_str!("../../../book/src/flag.md")]
    mod flag {}
    #[doc = include_str!("../../../book/src/levi.md")]
    mod levi {}
    #[doc = include_str!("../../../book/src/reports.md")]
    mod reports {}
}
