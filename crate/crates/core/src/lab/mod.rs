//! Exhaustive checks of rainbow-path statements on small graphs: colour
//! partition enumeration, the all-colourings path check, the shift-graph
//! claims and the stable-cover path search.

mod aravind;
mod claims;
mod partitions;
mod stable_cover;

pub use aravind::{
    check_aravind, check_aravind_unpruned, check_aravind_with, AravindOptions, AravindOutcome, AravindVerdict,
    CounterexampleReport, SearchStats, MAX_VERTICES,
};
pub use claims::{
    verify_monotone_rainbow_3paths, verify_monotone_rainbow_3paths_in, verify_rainbow_max_degree, DegreeVerdict,
    MonotoneVerdict, RainbowStar,
};
pub use partitions::{enumerate_colour_partitions, ColourPartitions};
pub use stable_cover::{search_stable_cover_path, CoverPath, StableCover};
