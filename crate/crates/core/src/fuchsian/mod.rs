//! Free Fuchsian groups: words, balls, conjugacy classes, simplicity
//! certificates and the maximal cusp region.

mod ball;
mod classes;
mod cusp;
mod group;
mod word;

pub use ball::{ball, ball_size, Ball, BallEntry};
pub use classes::{
    conjugacy_classes, conjugacy_classes_in, simplicity, simplicity_in, verify_witness, ConjClass,
    Simplicity,
};
pub use cusp::{
    cusp_exclusion_check, cusp_exclusion_check_in, cusp_normalize, maximal_cusp, maximal_cusp_in,
    rescale_to_unit_height, CuspExclusion, CuspReport,
};
pub use group::{CuspData, CuspDocument, FuchsianGroup, Generator, GroupDocument};
pub use word::{letter_key, Word};
