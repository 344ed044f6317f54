//! Exact list-colouring engine: counting, decision, chromatic and list
//! chromatic numbers, and uniform sampling.

mod choose;
mod chromatic;
mod count;
mod list;
mod sample;

pub use choose::{
    choosable_by_raw_enumeration, is_choosable_with_sizes, is_choosable_with_sizes_with,
    list_chromatic_number, list_chromatic_number_with, ChoosabilityReport, LIST_CHROMATIC_MAX_K,
};
pub use chromatic::{chromatic_number, chromatic_number_with, is_l_colorable, k_coloring};
pub use count::{
    constrained_order, count_by_backtracking, count_in_order, count_list_colorings,
    count_list_colorings_with, for_each_coloring,
};
pub use list::{
    degree_list_assignment, residual_list, Color, ListAssignment, ListAssignmentJson,
    PartialColoring, UniversePolicy,
};
pub use sample::{uniform_sample_coloring, ColoringSampler};
