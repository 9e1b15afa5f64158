//! Rectangle dissections: exact layout verification and enumeration,
//! mosaic floorplans, isoperimetric tile search, and the
//! highly-composite-number tile-set constructions.

pub mod enumerate;
pub mod floorplan;
pub mod hcn;
pub mod isoperimetric;
pub mod layout;
pub mod tiles;

pub use enumerate::{
    enumerate_layouts, layout_count, layout_count_with, tile_rectangle, EnumerateError,
    EnumerateOptions, LayoutClass,
};
pub use floorplan::{
    baxter_steps, enumerate_floorplans, is_baxter, Floorplan, FloorplanError, Room, Step,
};
pub use hcn::{
    build_hcn_tileset, construct_width_layout, divisor_count, divisors, hcn_layout_census,
    hcn_up_to, is_hcn, rows_layout, split_extension, triangular, HcnContext, HcnError,
};
pub use isoperimetric::{
    examine_floorplan, forced_equal_pairs, isoperimetric_system, search_isoperimetric,
    solve_isoperimetric, FloorplanVerdict, IsoError, IsoOptions, IsoOutcome, IsoReport, IsoVars,
    IsoWitness,
};
pub use layout::{verify_layout, Defect, Layout, Placement, Verdict};
pub use tiles::{SplitAxis, Tile, TileError, TileSet};
