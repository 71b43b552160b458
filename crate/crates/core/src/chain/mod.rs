//! The base category: bounded, finite-type, non-negatively graded chain
//! complexes over a prime field, with tensor structure, internal loops,
//! colimits and the lifting-property solver.

mod complex;
mod hom;
mod homotopy;
mod limits;
mod map;
mod model;
mod tensor;

pub use complex::ChainComplex;
pub use hom::{
    adjoint_to_loops, adjoint_to_loops_with, adjoint_to_tensor, adjoint_to_tensor_with, loops_counit,
    loops_counit_with, loops_map, loops_map_with, loops_u, loops_unit, loops_unit_with, partial_apply,
    LoopsData,
};
pub use homotopy::{homotopic, homotopy_from_interval, homotopy_to_interval, ChainHomotopy};
pub use limits::{
    coequalizer, induced_from_quotient, induced_into_pullback, kernel_subcomplex, pullback, pushout,
    quotient_by_image, Pullback, Pushout, Quotient, Sub,
};
pub use map::ChainMap;
pub use model::{classify_map, has_equivariant_lift, has_lift, MapClasses};
pub use tensor::{
    apply_endo_on_factors, apply_on_factors, block_twist, factor_permutation, multi_basis, nest,
    split_factor, tensor, tensor_map, tensor_power, twist, MultiBasis,
};
