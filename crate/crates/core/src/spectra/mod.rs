//! Sequential spectra for a suspension endofunctor `- ⊗ K` on the base
//! category, with their stable theory: loop adjoints, the `R = s∘U`
//! stabilization tower and its colimit, stable homotopy groups, and the
//! fibration/cofibration tests.

mod spectrum;
mod stable;

pub use spectrum::{
    adjunction_report, eval, free_eval_counit, free_spectrum, iterated_sigma, map_shift_s,
    map_shift_t, prolong_functor, shift_counit, shift_unit, suspension_comparison_map,
    AdjunctionReport, ComplexFunctor, IdentityFunctor, LoopsFunctor, Spectrum, SpectrumMap,
    TensorFunctor,
};
pub use stable::{
    cofibration_corner, cofree, cofree_unit, is_projective_cofibration, is_stable_equivalence,
    is_stable_fibration, is_u_spectrum, j_is_level_equivalence, pullback_spectrum, r_infinity,
    r_infinity_is_u_spectrum, r_once, spectrum_has_lift, stabilization_is_iso_at, stable_pi,
    ProbeGrid, RInfinityProbe,
};
