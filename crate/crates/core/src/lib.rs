//! Exact combinatorics of real hyperplane arrangements: covectors and face
//! posets, the Salvetti complex of the complexified complement, reflection
//! group actions, and Artin presentations of the quotient.

pub mod arrangement;
pub mod complex;
pub mod error;
pub mod export;
pub mod feasibility;
pub mod group;
pub mod homology;
pub mod linalg;
pub mod orbit;
pub mod poset;
pub mod salvetti;
pub mod sampling;
pub mod sign;

pub use arrangement::{
    braid_arrangement, coordinate_lines, dihedral_arrangement, dihedral_combinatorial,
    single_hyperplane, Arrangement, ArrangementFile, ChamberGraph, Face, FacePoset, DEFAULT_CAP,
};
pub use complex::{
    cell_complex_from_poset, euler_characteristic, nerve, order_complex, CellCounts,
    RegularCellComplexModel, SimplicialComplex,
};
pub use error::{Error, Result};
pub use group::{
    act_on_covector, act_on_sal, chamber_word, check_transitive_free, generate_group,
    reflection_group, reflection_of, symmetric_group_model, GroupElement, ReflectionGroup,
    SignedPermutation, DEFAULT_GROUP_CAP,
};
pub use homology::{boundary_matrices, ChainComplex, Homology, HomologyGroup};
pub use orbit::{
    boundary_word, coxeter_exponent, dual_complex_2d, presentation, quotient_homology,
    quotient_sal, relation_from_word, OrbitCellComplexModel, Presentation, Relation,
};
pub use poset::Poset;
pub use salvetti::{
    build_salvetti, check_sal_complex_order_iso, complex_covector_of_point, embed_vertices,
    from_complex_covector, sal_cell_complex, sal_leq, sal_order_complex, to_complex_covector,
    SalCell, SalPoset,
};
pub use sign::{
    check_covector_axioms, complex_sign_leq, compose, opposite, separation, sign_leq,
    ComplexSign, ComplexSignVector, Sign, SignVector,
};
