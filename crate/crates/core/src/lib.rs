//! A workbench for finite order duality and maximality constructions.
//!
//! The crate models, at desk scale, the way maximality principles behave
//! across the duality between finite distributive lattices and finite
//! posets: prime/maximal filter enumeration, ideal-lattice pullbacks,
//! Heyting and Boolean views, free distributive lattices, modal and tense
//! algebras against relational spaces, and one genuinely infinite
//! two-chain space handled symbolically.
//!
//! Everything is exact and deterministic: elements are dense integer
//! indices, enumerations run in ascending index/numeric order, and every
//! "choose" picks the least-index witness, so repeated runs give identical
//! output.

pub mod checks;
pub mod corpus;
pub mod dlattice;
pub mod duality;
pub mod elemset;
pub mod error;
pub mod freedl;
pub mod heyting;
pub mod modal;
pub mod omegaspace;
pub mod poset;
pub mod tense;

pub use checks::{run_all_checks, CaseResult, CheckReport, SuiteResult};
pub use dlattice::{
    boolean_envelope, clmax_pullback, enumerate_prime_filters, enumerate_prime_ideals,
    from_upsets, ideal_lattice, maximal_filters, maximal_ideals, pit_witness,
    quotient_by_congruence, BooleanEnvelope, ClMaxCase, ClMaxProbe, DLattice, FiKind,
    FilterOrIdeal, IdealLattice, PrimePair, UpsetLattice,
};
pub use duality::{
    esakia_condition_finite, priestley_dual, round_trip_poset, stone_dual,
    surjection_to_subspace, DualityWitness, RoundTrip, SubspaceWitness,
};
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use freedl::{
    clause_element, conjunctive_form, dual_cube_witness, generate_free, implication_lemma,
    implication_pointwise, meet_irreducible_decomposition, normalize, AntichainTerm, FreeDL,
    FREE_SIZES, MAX_GENERATORS,
};
pub use heyting::{
    boolean_to_max_filter, booleanization, check_max_filter_bijection, max_filter_to_boolean,
    Booleanization, HeytingAlgebra, MaxFilterBijection,
};
pub use modal::{
    algebra_from_space, cluster_quotient, famax_quotient, jt_round_trip, open_fixpoint_lattice,
    relativize, require_k4, require_s4, space_from_algebra, FamaxWitness, JtWitness,
    ModalAlgebra, Reflexivized, RelSpace, Relativized,
};
pub use omegaspace::{
    classify, down_closure_sym, point_leq, subspace_c, truncation, up_closure_sym,
    verify_example, ChainPart, OmegaReport, Point, TailSet, TopoVerdict, CHAIN_INDEX_BOUND,
    MAX_FAMILY_BOUND,
};
pub use poset::{find_order_isomorphism, quotient_of_quasi_order, Poset};
pub use tense::{biheyting_fixpoints, tense_from_space, TenseAlgebra};
