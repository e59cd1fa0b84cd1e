//! Error type shared by every module of the crate.
//!
//! Operations that can be handed malformed or oversized input return
//! `Result<T, Error>`; pure structural accessors panic on out-of-range
//! indices like any other Rust container.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or transforming a structure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An element index does not exist in the carrier it was used with.
    #[error("element index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    /// A construction would exceed the configured carrier-size bound.
    #[error("capacity exceeded: construction needs {requested} elements, bound is {bound}")]
    CapacityExceeded { requested: usize, bound: usize },

    /// A relation offered as a partial order fails one of the order laws.
    #[error("not a partial order: {law} fails at ({a}, {b})")]
    NotAPartialOrder { law: &'static str, a: usize, b: usize },

    /// Meet/join tables fail a lattice law; the witness names the law and
    /// the offending elements.
    #[error("not a lattice: {law} fails at ({a}, {b}, {c})")]
    LatticeLawFailed { law: &'static str, a: usize, b: usize, c: usize },

    /// The lattice laws hold but distributivity does not.
    #[error("not distributive: a∧(b∨c) ≠ (a∧b)∨(a∧c) at a={a}, b={b}, c={c}")]
    NotDistributive { a: usize, b: usize, c: usize },

    /// A Boolean-only operation was applied to a lattice with a
    /// complement-free element.
    #[error("not Boolean: element {element} has no complement")]
    NotBoolean { element: usize },

    /// Prime-filter machinery is undefined on the one-element lattice.
    #[error("trivial lattice: bottom equals top")]
    TrivialLattice,

    /// A set offered as a filter/ideal fails the defining closure property.
    #[error("not a {kind}: {reason} (witness element {witness})")]
    NotAFilterOrIdeal { kind: &'static str, reason: &'static str, witness: usize },

    /// An operation requires a proper filter or ideal.
    #[error("{kind} is improper (contains {witness})")]
    Improper { kind: &'static str, witness: usize },

    /// The prime-ideal-theorem witness search requires disjoint inputs.
    #[error("filter and ideal are not disjoint: both contain {witness}")]
    NotDisjoint { witness: usize },

    /// A pair set offered as a lattice congruence breaks substitution.
    #[error("not a congruence: {a} ~ {b} but {op}({a}, {c}) and {op}({b}, {c}) fall in different classes")]
    NotACongruence { op: &'static str, a: usize, b: usize, c: usize },

    /// A block structure offered as a partition does not partition the carrier.
    #[error("not a partition: {reason} (element {witness})")]
    NotAPartition { reason: &'static str, witness: usize },

    /// A quotient of a quasi-order is only defined when the partition is
    /// compatible with the relation.
    #[error("quotient not well defined: blocks of {a} and {b} are related in one direction only via ({c}, {d})")]
    QuotientNotWellDefined { a: usize, b: usize, c: usize, d: usize },

    /// A set that must be an upset (or downset) is not.
    #[error("not an upset: contains {lower} but not {upper} above it")]
    NotAnUpset { lower: usize, upper: usize },

    /// An operator table violates the normality/meet-preservation laws.
    #[error("not a modal operator: {law} fails at ({a}, {b})")]
    NotAModalOperator { law: &'static str, a: usize, b: usize },

    /// Tense pairs must satisfy both connecting axioms.
    #[error("connecting axiom {axiom} fails at element {witness}")]
    ConnectingAxiomFailed { axiom: &'static str, witness: usize },

    /// The operation requires a transitive (K4) modal input.
    #[error("input is not K4: □a ≤ □□a fails at element {witness}")]
    NotK4 { witness: usize },

    /// The operation requires a reflexive-transitive (S4) modal input.
    #[error("input is not S4: {law} fails at element {witness}")]
    NotS4 { law: &'static str, witness: usize },

    /// Free-lattice constructions are only feasible for few generators.
    #[error("generator count {n} exceeds the supported bound {max} (the next size is {next_size} elements)")]
    GeneratorLimit { n: usize, max: usize, next_size: u64 },

    /// Relativization by the bottom element is undefined.
    #[error("cannot relativize to the bottom element")]
    RelativizeToBottom,

    /// The two-chain structure only tracks finitely many explicit indices.
    #[error("chain index {index} exceeds the supported bound {bound}")]
    ChainIndexTooLarge { index: usize, bound: usize },

    /// A search whose success is a theorem came back empty; this indicates a
    /// bug in the construction it verifies, never a property of the input.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(&'static str),
}
