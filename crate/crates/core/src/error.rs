use thiserror::Error;

use crate::algebra::{AxiomReport, Elem};

/// Problems with the shape of an operation table, as opposed to axiom failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("operation table is empty")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },
    #[error("declared size {declared} does not match table with {rows} rows")]
    SizeMismatch { declared: usize, rows: usize },
    #[error("entry [{row}][{col}] = {value} is out of range for {size} elements")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Structure(#[from] StructuralError),
    #[error("table violates the cBCK axioms: {0}")]
    Axioms(AxiomReport),
    #[error("algebra has no top element")]
    Unbounded,
    #[error("homomorphism map has length {len}, source has {expected} elements")]
    MapLength { len: usize, expected: usize },
    #[error("homomorphism sends {elem} to {image}, outside a target of {size} elements")]
    MapOutOfRange { elem: Elem, image: usize, size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("the standard chain needs k >= 1; use FiniteCbckAlgebra::trivial for the one-element algebra")]
    ZeroChain,
    #[error("at least one component is required")]
    NoComponents,
    #[error("product would have {0} elements, above the {1} element limit")]
    TooLarge(usize, usize),
}

/// A resource guard was exceeded before an exhaustive computation finished.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: {actual} exceeds the guard of {limit}")]
pub struct GuardError {
    pub what: &'static str,
    pub actual: usize,
    pub limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error(transparent)]
    Guard(#[from] GuardError),
    #[error("congruence relation for the ideal is not transitive at ({0}, {1}, {2})")]
    NotTransitive(Elem, Elem, Elem),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("tree has no vertices")]
    Empty,
    #[error("vertex 0 must be the root (parent null)")]
    RootHasParent,
    #[error("vertex {0} has no parent but is not the root")]
    SecondRoot(usize),
    #[error("vertex {vertex} has parent {parent}, which is out of range")]
    ParentOutOfRange { vertex: usize, parent: usize },
    #[error("vertex {0} does not reach the root")]
    Cycle(usize),
    #[error("vertex {vertex} is out of range for a tree with {size} vertices")]
    VertexOutOfRange { vertex: usize, size: usize },
    #[error("first non-zero entry on the path to vertex {0} is negative")]
    NegativeLead(usize),
    #[error("element is not in the ideal generated at the meet of the two paths")]
    WitnessPrecondition,
    #[error(transparent)]
    Guard(#[from] GuardError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Guard(#[from] GuardError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("preimage of prime {prime} is the whole source algebra")]
    ImproperPreimage { prime: String },
    #[error("preimage of prime {prime} is not a prime ideal")]
    PreimageNotPrime { prime: String },
    #[error("order has {order} elements but space has {points} points")]
    OrderMismatch { order: usize, points: usize },
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("relation is not a {0}x{0} matrix")]
    Shape(usize),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive at ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),
    #[error("elements {0} and {1} have no {2}")]
    NotLattice(usize, usize, &'static str),
    #[error("distributivity fails at ({0}, {1}, {2})")]
    NotDistributive(usize, usize, usize),
    #[error("divisor lattice of 0 is not finite")]
    ZeroDivisor,
    #[error(transparent)]
    Guard(#[from] GuardError),
}
