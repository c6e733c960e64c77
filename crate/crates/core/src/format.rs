//! JSON input formats for algebras, trees, posets and lattices.

use serde::Deserialize;
use thiserror::Error;

use crate::algebra::{check_axioms, AxiomReport, FiniteCbckAlgebra};
use crate::constructions::{cbck_union, direct_product, standard_chain, CbckUnion};
use crate::duality::{
    boolean_lattice, boolean_plus_top, chain_lattice, divisor_lattice,
    free_distributive_lattice_two, FiniteDistLattice, FinitePoset,
};
use crate::error::{AlgebraError, ConstructionError, OrderError, StructuralError, TreeError};
use crate::tree::{canonical_antichain, PathIdeal, RootedTree, TreeElement, Vertex};

/// Anything that can be fed to the command line.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Spec {
    Table {
        #[serde(default)]
        size: Option<usize>,
        table: Vec<Vec<usize>>,
    },
    Chain {
        k: usize,
    },
    Union {
        components: Vec<Spec>,
    },
    Product {
        components: Vec<Spec>,
    },
    Tree {
        parents: Vec<Option<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    Poset {
        leq: Vec<Vec<u8>>,
    },
    Lattice {
        leq: Vec<Vec<u8>>,
    },
    Boolean {
        n: usize,
    },
    BooleanPlusTop {
        n: usize,
    },
    ChainLattice {
        n: usize,
    },
    Divisors {
        n: u64,
    },
    FreeTwo,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("declared size {declared} but the table has {rows} rows")]
    SizeMismatch { declared: usize, rows: usize },
    #[error(transparent)]
    Structure(#[from] StructuralError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("axioms fail in a component: {0}")]
    Axioms(AxiomReport),
    #[error("expected {expected}, found a {found} specification")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
}

/// A parsed table that may still violate the axioms.
#[derive(Debug, Clone)]
pub struct CandidateTable {
    pub rows: Vec<Vec<usize>>,
    pub report: AxiomReport,
}

impl Spec {
    pub fn parse(text: &str) -> Result<Spec, ParseError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Spec::Table { .. } => "table",
            Spec::Chain { .. } => "chain",
            Spec::Union { .. } => "union",
            Spec::Product { .. } => "product",
            Spec::Tree { .. } => "tree",
            Spec::Poset { .. } => "poset",
            Spec::Lattice { .. } => "lattice",
            Spec::Boolean { .. } => "boolean",
            Spec::BooleanPlusTop { .. } => "boolean_plus_top",
            Spec::ChainLattice { .. } => "chain_lattice",
            Spec::Divisors { .. } => "divisors",
            Spec::FreeTwo => "free_two",
        }
    }

    pub fn is_algebra(&self) -> bool {
        matches!(
            self,
            Spec::Table { .. } | Spec::Chain { .. } | Spec::Union { .. } | Spec::Product { .. }
        )
    }

    fn wrong(&self, expected: &'static str) -> ParseError {
        ParseError::WrongKind {
            expected,
            found: self.kind(),
        }
    }

    /// The operation table with its axiom report, without rejecting
    /// tables that fail the axioms.
    pub fn candidate_table(&self) -> Result<CandidateTable, ParseError> {
        let rows = match self {
            Spec::Table { size, table } => {
                if let Some(declared) = *size {
                    if declared != table.len() {
                        return Err(ParseError::SizeMismatch {
                            declared,
                            rows: table.len(),
                        });
                    }
                }
                table.clone()
            }
            _ => self.to_algebra()?.rows(),
        };
        let report = check_axioms(&rows)?;
        Ok(CandidateTable { rows, report })
    }

    pub fn to_algebra(&self) -> Result<FiniteCbckAlgebra, ParseError> {
        match self {
            Spec::Table { .. } => {
                let c = self.candidate_table()?;
                FiniteCbckAlgebra::from_table(&c.rows).map_err(|e| match e {
                    AlgebraError::Structure(s) => ParseError::Structure(s),
                    _ => ParseError::Axioms(c.report),
                })
            }
            Spec::Chain { k } => Ok(standard_chain(*k)?),
            Spec::Union { .. } => Ok(self.to_union()?.into_algebra()),
            Spec::Product { components } => {
                let parts = components
                    .iter()
                    .map(Spec::to_algebra)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(direct_product(&parts)?)
            }
            other => Err(other.wrong("an algebra")),
        }
    }

    pub fn to_union(&self) -> Result<CbckUnion, ParseError> {
        match self {
            Spec::Union { components } => {
                let parts = components
                    .iter()
                    .map(Spec::to_algebra)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(cbck_union(&parts)?)
            }
            other => Err(other.wrong("a union")),
        }
    }

    pub fn to_tree(&self) -> Result<RootedTree, ParseError> {
        match self {
            Spec::Tree { parents, labels } => {
                let t = RootedTree::from_parents(parents)?;
                Ok(match labels {
                    Some(l) if l.len() == t.len() => t.with_labels(l.clone()),
                    Some(_) => {
                        return Err(ParseError::Json(serde::de::Error::custom(
                            "labels must give one entry per vertex",
                        )))
                    }
                    None => t,
                })
            }
            other => Err(other.wrong("a tree")),
        }
    }

    pub fn to_poset(&self) -> Result<FinitePoset, ParseError> {
        match self {
            Spec::Poset { leq } => Ok(FinitePoset::from_matrix(leq)?),
            Spec::Tree { .. } => Ok(self.to_tree()?.ancestor_poset()),
            other => Ok(other.to_lattice()?.poset()),
        }
    }

    pub fn to_lattice(&self) -> Result<FiniteDistLattice, ParseError> {
        Ok(match self {
            Spec::Lattice { leq } => FiniteDistLattice::from_matrix(leq)?,
            Spec::Boolean { n } => boolean_lattice(*n)?,
            Spec::BooleanPlusTop { n } => boolean_plus_top(*n)?,
            Spec::ChainLattice { n } => chain_lattice(*n)?,
            Spec::Divisors { n } => divisor_lattice(*n)?.0,
            Spec::FreeTwo => free_distributive_lattice_two(),
            other => return Err(other.wrong("a lattice")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementRepr {
    support: std::collections::BTreeMap<String, i64>,
}

/// Parses `{"support": {"<vertex>": <int>, ...}}` against a tree.
pub fn parse_element(tree: &RootedTree, text: &str) -> Result<TreeElement, ParseError> {
    let repr: ElementRepr = serde_json::from_str(text)?;
    let mut entries = Vec::with_capacity(repr.support.len());
    for (k, v) in repr.support {
        let vertex: Vertex = k.parse().map_err(|_| {
            serde::de::Error::custom(format!("vertex key {k:?} is not an index"))
        })
        .map_err(ParseError::Json)?;
        entries.push((vertex, v));
    }
    Ok(TreeElement::new(tree, entries)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealRepr {
    antichain: Option<Vec<Vertex>>,
}

/// Parses `{"antichain": [...]}`; `null` and `[]` both denote `I(∅)`.
pub fn parse_path_ideal(tree: &RootedTree, text: &str) -> Result<PathIdeal, ParseError> {
    let repr: IdealRepr = serde_json::from_str(text)?;
    Ok(canonical_antichain(tree, repr.antichain.unwrap_or_default())?)
}
