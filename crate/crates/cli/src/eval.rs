//! Evaluation of parsed expressions against a set of named relations.

use std::collections::BTreeMap;
use std::path::Path;

use bkrel_core::lattice::Lattice;
use bkrel_core::relation::{io, BkKind, Relation, RelationError};
use thiserror::Error;

use crate::expr::{BinOp, CmpOp, Expr};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("unbound relation `{0}`")]
    Unbound(String),
    #[error("relation `{0}` is already defined")]
    Duplicate(String),
    #[error("wiring mismatch in `{expr}`: {left} does not fit {right}")]
    Wiring {
        expr: String,
        left: String,
        right: String,
    },
    #[error("relation `{name}` is over {found}, but the workspace lattice is {expected}")]
    Lattice {
        name: String,
        found: String,
        expected: String,
    },
    #[error("comparison `{0}` may only appear at the top level")]
    NestedComparison(String),
    #[error("in `{expr}`: {source}")]
    Relation { expr: String, source: RelationError },
}

/// The result of evaluating a statement.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Relation(Relation),
    Bool(bool),
}

impl Value {
    pub fn as_relation(&self) -> Option<&Relation> {
        match self {
            Value::Relation(r) => Some(r),
            Value::Bool(_) => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            Value::Relation(_) => None,
        }
    }
}

/// Named relations over one active lattice.
#[derive(Debug, Clone)]
pub struct Workspace {
    lattice: Lattice,
    relations: BTreeMap<String, Relation>,
}

impl Workspace {
    pub fn new(lattice: Lattice) -> Self {
        Workspace {
            lattice,
            relations: BTreeMap::new(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn get(&self, name: &str) -> Option<&Relation> {
        self.relations.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.relations.keys().map(String::as_str)
    }

    /// Binds `name`; the relation is renamed so that diagnostics use the binding.
    pub fn insert(&mut self, name: &str, relation: Relation) -> Result<(), EvalError> {
        if self.relations.contains_key(name) {
            return Err(EvalError::Duplicate(name.to_string()));
        }
        if relation.lattice() != &self.lattice {
            return Err(EvalError::Lattice {
                name: name.to_string(),
                found: relation.lattice().name(),
                expected: self.lattice.name(),
            });
        }
        self.relations
            .insert(name.to_string(), relation.with_name(name));
        Ok(())
    }

    /// Loads a CSV (or `.json`) relation file and binds it to `name`.
    pub fn load(&mut self, name: &str, path: impl AsRef<Path>) -> Result<(), EvalError> {
        let relation = io::load(path, &self.lattice).map_err(|source| EvalError::Relation {
            expr: name.to_string(),
            source,
        })?;
        self.insert(name, relation)
    }

    pub fn evaluate(&self, expr: &Expr) -> Result<Value, EvalError> {
        match expr {
            Expr::Compare(op, lhs, rhs) => {
                let (l, r) = (self.relation(lhs)?, self.relation(rhs)?);
                let outcome = match op {
                    CmpOp::Included => l.included_in(&r),
                    CmpOp::Equal => l.equals(&r),
                };
                outcome.map(Value::Bool).map_err(|e| self.wrap(expr, e))
            }
            _ => self.relation(expr).map(Value::Relation),
        }
    }

    /// Evaluates a relation-valued expression; the result is named after its text.
    pub fn relation(&self, expr: &Expr) -> Result<Relation, EvalError> {
        let value = match expr {
            Expr::Rel(name) => {
                return self
                    .get(name)
                    .cloned()
                    .ok_or_else(|| EvalError::Unbound(name.clone()))
            }
            Expr::Converse(inner) => self.relation(inner)?.converse(),
            Expr::Binary(op, lhs, rhs) => {
                let (l, r) = (self.relation(lhs)?, self.relation(rhs)?);
                let result = match op {
                    BinOp::Circle => l.circle(&r),
                    BinOp::Sub => l.sub(&r),
                    BinOp::Sup => l.sup(&r),
                    BinOp::Square => l.square(&r),
                    BinOp::MeanSub => l.mean_product(&r, BkKind::Sub),
                    BinOp::MeanSup => l.mean_product(&r, BkKind::Sup),
                    BinOp::MeanSquare => l.mean_product(&r, BkKind::Square),
                };
                result.map_err(|e| self.wrap(expr, e))?
            }
            Expr::Compare(..) => return Err(EvalError::NestedComparison(expr.to_string())),
        };
        Ok(value.with_name(expr.to_string()))
    }

    fn wrap(&self, expr: &Expr, e: RelationError) -> EvalError {
        match e {
            RelationError::DomainMismatch { left, right, .. } => EvalError::Wiring {
                expr: expr.to_string(),
                left,
                right,
            },
            source => EvalError::Relation {
                expr: expr.to_string(),
                source,
            },
        }
    }
}
