//! Truth-value algebras.
//!
//! A [`Lattice`] is a complete residuated lattice `(L, ≤, ∧, ∨, ⊗, →, 0, 1)`:
//! a bounded lattice carrying a commutative monoid `⊗` with unit `1` whose
//! right adjoint `→` satisfies `a ⊗ b ≤ c  ⟺  a ≤ b → c`.
//!
//! Four t-norm algebras on `[0, 1]` are built in (Gödel, Łukasiewicz, product
//! and nilpotent minimum). Arbitrary finite residuated lattices are supplied as
//! operation tables, see [`FiniteLattice`].

mod finite;
mod validate;

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use finite::{FiniteLattice, LatticeFile};
pub use validate::{validate_lattice, IdentityCheck, ValidationReport};

/// Absolute tolerance for comparisons of unit-interval values.
pub const EPSILON: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("lattice mismatch: value {value} does not belong to lattice {lattice}")]
    Mismatch { value: String, lattice: String },
    #[error("value {0} lies outside [0, 1]")]
    OutOfRange(f64),
    #[error("unknown element `{name}` in lattice {lattice}")]
    UnknownElement { name: String, lattice: String },
    #[error("cannot parse truth value `{0}`")]
    Parse(String),
    #[error("malformed lattice table: {0}")]
    Malformed(String),
    #[error("lattice axioms violated: {0}")]
    Invalid(String),
    #[error("unknown lattice `{0}` (expected godel, lukasiewicz, product, nilmin, boolean or table:<path>)")]
    UnknownSpec(String),
    #[error("cannot read lattice file {path}: {reason}")]
    Io { path: String, reason: String },
}

/// An element of a residuated lattice carrier.
///
/// Unit-interval lattices use [`TruthValue::Unit`]; finite table lattices use
/// [`TruthValue::Elem`] holding an index into the carrier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TruthValue {
    Unit(f64),
    Elem(usize),
}

impl TruthValue {
    pub fn as_unit(self) -> Option<f64> {
        match self {
            TruthValue::Unit(x) => Some(x),
            TruthValue::Elem(_) => None,
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthValue::Unit(x) => write!(f, "{x}"),
            TruthValue::Elem(i) => write!(f, "#{i}"),
        }
    }
}

/// Left-continuous t-norms shipped with the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TNorm {
    Godel,
    Lukasiewicz,
    Product,
    NilpotentMin,
}

impl TNorm {
    pub const ALL: [TNorm; 4] = [
        TNorm::Godel,
        TNorm::Lukasiewicz,
        TNorm::Product,
        TNorm::NilpotentMin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TNorm::Godel => "godel",
            TNorm::Lukasiewicz => "lukasiewicz",
            TNorm::Product => "product",
            TNorm::NilpotentMin => "nilmin",
        }
    }

    fn tensor(self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Godel => a.min(b),
            TNorm::Lukasiewicz => (a + b - 1.0).max(0.0),
            TNorm::Product => a * b,
            TNorm::NilpotentMin => {
                if a + b > 1.0 + EPSILON {
                    a.min(b)
                } else {
                    0.0
                }
            }
        }
    }

    fn residuum(self, a: f64, b: f64) -> f64 {
        if a <= b + EPSILON {
            return 1.0;
        }
        match self {
            TNorm::Godel => b,
            TNorm::Lukasiewicz => (1.0 - a + b).min(1.0),
            // a > b >= 0 here, so a > 0 and the quotient is defined.
            TNorm::Product => (b / a).min(1.0),
            TNorm::NilpotentMin => (1.0 - a).max(b),
        }
    }
}

/// A residuated lattice: one of the built-in t-norm algebras on `[0, 1]`, or a
/// finite table-defined lattice.
///
/// Cloning is cheap; table lattices are shared behind an [`Arc`].
#[derive(Debug, Clone)]
pub enum Lattice {
    Godel,
    Lukasiewicz,
    Product,
    NilpotentMin,
    Table(Arc<FiniteLattice>),
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Lattice::Table(a), Lattice::Table(b)) => Arc::ptr_eq(a, b) || a == b,
            (Lattice::Table(_), _) | (_, Lattice::Table(_)) => false,
            _ => self.tnorm() == other.tnorm(),
        }
    }
}

impl From<TNorm> for Lattice {
    fn from(t: TNorm) -> Self {
        match t {
            TNorm::Godel => Lattice::Godel,
            TNorm::Lukasiewicz => Lattice::Lukasiewicz,
            TNorm::Product => Lattice::Product,
            TNorm::NilpotentMin => Lattice::NilpotentMin,
        }
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl Lattice {
    /// Wraps a finite lattice after checking every residuated-lattice axiom.
    pub fn from_table(table: FiniteLattice) -> Result<Self, LatticeError> {
        let lattice = Lattice::Table(Arc::new(table));
        let report = validate_lattice(&lattice);
        match report.first_failure() {
            None => Ok(lattice),
            Some(check) => Err(LatticeError::Invalid(check.to_string())),
        }
    }

    /// Wraps a finite lattice without checking the monoid or adjunction
    /// axioms. Used for validation reports and fault-injection fixtures.
    pub fn from_table_unchecked(table: FiniteLattice) -> Self {
        Lattice::Table(Arc::new(table))
    }

    /// The two-element Boolean algebra.
    pub fn boolean() -> Self {
        Lattice::Table(Arc::new(FiniteLattice::boolean()))
    }

    /// Resolves a lattice spec: `godel | lukasiewicz | product | nilmin |
    /// boolean | table:<path>`.
    pub fn from_spec(spec: &str) -> Result<Self, LatticeError> {
        match spec.trim() {
            "godel" | "goedel" | "min" => Ok(Lattice::Godel),
            "lukasiewicz" | "luk" => Ok(Lattice::Lukasiewicz),
            "product" | "goguen" => Ok(Lattice::Product),
            "nilmin" | "nilpotent-min" => Ok(Lattice::NilpotentMin),
            "boolean" | "bool" => Ok(Lattice::boolean()),
            other => match other.strip_prefix("table:") {
                Some(path) => Lattice::from_table(FiniteLattice::from_path(path)?),
                None => Err(LatticeError::UnknownSpec(other.to_string())),
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            Lattice::Table(t) => t.label().to_string(),
            _ => self
                .tnorm()
                .map(TNorm::name)
                .unwrap_or_default()
                .to_string(),
        }
    }

    pub fn tnorm(&self) -> Option<TNorm> {
        match self {
            Lattice::Godel => Some(TNorm::Godel),
            Lattice::Lukasiewicz => Some(TNorm::Lukasiewicz),
            Lattice::Product => Some(TNorm::Product),
            Lattice::NilpotentMin => Some(TNorm::NilpotentMin),
            Lattice::Table(_) => None,
        }
    }

    pub fn is_unit_interval(&self) -> bool {
        self.tnorm().is_some()
    }

    pub fn table(&self) -> Option<&FiniteLattice> {
        match self {
            Lattice::Table(t) => Some(t),
            _ => None,
        }
    }

    pub fn bottom(&self) -> TruthValue {
        match self {
            Lattice::Table(t) => TruthValue::Elem(t.bottom()),
            _ => TruthValue::Unit(0.0),
        }
    }

    pub fn top(&self) -> TruthValue {
        match self {
            Lattice::Table(t) => TruthValue::Elem(t.top()),
            _ => TruthValue::Unit(1.0),
        }
    }

    /// Checks that `v` belongs to this lattice.
    pub fn check(&self, v: TruthValue) -> Result<TruthValue, LatticeError> {
        let ok = match (self, v) {
            (Lattice::Table(t), TruthValue::Elem(i)) => i < t.size(),
            (Lattice::Table(_), TruthValue::Unit(_)) => false,
            (_, TruthValue::Unit(x)) => (-EPSILON..=1.0 + EPSILON).contains(&x),
            (_, TruthValue::Elem(_)) => false,
        };
        if ok {
            Ok(v)
        } else {
            Err(LatticeError::Mismatch {
                value: v.to_string(),
                lattice: self.name(),
            })
        }
    }

    /// Builds a unit-interval value, clamping round-off within [`EPSILON`].
    pub fn unit(&self, x: f64) -> Result<TruthValue, LatticeError> {
        if !self.is_unit_interval() {
            return Err(LatticeError::Mismatch {
                value: x.to_string(),
                lattice: self.name(),
            });
        }
        if !(-EPSILON..=1.0 + EPSILON).contains(&x) {
            return Err(LatticeError::OutOfRange(x));
        }
        Ok(TruthValue::Unit(x.clamp(0.0, 1.0)))
    }

    /// Looks up a finite-carrier element by display name.
    pub fn element(&self, name: &str) -> Result<TruthValue, LatticeError> {
        let unknown = || LatticeError::UnknownElement {
            name: name.to_string(),
            lattice: self.name(),
        };
        let table = self.table().ok_or_else(unknown)?;
        table
            .index_of(name)
            .map(TruthValue::Elem)
            .ok_or_else(unknown)
    }

    /// Parses a textual value: a decimal for unit-interval lattices, an
    /// element name for tables.
    pub fn parse_value(&self, text: &str) -> Result<TruthValue, LatticeError> {
        let text = text.trim();
        if self.is_unit_interval() {
            let x: f64 = text
                .parse()
                .map_err(|_| LatticeError::Parse(text.to_string()))?;
            self.unit(x)
        } else {
            self.element(text)
        }
    }

    /// Textual form of a value; unit values carry 9 decimal digits.
    pub fn format_value(&self, v: TruthValue) -> String {
        match (self, v) {
            (Lattice::Table(t), TruthValue::Elem(i)) if i < t.size() => t.names()[i].clone(),
            (_, TruthValue::Unit(x)) => format!("{x:.9}"),
            (_, other) => other.to_string(),
        }
    }

    /// Sample points of the carrier: a uniform grid of `grid` points on
    /// `[0, 1]`, or every element of a finite carrier (`grid` ignored).
    pub fn samples(&self, grid: usize) -> Vec<TruthValue> {
        match self {
            Lattice::Table(t) => (0..t.size()).map(TruthValue::Elem).collect(),
            _ => {
                let n = grid.max(2);
                (0..n)
                    .map(|i| TruthValue::Unit(i as f64 / (n - 1) as f64))
                    .collect()
            }
        }
    }

    pub fn tensor(&self, a: TruthValue, b: TruthValue) -> Result<TruthValue, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.tensor_unchecked(a, b))
    }

    pub fn residuum(&self, a: TruthValue, b: TruthValue) -> Result<TruthValue, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.residuum_unchecked(a, b))
    }

    pub fn meet(&self, a: TruthValue, b: TruthValue) -> Result<TruthValue, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.meet_unchecked(a, b))
    }

    pub fn join(&self, a: TruthValue, b: TruthValue) -> Result<TruthValue, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.join_unchecked(a, b))
    }

    pub fn leq(&self, a: TruthValue, b: TruthValue) -> Result<bool, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.leq_unchecked(a, b))
    }

    /// `(a → b) ∧ (b → a)`.
    pub fn biresiduum(&self, a: TruthValue, b: TruthValue) -> Result<TruthValue, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.biresiduum_unchecked(a, b))
    }

    /// Lattice equality; ε-tolerant on `[0, 1]`.
    pub fn eq(&self, a: TruthValue, b: TruthValue) -> bool {
        match (a, b) {
            (TruthValue::Unit(x), TruthValue::Unit(y)) => (x - y).abs() <= EPSILON,
            (TruthValue::Elem(i), TruthValue::Elem(j)) => i == j,
            _ => false,
        }
    }

    pub fn is_bottom(&self, v: TruthValue) -> bool {
        self.eq(v, self.bottom())
    }

    pub fn is_top(&self, v: TruthValue) -> bool {
        self.eq(v, self.top())
    }

    // The unchecked operations assume both operands already belong to this
    // lattice; relations validate their entries once at construction.

    pub(crate) fn tensor_unchecked(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        match (self, a, b) {
            (Lattice::Table(t), TruthValue::Elem(i), TruthValue::Elem(j)) => {
                TruthValue::Elem(t.tensor(i, j))
            }
            (_, TruthValue::Unit(x), TruthValue::Unit(y)) => {
                TruthValue::Unit(self.expect_tnorm().tensor(x, y))
            }
            _ => unreachable!("operands outside lattice {}", self.name()),
        }
    }

    pub(crate) fn residuum_unchecked(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        match (self, a, b) {
            (Lattice::Table(t), TruthValue::Elem(i), TruthValue::Elem(j)) => {
                TruthValue::Elem(t.residuum(i, j))
            }
            (_, TruthValue::Unit(x), TruthValue::Unit(y)) => {
                TruthValue::Unit(self.expect_tnorm().residuum(x, y))
            }
            _ => unreachable!("operands outside lattice {}", self.name()),
        }
    }

    pub(crate) fn meet_unchecked(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        match (self, a, b) {
            (Lattice::Table(t), TruthValue::Elem(i), TruthValue::Elem(j)) => {
                TruthValue::Elem(t.meet(i, j))
            }
            (_, TruthValue::Unit(x), TruthValue::Unit(y)) => TruthValue::Unit(x.min(y)),
            _ => unreachable!("operands outside lattice {}", self.name()),
        }
    }

    pub(crate) fn join_unchecked(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        match (self, a, b) {
            (Lattice::Table(t), TruthValue::Elem(i), TruthValue::Elem(j)) => {
                TruthValue::Elem(t.join(i, j))
            }
            (_, TruthValue::Unit(x), TruthValue::Unit(y)) => TruthValue::Unit(x.max(y)),
            _ => unreachable!("operands outside lattice {}", self.name()),
        }
    }

    pub(crate) fn leq_unchecked(&self, a: TruthValue, b: TruthValue) -> bool {
        match (self, a, b) {
            (Lattice::Table(t), TruthValue::Elem(i), TruthValue::Elem(j)) => t.leq(i, j),
            (_, TruthValue::Unit(x), TruthValue::Unit(y)) => x <= y + EPSILON,
            _ => unreachable!("operands outside lattice {}", self.name()),
        }
    }

    pub(crate) fn biresiduum_unchecked(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        self.meet_unchecked(self.residuum_unchecked(a, b), self.residuum_unchecked(b, a))
    }

    fn expect_tnorm(&self) -> TNorm {
        self.tnorm()
            .expect("unit-interval operands on a table lattice")
    }
}

/// Brute-force residuum: the largest sampled `c` with `a ⊗ c ≤ b`.
///
/// Uses only `⊗` and `≤`, never the residuum itself, so it serves as an
/// independent check of closed-form residua (accurate to `1 / (grid - 1)` on
/// the unit interval, exact on finite carriers).
pub fn galois_residuum_oracle(
    lattice: &Lattice,
    a: TruthValue,
    b: TruthValue,
    grid: usize,
) -> TruthValue {
    match lattice {
        Lattice::Table(_) => {
            let admissible = |c| lattice.leq_unchecked(lattice.tensor_unchecked(a, c), b);
            // The greatest admissible element, i.e. the join of all of them.
            lattice
                .samples(grid)
                .into_iter()
                .filter(|&c| admissible(c))
                .fold(lattice.bottom(), |acc, c| lattice.join_unchecked(acc, c))
        }
        _ => {
            // On a chain the first admissible point scanning down is the maximum.
            let (t, x, y) = match (lattice.expect_tnorm(), a, b) {
                (t, TruthValue::Unit(x), TruthValue::Unit(y)) => (t, x, y),
                _ => unreachable!("operands outside lattice {}", lattice.name()),
            };
            let n = grid.max(2);
            (0..n)
                .rev()
                .map(|i| i as f64 / (n - 1) as f64)
                .find(|&c| t.tensor(x, c) <= y + EPSILON)
                .map_or(TruthValue::Unit(0.0), TruthValue::Unit)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: f64) -> TruthValue {
        TruthValue::Unit(x)
    }

    fn close(a: TruthValue, b: f64) -> bool {
        (a.as_unit().unwrap() - b).abs() < 1e-9
    }

    #[test]
    fn lukasiewicz_examples() {
        let l = Lattice::Lukasiewicz;
        assert!(close(l.tensor(u(0.7), u(0.6)).unwrap(), 0.3));
        assert!(close(l.residuum(u(0.7), u(0.4)).unwrap(), 0.7));
        assert!(close(l.biresiduum(u(0.7), u(0.4)).unwrap(), 0.7));
    }

    #[test]
    fn godel_examples() {
        let l = Lattice::Godel;
        assert!(close(l.tensor(u(0.7), u(0.6)).unwrap(), 0.6));
        assert!(close(l.residuum(u(0.3), u(0.4)).unwrap(), 1.0));
        assert!(close(l.residuum(u(0.4), u(0.3)).unwrap(), 0.3));
        assert!(close(l.biresiduum(u(0.3), u(0.8)).unwrap(), 0.3));
    }

    #[test]
    fn product_residuum_at_zero_is_top() {
        let l = Lattice::Product;
        assert!(close(l.residuum(u(0.0), u(0.0)).unwrap(), 1.0));
        assert!(close(l.residuum(u(0.5), u(0.2)).unwrap(), 0.4));
    }

    #[test]
    fn nilpotent_min_examples() {
        let l = Lattice::NilpotentMin;
        assert!(close(l.tensor(u(0.7), u(0.6)).unwrap(), 0.6));
        assert!(close(l.tensor(u(0.4), u(0.6)).unwrap(), 0.0));
        assert!(close(l.residuum(u(0.7), u(0.2)).unwrap(), 0.3));
        assert!(close(l.residuum(u(0.7), u(0.5)).unwrap(), 0.5));
    }

    #[test]
    fn unit_and_self_residuum() {
        for t in TNorm::ALL {
            let l = Lattice::from(t);
            for &a in &[0.0, 0.25, 0.5, 0.9, 1.0] {
                assert!(close(l.tensor(u(a), u(1.0)).unwrap(), a), "{t:?}");
                assert!(close(l.residuum(u(a), u(a)).unwrap(), 1.0), "{t:?}");
                assert!(close(l.biresiduum(u(a), u(a)).unwrap(), 1.0), "{t:?}");
            }
        }
    }

    #[test]
    fn meet_join_leq_on_unit() {
        let l = Lattice::Godel;
        assert!(close(l.meet(u(0.2), u(0.9)).unwrap(), 0.2));
        assert!(close(l.join(u(0.2), u(0.9)).unwrap(), 0.9));
        assert!(l.leq(u(0.2), u(0.9)).unwrap());
        assert!(l.leq(u(0.5), u(0.5 + 1e-12)).unwrap());
        assert!(!l.leq(u(0.9), u(0.2)).unwrap());
    }

    #[test]
    fn mixed_operands_are_rejected() {
        let b = Lattice::boolean();
        assert!(matches!(
            b.tensor(u(0.5), TruthValue::Elem(1)),
            Err(LatticeError::Mismatch { .. })
        ));
        assert!(Lattice::Godel.meet(TruthValue::Elem(0), u(0.1)).is_err());
        assert!(b.join(TruthValue::Elem(2), TruthValue::Elem(0)).is_err());
        assert!(Lattice::Godel.unit(1.5).is_err());
    }

    #[test]
    fn oracle_examples() {
        let r = galois_residuum_oracle(&Lattice::Lukasiewicz, u(0.7), u(0.4), 1001);
        assert!((r.as_unit().unwrap() - 0.7).abs() <= 1e-3);
        let r = galois_residuum_oracle(&Lattice::Product, u(0.5), u(0.2), 1001);
        assert!((r.as_unit().unwrap() - 0.4).abs() <= 1e-3);
        let b = Lattice::boolean();
        let one = b.element("1").unwrap();
        let zero = b.element("0").unwrap();
        assert_eq!(galois_residuum_oracle(&b, one, zero, 0), zero);
    }

    #[test]
    fn spec_parsing_and_formatting() {
        assert_eq!(Lattice::from_spec("nilmin").unwrap(), Lattice::NilpotentMin);
        assert!(Lattice::from_spec("hamacher").is_err());
        let l = Lattice::Lukasiewicz;
        assert_eq!(l.format_value(u(0.5)), "0.500000000");
        assert!(close(l.parse_value(" 0.25 ").unwrap(), 0.25));
        assert!(l.parse_value("x").is_err());
        let b = Lattice::boolean();
        assert_eq!(b.format_value(b.top()), "1");
    }
}
