//! Finite fuzzy relations and their compositions.
//!
//! A [`Relation`] from `X` to `Y` is a dense `|X| × |Y|` matrix of truth
//! values. For `R: X → Y` and `S: Y → Z`:
//!
//! | product  | entry `(i, k)`              |
//! |----------|-----------------------------|
//! | `R ∘ S`  | `⋁_j R(i,j) ⊗ S(j,k)`       |
//! | `R ◁ S`  | `⋀_j R(i,j) → S(j,k)`       |
//! | `R ▷ S`  | `⋀_j S(j,k) → R(i,j)`       |
//! | `R □ S`  | `⋀_j R(i,j) ↔ S(j,k)`       |
//!
//! The mean variants replace the outer `⋀` by the arithmetic mean over `j`.

pub mod io;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{Lattice, LatticeError, TruthValue};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RelationError {
    #[error("domain `{0}` is empty")]
    EmptyDomain(String),
    #[error("domain `{domain}` repeats label `{label}`")]
    DuplicateLabel { domain: String, label: String },
    #[error("matrix has {got} entries, expected {rows}x{cols}")]
    Shape {
        rows: usize,
        cols: usize,
        got: usize,
    },
    #[error("domain mismatch in {op}: {left} vs {right}")]
    DomainMismatch {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("lattice mismatch: {0} vs {1}")]
    LatticeMismatch(String, String),
    #[error("{op} is not defined on lattice {lattice}")]
    UnsupportedLattice { op: &'static str, lattice: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("relation format error: {0}")]
    Format(String),
}

/// A named, ordered, nonempty carrier set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Domain {
    name: String,
    labels: Vec<String>,
}

impl Domain {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Self, RelationError> {
        let name = name.into();
        if labels.is_empty() {
            return Err(RelationError::EmptyDomain(name));
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(RelationError::DuplicateLabel {
                    domain: name,
                    label: label.clone(),
                });
            }
        }
        Ok(Domain { name, labels })
    }

    /// A domain with labels `<prefix>1 … <prefix>n`.
    pub fn indexed(
        name: impl Into<String>,
        prefix: &str,
        size: usize,
    ) -> Result<Self, RelationError> {
        Self::new(name, (1..=size).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Domains are interchangeable when their element labels agree in order;
    /// the name is descriptive only.
    pub fn matches(&self, other: &Domain) -> bool {
        self.labels == other.labels
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.name.is_empty() {
            write!(f, "{}", self.name)?;
        }
        write!(f, "{{{}}}", self.labels.join(", "))
    }
}

/// The outer connective of a BK-product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BkKind {
    /// `◁`, inner connective `R(i,j) → S(j,k)`.
    Sub,
    /// `▷`, inner connective `S(j,k) → R(i,j)`.
    Sup,
    /// `□`, inner connective `R(i,j) ↔ S(j,k)`.
    Square,
}

impl BkKind {
    fn inner(self, lattice: &Lattice, r: TruthValue, s: TruthValue) -> TruthValue {
        match self {
            BkKind::Sub => lattice.residuum_unchecked(r, s),
            BkKind::Sup => lattice.residuum_unchecked(s, r),
            BkKind::Square => lattice.biresiduum_unchecked(r, s),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BkKind::Sub => "<|",
            BkKind::Sup => "|>",
            BkKind::Square => "[]",
        }
    }
}

/// A fuzzy relation between two finite domains.
#[derive(Debug, Clone)]
pub struct Relation {
    name: String,
    source: Arc<Domain>,
    target: Arc<Domain>,
    lattice: Lattice,
    data: Vec<TruthValue>,
}

impl PartialEq for Relation {
    /// Entrywise equality under the lattice's tolerance; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice
            && self.source.matches(&other.source)
            && self.target.matches(&other.target)
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(&a, &b)| self.lattice.eq(a, b))
    }
}

impl Relation {
    /// Builds a relation from row-major entries, checking the shape and that
    /// every entry belongs to `lattice`.
    pub fn new(
        name: impl Into<String>,
        source: impl Into<Arc<Domain>>,
        target: impl Into<Arc<Domain>>,
        lattice: Lattice,
        data: Vec<TruthValue>,
    ) -> Result<Self, RelationError> {
        let (source, target) = (source.into(), target.into());
        let (rows, cols) = (source.len(), target.len());
        if data.len() != rows * cols {
            return Err(RelationError::Shape {
                rows,
                cols,
                got: data.len(),
            });
        }
        let data = data
            .into_iter()
            .map(|v| match (v, lattice.is_unit_interval()) {
                (TruthValue::Unit(x), true) => lattice.unit(x),
                _ => lattice.check(v),
            })
            .collect::<Result<_, _>>()?;
        Ok(Relation {
            name: name.into(),
            source,
            target,
            lattice,
            data,
        })
    }

    /// Builds a unit-interval relation from nested rows.
    pub fn from_rows(
        name: impl Into<String>,
        source: impl Into<Arc<Domain>>,
        target: impl Into<Arc<Domain>>,
        lattice: Lattice,
        rows: &[Vec<f64>],
    ) -> Result<Self, RelationError> {
        let data = rows
            .iter()
            .flatten()
            .map(|&x| TruthValue::Unit(x))
            .collect();
        Self::new(name, source, target, lattice, data)
    }

    pub fn from_fn(
        name: impl Into<String>,
        source: impl Into<Arc<Domain>>,
        target: impl Into<Arc<Domain>>,
        lattice: Lattice,
        f: impl Fn(usize, usize) -> TruthValue,
    ) -> Result<Self, RelationError> {
        let (source, target) = (source.into(), target.into());
        let data = (0..source.len())
            .flat_map(|i| (0..target.len()).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self::new(name, source, target, lattice, data)
    }

    pub fn constant(
        name: impl Into<String>,
        source: impl Into<Arc<Domain>>,
        target: impl Into<Arc<Domain>>,
        lattice: Lattice,
        value: TruthValue,
    ) -> Result<Self, RelationError> {
        Self::from_fn(name, source, target, lattice, |_, _| value)
    }

    pub fn zeros(
        source: impl Into<Arc<Domain>>,
        target: impl Into<Arc<Domain>>,
        lattice: Lattice,
    ) -> Result<Self, RelationError> {
        let bottom = lattice.bottom();
        Self::constant("0", source, target, lattice, bottom)
    }

    pub fn ones(
        source: impl Into<Arc<Domain>>,
        target: impl Into<Arc<Domain>>,
        lattice: Lattice,
    ) -> Result<Self, RelationError> {
        let top = lattice.top();
        Self::constant("1", source, target, lattice, top)
    }

    /// The crisp identity `E` on a domain.
    pub fn identity(
        domain: impl Into<Arc<Domain>>,
        lattice: Lattice,
    ) -> Result<Self, RelationError> {
        let domain = domain.into();
        let (bottom, top) = (lattice.bottom(), lattice.top());
        Self::from_fn("E", domain.clone(), domain, lattice, |i, j| {
            if i == j {
                top
            } else {
                bottom
            }
        })
    }

    /// Internal constructor for entries already known to lie in `lattice`.
    pub(crate) fn from_parts(
        name: String,
        source: Arc<Domain>,
        target: Arc<Domain>,
        lattice: Lattice,
        data: Vec<TruthValue>,
    ) -> Self {
        debug_assert_eq!(data.len(), source.len() * target.len());
        Relation {
            name,
            source,
            target,
            lattice,
            data,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &Domain {
        &self.source
    }

    pub fn target(&self) -> &Domain {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<Domain> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<Domain> {
        &self.target
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rows(&self) -> usize {
        self.source.len()
    }

    pub fn cols(&self) -> usize {
        self.target.len()
    }

    pub fn get(&self, i: usize, j: usize) -> TruthValue {
        self.data[i * self.cols() + j]
    }

    pub fn entries(&self) -> &[TruthValue] {
        &self.data
    }

    /// Rendered signature, e.g. `R: A{a1, a2} -> B{b1}`.
    pub fn signature(&self) -> String {
        format!("{}: {} -> {}", self.name, self.source, self.target)
    }

    pub fn converse(&self) -> Relation {
        let (rows, cols) = (self.rows(), self.cols());
        let data = (0..cols)
            .flat_map(|j| (0..rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        Relation::from_parts(
            format!("{}'", wrap(&self.name)),
            self.target.clone(),
            self.source.clone(),
            self.lattice.clone(),
            data,
        )
    }

    /// `self ⊑ other`: pointwise `≤`.
    pub fn included_in(&self, other: &Relation) -> Result<bool, RelationError> {
        self.same_shape(other, "inclusion")?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .all(|(&a, &b)| self.lattice.leq_unchecked(a, b)))
    }

    /// Entrywise equality with shape and lattice checks.
    pub fn equals(&self, other: &Relation) -> Result<bool, RelationError> {
        self.same_shape(other, "equality")?;
        Ok(self == other)
    }

    /// First cell (row-major) where `self ⊑ other` fails.
    pub fn first_excess(&self, other: &Relation) -> Result<Option<(usize, usize)>, RelationError> {
        self.same_shape(other, "inclusion")?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .position(|(&a, &b)| !self.lattice.leq_unchecked(a, b))
            .map(|p| (p / self.cols(), p % self.cols())))
    }

    /// Pointwise meet.
    pub fn meet(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.same_shape(other, "meet")?;
        Ok(self.zip_with(other, |l, a, b| l.meet_unchecked(a, b)))
    }

    /// Pointwise join.
    pub fn join(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.same_shape(other, "join")?;
        Ok(self.zip_with(other, |l, a, b| l.join_unchecked(a, b)))
    }

    /// `self ∘ other`.
    pub fn circle(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.composable(other, "circle product")?;
        let l = &self.lattice;
        Ok(self.compose(other, "o", |row, col| {
            row.zip(col).fold(l.bottom(), |acc, (r, s)| {
                l.join_unchecked(acc, l.tensor_unchecked(r, s))
            })
        }))
    }

    /// `self ◁ other`.
    pub fn sub(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.bk(other, BkKind::Sub)
    }

    /// `self ▷ other`.
    pub fn sup(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.bk(other, BkKind::Sup)
    }

    /// `self □ other`.
    pub fn square(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.bk(other, BkKind::Square)
    }

    /// Harsh BK-product: outer `⋀` over the middle domain.
    pub fn bk(&self, other: &Relation, kind: BkKind) -> Result<Relation, RelationError> {
        self.composable(other, "BK-product")?;
        let l = &self.lattice;
        Ok(self.compose(other, kind.symbol(), |row, col| {
            row.zip(col).fold(l.top(), |acc, (r, s)| {
                l.meet_unchecked(acc, kind.inner(l, r, s))
            })
        }))
    }

    /// Mean BK-product: arithmetic mean of the inner connective over the
    /// middle domain. Defined on unit-interval lattices only.
    pub fn mean_product(&self, other: &Relation, kind: BkKind) -> Result<Relation, RelationError> {
        self.composable(other, "mean product")?;
        if !self.lattice.is_unit_interval() {
            return Err(RelationError::UnsupportedLattice {
                op: "mean product",
                lattice: self.lattice.name(),
            });
        }
        let l = &self.lattice;
        let middle = self.cols() as f64;
        Ok(
            self.compose(other, &format!("m{}", kind.symbol()), |row, col| {
                let sum: f64 = row
                    .zip(col)
                    .filter_map(|(r, s)| kind.inner(l, r, s).as_unit())
                    .sum();
                TruthValue::Unit((sum / middle).clamp(0.0, 1.0))
            }),
        )
    }

    pub fn is_crisp(&self) -> bool {
        self.data
            .iter()
            .all(|&v| self.lattice.is_bottom(v) || self.lattice.is_top(v))
    }

    /// Crisp, with at most one related element per row (a partial function).
    pub fn is_univalent(&self) -> bool {
        self.is_crisp() && self.row_counts().all(|n| n <= 1)
    }

    /// Crisp, with at least one related element per row.
    pub fn is_covering(&self) -> bool {
        self.is_crisp() && self.row_counts().all(|n| n >= 1)
    }

    fn row_counts(&self) -> impl Iterator<Item = usize> + '_ {
        self.data
            .chunks(self.cols())
            .map(|row| row.iter().filter(|&&v| self.lattice.is_top(v)).count())
    }

    fn same_shape(&self, other: &Relation, op: &'static str) -> Result<(), RelationError> {
        self.same_lattice(other)?;
        if !self.source.matches(&other.source) || !self.target.matches(&other.target) {
            return Err(RelationError::DomainMismatch {
                op,
                left: self.signature(),
                right: other.signature(),
            });
        }
        Ok(())
    }

    fn composable(&self, other: &Relation, op: &'static str) -> Result<(), RelationError> {
        self.same_lattice(other)?;
        if !self.target.matches(&other.source) {
            return Err(RelationError::DomainMismatch {
                op,
                left: self.signature(),
                right: other.signature(),
            });
        }
        Ok(())
    }

    fn same_lattice(&self, other: &Relation) -> Result<(), RelationError> {
        if self.lattice != other.lattice {
            return Err(RelationError::LatticeMismatch(
                self.lattice.name(),
                other.lattice.name(),
            ));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Relation,
        f: impl Fn(&Lattice, TruthValue, TruthValue) -> TruthValue,
    ) -> Relation {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(&self.lattice, a, b))
            .collect();
        Relation::from_parts(
            self.name.clone(),
            self.source.clone(),
            self.target.clone(),
            self.lattice.clone(),
            data,
        )
    }

    fn compose<'a>(
        &'a self,
        other: &'a Relation,
        symbol: &str,
        cell: impl Fn(
            &mut dyn Iterator<Item = TruthValue>,
            &mut dyn Iterator<Item = TruthValue>,
        ) -> TruthValue,
    ) -> Relation {
        let (rows, middle, cols) = (self.rows(), self.cols(), other.cols());
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for k in 0..cols {
                let mut row = (0..middle).map(|j| self.get(i, j));
                let mut col = (0..middle).map(|j| other.get(j, k));
                data.push(cell(&mut row, &mut col));
            }
        }
        Relation::from_parts(
            format!("{} {symbol} {}", wrap(&self.name), wrap(&other.name)),
            self.source.clone(),
            other.target.clone(),
            self.lattice.clone(),
            data,
        )
    }
}

fn wrap(name: &str) -> String {
    if name.contains(' ') {
        format!("({name})")
    } else {
        name.to_string()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.signature())?;
        for i in 0..self.rows() {
            let row: Vec<String> = (0..self.cols())
                .map(|j| self.lattice.format_value(self.get(i, j)))
                .collect();
            writeln!(f, "  {}: {}", self.source.labels[i], row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(name: &str, n: usize) -> Arc<Domain> {
        Arc::new(Domain::indexed(name, &name.to_lowercase(), n).unwrap())
    }

    fn rel(l: &Lattice, src: &Arc<Domain>, dst: &Arc<Domain>, rows: &[Vec<f64>]) -> Relation {
        Relation::from_rows("R", src.clone(), dst.clone(), l.clone(), rows).unwrap()
    }

    fn val(r: &Relation, i: usize, j: usize) -> f64 {
        r.get(i, j).as_unit().unwrap()
    }

    #[test]
    fn domains_reject_empty_and_duplicates() {
        assert!(matches!(
            Domain::new("A", vec![]),
            Err(RelationError::EmptyDomain(_))
        ));
        assert!(Domain::new("A", vec!["x".into(), "x".into()]).is_err());
    }

    #[test]
    fn shape_and_value_checks() {
        let (a, b) = (dom("A", 2), dom("B", 3));
        let l = Lattice::Godel;
        assert!(matches!(
            Relation::from_rows("R", a.clone(), b.clone(), l.clone(), &[vec![0.0; 2]]),
            Err(RelationError::Shape { .. })
        ));
        assert!(Relation::from_rows(
            "R",
            a.clone(),
            b.clone(),
            l.clone(),
            &[vec![0.0, 0.5, 1.2], vec![0.0; 3]]
        )
        .is_err());
        assert!(Relation::new(
            "R",
            a,
            b,
            Lattice::boolean(),
            vec![TruthValue::Unit(0.0); 6]
        )
        .is_err());
    }

    #[test]
    fn converse_transposes() {
        let (a, b) = (dom("A", 2), dom("B", 3));
        let r = rel(
            &Lattice::Godel,
            &a,
            &b,
            &[vec![0.1, 0.2, 0.3], vec![0.4, 0.5, 0.6]],
        );
        let c = r.converse();
        assert_eq!((c.rows(), c.cols()), (3, 2));
        assert_eq!(val(&c, 2, 1), 0.6);
        assert_eq!(c.converse(), r);
        let e = Relation::identity(a, Lattice::Godel).unwrap();
        assert_eq!(e.converse(), e);
    }

    #[test]
    fn inclusion() {
        let a = dom("A", 1);
        let l = Lattice::Godel;
        let big = rel(&l, &a, &a, &[vec![0.5]]);
        let small = rel(&l, &a, &a, &[vec![0.4]]);
        assert!(big.included_in(&big).unwrap());
        assert!(!big.included_in(&small).unwrap());
        assert!(Relation::zeros(a.clone(), a.clone(), l)
            .unwrap()
            .included_in(&big)
            .unwrap());
        let b = dom("B", 2);
        assert!(matches!(
            big.included_in(&Relation::zeros(a, b, Lattice::Godel).unwrap()),
            Err(RelationError::DomainMismatch { .. })
        ));
    }

    #[test]
    fn circle_example_and_identity_unit() {
        let (a, b) = (dom("A", 2), dom("B", 2));
        let l = Lattice::Godel;
        let r = rel(&l, &a, &b, &[vec![1.0, 0.5], vec![0.0, 1.0]]);
        let s = rel(&l, &b, &a, &[vec![0.3, 1.0], vec![0.7, 0.2]]);
        let rs = r.circle(&s).unwrap();
        assert_eq!(val(&rs, 0, 0), 0.5);
        let e = Relation::identity(b.clone(), l).unwrap();
        assert_eq!(e.circle(&s).unwrap(), s);
        assert_eq!(r.circle(&e).unwrap(), r);
    }

    #[test]
    fn sub_sup_square_examples() {
        let (a, b) = (dom("A", 1), dom("B", 2));
        let l = Lattice::Lukasiewicz;
        let row = rel(&l, &a, &b, &[vec![0.8, 0.3]]);
        let col = rel(&l, &b, &a, &[vec![0.5], vec![1.0]]);
        assert!((val(&row.sub(&col).unwrap(), 0, 0) - 0.7).abs() < 1e-12);
        assert!((val(&row.square(&col).unwrap(), 0, 0) - 0.3).abs() < 1e-12);
        let row2 = rel(&l, &a, &b, &[vec![0.5, 1.0]]);
        let col2 = rel(&l, &b, &a, &[vec![0.8], vec![0.3]]);
        assert!((val(&row2.sup(&col2).unwrap(), 0, 0) - 0.7).abs() < 1e-12);
        let mean = row.mean_product(&col, BkKind::Sub).unwrap();
        assert!((val(&mean, 0, 0) - 0.85).abs() < 1e-12);
    }

    #[test]
    fn products_into_top() {
        let (a, b, c) = (dom("A", 2), dom("B", 3), dom("C", 2));
        let l = Lattice::Product;
        let r = rel(&l, &a, &b, &[vec![0.1, 0.9, 0.4], vec![1.0, 0.0, 0.3]]);
        let ones_bc = Relation::ones(b.clone(), c.clone(), l.clone()).unwrap();
        let ones_ac = Relation::ones(a.clone(), c.clone(), l.clone()).unwrap();
        assert_eq!(r.sub(&ones_bc).unwrap(), ones_ac);
        let ones_ab = Relation::ones(a.clone(), b.clone(), l.clone()).unwrap();
        let s = rel(
            &l,
            &b,
            &c,
            &[vec![0.2, 0.3], vec![0.5, 0.0], vec![1.0, 0.7]],
        );
        assert_eq!(ones_ab.sup(&s).unwrap(), ones_ac);
    }

    #[test]
    fn square_diagonal_is_top() {
        let a = dom("A", 3);
        let l = Lattice::Lukasiewicz;
        let r = rel(
            &l,
            &a,
            &a,
            &[
                vec![0.2, 0.7, 1.0],
                vec![0.0, 0.4, 0.5],
                vec![0.9, 0.9, 0.1],
            ],
        );
        let sq = r.square(&r.converse()).unwrap();
        for i in 0..3 {
            assert!((val(&sq, i, i) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn mean_product_rules() {
        let (a, b) = (dom("A", 2), dom("B", 1));
        let l = Lattice::Godel;
        let r = rel(&l, &a, &b, &[vec![0.3], vec![0.9]]);
        let s = rel(&l, &b, &a, &[vec![0.6, 0.2]]);
        for kind in [BkKind::Sub, BkKind::Sup, BkKind::Square] {
            assert_eq!(r.mean_product(&s, kind).unwrap(), r.bk(&s, kind).unwrap());
        }
        let boolean = Lattice::boolean();
        let e = Relation::identity(a, boolean).unwrap();
        assert!(matches!(
            e.mean_product(&e, BkKind::Sub),
            Err(RelationError::UnsupportedLattice { .. })
        ));
    }

    #[test]
    fn wiring_errors() {
        let (a, b) = (dom("A", 2), dom("B", 3));
        let l = Lattice::Godel;
        let r = Relation::zeros(a.clone(), b.clone(), l.clone()).unwrap();
        assert!(matches!(
            r.sub(&r),
            Err(RelationError::DomainMismatch { .. })
        ));
        let other = Relation::zeros(b, a, Lattice::Lukasiewicz).unwrap();
        assert!(matches!(
            r.circle(&other),
            Err(RelationError::LatticeMismatch(..))
        ));
    }

    #[test]
    fn crisp_predicates() {
        let a = dom("A", 2);
        let l = Lattice::Godel;
        let e = Relation::identity(a.clone(), l.clone()).unwrap();
        assert!(e.is_univalent() && e.is_covering());
        let z = Relation::zeros(a.clone(), a.clone(), l.clone()).unwrap();
        assert!(z.is_univalent() && !z.is_covering());
        let f = rel(&l, &dom("X", 1), &dom("Y", 1), &[vec![0.5]]);
        assert!(!f.is_crisp() && !f.is_univalent() && !f.is_covering());
        let two = rel(&l, &dom("X", 1), &a, &[vec![1.0, 1.0]]);
        assert!(!two.is_univalent() && two.is_covering());
    }
}
