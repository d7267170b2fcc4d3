//! Exhaustive small-instance verification.
//!
//! Enumerates every tuple of relations over tiny domains with entries drawn
//! from a finite value set, in lexicographic order (first cell of the first
//! relation most significant), and checks a property on each. Enumeration runs
//! in parallel; the reported witness is always the lexicographically smallest
//! counterexample, so outcomes do not depend on scheduling.
//!
//! Properties and their wiring:
//!
//! * `bootstrap`: `T: A → B`, `U: B → C`, `V: A → C`;
//!   `T ∘ U ⊑ V  ⟺  T ⊑ V ▷ U⁻¹  ⟺  U ⊑ T⁻¹ ◁ V`.
//! * `assoc1..3`: `Q: A → B`, `R: B → C`, `S: C → D`;
//!   `Q ◁ (R ▷ S) = (Q ◁ R) ▷ S`, `Q ◁ (R ◁ S) = (Q ∘ R) ◁ S`,
//!   `Q ▷ (R ▷ S) = Q ▷ (R ∘ S)`.
//! * `maximality`: the square `R: A → B`, `S: C → D`, `F: A → C`, `G: B → D`;
//!   for each fixed triple, the solver bound must be the greatest feasible
//!   value of the unknown.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::lattice::{Lattice, TruthValue};
use crate::morphism::{
    greatest_solution, Direction, MorphismError, MorphismSquare, PartialSquare, Unknown,
};
use crate::relation::{Domain, Relation, RelationError};

/// Default cap on evaluated instances.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Largest supported domain size.
pub const MAX_DOMAIN: usize = 3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("invalid search space: {0}")]
    InvalidSpace(String),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Relation(#[from] RelationError),
}

/// A pseudo-associativity law mixing `∘`, `◁` and `▷`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AssocLaw {
    /// `Q ◁ (R ▷ S) = (Q ◁ R) ▷ S`
    SubSup,
    /// `Q ◁ (R ◁ S) = (Q ∘ R) ◁ S`
    SubSub,
    /// `Q ▷ (R ▷ S) = Q ▷ (R ∘ S)`
    SupSup,
}

impl AssocLaw {
    pub const ALL: [AssocLaw; 3] = [AssocLaw::SubSup, AssocLaw::SubSub, AssocLaw::SupSup];

    /// Law number as used on the command line (`assoc1`..`assoc3`).
    pub fn number(self) -> u8 {
        match self {
            AssocLaw::SubSup => 1,
            AssocLaw::SubSub => 2,
            AssocLaw::SupSup => 3,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        AssocLaw::ALL.into_iter().find(|l| l.number() == n)
    }

    pub fn statement(self) -> &'static str {
        match self {
            AssocLaw::SubSup => "Q <| (R |> S) == (Q <| R) |> S",
            AssocLaw::SubSub => "Q <| (R <| S) == (Q o R) <| S",
            AssocLaw::SupSup => "Q |> (R |> S) == Q |> (R o S)",
        }
    }

    /// Both sides of the law.
    pub fn sides(
        self,
        q: &Relation,
        r: &Relation,
        s: &Relation,
    ) -> Result<(Relation, Relation), RelationError> {
        Ok(match self {
            AssocLaw::SubSup => (q.sub(&r.sup(s)?)?, q.sub(r)?.sup(s)?),
            AssocLaw::SubSub => (q.sub(&r.sub(s)?)?, q.circle(r)?.sub(s)?),
            AssocLaw::SupSup => (q.sup(&r.sup(s)?)?, q.sup(&r.circle(s)?)?),
        })
    }
}

/// The property checked by a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Bootstrap,
    PseudoAssoc(AssocLaw),
    Maximality(Unknown, Direction),
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Bootstrap => write!(f, "bootstrap"),
            Property::PseudoAssoc(law) => write!(f, "assoc{}", law.number()),
            Property::Maximality(u, d) => write!(f, "maximality:{u}:{d}"),
        }
    }
}

impl Serialize for Property {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Where to search: a lattice, domain sizes `|A|, |B|, |C|, |D|`, a finite
/// value set and an instance budget.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    lattice: Lattice,
    sizes: [usize; 4],
    values: Vec<TruthValue>,
    budget: u64,
}

impl SearchSpace {
    pub fn new(
        lattice: Lattice,
        sizes: [usize; 4],
        values: Vec<TruthValue>,
        budget: u64,
    ) -> Result<Self, SearchError> {
        if let Some(bad) = sizes.iter().find(|&&n| n == 0 || n > MAX_DOMAIN) {
            return Err(SearchError::InvalidSpace(format!(
                "domain size {bad} outside 1..={MAX_DOMAIN}"
            )));
        }
        if values.is_empty() {
            return Err(SearchError::InvalidSpace("empty value set".into()));
        }
        if budget == 0 {
            return Err(SearchError::InvalidSpace("budget must be positive".into()));
        }
        for &v in &values {
            lattice
                .check(v)
                .map_err(|e| SearchError::InvalidSpace(e.to_string()))?;
        }
        Ok(SearchSpace {
            lattice,
            sizes,
            values,
            budget,
        })
    }

    /// Every carrier element of a finite lattice, or the uniform grid of
    /// `grid` points on `[0, 1]`.
    pub fn with_grid(
        lattice: Lattice,
        sizes: [usize; 4],
        grid: usize,
    ) -> Result<Self, SearchError> {
        if lattice.is_unit_interval() && grid < 2 {
            return Err(SearchError::InvalidSpace(
                "grid needs at least 2 points".into(),
            ));
        }
        let values = lattice.samples(grid);
        Self::new(lattice, sizes, values, DEFAULT_BUDGET)
    }

    /// The default space: `{0, ½, 1}` on the unit interval, the full carrier
    /// for finite lattices.
    pub fn default_for(lattice: Lattice, sizes: [usize; 4]) -> Result<Self, SearchError> {
        Self::with_grid(lattice, sizes, 3)
    }

    pub fn with_budget(mut self, budget: u64) -> Result<Self, SearchError> {
        if budget == 0 {
            return Err(SearchError::InvalidSpace("budget must be positive".into()));
        }
        self.budget = budget;
        Ok(self)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn sizes(&self) -> [usize; 4] {
        self.sizes
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn domains(&self) -> [Arc<Domain>; 4] {
        let make = |name: &str, size| {
            Arc::new(Domain::indexed(name, &name.to_lowercase(), size).expect("sizes validated"))
        };
        [
            make("A", self.sizes[0]),
            make("B", self.sizes[1]),
            make("C", self.sizes[2]),
            make("D", self.sizes[3]),
        ]
    }

    fn on_grid(&self, v: TruthValue) -> bool {
        self.values.iter().any(|&w| self.lattice.eq(v, w))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    VerifiedExhaustive,
    VerifiedSampled,
    Counterexample,
}

/// A cell where two sides of a property differ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellDiff {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

/// A counterexample: the relation tuple plus what went wrong.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub relations: Vec<Relation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cell: Option<CellDiff>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub property: Property,
    pub lattice: String,
    pub sizes: [usize; 4],
    pub values: Vec<String>,
    pub budget: u64,
    /// `|values|^cells`, saturating at `u64::MAX`.
    pub total_instances: u64,
    pub instances_checked: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl SearchOutcome {
    pub fn is_counterexample(&self) -> bool {
        self.verdict == Verdict::Counterexample
    }

    /// Re-evaluates the witness through the public relation and morphism
    /// operations. `Ok(true)` means the violation reproduces; outcomes without
    /// a witness return `Ok(false)`.
    pub fn replay(&self, space: &SearchSpace) -> Result<bool, SearchError> {
        let Some(witness) = &self.witness else {
            return Ok(false);
        };
        let rels = &witness.relations;
        let found = match self.property {
            Property::Bootstrap => bootstrap_violation(&rels[0], &rels[1], &rels[2]),
            Property::PseudoAssoc(law) => assoc_violation(law, &rels[0], &rels[1], &rels[2])?,
            Property::Maximality(unknown, direction) => {
                let mut known = PartialSquare::default();
                for rel in &rels[..3] {
                    known.set(role_of(rel.name()).expect("witness roles"), rel.clone());
                }
                let candidates = Enumerator::new(space, &[shape_of(unknown, &space.domains())]);
                let all: Vec<Relation> = (0..candidates.total_saturating())
                    .map(|i| candidates.decode(i).remove(0))
                    .collect();
                maximality_violation(space, unknown, direction, &known, &all)?
            }
        };
        Ok(found.is_some())
    }
}

pub fn check_bootstrap(space: &SearchSpace) -> Result<SearchOutcome, SearchError> {
    let [a, b, c, _] = space.domains();
    let shapes = [
        (a.clone(), b.clone(), "T"),
        (b, c.clone(), "U"),
        (a, c, "V"),
    ];
    let enumerator = Enumerator::new(space, &shapes);
    Ok(enumerator.run(Property::Bootstrap, |rels| {
        Ok(bootstrap_violation(&rels[0], &rels[1], &rels[2]))
    }))
}

pub fn check_pseudo_assoc(
    space: &SearchSpace,
    law: AssocLaw,
) -> Result<SearchOutcome, SearchError> {
    let [a, b, c, d] = space.domains();
    let shapes = [(a, b.clone(), "Q"), (b, c.clone(), "R"), (c, d, "S")];
    let enumerator = Enumerator::new(space, &shapes);
    enumerator.try_run(Property::PseudoAssoc(law), |rels| {
        assoc_violation(law, &rels[0], &rels[1], &rels[2])
    })
}

/// For every fixed triple, compares the solver's greatest solution against
/// the enumeration over all candidate values of the unknown.
///
/// Instances are (triple, candidate) pairs. Each triple must satisfy:
/// a candidate is feasible exactly when it lies below the bound, and the
/// join of all feasible candidates equals the bound (when the bound lies in
/// the value set; otherwise it must lie below the bound).
pub fn check_solver_maximality(
    space: &SearchSpace,
    unknown: Unknown,
    direction: Direction,
) -> Result<SearchOutcome, SearchError> {
    if matches!(
        (unknown, direction),
        (Unknown::R, Direction::Backward) | (Unknown::S, Direction::Forward)
    ) {
        return Err(MorphismError::NoGreatestSolution { unknown, direction }.into());
    }
    let domains = space.domains();
    let fixed: Vec<_> = [Unknown::R, Unknown::S, Unknown::F, Unknown::G]
        .into_iter()
        .filter(|&u| u != unknown)
        .map(|u| shape_of(u, &domains))
        .collect();
    let candidates = Enumerator::new(space, &[shape_of(unknown, &domains)]);
    let all: Vec<Relation> = (0..candidates.total_saturating())
        .map(|i| candidates.decode(i).remove(0))
        .collect();
    let per_triple = all.len() as u64;

    let triples = Enumerator::new(space, &fixed);
    let mut outcome = triples.try_run_scaled(
        Property::Maximality(unknown, direction),
        per_triple,
        |rels| {
            let mut known = PartialSquare::default();
            for rel in rels {
                known.set(role_of(rel.name()).expect("shape roles"), rel.clone());
            }
            maximality_violation(space, unknown, direction, &known, &all)
        },
    )?;
    outcome.total_instances = triples.total_saturating().saturating_mul(per_triple);
    Ok(outcome)
}

fn shape_of(u: Unknown, d: &[Arc<Domain>; 4]) -> (Arc<Domain>, Arc<Domain>, &'static str) {
    let [a, b, c, dd] = d;
    match u {
        Unknown::R => (a.clone(), b.clone(), "R"),
        Unknown::S => (c.clone(), dd.clone(), "S"),
        Unknown::F => (a.clone(), c.clone(), "F"),
        Unknown::G => (b.clone(), dd.clone(), "G"),
    }
}

fn role_of(name: &str) -> Option<Unknown> {
    match name {
        "R" => Some(Unknown::R),
        "S" => Some(Unknown::S),
        "F" => Some(Unknown::F),
        "G" => Some(Unknown::G),
        _ => None,
    }
}

fn bootstrap_violation(t: &Relation, u: &Relation, v: &Relation) -> Option<Witness> {
    let circle = t
        .circle(u)
        .and_then(|tu| tu.included_in(v))
        .expect("wiring");
    let via_sup = v
        .sup(&u.converse())
        .and_then(|b| t.included_in(&b))
        .expect("wiring");
    let via_sub = t
        .converse()
        .sub(v)
        .and_then(|b| u.included_in(&b))
        .expect("wiring");
    if circle == via_sup && via_sup == via_sub {
        return None;
    }
    Some(Witness {
        relations: vec![t.clone(), u.clone(), v.clone()],
        cell: None,
        detail: format!(
            "T o U <= V is {circle}, T <= V |> U' is {via_sup}, U <= T' <| V is {via_sub}"
        ),
    })
}

fn assoc_violation(
    law: AssocLaw,
    q: &Relation,
    r: &Relation,
    s: &Relation,
) -> Result<Option<Witness>, SearchError> {
    let (lhs, rhs) = law.sides(q, r, s)?;
    Ok(first_difference(&lhs, &rhs).map(|cell| Witness {
        relations: vec![q.clone(), r.clone(), s.clone()],
        detail: format!("{} fails at ({}, {})", law.statement(), cell.row, cell.col),
        cell: Some(cell),
    }))
}

fn first_difference(lhs: &Relation, rhs: &Relation) -> Option<CellDiff> {
    let l = lhs.lattice();
    (0..lhs.rows())
        .flat_map(|i| (0..lhs.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !l.eq(lhs.get(i, j), rhs.get(i, j)))
        .map(|(i, j)| CellDiff {
            row: i,
            col: j,
            lhs: l.format_value(lhs.get(i, j)),
            rhs: l.format_value(rhs.get(i, j)),
        })
}

fn maximality_violation(
    space: &SearchSpace,
    unknown: Unknown,
    direction: Direction,
    known: &PartialSquare,
    candidates: &[Relation],
) -> Result<Option<Witness>, SearchError> {
    let bound = greatest_solution(unknown, direction, known)?;
    let fixed: Vec<Relation> = [Unknown::R, Unknown::S, Unknown::F, Unknown::G]
        .into_iter()
        .filter_map(|u| known.get(u).cloned())
        .collect();
    let lattice = space.lattice();
    let mut oracle_max = Relation::zeros(
        bound.source_arc().clone(),
        bound.target_arc().clone(),
        lattice.clone(),
    )?;

    for x in candidates {
        let mut parts = known.clone();
        parts.set(unknown, x.clone());
        let square = parts.into_square()?;
        let feasible = square.is_compatible(direction);
        let below = x.included_in(&bound)?;
        if feasible != below {
            let mut relations = fixed.clone();
            relations.push(x.clone().with_name(format!("{unknown}?")));
            return Ok(Some(Witness {
                relations,
                cell: None,
                detail: format!(
                    "candidate {unknown}: {direction} compatible is {feasible} but below the bound is {below}"
                ),
            }));
        }
        if feasible {
            oracle_max = oracle_max.join(x)?;
        }
    }

    let bound_on_grid = bound.entries().iter().all(|&v| space.on_grid(v));
    let agrees = if bound_on_grid {
        oracle_max == bound
    } else {
        oracle_max.included_in(&bound)?
    };
    if agrees && square_of(known, unknown, &oracle_max)?.is_compatible(direction) {
        return Ok(None);
    }
    let mut relations = fixed;
    relations.push(bound.clone().with_name(format!("{unknown}_bound")));
    relations.push(oracle_max.clone().with_name(format!("{unknown}_oracle")));
    Ok(Some(Witness {
        cell: first_difference(&bound, &oracle_max),
        relations,
        detail: format!("solver bound for {unknown} differs from the enumerated maximum"),
    }))
}

fn square_of(
    known: &PartialSquare,
    unknown: Unknown,
    x: &Relation,
) -> Result<MorphismSquare, SearchError> {
    let mut parts = known.clone();
    parts.set(unknown, x.clone());
    Ok(parts.into_square()?)
}

/// Decodes instance indices into relation tuples.
struct Enumerator<'a> {
    space: &'a SearchSpace,
    shapes: Vec<(Arc<Domain>, Arc<Domain>, &'static str)>,
    cells: usize,
}

impl<'a> Enumerator<'a> {
    fn new(space: &'a SearchSpace, shapes: &[(Arc<Domain>, Arc<Domain>, &'static str)]) -> Self {
        let cells = shapes.iter().map(|(s, t, _)| s.len() * t.len()).sum();
        Enumerator {
            space,
            shapes: shapes.to_vec(),
            cells,
        }
    }

    fn total_saturating(&self) -> u64 {
        let base = self.space.values.len() as u64;
        (0..self.cells).fold(1u64, |acc, _| acc.saturating_mul(base))
    }

    /// The tuple at `index`; the first cell of the first relation is the most
    /// significant digit.
    fn decode(&self, index: u64) -> Vec<Relation> {
        let values = &self.space.values;
        let base = values.len() as u64;
        let mut digits = vec![0usize; self.cells];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % base) as usize;
            rest /= base;
        }
        let mut offset = 0;
        self.shapes
            .iter()
            .map(|(src, dst, name)| {
                let n = src.len() * dst.len();
                let data = digits[offset..offset + n]
                    .iter()
                    .map(|&d| values[d])
                    .collect();
                offset += n;
                Relation::new(
                    *name,
                    src.clone(),
                    dst.clone(),
                    self.space.lattice.clone(),
                    data,
                )
                .expect("values validated against the lattice")
            })
            .collect()
    }

    fn run(
        &self,
        property: Property,
        check: impl Fn(&[Relation]) -> Result<Option<Witness>, SearchError> + Sync,
    ) -> SearchOutcome {
        self.try_run(property, check).expect("infallible property")
    }

    fn try_run(
        &self,
        property: Property,
        check: impl Fn(&[Relation]) -> Result<Option<Witness>, SearchError> + Sync,
    ) -> Result<SearchOutcome, SearchError> {
        self.try_run_scaled(property, 1, check)
    }

    /// Runs `check` over every tuple, each tuple standing for `weight`
    /// instances against the budget.
    fn try_run_scaled(
        &self,
        property: Property,
        weight: u64,
        check: impl Fn(&[Relation]) -> Result<Option<Witness>, SearchError> + Sync,
    ) -> Result<SearchOutcome, SearchError> {
        let total = self.total_saturating();
        let affordable = (self.space.budget / weight.max(1)).max(1);
        let count = total.min(affordable);
        let found = (0..count)
            .into_par_iter()
            .map(|index| check(&self.decode(index)).map(|w| w.map(|w| (index, w))))
            .find_map_first(|result| match result {
                Ok(None) => None,
                other => Some(other),
            });
        let (verdict, checked, witness) = match found {
            Some(Err(e)) => return Err(e),
            Some(Ok(Some((index, w)))) => (Verdict::Counterexample, index + 1, Some(w)),
            _ if count < total => (Verdict::VerifiedSampled, count, None),
            _ => (Verdict::VerifiedExhaustive, count, None),
        };
        let space = self.space;
        Ok(SearchOutcome {
            property,
            lattice: space.lattice.name(),
            sizes: space.sizes,
            values: space
                .values
                .iter()
                .map(|&v| space.lattice.format_value(v))
                .collect(),
            budget: space.budget,
            total_instances: total.saturating_mul(weight),
            instances_checked: checked.saturating_mul(weight),
            verdict,
            witness,
        })
    }
}
