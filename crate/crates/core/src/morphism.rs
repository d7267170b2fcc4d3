//! Generalized morphisms between fuzzy relations.
//!
//! A square `(R, S, F, G)` wires `R: A → B`, `S: C → D`, `F: A → C` and
//! `G: B → D`:
//!
//! ```text
//!        R
//!    A ─────▶ B
//!    │        │
//!  F │        │ G
//!    ▼        ▼
//!    C ─────▶ D
//!        S
//! ```
//!
//! * forward compatible: `F⁻¹ ∘ R ∘ G ⊑ S`
//! * backward compatible: `F ∘ S ∘ G⁻¹ ⊑ R` (a generalized proteromorphism;
//!   there is no separate notion in this crate)
//! * both-ways compatible (amphimorphism): both at once.
//!
//! Each compatibility condition is downward closed in the unknown that sits
//! on the small side of the residuation, so it has a greatest solution. The
//! solvers here return those bounds:
//!
//! | unknown | direction | greatest solution      |
//! |---------|-----------|------------------------|
//! | `R`     | forward   | `F ◁ (S ▷ G⁻¹)`        |
//! | `S`     | backward  | `F⁻¹ ◁ (R ▷ G)`        |
//! | `F`     | forward   | `R ◁ (G ◁ S⁻¹)`        |
//! | `G`     | forward   | `R⁻¹ ◁ (F ◁ S)`        |
//! | `F`     | backward  | `(R ▷ G) ▷ S⁻¹`        |
//! | `G`     | backward  | `(R⁻¹ ▷ F) ▷ S`        |

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::TruthValue;
use crate::relation::{Relation, RelationError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MorphismError {
    #[error("square wiring mismatch: {0}")]
    Wiring(String),
    #[error("relation {0} is not crisp")]
    NotCrisp(String),
    #[error("no greatest {unknown} for {direction} compatibility; {unknown} only has a lower bound there")]
    NoGreatestSolution {
        unknown: Unknown,
        direction: Direction,
    },
    #[error("{0} must be given")]
    Missing(Unknown),
    #[error(transparent)]
    Relation(#[from] RelationError),
}

/// Which member of a square is solved for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Unknown {
    R,
    S,
    F,
    G,
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Unknown::R => "R",
            Unknown::S => "S",
            Unknown::F => "F",
            Unknown::G => "G",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

/// Up to four relations of a square; the unknown is left out.
#[derive(Debug, Clone, Default)]
pub struct PartialSquare {
    pub r: Option<Relation>,
    pub s: Option<Relation>,
    pub f: Option<Relation>,
    pub g: Option<Relation>,
}

impl PartialSquare {
    pub fn get(&self, which: Unknown) -> Option<&Relation> {
        match which {
            Unknown::R => self.r.as_ref(),
            Unknown::S => self.s.as_ref(),
            Unknown::F => self.f.as_ref(),
            Unknown::G => self.g.as_ref(),
        }
    }

    pub fn set(&mut self, which: Unknown, relation: Relation) {
        let slot = match which {
            Unknown::R => &mut self.r,
            Unknown::S => &mut self.s,
            Unknown::F => &mut self.f,
            Unknown::G => &mut self.g,
        };
        *slot = Some(relation);
    }

    fn need(&self, which: Unknown) -> Result<&Relation, MorphismError> {
        self.get(which).ok_or(MorphismError::Missing(which))
    }

    /// Checks the domain wiring among whichever relations are present.
    pub fn check_wiring(&self) -> Result<(), MorphismError> {
        let present: Vec<&Relation> = [&self.r, &self.s, &self.f, &self.g]
            .into_iter()
            .flatten()
            .collect();
        if let Some(first) = present.first() {
            if let Some(other) = present.iter().find(|x| x.lattice() != first.lattice()) {
                return Err(RelationError::LatticeMismatch(
                    first.lattice().name(),
                    other.lattice().name(),
                )
                .into());
            }
        }
        use Side::*;
        // (relation, side) pairs that must share a carrier: A, B, C, D.
        let links = [
            ((Unknown::R, Source), (Unknown::F, Source), "A"),
            ((Unknown::R, Target), (Unknown::G, Source), "B"),
            ((Unknown::S, Source), (Unknown::F, Target), "C"),
            ((Unknown::S, Target), (Unknown::G, Target), "D"),
        ];
        for ((x, xs), (y, ys), carrier) in links {
            if let (Some(rx), Some(ry)) = (self.get(x), self.get(y)) {
                let (dx, dy) = (xs.of(rx), ys.of(ry));
                if !dx.matches(dy) {
                    return Err(MorphismError::Wiring(format!(
                        "{x} {} {dx} and {y} {} {dy} must both be carrier {carrier}",
                        xs.name(),
                        ys.name(),
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn into_square(self) -> Result<MorphismSquare, MorphismError> {
        self.check_wiring()?;
        let take = |x: Option<Relation>, u| x.ok_or(MorphismError::Missing(u));
        Ok(MorphismSquare {
            r: take(self.r, Unknown::R)?,
            s: take(self.s, Unknown::S)?,
            f: take(self.f, Unknown::F)?,
            g: take(self.g, Unknown::G)?,
        })
    }
}

#[derive(Clone, Copy)]
enum Side {
    Source,
    Target,
}

impl Side {
    fn of(self, r: &Relation) -> &crate::relation::Domain {
        match self {
            Side::Source => r.source(),
            Side::Target => r.target(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Side::Source => "source",
            Side::Target => "target",
        }
    }
}

/// A fully specified square `R: A → B`, `S: C → D`, `F: A → C`, `G: B → D`.
#[derive(Debug, Clone)]
pub struct MorphismSquare {
    r: Relation,
    s: Relation,
    f: Relation,
    g: Relation,
}

impl MorphismSquare {
    pub fn new(r: Relation, s: Relation, f: Relation, g: Relation) -> Result<Self, MorphismError> {
        PartialSquare {
            r: Some(r),
            s: Some(s),
            f: Some(f),
            g: Some(g),
        }
        .into_square()
    }

    pub fn r(&self) -> &Relation {
        &self.r
    }

    pub fn s(&self) -> &Relation {
        &self.s
    }

    pub fn f(&self) -> &Relation {
        &self.f
    }

    pub fn g(&self) -> &Relation {
        &self.g
    }

    pub fn get(&self, which: Unknown) -> &Relation {
        match which {
            Unknown::R => &self.r,
            Unknown::S => &self.s,
            Unknown::F => &self.f,
            Unknown::G => &self.g,
        }
    }

    /// The square with one relation replaced; wiring is rechecked.
    pub fn replace(&self, which: Unknown, relation: Relation) -> Result<Self, MorphismError> {
        let mut parts = self.to_partial();
        parts.set(which, relation);
        parts.into_square()
    }

    pub fn to_partial(&self) -> PartialSquare {
        PartialSquare {
            r: Some(self.r.clone()),
            s: Some(self.s.clone()),
            f: Some(self.f.clone()),
            g: Some(self.g.clone()),
        }
    }

    /// `F⁻¹ ∘ R ∘ G`, a relation `C → D`.
    pub fn forward_image(&self) -> Relation {
        self.f
            .converse()
            .circle(&self.r)
            .and_then(|x| x.circle(&self.g))
            .expect("wiring checked at construction")
    }

    /// `F ∘ S ∘ G⁻¹`, a relation `A → B`.
    pub fn backward_image(&self) -> Relation {
        self.f
            .circle(&self.s)
            .and_then(|x| x.circle(&self.g.converse()))
            .expect("wiring checked at construction")
    }

    pub fn is_compatible(&self, direction: Direction) -> bool {
        match direction {
            Direction::Forward => forward_compatible(self),
            Direction::Backward => backward_compatible(self),
        }
    }
}

/// A cell where a compatibility inclusion fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub row_label: String,
    pub col_label: String,
    /// Value of the composed side.
    pub lhs: String,
    /// Value of the bounding relation.
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompatReport {
    pub forward: bool,
    pub backward: bool,
    pub bothways: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forward_violation: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backward_violation: Option<Violation>,
}

/// `F⁻¹ ∘ R ∘ G ⊑ S`.
pub fn forward_compatible(m: &MorphismSquare) -> bool {
    m.forward_image().included_in(&m.s).expect("wiring checked")
}

/// `F ∘ S ∘ G⁻¹ ⊑ R`.
pub fn backward_compatible(m: &MorphismSquare) -> bool {
    m.backward_image()
        .included_in(&m.r)
        .expect("wiring checked")
}

/// Both compatibility directions with the worst violating cell of each.
pub fn amphimorphism(m: &MorphismSquare) -> CompatReport {
    let forward_violation = worst_violation(&m.forward_image(), &m.s);
    let backward_violation = worst_violation(&m.backward_image(), &m.r);
    let forward = forward_violation.is_none();
    let backward = backward_violation.is_none();
    CompatReport {
        forward,
        backward,
        bothways: forward && backward,
        forward_violation,
        backward_violation,
    }
}

/// The cell of `lhs ⊑ rhs` with the largest excess `lhs - rhs` on the unit
/// interval, or the first failing cell on finite lattices.
fn worst_violation(lhs: &Relation, rhs: &Relation) -> Option<Violation> {
    let lattice = lhs.lattice();
    let mut worst: Option<((usize, usize), f64)> = None;
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            let (a, b) = (lhs.get(i, j), rhs.get(i, j));
            if lattice.leq(a, b).unwrap_or(false) {
                continue;
            }
            let excess = match (a, b) {
                (TruthValue::Unit(x), TruthValue::Unit(y)) => x - y,
                _ => 0.0,
            };
            if worst.is_none_or(|(_, w)| excess > w) {
                worst = Some(((i, j), excess));
            }
        }
    }
    worst.map(|((i, j), _)| Violation {
        row: i,
        col: j,
        row_label: lhs.source().labels()[i].clone(),
        col_label: lhs.target().labels()[j].clone(),
        lhs: lattice.format_value(lhs.get(i, j)),
        rhs: lattice.format_value(rhs.get(i, j)),
    })
}

/// Greatest `R` with `F⁻¹ ∘ R ∘ G ⊑ S`: `F ◁ (S ▷ G⁻¹)`.
pub fn solve_r_upper(s: &Relation, f: &Relation, g: &Relation) -> Result<Relation, MorphismError> {
    wired(None, Some(s), Some(f), Some(g))?;
    Ok(f.sub(&s.sup(&g.converse())?)?.with_name("R_max"))
}

/// `F ∘ S ∘ G⁻¹`: the least `R` with backward compatibility.
pub fn solve_r_lower(s: &Relation, f: &Relation, g: &Relation) -> Result<Relation, MorphismError> {
    wired(None, Some(s), Some(f), Some(g))?;
    Ok(f.circle(s)?.circle(&g.converse())?.with_name("R_min"))
}

/// Greatest `S` with `F ∘ S ∘ G⁻¹ ⊑ R`: `F⁻¹ ◁ (R ▷ G)`.
pub fn solve_s_upper(r: &Relation, f: &Relation, g: &Relation) -> Result<Relation, MorphismError> {
    wired(Some(r), None, Some(f), Some(g))?;
    Ok(f.converse().sub(&r.sup(g)?)?.with_name("S_max"))
}

/// `F⁻¹ ∘ R ∘ G`: the least `S` with forward compatibility.
pub fn solve_s_lower(r: &Relation, f: &Relation, g: &Relation) -> Result<Relation, MorphismError> {
    wired(Some(r), None, Some(f), Some(g))?;
    Ok(f.converse().circle(r)?.circle(g)?.with_name("S_min"))
}

/// Greatest `F` with forward compatibility: `R ◁ (G ◁ S⁻¹)`.
pub fn solve_f_forward(
    r: &Relation,
    s: &Relation,
    g: &Relation,
) -> Result<Relation, MorphismError> {
    wired(Some(r), Some(s), None, Some(g))?;
    Ok(r.sub(&g.sub(&s.converse())?)?.with_name("F_max"))
}

/// Greatest `G` with forward compatibility: `R⁻¹ ◁ (F ◁ S)`.
pub fn solve_g_forward(
    r: &Relation,
    s: &Relation,
    f: &Relation,
) -> Result<Relation, MorphismError> {
    wired(Some(r), Some(s), Some(f), None)?;
    Ok(r.converse().sub(&f.sub(s)?)?.with_name("G_max"))
}

/// Greatest `F` with backward compatibility: `(R ▷ G) ▷ S⁻¹`.
pub fn solve_f_backward(
    r: &Relation,
    s: &Relation,
    g: &Relation,
) -> Result<Relation, MorphismError> {
    wired(Some(r), Some(s), None, Some(g))?;
    Ok(r.sup(g)?.sup(&s.converse())?.with_name("F_max"))
}

/// Greatest `G` with backward compatibility: `(R⁻¹ ▷ F) ▷ S`.
pub fn solve_g_backward(
    r: &Relation,
    s: &Relation,
    f: &Relation,
) -> Result<Relation, MorphismError> {
    wired(Some(r), Some(s), Some(f), None)?;
    Ok(r.converse().sup(f)?.sup(s)?.with_name("G_max"))
}

/// Dispatches to the greatest-solution formula for `unknown`; the other
/// three relations must be present in `known`.
///
/// `R` has a greatest solution only for forward compatibility and `S` only
/// for backward compatibility.
pub fn greatest_solution(
    unknown: Unknown,
    direction: Direction,
    known: &PartialSquare,
) -> Result<Relation, MorphismError> {
    use Direction::*;
    use Unknown::*;
    let (r, s, f, g) = (known.need(R), known.need(S), known.need(F), known.need(G));
    match (unknown, direction) {
        (R, Forward) => solve_r_upper(s?, f?, g?),
        (S, Backward) => solve_s_upper(r?, f?, g?),
        (F, Forward) => solve_f_forward(r?, s?, g?),
        (G, Forward) => solve_g_forward(r?, s?, f?),
        (F, Backward) => solve_f_backward(r?, s?, g?),
        (G, Backward) => solve_g_backward(r?, s?, f?),
        (R, Backward) | (S, Forward) => {
            Err(MorphismError::NoGreatestSolution { unknown, direction })
        }
    }
}

/// Least solution, where one exists: `R` under backward compatibility,
/// `S` under forward compatibility.
pub fn least_solution(
    unknown: Unknown,
    direction: Direction,
    known: &PartialSquare,
) -> Result<Relation, MorphismError> {
    let (r, s, f, g) = (
        known.need(Unknown::R),
        known.need(Unknown::S),
        known.need(Unknown::F),
        known.need(Unknown::G),
    );
    match (unknown, direction) {
        (Unknown::R, Direction::Backward) => solve_r_lower(s?, f?, g?),
        (Unknown::S, Direction::Forward) => solve_s_lower(r?, f?, g?),
        _ => Err(MorphismError::Wiring(format!(
            "no least {unknown} for {direction} compatibility"
        ))),
    }
}

fn wired(
    r: Option<&Relation>,
    s: Option<&Relation>,
    f: Option<&Relation>,
    g: Option<&Relation>,
) -> Result<(), MorphismError> {
    PartialSquare {
        r: r.cloned(),
        s: s.cloned(),
        f: f.cloned(),
        g: g.cloned(),
    }
    .check_wiring()
}

fn require_crisp(m: &MorphismSquare) -> Result<(), MorphismError> {
    for rel in [&m.r, &m.s, &m.f, &m.g] {
        if !rel.is_crisp() {
            return Err(MorphismError::NotCrisp(rel.name().to_string()));
        }
    }
    Ok(())
}

/// `S` is a homomorphic image of `R` under total functions `F`, `G`:
/// `F⁻¹ ∘ R ∘ G = S`, `F ∘ S ∘ G⁻¹ = R`, and `F`, `G` univalent and covering.
pub fn is_homomorphism(m: &MorphismSquare) -> Result<bool, MorphismError> {
    require_crisp(m)?;
    let functions = [&m.f, &m.g]
        .iter()
        .all(|x| x.is_univalent() && x.is_covering());
    Ok(functions && m.forward_image() == m.s && m.backward_image() == m.r)
}

/// The square commutes (`R ∘ G = F ∘ S`) and `F`, `G` are partial functions.
pub fn is_partial_homomorphism(m: &MorphismSquare) -> Result<bool, MorphismError> {
    require_crisp(m)?;
    let commutes = m.r.circle(&m.g)? == m.f.circle(&m.s)?;
    Ok(commutes && m.f.is_univalent() && m.g.is_univalent())
}
