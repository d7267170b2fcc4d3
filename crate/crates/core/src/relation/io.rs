//! Relation file formats.
//!
//! CSV: cell `(0, 0)` holds the relation name, the rest of row 0 the target
//! labels, the rest of column 0 the source labels. Body cells are decimals
//! in `[0, 1]` (9 decimal digits on output) or finite-lattice element names.
//!
//! ```text
//! R,b1,b2
//! a1,1.000000000,0.500000000
//! a2,0.000000000,1.000000000
//! ```
//!
//! JSON mirrors the same structure:
//! `{"name": "R", "source": [..labels..], "target": [..], "matrix": [[..]]}`,
//! with numbers or element-name strings as entries.

use std::io::{Read, Write};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Domain, Relation, RelationError};
use crate::lattice::{Lattice, TruthValue};

fn format_err(e: impl std::fmt::Display) -> RelationError {
    RelationError::Format(e.to_string())
}

pub fn read_csv(reader: impl Read, lattice: &Lattice) -> Result<Relation, RelationError> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut records = csv.records();
    let header = records
        .next()
        .ok_or_else(|| format_err("empty relation file"))?
        .map_err(format_err)?;
    let mut fields = header.iter();
    let name = fields.next().unwrap_or_default().to_string();
    let targets: Vec<String> = fields.map(str::to_string).collect();

    let mut sources = Vec::new();
    let mut data = Vec::new();
    for (line, record) in records.enumerate() {
        let record = record.map_err(format_err)?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() != targets.len() + 1 {
            return Err(format_err(format!(
                "row {} has {} cells, expected {}",
                line + 2,
                record.len(),
                targets.len() + 1
            )));
        }
        let mut cells = record.iter();
        sources.push(cells.next().unwrap_or_default().to_string());
        for cell in cells {
            data.push(lattice.parse_value(cell)?);
        }
    }
    Relation::new(
        name,
        Domain::new("", sources)?,
        Domain::new("", targets)?,
        lattice.clone(),
        data,
    )
}

pub fn write_csv(relation: &Relation, writer: impl Write) -> Result<(), RelationError> {
    let mut csv = csv::Writer::from_writer(writer);
    let mut header = vec![relation.name().to_string()];
    header.extend(relation.target().labels().iter().cloned());
    csv.write_record(&header).map_err(format_err)?;
    for (i, label) in relation.source().labels().iter().enumerate() {
        let mut row = vec![label.clone()];
        row.extend(
            (0..relation.cols()).map(|j| relation.lattice().format_value(relation.get(i, j))),
        );
        csv.write_record(&row).map_err(format_err)?;
    }
    csv.flush().map_err(format_err)
}

pub fn to_csv_string(relation: &Relation) -> String {
    let mut buf = Vec::new();
    write_csv(relation, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("csv output is UTF-8")
}

/// A JSON cell: a number for unit-interval lattices, an element name for
/// tables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonCell {
    Number(f64),
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationJson {
    pub name: String,
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub matrix: Vec<Vec<JsonCell>>,
}

impl RelationJson {
    pub fn from_relation(relation: &Relation) -> Self {
        let lattice = relation.lattice();
        let matrix = (0..relation.rows())
            .map(|i| {
                (0..relation.cols())
                    .map(|j| match relation.get(i, j) {
                        TruthValue::Unit(x) => JsonCell::Number(x),
                        v => JsonCell::Name(lattice.format_value(v)),
                    })
                    .collect()
            })
            .collect();
        RelationJson {
            name: relation.name().to_string(),
            source: relation.source().labels().to_vec(),
            target: relation.target().labels().to_vec(),
            matrix,
        }
    }

    pub fn to_relation(&self, lattice: &Lattice) -> Result<Relation, RelationError> {
        let cols = self.target.len();
        if self.matrix.len() != self.source.len() || self.matrix.iter().any(|r| r.len() != cols) {
            return Err(RelationError::Shape {
                rows: self.source.len(),
                cols,
                got: self.matrix.iter().map(Vec::len).sum(),
            });
        }
        let data = self
            .matrix
            .iter()
            .flatten()
            .map(|cell| match cell {
                JsonCell::Number(x) => lattice.unit(*x),
                JsonCell::Name(s) => lattice.parse_value(s),
            })
            .collect::<Result<_, _>>()?;
        Relation::new(
            self.name.clone(),
            Domain::new("", self.source.clone())?,
            Domain::new("", self.target.clone())?,
            lattice.clone(),
            data,
        )
    }
}

impl Serialize for Relation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RelationJson::from_relation(self).serialize(serializer)
    }
}

pub fn read_json(reader: impl Read, lattice: &Lattice) -> Result<Relation, RelationError> {
    let json: RelationJson = serde_json::from_reader(reader).map_err(format_err)?;
    json.to_relation(lattice)
}

/// Loads a relation file, choosing JSON for `.json` paths and CSV otherwise.
pub fn load(path: impl AsRef<Path>, lattice: &Lattice) -> Result<Relation, RelationError> {
    let path = path.as_ref();
    let file =
        std::fs::File::open(path).map_err(|e| format_err(format!("{}: {e}", path.display())))?;
    let is_json = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("json"));
    if is_json {
        read_json(file, lattice)
    } else {
        read_csv(file, lattice)
    }
}

/// Gives a relation's domains explicit names, keeping labels.
pub fn rename_domains(
    relation: Relation,
    source: &str,
    target: &str,
) -> Result<Relation, RelationError> {
    let src = Domain::new(source, relation.source().labels().to_vec())?;
    let dst = Domain::new(target, relation.target().labels().to_vec())?;
    Relation::new(
        relation.name().to_string(),
        Arc::new(src),
        Arc::new(dst),
        relation.lattice().clone(),
        relation.entries().to_vec(),
    )
}
