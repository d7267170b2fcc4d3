use std::path::Path;

use serde::{Deserialize, Serialize};

use super::LatticeError;

/// On-disk form of a finite lattice.
///
/// `meet` and `join` are derived from `leq`. When `residuum` is omitted it is
/// derived as `a → b = max{c : a ⊗ c ≤ b}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub tensor: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residuum: Option<Vec<Vec<usize>>>,
    pub bottom: usize,
    pub top: usize,
}

/// A finite lattice given by operation tables, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteLattice {
    label: String,
    names: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    tensor: Vec<usize>,
    residuum: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds the tables and checks their structure: square shapes, indices in
    /// range, `leq` a partial order with the stated bounds, and existence of
    /// all meets, joins and (if derived) residua.
    ///
    /// Monoid and adjunction axioms are not checked here; see
    /// [`super::Lattice::from_table`].
    pub fn from_file(label: impl Into<String>, file: &LatticeFile) -> Result<Self, LatticeError> {
        let n = file.names.len();
        let malformed = |msg: String| Err(LatticeError::Malformed(msg));
        if n == 0 {
            return malformed("empty carrier".into());
        }
        for (i, name) in file.names.iter().enumerate() {
            if file.names[..i].contains(name) {
                return malformed(format!("duplicate element name `{name}`"));
            }
        }
        let square = |table: &[Vec<usize>], what: &str| -> Result<Vec<usize>, LatticeError> {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(LatticeError::Malformed(format!(
                    "{what} table must be {n}x{n}"
                )));
            }
            let flat: Vec<usize> = table.iter().flatten().copied().collect();
            if let Some(bad) = flat.iter().find(|&&x| x >= n) {
                return Err(LatticeError::Malformed(format!(
                    "{what} table entry {bad} out of range"
                )));
            }
            Ok(flat)
        };
        if file.leq.len() != n || file.leq.iter().any(|row| row.len() != n) {
            return malformed(format!("leq table must be {n}x{n}"));
        }
        if file.bottom >= n || file.top >= n {
            return malformed("bottom/top index out of range".into());
        }
        let leq: Vec<bool> = file.leq.iter().flatten().copied().collect();
        let le = |a: usize, b: usize| leq[a * n + b];

        for a in 0..n {
            if !le(a, a) {
                return malformed(format!("leq is not reflexive at {}", file.names[a]));
            }
            if !le(file.bottom, a) || !le(a, file.top) {
                return malformed(format!("{} is not between bottom and top", file.names[a]));
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return malformed(format!(
                        "leq is not antisymmetric on ({}, {})",
                        file.names[a], file.names[b]
                    ));
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return malformed(format!(
                            "leq is not transitive on ({}, {}, {})",
                            file.names[a], file.names[b], file.names[c]
                        ));
                    }
                }
            }
        }

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
                let upper: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
                let glb = greatest(&lower, le);
                let lub = least(&upper, le);
                match (glb, lub) {
                    (Some(g), Some(l)) => {
                        meet[a * n + b] = g;
                        join[a * n + b] = l;
                    }
                    _ => {
                        return malformed(format!(
                            "({}, {}) has no meet or join",
                            file.names[a], file.names[b]
                        ))
                    }
                }
            }
        }

        let tensor = square(&file.tensor, "tensor")?;
        let residuum = match &file.residuum {
            Some(table) => square(table, "residuum")?,
            None => {
                let mut res = vec![0; n * n];
                for a in 0..n {
                    for b in 0..n {
                        let admissible: Vec<usize> =
                            (0..n).filter(|&c| le(tensor[a * n + c], b)).collect();
                        res[a * n + b] = greatest(&admissible, le).ok_or_else(|| {
                            LatticeError::Malformed(format!(
                                "no greatest c with {} ⊗ c ≤ {}; residuum undefined",
                                file.names[a], file.names[b]
                            ))
                        })?;
                    }
                }
                res
            }
        };

        Ok(FiniteLattice {
            label: label.into(),
            names: file.names.clone(),
            leq,
            meet,
            join,
            tensor,
            residuum,
            bottom: file.bottom,
            top: file.top,
        })
    }

    pub fn from_json(label: impl Into<String>, json: &str) -> Result<Self, LatticeError> {
        let file: LatticeFile =
            serde_json::from_str(json).map_err(|e| LatticeError::Malformed(e.to_string()))?;
        Self::from_file(label, &file)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, LatticeError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| LatticeError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::from_json(format!("table:{}", path.display()), &text)
    }

    pub fn to_file(&self) -> LatticeFile {
        let n = self.size();
        let rows = |flat: &[usize]| flat.chunks(n).map(<[usize]>::to_vec).collect();
        LatticeFile {
            names: self.names.clone(),
            leq: self.leq.chunks(n).map(<[bool]>::to_vec).collect(),
            tensor: rows(&self.tensor),
            residuum: Some(rows(&self.residuum)),
            bottom: self.bottom,
            top: self.top,
        }
    }

    /// Classical two-valued logic.
    pub fn boolean() -> Self {
        Self::godel_chain(2).relabel("boolean")
    }

    /// The `n`-element chain `0 < 1 < … < n-1` with `⊗ = min` (a Heyting
    /// chain). Element names are `0/(n-1)`, …, rendered as `k`.
    pub fn godel_chain(n: usize) -> Self {
        assert!(n >= 2, "a chain needs at least two elements");
        let file = chain_file(n, |a, b| a.min(b));
        Self::from_file(format!("godel-chain:{n}"), &file).expect("chains are lattices")
    }

    /// The `n`-element Łukasiewicz (MV) chain: `a ⊗ b = max(0, a + b - (n-1))`.
    pub fn lukasiewicz_chain(n: usize) -> Self {
        assert!(n >= 2, "a chain needs at least two elements");
        let file = chain_file(n, |a, b| (a + b).saturating_sub(n - 1));
        Self::from_file(format!("luk-chain:{n}"), &file).expect("chains are lattices")
    }

    /// The four-element Boolean algebra `{0, a, b, 1}` with `⊗ = ∧`; the
    /// smallest non-chain example.
    pub fn diamond() -> Self {
        let names = ["0", "a", "b", "1"].map(String::from).to_vec();
        let le = |x: usize, y: usize| x == y || x == 0 || y == 3;
        let leq = (0..4).map(|x| (0..4).map(|y| le(x, y)).collect()).collect();
        let meet = |x: usize, y: usize| {
            if le(x, y) {
                x
            } else if le(y, x) {
                y
            } else {
                0
            }
        };
        let tensor = (0..4)
            .map(|x| (0..4).map(|y| meet(x, y)).collect())
            .collect();
        let file = LatticeFile {
            names,
            leq,
            tensor,
            residuum: None,
            bottom: 0,
            top: 3,
        };
        Self::from_file("diamond", &file).expect("diamond is a lattice")
    }

    fn relabel(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    pub fn tensor(&self, a: usize, b: usize) -> usize {
        self.tensor[a * self.size() + b]
    }

    pub fn residuum(&self, a: usize, b: usize) -> usize {
        self.residuum[a * self.size() + b]
    }
}

fn chain_file(n: usize, tensor: impl Fn(usize, usize) -> usize) -> LatticeFile {
    let names = if n == 2 {
        vec!["0".to_string(), "1".to_string()]
    } else {
        (0..n).map(|k| format!("{k}/{}", n - 1)).collect()
    };
    LatticeFile {
        names,
        leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect(),
        tensor: (0..n)
            .map(|a| (0..n).map(|b| tensor(a, b)).collect())
            .collect(),
        residuum: None,
        bottom: 0,
        top: n - 1,
    }
}

fn greatest(set: &[usize], le: impl Fn(usize, usize) -> bool) -> Option<usize> {
    set.iter().copied().find(|&g| set.iter().all(|&c| le(c, g)))
}

fn least(set: &[usize], le: impl Fn(usize, usize) -> bool) -> Option<usize> {
    set.iter().copied().find(|&l| set.iter().all(|&c| le(l, c)))
}
