use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::scheme::FatPointScheme;

/// How the two sides of a record are compared.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[default]
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

/// One evaluated instance of an identity or inequality. `t` is the degree,
/// or `None` for degree-free statements such as equal regularity indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub t: Option<usize>,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
    #[serde(default)]
    pub relation: Relation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl Record {
    pub fn new(label: &str, t: Option<usize>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Record {
            t,
            lhs,
            rhs,
            pass: relation.holds(lhs, rhs),
            relation,
            label: Some(label.to_string()),
        }
    }
}

/// Outcome of one check on one scheme. `pass` holds exactly when every
/// record passes; a report without records (not applicable, or a vacuous
/// range) passes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub pass: bool,
    pub records: Vec<Record>,
    #[serde(default)]
    pub fingerprint: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_dim: Option<usize>,
    #[serde(default = "yes")]
    pub applicable: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn yes() -> bool {
    true
}

impl VerificationReport {
    pub fn new(check: CheckKind, z: &FatPointScheme, target_dim: Option<usize>) -> Self {
        VerificationReport {
            check: check.name().to_string(),
            pass: true,
            records: Vec::new(),
            fingerprint: z.fingerprint(),
            target_dim,
            applicable: true,
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, record: Record) {
        self.pass &= record.pass;
        self.records.push(record);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn not_applicable(mut self, why: impl Into<String>) -> Self {
        self.applicable = false;
        self.note(why);
        self
    }

    /// First failing record, if any.
    pub fn counterexample(&self) -> Option<&Record> {
        self.records.iter().find(|r| !r.pass)
    }

    /// Re-derives `pass` from the records.
    pub fn is_consistent(&self) -> bool {
        self.pass == self.records.iter().all(|r| r.pass)
            && self
                .records
                .iter()
                .all(|r| r.pass == r.relation.holds(r.lhs, r.rhs))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if !self.applicable {
            "n/a"
        } else if self.pass {
            "PASS"
        } else {
            "FAIL"
        };
        write!(f, "[{status}] {}", self.check)?;
        if let Some(m) = self.target_dim {
            write!(f, " (target P^{m})")?;
        }
        writeln!(f)?;
        for r in &self.records {
            let t = r.t.map_or_else(|| "-".to_string(), |t| t.to_string());
            writeln!(
                f,
                "  {:<4} t={:<3} {} {} {}  {}",
                if r.pass { "ok" } else { "FAIL" },
                t,
                r.lhs,
                r.relation.symbol(),
                r.rhs,
                r.label.as_deref().unwrap_or("")
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// The checks runnable from the command line, by their external names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// Regularity index unchanged by the embedding.
    Reg,
    /// Values and comparison of both Hilbert functions from the regularity
    /// index on.
    Stable,
    /// Hilbert function of the image from truncations of `Z`.
    Transfer,
    /// One-step additive identity, monotonicity and strictness.
    OneStep,
    /// Ideal dimension of the image from truncations of `Z`.
    IdealDim,
    /// Same identity with the coefficient `C(m - n + k, k)`; expected to fail.
    IdealDimShifted,
    /// Setting the new variables to zero maps the image ideal into `I_Z`.
    Restriction,
    /// `reg(Z) >= m_1 + m_2 - 1`.
    TwoLargest,
    /// Closed-form regularity for points on the rational normal curve.
    Rnc,
}

impl CheckKind {
    /// Everything `--checks all` runs.
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Reg,
        CheckKind::Stable,
        CheckKind::Transfer,
        CheckKind::OneStep,
        CheckKind::IdealDim,
        CheckKind::Restriction,
        CheckKind::TwoLargest,
        CheckKind::Rnc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Reg => "reg",
            CheckKind::Stable => "stable",
            CheckKind::Transfer => "transfer",
            CheckKind::OneStep => "cor46",
            CheckKind::IdealDim => "prop44",
            CheckKind::IdealDimShifted => "prop44-shifted",
            CheckKind::Restriction => "restriction",
            CheckKind::TwoLargest => "lemma23",
            CheckKind::Rnc => "rnc",
        }
    }

    /// Parses a comma list; `all` expands to [`CheckKind::ALL`]. Duplicates
    /// are dropped, first occurrence wins.
    pub fn parse_list(list: &str) -> Result<Vec<CheckKind>, String> {
        let mut out = Vec::new();
        for item in list.split(',').map(str::trim) {
            let kinds: Vec<CheckKind> = if item == "all" {
                CheckKind::ALL.to_vec()
            } else {
                vec![item.parse()?]
            };
            for k in kinds {
                if !out.contains(&k) {
                    out.push(k);
                }
            }
        }
        Ok(out)
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CheckKind::ALL
            .iter()
            .chain(std::iter::once(&CheckKind::IdealDimShifted))
            .find(|k| k.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}
