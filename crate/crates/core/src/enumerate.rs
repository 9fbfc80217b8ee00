//! Two-stage Fano towers per dimension and the exhaustive rigidity sweep.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cohomology::c1;
use crate::error::{Error, Result};
use crate::fan::is_fano_two_stage;
use crate::gbm::{CanonicalForm, TwoStageSpec};
use crate::iso::{default_bound, ring_iso_search, IsoWitness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationEntry {
    #[serde(flatten, serialize_with = "serialize_form")]
    pub form: CanonicalForm,
    pub fano: bool,
    pub c1: String,
}

impl ClassificationEntry {
    pub fn spec(&self) -> TwoStageSpec {
        self.form.to_spec()
    }
}

fn serialize_form<S: Serializer>(form: &CanonicalForm, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Wire<'a> {
        spec: String,
        n1: usize,
        n2: usize,
        exponents: &'a [i64],
        is_product: bool,
    }
    Wire {
        spec: form.to_string(),
        n1: form.type_pair.0,
        n2: form.type_pair.1,
        exponents: &form.sorted_a,
        is_product: form.is_product,
    }
    .serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationTable {
    pub dimension: usize,
    pub count: usize,
    pub entries: Vec<ClassificationEntry>,
}

/// Weakly increasing nonnegative vectors of length `len` with sum at most `budget`.
fn bounded_partitions(len: usize, budget: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, min: i64, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let slots = (len - prefix.len()) as i64;
        // the remaining slots are all >= next, so slots * next <= budget
        let mut next = min;
        while slots * next <= budget {
            prefix.push(next);
            rec(len, next, budget - next, prefix, out);
            prefix.pop();
            next += 1;
        }
    }
    let mut out = Vec::new();
    rec(len, 0, budget, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Every two-stage Fano tower of complex dimension `dimension`, one entry
/// per canonical form, sorted by type and then exponents.
pub fn enumerate_fano(dimension: usize) -> Result<ClassificationTable> {
    if dimension < 2 {
        return Err(Error::Dimension(dimension));
    }
    let mut forms = std::collections::BTreeSet::new();
    for n1 in 1..dimension {
        let n2 = dimension - n1;
        for a in bounded_partitions(n2, n1 as i64) {
            let spec = TwoStageSpec::new(n1, a)?;
            debug_assert!(is_fano_two_stage(&spec)?);
            forms.insert(spec.canonical_form());
        }
    }
    let entries: Vec<ClassificationEntry> = forms
        .into_iter()
        .map(|form| {
            let spec = form.to_spec();
            ClassificationEntry {
                fano: is_fano_two_stage(&spec).expect("normalized"),
                c1: c1(&spec.to_matrix()).to_string(),
                form,
            }
        })
        .collect();
    Ok(ClassificationTable {
        dimension,
        count: entries.len(),
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "plain" => Ok(Self::Plain),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format '{other}' (expected plain, json or csv)")),
        }
    }
}

pub fn classification_emit(table: &ClassificationTable, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Plain => Ok(table
            .entries
            .iter()
            .map(|e| format!("{}\n", e.form))
            .collect()),
        OutputFormat::Json => Ok(serde_json::to_string_pretty(table)? + "\n"),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n1", "n2", "exponents", "is_product", "c1"])?;
            for e in &table.entries {
                let exps: Vec<String> = e.form.sorted_a.iter().map(|a| a.to_string()).collect();
                w.write_record([
                    e.form.type_pair.0.to_string(),
                    e.form.type_pair.1.to_string(),
                    exps.join(","),
                    e.form.is_product.to_string(),
                    e.c1.clone(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Csv(e.into_error().into()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

/// Oracle bound used for each pair in a rigidity sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundPolicy {
    /// `sum a + sum a~ + 2` per pair.
    #[default]
    Auto,
    Fixed(i64),
}

impl BoundPolicy {
    pub fn bound(&self, source: &TwoStageSpec, target: &TwoStageSpec) -> i64 {
        match *self {
            BoundPolicy::Auto => default_bound(source, target),
            BoundPolicy::Fixed(b) => b,
        }
    }
}

impl FromStr for BoundPolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "auto" {
            return Ok(Self::Auto);
        }
        s.strip_prefix("fixed:")
            .and_then(|b| b.parse::<i64>().ok())
            .filter(|&b| b >= 0)
            .map(Self::Fixed)
            .ok_or_else(|| format!("invalid bound policy '{s}' (expected auto or fixed:B)"))
    }
}

impl fmt::Display for BoundPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundPolicy::Auto => write!(f, "auto"),
            BoundPolicy::Fixed(b) => write!(f, "fixed:{b}"),
        }
    }
}

/// A pair where the oracle and canonical-form equality disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub source: TwoStageSpec,
    pub target: TwoStageSpec,
    pub canonical_equal: bool,
    pub witness: Option<IsoWitness>,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    pub dimension: usize,
    pub pairs_checked: usize,
    pub agreements: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Largest bound used over the sweep.
    pub oracle_bound_used: i64,
    #[serde(serialize_with = "serialize_millis", rename = "elapsed_ms")]
    pub elapsed: Duration,
}

fn serialize_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl RigidityReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For every unordered pair of enumerated Fano towers in each dimension,
/// checks that a `c1`-preserving substitution exists exactly when the
/// canonical forms coincide.
pub fn verify_rigidity(max_dimension: usize, policy: BoundPolicy) -> Result<Vec<RigidityReport>> {
    if max_dimension < 2 {
        return Err(Error::Dimension(max_dimension));
    }
    (2..=max_dimension)
        .map(|d| verify_dimension(d, policy))
        .collect()
}

fn verify_dimension(dimension: usize, policy: BoundPolicy) -> Result<RigidityReport> {
    let start = Instant::now();
    let table = enumerate_fano(dimension)?;
    let specs: Vec<TwoStageSpec> = table.entries.iter().map(ClassificationEntry::spec).collect();
    let pairs: Vec<(usize, usize)> = (0..specs.len())
        .flat_map(|i| (i..specs.len()).map(move |j| (i, j)))
        .collect();
    let outcomes: Vec<(i64, Option<Counterexample>)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (source, target) = (&specs[i], &specs[j]);
            let bound = policy.bound(source, target);
            let witness = ring_iso_search(source, target, bound, true);
            let canonical_equal = table.entries[i].form == table.entries[j].form;
            let agrees = witness.is_some() == canonical_equal;
            let counterexample = (!agrees).then(|| Counterexample {
                source: source.clone(),
                target: target.clone(),
                canonical_equal,
                witness,
                bound,
            });
            (bound, counterexample)
        })
        .collect();
    let counterexamples: Vec<Counterexample> =
        outcomes.iter().filter_map(|(_, c)| c.clone()).collect();
    Ok(RigidityReport {
        dimension,
        pairs_checked: pairs.len(),
        agreements: pairs.len() - counterexamples.len(),
        counterexamples,
        oracle_bound_used: outcomes.iter().map(|(b, _)| *b).max().unwrap_or(0),
        elapsed: start.elapsed(),
    })
}
