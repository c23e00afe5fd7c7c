//! JSON records of search outcomes.

use std::time::Duration;

use lcd_core::search::{
    Goal, HighRateOutcome, ReductionConclusion, ReductionOutcome, SearchOutcome, SearchSpec,
    SearchStatus,
};
use lcd_core::simplex::build_multiset_code;
use lcd_core::{FieldOrder, FqMatrix, LinearCode, MultiplicityVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{parse_matrix, render_matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    ExistenceWitness,
    ExhaustiveNonexistence,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub q: u32,
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum Witness {
    /// Multiplicity vector over the simplex columns of dimension `k`.
    Multiplicity { m: String },
    /// Generator matrix in the text matrix format.
    Generator { matrix: String },
}

/// How a search tree was split across workers. `pending` lists the
/// subtrees that ran out of budget together with their resume cursors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPlan {
    pub depth: usize,
    pub prefixes: usize,
    pub budget_per_prefix: u64,
    pub pending: Vec<PendingPrefix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendingPrefix {
    pub prefix: Vec<u32>,
    pub cursor: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub procedure: String,
    pub parameters: Parameters,
    pub witness: Option<Witness>,
    /// Number of witnesses the run produced (all of them for enumerate-all).
    pub witnesses_found: usize,
    pub nodes: u64,
    pub wall_time_ms: u64,
    /// Everything needed to rerun the search.
    pub spec: serde_json::Value,
    pub tool_version: String,
    pub split_plan: Option<SplitPlan>,
    pub resume_cursor: Option<Vec<u32>>,
    pub note: Option<String>,
}

fn kind_of<W>(out: &SearchOutcome<W>) -> CertificateKind {
    if out.found() {
        CertificateKind::ExistenceWitness
    } else if out.status == SearchStatus::Inconclusive {
        CertificateKind::Inconclusive
    } else {
        CertificateKind::ExhaustiveNonexistence
    }
}

fn millis(d: Duration) -> u64 {
    u64::try_from(d.as_millis()).unwrap_or(u64::MAX)
}

fn generator_witness(c: &LinearCode) -> Witness {
    Witness::Generator {
        matrix: render_matrix(c.generator()),
    }
}

impl Certificate {
    fn base(
        procedure: &str,
        parameters: Parameters,
        spec: serde_json::Value,
        elapsed: Duration,
    ) -> Self {
        Self {
            kind: CertificateKind::Inconclusive,
            procedure: procedure.to_owned(),
            parameters,
            witness: None,
            witnesses_found: 0,
            nodes: 0,
            wall_time_ms: millis(elapsed),
            spec,
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            split_plan: None,
            resume_cursor: None,
            note: None,
        }
    }

    pub fn multiset(
        spec: &SearchSpec,
        out: &SearchOutcome<MultiplicityVector>,
        elapsed: Duration,
        split: Option<SplitPlan>,
    ) -> Self {
        let params = Parameters {
            q: spec.field.q().into(),
            n: spec.n as u64,
            k: spec.k as u64,
            d: spec.d as u64,
        };
        let mut c = Self::base(
            "multiset",
            params,
            serde_json::to_value(spec).expect("serializable"),
            elapsed,
        );
        c.kind = kind_of(out);
        c.nodes = out.nodes;
        c.witness = out
            .witnesses
            .first()
            .map(|m| Witness::Multiplicity { m: m.to_string() });
        c.witnesses_found = out.witnesses.len();
        c.resume_cursor = out.cursor.clone();
        c.split_plan = split;
        c.note = Some(
            "codes C(m) have no zero coordinate, so the search covers exactly the LCD codes with dual distance >= 2"
                .to_owned(),
        );
        c
    }

    #[allow(clippy::too_many_arguments)]
    pub fn method1(
        field: FieldOrder,
        n: usize,
        k: usize,
        d: usize,
        lcd_only: bool,
        goal: Goal,
        out: &SearchOutcome<LinearCode>,
        elapsed: Duration,
    ) -> Self {
        let params = Parameters {
            q: field.q().into(),
            n: n as u64,
            k: k as u64,
            d: d as u64,
        };
        let spec = serde_json::json!({ "lcd_only": lcd_only, "goal": goal });
        let mut c = Self::base("method1", params, spec, elapsed);
        c.kind = kind_of(out);
        c.nodes = out.nodes;
        c.witness = out.witnesses.first().map(generator_witness);
        c.witnesses_found = out.witnesses.len();
        c.resume_cursor = out.cursor.clone();
        c.note = Some(
            "systematic generators (I_k | A) with first row of A equal to (0..0, 1^(d-1)); every [n, k] code of \
             minimum weight exactly d is equivalent to one of them"
                .to_owned(),
        );
        c
    }

    pub fn highrate(
        field: FieldOrder,
        n: usize,
        i: usize,
        goal: Goal,
        out: &HighRateOutcome,
        elapsed: Duration,
    ) -> Self {
        let params = Parameters {
            q: field.q().into(),
            n: n as u64,
            k: n.saturating_sub(i) as u64,
            d: 3,
        };
        let spec = serde_json::json!({ "redundancy": i, "goal": goal });
        let mut c = Self::base("highrate", params, spec, elapsed);
        c.kind = kind_of(&out.search);
        c.nodes = out.search.nodes;
        c.witness = out
            .search
            .witnesses
            .first()
            .map(|w| generator_witness(&w.code));
        c.witnesses_found = out.search.witnesses.len();
        c.resume_cursor = out.search.cursor.clone();
        c.note = Some(if out.excluded_by_bound {
            let points = lcd_core::bounds::k_bracket(field, i as u32);
            format!(
                "n exceeds the {points} projective points available: no [n, n-{i}, 3] code at all"
            )
        } else {
            "LCD-only statement: non-LCD codes with these parameters may exist (e.g. Hamming codes)"
                .to_owned()
        });
        c
    }

    pub fn reduction(out: &ReductionOutcome, elapsed: Duration) -> Self {
        let p = &out.plan;
        let (tn, td) = p.target();
        let params = Parameters {
            q: p.field.q().into(),
            n: tn,
            k: p.k as u64,
            d: td,
        };
        let spec = serde_json::json!({ "plan": p, "distances": out.distances });
        let mut c = Self::base("reduction", params, spec, elapsed);
        c.nodes = out.nodes;
        c.resume_cursor = out.cursor.clone();
        c.witness = out
            .witness
            .as_ref()
            .map(|m| Witness::Multiplicity { m: m.to_string() });
        c.witnesses_found = usize::from(out.witness.is_some());
        let kb = lcd_core::bounds::k_bracket(p.field, p.k);
        let qk = p.field.pow(p.k - 1);
        let (kind, note) = match out.conclusion {
            ReductionConclusion::Nonexistence => (
                CertificateKind::ExhaustiveNonexistence,
                format!(
                    "no LCD [{kb}s+{}, {}, {qk}s{:+}] code over GF({}) exists for any integer s >= 0 with {kb}s+{} >= {} \
                     (s' = {})",
                    p.t,
                    p.k,
                    p.alpha,
                    p.field.q(),
                    p.t,
                    p.k,
                    p.s_prime
                ),
            ),
            ReductionConclusion::WitnessFound => (
                CertificateKind::ExistenceWitness,
                "the target code exists, so the reduction yields no bound".to_owned(),
            ),
            ReductionConclusion::Inconclusive => (
                CertificateKind::Inconclusive,
                "node budget exhausted; nothing is concluded".to_owned(),
            ),
        };
        c.kind = kind;
        c.note = Some(note);
        c
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Decodes the embedded witness, if any.
    pub fn witness_code(&self) -> Result<Option<LinearCode>> {
        let field = FieldOrder::new(self.parameters.q)?;
        match &self.witness {
            None => Ok(None),
            Some(Witness::Multiplicity { m }) => {
                let mv = MultiplicityVector::parse(field, self.parameters.k as usize, m)?;
                Ok(Some(build_multiset_code(&mv)?))
            }
            Some(Witness::Generator { matrix }) => {
                let g: FqMatrix = parse_matrix(matrix)?;
                Ok(Some(LinearCode::from_generator(g)?))
            }
        }
    }

    /// Rechecks an embedded witness: length, dimension, LCD and minimum
    /// weight at least `d`.
    pub fn reverify(&self, budget: u64) -> Result<bool> {
        let Some(c) = self.witness_code()? else {
            return Err(Error::Invalid("certificate carries no witness".to_owned()));
        };
        let p = self.parameters;
        Ok(c.n() as u64 == p.n
            && c.k() as u64 == p.k
            && c.is_lcd()
            && c.min_distance(budget)? as u64 >= p.d)
    }
}
