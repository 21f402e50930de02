use std::fmt::Display;

use serde::{Deserialize, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepStatus {
    /// Held at every point tested.
    Verified,
    Failed,
    /// Not run, e.g. for lack of external data.
    Skipped,
}

/// Outcome of checking one inequality over a set of points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub case_id: String,
    pub lhs: String,
    pub rhs: String,
    /// Claimed start of validity, as a decimal string.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub threshold: Option<String>,
    /// Smallest and largest points tested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verified_range: Option<(String, String)>,
    pub points: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<String>,
    /// Largest failing point below the threshold, when a probe ran and found one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failure_below_threshold: Option<String>,
    pub status: SweepStatus,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub note: String,
}

impl SweepReport {
    pub fn new(case_id: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Self {
            case_id: case_id.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            threshold: None,
            verified_range: None,
            points: 0,
            failures: 0,
            first_failure: None,
            failure_below_threshold: None,
            status: SweepStatus::Verified,
            note: String::new(),
        }
    }

    pub fn skipped(
        case_id: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        note: impl Into<String>,
    ) -> Self {
        let mut r = Self::new(case_id, lhs, rhs);
        r.status = SweepStatus::Skipped;
        r.note = note.into();
        r
    }

    /// Records a batch of `(point, held)` outcomes, given in increasing order.
    pub fn record<P: ToString>(&mut self, outcomes: impl IntoIterator<Item = (P, bool)>) {
        for (point, held) in outcomes {
            let shown = point.to_string();
            match &mut self.verified_range {
                None => self.verified_range = Some((shown.clone(), shown.clone())),
                Some((_, hi)) => *hi = shown.clone(),
            }
            self.points += 1;
            if !held {
                self.failures += 1;
                self.first_failure.get_or_insert(shown);
                self.status = SweepStatus::Failed;
            }
        }
    }

    pub fn with_threshold(mut self, threshold: impl ToString) -> Self {
        self.threshold = Some(threshold.to_string());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn is_verified(&self) -> bool {
        self.status == SweepStatus::Verified
    }
}

/// Serializes through `Display`, so big integers come out as decimal strings.
pub(crate) fn as_decimal<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}
