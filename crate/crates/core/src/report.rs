use std::fmt;

/// Outcome of a batch verification: how many checks ran and the first
/// counterexample, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failure: Option<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checked: 0, failure: None }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Records one check; only the first failure message is kept.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.checked += 1;
        if self.failure.is_none() {
            self.failure = Some(msg.into());
        }
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        if self.failure.is_none() {
            self.failure = other.failure.map(|f| format!("{}: {f}", other.name));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} checks)", self.name, self.checked),
            Some(msg) => write!(f, "FAIL {} after {} checks: {msg}", self.name, self.checked),
        }
    }
}
