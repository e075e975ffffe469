use std::fmt;

/// Outcome of an exhaustive identity check: how many instances were
/// examined and, on failure, the first counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub checked: usize,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn new() -> Self {
        Verdict { checked: 0, witness: None }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Records one instance; keeps only the first failure.
    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }
}

impl Default for Verdict {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "ok ({} instances)", self.checked),
            Some(w) => write!(f, "FAILED after {} instances: {}", self.checked, w),
        }
    }
}
