use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Reported but never counted against the verdict.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// Named pass/fail conditions with a short witness or reason for each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Self { subject: subject.into(), checks: Vec::new() }
    }

    pub fn check(&mut self, id: &str, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            id: id.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
        ok
    }

    pub fn info(&mut self, id: &str, detail: impl Into<String>) {
        self.checks.push(Check {
            id: id.to_string(),
            status: Status::Info,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Info => "info",
            };
            if c.detail.is_empty() {
                writeln!(f, "  [{tag}] {}", c.id)?;
            } else {
                writeln!(f, "  [{tag}] {}: {}", c.id, c.detail)?;
            }
        }
        write!(f, "verdict: {}", if self.passed() { "pass" } else { "fail" })
    }
}
