//! Check records, suite reports and size caps.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub elapsed_ms: u128,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {} (seed {}) {} in {} ms", self.suite, self.seed, if self.pass() { "PASS" } else { "FAIL" }, self.elapsed_ms);
        for c in &self.checks {
            let _ = write!(s, "  {} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
            if !c.detail.is_empty() {
                let _ = write!(s, ": {}", c.detail);
            }
            s.push('\n');
        }
        s
    }
}

/// Accumulates checks while a suite runs.
pub struct Recorder {
    suite: String,
    seed: u64,
    start: Instant,
    checks: Vec<Check>,
}

impl Recorder {
    pub fn new(suite: &str, seed: u64) -> Self {
        Recorder { suite: suite.into(), seed, start: Instant::now(), checks: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    /// Records a failure for `Err`, otherwise the boolean.
    pub fn check_result<E: std::fmt::Display>(&mut self, name: impl Into<String>, r: Result<bool, E>, detail: impl Into<String>) {
        match r {
            Ok(b) => self.check(name, b, detail),
            Err(e) => self.check(name, false, format!("error: {e}")),
        }
    }

    pub fn finish(self) -> SuiteReport {
        SuiteReport { suite: self.suite, seed: self.seed, elapsed_ms: self.start.elapsed().as_millis(), checks: self.checks }
    }
}

/// Size caps for the sampled and exhaustive batteries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub max_rank: usize,
    pub max_dim: i64,
    pub max_weight: usize,
    pub samples: usize,
}

impl Caps {
    /// The sizes named by the acceptance criteria.
    pub fn full() -> Self {
        Caps { max_rank: 4, max_dim: 4, max_weight: 5, samples: 100 }
    }

    pub fn small() -> Self {
        Caps { max_rank: 3, max_dim: 2, max_weight: 3, samples: 10 }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "full" => return Ok(Caps::full()),
            "small" => return Ok(Caps::small()),
            _ => {}
        }
        let mut caps = Caps::full();
        for kv in s.split(',') {
            let (k, v) = kv.split_once('=').ok_or_else(|| format!("bad cap {kv:?}; use small, full or key=value"))?;
            let n: usize = v.trim().parse().map_err(|_| format!("bad cap value {v:?}"))?;
            if n == 0 {
                return Err(format!("cap {k} must be positive"));
            }
            match k.trim() {
                "rank" => caps.max_rank = n,
                "dim" => caps.max_dim = n as i64,
                "weight" => caps.max_weight = n,
                "samples" => caps.samples = n,
                other => return Err(format!("unknown cap {other:?}")),
            }
        }
        Ok(caps)
    }
}

impl std::fmt::Display for Caps {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "rank={},dim={},weight={},samples={}", self.max_rank, self.max_dim, self.max_weight, self.samples)
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps::full()
    }
}
