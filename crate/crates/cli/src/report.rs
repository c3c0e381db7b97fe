//! Verification reports and their JSON form.

use std::cmp::Ordering;
use std::time::Instant;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

pub const SCHEMA: u32 = 1;

/// Named parameters of one instance, kept in insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params(Vec<(String, Value)>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.0.push((name.to_string(), value.into()));
        self
    }

    fn sort_key(&self) -> Vec<i64> {
        fn flatten(v: &Value, out: &mut Vec<i64>) {
            match v {
                Value::Number(n) => out.push(n.as_i64().unwrap_or(i64::MAX)),
                Value::Array(items) => {
                    out.push(items.len() as i64);
                    items.iter().for_each(|i| flatten(i, out));
                }
                _ => {}
            }
        }
        let mut out = Vec::new();
        for (_, v) in &self.0 {
            flatten(v, &mut out);
        }
        out
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One compared quantity: the methods used and the value each produced.
#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub check: String,
    pub params: Params,
    pub methods: Vec<String>,
    pub values: Vec<String>,
    pub equal: bool,
    pub status: Status,
    pub experimental: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed: f64,
}

impl Instance {
    /// Runs `f`, which returns `(method, value)` pairs; the instance passes
    /// when every value is the same. Resource errors mark it skipped.
    pub fn compare<F>(check: &str, params: Params, f: F) -> Instance
    where
        F: FnOnce() -> tilecount::Result<Vec<(String, String)>>,
    {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed().as_secs_f64();
        let mut inst = Instance {
            check: check.to_string(),
            params,
            methods: Vec::new(),
            values: Vec::new(),
            equal: false,
            status: Status::Fail,
            experimental: false,
            note: None,
            elapsed,
        };
        match outcome {
            Ok(pairs) => {
                inst.equal = pairs.windows(2).all(|w| w[0].1 == w[1].1) && !pairs.is_empty();
                inst.status = if inst.equal { Status::Pass } else { Status::Fail };
                (inst.methods, inst.values) = pairs.into_iter().unzip();
            }
            Err(e @ tilecount::Error::Resource { .. }) => {
                inst.status = Status::Skipped;
                inst.note = Some(e.to_string());
            }
            Err(e) => inst.note = Some(e.to_string()),
        }
        inst
    }

    /// Like [`Instance::compare`] for a check that reduces to a flag.
    pub fn flag<F>(check: &str, params: Params, f: F) -> Instance
    where
        F: FnOnce() -> tilecount::Result<bool>,
    {
        Instance::compare(check, params, || {
            let ok = f()?;
            Ok(vec![
                ("check".to_string(), ok.to_string()),
                ("expected".to_string(), "true".to_string()),
            ])
        })
    }

    pub fn experimental(mut self) -> Self {
        self.experimental = true;
        self
    }

    fn cmp_key(&self, other: &Instance) -> Ordering {
        (self.check.as_str(), self.params.sort_key()).cmp(&(other.check.as_str(), other.params.sort_key()))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub experimental: usize,
}

impl Summary {
    fn add(&mut self, other: &Summary) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.skipped += other.skipped;
        self.experimental += other.experimental;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub grid: Params,
    pub strict: bool,
    pub passed: bool,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub instances: Vec<Instance>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<VerificationReport>,
}

impl VerificationReport {
    /// Sorts instances by check and parameters and fills in the summary.
    /// Experimental failures are only counted as failures when `strict` is set.
    pub fn new(suite: &str, grid: Params, mut instances: Vec<Instance>, strict: bool) -> Self {
        instances.sort_by(Instance::cmp_key);
        let mut summary = Summary::default();
        for i in &instances {
            if i.experimental {
                summary.experimental += 1;
            }
            match i.status {
                Status::Pass => summary.pass += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Fail if i.experimental && !strict => {}
                Status::Fail => summary.fail += 1,
            }
        }
        let passed = summary.fail == 0;
        VerificationReport {
            schema: SCHEMA,
            suite: suite.to_string(),
            grid,
            strict,
            passed,
            summary,
            instances,
            suites: Vec::new(),
        }
    }

    pub fn combine(suite: &str, parts: Vec<VerificationReport>, strict: bool) -> Self {
        let mut summary = Summary::default();
        for p in &parts {
            summary.add(&p.summary);
        }
        VerificationReport {
            schema: SCHEMA,
            suite: suite.to_string(),
            grid: Params::new(),
            strict,
            passed: parts.iter().all(|p| p.passed),
            summary,
            instances: Vec::new(),
            suites: parts,
        }
    }

}
