//! Run configuration: the JSON schema consumed by the CLI.
//!
//! ```
//! use hgzeta::config::RunConfig;
//!
//! let cfg = RunConfig::from_json(r#"{
//!     "p": 7, "q": 7, "n": 2,
//!     "A": [3,0,0, 0,3,0, 0,0,3],
//!     "c": [1,1,1],
//!     "lambda": "all",
//!     "r_max": 3
//! }"#)?;
//! let spec = cfg.family()?;
//! assert_eq!(spec.alpha.alpha_total, 3);
//! assert_eq!(cfg.lambdas(&spec).len(), 6); // sweeps every unit of F_7
//! # Ok::<(), hgzeta::Error>(())
//! ```

use crate::count::DEFAULT_BUDGET;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::intlin::IntMatrix;
use serde::{Deserialize, Serialize};

/// λ selection: a single prime-field representative or the full F_q^× sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaChoice {
    Int(i64),
    Sweep(String),
}

/// Verification oracles that can be switched on per run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Oracle {
    /// Brute enumeration of projective representatives.
    Brute,
    /// Stratified character-sum counting.
    Delsarte,
    /// The hypergeometric count prediction.
    Hgf,
}

fn default_precision_bits() -> u32 {
    256
}

fn default_padic_precision() -> u32 {
    6
}

fn default_oracles() -> Vec<Oracle> {
    vec![Oracle::Brute, Oracle::Delsarte, Oracle::Hgf]
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

/// One pipeline run: family data plus evaluation parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub p: u64,
    pub q: u64,
    pub n: usize,
    /// Exponent matrix, row-major, (n+1)².
    #[serde(rename = "A")]
    pub a: Vec<i64>,
    /// Coefficients c_1..c_{n+1} as prime-field representatives.
    pub c: Vec<i64>,
    pub lambda: LambdaChoice,
    pub r_max: u32,
    #[serde(default = "default_precision_bits")]
    pub precision_bits: u32,
    #[serde(default = "default_padic_precision")]
    pub padic_precision: u32,
    #[serde(default = "default_oracles")]
    pub oracles: Vec<Oracle>,
    /// Enumeration budget for the brute oracle.
    #[serde(default = "default_budget")]
    pub budget: u64,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<RunConfig> {
        let cfg: RunConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        RunConfig::from_json(&text)
    }

    /// Residue degree f with q = p^f.
    pub fn residue_degree(&self) -> Result<u32> {
        let mut q = self.q;
        let mut f = 0u32;
        while q > 1 && q % self.p == 0 {
            q /= self.p;
            f += 1;
        }
        if q != 1 || f == 0 {
            return Err(Error::Config(format!(
                "q = {} is not a power of p = {}",
                self.q, self.p
            )));
        }
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let dim = self.n + 1;
        if self.a.len() != dim * dim {
            return Err(Error::Config(format!(
                "A must have {} entries (row-major {dim}×{dim}), got {}",
                dim * dim,
                self.a.len()
            )));
        }
        if self.c.len() != dim {
            return Err(Error::Config(format!(
                "c must have {dim} entries, got {}",
                self.c.len()
            )));
        }
        if self.c.iter().any(|&v| v.rem_euclid(self.p as i64) == 0) {
            return Err(Error::Config("c entries must be nonzero mod p".into()));
        }
        if self.r_max == 0 {
            return Err(Error::Config("r_max must be positive".into()));
        }
        if let LambdaChoice::Sweep(s) = &self.lambda {
            if s != "all" {
                return Err(Error::Config(format!(
                    "lambda must be an integer or \"all\", got {s:?}"
                )));
            }
        }
        self.residue_degree()?;
        Ok(())
    }

    /// Build the validated family.
    pub fn family(&self) -> Result<FamilySpec> {
        let f = self.residue_degree()?;
        let dim = self.n + 1;
        let mut a = IntMatrix::zero(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                a.set(i, j, rug::Integer::from(self.a[i * dim + j]));
            }
        }
        FamilySpec::new(self.n, self.p, f, a, &self.c)
    }

    /// The λ values this run covers, as base-field elements.
    pub fn lambdas(&self, spec: &FamilySpec) -> Vec<crate::ffield::FqElem> {
        match &self.lambda {
            LambdaChoice::Int(v) => vec![spec.lambda_from_int(*v)],
            LambdaChoice::Sweep(_) => spec.field.units().collect(),
        }
    }
}
