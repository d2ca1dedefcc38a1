use std::fmt;

use ultra_lpa_core::algebra::DEFAULT_LAMBDA_CAP;
use ultra_lpa_core::ideals::DEFAULT_HS_CAP;
use ultra_lpa_core::model::DEFAULT_LATTICE_CAP;
use ultra_lpa_core::paths::DEFAULT_PATH_CAP;

pub const ENV_VAR: &str = "ULTRA_LPA_CAPS";

/// Enumeration limits. Precedence: command-line flag, then
/// `ULTRA_LPA_CAPS` (`lattice=N,paths=N,hs=N,lambda=N`), then the library
/// defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub lattice: usize,
    pub paths: usize,
    pub hs: usize,
    pub lambda: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { lattice: DEFAULT_LATTICE_CAP, paths: DEFAULT_PATH_CAP, hs: DEFAULT_HS_CAP, lambda: DEFAULT_LAMBDA_CAP }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct CapsError(String);

impl fmt::Display for CapsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{ENV_VAR}: {}", self.0)
    }
}

impl Caps {
    pub fn from_env_value(value: &str) -> Result<Caps, CapsError> {
        let mut caps = Caps::default();
        for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, val) = item
                .split_once('=')
                .ok_or_else(|| CapsError(format!("expected key=value, got `{item}`")))?;
            let n: usize = val
                .trim()
                .parse()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| CapsError(format!("`{key}` needs a positive integer, got `{val}`")))?;
            match key.trim() {
                "lattice" => caps.lattice = n,
                "paths" => caps.paths = n,
                "hs" => caps.hs = n,
                "lambda" => caps.lambda = n,
                other => return Err(CapsError(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }

    pub fn classify(&self) -> ultra_lpa_core::Caps {
        ultra_lpa_core::Caps { hs: self.hs, lambda: self.lambda }
    }
}
