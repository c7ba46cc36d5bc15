//! The bound recursion `w_s = 0`, `w_j = w_{j+1} r + c'`, `c = (w_1 + 1) r`,
//! and the user-supplied table of dichotomy thresholds `r(s)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantsTable {
    pub s: u64,
    pub kappa: u64,
    pub r: u64,
    pub c_prime: u64,
    /// `w[j]` for `j = 0..=s`.
    pub w: Vec<u64>,
    pub c: u64,
}

impl ConstantsTable {
    pub fn w(&self, j: usize) -> u64 {
        self.w[j]
    }
}

/// Evaluates the recursion with checked arithmetic; overflow is an error.
pub fn constants_table(s: u64, kappa: u64, r: u64, c_prime: u64) -> Result<ConstantsTable> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    if r < 1 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let len = usize::try_from(s).map_err(|_| Error::InvalidParameter("s too large".into()))? + 1;
    let mut w = vec![0u64; len];
    for j in (0..len - 1).rev() {
        w[j] = w[j + 1]
            .checked_mul(r)
            .and_then(|x| x.checked_add(c_prime))
            .ok_or_else(|| Error::Overflow(format!("w_{j} (s={s}, r={r}, c'={c_prime})")))?;
    }
    let c = w[1]
        .checked_add(1)
        .and_then(|x| x.checked_mul(r))
        .ok_or_else(|| Error::Overflow(format!("c (s={s}, r={r}, c'={c_prime})")))?;
    Ok(ConstantsTable {
        s,
        kappa,
        r,
        c_prime,
        w,
        c,
    })
}

/// Thresholds `r(s)` for the induced-path / biclique dichotomy. No closed
/// form is known, so values beyond the defaults must be supplied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RTable(BTreeMap<usize, u64>);

impl RTable {
    pub fn new(entries: impl IntoIterator<Item = (usize, u64)>) -> Self {
        RTable(entries.into_iter().collect())
    }

    pub fn get(&self, s: usize) -> Option<u64> {
        self.0.get(&s).copied()
    }

    pub fn insert(&mut self, s: usize, r: u64) {
        self.0.insert(s, r);
    }

    /// Parses `"3=5,4=9"`; entries are added on top of the defaults.
    pub fn parse_overrides(text: &str) -> Result<Self> {
        let mut table = RTable::default();
        for item in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (s, r) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("bad r-table entry `{item}`")))?;
            let s: usize = s.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad s in `{item}`")))?;
            let r: u64 = r.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad r in `{item}`")))?;
            if r < 1 {
                return Err(Error::InvalidParameter(format!("r must be positive in `{item}`")));
            }
            table.insert(s, r);
        }
        Ok(table)
    }
}

impl Default for RTable {
    /// `r(1) = 1`, `r(2) = 2`.
    fn default() -> Self {
        RTable::new([(1, 1), (2, 2)])
    }
}
