//! `key=value` arguments.

use std::collections::BTreeMap;
use std::str::FromStr;

use motivic_dt::rational::parse_rational;
use motivic_dt::Q;

use crate::output::CliError;

pub struct Params {
    values: BTreeMap<String, String>,
    allowed: &'static [&'static str],
}

impl Params {
    pub fn parse(args: &[String], allowed: &'static [&'static str]) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for a in args {
            let (k, v) = a
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("expected key=value, got {a:?}")))?;
            if !allowed.contains(&k) {
                return Err(CliError::usage(format!("unknown parameter {k:?}; expected one of {allowed:?}")));
            }
            if values.insert(k.to_string(), v.to_string()).is_some() {
                return Err(CliError::usage(format!("parameter {k:?} given twice")));
            }
        }
        Ok(Params { values, allowed })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        debug_assert!(self.allowed.contains(&key));
        self.values.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.raw(key)
            .map(|v| v.parse().map_err(|_| CliError::usage(format!("bad value for {key}: {v:?}"))))
            .transpose()
    }

    pub fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T, CliError> {
        Ok(self.get(key)?.unwrap_or(default))
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T, CliError> {
        self.get(key)?.ok_or_else(|| CliError::usage(format!("missing parameter {key}")))
    }

    pub fn list<T: FromStr>(&self, key: &str) -> Result<Option<Vec<T>>, CliError> {
        self.raw(key).map(|v| parse_list(key, v)).transpose()
    }

    pub fn rationals(&self, key: &str) -> Result<Option<Vec<Q>>, CliError> {
        self.raw(key)
            .map(|v| {
                v.split(',')
                    .map(|x| parse_rational(x).map_err(|_| CliError::usage(format!("bad rational in {key}: {x:?}"))))
                    .collect()
            })
            .transpose()
    }

    /// `a,b;c,d` as rows.
    pub fn rows(&self, key: &str) -> Result<Option<Vec<Vec<u32>>>, CliError> {
        self.raw(key).map(|v| v.split(';').map(|row| parse_list(key, row)).collect()).transpose()
    }
}

fn parse_list<T: FromStr>(key: &str, v: &str) -> Result<Vec<T>, CliError> {
    if v.trim().is_empty() {
        return Ok(Vec::new());
    }
    v.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::usage(format!("bad entry in {key}: {x:?}"))))
        .collect()
}
