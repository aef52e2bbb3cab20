//! Plain-text `key = value` files: one pair per line, `#` starts a comment.
//!
//! Keys are dotted (`proposed.unit_delay_s`, `fpni.r_closed`); each consumer
//! reads the keys under its own prefix and rejects ones it does not know.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct KeyValues {
    source: String,
    entries: BTreeMap<String, (String, usize)>,
}

impl KeyValues {
    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Config(format!("{source}:{line_no}: expected `key = value`")));
            };
            let (key, value) = (key.trim(), value.trim());
            if key.is_empty() {
                return Err(Error::Config(format!("{source}:{line_no}: empty key")));
            }
            if entries.insert(key.to_string(), (value.to_string(), line_no)).is_some() {
                return Err(Error::Config(format!("{source}:{line_no}: duplicate key `{key}`")));
            }
        }
        Ok(KeyValues { source: source.to_string(), entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn contains(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|(v, _)| v.as_str())
    }

    /// Parses `key` if present.
    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        let Some((value, line)) = self.entries.get(key) else {
            return Ok(None);
        };
        value.parse().map(Some).map_err(|_| {
            Error::Config(format!("{}:{line}: cannot parse `{value}` for `{key}`", self.source))
        })
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T> {
        self.get(key)?
            .ok_or_else(|| Error::Config(format!("{}: missing key `{key}`", self.source)))
    }

    /// Fails on any key under `prefix.` that is not listed in `known`.
    pub fn check_known(&self, prefix: &str, known: &[&str]) -> Result<()> {
        let dotted = format!("{prefix}.");
        for (key, (_, line)) in self.entries.range(dotted.clone()..) {
            let Some(field) = key.strip_prefix(&dotted) else {
                break;
            };
            if !known.contains(&field) {
                return Err(Error::Config(format!("{}:{line}: unknown key `{key}`", self.source)));
            }
        }
        Ok(())
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs_and_comments() {
        let kv = KeyValues::parse("# header\na = 1\n\nb.c=2.5 # trailing\n", "t").unwrap();
        assert_eq!(kv.get::<u32>("a").unwrap(), Some(1));
        assert_eq!(kv.get::<f64>("b.c").unwrap(), Some(2.5));
        assert_eq!(kv.get::<f64>("zz").unwrap(), None);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(KeyValues::parse("novalue\n", "t").is_err());
        assert!(KeyValues::parse("= 3\n", "t").is_err());
        assert!(KeyValues::parse("a = 1\na = 2\n", "t").is_err());
        let kv = KeyValues::parse("a = x\n", "t").unwrap();
        assert!(kv.get::<u32>("a").is_err());
        assert!(kv.require::<u32>("b").is_err());
    }

    #[test]
    fn unknown_keys_under_prefix() {
        let kv = KeyValues::parse("p.a = 1\np.typo = 2\nq.x = 3\n", "t").unwrap();
        assert!(kv.check_known("p", &["a", "typo"]).is_ok());
        assert!(kv.check_known("p", &["a"]).is_err());
        assert!(kv.check_known("q", &["x"]).is_ok());
    }
}
