//! Settings merged from an optional config file and the command line.
//!
//! The file is flat `key = value` lines (TOML or INI style both parse).
//! Section headers, blank lines and `#`/`;` comments are ignored, quotes
//! around values are stripped. Flags always win over the file.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::CliError;

pub const KEYS: &[&str] = &[
    "genus",
    "legs",
    "j",
    "degree",
    "operad",
    "no-loops",
    "no-simple-loops",
    "format",
    "out",
    "jobs",
    "opt-in-slow",
    "shape",
    "hook",
    "beta",
    "q",
    "i",
    "t",
    "brute-force",
    "gc2",
];

#[derive(Clone, Debug, Default)]
pub struct Settings {
    values: BTreeMap<String, String>,
}

fn normalize(key: &str) -> String {
    key.trim().replace('_', "-")
}

impl Settings {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut s = Settings::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') || line.starts_with('[') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", n + 1)))?;
            let v = v.trim().trim_matches('"').trim_matches('\'');
            s.set(k, v)
                .map_err(|e| CliError::Usage(format!("config line {}: {e}", n + 1)))?;
        }
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        Settings::parse(&text)
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> Result<(), String> {
        let key = normalize(key);
        if !KEYS.contains(&key.as_str()) {
            return Err(format!("unknown key {key:?}"));
        }
        self.values.insert(key, value.to_string());
        Ok(())
    }

    /// Overrides `key` when the flag was given.
    pub fn flag<T: ToString>(&mut self, key: &str, value: Option<T>) {
        if let Some(v) = value {
            self.set(key, v).expect("known flag");
        }
    }

    /// Boolean flags can only switch a setting on.
    pub fn switch(&mut self, key: &str, on: bool) {
        if on {
            self.set(key, "true").expect("known flag");
        }
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        self.raw(key)
            .map(|v| v.parse().map_err(|e| CliError::Usage(format!("--{key} {v:?}: {e}"))))
            .transpose()
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T, CliError>
    where
        T::Err: std::fmt::Display,
    {
        self.get(key)?
            .ok_or_else(|| CliError::Usage(format!("--{key} is required")))
    }

    pub fn enabled(&self, key: &str) -> Result<bool, CliError> {
        match self.raw(key) {
            None => Ok(false),
            Some("true" | "1" | "yes" | "on") => Ok(true),
            Some("false" | "0" | "no" | "off") => Ok(false),
            Some(v) => Err(CliError::Usage(format!("--{key}: expected a boolean, got {v:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_and_toml_lines() {
        let s = Settings::parse("# comment\n[run]\ngenus = 3\nlegs=0\noperad = \"hlie\"\nno_simple_loops = true\n")
            .unwrap();
        assert_eq!(s.require::<usize>("genus").unwrap(), 3);
        assert_eq!(s.require::<usize>("legs").unwrap(), 0);
        assert_eq!(s.raw("operad"), Some("hlie"));
        assert!(s.enabled("no-simple-loops").unwrap());
        assert!(!s.enabled("no-loops").unwrap());
    }

    #[test]
    fn rejects_unknown_keys_and_garbage() {
        assert!(matches!(Settings::parse("colour = red"), Err(CliError::Usage(_))));
        assert!(matches!(Settings::parse("genus 3"), Err(CliError::Usage(_))));
        let s = Settings::parse("genus = three").unwrap();
        assert!(s.require::<usize>("genus").is_err());
    }

    #[test]
    fn flags_override() {
        let mut s = Settings::parse("genus = 3").unwrap();
        s.flag("genus", Some(5));
        s.flag::<usize>("legs", None);
        assert_eq!(s.require::<usize>("genus").unwrap(), 5);
        assert!(s.get::<usize>("legs").unwrap().is_none());
    }
}
