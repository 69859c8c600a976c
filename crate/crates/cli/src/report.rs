//! Line-oriented `key: value` reports.

use std::collections::BTreeMap;
use std::fmt::{self, Display};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<String>,
}

impl Report {
    pub fn new(verb: &str) -> Self {
        Report {
            lines: vec![format!("verb: {verb}")],
        }
    }

    pub fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.lines.push(format!("{key}: {value}"));
        self
    }

    /// A heading followed by indented items.
    pub fn section<I, T>(&mut self, title: &str, items: I) -> &mut Self
    where
        I: IntoIterator<Item = T>,
        T: Display,
    {
        self.lines.push(format!("{title}:"));
        self.lines.extend(items.into_iter().map(|x| format!("  {x}")));
        self
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `2:8 4:8`, or `none`.
pub fn histogram<K: Display, V: Display>(h: &BTreeMap<K, V>) -> String {
    if h.is_empty() {
        return "none".into();
    }
    h.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

/// `{1,2,3}`.
pub fn set<T: Display>(xs: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
