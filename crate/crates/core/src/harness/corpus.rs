use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use super::HarnessError;

/// A felicity mark. `#` and `??` both count as infelicitous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GoldLabel {
    Ok,
    Odd,
    Marginal,
}

impl GoldLabel {
    pub fn felicitous(self) -> bool {
        self == GoldLabel::Ok
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GoldLabel::Ok => "ok",
            GoldLabel::Odd => "#",
            GoldLabel::Marginal => "??",
        }
    }
}

impl<'de> Deserialize<'de> for GoldLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "ok" | "" => Ok(GoldLabel::Ok),
            "#" => Ok(GoldLabel::Odd),
            "??" => Ok(GoldLabel::Marginal),
            other => Err(serde::de::Error::custom(format!("unknown gold label '{other}'"))),
        }
    }
}

/// Key in a gold map for a link judged without a reading annotation.
pub const ANY_READING: &str = "*";

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Link {
    pub from: usize,
    pub to: usize,
    pub conj: String,
    /// Readings the gold map covers; `*` means no reading is singled out.
    pub readings: Vec<String>,
    pub gold: BTreeMap<String, GoldLabel>,
    /// Head predicate of the understood antecedent, where the discourse
    /// makes it explicit.
    #[serde(default)]
    pub intended: Option<String>,
}

impl Link {
    /// `None` for the unannotated reading.
    pub fn reading_filter(reading: &str) -> Option<&str> {
        (reading != ANY_READING).then_some(reading)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscourseItem {
    pub id: String,
    pub clauses: Vec<String>,
    pub links: Vec<Link>,
    #[serde(default)]
    pub note: Option<String>,
}

impl DiscourseItem {
    fn validate(&self) -> Result<(), String> {
        if self.clauses.is_empty() {
            return Err("no clauses".into());
        }
        for (i, l) in self.links.iter().enumerate() {
            if l.from >= l.to || l.to >= self.clauses.len() {
                return Err(format!("link {i} ({} -> {}) must point forward within the item", l.from, l.to));
            }
            if l.readings.is_empty() {
                return Err(format!("link {i} lists no readings"));
            }
            for r in &l.readings {
                if !l.gold.contains_key(r) {
                    return Err(format!("link {i} has no gold label for reading '{r}'"));
                }
            }
            if l.gold.len() != l.readings.len() {
                return Err(format!("link {i} has gold labels for unlisted readings"));
            }
        }
        Ok(())
    }
}

/// Reads one JSON item per line. Blank lines and `#` comment lines are
/// skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<DiscourseItem>, HarnessError> {
    let mut items: Vec<DiscourseItem> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| HarnessError::Corpus { line: i + 1, message };
        let item: DiscourseItem = serde_json::from_str(line).map_err(|e| err(e.to_string()))?;
        item.validate().map_err(|m| err(format!("item {}: {m}", item.id)))?;
        if items.iter().any(|x| x.id == item.id) {
            return Err(err(format!("duplicate item id '{}'", item.id)));
        }
        items.push(item);
    }
    Ok(items)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<DiscourseItem>, HarnessError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| HarnessError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_corpus(&text)
}
