use std::fmt;

/// Simple types over entities, truth values and events.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemType {
    Entity,
    Truth,
    Event,
    Arrow(Box<SemType>, Box<SemType>),
}

impl SemType {
    pub fn arrow(from: SemType, to: SemType) -> SemType {
        SemType::Arrow(Box::new(from), Box::new(to))
    }

    /// `e -> t`, the type of properties.
    pub fn property() -> SemType {
        SemType::arrow(SemType::Entity, SemType::Truth)
    }

    pub fn is_arrow(&self) -> bool {
        matches!(self, SemType::Arrow(..))
    }

    /// Argument and result type, if this is an arrow.
    pub fn split(&self) -> Option<(&SemType, &SemType)> {
        match self {
            SemType::Arrow(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Result type after applying to an argument of type `arg`.
    pub fn apply(&self, arg: &SemType) -> Option<&SemType> {
        match self.split() {
            Some((a, b)) if a == arg => Some(b),
            _ => None,
        }
    }
}

impl fmt::Display for SemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemType::Entity => f.write_str("e"),
            SemType::Truth => f.write_str("t"),
            SemType::Event => f.write_str("v"),
            SemType::Arrow(a, b) => {
                if a.is_arrow() {
                    write!(f, "({a})->{b}")
                } else {
                    write!(f, "{a}->{b}")
                }
            }
        }
    }
}
