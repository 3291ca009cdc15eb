use serde::Serialize;

use crate::syntree::SynNode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FormKind {
    Full,
    Gapping,
    Stripping,
    #[serde(rename = "VPE")]
    Vpe,
    EventRef,
}

/// Whether a clause leaves an empty node in its syntax and whether it
/// introduces an anaphoric assumption in its semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FormProfile {
    pub kind: FormKind,
    pub empty_in_syntax: bool,
    pub anaphoric_in_semantics: bool,
}

impl FormProfile {
    pub fn of(kind: FormKind) -> FormProfile {
        let (empty_in_syntax, anaphoric_in_semantics) = match kind {
            FormKind::Full => (false, false),
            FormKind::Gapping | FormKind::Stripping => (true, false),
            FormKind::Vpe => (true, true),
            FormKind::EventRef => (false, true),
        };
        FormProfile { kind, empty_in_syntax, anaphoric_in_semantics }
    }

    /// The kind a pair of feature values picks out.
    pub fn from_features(empty_in_syntax: bool, anaphoric_in_semantics: bool, stripped: bool) -> FormKind {
        match (empty_in_syntax, anaphoric_in_semantics) {
            (false, false) => FormKind::Full,
            (true, false) if stripped => FormKind::Stripping,
            (true, false) => FormKind::Gapping,
            (true, true) => FormKind::Vpe,
            (false, true) => FormKind::EventRef,
        }
    }
}

/// Classifies a parsed tree. Anaphor ids must already be assigned, as
/// [`parse_tree`](super::parse_tree) does.
pub fn classify_form(tree: &SynNode) -> FormProfile {
    let kind = if tree.feats.stripped {
        FormKind::Stripping
    } else if tree.feats.gapped {
        FormKind::Gapping
    } else if tree.has_empty_anaphor() {
        FormKind::Vpe
    } else if tree.nodes().iter().any(|n| !n.empty && n.anaphor.is_some()) {
        FormKind::EventRef
    } else {
        FormKind::Full
    };
    FormProfile::of(kind)
}
