use std::fmt;
use std::str::FromStr;

use super::SyntreeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    S,
    NP,
    VP,
    V,
    AUX,
    AP,
    PP,
    P,
    N,
    DET,
    ADV,
}

impl Category {
    pub const ALL: [Category; 11] = [
        Category::S,
        Category::NP,
        Category::VP,
        Category::V,
        Category::AUX,
        Category::AP,
        Category::PP,
        Category::P,
        Category::N,
        Category::DET,
        Category::ADV,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::S => "S",
            Category::NP => "NP",
            Category::VP => "VP",
            Category::V => "V",
            Category::AUX => "AUX",
            Category::AP => "AP",
            Category::PP => "PP",
            Category::P => "P",
            Category::N => "N",
            Category::DET => "DET",
            Category::ADV => "ADV",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = SyntreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| SyntreeError::UnknownCategory(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Voice {
    Active,
    Passive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VForm {
    Finite,
    Base,
    PassiveParticiple,
    None,
}

impl Voice {
    pub fn as_str(self) -> &'static str {
        match self {
            Voice::Active => "active",
            Voice::Passive => "passive",
        }
    }
}

impl VForm {
    pub fn as_str(self) -> &'static str {
        match self {
            VForm::Finite => "finite",
            VForm::Base => "base",
            VForm::PassiveParticiple => "passive-participle",
            VForm::None => "none",
        }
    }
}

impl FromStr for Voice {
    type Err = SyntreeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "active" => Ok(Voice::Active),
            "passive" => Ok(Voice::Passive),
            _ => Err(SyntreeError::BadFeature(format!("voice={s}"))),
        }
    }
}

impl FromStr for VForm {
    type Err = SyntreeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "finite" => Ok(VForm::Finite),
            "base" => Ok(VForm::Base),
            "passive-participle" => Ok(VForm::PassiveParticiple),
            "none" => Ok(VForm::None),
            _ => Err(SyntreeError::BadFeature(format!("vform={s}"))),
        }
    }
}

/// Node features. `referent` names the entity a pronoun picks out.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Features {
    pub voice: Option<Voice>,
    pub vform: Option<VForm>,
    pub gapped: bool,
    pub stripped: bool,
    pub referent: Option<String>,
}

/// Assumption identifier shared by a trace and the constituent binding it,
/// or naming an anaphoric assumption.
pub type AssumptionId = usize;

/// A labeled syntax tree node. Preterminals carry a `word` and no children;
/// empty nodes carry neither.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SynNode {
    pub cat: Category,
    pub feats: Features,
    pub children: Vec<SynNode>,
    pub word: Option<String>,
    pub empty: bool,
    /// Set on the empty node left behind by fronting or copying.
    pub trace: Option<AssumptionId>,
    /// Set on a fronted constituent or remnant that discharges a trace.
    pub binds: Option<AssumptionId>,
    /// Set on empty VPs and event pronouns.
    pub anaphor: Option<AssumptionId>,
}

impl SynNode {
    pub fn new(cat: Category, children: Vec<SynNode>) -> SynNode {
        SynNode {
            cat,
            feats: Features::default(),
            children,
            word: None,
            empty: false,
            trace: None,
            binds: None,
            anaphor: None,
        }
    }

    pub fn leaf(cat: Category, word: impl Into<String>) -> SynNode {
        SynNode { word: Some(word.into()), ..SynNode::new(cat, Vec::new()) }
    }

    pub fn empty(cat: Category) -> SynNode {
        SynNode { empty: true, ..SynNode::new(cat, Vec::new()) }
    }

    pub fn is_leaf(&self) -> bool {
        self.word.is_some()
    }

    pub fn is_gapped(&self) -> bool {
        self.feats.gapped || self.feats.stripped
    }

    pub fn is_passive(&self) -> bool {
        self.feats.voice == Some(Voice::Passive)
    }

    /// Pre-order iterator over the subtree.
    pub fn nodes(&self) -> Vec<&SynNode> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }

    /// Words of the subtree, left to right.
    pub fn words(&self) -> Vec<&str> {
        self.nodes().into_iter().filter_map(|n| n.word.as_deref()).collect()
    }

    pub fn get(&self, path: &[usize]) -> Option<&SynNode> {
        path.iter().try_fold(self, |n, &i| n.children.get(i))
    }

    pub fn get_mut(&mut self, path: &[usize]) -> Option<&mut SynNode> {
        path.iter().try_fold(self, |n, &i| n.children.get_mut(i))
    }

    /// Path to the first node (pre-order) satisfying `pred`.
    pub fn find_path(&self, pred: &impl Fn(&SynNode) -> bool) -> Option<Vec<usize>> {
        if pred(self) {
            return Some(Vec::new());
        }
        self.children.iter().enumerate().find_map(|(i, c)| {
            c.find_path(pred).map(|mut p| {
                p.insert(0, i);
                p
            })
        })
    }

    pub fn contains_trace(&self) -> bool {
        self.nodes().iter().any(|n| n.trace.is_some())
    }

    pub fn has_empty_anaphor(&self) -> bool {
        self.nodes().iter().any(|n| n.empty && n.anaphor.is_some())
    }

    /// The first VP reachable through S nodes: the clause's main VP.
    pub fn main_vp(&self) -> Option<&SynNode> {
        match self.cat {
            Category::VP => Some(self),
            Category::S => self
                .children
                .iter()
                .find(|c| c.cat == Category::VP)
                .or_else(|| self.children.iter().filter(|c| c.cat == Category::S).find_map(|c| c.main_vp())),
            _ => None,
        }
    }

    /// First preterminal child of the given category.
    pub fn child_leaf(&self, cat: Category) -> Option<&SynNode> {
        self.children.iter().find(|c| c.cat == cat && c.is_leaf())
    }
}
