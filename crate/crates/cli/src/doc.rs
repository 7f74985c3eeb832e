//! The declaration document: one JSON object whose sections are maps from
//! names to declarations, plus an ordered command list.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default)]
    pub carriers: BTreeMap<String, CarrierDecl>,
    #[serde(default)]
    pub relations: BTreeMap<String, RelationDecl>,
    #[serde(default)]
    pub dep_relations: BTreeMap<String, DepRelDecl>,
    #[serde(default)]
    pub functions: BTreeMap<String, FunctionDecl>,
    #[serde(default)]
    pub dep_functions: BTreeMap<String, DepFunDecl>,
    /// Functor expressions such as `list(2)` or `product(2)[option,const(B)]`.
    #[serde(default)]
    pub functors: BTreeMap<String, String>,
    #[serde(default)]
    pub equivalences: BTreeMap<String, EquivDecl>,
    #[serde(default)]
    pub quotients: BTreeMap<String, QuotientDecl>,
    #[serde(default)]
    pub commands: Vec<Command>,
}

/// Listed elements in the value grammar, or a function space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CarrierDecl {
    Elements(Vec<String>),
    Fun(FunCarrier),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunCarrier {
    pub fun: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationDecl {
    Pairs(PairsRel),
    Restricted(RestrictedRel),
    Eq(EqRel),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairsRel {
    pub between: [String; 2],
    pub pairs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RestrictedRel {
    pub restricted_eq: String,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EqRel {
    pub eq: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DepRelDecl {
    pub params: [String; 2],
    pub base: [String; 2],
    #[serde(default)]
    pub cases: Vec<DepRelCase>,
    pub default: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DepRelCase {
    pub at: [String; 2],
    pub rel: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionDecl {
    pub dom: String,
    pub cod: String,
    pub table: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DepFunDecl {
    pub params: [String; 2],
    pub dom: String,
    pub cod: String,
    #[serde(default)]
    pub cases: Vec<DepFunCase>,
    pub default: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DepFunCase {
    pub at: [String; 2],
    pub fun: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivDecl {
    #[serde(rename = "L")]
    pub left: String,
    #[serde(rename = "R")]
    pub right: String,
    pub l: String,
    pub r: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientDecl {
    #[serde(rename = "T")]
    pub t: String,
    pub abs: String,
    pub rep: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "cmd", rename_all = "lowercase", deny_unknown_fields)]
pub enum Command {
    /// Class check of a declared equivalence (default `per_equiv`).
    Check {
        equivalence: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        class: Option<String>,
    },
    Transport {
        term: String,
        #[serde(rename = "L")]
        left: String,
        #[serde(rename = "R")]
        right: String,
    },
    Verify(VerifyArgs),
    Counterexample {
        claim: String,
        #[serde(default = "nothing")]
        dropped: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_size: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        budget: Option<usize>,
    },
}

fn nothing() -> String {
    pgal_transport::NOTHING.to_string()
}

/// Arguments of `verify`; which ones are required depends on `theorem`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyArgs {
    pub theorem: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalences: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotients: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functor: Option<String>,
    #[serde(default, rename = "L2", skip_serializing_if = "Option::is_none")]
    pub left2: Option<String>,
    #[serde(default, rename = "R2", skip_serializing_if = "Option::is_none")]
    pub right2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<String>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Transport { .. } => "transport",
            Command::Verify(_) => "verify",
            Command::Counterexample { .. } => "counterexample",
        }
    }
}

/// Parses a document; syntax and schema errors carry line and column.
pub fn parse_document(text: &str) -> Result<Document> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_object_is_an_empty_document() {
        assert_eq!(parse_document("{}").unwrap(), Document::default());
    }

    #[test]
    fn errors_have_positions() {
        match parse_document("{\n  \"carriers\": 3\n}") {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_document(r#"{"commands":[{"cmd":"check","equivalence":"E","extra":1}]}"#).is_err());
        assert!(parse_document(r#"{"bogus":{}}"#).is_err());
    }

    #[test]
    fn relation_forms() {
        let d = parse_document(
            r#"{"relations":{
                "a":{"between":["X","Y"],"pairs":[["0","1"]]},
                "b":{"restricted_eq":"X","members":["0"]},
                "c":{"eq":"X"}}}"#,
        )
        .unwrap();
        assert!(matches!(d.relations["a"], RelationDecl::Pairs(_)));
        assert!(matches!(d.relations["b"], RelationDecl::Restricted(_)));
        assert!(matches!(d.relations["c"], RelationDecl::Eq(_)));
    }
}
