//! JSON dump of a parsed sentence model.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sentence::Sentence;

pub const DUMP_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDump {
    pub version: String,
    pub source_file: Option<String>,
    pub sentence: Sentence,
    #[serde(default)]
    pub diagnostics: Vec<String>,
}

impl ModelDump {
    pub fn new(sentence: Sentence, source_file: Option<String>) -> Self {
        ModelDump {
            version: DUMP_VERSION.to_string(),
            source_file,
            sentence,
            diagnostics: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model dump is always serialisable")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::schema("dump", e.to_string()))
    }
}
