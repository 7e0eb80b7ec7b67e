//! Covering file parsing: a canonical JSON format and a plain-text
//! fallback.
//!
//! JSON: `{"universe": ["1","2"], "covering": [["1"],["2"]]}`. Extra
//! keys are ignored, so reports that embed their input parse back.
//!
//! Text: one block per line, whitespace-separated labels, with an
//! optional leading `universe: a b c` line. Without that line the
//! universe is the union of the blocks in order of first appearance,
//! which makes a missing-cover error impossible by construction.

use covlat::{Covering, Universe};

#[derive(Debug)]
pub enum ParseError {
    Format(String),
    Domain(covlat::Error),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Format(msg) => write!(f, "{msg}"),
            ParseError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<covlat::Error> for ParseError {
    fn from(e: covlat::Error) -> Self {
        ParseError::Domain(e)
    }
}

pub fn parse_covering(text: &str) -> Result<Covering, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_json(text: &str) -> Result<Covering, ParseError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| ParseError::Format(format!("invalid JSON: {e}")))?;
    let labels = string_list(value.get("universe"), "universe")?;
    let universe = Universe::new(labels)?;
    let blocks_value = value
        .get("covering")
        .and_then(|v| v.as_array())
        .ok_or_else(|| ParseError::Format("missing \"covering\" array".into()))?;
    let mut blocks = Vec::with_capacity(blocks_value.len());
    for (i, entry) in blocks_value.iter().enumerate() {
        blocks.push(string_list(Some(entry), &format!("covering[{i}]"))?);
    }
    Ok(Covering::from_labels(&universe, &blocks)?)
}

fn string_list(value: Option<&serde_json::Value>, what: &str) -> Result<Vec<String>, ParseError> {
    value
        .and_then(|v| v.as_array())
        .ok_or_else(|| ParseError::Format(format!("missing \"{what}\" array")))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| ParseError::Format(format!("\"{what}\" must hold strings")))
        })
        .collect()
}

fn parse_text(text: &str) -> Result<Covering, ParseError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();

    let mut declared: Option<Vec<String>> = None;
    if let Some(first) = lines.peek() {
        if let Some(rest) = first.strip_prefix("universe:") {
            declared = Some(rest.split_whitespace().map(str::to_string).collect());
            lines.next();
        }
    }

    let blocks: Vec<Vec<String>> = lines
        .map(|line| line.split_whitespace().map(str::to_string).collect())
        .collect();
    if blocks.is_empty() {
        return Err(ParseError::Format("no blocks in input".into()));
    }

    let labels = match declared {
        Some(labels) => labels,
        None => {
            // Union of the blocks, in order of first appearance.
            let mut seen = Vec::new();
            for block in &blocks {
                for label in block {
                    if !seen.contains(label) {
                        seen.push(label.clone());
                    }
                }
            }
            seen
        }
    };
    let universe = Universe::new(labels)?;
    Ok(Covering::from_labels(&universe, &blocks)?)
}
