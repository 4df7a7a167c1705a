//! Reader for the NLML element syntax.
//!
//! NLML is a restricted XML: elements and character data only. Top-level
//! siblings are wrapped under a synthetic root tagged [`ROOT_TAG`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const ROOT_TAG: &str = "nlml";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkupNode {
    pub tag: String,
    /// Character data directly inside this element, trimmed.
    pub text: String,
    pub children: Vec<MarkupNode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkupError {
    #[error("unbalanced tag at byte {offset}: found </{found}>{}", match .expected {
        Some(open) => format!(" while <{open}> is open"),
        None => " with no open element".to_string(),
    })]
    UnbalancedTag {
        offset: usize,
        expected: Option<String>,
        found: String,
    },
    #[error("unterminated {} at byte {offset}", match .tag {
        Some(tag) => format!("element <{tag}>"),
        None => "tag".to_string(),
    })]
    UnterminatedTag { offset: usize, tag: Option<String> },
    #[error("illegal tag name {name:?} at byte {offset}")]
    IllegalTagName { offset: usize, name: String },
}

impl MarkupError {
    /// Stable name of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            MarkupError::UnbalancedTag { .. } => "UnbalancedTag",
            MarkupError::UnterminatedTag { .. } => "UnterminatedTag",
            MarkupError::IllegalTagName { .. } => "IllegalTagName",
        }
    }

    pub fn offset(&self) -> usize {
        match self {
            MarkupError::UnbalancedTag { offset, .. }
            | MarkupError::UnterminatedTag { offset, .. }
            | MarkupError::IllegalTagName { offset, .. } => *offset,
        }
    }
}

impl MarkupNode {
    pub fn new(tag: impl Into<String>) -> Self {
        MarkupNode {
            tag: tag.into(),
            text: String::new(),
            children: Vec::new(),
        }
    }

    pub fn leaf(tag: impl Into<String>, text: impl Into<String>) -> Self {
        MarkupNode {
            tag: tag.into(),
            text: text.into(),
            children: Vec::new(),
        }
    }

    pub fn with_children(tag: impl Into<String>, children: Vec<MarkupNode>) -> Self {
        MarkupNode {
            tag: tag.into(),
            text: String::new(),
            children,
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// First child with the given tag.
    pub fn child(&self, tag: &str) -> Option<&MarkupNode> {
        self.children.iter().find(|c| c.tag == tag)
    }

    pub fn children_named<'a>(&'a self, tag: &'a str) -> impl Iterator<Item = &'a MarkupNode> + 'a {
        self.children.iter().filter(move |c| c.tag == tag)
    }

    /// Text of the first child with the given tag, if that text is non-empty.
    pub fn child_text(&self, tag: &str) -> Option<&str> {
        self.child(tag)
            .map(|c| c.text.as_str())
            .filter(|t| !t.is_empty())
    }

    /// Serialises the element itself: `<tag>text…children</tag>`.
    pub fn to_markup(&self) -> String {
        let mut out = String::new();
        self.write_element(&mut out);
        out
    }

    /// Serialises the content of the element without its own tags. For the
    /// synthetic root this is the document text.
    pub fn inner_markup(&self) -> String {
        let mut out = String::new();
        self.write_inner(&mut out);
        out
    }

    fn write_element(&self, out: &mut String) {
        out.push('<');
        out.push_str(&self.tag);
        out.push('>');
        self.write_inner(out);
        out.push_str("</");
        out.push_str(&self.tag);
        out.push('>');
    }

    fn write_inner(&self, out: &mut String) {
        escape_into(&self.text, out);
        for child in &self.children {
            child.write_element(out);
        }
    }

    /// Slash-joined path lookup as produced by the validator, e.g.
    /// `nlml/subject/noun[1]/word`.
    pub fn resolve_path<'a>(&'a self, path: &'a str) -> Option<&'a MarkupNode> {
        let mut segments = path.split('/');
        if segments.next()? != self.tag {
            return None;
        }
        let mut node = self;
        for segment in segments {
            let (tag, index) = match segment.split_once('[') {
                Some((tag, rest)) => (tag, rest.strip_suffix(']')?.parse::<usize>().ok()?),
                None => (segment, 0),
            };
            node = node.children_named(tag).nth(index)?;
        }
        Some(node)
    }

    /// Depth-first iterator over this node and all descendants.
    pub fn descendants(&self) -> Vec<&MarkupNode> {
        let mut out = vec![self];
        let mut i = 0;
        while i < out.len() {
            let node = out[i];
            out.extend(node.children.iter());
            i += 1;
        }
        out
    }
}

fn escape_into(text: &str, out: &mut String) {
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            c => out.push(c),
        }
    }
}

fn unescape(text: &str) -> String {
    if !text.contains('&') {
        return text.to_string();
    }
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(pos) = rest.find('&') {
        out.push_str(&rest[..pos]);
        rest = &rest[pos..];
        let (replacement, len) = if rest.starts_with("&lt;") {
            ('<', 4)
        } else if rest.starts_with("&gt;") {
            ('>', 4)
        } else if rest.starts_with("&amp;") {
            ('&', 5)
        } else {
            ('&', 1)
        };
        out.push(replacement);
        rest = &rest[len..];
    }
    out.push_str(rest);
    out
}

fn is_legal_tag_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_lowercase() || b == b'_')
}

struct Open {
    node: MarkupNode,
    offset: usize,
    text: String,
}

impl Open {
    fn new(tag: &str, offset: usize) -> Self {
        Open {
            node: MarkupNode::new(tag),
            offset,
            text: String::new(),
        }
    }

    fn push_text(&mut self, raw: &str) {
        if raw.trim().is_empty() {
            return;
        }
        self.text.push_str(&unescape(raw));
    }

    fn finish(mut self) -> MarkupNode {
        self.node.text = self.text.trim().to_string();
        self.node
    }
}

/// Parses NLML text into a tree rooted at a synthetic `nlml` node.
pub fn parse_markup(text: &str) -> Result<MarkupNode, MarkupError> {
    let mut stack = vec![Open::new(ROOT_TAG, 0)];
    let mut pos = 0;

    while let Some(rel) = text[pos..].find('<') {
        let lt = pos + rel;
        stack
            .last_mut()
            .expect("root stays on the stack")
            .push_text(&text[pos..lt]);

        let gt = match text[lt..].find('>') {
            Some(rel) => lt + rel,
            None => {
                return Err(MarkupError::UnterminatedTag {
                    offset: lt,
                    tag: None,
                })
            }
        };
        let inner = &text[lt + 1..gt];
        if let Some(name) = inner.strip_prefix('/') {
            if !is_legal_tag_name(name) {
                return Err(MarkupError::IllegalTagName {
                    offset: lt,
                    name: name.to_string(),
                });
            }
            if stack.len() == 1 {
                return Err(MarkupError::UnbalancedTag {
                    offset: lt,
                    expected: None,
                    found: name.to_string(),
                });
            }
            let open = stack.pop().expect("checked length");
            if open.node.tag != name {
                return Err(MarkupError::UnbalancedTag {
                    offset: lt,
                    expected: Some(open.node.tag),
                    found: name.to_string(),
                });
            }
            let node = open.finish();
            stack
                .last_mut()
                .expect("root stays on the stack")
                .node
                .children
                .push(node);
        } else {
            if !is_legal_tag_name(inner) {
                return Err(MarkupError::IllegalTagName {
                    offset: lt,
                    name: inner.to_string(),
                });
            }
            stack.push(Open::new(inner, lt));
        }
        pos = gt + 1;
    }

    let last = stack.last_mut().expect("root stays on the stack");
    last.push_text(&text[pos..]);
    if stack.len() > 1 {
        let open = stack.pop().expect("checked length");
        return Err(MarkupError::UnterminatedTag {
            offset: open.offset,
            tag: Some(open.node.tag),
        });
    }
    Ok(stack.pop().expect("root").finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_the_mood_fragment() {
        let root = parse_markup("<mood>statement</mood><complexity>simple</complexity>").unwrap();
        assert_eq!(root.tag, "nlml");
        assert_eq!(
            root.children,
            vec![
                MarkupNode::leaf("mood", "statement"),
                MarkupNode::leaf("complexity", "simple")
            ]
        );
    }

    #[test]
    fn empty_document_has_no_children() {
        let root = parse_markup("").unwrap();
        assert_eq!(root, MarkupNode::new("nlml"));
    }

    #[test]
    fn whitespace_between_siblings_is_dropped_and_leaf_text_trimmed() {
        let root = parse_markup("\n  <a>\n   <b>  two  words </b>\n  </a>\n").unwrap();
        let a = &root.children[0];
        assert_eq!(a.text, "");
        assert_eq!(a.children[0].text, "two  words");
    }

    #[test]
    fn entities_are_decoded_and_reencoded() {
        let root = parse_markup("<word>a &lt;b&gt; &amp; c &nbsp;</word>").unwrap();
        assert_eq!(root.children[0].text, "a <b> & c &nbsp;");
        let again = parse_markup(&root.inner_markup()).unwrap();
        assert_eq!(again, root);
    }

    #[test]
    fn error_offsets() {
        assert_eq!(
            parse_markup("<a></b>"),
            Err(MarkupError::UnbalancedTag {
                offset: 3,
                expected: Some("a".into()),
                found: "b".into()
            })
        );
        assert_eq!(
            parse_markup("x</a>"),
            Err(MarkupError::UnbalancedTag {
                offset: 1,
                expected: None,
                found: "a".into()
            })
        );
        assert_eq!(
            parse_markup("<a><b>x</b>"),
            Err(MarkupError::UnterminatedTag {
                offset: 0,
                tag: Some("a".into())
            })
        );
        assert_eq!(
            parse_markup("<a>x</a"),
            Err(MarkupError::UnterminatedTag {
                offset: 4,
                tag: None
            })
        );
        assert_eq!(
            parse_markup("<a kind=\"x\"></a>"),
            Err(MarkupError::IllegalTagName {
                offset: 0,
                name: "a kind=\"x\"".into()
            })
        );
        assert!(matches!(
            parse_markup("<Mood>x</Mood>"),
            Err(MarkupError::IllegalTagName { .. })
        ));
        assert!(matches!(
            parse_markup("<!-- c --><a></a>"),
            Err(MarkupError::IllegalTagName { offset: 0, .. })
        ));
        assert!(matches!(
            parse_markup("<a/>"),
            Err(MarkupError::IllegalTagName { .. })
        ));
    }

    #[test]
    fn path_resolution() {
        let root = parse_markup("<s><n>a</n><n>b</n></s>").unwrap();
        assert_eq!(root.resolve_path("nlml/s/n[1]").unwrap().text, "b");
        assert_eq!(root.resolve_path("nlml/s/n").unwrap().text, "a");
        assert!(root.resolve_path("nlml/s/n[2]").is_none());
        assert!(root.resolve_path("other/s").is_none());
        assert_eq!(root.resolve_path("nlml").unwrap().tag, "nlml");
    }
}
