//! The markup reader against an independent bracket-matching oracle.

use nlom_core::{parse_markup, MarkupError, MarkupNode};
use proptest::prelude::*;

/// Flat view of a document: `(depth, tag, text)` per element in document
/// order, computed by scanning characters with an explicit stack.
fn oracle(doc: &str) -> Option<Vec<(usize, String, String)>> {
    let bytes = doc.as_bytes();
    let mut stack: Vec<usize> = Vec::new();
    let mut out: Vec<(usize, String, String)> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'<' {
            let close = *bytes.get(i + 1)? == b'/';
            let start = if close { i + 2 } else { i + 1 };
            let end = start + doc[start..].find('>')?;
            let name = &doc[start..end];
            if close {
                let open = stack.pop()?;
                if out[open].1 != name {
                    return None;
                }
            } else {
                out.push((stack.len() + 1, name.to_string(), String::new()));
                stack.push(out.len() - 1);
            }
            i = end + 1;
        } else {
            let next = doc[i..].find('<').map_or(bytes.len(), |n| i + n);
            if let Some(&top) = stack.last() {
                out[top].2.push_str(&doc[i..next]);
            }
            i = next;
        }
    }
    if !stack.is_empty() {
        return None;
    }
    for entry in &mut out {
        entry.2 = entry
            .2
            .trim()
            .replace("&lt;", "<")
            .replace("&gt;", ">")
            .replace("&amp;", "&");
    }
    Some(out)
}

fn flatten(node: &MarkupNode, depth: usize, out: &mut Vec<(usize, String, String)>) {
    for child in &node.children {
        out.push((depth + 1, child.tag.clone(), child.text.clone()));
        flatten(child, depth + 1, out);
    }
}

fn flat(root: &MarkupNode) -> Vec<(usize, String, String)> {
    let mut out = Vec::new();
    flatten(root, 0, &mut out);
    out
}

fn tag_name() -> impl Strategy<Value = String> {
    "[a-z_]{1,8}"
}

fn leaf_text() -> impl Strategy<Value = String> {
    prop_oneof![
        Just(String::new()),
        "[a-zA-Z0-9 ',.?!]{1,12}".prop_map(|s| s.trim().to_string()),
        Just("a < b & c > d".to_string()),
    ]
}

fn tree() -> impl Strategy<Value = MarkupNode> {
    let leaf = (tag_name(), leaf_text()).prop_map(|(t, x)| MarkupNode::leaf(t, x));
    leaf.prop_recursive(4, 32, 5, |inner| {
        (tag_name(), prop::collection::vec(inner, 0..5))
            .prop_map(|(t, children)| MarkupNode::with_children(t, children))
    })
}

fn document() -> impl Strategy<Value = MarkupNode> {
    prop::collection::vec(tree(), 0..4).prop_map(|children| MarkupNode::with_children("nlml", children))
}

#[test]
fn canonical_fragment() {
    let root = parse_markup("<mood>statement</mood><complexity>simple</complexity>").unwrap();
    assert_eq!(root.tag, "nlml");
    let tags: Vec<(&str, &str)> = root.children.iter().map(|c| (c.tag.as_str(), c.text.as_str())).collect();
    assert_eq!(tags, [("mood", "statement"), ("complexity", "simple")]);
}

#[test]
fn empty_document_has_no_children() {
    let root = parse_markup("").unwrap();
    assert_eq!(root.tag, "nlml");
    assert!(root.children.is_empty());
}

#[test]
fn depth_three_chain() {
    let root = parse_markup("<subject><noun><word>I</word></noun></subject>").unwrap();
    let word = root.resolve_path("nlml/subject/noun/word").unwrap();
    assert_eq!(word.text, "I");
    assert_eq!(flat(&root), oracle("<subject><noun><word>I</word></noun></subject>").unwrap());
}

#[test]
fn whitespace_between_siblings_is_dropped_and_leaf_text_trimmed() {
    let root = parse_markup("\n  <a>\n   <b>  x  y </b>\n  </a>\n").unwrap();
    assert_eq!(root.children[0].text, "");
    assert_eq!(root.children[0].children[0].text, "x  y");
}

#[test]
fn error_offsets_point_at_the_offending_tag() {
    let err = parse_markup("<a><b></a>").unwrap_err();
    assert!(matches!(err, MarkupError::UnbalancedTag { .. }));
    assert_eq!(err.offset(), 6);
    let err = parse_markup("<a><b>").unwrap_err();
    assert!(matches!(err, MarkupError::UnterminatedTag { .. }));
    let err = parse_markup("<a1></a1>").unwrap_err();
    assert!(matches!(err, MarkupError::IllegalTagName { offset: 0, .. }));
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn serialised_trees_parse_back_identically(doc in document()) {
        let text = doc.inner_markup();
        let parsed = parse_markup(&text).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(flat(&parsed), oracle(&text).unwrap());
    }

    #[test]
    fn truncated_documents_fail_cleanly(doc in document(), cut in 0usize..400) {
        let text = doc.inner_markup();
        let cut = cut.min(text.len());
        let prefix = &text[..cut];
        match parse_markup(prefix) {
            Ok(root) => prop_assert_eq!(Some(flat(&root)), oracle(prefix)),
            Err(e) => {
                // Every reader error carries an offset inside the input.
                prop_assert!(e.offset() <= prefix.len());
                prop_assert!(oracle(prefix).is_none() || e.code() == "IllegalTagName");
            }
        }
    }
}
