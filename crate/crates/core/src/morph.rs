//! Small English verb morphology: do-support, agreement and participles.
//!
//! Only what the realiser needs. Irregular verbs come from a fixed table;
//! anything else follows the regular spelling rules.

use crate::vocab::{Number, Person};

pub const QUERY_WORDS: &[&str] = &[
    "who", "whom", "whose", "what", "which", "where", "when", "why", "how",
];

pub const QUERY_ADVERBS: &[&str] = &["where", "when", "why", "how"];

/// Determiners that turn a noun into a query ("what books", "how many apples").
pub const QUERY_DETERMINERS: &[&str] = &["what", "which", "whose", "how many", "how much"];

pub const MODALS: &[&str] = &[
    "will", "would", "shall", "should", "can", "could", "may", "might", "must",
];

const BE_FINITE: &[&str] = &["am", "is", "are", "was", "were"];
const HAVE_FORMS: &[&str] = &["have", "has", "had"];
const DO_FORMS: &[&str] = &["do", "does", "did"];

/// lemma, past, past participle
const IRREGULAR: &[(&str, &str, &str)] = &[
    ("be", "was", "been"),
    ("have", "had", "had"),
    ("do", "did", "done"),
    ("go", "went", "gone"),
    ("come", "came", "come"),
    ("become", "became", "become"),
    ("meet", "met", "met"),
    ("see", "saw", "seen"),
    ("get", "got", "got"),
    ("make", "made", "made"),
    ("take", "took", "taken"),
    ("give", "gave", "given"),
    ("know", "knew", "known"),
    ("think", "thought", "thought"),
    ("say", "said", "said"),
    ("tell", "told", "told"),
    ("find", "found", "found"),
    ("leave", "left", "left"),
    ("feel", "felt", "felt"),
    ("bring", "brought", "brought"),
    ("buy", "bought", "bought"),
    ("keep", "kept", "kept"),
    ("begin", "began", "begun"),
    ("run", "ran", "run"),
    ("write", "wrote", "written"),
    ("read", "read", "read"),
    ("eat", "ate", "eaten"),
    ("drink", "drank", "drunk"),
    ("sing", "sang", "sung"),
    ("swim", "swam", "swum"),
    ("speak", "spoke", "spoken"),
    ("stand", "stood", "stood"),
    ("understand", "understood", "understood"),
    ("sit", "sat", "sat"),
    ("put", "put", "put"),
    ("let", "let", "let"),
    ("win", "won", "won"),
    ("teach", "taught", "taught"),
    ("catch", "caught", "caught"),
    ("sleep", "slept", "slept"),
    ("send", "sent", "sent"),
    ("spend", "spent", "spent"),
    ("build", "built", "built"),
    ("hear", "heard", "heard"),
    ("hold", "held", "held"),
    ("lose", "lost", "lost"),
    ("pay", "paid", "paid"),
    ("drive", "drove", "driven"),
    ("fly", "flew", "flown"),
    ("grow", "grew", "grown"),
    ("break", "broke", "broken"),
    ("choose", "chose", "chosen"),
    ("forget", "forgot", "forgotten"),
    ("wear", "wore", "worn"),
    ("rise", "rose", "risen"),
];

fn lower(word: &str) -> String {
    word.to_lowercase()
}

fn in_list(word: &str, list: &[&str]) -> bool {
    let w = lower(word);
    list.contains(&w.as_str())
}

/// Reapplies an initial capital from `model` to `word`.
pub fn match_case(model: &str, word: &str) -> String {
    if model.chars().next().is_some_and(char::is_uppercase) {
        capitalize(word)
    } else {
        word.to_string()
    }
}

pub fn capitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

pub fn decapitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(first) => first.to_lowercase().chain(chars).collect(),
        None => String::new(),
    }
}

pub fn is_query_word(word: &str) -> bool {
    in_list(word, QUERY_WORDS)
}

pub fn is_query_adverb(word: &str) -> bool {
    in_list(word, QUERY_ADVERBS)
}

pub fn is_query_determiner(word: &str) -> bool {
    in_list(word, QUERY_DETERMINERS)
}

pub fn is_modal(word: &str) -> bool {
    in_list(word, MODALS)
}

pub fn is_be_form(word: &str) -> bool {
    in_list(word, BE_FINITE) || in_list(word, &["be", "been", "being"])
}

pub fn is_negation(token: &str) -> bool {
    let t = lower(token);
    t == "not" || t.ends_with("n't")
}

/// Whether the first of `words` is an auxiliary that can front a question
/// or carry a negation. `have`/`do` forms only count when another verb word
/// follows ("has gone", but "has a book" uses do-support).
pub fn heads_with_auxiliary(words: &[String]) -> bool {
    let Some(first) = words.first() else {
        return false;
    };
    let w = lower(first);
    if is_modal(&w) || BE_FINITE.contains(&w.as_str()) || w.ends_with("n't") {
        return true;
    }
    (HAVE_FORMS.contains(&w.as_str()) || DO_FORMS.contains(&w.as_str())) && words.len() > 1
}

/// A recovered base form. `guessed` is set when the word looked like an
/// irregular past form that is not in the table and was passed through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseForm {
    pub lemma: String,
    pub guessed: bool,
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// Recovers the base form of an inflected verb. `past` says whether the
/// word is known to be a past form.
pub fn base_form(word: &str, past: bool) -> BaseForm {
    let w = lower(word);
    let known = |lemma: &str| BaseForm {
        lemma: match_case(word, lemma),
        guessed: false,
    };
    match w.as_str() {
        "am" | "is" | "are" | "was" | "were" | "been" | "being" => return known("be"),
        "has" => return known("have"),
        "does" => return known("do"),
        "goes" => return known("go"),
        _ => {}
    }
    if is_modal(&w) {
        return known(&w);
    }
    if let Some((lemma, _, _)) = IRREGULAR
        .iter()
        .find(|(lemma, p, pp)| *lemma == w || *p == w || *pp == w)
    {
        return known(lemma);
    }
    let chars: Vec<char> = w.chars().collect();
    let n = chars.len();
    if let Some(stem) = w.strip_suffix("ied").filter(|s| !s.is_empty()) {
        return known(&format!("{stem}y"));
    }
    if let Some(stem) = w.strip_suffix("ed").filter(|s| s.len() >= 2) {
        let s: Vec<char> = stem.chars().collect();
        let m = s.len();
        if m >= 2 && s[m - 1] == s[m - 2] && !is_vowel(s[m - 1]) && !"lsfz".contains(s[m - 1]) {
            return known(&stem[..stem.len() - 1]);
        }
        if "vcuz".contains(s[m - 1]) {
            return known(&format!("{stem}e"));
        }
        return known(stem);
    }
    if !past {
        if n > 4 && w.ends_with("ies") {
            return known(&format!("{}y", &w[..w.len() - 3]));
        }
        for suffix in ["sses", "shes", "ches", "xes", "zes", "oes"] {
            if w.ends_with(suffix) {
                return known(&w[..w.len() - 2]);
            }
        }
        if n > 2 && w.ends_with('s') && !w.ends_with("ss") && !w.ends_with("us") {
            return known(&w[..w.len() - 1]);
        }
        return known(&w);
    }
    BaseForm {
        lemma: word.to_string(),
        guessed: true,
    }
}

pub fn third_singular(lemma: &str) -> String {
    let l = lower(lemma);
    let out = match l.as_str() {
        "be" => "is".to_string(),
        "have" => "has".to_string(),
        "do" => "does".to_string(),
        "go" => "goes".to_string(),
        _ if is_modal(&l) => l.clone(),
        _ => {
            let chars: Vec<char> = l.chars().collect();
            let n = chars.len();
            if ["s", "x", "z", "ch", "sh", "o"].iter().any(|s| l.ends_with(s)) {
                format!("{l}es")
            } else if n >= 2 && chars[n - 1] == 'y' && !is_vowel(chars[n - 2]) {
                format!("{}ies", &l[..l.len() - 1])
            } else {
                format!("{l}s")
            }
        }
    };
    match_case(lemma, &out)
}

/// Present-tense form agreeing with a subject.
pub fn present_form(lemma: &str, person: Person, number: Number) -> String {
    if lower(lemma) == "be" {
        return match_case(lemma, be_present(person, number));
    }
    if is_modal(lemma) {
        return lemma.to_string();
    }
    match (person, number) {
        (Person::Third, Number::Sing) => third_singular(lemma),
        _ => lemma.to_string(),
    }
}

pub fn be_present(person: Person, number: Number) -> &'static str {
    match (person, number) {
        (Person::First, Number::Sing) => "am",
        (Person::Third, Number::Sing) => "is",
        _ => "are",
    }
}

pub fn be_past(person: Person, number: Number) -> &'static str {
    match (person, number) {
        (Person::First, Number::Sing) | (Person::Third, Number::Sing) => "was",
        _ => "were",
    }
}

pub fn have_present(person: Person, number: Number) -> &'static str {
    match (person, number) {
        (Person::Third, Number::Sing) => "has",
        _ => "have",
    }
}

/// The do-support auxiliary for a subject and tense.
pub fn do_form(person: Person, number: Number, past: bool) -> &'static str {
    if past {
        return "did";
    }
    match (person, number) {
        (Person::Third, Number::Sing) => "does",
        _ => "do",
    }
}

fn regular_ed(l: &str) -> String {
    let chars: Vec<char> = l.chars().collect();
    let n = chars.len();
    if l.ends_with('e') {
        format!("{l}d")
    } else if n >= 2 && chars[n - 1] == 'y' && !is_vowel(chars[n - 2]) {
        format!("{}ied", &l[..l.len() - 1])
    } else if is_short_cvc(&chars) {
        format!("{l}{}ed", chars[n - 1])
    } else {
        format!("{l}ed")
    }
}

/// One-syllable word ending consonant, vowel, consonant ("stop", "plan"),
/// whose final consonant doubles before a suffix.
fn is_short_cvc(chars: &[char]) -> bool {
    let n = chars.len();
    if n < 3 {
        return false;
    }
    let vowel_groups = chars
        .iter()
        .enumerate()
        .filter(|(i, c)| is_vowel(**c) && (*i == 0 || !is_vowel(chars[i - 1])))
        .count();
    vowel_groups == 1
        && !is_vowel(chars[n - 3])
        && is_vowel(chars[n - 2])
        && !is_vowel(chars[n - 1])
        && !"wxy".contains(chars[n - 1])
}

pub fn past_form(lemma: &str) -> String {
    let l = lower(lemma);
    let out = IRREGULAR
        .iter()
        .find(|(base, _, _)| *base == l)
        .map(|(_, past, _)| past.to_string())
        .unwrap_or_else(|| regular_ed(&l));
    match_case(lemma, &out)
}

pub fn past_participle(lemma: &str) -> String {
    let l = lower(lemma);
    let out = IRREGULAR
        .iter()
        .find(|(base, _, _)| *base == l)
        .map(|(_, _, pp)| pp.to_string())
        .unwrap_or_else(|| regular_ed(&l));
    match_case(lemma, &out)
}

pub fn present_participle(lemma: &str) -> String {
    let l = lower(lemma);
    let chars: Vec<char> = l.chars().collect();
    let n = chars.len();
    let out = if l == "be" || l == "see" || l.ends_with("ee") || l.ends_with("ye") || l.ends_with("oe") {
        format!("{l}ing")
    } else if l.ends_with("ie") {
        format!("{}ying", &l[..l.len() - 2])
    } else if l.ends_with('e') && n > 2 {
        format!("{}ing", &l[..l.len() - 1])
    } else if is_short_cvc(&chars) {
        format!("{l}{}ing", chars[n - 1])
    } else {
        format!("{l}ing")
    };
    match_case(lemma, &out)
}

/// Nominative form of an accusative personal pronoun.
pub fn nominative_pronoun(word: &str) -> Option<&'static str> {
    Some(match lower(word).as_str() {
        "me" => "I",
        "him" => "he",
        "her" => "she",
        "us" => "we",
        "them" => "they",
        _ => return None,
    })
}
