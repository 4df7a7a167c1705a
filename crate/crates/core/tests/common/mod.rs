#![allow(dead_code)]

pub mod synth;

use std::path::PathBuf;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// `(name, document)` for every valid corpus fixture, in name order.
pub fn corpus() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "nlml"))
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            (name, std::fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    out
}

/// `(name, document, expected code)` for every malformed fixture.
pub fn malformed() -> Vec<(String, String, String)> {
    let dir = corpus_dir().join("malformed");
    let mut out: Vec<(String, String, String)> = std::fs::read_dir(&dir)
        .expect("malformed directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "nlml"))
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let code = std::fs::read_to_string(dir.join(format!("{name}.expected.code"))).unwrap();
            (name, std::fs::read_to_string(&p).unwrap(), code.trim().to_string())
        })
        .collect();
    out.sort();
    out
}

pub fn expected(name: &str, kind: &str) -> String {
    std::fs::read_to_string(corpus_dir().join(format!("{name}.expected.{kind}"))).unwrap()
}
