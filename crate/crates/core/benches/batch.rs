use criterion::{black_box, criterion_group, criterion_main, Criterion};
use nlom_core::batch::{parse_all, parse_all_sequential};

const DOC: &str = "<mood>statement</mood><complexity>simple</complexity>\
<subject><noun><type>propernoun</type><word>Tom</word><numb>sing</numb><pers>third</pers><case>nom</case></noun>\
<noun><type>propernoun</type><word>Mary</word><numb>sing</numb><pers>third</pers><case>nom</case></noun>\
<connector>and</connector></subject>\
<verb_phrase><verb_phrase><numb>plur</numb><pers>third</pers><tense>present</tense><verb_type>intransitive</verb_type><word>sing</word></verb_phrase>\
<verb_phrase><numb>plur</numb><pers>third</pers><tense>present</tense><verb_type>intransitive</verb_type><word>dance</word></verb_phrase>\
<connector>or</connector></verb_phrase>";

fn bench(c: &mut Criterion) {
    let docs: Vec<&str> = vec![DOC; 512];
    let mut group = c.benchmark_group("parse_512");
    group.bench_function("parallel", |b| b.iter(|| parse_all(black_box(&docs))));
    group.bench_function("sequential", |b| b.iter(|| parse_all_sequential(black_box(&docs))));
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
