//! Property tests for the pipeline invariants, checked against naive
//! reference implementations where one exists.

mod common;

use std::collections::HashSet;
use std::path::PathBuf;

use proptest::prelude::*;

use gurmukhi_prep::corpus::SplitAssignment;
use gurmukhi_prep::pipeline::join_terms;
use gurmukhi_prep::{
    aggregate_stats, classify_char, dedup_terms, gate_document, match_terms, preprocess_document,
    remove_stopwords, split_corpus, strip_symbols, tokenize, CharClass, DocumentReport,
    DomainLabel, Lexicon, LexiconKind, RawDocument, StopList, Term,
};

fn term(text: &str) -> Term {
    Term::new(text).unwrap()
}

fn terms_of(texts: &[String]) -> Vec<Term> {
    texts.iter().map(|t| term(t)).collect()
}

fn texts_of(terms: &[Term]) -> Vec<String> {
    terms.iter().map(|t| t.as_str().to_string()).collect()
}

fn is_subsequence<T: PartialEq>(sub: &[T], full: &[T]) -> bool {
    let mut it = full.iter();
    sub.iter().all(|wanted| it.any(|have| have == wanted))
}

/// Gurmukhi words, separators, and foreign noise, concatenated.
fn arb_soup() -> impl Strategy<Value = String> {
    let word = (0usize..400).prop_map(common::synth_word);
    let separator = prop::sample::select(vec![" ", ",", "।", "॥", "\n", "\t", "\r\n", " ,, "])
        .prop_map(str::to_string);
    let noise = prop::sample::select(vec![
        "abc", "123", "!", "(\"", "<p>", ")", "😀", "हिंदी", "\u{200B}", ". ",
    ])
    .prop_map(str::to_string);
    prop::collection::vec(
        prop_oneof![4 => word, 4 => separator, 1 => noise],
        0..60,
    )
    .prop_map(|parts| parts.concat())
}

/// Sizes for stop/dict/gaz/other pools drawn from disjoint index ranges.
fn arb_resources() -> impl Strategy<Value = (Vec<String>, Vec<String>, Vec<String>)> {
    (0usize..30, 0usize..60, 0usize..30).prop_map(|(s, d, g)| {
        (
            common::synth_pool(0, 4, s),
            common::synth_pool(1, 4, d),
            common::synth_pool(2, 4, g),
        )
    })
}

proptest! {
    #[test]
    fn classify_is_a_total_partition(ch in any::<char>()) {
        let class = classify_char(ch);
        let in_block = ('\u{0A00}'..='\u{0A7F}').contains(&ch);
        let in_separators = matches!(ch, ' ' | '\t' | '\r' | '\n' | ',' | '\u{0964}' | '\u{0965}');
        match class {
            CharClass::Gurmukhi => prop_assert!(in_block),
            CharClass::Separator => prop_assert!(in_separators && !in_block),
            CharClass::Useless => prop_assert!(!in_block && !in_separators),
        }
    }

    #[test]
    fn strip_is_idempotent_on_any_text(text in any::<String>()) {
        let once = strip_symbols(&text);
        prop_assert_eq!(strip_symbols(&once), once);
    }

    #[test]
    fn strip_output_is_gurmukhi_and_single_commas(text in arb_soup()) {
        let stripped = strip_symbols(&text);
        prop_assert!(!stripped.starts_with(','));
        prop_assert!(!stripped.ends_with(','));
        prop_assert!(!stripped.contains(",,"));
        for ch in stripped.chars() {
            prop_assert!(ch == ',' || classify_char(ch) == CharClass::Gurmukhi);
        }
    }

    #[test]
    fn gate_never_panics_and_terms_stay_in_script(text in any::<String>()) {
        let doc = RawDocument::from_text(text.clone());
        if let Ok(terms) = gate_document(&doc) {
            for t in &terms {
                prop_assert!(!t.as_str().is_empty());
                for ch in t.as_str().chars() {
                    prop_assert_eq!(classify_char(ch), CharClass::Gurmukhi);
                }
            }
        } else {
            prop_assert!(!text.is_empty());
        }
    }

    #[test]
    fn tokens_match_the_reference_tokenizer(text in arb_soup()) {
        let staged = texts_of(&tokenize(&strip_symbols(&text)));
        prop_assert_eq!(staged, common::ref_tokenize(&text));
    }

    #[test]
    fn dedup_keeps_an_ordered_distinct_subsequence(words in prop::collection::vec(0usize..40, 0..120)) {
        let input: Vec<Term> = words.iter().map(|&i| term(&common::synth_word(i))).collect();
        let result = dedup_terms(input.clone());
        let as_set: HashSet<&Term> = result.unique.iter().collect();
        prop_assert_eq!(as_set.len(), result.unique.len(), "unique repeats a term");
        prop_assert_eq!(result.duplicate_count + result.unique.len(), input.len());
        prop_assert!(is_subsequence(&result.unique, &input));
        let input_set: HashSet<&Term> = input.iter().collect();
        prop_assert_eq!(as_set, input_set, "dedup changed the term set");
        let again = dedup_terms(result.unique.clone());
        prop_assert_eq!(again.duplicate_count, 0);
        prop_assert_eq!(again.unique, result.unique);
    }

    #[test]
    fn stopword_removal_agrees_with_linear_scan(
        words in prop::collection::vec(0usize..40, 0..120),
        stop_indices in prop::collection::vec(0usize..40, 0..20),
    ) {
        let input: Vec<Term> = words.iter().map(|&i| term(&common::synth_word(i))).collect();
        let stop_terms: Vec<Term> = stop_indices.iter().map(|&i| term(&common::synth_word(i))).collect();
        let stops = StopList::from_terms(stop_terms.clone());
        let (kept, removed) = remove_stopwords(input.clone(), &stops);
        prop_assert!(is_subsequence(&kept, &input));
        for t in &kept {
            prop_assert!(!stop_terms.contains(t), "kept a stop word");
        }
        let naive_removed = input.iter().filter(|t| stop_terms.contains(t)).count();
        prop_assert_eq!(removed, naive_removed);
        prop_assert_eq!(kept.len() + removed, input.len());
    }

    #[test]
    fn match_partitions_conserve_and_stay_disjoint(
        words in prop::collection::vec(0usize..60, 0..120),
        dict_indices in prop::collection::vec(0usize..60, 0..30),
        gaz_indices in prop::collection::vec(0usize..60, 0..30),
    ) {
        let input: Vec<Term> = words.iter().map(|&i| term(&common::synth_word(i))).collect();
        let dict_terms: Vec<Term> = dict_indices.iter().map(|&i| term(&common::synth_word(i))).collect();
        let gaz_terms: Vec<Term> = gaz_indices.iter().map(|&i| term(&common::synth_word(i))).collect();
        let dict = Lexicon::from_terms(LexiconKind::Dictionary, dict_terms.clone());
        let gaz = Lexicon::from_terms(LexiconKind::Gazetteer, gaz_terms.clone());
        let partition = match_terms(input.clone(), &dict, &gaz);

        let total = partition.dictionary_matched.len()
            + partition.gazetteer_matched.len()
            + partition.rejected.len();
        prop_assert_eq!(total, input.len());

        let mut merged = [
            partition.dictionary_matched.clone(),
            partition.gazetteer_matched.clone(),
            partition.rejected.clone(),
        ]
        .concat();
        merged.sort();
        let mut expected = input.clone();
        expected.sort();
        prop_assert_eq!(merged, expected, "buckets lost or invented terms");

        let dict_set: HashSet<&Term> = partition.dictionary_matched.iter().collect();
        let gaz_set: HashSet<&Term> = partition.gazetteer_matched.iter().collect();
        let rej_set: HashSet<&Term> = partition.rejected.iter().collect();
        prop_assert!(dict_set.is_disjoint(&gaz_set));
        prop_assert!(dict_set.is_disjoint(&rej_set));
        prop_assert!(gaz_set.is_disjoint(&rej_set));

        // Routing agrees with linear scans over the source lists.
        for t in &partition.dictionary_matched {
            prop_assert!(dict_terms.contains(t));
        }
        for t in &partition.gazetteer_matched {
            prop_assert!(!dict_terms.contains(t) && gaz_terms.contains(t));
        }
        for t in &partition.rejected {
            prop_assert!(!dict_terms.contains(t) && !gaz_terms.contains(t));
        }

        // Growing the dictionary never grows the rejected bucket.
        let mut grown = dict_terms.clone();
        grown.push(term(&common::synth_word(7)));
        let grown_dict = Lexicon::from_terms(LexiconKind::Dictionary, grown);
        let grown_partition = match_terms(input, &grown_dict, &gaz);
        prop_assert!(grown_partition.rejected.len() <= partition.rejected.len());
    }

    #[test]
    fn pipeline_matches_single_pass_reference(
        content in arb_soup(),
        lists in arb_resources(),
    ) {
        let (stop_words, dict_words, gaz_words) = lists;
        let resources = gurmukhi_prep::Resources {
            stops: StopList::from_terms(terms_of(&stop_words)),
            dict: Lexicon::from_terms(LexiconKind::Dictionary, terms_of(&dict_words)),
            gaz: Lexicon::from_terms(LexiconKind::Gazetteer, terms_of(&gaz_words)),
        };
        let doc = RawDocument::from_text(content.clone());
        let staged = preprocess_document(&doc, &resources).ok();
        let reference = common::ref_preprocess(&content, &stop_words, &dict_words, &gaz_words);
        match (staged, reference) {
            (None, None) => {}
            (Some(report), Some(expected)) => {
                prop_assert_eq!(report.n_tokens, expected.n_tokens);
                prop_assert_eq!(report.n_duplicates, expected.n_duplicates);
                prop_assert_eq!(report.n_stopwords, expected.n_stopwords);
                prop_assert_eq!(report.n_dict, expected.n_dict);
                prop_assert_eq!(report.n_gaz, expected.n_gaz);
                prop_assert_eq!(report.n_rejected, expected.n_rejected);
                prop_assert_eq!(texts_of(&report.accepted), expected.accepted);
                prop_assert_eq!(texts_of(&report.rejected), expected.rejected);
            }
            (staged, reference) => {
                return Err(TestCaseError::fail(format!(
                    "staged={staged:?} reference={reference:?}"
                )));
            }
        }
    }

    #[test]
    fn pipeline_conserves_counts_and_provenance(content in arb_soup()) {
        let resources = gurmukhi_prep::Resources {
            stops: StopList::from_terms(terms_of(&common::synth_pool(0, 4, 20))),
            dict: Lexicon::from_terms(LexiconKind::Dictionary, terms_of(&common::synth_pool(1, 4, 40))),
            gaz: Lexicon::from_terms(LexiconKind::Gazetteer, terms_of(&common::synth_pool(2, 4, 20))),
        };
        let doc = RawDocument::from_text(content.clone());
        if let Ok(report) = preprocess_document(&doc, &resources) {
            prop_assert_eq!(
                report.n_tokens,
                report.n_duplicates + report.n_stopwords + report.n_dict
                    + report.n_gaz + report.n_rejected
            );
            prop_assert_eq!(report.accepted.len(), report.n_dict + report.n_gaz);
            prop_assert_eq!(report.rejected.len(), report.n_rejected);
            let gated = gate_document(&doc).unwrap();
            for t in report.accepted.iter().chain(&report.rejected) {
                prop_assert!(gated.contains(t), "term not from the document: {:?}", t);
            }
            let accepted_set: HashSet<&Term> = report.accepted.iter().collect();
            for t in &report.rejected {
                prop_assert!(!accepted_set.contains(t));
            }
            // Reprocessing the accepted list is a fixed point.
            let again_doc = RawDocument::from_text(join_terms(&report.accepted));
            let again = preprocess_document(&again_doc, &resources).unwrap();
            prop_assert_eq!(again.accepted, report.accepted);
            prop_assert_eq!(again.n_duplicates + again.n_stopwords + again.n_rejected, 0);
        }
    }

    #[test]
    fn stats_percentages_close_and_merge_linearly(
        counts_a in prop::collection::vec([0usize..40, 0usize..40, 0usize..40, 0usize..40, 0usize..40], 0..20),
        counts_b in prop::collection::vec([0usize..40, 0usize..40, 0usize..40, 0usize..40, 0usize..40], 0..20),
    ) {
        let build = |counts: &[[usize; 5]]| -> Vec<DocumentReport> {
            counts
                .iter()
                .map(|c| DocumentReport {
                    source_path: None,
                    domain: Some(DomainLabel::Sports),
                    n_tokens: c.iter().sum(),
                    n_duplicates: c[0],
                    n_stopwords: c[1],
                    n_dict: c[2],
                    n_gaz: c[3],
                    n_rejected: c[4],
                    accepted: Vec::new(),
                    rejected: Vec::new(),
                })
                .collect()
        };
        let reports_a = build(&counts_a);
        let reports_b = build(&counts_b);
        let merged: Vec<DocumentReport> = reports_a.iter().chain(&reports_b).cloned().collect();

        let stats = aggregate_stats(&merged);
        if stats.overall.n_tokens > 0 {
            let sum = stats.overall.pct_duplicates
                + stats.overall.pct_stopwords
                + stats.overall.pct_dict
                + stats.overall.pct_gaz
                + stats.overall.pct_rejected;
            prop_assert!((sum - 100.0).abs() < 0.01, "micro percentages sum to {}", sum);
        }

        let separate_a = aggregate_stats(&reports_a);
        let separate_b = aggregate_stats(&reports_b);
        prop_assert_eq!(
            stats.overall.n_tokens,
            separate_a.overall.n_tokens + separate_b.overall.n_tokens
        );
        prop_assert_eq!(
            stats.overall.n_duplicates,
            separate_a.overall.n_duplicates + separate_b.overall.n_duplicates
        );
        prop_assert_eq!(
            stats.overall.n_stopwords,
            separate_a.overall.n_stopwords + separate_b.overall.n_stopwords
        );
        prop_assert_eq!(
            stats.overall.n_documents,
            separate_a.overall.n_documents + separate_b.overall.n_documents
        );

        // Order independence: folding the reports reversed changes nothing.
        let mut reversed = merged.clone();
        reversed.reverse();
        let stats_reversed = aggregate_stats(&reversed);
        prop_assert_eq!(stats.overall.n_tokens, stats_reversed.overall.n_tokens);
        prop_assert_eq!(stats.overall.pct_duplicates, stats_reversed.overall.pct_duplicates);
    }

    #[test]
    fn split_partitions_deterministically(
        file_count in 1usize..60,
        domain_count in 1usize..4,
        ratio in 0.05f64..0.95,
        seed in any::<u64>(),
    ) {
        let domains = ["agriculture", "sports", "news"];
        let files: Vec<(PathBuf, DomainLabel)> = (0..file_count)
            .map(|i| {
                let domain = domains[i % domain_count];
                (
                    PathBuf::from(format!("{domain}/doc{i:03}.txt")),
                    DomainLabel::from_dir_name(domain),
                )
            })
            .collect();
        let manifest = split_corpus(&files, ratio, seed).unwrap();
        prop_assert_eq!(manifest.entries.len(), files.len());

        let mut seen: Vec<&PathBuf> = manifest.entries.iter().map(|e| &e.path).collect();
        seen.sort();
        let mut expected: Vec<&PathBuf> = files.iter().map(|(p, _)| p).collect();
        expected.sort();
        prop_assert_eq!(seen, expected, "split lost or duplicated files");

        for domain in domains.iter().take(domain_count) {
            let label = DomainLabel::from_dir_name(domain);
            let size = files.iter().filter(|(_, d)| *d == label).count();
            let (learning, testing) = manifest.domain_counts(&label);
            prop_assert_eq!(learning, ((ratio * size as f64).round() as usize).min(size));
            prop_assert_eq!(learning + testing, size);
            for entry in manifest.entries.iter().filter(|e| e.domain == label) {
                prop_assert!(matches!(
                    entry.assignment,
                    SplitAssignment::Learning | SplitAssignment::Testing
                ));
            }
        }

        let again = split_corpus(&files, ratio, seed).unwrap();
        prop_assert_eq!(manifest.to_text(), again.to_text());
    }
}
