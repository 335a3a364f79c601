use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use schemadet_ffi::*;

const A0: &str = "nfa
alphabet a x
states 0 1 2
initial 0 2
final 0
rule 0 x 1
rule 1 a 0
rule 2 x 0
rule 2 x 1
";

fn parse(text: &str) -> *mut SdAutomaton {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sd_automaton_parse(c.as_ptr(), &mut out) }, SdStatus::Ok);
    out
}

fn to_text(a: *const SdAutomaton) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sd_automaton_to_text(a, &mut s) }, SdStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { sd_string_free(s) };
    text
}

fn accepts(a: *const SdAutomaton, word: &str) -> bool {
    let w = CString::new(word).unwrap();
    let mut yes = false;
    assert_eq!(unsafe { sd_accepts(a, w.as_ptr(), &mut yes) }, SdStatus::Ok);
    yes
}

#[test]
fn round_trip_and_counts() {
    let a = parse(A0);
    assert_eq!(to_text(a), A0);
    unsafe {
        assert_eq!(sd_automaton_num_states(a), 3);
        assert_eq!(sd_automaton_size(a), 7);
        assert!(!sd_automaton_is_deterministic(a));
        assert!(!sd_automaton_is_hedge(a));
        sd_automaton_free(a);
    }
}

#[test]
fn schema_determinization_matches_cleaned_determinization() {
    let a = parse(A0);
    let mut schema = ptr::null_mut();
    let mut det = ptr::null_mut();
    let mut sdet = ptr::null_mut();
    let mut cleaned = ptr::null_mut();
    unsafe {
        assert_eq!(sd_one_x_schema(a, &mut schema), SdStatus::Ok);
        assert_eq!(sd_determinize(a, &mut det), SdStatus::Ok);
        assert_eq!(sd_automaton_num_states(det), 4);
        assert_eq!(sd_schema_determinize(a, schema, &mut sdet), SdStatus::Ok);
        assert_eq!(sd_schema_clean(det, schema, &mut cleaned), SdStatus::Ok);
    }
    assert_eq!(to_text(sdet), to_text(cleaned));
    assert!(accepts(det, ""));
    assert!(!accepts(cleaned, ""));
    assert!(accepts(cleaned, "x a"));
    unsafe {
        for h in [a, schema, det, sdet, cleaned] {
            sd_automaton_free(h);
        }
    }
}

#[test]
fn hedge_automata_through_the_abi() {
    let sha = parse("sha\nalphabet a\nstates 0\ninitial 0\nfinal 0\ntreeinit 0\napply 0 0 0\n");
    let mut schema = ptr::null_mut();
    let mut product = ptr::null_mut();
    unsafe {
        assert!(sd_automaton_is_hedge(sha));
        let two = parse("sha\nalphabet a x not-x\nstates 0\ninitial 0\nfinal 0\ntreeinit 0\nrule 0 a 0\nrule 0 x 0\nrule 0 not-x 0\napply 0 0 0\n");
        assert_eq!(sd_one_x_schema(two, &mut schema), SdStatus::Ok);
        assert_eq!(sd_product(two, schema, &mut product), SdStatus::Ok);
        sd_automaton_free(two);
    }
    assert!(accepts(sha, "< < > >"));
    assert!(!accepts(sha, "a"));
    assert!(accepts(product, "< x >"));
    assert!(!accepts(product, "< x > x"));
    unsafe {
        for h in [sha, schema, product] {
            sd_automaton_free(h);
        }
    }
}

#[test]
fn errors_set_status_and_message() {
    let bad = CString::new("nfa\nalphabet a\nstates 0 1\nrule 0 a 5\n").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { sd_automaton_parse(bad.as_ptr(), &mut out) };
    assert_eq!(status, SdStatus::Parse);
    assert!(out.is_null());
    let msg = unsafe { CStr::from_ptr(sd_last_error()) }.to_str().unwrap();
    assert!(msg.contains("line 4"), "{msg}");

    let a = parse(A0);
    let mut det = ptr::null_mut();
    unsafe {
        assert_eq!(sd_schema_determinize(a, a, &mut det), SdStatus::NondeterministicSchema);
        assert_eq!(sd_determinize(ptr::null(), &mut det), SdStatus::NullPointer);
        let w = CString::new("y").unwrap();
        let mut yes = false;
        assert_eq!(sd_accepts(a, w.as_ptr(), &mut yes), SdStatus::UnknownLetter);
        let sha = parse("sha\nalphabet a x\nstates 0\n");
        assert_eq!(sd_product(a, sha, &mut det), SdStatus::KindMismatch);
        let other = parse("nfa\nalphabet b x\nstates 0\n");
        assert_eq!(sd_product(a, other, &mut det), SdStatus::AlphabetMismatch);
        for h in [a, sha, other] {
            sd_automaton_free(h);
        }
        sd_automaton_free(ptr::null_mut());
        sd_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_function() {
    let header = include_str!("../include/schemadet.h");
    for name in [
        "sd_last_error",
        "sd_automaton_parse",
        "sd_automaton_free",
        "sd_string_free",
        "sd_automaton_to_text",
        "sd_automaton_to_dot",
        "sd_automaton_num_states",
        "sd_automaton_size",
        "sd_automaton_is_hedge",
        "sd_automaton_is_deterministic",
        "sd_determinize",
        "sd_schema_determinize",
        "sd_schema_clean",
        "sd_product",
        "sd_one_x_schema",
        "sd_accepts",
        "typedef struct SdAutomaton SdAutomaton",
        "SD_STATUS_NONDETERMINISTIC_SCHEMA = 6",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_is_valid_c() {
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-x", "c"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include/schemadet.h"))
        .status()
    else {
        eprintln!("no C compiler, skipping");
        return;
    };
    assert!(status.success());
}
