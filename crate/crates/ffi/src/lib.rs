//! C ABI for the `schemadet` automata library.
//!
//! Automata live behind opaque `SdAutomaton` handles created by parsing the
//! textual format or by the constructions below, and released with
//! `sd_automaton_free`. Every fallible function returns an `SdStatus`; on
//! failure `sd_last_error` describes the problem for the calling thread.
//! Strings returned through out-parameters are owned by the caller and
//! released with `sd_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use schemadet::format::{parse_automaton, parse_nested_word, parse_word, Automaton};
use schemadet::{canon, schemas, Error};

/// Opaque automaton handle: a word automaton or a stepwise hedge automaton.
pub struct SdAutomaton(Automaton);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownLetter = 4,
    AlphabetMismatch = 5,
    NondeterministicSchema = 6,
    KindMismatch = 7,
    Precondition = 8,
    Internal = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::UnknownLetter(_) => SdStatus::UnknownLetter,
        Error::AlphabetMismatch { .. } => SdStatus::AlphabetMismatch,
        Error::NondeterministicSchema => SdStatus::NondeterministicSchema,
        Error::Precondition(_) | Error::PositionOutOfRange { .. } | Error::InvalidNode(_) => {
            SdStatus::Precondition
        }
        _ => SdStatus::Parse,
    }
}

struct Failure(SdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SdStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SdStatus::Internal
        }
    }
}

unsafe fn handle<'a>(a: *const SdAutomaton) -> Result<&'a Automaton, Failure> {
    a.as_ref()
        .map(|a| &a.0)
        .ok_or_else(|| Failure(SdStatus::NullPointer, "null automaton handle".into()))
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(SdStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(SdStatus::InvalidUtf8, e.to_string()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(SdStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_automaton(out: *mut *mut SdAutomaton, a: Automaton) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(SdStatus::NullPointer, "null output pointer".into()));
    }
    out.write(Box::into_raw(Box::new(SdAutomaton(a))));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(SdStatus::Internal, e.to_string()))?;
    put(out, c.into_raw())
}

fn kind_mismatch(a: &Automaton, b: &Automaton) -> Failure {
    Failure(
        SdStatus::KindMismatch,
        format!("cannot combine a {} with a {}", a.kind(), b.kind()),
    )
}

/// Message describing the last failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an automaton in the textual format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_automaton_parse(
    text: *const c_char,
    out: *mut *mut SdAutomaton,
) -> SdStatus {
    guard(|| put_automaton(out, parse_automaton(c_str(text)?)?))
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `a` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sd_automaton_free(a: *mut SdAutomaton) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Canonical textual serialization.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_automaton_to_text(
    a: *const SdAutomaton,
    out: *mut *mut c_char,
) -> SdStatus {
    guard(|| put_string(out, handle(a)?.to_text()))
}

/// DOT rendering.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_automaton_to_dot(
    a: *const SdAutomaton,
    out: *mut *mut c_char,
) -> SdStatus {
    guard(|| put_string(out, handle(a)?.to_dot()))
}

/// Number of states, or 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_automaton_num_states(a: *const SdAutomaton) -> usize {
    a.as_ref().map_or(0, |a| a.0.num_states())
}

/// Number of states plus number of rules, or 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_automaton_size(a: *const SdAutomaton) -> usize {
    a.as_ref().map_or(0, |a| a.0.size())
}

/// 1 when the automaton is a hedge automaton, 0 for a word automaton.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_automaton_is_hedge(a: *const SdAutomaton) -> bool {
    matches!(a.as_ref(), Some(SdAutomaton(Automaton::Sha(_))))
}

/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sd_automaton_is_deterministic(a: *const SdAutomaton) -> bool {
    a.as_ref().is_some_and(|a| a.0.is_deterministic())
}

/// Accessible determinization, states numbered by ascending subset.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_determinize(
    a: *const SdAutomaton,
    out: *mut *mut SdAutomaton,
) -> SdStatus {
    guard(|| {
        let result = match handle(a)? {
            Automaton::Nfa(a) => {
                let d = schemadet::determinize(a);
                Automaton::Nfa(canon::by_subsets(&d.automaton, &d.subsets)?.0)
            }
            Automaton::Sha(a) => {
                let d = schemadet::determinize_sha(a);
                Automaton::Sha(canon::sha_by_subsets(&d.automaton, &d.subsets)?.0)
            }
        };
        put_automaton(out, result)
    })
}

/// Schema-based determinization, states numbered by ascending subset.
///
/// # Safety
/// `a` and `schema` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_schema_determinize(
    a: *const SdAutomaton,
    schema: *const SdAutomaton,
    out: *mut *mut SdAutomaton,
) -> SdStatus {
    guard(|| {
        let result = match (handle(a)?, handle(schema)?) {
            (Automaton::Nfa(a), Automaton::Nfa(s)) => {
                let d = schemadet::schema_determinize(a, s)?;
                Automaton::Nfa(canon::by_subsets(&d.automaton, &d.alignment.subsets)?.0)
            }
            (Automaton::Sha(a), Automaton::Sha(s)) => {
                let d = schemadet::schema_determinize_sha(a, s)?;
                Automaton::Sha(canon::sha_by_subsets(&d.automaton, &d.alignment.subsets)?.0)
            }
            (x, y) => return Err(kind_mismatch(x, y)),
        };
        put_automaton(out, result)
    })
}

/// Schema-based cleaning.
///
/// # Safety
/// `a` and `schema` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_schema_clean(
    a: *const SdAutomaton,
    schema: *const SdAutomaton,
    out: *mut *mut SdAutomaton,
) -> SdStatus {
    guard(|| {
        let result = match (handle(a)?, handle(schema)?) {
            (Automaton::Nfa(a), Automaton::Nfa(s)) => {
                Automaton::Nfa(schemadet::schema_clean(a, s)?.automaton)
            }
            (Automaton::Sha(a), Automaton::Sha(s)) => {
                Automaton::Sha(schemadet::schema_clean_sha(a, s)?.automaton)
            }
            (x, y) => return Err(kind_mismatch(x, y)),
        };
        put_automaton(out, result)
    })
}

/// Accessible product.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_product(
    a: *const SdAutomaton,
    b: *const SdAutomaton,
    out: *mut *mut SdAutomaton,
) -> SdStatus {
    guard(|| {
        let result = match (handle(a)?, handle(b)?) {
            (Automaton::Nfa(a), Automaton::Nfa(b)) => {
                Automaton::Nfa(schemadet::product(a, b)?.automaton)
            }
            (Automaton::Sha(a), Automaton::Sha(b)) => {
                Automaton::Sha(schemadet::product_sha(a, b)?.automaton)
            }
            (x, y) => return Err(kind_mismatch(x, y)),
        };
        put_automaton(out, result)
    })
}

/// The one-x schema over the alphabet of `a`, of the same kind as `a`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_one_x_schema(
    a: *const SdAutomaton,
    out: *mut *mut SdAutomaton,
) -> SdStatus {
    guard(|| {
        let result = match handle(a)? {
            Automaton::Nfa(a) => Automaton::Nfa(schemas::one_x_over(a.alphabet())?),
            Automaton::Sha(a) => Automaton::Sha(schemas::one_x_sha_over(a.alphabet())?),
        };
        put_automaton(out, result)
    })
}

/// Membership of a whitespace-separated word, or nested word for hedge automata.
///
/// # Safety
/// `a` must be a live handle, `input` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_accepts(
    a: *const SdAutomaton,
    input: *const c_char,
    out: *mut bool,
) -> SdStatus {
    guard(|| {
        let input = c_str(input)?;
        let yes = match handle(a)? {
            Automaton::Nfa(a) => a.accepts(&parse_word(input))?,
            Automaton::Sha(a) => a.accepts_nested(&parse_nested_word(input)?)?,
        };
        put(out, yes)
    })
}
