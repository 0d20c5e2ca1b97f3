//! C ABI for the sgx signed-graph toolkit.
//!
//! Graphs are opaque `SgxGraph` handles created by the constructors or the
//! sg6 decoder and released with [`sgx_graph_free`]. Fallible calls return
//! an [`SgxStatus`] and write results through out-pointers; strings returned
//! by the library are freed with [`sgx_string_free`]. The header
//! `include/sgx.h` is generated by cbindgen at build time.

use sgx_core::search;
use sgx_core::sgraph::{
    canonical_signed, decode_sg6, encode_sg6, switching_isomorphic, SignedGraph, VertexSet,
};
use sgx_core::{constructions, forbidden, spectra, Error};
use std::ffi::{c_char, CStr, CString};

/// Status code of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgxStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed sg6 input.
    ParseError = 3,
    /// Precondition violation (bad parameters, wrong orders, ...).
    DomainError = 4,
    /// A size or resource guard was exceeded.
    CapabilityError = 5,
    /// The eigensolver did not converge.
    ConvergenceError = 6,
    /// An independent re-check failed.
    VerificationError = 7,
    /// The provided output buffer is too small.
    BufferTooSmall = 8,
}

fn status_of(err: &Error) -> SgxStatus {
    match err {
        Error::Parse { .. } => SgxStatus::ParseError,
        Error::Domain(_) | Error::Io(_) => SgxStatus::DomainError,
        Error::Capability(_) => SgxStatus::CapabilityError,
        Error::NoConvergence { .. } => SgxStatus::ConvergenceError,
        Error::Verification(_) => SgxStatus::VerificationError,
    }
}

/// Opaque signed-graph handle.
pub struct SgxGraph {
    inner: SignedGraph,
}

fn graph_out(out: *mut *mut SgxGraph, g: SignedGraph) -> SgxStatus {
    if out.is_null() {
        return SgxStatus::NullArgument;
    }
    let boxed = Box::new(SgxGraph { inner: g });
    unsafe { *out = Box::into_raw(boxed) };
    SgxStatus::Ok
}

unsafe fn borrow<'a>(g: *const SgxGraph) -> Option<&'a SignedGraph> {
    unsafe { g.as_ref().map(|h| &h.inner) }
}

/// Decodes one sg6 line into a new graph handle.
///
/// # Safety
/// `line` must be a valid NUL-terminated C string; `out` must be a valid
/// pointer to an `SgxGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_from_sg6(
    line: *const c_char,
    out: *mut *mut SgxGraph,
) -> SgxStatus {
    if line.is_null() {
        return SgxStatus::NullArgument;
    }
    let text = match unsafe { CStr::from_ptr(line) }.to_str() {
        Ok(t) => t,
        Err(_) => return SgxStatus::InvalidUtf8,
    };
    match decode_sg6(text) {
        Ok(g) => graph_out(out, g),
        Err(e) => status_of(&e),
    }
}

/// Encodes a graph as a newly allocated sg6 C string (NULL on null input);
/// free it with [`sgx_string_free`].
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_to_sg6(g: *const SgxGraph) -> *mut c_char {
    match unsafe { borrow(g) } {
        Some(inner) => CString::new(encode_sg6(inner))
            .map_or(std::ptr::null_mut(), CString::into_raw),
        None => std::ptr::null_mut(),
    }
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned by this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn sgx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Frees a graph handle. NULL is ignored.
///
/// # Safety
/// `g` must be a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_free(g: *mut SgxGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Deep-copies a handle (NULL in, NULL out).
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_clone(g: *const SgxGraph) -> *mut SgxGraph {
    match unsafe { borrow(g) } {
        Some(inner) => Box::into_raw(Box::new(SgxGraph { inner: inner.clone() })),
        None => std::ptr::null_mut(),
    }
}

/// Builds `Gamma_{s,n}`.
///
/// # Safety
/// `out` must be a valid pointer to an `SgxGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_gamma(s: usize, n: usize, out: *mut *mut SgxGraph) -> SgxStatus {
    match constructions::gamma(s, n) {
        Ok(g) => graph_out(out, g),
        Err(e) => status_of(&e),
    }
}

/// Builds `Sigma_{k,n}` with clique parameter `r`.
///
/// # Safety
/// `out` must be a valid pointer to an `SgxGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_sigma(
    k: usize,
    r: usize,
    n: usize,
    out: *mut *mut SgxGraph,
) -> SgxStatus {
    match constructions::sigma(k, r, n) {
        Ok(g) => graph_out(out, g),
        Err(e) => status_of(&e),
    }
}

/// Builds the all-positive complete graph.
///
/// # Safety
/// `out` must be a valid pointer to an `SgxGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_complete_positive(n: usize, out: *mut *mut SgxGraph) -> SgxStatus {
    match constructions::complete_positive(n) {
        Ok(g) => graph_out(out, g),
        Err(e) => status_of(&e),
    }
}

/// Builds the complete graph with exactly one negative edge.
///
/// # Safety
/// `out` must be a valid pointer to an `SgxGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_complete_one_negative(
    n: usize,
    out: *mut *mut SgxGraph,
) -> SgxStatus {
    match constructions::complete_one_negative(n) {
        Ok(g) => graph_out(out, g),
        Err(e) => status_of(&e),
    }
}

/// Number of vertices (0 for NULL).
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_order(g: *const SgxGraph) -> usize {
    unsafe { borrow(g) }.map_or(0, |g| g.order())
}

/// Number of edges (0 for NULL).
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_size(g: *const SgxGraph) -> usize {
    unsafe { borrow(g) }.map_or(0, |g| g.size())
}

/// Number of negative edges (0 for NULL).
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_negative_edges(g: *const SgxGraph) -> usize {
    unsafe { borrow(g) }.map_or(0, |g| g.negative_edge_count())
}

macro_rules! out_call {
    ($g:expr, $out:expr, $body:expr) => {{
        let Some(g) = (unsafe { borrow($g) }) else {
            return SgxStatus::NullArgument;
        };
        if $out.is_null() {
            return SgxStatus::NullArgument;
        }
        #[allow(clippy::redundant_closure_call)]
        match ($body)(g) {
            Ok(v) => {
                unsafe { *$out = v };
                SgxStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    }};
}

/// Balance test.
///
/// # Safety
/// `g` must be a live handle; `out` a valid `bool` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_is_balanced(g: *const SgxGraph, out: *mut bool) -> SgxStatus {
    out_call!(g, out, |g: &SignedGraph| Ok::<_, Error>(g.is_balanced()))
}

/// Connectivity test.
///
/// # Safety
/// `g` must be a live handle; `out` a valid `bool` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_is_connected(g: *const SgxGraph, out: *mut bool) -> SgxStatus {
    out_call!(g, out, |g: &SignedGraph| Ok::<_, Error>(g.is_connected()))
}

/// Largest adjacency eigenvalue.
///
/// # Safety
/// `g` must be a live handle; `out` a valid `double` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_index(g: *const SgxGraph, out: *mut f64) -> SgxStatus {
    out_call!(g, out, spectra::index)
}

/// `max(lambda_1, -lambda_n)`.
///
/// # Safety
/// `g` must be a live handle; `out` a valid `double` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_spectral_radius(
    g: *const SgxGraph,
    out: *mut f64,
) -> SgxStatus {
    out_call!(g, out, spectra::spectral_radius)
}

/// Writes all eigenvalues, descending, into `buf` (capacity `len`; must be
/// at least the graph order).
///
/// # Safety
/// `g` must be a live handle; `buf` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_eigenvalues(
    g: *const SgxGraph,
    buf: *mut f64,
    len: usize,
) -> SgxStatus {
    let Some(g) = (unsafe { borrow(g) }) else {
        return SgxStatus::NullArgument;
    };
    if buf.is_null() {
        return SgxStatus::NullArgument;
    }
    if len < g.order() {
        return SgxStatus::BufferTooSmall;
    }
    match spectra::spectrum(g) {
        Ok(spec) => {
            let out = unsafe { std::slice::from_raw_parts_mut(buf, g.order()) };
            out.copy_from_slice(spec.values());
            SgxStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Switches at the vertex set given as a bitmask (bit v = vertex v).
///
/// # Safety
/// `g` must be a live handle; `out` a valid `SgxGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_switch_mask(
    g: *const SgxGraph,
    mask: u64,
    out: *mut *mut SgxGraph,
) -> SgxStatus {
    let Some(g) = (unsafe { borrow(g) }) else {
        return SgxStatus::NullArgument;
    };
    let full = VertexSet::full(g.order());
    let set = VertexSet::from_mask(mask);
    if !set.is_subset_of(full) {
        return SgxStatus::DomainError;
    }
    graph_out(out, g.switch(set))
}

/// Canonical switching-class representative (same labeled graph).
///
/// # Safety
/// `g` must be a live handle; `out` a valid `SgxGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_canonical_signature(
    g: *const SgxGraph,
    out: *mut *mut SgxGraph,
) -> SgxStatus {
    let Some(g) = (unsafe { borrow(g) }) else {
        return SgxStatus::NullArgument;
    };
    graph_out(out, g.canonical_signature())
}

/// Canonical representative of the switching-isomorphism class
/// (canonical labeling plus minimal canonical signature).
///
/// # Safety
/// `g` must be a live handle; `out` a valid `SgxGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_graph_canonical_form(
    g: *const SgxGraph,
    out: *mut *mut SgxGraph,
) -> SgxStatus {
    let Some(g) = (unsafe { borrow(g) }) else {
        return SgxStatus::NullArgument;
    };
    match canonical_signed(g) {
        Ok(c) => graph_out(out, c),
        Err(e) => status_of(&e),
    }
}

/// Switching equivalence of two signatures of the same labeled graph.
///
/// # Safety
/// `a` and `b` must be live handles; `out` a valid `bool` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_switching_equivalent(
    a: *const SgxGraph,
    b: *const SgxGraph,
    out: *mut bool,
) -> SgxStatus {
    let (Some(a), Some(b)) = (unsafe { borrow(a) }, unsafe { borrow(b) }) else {
        return SgxStatus::NullArgument;
    };
    if out.is_null() {
        return SgxStatus::NullArgument;
    }
    match a.switching_equivalent(b) {
        Ok(v) => {
            unsafe { *out = v };
            SgxStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Switching isomorphism (relabeling plus switching).
///
/// # Safety
/// `a` and `b` must be live handles; `out` a valid `bool` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_switching_isomorphic(
    a: *const SgxGraph,
    b: *const SgxGraph,
    out: *mut bool,
) -> SgxStatus {
    let (Some(a), Some(b)) = (unsafe { borrow(a) }, unsafe { borrow(b) }) else {
        return SgxStatus::NullArgument;
    };
    if out.is_null() {
        return SgxStatus::NullArgument;
    }
    match switching_isomorphic(a, b) {
        Ok(v) => {
            unsafe { *out = v };
            SgxStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Number of unbalanced 4-cliques (distinct vertex sets).
///
/// # Safety
/// `g` must be a live handle; `out` a valid `uint64_t` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_count_unbalanced_k4(
    g: *const SgxGraph,
    out: *mut u64,
) -> SgxStatus {
    out_call!(g, out, |g: &SignedGraph| Ok::<_, Error>(forbidden::count_unbalanced_k4(g)))
}

/// `tK4`-freeness: fewer than `t` unbalanced 4-cliques.
///
/// # Safety
/// `g` must be a live handle; `out` a valid `bool` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_is_tk4_free(
    g: *const SgxGraph,
    t: u64,
    out: *mut bool,
) -> SgxStatus {
    out_call!(g, out, |g: &SignedGraph| forbidden::is_tk4_free(g, t))
}

/// Order of the largest balanced clique.
///
/// # Safety
/// `g` must be a live handle; `out` a valid `size_t` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_balanced_clique_number(
    g: *const SgxGraph,
    out: *mut usize,
) -> SgxStatus {
    out_call!(g, out, |g: &SignedGraph| Ok::<_, Error>(forbidden::balanced_clique_number(g)))
}

/// Index of `Gamma_{s,n}` as the largest root of its cubic.
///
/// # Safety
/// `out` must be a valid `double` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_lambda1_gamma(s: usize, n: usize, out: *mut f64) -> SgxStatus {
    if out.is_null() {
        return SgxStatus::NullArgument;
    }
    match constructions::lambda1_gamma(s, n) {
        Ok(v) => {
            unsafe { *out = v };
            SgxStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// `r(t) = (1 + sqrt(8t-7))/2` when integral; DomainError otherwise.
///
/// # Safety
/// `out` must be a valid `uint64_t` slot.
#[no_mangle]
pub unsafe extern "C" fn sgx_r_of_t(t: u64, out: *mut u64) -> SgxStatus {
    if out.is_null() {
        return SgxStatus::NullArgument;
    }
    match constructions::r_of_t(t) {
        Some(r) => {
            unsafe { *out = r };
            SgxStatus::Ok
        }
        None => SgxStatus::DomainError,
    }
}

/// `t(r) = r(r-1)/2 + 1`.
#[no_mangle]
pub extern "C" fn sgx_t_of_r(r: u64) -> u64 {
    constructions::t_of_r(r)
}

/// Runs an extremal search over unbalanced graphs of order `n` in the
/// `tK4`-free family and returns the certificate as a JSON string (free
/// with [`sgx_string_free`]); NULL on failure.
///
/// # Safety
/// Pointer-free except the returned string; always safe to call.
#[no_mangle]
pub extern "C" fn sgx_search_tk4_json(n: usize, t: u64, jobs: usize) -> *mut c_char {
    let spec = search::SearchSpec {
        jobs: jobs.max(1),
        ..search::SearchSpec::new(n, search::Objective::Index, search::Family::Tk4Free(t))
    };
    match search::extremal_search(&spec).and_then(|c| search::certificate_to_json(&c)) {
        Ok(json) => CString::new(json).map_or(std::ptr::null_mut(), CString::into_raw),
        Err(_) => std::ptr::null_mut(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sg6_round_trip_through_the_c_abi() {
        let mut g: *mut SgxGraph = std::ptr::null_mut();
        unsafe {
            assert_eq!(sgx_gamma(2, 5, &mut g), SgxStatus::Ok);
            assert_eq!(sgx_graph_order(g), 5);
            assert_eq!(sgx_graph_size(g), 9);
            assert_eq!(sgx_graph_negative_edges(g), 1);

            let line = sgx_graph_to_sg6(g);
            assert!(!line.is_null());
            let mut back: *mut SgxGraph = std::ptr::null_mut();
            assert_eq!(sgx_graph_from_sg6(line, &mut back), SgxStatus::Ok);
            let mut equivalent = false;
            assert_eq!(sgx_switching_equivalent(g, back, &mut equivalent), SgxStatus::Ok);
            assert!(equivalent);
            sgx_string_free(line);
            sgx_graph_free(back);
            sgx_graph_free(g);
        }
    }

    #[test]
    fn spectral_queries() {
        let mut g: *mut SgxGraph = std::ptr::null_mut();
        unsafe {
            assert_eq!(sgx_complete_one_negative(4, &mut g), SgxStatus::Ok);
            let mut index = 0.0;
            assert_eq!(sgx_graph_index(g, &mut index), SgxStatus::Ok);
            assert!((index - 5f64.sqrt()).abs() < 1e-9);

            let mut eigs = [0.0f64; 4];
            assert_eq!(sgx_graph_eigenvalues(g, eigs.as_mut_ptr(), 4), SgxStatus::Ok);
            assert!((eigs[1] - 1.0).abs() < 1e-9);
            assert_eq!(
                sgx_graph_eigenvalues(g, eigs.as_mut_ptr(), 3),
                SgxStatus::BufferTooSmall
            );

            let mut count = 0u64;
            assert_eq!(sgx_count_unbalanced_k4(g, &mut count), SgxStatus::Ok);
            assert_eq!(count, 1);
            let mut wb = 0usize;
            assert_eq!(sgx_balanced_clique_number(g, &mut wb), SgxStatus::Ok);
            assert_eq!(wb, 3);
            sgx_graph_free(g);
        }
    }

    #[test]
    fn status_codes_for_bad_input() {
        let mut g: *mut SgxGraph = std::ptr::null_mut();
        unsafe {
            assert_eq!(sgx_gamma(9, 5, &mut g), SgxStatus::DomainError);
            assert_eq!(
                sgx_graph_from_sg6(std::ptr::null(), &mut g),
                SgxStatus::NullArgument
            );
            let bogus = CString::new("not-sg6").unwrap();
            assert_eq!(sgx_graph_from_sg6(bogus.as_ptr(), &mut g), SgxStatus::ParseError);
            let mut out = 0.0;
            assert_eq!(sgx_graph_index(std::ptr::null(), &mut out), SgxStatus::NullArgument);
            let mut r = 0u64;
            assert_eq!(sgx_r_of_t(3, &mut r), SgxStatus::DomainError);
            assert_eq!(sgx_r_of_t(7, &mut r), SgxStatus::Ok);
            assert_eq!(r, 4);
            assert_eq!(sgx_t_of_r(4), 7);
        }
    }

    #[test]
    fn switching_and_canonical_forms() {
        let mut g: *mut SgxGraph = std::ptr::null_mut();
        unsafe {
            assert_eq!(sgx_gamma(2, 5, &mut g), SgxStatus::Ok);
            let mut switched: *mut SgxGraph = std::ptr::null_mut();
            assert_eq!(sgx_graph_switch_mask(g, 0b01001, &mut switched), SgxStatus::Ok);
            let mut iso = false;
            assert_eq!(sgx_switching_isomorphic(g, switched, &mut iso), SgxStatus::Ok);
            assert!(iso);
            assert_eq!(sgx_graph_switch_mask(g, 1 << 40, &mut switched), SgxStatus::DomainError);

            let mut canon_a: *mut SgxGraph = std::ptr::null_mut();
            let mut canon_b: *mut SgxGraph = std::ptr::null_mut();
            assert_eq!(sgx_graph_canonical_signature(g, &mut canon_a), SgxStatus::Ok);
            assert_eq!(sgx_graph_canonical_signature(switched, &mut canon_b), SgxStatus::Ok);
            let a = sgx_graph_to_sg6(canon_a);
            let b = sgx_graph_to_sg6(canon_b);
            assert_eq!(CStr::from_ptr(a).to_bytes(), CStr::from_ptr(b).to_bytes());
            for p in [a, b] {
                sgx_string_free(p);
            }
            for h in [g, switched, canon_a, canon_b] {
                sgx_graph_free(h);
            }
        }
    }

    #[test]
    fn search_certificate_json() {
        let json = sgx_search_tk4_json(4, 2, 1);
        assert!(!json.is_null());
        unsafe {
            let text = CStr::from_ptr(json).to_str().unwrap();
            assert!(text.contains("\"schema\": 1") || text.contains("\"schema\":1"));
            assert!(text.contains("tk4_free"));
            sgx_string_free(json);
        }
    }
}
