//! C ABI over the steinhaus crate.
//!
//! Objects cross the boundary as opaque handles owned by the library; every
//! constructor has a matching `*_free`. Functions return an `StStatus` code
//! and write results through out-pointers. Bit sequences travel as
//! NUL-terminated strings of '0'/'1' characters.

use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

use steinhaus::subspace::{self, SymClass};
use steinhaus::{graph, BinSeq, Triangle};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not a valid bitstring, or was not UTF-8.
    BadBitstring = 2,
    /// An index or size argument was out of range.
    OutOfRange = 3,
    /// The operation is not defined for the given arguments.
    Unsupported = 4,
}

/// Symmetry classes of Steinhaus triangles.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StClass {
    Full = 0,
    H = 1,
    R = 2,
    D = 3,
    D0 = 4,
}

impl From<StClass> for SymClass {
    fn from(c: StClass) -> SymClass {
        match c {
            StClass::Full => SymClass::Full,
            StClass::H => SymClass::H,
            StClass::R => SymClass::R,
            StClass::D => SymClass::D,
            StClass::D0 => SymClass::D0,
        }
    }
}

/// Opaque Steinhaus triangle handle.
pub struct StTriangle(Triangle);

fn parse_seq(s: *const c_char) -> Result<BinSeq, StStatus> {
    if s.is_null() {
        return Err(StStatus::NullPointer);
    }
    let text = unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| StStatus::BadBitstring)?;
    BinSeq::from_str(text).map_err(|_| StStatus::BadBitstring)
}

/// Builds a triangle from the bitstring of its first row.
///
/// # Safety
/// `first_row` must be a valid NUL-terminated string and `out` a valid
/// pointer. The result must be released with `st_triangle_free`.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_new(
    first_row: *const c_char,
    out: *mut *mut StTriangle,
) -> StStatus {
    if out.is_null() {
        return StStatus::NullPointer;
    }
    match parse_seq(first_row) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(StTriangle(Triangle::from_first_row(s))));
            StStatus::Ok
        }
        Err(e) => e,
    }
}

/// Releases a triangle handle. Null is ignored.
///
/// # Safety
/// `t` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_free(t: *mut StTriangle) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Size (number of first-row terms) of the triangle.
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_size(
    t: *const StTriangle,
    out: *mut usize,
) -> StStatus {
    if t.is_null() || out.is_null() {
        return StStatus::NullPointer;
    }
    *out = (*t).0.size();
    StStatus::Ok
}

/// The entry at 1-based position (i, j), 1 <= i <= j <= size.
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_entry(
    t: *const StTriangle,
    i: usize,
    j: usize,
    out: *mut u8,
) -> StStatus {
    if t.is_null() || out.is_null() {
        return StStatus::NullPointer;
    }
    match (*t).0.entry(i, j) {
        Ok(b) => {
            *out = b;
            StStatus::Ok
        }
        Err(_) => StStatus::OutOfRange,
    }
}

/// The first row as a freshly allocated NUL-terminated bitstring; release
/// with `st_string_free`.
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_first_row(
    t: *const StTriangle,
    out: *mut *mut c_char,
) -> StStatus {
    if t.is_null() || out.is_null() {
        return StStatus::NullPointer;
    }
    let s = CString::new((*t).0.first_row().to_string()).expect("no interior NUL");
    *out = s.into_raw();
    StStatus::Ok
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn st_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn unary_op(
    t: *const StTriangle,
    out: *mut *mut StTriangle,
    f: impl FnOnce(&Triangle) -> Triangle,
) -> StStatus {
    if t.is_null() || out.is_null() {
        return StStatus::NullPointer;
    }
    *out = Box::into_raw(Box::new(StTriangle(f(&(*t).0))));
    StStatus::Ok
}

/// The 120-degree rotation of the triangle, as a new handle.
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_rotate(
    t: *const StTriangle,
    out: *mut *mut StTriangle,
) -> StStatus {
    unary_op(t, out, Triangle::rotate)
}

/// The horizontal reflection of the triangle, as a new handle.
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_reflect(
    t: *const StTriangle,
    out: *mut *mut StTriangle,
) -> StStatus {
    unary_op(t, out, Triangle::reflect)
}

/// The symmetrized (rotationally symmetric) image of the triangle.
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_rho(
    t: *const StTriangle,
    out: *mut *mut StTriangle,
) -> StStatus {
    unary_op(t, out, Triangle::rho)
}

/// Number of one-entries in the triangle.
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_count_ones(
    t: *const StTriangle,
    out: *mut usize,
) -> StStatus {
    if t.is_null() || out.is_null() {
        return StStatus::NullPointer;
    }
    *out = (*t).0.count_ones();
    StStatus::Ok
}

/// Whether the triangle holds as many zeros as ones (1 = balanced).
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn st_triangle_is_balanced(
    t: *const StTriangle,
    out: *mut u8,
) -> StStatus {
    if t.is_null() || out.is_null() {
        return StStatus::NullPointer;
    }
    *out = (*t).0.is_balanced() as u8;
    StStatus::Ok
}

/// Whether the triangle belongs to the symmetry class (1 = member).
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn st_is_member(
    cls: StClass,
    t: *const StTriangle,
    out: *mut u8,
) -> StStatus {
    if t.is_null() || out.is_null() {
        return StStatus::NullPointer;
    }
    *out = subspace::is_member(cls.into(), &(*t).0) as u8;
    StStatus::Ok
}

/// Dimension of a symmetry class at size n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_dim(cls: StClass, n: usize, out: *mut usize) -> StStatus {
    if out.is_null() {
        return StStatus::NullPointer;
    }
    *out = subspace::dim(cls.into(), n);
    StStatus::Ok
}

/// The k-th element (0-based) of the closed-form basis of the class at size
/// n, as a new triangle handle.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_basis_element(
    cls: StClass,
    n: usize,
    k: usize,
    out: *mut *mut StTriangle,
) -> StStatus {
    if out.is_null() {
        return StStatus::NullPointer;
    }
    let b = match subspace::basis(cls.into(), n, None) {
        Ok(b) => b,
        Err(_) => return StStatus::Unsupported,
    };
    match b.elements.into_iter().nth(k) {
        Some(t) => {
            *out = Box::into_raw(Box::new(StTriangle(t)));
            StStatus::Ok
        }
        None => StStatus::OutOfRange,
    }
}

/// The symmetric triangle of size 2n-1 associated to the Steinhaus graph
/// with the given defining sequence of length n-1.
///
/// # Safety
/// `seq` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_graph_theta(
    seq: *const c_char,
    out: *mut *mut StTriangle,
) -> StStatus {
    if out.is_null() {
        return StStatus::NullPointer;
    }
    match parse_seq(seq) {
        Ok(s) => {
            let g = graph::SteinhausGraph::from_seq(s);
            *out = Box::into_raw(Box::new(StTriangle(graph::theta(&g))));
            StStatus::Ok
        }
        Err(e) => e,
    }
}

/// Whether every vertex of the Steinhaus graph with the given defining
/// sequence has even degree (1 = even graph).
///
/// # Safety
/// `seq` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn st_graph_is_even(
    seq: *const c_char,
    out: *mut u8,
) -> StStatus {
    if out.is_null() {
        return StStatus::NullPointer;
    }
    match parse_seq(seq) {
        Ok(s) => {
            *out = graph::SteinhausGraph::from_seq(s).is_even() as u8;
            StStatus::Ok
        }
        Err(e) => e,
    }
}
