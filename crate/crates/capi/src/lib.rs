//! C ABI for the interlacing-network toolkit: opaque handles, status codes,
//! and UTF-8 strings allocated by this library (free them with
//! `ilnet_string_free`). All functions are safe to call from any thread;
//! the last error message is thread-local.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ilnet::grassmann::{
    is_interlacing_matrix, mstar_membership, path_matrix, phi_embed, verify_intermat,
    verify_intermat_plucker, Matrix,
};
use ilnet::involution::{all_patterns, tau, verify_parity_relation, verify_three_term};
use ilnet::network::{grid_network_seeded, grid_network_unit, parse_ilnet, render_ilnet, Network};
use ilnet::paths::{enumerate_pnc, pair_weight, Pattern};
use ilnet::rsk::{RskArrays, RskInput};
use ilnet::schur::{
    conjecture_check, is_schur_positive, rectangle_positivity_difference,
    row_omission_positivity_difference, verify_identity, Identity, Partition,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IlnetStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    ArithmeticError = 4,
    IntegrityError = 5,
    Unsupported = 6,
    VacuousDomain = 7,
}

/// Opaque network handle.
pub struct IlnetNetwork(Network);

/// Opaque exact-matrix handle.
pub struct IlnetMatrix(Matrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(msg).ok();
    });
}

fn status_of(err: &ilnet::Error) -> IlnetStatus {
    use ilnet::Error::*;
    match err {
        DivisionByZero => IlnetStatus::ArithmeticError,
        Unsupported(_) => IlnetStatus::Unsupported,
        Arg(_) | Construction(_) => IlnetStatus::InvalidArgument,
        Parse(_) => IlnetStatus::ParseError,
        Integrity(_) => IlnetStatus::IntegrityError,
        VacuousDomain(_) => IlnetStatus::VacuousDomain,
    }
}

fn fail(err: ilnet::Error) -> IlnetStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

/// The message for the most recent error on this thread, or null. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ilnet_last_error() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map(|s| s.as_ptr())
            .unwrap_or(ptr::null())
    })
}

/// Free a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by an `ilnet_*` function, or
/// null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, IlnetStatus> {
    if ptr.is_null() {
        set_error("null string".into());
        return Err(IlnetStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string is not UTF-8".into());
        IlnetStatus::ParseError
    })
}

unsafe fn read_set(ptr: *const u32, len: usize) -> Result<BTreeSet<u32>, IlnetStatus> {
    if len == 0 {
        return Ok(BTreeSet::new());
    }
    if ptr.is_null() {
        set_error("null index set".into());
        return Err(IlnetStatus::NullPointer);
    }
    Ok(std::slice::from_raw_parts(ptr, len)
        .iter()
        .copied()
        .collect())
}

unsafe fn read_parts(ptr: *const u32, len: usize) -> Result<Vec<u32>, IlnetStatus> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if ptr.is_null() {
        set_error("null partition".into());
        return Err(IlnetStatus::NullPointer);
    }
    Ok(std::slice::from_raw_parts(ptr, len).to_vec())
}

fn give_string(out: *mut *mut c_char, text: String) -> IlnetStatus {
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            IlnetStatus::Ok
        }
        Err(_) => {
            set_error("text contains an interior nul byte".into());
            IlnetStatus::ParseError
        }
    }
}

macro_rules! nonnull {
    ($p:expr) => {
        if $p.is_null() {
            set_error("null pointer".into());
            return IlnetStatus::NullPointer;
        }
    };
}

/// Build the rectangular grid network with unit weights.
#[no_mangle]
pub extern "C" fn ilnet_network_grid(
    m: u32,
    n: u32,
    k: u32,
    out: *mut *mut IlnetNetwork,
) -> IlnetStatus {
    nonnull!(out);
    match grid_network_unit(m, n, k) {
        Ok(net) => {
            unsafe { *out = Box::into_raw(Box::new(IlnetNetwork(net))) };
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Build the rectangular grid network with seeded positive rational weights.
#[no_mangle]
pub extern "C" fn ilnet_network_grid_seeded(
    m: u32,
    n: u32,
    k: u32,
    seed: u64,
    out: *mut *mut IlnetNetwork,
) -> IlnetStatus {
    nonnull!(out);
    match grid_network_seeded(m, n, k, seed) {
        Ok(net) => {
            unsafe { *out = Box::into_raw(Box::new(IlnetNetwork(net))) };
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Parse a network in the line-oriented `ILNET 1` text format.
///
/// # Safety
/// `text` must be a valid nul-terminated string; `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_network_parse(
    text: *const c_char,
    out: *mut *mut IlnetNetwork,
) -> IlnetStatus {
    nonnull!(out);
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_ilnet(text) {
        Ok(net) => {
            *out = Box::into_raw(Box::new(IlnetNetwork(net)));
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Render a network in the `ILNET 1` text format.
///
/// # Safety
/// `net` must be a live handle; `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_network_render(
    net: *const IlnetNetwork,
    out: *mut *mut c_char,
) -> IlnetStatus {
    nonnull!(net);
    nonnull!(out);
    give_string(out, render_ilnet(&(*net).0))
}

/// # Safety
/// `net` must be a handle from this library or null; it is consumed.
#[no_mangle]
pub unsafe extern "C" fn ilnet_network_free(net: *mut IlnetNetwork) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// Verify the stored bottleneck witness. `flags` receives five booleans:
/// non-returning, sink-branching, k-bottlenecked, sink-bottlenecked,
/// interlacing.
///
/// # Safety
/// `net` must be a live handle; `flags` must point to at least 5 bytes.
#[no_mangle]
pub unsafe extern "C" fn ilnet_network_check(
    net: *const IlnetNetwork,
    flags: *mut u8,
) -> IlnetStatus {
    nonnull!(net);
    nonnull!(flags);
    match (*net).0.check_properties(None) {
        Ok(r) => {
            let values = [
                r.non_returning_ok,
                r.sink_branching_ok,
                r.k_bottlenecked,
                r.sink_bottlenecked,
                r.interlacing,
            ];
            for (i, v) in values.iter().enumerate() {
                *flags.add(i) = *v as u8;
            }
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Exhaustively check that the sink swap is a weight-preserving involution
/// on every pair of every pattern (desk-scale networks only).
///
/// # Safety
/// `net` must be a live handle; `out_ok` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_swap_involution_check(
    net: *const IlnetNetwork,
    out_ok: *mut u8,
) -> IlnetStatus {
    nonnull!(net);
    nonnull!(out_ok);
    let net = &(*net).0;
    let k = net.k();
    if k < 2 {
        set_error("network has no pattern structure".into());
        return IlnetStatus::InvalidArgument;
    }
    let run = || -> ilnet::Result<bool> {
        for i_set in all_patterns(k) {
            for j_set in all_patterns(k) {
                let pattern = Pattern {
                    i: i_set.clone(),
                    j: j_set.clone(),
                };
                for pair in enumerate_pnc(net, &pattern)? {
                    let (out, trace) = tau(net, &pattern, &pair)?;
                    if pair_weight(net, &pair) != pair_weight(net, &out) {
                        return Ok(false);
                    }
                    let out_pattern = Pattern {
                        i: i_set.clone(),
                        j: trace.output_j[0].clone(),
                    };
                    let (back, _) = tau(net, &out_pattern, &out)?;
                    if back != pair {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    };
    match run() {
        Ok(ok) => {
            *out_ok = ok as u8;
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Three-term relation `wt(I,J) = wt(I,J') + wt(I,J'')`.
///
/// # Safety
/// `net` must be a live handle; the index arrays must match their lengths;
/// `out_ok` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_verify_three_term(
    net: *const IlnetNetwork,
    i_set: *const u32,
    i_len: usize,
    j_set: *const u32,
    j_len: usize,
    out_ok: *mut u8,
) -> IlnetStatus {
    nonnull!(net);
    nonnull!(out_ok);
    let (i, j) = match (read_set(i_set, i_len), read_set(j_set, j_len)) {
        (Ok(i), Ok(j)) => (i, j),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    match verify_three_term(&(*net).0, &i, &j) {
        Ok(ok) => {
            *out_ok = ok as u8;
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Parity relation over sink patterns with a fixed even part.
///
/// # Safety
/// As for `ilnet_verify_three_term`.
#[no_mangle]
pub unsafe extern "C" fn ilnet_verify_parity(
    net: *const IlnetNetwork,
    i_set: *const u32,
    i_len: usize,
    k_even: *const u32,
    k_len: usize,
    out_ok: *mut u8,
) -> IlnetStatus {
    nonnull!(net);
    nonnull!(out_ok);
    let (i, k) = match (read_set(i_set, i_len), read_set(k_even, k_len)) {
        (Ok(i), Ok(k)) => (i, k),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    match verify_parity_relation(&(*net).0, &i, &k) {
        Ok(ok) => {
            *out_ok = ok as u8;
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Path matrix of a network.
///
/// # Safety
/// `net` must be a live handle; `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_path_matrix(
    net: *const IlnetNetwork,
    out: *mut *mut IlnetMatrix,
) -> IlnetStatus {
    nonnull!(net);
    nonnull!(out);
    match path_matrix(&(*net).0) {
        Ok(m) => {
            *out = Box::into_raw(Box::new(IlnetMatrix(m)));
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Parse a matrix: whitespace-separated exact entries, one row per line.
///
/// # Safety
/// `text` must be a valid nul-terminated string; `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_matrix_parse(
    text: *const c_char,
    out: *mut *mut IlnetMatrix,
) -> IlnetStatus {
    nonnull!(out);
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match Matrix::parse(text) {
        Ok(m) => {
            *out = Box::into_raw(Box::new(IlnetMatrix(m)));
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Render a matrix in the same text format.
///
/// # Safety
/// `m` must be a live handle; `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_matrix_render(
    m: *const IlnetMatrix,
    out: *mut *mut c_char,
) -> IlnetStatus {
    nonnull!(m);
    nonnull!(out);
    give_string(out, (*m).0.render())
}

/// # Safety
/// `m` must be a handle from this library or null; it is consumed.
#[no_mangle]
pub unsafe extern "C" fn ilnet_matrix_free(m: *mut IlnetMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Interlacing-matrix predicate; on a negative verdict the violating minor
/// is described by `ilnet_last_error`.
///
/// # Safety
/// `m` must be a live handle; `out_ok` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_matrix_is_interlacing(
    m: *const IlnetMatrix,
    k: u32,
    out_ok: *mut u8,
) -> IlnetStatus {
    nonnull!(m);
    nonnull!(out_ok);
    match is_interlacing_matrix(&(*m).0, k) {
        Ok(check) => {
            *out_ok = check.ok as u8;
            if let Some(v) = check.violation {
                set_error(format!("{} at rows {:?} cols {:?}", v.reason, v.rows, v.cols));
            }
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Three-term determinant identity on an interlacing matrix, checked both
/// directly and on the embedded Plucker coordinates.
///
/// # Safety
/// As for `ilnet_verify_three_term`, with a matrix handle.
#[no_mangle]
pub unsafe extern "C" fn ilnet_verify_intermat(
    m: *const IlnetMatrix,
    k: u32,
    i_set: *const u32,
    i_len: usize,
    j_set: *const u32,
    j_len: usize,
    out_ok: *mut u8,
) -> IlnetStatus {
    nonnull!(m);
    nonnull!(out_ok);
    let (i, j) = match (read_set(i_set, i_len), read_set(j_set, j_len)) {
        (Ok(i), Ok(j)) => (i, j),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    let m = &(*m).0;
    let direct = match verify_intermat(m, k, &i, &j) {
        Ok(ok) => ok,
        Err(e) => return fail(e),
    };
    let embedded = match verify_intermat_plucker(m, k, &i, &j) {
        Ok(ok) => ok,
        Err(e) => return fail(e),
    };
    *out_ok = (direct && embedded) as u8;
    IlnetStatus::Ok
}

/// Vanishing-pattern membership for the interlacing cell.
///
/// # Safety
/// `m` must be a live handle; both out-pointers non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_mstar_membership(
    m: *const IlnetMatrix,
    k: u32,
    out_in_closure: *mut u8,
    out_exact: *mut u8,
) -> IlnetStatus {
    nonnull!(m);
    nonnull!(out_in_closure);
    nonnull!(out_exact);
    let v = phi_embed(&(*m).0);
    match mstar_membership(&v, k) {
        Ok(r) => {
            *out_in_closure = r.in_cell_closure as u8;
            *out_exact = r.exact_cell as u8;
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

unsafe fn rsk_input_from(
    matrix_text: *const c_char,
    symbolic_m: u32,
    symbolic_n: u32,
) -> Result<RskInput, IlnetStatus> {
    if !matrix_text.is_null() {
        let text = read_str(matrix_text)?;
        let m = Matrix::parse(text).map_err(fail)?;
        RskInput::from_matrix(&m).map_err(fail)
    } else {
        RskInput::symbolic(symbolic_m, symbolic_n).map_err(fail)
    }
}

/// Verify the octahedron recurrence, the product identity and the entry
/// recursion. Pass a matrix text, or null with a symbolic size.
///
/// # Safety
/// `matrix_text` must be null or a valid string; `out_ok` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_rsk_verify(
    matrix_text: *const c_char,
    symbolic_m: u32,
    symbolic_n: u32,
    out_ok: *mut u8,
) -> IlnetStatus {
    nonnull!(out_ok);
    let input = match rsk_input_from(matrix_text, symbolic_m, symbolic_n) {
        Ok(i) => i,
        Err(s) => return s,
    };
    let run = || -> ilnet::Result<bool> {
        let arrays = RskArrays::compute(input)?;
        Ok(arrays.verify_octahedron()?
            && arrays.verify_star_all()?
            && arrays.verify_y_recursion()?)
    };
    match run() {
        Ok(ok) => {
            *out_ok = ok as u8;
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Render the four RSK tables for a matrix (or the symbolic input when
/// `matrix_text` is null).
///
/// # Safety
/// As for `ilnet_rsk_verify`; `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_rsk_tables(
    matrix_text: *const c_char,
    symbolic_m: u32,
    symbolic_n: u32,
    out: *mut *mut c_char,
) -> IlnetStatus {
    nonnull!(out);
    let input = match rsk_input_from(matrix_text, symbolic_m, symbolic_n) {
        Ok(i) => i,
        Err(s) => return s,
    };
    match RskArrays::compute(input) {
        Ok(arrays) => give_string(out, arrays.render_tables()),
        Err(e) => fail(e),
    }
}

unsafe fn partition_from(ptr: *const u32, len: usize) -> Result<Partition, IlnetStatus> {
    let parts = read_parts(ptr, len)?;
    Partition::new(parts).map_err(fail)
}

/// Verify one of the named Schur identities at `nvars` variables. Names:
/// flagged | flagged-top | rectangle-square | skew | overlap-shift |
/// interlacing-sum. `t` is the identity's integer parameter (the omitted
/// row index for flagged/skew, the row-count parameter for overlap-shift);
/// `mu` is used by interlacing-sum and may be empty otherwise.
///
/// # Safety
/// `name` must be a valid string; the arrays must match their lengths;
/// `out_ok` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_schur_identity(
    name: *const c_char,
    lambda: *const u32,
    lambda_len: usize,
    mu: *const u32,
    mu_len: usize,
    t: u32,
    nvars: u32,
    out_ok: *mut u8,
) -> IlnetStatus {
    nonnull!(out_ok);
    let name = match read_str(name) {
        Ok(n) => n,
        Err(s) => return s,
    };
    let lam = match partition_from(lambda, lambda_len) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let id = match name {
        "flagged" => Identity::FlaggedThreeTerm { lambda: lam, t },
        "flagged-top" => Identity::FlaggedTop { lambda: lam },
        "rectangle-square" => {
            let parts = lam.parts();
            if parts.is_empty() || parts.iter().any(|&p| p != parts[0]) {
                set_error("rectangle-square needs a rectangular shape".into());
                return IlnetStatus::InvalidArgument;
            }
            Identity::RectangleSquare {
                c: parts[0],
                r: parts.len() as u32,
            }
        }
        "skew" => Identity::SkewThreeTerm { lambda: lam, t },
        "overlap-shift" => Identity::OverlapShift {
            nu: lam,
            k: t as usize,
        },
        "interlacing-sum" => {
            let l = match read_parts(lambda, lambda_len) {
                Ok(l) => l,
                Err(s) => return s,
            };
            let m = match read_parts(mu, mu_len) {
                Ok(m) => m,
                Err(s) => return s,
            };
            Identity::InterlacingSum { lambda: l, mu: m }
        }
        other => {
            set_error(format!("unknown identity `{other}`"));
            return IlnetStatus::InvalidArgument;
        }
    };
    match verify_identity(&id, nvars) {
        Ok(ok) => {
            *out_ok = ok as u8;
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Schur positivity of the rectangle-family difference.
///
/// # Safety
/// `out_ok` must be non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_rectangle_positivity(
    c: u32,
    r: u32,
    t: u32,
    nvars: u32,
    out_ok: *mut u8,
) -> IlnetStatus {
    nonnull!(out_ok);
    let run = || -> ilnet::Result<bool> {
        let d = rectangle_positivity_difference(c, r, t, nvars)?;
        Ok(is_schur_positive(&d, nvars)?.0)
    };
    match run() {
        Ok(ok) => {
            *out_ok = ok as u8;
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Schur positivity of the row-omission difference.
///
/// # Safety
/// `nu` must match its length; `out_ok` non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_row_omission_positivity(
    nu: *const u32,
    nu_len: usize,
    t: usize,
    nvars: u32,
    out_ok: *mut u8,
) -> IlnetStatus {
    nonnull!(out_ok);
    let nu = match partition_from(nu, nu_len) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let run = || -> ilnet::Result<bool> {
        let d = row_omission_positivity_difference(&nu, t, nvars)?;
        Ok(is_schur_positive(&d, nvars)?.0)
    };
    match run() {
        Ok(ok) => {
            *out_ok = ok as u8;
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Run the difference-vector conjecture analysis; reports whether every
/// admissible index gives a Schur-positive difference.
///
/// # Safety
/// The partition arrays must match their lengths; `out_all_positive`
/// non-null.
#[no_mangle]
pub unsafe extern "C" fn ilnet_conjecture_check(
    lambda: *const u32,
    lambda_len: usize,
    mu: *const u32,
    mu_len: usize,
    nvars: u32,
    out_all_positive: *mut u8,
) -> IlnetStatus {
    nonnull!(out_all_positive);
    let lam = match partition_from(lambda, lambda_len) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let m = match partition_from(mu, mu_len) {
        Ok(p) => p,
        Err(s) => return s,
    };
    match conjecture_check(&lam, &m, nvars) {
        Ok(r) => {
            *out_all_positive = r.all_positive as u8;
            IlnetStatus::Ok
        }
        Err(e) => fail(e),
    }
}
