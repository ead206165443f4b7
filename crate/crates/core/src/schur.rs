//! Partitions, Schur and skew Schur polynomials with independent oracles,
//! the product identities proved through network path swapping, exact
//! Littlewood-Richardson expansion, Schur-positivity verdicts and the
//! associated conjecture checker.
//!
//! Schur polynomials are computed over a variable window `[a, b]` (the
//! flagged polynomial is the ordinary one in the window). The primary route
//! is Jacobi-Trudi over complete homogeneous polynomials; semistandard
//! tableau enumeration and the lattice-path model are kept as independent
//! oracles.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::algebra::{Poly, Rat, Var};
use crate::error::{Error, Result};
use crate::grassmann::Matrix;
use crate::network::cartesian_weighted_rect;
use crate::paths::{enumerate_nc_tuples, tuple_weight};

/// A partition: weakly decreasing positive parts (trailing zeros stripped).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Partition> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::arg("partition parts must be weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// `None` when the signed sequence is not a partition (used for the
    /// vanishing convention in the multi-term identities).
    pub fn from_signed(seq: &[i64]) -> Option<Partition> {
        if seq.iter().any(|&x| x < 0) || !seq.windows(2).all(|w| w[0] >= w[1]) {
            return None;
        }
        Partition::new(seq.iter().map(|&x| x as u32)).ok()
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// `r` rows of length `c`.
    pub fn rectangle(c: u32, r: u32) -> Partition {
        Partition {
            parts: if c == 0 { Vec::new() } else { vec![c; r as usize] },
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// 1-based part access, 0 beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn render(&self) -> String {
        if self.parts.is_empty() {
            return "()".into();
        }
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("({})", body.join(","))
    }

    pub fn parse(text: &str) -> Result<Partition> {
        let text = text.trim().trim_start_matches('(').trim_end_matches(')');
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            text.split(',').map(|t| t.trim().parse::<u32>()).collect();
        Partition::new(parts.map_err(|_| Error::parse("bad partition"))?)
    }
}

/// Complete homogeneous polynomials `h_0..h_max` in the window `[a, b]`.
fn h_polys(a: u32, b: u32, max: i64) -> Vec<Poly> {
    let max = max.max(0) as usize;
    let mut h = vec![Poly::zero(); max + 1];
    h[0] = Poly::one();
    if a > b {
        return h;
    }
    for v in a..=b {
        let x = Poly::var(v as Var);
        for d in 1..=max {
            let add = &x * &h[d - 1];
            h[d] += &add;
        }
    }
    h
}

/// Skew Schur polynomial over the window `[a, b]` by the Jacobi-Trudi
/// determinant `det(h_{outer_i - inner_j - i + j})`.
pub fn skew_schur_window(outer: &Partition, inner: &Partition, a: u32, b: u32) -> Result<Poly> {
    for i in 1..=inner.len() {
        if inner.part(i) > outer.part(i) {
            return Err(Error::arg("inner shape must fit inside the outer shape"));
        }
    }
    let l = outer.len();
    if l == 0 {
        return Ok(Poly::one());
    }
    let window = if a > b { 0 } else { (b - a + 1) as usize };
    // More rows than variables kills every column-strict filling.
    let fresh_rows = (1..=l).filter(|&i| outer.part(i) > inner.part(i)).count();
    if fresh_rows > window && inner.is_empty() {
        return Ok(Poly::zero());
    }
    let max_d = outer.part(1) as i64 + l as i64;
    let h = h_polys(a, b, max_d);
    let entry = |i: usize, j: usize| -> Poly {
        let d = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
        if d < 0 {
            Poly::zero()
        } else {
            h[d as usize].clone()
        }
    };
    let rows: Vec<Vec<Poly>> = (1..=l)
        .map(|i| (1..=l).map(|j| entry(i, j)).collect())
        .collect();
    Matrix::from_rows(rows)?.det()
}

/// Schur polynomial over the window `[a, b]`.
pub fn schur_window(lambda: &Partition, a: u32, b: u32) -> Poly {
    skew_schur_window(lambda, &Partition::empty(), a, b).expect("empty inner shape fits")
}

/// Schur polynomial in `x_1..x_n`.
pub fn schur(lambda: &Partition, n: u32) -> Poly {
    schur_window(lambda, 1, n)
}

/// The skew shape obtained by removing the top-left box: `s_{nu/1}`.
/// Zero for the empty shape by convention.
pub fn skew_schur_minus_box(nu: &Partition, a: u32, b: u32) -> Result<Poly> {
    if nu.is_empty() {
        return Err(Error::arg("cannot remove a box from the empty shape"));
    }
    skew_schur_window(nu, &Partition::new([1])?, a, b)
}

/// Oracle: Schur (or skew Schur) polynomial by direct semistandard tableau
/// enumeration with entries in `[a, b]`.
pub fn schur_by_tableaux(outer: &Partition, inner: &Partition, a: u32, b: u32) -> Result<Poly> {
    for i in 1..=inner.len() {
        if inner.part(i) > outer.part(i) {
            return Err(Error::arg("inner shape must fit inside the outer shape"));
        }
    }
    let l = outer.len();
    let mut cells: Vec<(usize, usize)> = Vec::new(); // (row, col), 1-based
    for r in 1..=l {
        for c in (inner.part(r) + 1)..=outer.part(r) {
            cells.push((r, c as usize));
        }
    }
    let mut grid: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut total = Poly::zero();
    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        a: u32,
        b: u32,
        grid: &mut BTreeMap<(usize, usize), u32>,
        total: &mut Poly,
    ) {
        if pos == cells.len() {
            let mut mono = Poly::one();
            for &v in grid.values() {
                mono = &mono * &Poly::var(v);
            }
            *total += &mono;
            return;
        }
        let (r, c) = cells[pos];
        let lo_row = grid.get(&(r, c - 1)).copied().unwrap_or(a); // weak in rows
        let lo_col = grid.get(&(r - 1, c)).map(|&v| v + 1).unwrap_or(a); // strict in cols
        for v in lo_row.max(lo_col)..=b {
            grid.insert((r, c), v);
            rec(cells, pos + 1, a, b, grid, total);
            grid.remove(&(r, c));
        }
    }
    if a > b {
        return Ok(if cells.is_empty() {
            Poly::one()
        } else {
            Poly::zero()
        });
    }
    rec(&cells, 0, a, b, &mut grid, &mut total);
    Ok(total)
}

/// Oracle: Schur polynomial by the lattice-path model, as a noncrossing
/// weight sum over the Cartesian rectangle with horizontal weights `x_j` at
/// height `j`.
pub fn schur_by_paths(lambda: &Partition, a: u32, b: u32) -> Result<Poly> {
    if a > b {
        return Ok(if lambda.is_empty() {
            Poly::one()
        } else {
            Poly::zero()
        });
    }
    let k = lambda.len() as u32;
    if k == 0 {
        return Ok(Poly::one());
    }
    let width = lambda.part(1) + k;
    let net = cartesian_weighted_rect(width, b)?;
    let at = |x: u32, y: u32| net.vertex_by_coord((x as i32, y as i32)).unwrap();
    let xs: Vec<usize> = (1..=k)
        .map(|i| at(lambda.part((k - i + 1) as usize) + i, b))
        .collect();
    let ys: Vec<usize> = (1..=k).map(|i| at(i, a)).collect();
    let mut total = Poly::zero();
    for t in enumerate_nc_tuples(&net, &xs, &ys)? {
        total += &tuple_weight(&net, &t);
    }
    Ok(total)
}

fn seq_schur(seq: &[i64], a: u32, b: u32) -> Poly {
    match Partition::from_signed(seq) {
        Some(p) => schur_window(&p, a, b),
        None => Poly::zero(),
    }
}

/// The named product identities, each verified as an exact polynomial
/// equality in a finite variable window.
#[derive(Clone, Debug)]
pub enum Identity {
    /// `s_l s'_m = s'_l s_m + x1 s_r s'_n` with the primed factors living in
    /// the window `[2, n]`; `m, n, r` derived from `lambda` and `t`.
    FlaggedThreeTerm { lambda: Partition, t: u32 },
    /// The `t = k - 1` special case.
    FlaggedTop { lambda: Partition },
    /// The rectangular special case, parameters `(c, r)`.
    FlaggedRectangle { c: u32, r: u32 },
    /// The square of a rectangle against its neighbors, one window.
    RectangleSquare { c: u32, r: u32 },
    /// The skew (box-removed) three-term identity, one window.
    SkewThreeTerm { lambda: Partition, t: u32 },
    /// The overlapping-shift identity for a partition with k+1 parts.
    OverlapShift { nu: Partition, k: usize },
    /// The interlacing multi-term identity.
    InterlacingSum { lambda: Vec<u32>, mu: Vec<u32> },
}

fn flagged_family(lambda: &Partition, t: u32) -> Result<(Partition, Partition, Partition)> {
    let k = lambda.len() as u32;
    if k == 0 {
        // Degenerate single-row collapse: everything empty.
        return Ok((Partition::empty(), Partition::empty(), Partition::empty()));
    }
    if t > k - 1 {
        return Err(Error::arg("need 0 <= t <= k-1"));
    }
    let l = |i: u32| lambda.part(i as usize) as i64;
    let mu: Vec<i64> = (1..=t)
        .map(l)
        .chain((t + 2..=k).map(|i| l(i) - 1))
        .collect();
    let nu: Vec<i64> = (1..=t)
        .map(|i| l(i) + 1)
        .chain((t + 2..=k).map(l))
        .collect();
    let rho: Vec<i64> = (1..=k).map(|i| l(i) - 1).collect();
    let as_partition = |seq: &[i64], name: &str| {
        Partition::from_signed(seq)
            .ok_or_else(|| Error::arg(format!("{name} is not a partition for this (lambda, t)")))
    };
    Ok((
        as_partition(&mu, "mu")?,
        as_partition(&nu, "nu")?,
        as_partition(&rho, "rho")?,
    ))
}

/// Verify one identity at `n` variables. The window form is the finite-`n`
/// statement each proof establishes before letting the variable count grow.
pub fn verify_identity(id: &Identity, n: u32) -> Result<bool> {
    match id {
        Identity::FlaggedThreeTerm { lambda, t } => {
            let (mu, nu, rho) = flagged_family(lambda, *t)?;
            let full = |p: &Partition| schur_window(p, 1, n);
            let high = |p: &Partition| schur_window(p, 2, n);
            let lhs = &full(lambda) * &high(&mu);
            let rhs = &(&high(lambda) * &full(&mu))
                + &(&(&Poly::var(1) * &full(&rho)) * &high(&nu));
            Ok(lhs == rhs)
        }
        Identity::FlaggedTop { lambda } => {
            let t = lambda.len().saturating_sub(1) as u32;
            verify_identity(
                &Identity::FlaggedThreeTerm {
                    lambda: lambda.clone(),
                    t,
                },
                n,
            )
        }
        Identity::FlaggedRectangle { c, r } => verify_identity(
            &Identity::FlaggedThreeTerm {
                lambda: Partition::rectangle(*c, *r),
                t: r.saturating_sub(1),
            },
            n,
        ),
        Identity::RectangleSquare { c, r } => {
            let (c, r) = (*c, *r);
            let s = |p: &Partition| schur_window(p, 1, n);
            let lhs = s(&Partition::rectangle(c, r)).pow(2);
            let rhs = &(&s(&Partition::rectangle(c, r - 1)) * &s(&Partition::rectangle(c, r + 1)))
                + &(&s(&Partition::rectangle(c - 1, r)) * &s(&Partition::rectangle(c + 1, r)));
            Ok(lhs == rhs)
        }
        Identity::SkewThreeTerm { lambda, t } => {
            let (mu, nu, rho) = flagged_family(lambda, *t)?;
            let s = |p: &Partition| schur_window(p, 1, n);
            let skew = |p: &Partition| -> Result<Poly> {
                if p.is_empty() {
                    Ok(Poly::zero())
                } else {
                    skew_schur_minus_box(p, 1, n)
                }
            };
            let lhs = &skew(lambda)? * &s(&mu);
            let rhs = &(&skew(&mu)? * &s(lambda)) + &(&s(&rho) * &s(&nu));
            Ok(lhs == rhs)
        }
        Identity::OverlapShift { nu, k } => {
            let k = *k;
            if k < 1 {
                return Err(Error::arg("need k >= 1"));
            }
            let v = |i: usize| nu.part(i) as i64;
            let head: Vec<i64> = (1..=k).map(v).collect();
            let tail: Vec<i64> = (2..=k + 1).map(v).collect();
            let mid_head: Vec<i64> = (2..=k).map(v).collect();
            let full: Vec<i64> = (1..=k + 1).map(v).collect();
            let tail_down: Vec<i64> = (2..=k + 1).map(|i| v(i) - 1).collect();
            let head_up: Vec<i64> = (1..=k).map(|i| v(i) + 1).collect();
            let s = |seq: &[i64]| seq_schur(seq, 1, n);
            let lhs = &s(&head) * &s(&tail);
            let rhs = &(&s(&mid_head) * &s(&full)) + &(&s(&tail_down) * &s(&head_up));
            Ok(lhs == rhs)
        }
        Identity::InterlacingSum { lambda, mu } => {
            let k = lambda.len();
            if mu.len() + 1 != k {
                return Err(Error::arg("need |mu| = |lambda| - 1"));
            }
            for i in 0..mu.len() {
                if !(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1]) {
                    return Err(Error::arg("lambda and mu must interlace"));
                }
            }
            let s_seq = |seq: &[i64]| seq_schur(seq, 1, n);
            let lam: Vec<i64> = lambda.iter().map(|&x| x as i64).collect();
            let m: Vec<i64> = mu.iter().map(|&x| x as i64).collect();
            let lhs = &s_seq(&lam) * &s_seq(&m);
            let mut rhs = Poly::zero();
            for i in 1..=k {
                let lam_i: Vec<i64> = (1..=k)
                    .map(|j| {
                        if j < i {
                            m[j - 1] - 1
                        } else if j == i {
                            lam[j - 1]
                        } else {
                            m[j - 2]
                        }
                    })
                    .collect();
                let mu_i: Vec<i64> = (1..k)
                    .map(|j| if j < i { lam[j - 1] + 1 } else { lam[j] })
                    .collect();
                rhs += &(&s_seq(&lam_i) * &s_seq(&mu_i));
            }
            Ok(lhs == rhs)
        }
    }
}

/// An exact expansion in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    pub nvars: u32,
    pub coefficients: BTreeMap<Partition, Rat>,
}

impl SchurExpansion {
    pub fn to_poly(&self) -> Poly {
        let mut out = Poly::zero();
        for (p, c) in &self.coefficients {
            out += &schur(p, self.nvars).scale(c);
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coefficients.values().all(|c| !c.is_negative())
    }

    pub fn render(&self) -> String {
        if self.coefficients.is_empty() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .map(|(p, c)| {
                if c.is_one() {
                    format!("s{}", p.render())
                } else {
                    format!("{}*s{}", crate::algebra::render_rat(c), p.render())
                }
            })
            .collect();
        terms.join(" + ")
    }
}

fn is_symmetric(f: &Poly, n: u32) -> bool {
    (1..n).all(|i| f.swap_vars(i, i + 1) == *f)
}

/// Expand a symmetric polynomial in the Schur basis by peeling the
/// dominance-leading monomial. Terminates with exact coefficients; a
/// non-symmetric input is rejected up front.
pub fn lr_expand(f: &Poly, n: u32) -> Result<SchurExpansion> {
    if f.variables().iter().any(|&v| v < 1 || v > n) {
        return Err(Error::arg("polynomial uses variables outside x1..xn"));
    }
    if !is_symmetric(f, n) {
        return Err(Error::arg("polynomial is not symmetric in x1..xn"));
    }
    let mut rest = f.clone();
    let mut coefficients: BTreeMap<Partition, Rat> = BTreeMap::new();
    let mut guard = 0usize;
    while !rest.is_zero() {
        guard += 1;
        if guard > 100_000 {
            return Err(Error::integrity("expansion failed to terminate"));
        }
        let (mono, coeff) = rest.leading_term().expect("nonzero");
        let mut exps: Vec<u32> = vec![0; n as usize];
        for &(v, e) in mono.pairs() {
            exps[(v - 1) as usize] = e;
        }
        if !exps.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::integrity(
                "leading monomial of a symmetric polynomial must be a partition",
            ));
        }
        let lambda = Partition::new(exps)?;
        let c = coeff.clone();
        rest = &rest - &schur(&lambda, n).scale(&c);
        coefficients.insert(lambda, c);
    }
    coefficients.retain(|_, c| !c.is_zero());
    Ok(SchurExpansion {
        nvars: n,
        coefficients,
    })
}

/// Oracle: the Littlewood-Richardson coefficient as the number of
/// column-strict skew tableaux of shape `alpha/lambda`, content `mu`, whose
/// reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, alpha: &Partition) -> u64 {
    if alpha.size() != lambda.size() + mu.size() {
        return 0;
    }
    for i in 1..=lambda.len().max(alpha.len()) {
        if lambda.part(i) > alpha.part(i) {
            return 0;
        }
    }
    // Cells in reading order: rows top to bottom, right to left.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 1..=alpha.len() {
        for c in ((lambda.part(r) + 1)..=alpha.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let rows = mu.len();
    let mut grid: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut counts = vec![0u32; rows + 1];
    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        mu: &Partition,
        rows: usize,
        grid: &mut BTreeMap<(usize, usize), usize>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if pos == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[pos];
        for v in 1..=rows {
            if counts[v] as u32 >= mu.part(v) {
                continue;
            }
            // Lattice condition on the running counts.
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            // Rows weakly increase left to right (we fill right to left).
            if let Some(&right) = grid.get(&(r, c + 1)) {
                if v > right {
                    continue;
                }
            }
            // Columns strictly increase downward.
            if let Some(&above) = grid.get(&(r - 1, c)) {
                if v <= above {
                    continue;
                }
            }
            grid.insert((r, c), v);
            counts[v] += 1;
            rec(cells, pos + 1, mu, rows, grid, counts, total);
            counts[v] -= 1;
            grid.remove(&(r, c));
        }
    }
    let mut total = 0u64;
    rec(&cells, 0, mu, rows, &mut grid, &mut counts, &mut total);
    total
}

/// Schur positivity verdict with the witnessing expansion.
pub fn is_schur_positive(f: &Poly, n: u32) -> Result<(bool, SchurExpansion)> {
    let e = lr_expand(f, n)?;
    let ok = e.is_nonnegative();
    Ok((ok, e))
}

/// Per-index outcome of the difference-vector positivity conjecture.
#[derive(Clone, Debug)]
pub struct ConjectureCase {
    /// 1-based sorted position `i`.
    pub i: usize,
    pub lambda_minus: Partition,
    pub mu_plus: Partition,
    pub positive: bool,
    pub expansion: SchurExpansion,
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub delta: Vec<i64>,
    /// `sigma[i]` is the original 1-based index at sorted position i+1.
    pub sigma: Vec<usize>,
    /// 1-based positions with strictly positive, strictly descending delta.
    pub d_set: Vec<usize>,
    pub cases: Vec<ConjectureCase>,
    pub all_positive: bool,
}

/// Check the conjecture's construction on one pair: compute the difference
/// vector, its tie-broken sorting permutation, the admissible index set, and
/// a positivity verdict for each admissible index.
pub fn conjecture_check(lambda: &Partition, mu: &Partition, nvars: u32) -> Result<ConjectureReport> {
    let n = lambda.len().max(mu.len());
    let delta: Vec<i64> = (1..=n)
        .map(|i| lambda.part(i) as i64 - mu.part(i) as i64)
        .collect();
    let mut sigma: Vec<usize> = (1..=n).collect();
    sigma.sort_by_key(|&j| (-delta[j - 1], j));
    let d_set: Vec<usize> = (1..=n)
        .filter(|&i| {
            delta[sigma[i - 1] - 1] > 0
                && (i == n || delta[sigma[i - 1] - 1] > delta[sigma[i] - 1])
        })
        .collect();
    let mut cases = Vec::new();
    let mut all_positive = true;
    for &i in &d_set {
        let moved: Vec<usize> = sigma[..i].to_vec();
        let lm: Vec<i64> = (1..=n)
            .map(|j| lambda.part(j) as i64 - if moved.contains(&j) { 1 } else { 0 })
            .collect();
        let mp: Vec<i64> = (1..=n)
            .map(|j| mu.part(j) as i64 + if moved.contains(&j) { 1 } else { 0 })
            .collect();
        let lambda_minus = Partition::from_signed(&lm).ok_or_else(|| {
            Error::integrity(format!("lowered sequence {lm:?} is not a partition at i = {i}"))
        })?;
        let mu_plus = Partition::from_signed(&mp).ok_or_else(|| {
            Error::integrity(format!("raised sequence {mp:?} is not a partition at i = {i}"))
        })?;
        let diff = &(&schur(&lambda_minus, nvars) * &schur(&mu_plus, nvars))
            - &(&schur(lambda, nvars) * &schur(mu, nvars));
        let (positive, expansion) = is_schur_positive(&diff, nvars)?;
        all_positive &= positive;
        cases.push(ConjectureCase {
            i,
            lambda_minus,
            mu_plus,
            positive,
            expansion,
        });
    }
    Ok(ConjectureReport {
        delta,
        sigma,
        d_set,
        cases,
        all_positive,
    })
}

/// The rectangle-family positivity difference:
/// `s_{(c^{r-1}, c-1)} s_{(c^t, (c-1)^{r-t-1})} - s_{(c-1)^r} s_{((c+1)^t, c^{r-t-1})}`.
pub fn rectangle_positivity_difference(c: u32, r: u32, t: u32, n: u32) -> Result<Poly> {
    if !(c >= 1 && r >= 1 && t <= r - 1) {
        return Err(Error::arg("need c, r >= 1 and 0 <= t <= r-1"));
    }
    let mut a1: Vec<u32> = vec![c; (r - 1) as usize];
    a1.push(c - 1);
    let mut a2: Vec<u32> = vec![c; t as usize];
    a2.extend(vec![c - 1; (r - t - 1) as usize]);
    let b1 = vec![c - 1; r as usize];
    let mut b2: Vec<u32> = vec![c + 1; t as usize];
    b2.extend(vec![c; (r - t - 1) as usize]);
    let s = |v: Vec<u32>| -> Result<Poly> { Ok(schur(&Partition::new(v)?, n)) };
    Ok(&(&s(a1)? * &s(a2)?) - &(&s(b1)? * &s(b2)?))
}

/// The row-omission positivity difference:
/// `s_nu s_{nu minus row t} - s_{(head lowered)} s_{(head raised)}`.
pub fn row_omission_positivity_difference(nu: &Partition, t: usize, n: u32) -> Result<Poly> {
    let k = nu.len();
    if !(1 <= t && t <= k) {
        return Err(Error::arg("need 1 <= t <= number of parts"));
    }
    let omit: Vec<u32> = (1..=k)
        .filter(|&j| j != t)
        .map(|j| nu.part(j))
        .collect();
    let lowered: Vec<i64> = (1..=k)
        .map(|j| {
            if j < t {
                nu.part(j) as i64 - 1
            } else {
                nu.part(j) as i64
            }
        })
        .collect();
    let raised: Vec<i64> = (1..=k - 1)
        .map(|j| {
            if j < t {
                nu.part(j) as i64 + 1
            } else {
                nu.part(j + 1) as i64
            }
        })
        .collect();
    let lhs = &schur(nu, n) * &schur(&Partition::new(omit)?, n);
    let rhs = &seq_schur(&lowered, 1, n) * &seq_schur(&raised, 1, n);
    Ok(&lhs - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn schur_basics() {
        assert_eq!(schur(&p(&[1]), 2), parse_poly("x1 + x2").unwrap());
        assert_eq!(
            schur(&p(&[2, 1]), 2),
            parse_poly("x1^2*x2 + x1*x2^2").unwrap()
        );
        assert!(schur(&p(&[1, 1, 1]), 2).is_zero());
        assert!(schur(&Partition::empty(), 3).is_one());
        // Empty window: only the empty partition survives.
        assert!(schur_window(&p(&[1]), 2, 1).is_zero());
        assert!(schur_window(&Partition::empty(), 2, 1).is_one());
    }

    #[test]
    fn triple_oracle_agreement() {
        let empty = Partition::empty();
        for size in 0..=6u32 {
            for lambda in partitions_of(size, 3) {
                for n in 1..=4u32 {
                    let jt = schur(&lambda, n);
                    let ssyt = schur_by_tableaux(&lambda, &empty, 1, n).unwrap();
                    let paths = schur_by_paths(&lambda, 1, n).unwrap();
                    assert_eq!(jt, ssyt, "JT vs SSYT at {lambda:?}, n={n}");
                    assert_eq!(jt, paths, "JT vs paths at {lambda:?}, n={n}");
                }
            }
        }
    }

    fn partitions_of(size: u32, max_parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        fn rec(rem: u32, max: u32, max_parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(cur.iter().copied()).unwrap());
                return;
            }
            if cur.len() == max_parts {
                return;
            }
            for next in (1..=rem.min(max)).rev() {
                cur.push(next);
                rec(rem - next, next, max_parts, cur, out);
                cur.pop();
            }
        }
        rec(size, size.max(1), max_parts, &mut cur, &mut out);
        out
    }

    #[test]
    fn skew_minus_box_cases() {
        assert!(skew_schur_minus_box(&p(&[1]), 1, 3).unwrap().is_one());
        let h1 = schur(&p(&[1]), 3);
        assert_eq!(skew_schur_minus_box(&p(&[2]), 1, 3).unwrap(), h1);
        assert_eq!(
            skew_schur_minus_box(&p(&[2, 1]), 1, 2).unwrap(),
            parse_poly("x1^2 + 2*x1*x2 + x2^2").unwrap()
        );
        assert!(skew_schur_minus_box(&Partition::empty(), 1, 2).is_err());
        // Oracle agreement with skew tableau enumeration.
        for lambda in [p(&[2, 1]), p(&[3, 2]), p(&[2, 2, 1])] {
            assert_eq!(
                skew_schur_minus_box(&lambda, 1, 3).unwrap(),
                schur_by_tableaux(&lambda, &p(&[1]), 1, 3).unwrap()
            );
        }
    }

    #[test]
    fn skew_matches_derivative_route() {
        // Removing the top-left box is differentiation at the lowest
        // variable: compare the window [2, n] skew against d/dx1 at x1 = 0.
        for lambda in [p(&[2, 1]), p(&[3, 1, 1]), p(&[2, 2])] {
            let n = 4;
            let via_skew = skew_schur_minus_box(&lambda, 2, n).unwrap();
            let via_derivative = schur(&lambda, n)
                .partial_derivative(1)
                .specialize(&[(1, Rat::zero())].into());
            assert_eq!(via_skew, via_derivative, "{lambda:?}");
        }
    }

    #[test]
    fn identity_smallest_cases() {
        // Square of a single box: s_(1)^2 = s_(1,1) + s_(2).
        assert!(verify_identity(&Identity::RectangleSquare { c: 1, r: 1 }, 3).unwrap());
        // Figure instance of the flagged identity.
        assert!(verify_identity(
            &Identity::FlaggedThreeTerm {
                lambda: p(&[3, 2, 2, 1]),
                t: 1
            },
            5
        )
        .unwrap());
        // Degenerate single-part interlacing sum: s_l * 1 = s_l * 1.
        assert!(verify_identity(
            &Identity::InterlacingSum {
                lambda: vec![2],
                mu: vec![]
            },
            3
        )
        .unwrap());
        // The k = 1 flagged identity on a 2 x 1 strip of variables.
        assert!(verify_identity(
            &Identity::FlaggedThreeTerm {
                lambda: p(&[1]),
                t: 0
            },
            1
        )
        .unwrap());
    }

    #[test]
    fn identity_families_small_sweep() {
        for lambda in [p(&[2, 1]), p(&[2, 2]), p(&[3, 1]), p(&[1, 1, 1])] {
            for t in 0..lambda.len() as u32 {
                assert!(
                    verify_identity(
                        &Identity::FlaggedThreeTerm {
                            lambda: lambda.clone(),
                            t
                        },
                        4
                    )
                    .unwrap(),
                    "flagged {lambda:?} t={t}"
                );
                assert!(
                    verify_identity(
                        &Identity::SkewThreeTerm {
                            lambda: lambda.clone(),
                            t
                        },
                        4
                    )
                    .unwrap(),
                    "skew {lambda:?} t={t}"
                );
            }
        }
        for (c, r) in [(1u32, 1u32), (2, 1), (1, 2), (2, 2)] {
            assert!(verify_identity(&Identity::RectangleSquare { c, r }, 4).unwrap());
            assert!(verify_identity(&Identity::FlaggedRectangle { c, r }, 4).unwrap());
        }
        for nu in [p(&[2, 1]), p(&[2, 2, 1]), p(&[3, 1])] {
            let k = nu.len(); // allow nu_{k+1} = 0
            assert!(
                verify_identity(&Identity::OverlapShift { nu: nu.clone(), k }, 4).unwrap(),
                "overlap {nu:?}"
            );
        }
        // Interlacing sums.
        assert!(verify_identity(
            &Identity::InterlacingSum {
                lambda: vec![2, 1],
                mu: vec![1]
            },
            4
        )
        .unwrap());
        assert!(verify_identity(
            &Identity::InterlacingSum {
                lambda: vec![3, 1, 0],
                mu: vec![2, 1]
            },
            4
        )
        .unwrap());
    }

    #[test]
    fn interlacing_sum_implies_overlap_shift() {
        // Specializing the interlacing identity to (nu_1..nu_k, 0) against
        // (nu_2..nu_{k+1}) reproduces the overlapping-shift identity term
        // for term: most summands vanish.
        for nu in [p(&[2, 1]), p(&[3, 2, 1])] {
            let k = nu.len();
            let mut lambda: Vec<u32> = (1..=k).map(|i| nu.part(i)).collect();
            lambda.push(0);
            let mu: Vec<u32> = (2..=k + 1).map(|i| nu.part(i)).collect();
            assert!(
                verify_identity(&Identity::InterlacingSum { lambda, mu }, 4).unwrap(),
                "{nu:?}"
            );
            assert!(
                verify_identity(&Identity::OverlapShift { nu: nu.clone(), k }, 4).unwrap()
            );
        }
    }

    #[test]
    fn lr_expansion_and_oracle() {
        // Pieri: s1 * s1 = s2 + s11.
        let f = schur(&p(&[1]), 2).pow(2);
        let e = lr_expand(&f, 2).unwrap();
        let want: BTreeMap<Partition, Rat> =
            [(p(&[2]), Rat::one()), (p(&[1, 1]), Rat::one())].into();
        assert_eq!(e.coefficients, want);
        // s21 * s1 expands into three shapes with coefficient 1.
        let f = &schur(&p(&[2, 1]), 3) * &schur(&p(&[1]), 3);
        let e = lr_expand(&f, 3).unwrap();
        let want: BTreeMap<Partition, Rat> = [
            (p(&[3, 1]), Rat::one()),
            (p(&[2, 2]), Rat::one()),
            (p(&[2, 1, 1]), Rat::one()),
        ]
        .into();
        assert_eq!(e.coefficients, want);
        // A basis element expands to itself; the round trip is exact.
        let e = lr_expand(&schur(&p(&[2, 2]), 3), 3).unwrap();
        assert_eq!(e.coefficients, [(p(&[2, 2]), Rat::one())].into());
        assert_eq!(e.to_poly(), schur(&p(&[2, 2]), 3));
        // Non-symmetric input is rejected.
        assert!(lr_expand(&Poly::var(1), 2).is_err());
    }

    #[test]
    fn lr_peel_off_matches_tableau_counts() {
        for (lambda, mu) in [
            (p(&[1]), p(&[1])),
            (p(&[2, 1]), p(&[1])),
            (p(&[2, 1]), p(&[2, 1])),
            (p(&[2, 2]), p(&[2, 1])),
            (p(&[3, 1]), p(&[2, 2])),
        ] {
            let n = (lambda.len() + mu.len()) as u32;
            let f = &schur(&lambda, n) * &schur(&mu, n);
            let e = lr_expand(&f, n).unwrap();
            for (alpha, c) in &e.coefficients {
                let count = lr_coefficient(&lambda, &mu, alpha);
                assert_eq!(
                    c,
                    &Rat::from_integer(count.into()),
                    "c^{alpha:?}_{lambda:?},{mu:?}"
                );
            }
            // Shapes with zero coefficient have no tableaux either.
            for alpha in partitions_of(lambda.size() + mu.size(), n as usize) {
                if !e.coefficients.contains_key(&alpha) {
                    assert_eq!(lr_coefficient(&lambda, &mu, &alpha), 0);
                }
            }
        }
    }

    #[test]
    fn positivity_verdicts() {
        let neg = &schur(&p(&[1, 1]), 3) - &schur(&p(&[2]), 3);
        let (ok, e) = is_schur_positive(&neg, 3).unwrap();
        assert!(!ok);
        assert_eq!(e.coefficients[&p(&[2])], -Rat::one());
        for t in 0..2u32 {
            let d = rectangle_positivity_difference(2, 2, t, 4).unwrap();
            let (ok, _) = is_schur_positive(&d, 4).unwrap();
            assert!(ok, "rectangle c=2 r=2 t={t}");
        }
        for t in 1..=2usize {
            let d = row_omission_positivity_difference(&p(&[2, 1]), t, 4).unwrap();
            let (ok, _) = is_schur_positive(&d, 4).unwrap();
            assert!(ok, "row omission t={t}");
        }
    }

    #[test]
    fn conjecture_cases_reproduce_the_known_specializations() {
        // Rectangle family: lambda = ((c+1)^t, c^{r-t-1}), mu = (c-1)^r with
        // c = 2, r = 3, t = 1: delta = (2, 1, -1), identity permutation,
        // r - 1 = 2 admissible.
        let lambda = p(&[3, 2]);
        let mu = p(&[1, 1, 1]);
        let report = conjecture_check(&lambda, &mu, 4).unwrap();
        assert_eq!(report.delta, vec![2, 1, -1]);
        assert_eq!(report.sigma, vec![1, 2, 3]);
        assert!(report.d_set.contains(&2));
        let case = report.cases.iter().find(|c| c.i == 2).unwrap();
        assert_eq!(case.lambda_minus, p(&[2, 1]));
        assert_eq!(case.mu_plus, p(&[2, 2, 1]));
        assert!(case.positive);
        // Overlapping-shift family: lambda = nu_head + 1, mu = nu_tail - 1
        // for nu = (2, 2, 1): all deltas positive and k = 2 admissible.
        let lambda = p(&[3, 3]);
        let mu = p(&[1]);
        let report = conjecture_check(&lambda, &mu, 4).unwrap();
        assert!(report.d_set.contains(&2));
        let case = report.cases.iter().find(|c| c.i == 2).unwrap();
        assert_eq!(case.lambda_minus, p(&[2, 2]));
        assert_eq!(case.mu_plus, p(&[2, 1]));
        assert!(case.positive);
        // Equal inputs: empty difference vector support, empty report.
        let report = conjecture_check(&p(&[2, 1]), &p(&[2, 1]), 3).unwrap();
        assert!(report.d_set.is_empty());
        assert!(report.cases.is_empty());
        assert!(report.all_positive);
    }
}
