//! Exact matrices and the algebraic side of the path-weight relations: the
//! LGV path matrix, the interlacing-matrix predicate, the embedding into the
//! Grassmannian, Plucker coordinates and relations, the three-term
//! determinant identity, and the vanishing-pattern membership test for the
//! interlacing cell.
//!
//! Determinants are computed by a division-free expansion with memoization
//! over column subsets, so symbolic entries cost nothing extra in
//! correctness. Ranks are certified by minor scans (complete for the bound
//! being asserted), with rational Gaussian elimination for fully numeric
//! matrices.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, Signed, Zero};

use crate::algebra::{parse_poly, Poly};
use crate::error::{Error, Result};
use crate::network::Network;
use crate::paths::{path_weight_sum, Pattern};

/// A dense matrix of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Matrix> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::arg("matrix dimensions do not match entries"));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::arg("ragged rows"));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Poly::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Poly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_numeric(&self) -> bool {
        self.entries.iter().all(|e| e.as_constant().is_some())
    }

    /// Whitespace-separated entries (compact canonical rendering), one row
    /// per line.
    pub fn parse(text: &str) -> Result<Matrix> {
        let mut rows: Vec<Vec<Poly>> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Result<Vec<Poly>> = line.split_whitespace().map(parse_poly).collect();
            rows.push(row?);
        }
        if rows.is_empty() {
            return Err(Error::parse("empty matrix"));
        }
        Matrix::from_rows(rows)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| self.get(r, c).render(true))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Determinant of the submatrix on 0-based index slices, by the
    /// division-free expansion with memoization over column subsets.
    fn det_indexed(&self, rows: &[usize], cols: &[usize]) -> Poly {
        let t = rows.len();
        debug_assert_eq!(t, cols.len());
        if t == 0 {
            return Poly::one();
        }
        assert!(t <= 20, "minors of order > 20 are out of scope");
        let mut memo: Vec<Option<Poly>> = vec![None; 1usize << t];
        memo[0] = Some(Poly::one());
        fn solve(
            m: &Matrix,
            rows: &[usize],
            cols: &[usize],
            mask: usize,
            memo: &mut Vec<Option<Poly>>,
        ) -> Poly {
            if let Some(v) = &memo[mask] {
                return v.clone();
            }
            let r = (mask.count_ones() - 1) as usize;
            let mut acc = Poly::zero();
            let mut sign_pos = r; // cofactor parity (-1)^(r + position)
            for c in 0..cols.len() {
                if mask >> c & 1 == 0 {
                    continue;
                }
                let entry = m.get(rows[r], cols[c]);
                if !entry.is_zero() {
                    let sub = solve(m, rows, cols, mask & !(1 << c), memo);
                    let term = entry * &sub;
                    if sign_pos % 2 == 0 {
                        acc += &term;
                    } else {
                        acc = &acc - &term;
                    }
                }
                sign_pos += 1;
            }
            memo[mask] = Some(acc.clone());
            acc
        }
        solve(self, rows, cols, (1usize << t) - 1, &mut memo)
    }

    /// Exact determinant of the submatrix selected by 1-based row and column
    /// index slices; indices must be distinct and in range.
    pub fn minor(&self, rows: &[u32], cols: &[u32]) -> Result<Poly> {
        if rows.len() != cols.len() {
            return Err(Error::arg("minor needs equally many rows and columns"));
        }
        let prep = |idx: &[u32], bound: usize, what: &str| -> Result<Vec<usize>> {
            let mut v: Vec<usize> = Vec::with_capacity(idx.len());
            for &i in idx {
                if i < 1 || i as usize > bound {
                    return Err(Error::arg(format!("{what} index {i} out of range")));
                }
                v.push(i as usize - 1);
            }
            let mut sorted = v.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != v.len() {
                return Err(Error::arg(format!("repeated {what} index")));
            }
            Ok(sorted)
        };
        let r = prep(rows, self.rows, "row")?;
        let c = prep(cols, self.cols, "column")?;
        Ok(self.det_indexed(&r, &c))
    }

    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::arg("determinant of a non-square matrix"));
        }
        let all: Vec<usize> = (0..self.rows).collect();
        Ok(self.det_indexed(&all, &all))
    }

    /// Exact rank of a numeric matrix by rational Gaussian elimination.
    pub fn rank_numeric(&self) -> Result<usize> {
        let mut a: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        self.get(r, c)
                            .as_constant()
                            .ok_or_else(|| Error::arg("rank_numeric needs numeric entries"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..self.cols {
            let pivot = (row..self.rows).find(|&r| !a[r][col].is_zero());
            let Some(p) = pivot else { continue };
            a.swap(row, p);
            let inv = BigRational::from_integer(1.into()) / a[row][col].clone();
            for r in (row + 1)..self.rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone() * inv.clone();
                for c in col..self.cols {
                    let sub = f.clone() * a[row][c].clone();
                    a[r][c] -= sub;
                }
            }
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        Ok(rank)
    }

    /// Is the rank at most `bound`? Certified by scanning all minors of
    /// order `bound + 1` (complete for this bound, numeric or symbolic);
    /// numeric matrices short-circuit through Gaussian elimination.
    pub fn rank_at_most(&self, bound: usize) -> Result<bool> {
        if self.is_numeric() {
            return Ok(self.rank_numeric()? <= bound);
        }
        let size = bound + 1;
        if size > self.rows || size > self.cols {
            return Ok(true);
        }
        for rows in combinations(self.rows, size) {
            for cols in combinations(self.cols, size) {
                if !self.det_indexed(&rows, &cols).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub(crate) fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        if n - start < r - cur.len() {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, r, i + 1, cur, out);
            cur.pop();
        }
    }
    if r <= n {
        rec(n, r, 0, &mut cur, &mut out);
    }
    out
}

/// The path matrix: entry `(i, j)` is the total weight of all paths from
/// source `i` to sink `j`.
pub fn path_matrix(net: &Network) -> Result<Matrix> {
    if net.k() == 0 {
        return Err(Error::arg("plain graph has no boundary structure"));
    }
    let m = net.boundary_len();
    let mut entries = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            entries.push(path_weight_sum(net, net.sources()[i], net.sinks()[j]));
        }
    }
    Matrix::new(m, m, entries)
}

/// A violating minor, 1-based indices.
#[derive(Clone, Debug)]
pub struct MinorCertificate {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
    pub value: Poly,
    pub reason: &'static str,
}

#[derive(Clone, Debug)]
pub struct InterlacingCheck {
    pub ok: bool,
    pub violation: Option<MinorCertificate>,
}

fn poly_nonnegative(p: &Poly) -> bool {
    // Numeric: sign test. Symbolic: certified coefficientwise, which is
    // sufficient for nonnegativity on the positive orthant and complete for
    // LGV minors (noncrossing-tuple weight sums).
    match p.as_constant() {
        Some(c) => !c.is_negative(),
        None => p.is_zero() || p.is_coefficient_positive(),
    }
}

/// Interlacing matrix of order `2k-1`: totally nonnegative, rank at most k,
/// and the middle-column submatrix (first and last columns removed) of rank
/// at most k-1. Total nonnegativity is checked by an exhaustive minor scan;
/// the first violating minor is returned as the certificate.
pub fn is_interlacing_matrix(m: &Matrix, k: u32) -> Result<InterlacingCheck> {
    let order = (2 * k - 1) as usize;
    if m.rows() != order || m.cols() != order {
        return Err(Error::arg(format!(
            "interlacing matrices of parameter k = {k} have order {order}"
        )));
    }
    let fail = |rows: Vec<usize>, cols: Vec<usize>, value: Poly, reason: &'static str| {
        InterlacingCheck {
            ok: false,
            violation: Some(MinorCertificate {
                rows: rows.iter().map(|&r| r as u32 + 1).collect(),
                cols: cols.iter().map(|&c| c as u32 + 1).collect(),
                value,
                reason,
            }),
        }
    };
    for size in 1..=order {
        for rows in combinations(order, size) {
            for cols in combinations(order, size) {
                let d = m.det_indexed(&rows, &cols);
                if !poly_nonnegative(&d) {
                    return Ok(fail(rows, cols, d, "negative minor"));
                }
                if size > k as usize && !d.is_zero() {
                    return Ok(fail(rows, cols, d, "rank exceeds k"));
                }
                if size > (k - 1) as usize
                    && !d.is_zero()
                    && cols.iter().all(|&c| c != 0 && c != order - 1)
                {
                    return Ok(fail(rows, cols, d, "middle-column rank exceeds k-1"));
                }
            }
        }
    }
    Ok(InterlacingCheck {
        ok: true,
        violation: None,
    })
}

/// Plucker coordinates of an `l x n` representative matrix: maximal minors,
/// with the signed-tuple access convention.
#[derive(Clone, Debug)]
pub struct PluckerVector {
    matrix: Matrix,
}

impl PluckerVector {
    pub fn from_matrix(matrix: Matrix) -> PluckerVector {
        PluckerVector { matrix }
    }

    /// Row count `l`.
    pub fn l(&self) -> usize {
        self.matrix.rows()
    }

    /// Ambient column count `n`.
    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    /// Coordinate on a sorted column set (1-based).
    pub fn delta_set(&self, cols: &BTreeSet<u32>) -> Result<Poly> {
        if cols.len() != self.l() {
            return Err(Error::arg("coordinate sets have size l"));
        }
        let rows: Vec<u32> = (1..=self.l() as u32).collect();
        let cols: Vec<u32> = cols.iter().copied().collect();
        self.matrix.minor(&rows, &cols)
    }

    /// Signed coordinate on an index tuple: antisymmetric under
    /// transpositions, zero on repeats.
    pub fn delta_tuple(&self, cols: &[u32]) -> Result<Poly> {
        if cols.len() != self.l() {
            return Err(Error::arg("coordinate tuples have size l"));
        }
        let mut sorted: Vec<u32> = cols.to_vec();
        let mut swaps = 0usize;
        for i in 0..sorted.len() {
            for j in (i + 1)..sorted.len() {
                if sorted[i] > sorted[j] {
                    sorted.swap(i, j);
                    swaps += 1;
                }
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(Poly::zero());
        }
        let set: BTreeSet<u32> = sorted.into_iter().collect();
        let d = self.delta_set(&set)?;
        Ok(if swaps % 2 == 0 { d } else { -&d })
    }

    /// All coordinates, materialized densely over the `C(n, l)` subsets.
    pub fn all_coordinates(&self) -> Result<BTreeMap<BTreeSet<u32>, Poly>> {
        let mut out = BTreeMap::new();
        for cols in combinations(self.n(), self.l()) {
            let set: BTreeSet<u32> = cols.iter().map(|&c| c as u32 + 1).collect();
            let d = self.delta_set(&set)?;
            out.insert(set, d);
        }
        Ok(out)
    }
}

/// The standard embedding of `l x n` matrices into the Grassmannian of
/// `l`-planes in `(l+n)`-space: an identity block next to the sign-twisted,
/// row-reversed copy of the matrix, arranged so that every minor of the
/// original matrix appears verbatim as a Plucker coordinate.
pub fn phi_embed(a: &Matrix) -> PluckerVector {
    let l = a.rows();
    let n = a.cols();
    let mut b = Matrix::zero(l, l + n);
    for i in 0..l {
        *b.get_mut(i, i) = Poly::one();
        for j in 0..n {
            let src = a.get(l - 1 - i, j);
            let signed = if (l - 1 - i) % 2 == 0 {
                src.clone()
            } else {
                -src
            };
            *b.get_mut(i, l + j) = signed;
        }
    }
    PluckerVector::from_matrix(b)
}

/// The column set carrying `det A[I|J]` under the embedding:
/// `([l] minus {l+1-i : i in I}) union {j + l : j in J}`.
pub fn phi_index_set(l: u32, i_set: &BTreeSet<u32>, j_set: &BTreeSet<u32>) -> BTreeSet<u32> {
    let mut set: BTreeSet<u32> = (1..=l).filter(|x| !i_set.contains(&(l + 1 - x))).collect();
    for &j in j_set {
        set.insert(j + l);
    }
    set
}

/// Self-test of the embedding's index law over every pair of equal-size
/// index sets of the given matrix.
pub fn phi_index_law_holds(a: &Matrix) -> Result<bool> {
    let v = phi_embed(a);
    let l = a.rows() as u32;
    for size in 1..=a.rows().min(a.cols()) {
        for rows in combinations(a.rows(), size) {
            for cols in combinations(a.cols(), size) {
                let i_set: BTreeSet<u32> = rows.iter().map(|&r| r as u32 + 1).collect();
                let j_set: BTreeSet<u32> = cols.iter().map(|&c| c as u32 + 1).collect();
                let lhs = a.minor(
                    &i_set.iter().copied().collect::<Vec<_>>(),
                    &j_set.iter().copied().collect::<Vec<_>>(),
                )?;
                let rhs = v.delta_set(&phi_index_set(l, &i_set, &j_set))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// One Plucker relation: the product `D_p D_q` equals the sum over all ways
/// to exchange `m` chosen positions of `p` with the final `m` entries of
/// `q`, with the signed-tuple convention.
pub fn plucker_relation_check(v: &PluckerVector, p: &[u32], q: &[u32], m: usize) -> Result<bool> {
    let l = v.l();
    if p.len() != l || q.len() != l {
        return Err(Error::arg("tuples must have length l"));
    }
    if m < 1 || m > l {
        return Err(Error::arg("need 1 <= m <= l"));
    }
    let lhs = &v.delta_tuple(p)? * &v.delta_tuple(q)?;
    let mut rhs = Poly::zero();
    for positions in combinations(l, m) {
        let mut p2 = p.to_vec();
        let mut q2 = q.to_vec();
        for (a, &pos) in positions.iter().enumerate() {
            p2[pos] = q[l - m + a];
            q2[l - m + a] = p[pos];
        }
        rhs += &(&v.delta_tuple(&p2)? * &v.delta_tuple(&q2)?);
    }
    Ok(lhs == rhs)
}

fn complement_set(set: &BTreeSet<u32>, len: u32) -> BTreeSet<u32> {
    (1..=len).filter(|x| !set.contains(x)).collect()
}

/// The three-term determinant identity for an interlacing matrix: with
/// `J' = [2,2k-1] \ J` and `J'' = [1,2k-2] \ J`,
/// `det M[~I|~J] det M[I|J] = det M[~I|~J'] det M[I|J'] + det M[~I|~J''] det M[I|J'']`.
pub fn verify_intermat(
    m: &Matrix,
    k: u32,
    i_set: &BTreeSet<u32>,
    j_set: &BTreeSet<u32>,
) -> Result<bool> {
    let check = is_interlacing_matrix(m, k)?;
    if !check.ok {
        return Err(Error::arg(format!(
            "matrix is not interlacing: {:?}",
            check.violation
        )));
    }
    verify_intermat_unchecked(m, k, i_set, j_set)
}

/// The same identity without re-checking the interlacing precondition.
pub fn verify_intermat_unchecked(
    m: &Matrix,
    k: u32,
    i_set: &BTreeSet<u32>,
    j_set: &BTreeSet<u32>,
) -> Result<bool> {
    let len = 2 * k - 1;
    Pattern {
        i: i_set.clone(),
        j: j_set.clone(),
    }
    .validate(k)?;
    if j_set.contains(&1) || j_set.contains(&len) {
        return Err(Error::arg("sink pattern must avoid 1 and 2k-1"));
    }
    let j1: BTreeSet<u32> = (2..=len).filter(|x| !j_set.contains(x)).collect();
    let j2: BTreeSet<u32> = (1..=len - 1).filter(|x| !j_set.contains(x)).collect();
    let prod = |i: &BTreeSet<u32>, j: &BTreeSet<u32>| -> Result<Poly> {
        let ic = complement_set(i, len);
        let jc = complement_set(j, len);
        let as_vec = |s: &BTreeSet<u32>| s.iter().copied().collect::<Vec<_>>();
        let a = m.minor(&as_vec(&ic), &as_vec(&jc))?;
        let b = m.minor(&as_vec(i), &as_vec(j))?;
        Ok(&a * &b)
    };
    Ok(prod(i_set, j_set)? == &prod(i_set, &j1)? + &prod(i_set, &j2)?)
}

/// The same identity read off the Plucker coordinates of the embedded
/// matrix, via the index translation of the embedding.
pub fn verify_intermat_plucker(
    m: &Matrix,
    k: u32,
    i_set: &BTreeSet<u32>,
    j_set: &BTreeSet<u32>,
) -> Result<bool> {
    let len = 2 * k - 1;
    Pattern {
        i: i_set.clone(),
        j: j_set.clone(),
    }
    .validate(k)?;
    if j_set.contains(&1) || j_set.contains(&len) {
        return Err(Error::arg("sink pattern must avoid 1 and 2k-1"));
    }
    let v = phi_embed(m);
    let j1: BTreeSet<u32> = (2..=len).filter(|x| !j_set.contains(x)).collect();
    let j2: BTreeSet<u32> = (1..=len - 1).filter(|x| !j_set.contains(x)).collect();
    let prod = |j: &BTreeSet<u32>| -> Result<Poly> {
        let ic = complement_set(i_set, len);
        let jc = complement_set(j, len);
        let a = v.delta_set(&phi_index_set(len, &ic, &jc))?;
        let b = v.delta_set(&phi_index_set(len, i_set, j))?;
        Ok(&a * &b)
    };
    Ok(prod(j_set)? == &prod(&j1)? + &prod(&j2)?)
}

/// The extreme vanishing pattern cutting out the closure of the interlacing
/// cell: column sets with more than k members in `[2k, 4k-2]`, or exactly k
/// members there while avoiding both 2k and 4k-2. Under the embedding's
/// index law this says precisely that minors of order above k vanish (rank
/// bound) and order-k minors inside the middle columns vanish (middle rank
/// bound), which is the interlacing property.
pub fn mstar_set(k: u32) -> BTreeSet<BTreeSet<u32>> {
    let l = (2 * k - 1) as usize;
    let n = (4 * k - 2) as usize;
    let mut out = BTreeSet::new();
    for cols in combinations(n, l) {
        let set: BTreeSet<u32> = cols.iter().map(|&c| c as u32 + 1).collect();
        let high = set.iter().filter(|&&x| x >= 2 * k).count() as u32;
        let touches_ends = set.contains(&(2 * k)) || set.contains(&(4 * k - 2));
        if high >= k + 1 || (high >= k && !touches_ends) {
            out.insert(set);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MstarMembership {
    pub in_cell_closure: bool,
    pub exact_cell: bool,
}

/// Vanishing-pattern membership for the interlacing cell: in the closure iff
/// every coordinate indexed by the extreme pattern vanishes; exactly on the
/// cell iff the vanishing set equals the pattern.
pub fn mstar_membership(v: &PluckerVector, k: u32) -> Result<MstarMembership> {
    if v.l() != (2 * k - 1) as usize || v.n() != (4 * k - 2) as usize {
        return Err(Error::arg("expect l = 2k-1 and ambient n = 4k-2"));
    }
    let coords = v.all_coordinates()?;
    let vanishing: BTreeSet<BTreeSet<u32>> = coords
        .iter()
        .filter(|(_, d)| d.is_zero())
        .map(|(s, _)| s.clone())
        .collect();
    let mstar = mstar_set(k);
    Ok(MstarMembership {
        in_cell_closure: mstar.is_subset(&vanishing),
        exact_cell: vanishing == mstar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, random_positive_rat};
    use crate::network::{grid_network_seeded, grid_network_unit, interspace_witness_network};
    use crate::paths::{enumerate_nc_tuples, tuple_weight};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rows: usize, cols: usize, seed: u64) -> Matrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..rows * cols)
            .map(|_| Poly::constant(random_positive_rat(&mut rng)))
            .collect();
        Matrix::new(rows, cols, entries).unwrap()
    }

    #[test]
    fn minor_basics() {
        let m = Matrix::from_rows(vec![
            vec![Poly::from_int(1), Poly::from_int(2)],
            vec![Poly::from_int(3), Poly::from_int(4)],
        ])
        .unwrap();
        assert_eq!(m.minor(&[1], &[2]).unwrap(), Poly::from_int(2));
        assert_eq!(m.det().unwrap(), Poly::from_int(-2));
        assert!(m.minor(&[1, 1], &[1, 2]).is_err());
        assert!(m.minor(&[1], &[1, 2]).is_err());
        assert!(m.minor(&[3], &[1]).is_err());
    }

    #[test]
    fn rank_routes_agree() {
        let m = Matrix::from_rows(vec![
            vec![Poly::from_int(1), Poly::from_int(2), Poly::from_int(3)],
            vec![Poly::from_int(2), Poly::from_int(4), Poly::from_int(6)],
            vec![Poly::from_int(1), Poly::from_int(1), Poly::from_int(1)],
        ])
        .unwrap();
        assert_eq!(m.rank_numeric().unwrap(), 2);
        assert!(m.rank_at_most(2).unwrap());
        // Symbolic rank-1 matrix: outer product of (x1, x2) with itself.
        let s = Matrix::from_rows(vec![
            vec![&Poly::var(1) * &Poly::var(1), &Poly::var(1) * &Poly::var(2)],
            vec![&Poly::var(2) * &Poly::var(1), &Poly::var(2) * &Poly::var(2)],
        ])
        .unwrap();
        assert!(s.rank_at_most(1).unwrap());
        assert!(!s.rank_at_most(0).unwrap());
    }

    #[test]
    fn lgv_duality_on_grids() {
        for (m, n, k, seed) in [(4u32, 4, 2, 1u64), (5, 5, 3, 2), (4, 5, 2, 3)] {
            let net = grid_network_seeded(m, n, k, seed).unwrap();
            let p = path_matrix(&net).unwrap();
            let len = net.boundary_len();
            for size in 1..=len.min(3) {
                for rows in combinations(len, size) {
                    for cols in combinations(len, size) {
                        let u: Vec<u32> = rows.iter().map(|&r| r as u32 + 1).collect();
                        let w: Vec<u32> = cols.iter().map(|&c| c as u32 + 1).collect();
                        let det = p.minor(&u, &w).unwrap();
                        let xs: Vec<usize> = rows.iter().map(|&r| net.sources()[r]).collect();
                        let ys: Vec<usize> = cols.iter().map(|&c| net.sinks()[c]).collect();
                        let mut total = Poly::zero();
                        for t in enumerate_nc_tuples(&net, &xs, &ys).unwrap() {
                            total += &tuple_weight(&net, &t);
                        }
                        assert_eq!(det, total, "{m}x{n} k={k} U={u:?} W={w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn interlacing_matrix_predicate() {
        let z = Matrix::zero(3, 3);
        assert!(is_interlacing_matrix(&z, 2).unwrap().ok);
        let id = Matrix::identity(3);
        let check = is_interlacing_matrix(&id, 2).unwrap();
        assert!(!check.ok);
        assert_eq!(check.violation.unwrap().reason, "rank exceeds k");
        // Path matrices of interlacing networks are interlacing.
        for net in [
            grid_network_unit(4, 4, 2).unwrap(),
            grid_network_seeded(5, 5, 3, 4).unwrap(),
            interspace_witness_network(2).unwrap(),
        ] {
            let p = path_matrix(&net).unwrap();
            assert!(is_interlacing_matrix(&p, net.k()).unwrap().ok);
        }
    }

    #[test]
    fn embedding_smallest_case_and_index_law() {
        let a = Matrix::from_rows(vec![vec![Poly::constant(rat(7, 3))]]).unwrap();
        let v = phi_embed(&a);
        assert_eq!(
            v.delta_set(&[1u32].into_iter().collect()).unwrap(),
            Poly::one()
        );
        assert_eq!(
            v.delta_set(&[2u32].into_iter().collect()).unwrap(),
            Poly::constant(rat(7, 3))
        );
        for seed in [11u64, 12, 13] {
            let a = random_matrix(3, 3, seed);
            assert!(phi_index_law_holds(&a).unwrap());
        }
    }

    #[test]
    fn delta_tuple_signs_and_repeats() {
        let a = random_matrix(2, 2, 17);
        let v = phi_embed(&a);
        let d12 = v.delta_tuple(&[1, 2]).unwrap();
        let d21 = v.delta_tuple(&[2, 1]).unwrap();
        assert_eq!(d12, -&d21);
        assert!(v.delta_tuple(&[3, 3]).unwrap().is_zero());
    }

    #[test]
    fn plucker_relations_hold() {
        // Classical three-term relation in the 2-plane Grassmannian of
        // 4-space: D13 D24 = D12 D34 + D14 D23.
        let a = random_matrix(2, 2, 23);
        let v = phi_embed(&a);
        assert!(plucker_relation_check(&v, &[1, 3], &[2, 4], 1).unwrap());
        let lhs = &v.delta_tuple(&[1, 3]).unwrap() * &v.delta_tuple(&[2, 4]).unwrap();
        let rhs = &(&v.delta_tuple(&[1, 2]).unwrap() * &v.delta_tuple(&[3, 4]).unwrap())
            + &(&v.delta_tuple(&[1, 4]).unwrap() * &v.delta_tuple(&[2, 3]).unwrap());
        assert_eq!(lhs, rhs);
        // Degenerate top case m = l.
        let b = random_matrix(3, 3, 29);
        let vb = phi_embed(&b);
        assert!(plucker_relation_check(&vb, &[1, 3, 5], &[2, 4, 6], 3).unwrap());
    }

    #[test]
    fn intermat_identity_on_a_grid_path_matrix() {
        let net = grid_network_seeded(5, 5, 2, 31).unwrap();
        let p = path_matrix(&net).unwrap();
        let i: BTreeSet<u32> = [2].into();
        let j: BTreeSet<u32> = [2].into();
        assert!(verify_intermat(&p, 2, &i, &j).unwrap());
        assert!(verify_intermat_plucker(&p, 2, &i, &j).unwrap());
        // Rank-0 matrix degenerates to 0 = 0 + 0.
        let z = Matrix::zero(3, 3);
        assert!(verify_intermat(&z, 2, &i, &j).unwrap());
        // Non-interlacing input is rejected before the identity is asserted.
        let id = Matrix::identity(3);
        assert!(matches!(verify_intermat(&id, 2, &i, &j), Err(Error::Arg(_))));
    }

    #[test]
    fn interspace_witness_realizes_the_extreme_cell() {
        let net = interspace_witness_network(2).unwrap();
        let p = path_matrix(&net).unwrap();
        let v = phi_embed(&p);
        let m = mstar_membership(&v, 2).unwrap();
        assert!(m.in_cell_closure);
        assert!(m.exact_cell);
        // A generic (full-rank) matrix is not in the closure.
        let g = phi_embed(&random_matrix(3, 3, 37));
        let m = mstar_membership(&g, 2).unwrap();
        assert!(!m.in_cell_closure);
    }
}
