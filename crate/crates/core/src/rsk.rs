//! Birational RSK: the three-dimensional weight arrays of a positive
//! matrix, the flattened output matrix, and mechanical verification of the
//! bounded octahedron recurrence, the entry recursion and the product
//! identity behind it.
//!
//! Every array entry is computed twice, by noncrossing-tuple enumeration
//! with the vertex-product weight and by an LGV determinant of single-path
//! weight sums; disagreement is an integrity error. Quotient entries are
//! kept as formal polynomial fractions and every asserted equality is
//! cross-multiplied.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{random_positive_rat, Fraction, Poly};
use crate::error::{Error, Result};
use crate::grassmann::Matrix;
use crate::network::{grid_network_unit, plain_grid, Network};
use crate::paths::{enumerate_nc_tuples, path_hat_weight_sum, tuple_hat_weight};

/// A positive `m x n` input matrix, symbolic or rational.
#[derive(Clone, Debug)]
pub struct RskInput {
    pub m: u32,
    pub n: u32,
    entries: Vec<Poly>,
}

impl RskInput {
    pub fn new(m: u32, n: u32, entries: Vec<Poly>) -> Result<RskInput> {
        if m == 0 || n == 0 || entries.len() != (m * n) as usize {
            return Err(Error::arg("input dimensions do not match entries"));
        }
        if !entries.iter().all(|e| e.is_coefficient_positive()) {
            return Err(Error::arg("input entries must be positive"));
        }
        Ok(RskInput { m, n, entries })
    }

    /// The generic symbolic input: entry `(i, j)` is the variable `x{10i+j}`,
    /// rendered `x11, x12, ...`; this caps the symbolic size at 9 x 9.
    pub fn symbolic(m: u32, n: u32) -> Result<RskInput> {
        if m > 9 || n > 9 {
            return Err(Error::construction("symbolic inputs are capped at 9 x 9"));
        }
        let mut entries = Vec::new();
        for i in 1..=m {
            for j in 1..=n {
                entries.push(Poly::var(10 * i + j));
            }
        }
        RskInput::new(m, n, entries)
    }

    pub fn from_matrix(m: &Matrix) -> Result<RskInput> {
        let entries: Vec<Poly> = (0..m.rows())
            .flat_map(|r| (0..m.cols()).map(move |c| m.get(r, c).clone()))
            .collect();
        RskInput::new(m.rows() as u32, m.cols() as u32, entries)
    }

    /// Seeded positive rational input.
    pub fn seeded(m: u32, n: u32, seed: u64) -> Result<RskInput> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..m * n)
            .map(|_| Poly::constant(random_positive_rat(&mut rng)))
            .collect();
        RskInput::new(m, n, entries)
    }

    pub fn all_ones(m: u32, n: u32) -> Result<RskInput> {
        RskInput::new(m, n, vec![Poly::one(); (m * n) as usize])
    }

    /// Entry at 1-based `(i, j)`.
    pub fn x(&self, i: u32, j: u32) -> &Poly {
        &self.entries[((i - 1) * self.n + (j - 1)) as usize]
    }

    /// Rectangular product at `(i, j)`: the product of all entries weakly
    /// northwest of `(i, j)`; 1 outside the grid.
    pub fn rect(&self, i: i64, j: i64) -> Poly {
        if i < 1 || j < 1 || i > self.m as i64 || j > self.n as i64 {
            return Poly::one();
        }
        let mut out = Poly::one();
        for r in 1..=i as u32 {
            for s in 1..=j as u32 {
                out = &out * self.x(r, s);
            }
        }
        out
    }

    /// Vertex weights for the plain grid, indexed by vertex id.
    fn vertex_weights(&self, grid: &Network) -> Vec<Poly> {
        (0..grid.n_vertices())
            .map(|v| {
                let (r, c) = grid.coord(v).expect("grid vertices carry coordinates");
                self.x(r as u32, c as u32).clone()
            })
            .collect()
    }
}

type Idx = (i64, i64, i64);

/// The three weight arrays and the flattened output matrix.
#[derive(Clone, Debug)]
pub struct RskArrays {
    pub input: RskInput,
    /// Raw noncrossing-tuple weight sums; empty sums are 1.
    pub ybar: BTreeMap<Idx, Poly>,
    /// `ybar / rect`, as formal fractions.
    pub ytilde: BTreeMap<Idx, Fraction>,
    /// Successive quotients `ybar_k / ybar_{k-1}` with unit boundary levels.
    pub y: BTreeMap<Idx, Fraction>,
    /// The flattened outer border, row-major `m x n`.
    pub z: Vec<Fraction>,
}

/// Index set of the raw array: both coordinates within one step of the grid
/// and the level at most `min(i, j)`.
pub fn ybar_indices(m: u32, n: u32) -> Vec<Idx> {
    let mut out = Vec::new();
    for i in 0..=m as i64 {
        for j in 0..=n as i64 {
            for k in 0..=i.min(j) {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Index set of the quotient array: within two steps of the grid and level
/// at most `min(i, j) + 1`.
pub fn y_indices(m: u32, n: u32) -> Vec<Idx> {
    let mut out = Vec::new();
    for i in -1..=m as i64 {
        for j in -1..=n as i64 {
            for k in 0..=(i.min(j) + 1).max(0) {
                out.push((i, j, k));
            }
        }
    }
    out
}

impl RskArrays {
    /// Compute all four arrays. Every raw entry is computed by enumeration
    /// and by an LGV determinant, with mandatory agreement.
    pub fn compute(input: RskInput) -> Result<RskArrays> {
        let grid = plain_grid(input.m, input.n)?;
        let vw = input.vertex_weights(&grid);
        let at = |r: i64, c: i64| grid.vertex_by_coord((r as i32, c as i32)).unwrap();
        let mut ybar = BTreeMap::new();
        for (i, j, k) in ybar_indices(input.m, input.n) {
            let value = if i == 0 || j == 0 || k == 0 {
                Poly::one()
            } else {
                let xs: Vec<usize> = (1..=k).map(|l| at(1, l)).collect();
                let ys: Vec<usize> = (1..=k).map(|l| at(i, j - k + l)).collect();
                let mut by_enum = Poly::zero();
                for t in enumerate_nc_tuples(&grid, &xs, &ys)? {
                    by_enum += &tuple_hat_weight(&t, &vw);
                }
                let mut entries: Vec<Poly> = Vec::with_capacity((k * k) as usize);
                for a in 0..k as usize {
                    for b in 0..k as usize {
                        entries.push(path_hat_weight_sum(&grid, xs[a], ys[b], &vw));
                    }
                }
                let by_det = Matrix::new(k as usize, k as usize, entries)?.det()?;
                if by_enum != by_det {
                    return Err(Error::integrity(format!(
                        "raw entry ({i},{j},{k}) disagrees between enumeration and determinant"
                    )));
                }
                by_enum
            };
            ybar.insert((i, j, k), value);
        }
        let mut ytilde = BTreeMap::new();
        for (&(i, j, k), v) in &ybar {
            ytilde.insert((i, j, k), Fraction::new(v.clone(), input.rect(i, j))?);
        }
        let mut y = BTreeMap::new();
        for (i, j, k) in y_indices(input.m, input.n) {
            let top = i.min(j) + 1;
            let value = if k == 0 || k == top {
                Fraction::one()
            } else {
                Fraction::new(ybar[&(i, j, k)].clone(), ybar[&(i, j, k - 1)].clone())?
            };
            y.insert((i, j, k), value);
        }
        let mut z = Vec::new();
        for i in 1..=input.m as i64 {
            for j in 1..=input.n as i64 {
                let l = (input.m as i64 - i).min(input.n as i64 - j);
                z.push(y[&(i + l, j + l, l + 1)].clone());
            }
        }
        Ok(RskArrays {
            input,
            ybar,
            ytilde,
            y,
            z,
        })
    }

    pub fn z_at(&self, i: u32, j: u32) -> &Fraction {
        &self.z[((i - 1) * self.input.n + (j - 1)) as usize]
    }

    /// Octahedron recurrence for the normalized array: boundary conditions
    /// `yt_{i,j,0} = 1/rect(i,j)` and `yt_{i,j,min(i,j)} = 1`, and for
    /// `1 <= k <= min(i,j)-1`:
    /// `yt_{i,j,k} yt_{i-1,j-1,k-1} = yt_{i-1,j,k} yt_{i,j-1,k-1} + yt_{i-1,j,k-1} yt_{i,j-1,k}`.
    pub fn verify_octahedron(&self) -> Result<bool> {
        let one = Fraction::one();
        for (&(i, j, k), yt) in &self.ytilde {
            if k == 0 {
                let b = Fraction::new(Poly::one(), self.input.rect(i, j))?;
                if !yt.eq_cross(&b) {
                    return Ok(false);
                }
            }
            if k == i.min(j) && !yt.eq_cross(&one) {
                return Ok(false);
            }
            if k >= 1 && k <= i.min(j) - 1 {
                let t = |a: i64, b: i64, c: i64| self.ytilde[&(a, b, c)].clone();
                let lhs = t(i, j, k).mul(&t(i - 1, j - 1, k - 1));
                let rhs = t(i - 1, j, k)
                    .mul(&t(i, j - 1, k - 1))
                    .add(&t(i - 1, j, k - 1).mul(&t(i, j - 1, k)));
                if !lhs.eq_cross(&rhs) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The product identity driving the recurrence, at one index:
    /// `yb_{ijk} yb_{i-1,j-1,k-1} = (yb_{i-1,j,k} yb_{i,j-1,k-1} + yb_{i-1,j,k-1} yb_{i,j-1,k}) x_ij`
    /// for `1 <= k <= min(i,j) - 1`.
    pub fn verify_star_equation(&self, i: i64, j: i64, k: i64) -> Result<bool> {
        if !(1 <= k && k <= i.min(j) - 1 && i >= 1 && j >= 1 && i <= self.input.m as i64 && j <= self.input.n as i64)
        {
            return Err(Error::arg("star equation needs 1 <= k <= min(i,j)-1"));
        }
        let b = |a: i64, c: i64, l: i64| self.ybar[&(a, c, l)].clone();
        let lhs = &b(i, j, k) * &b(i - 1, j - 1, k - 1);
        let sum = &(&b(i - 1, j, k) * &b(i, j - 1, k - 1)) + &(&b(i - 1, j, k - 1) * &b(i, j - 1, k));
        let rhs = &sum * self.input.x(i as u32, j as u32);
        Ok(lhs == rhs)
    }

    pub fn verify_star_all(&self) -> Result<bool> {
        for i in 2..=self.input.m as i64 {
            for j in 2..=self.input.n as i64 {
                for k in 1..=(i.min(j) - 1) {
                    if !self.verify_star_equation(i, j, k)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The entry recursion for the quotient array. Interior levels follow
    /// `y_{ijk} = (y_{i-1,j,k} + y_{i,j-1,k}) / (y_{i-1,j-1,k-1} (1/y_{i-1,j,k-1} + 1/y_{i,j-1,k-1}))`;
    /// the first level extends paths through `(i-1,j)` or `(i,j-1)` with
    /// weight factor `x_ij`, and the top level closes against the
    /// rectangular product.
    pub fn verify_y_recursion(&self) -> Result<bool> {
        let y = |a: i64, b: i64, c: i64| self.y[&(a, b, c)].clone();
        for i in 1..=self.input.m as i64 {
            for j in 1..=self.input.n as i64 {
                let top = i.min(j);
                for k in 1..=top {
                    let x_ij = Fraction::from_poly(self.input.x(i as u32, j as u32).clone());
                    let ok = if k == 1 {
                        // Unit lower level: every path into (i,j) extends a
                        // path into (i-1,j) or (i,j-1); no predecessor at
                        // the border.
                        let mut sum = Fraction::from_poly(Poly::zero());
                        if i >= 2 {
                            sum = sum.add(&y(i - 1, j, 1));
                        }
                        if j >= 2 {
                            sum = sum.add(&y(i, j - 1, 1));
                        }
                        if i == 1 && j == 1 {
                            sum = Fraction::one();
                        }
                        y(i, j, 1).eq_cross(&x_ij.mul(&sum))
                    } else if k < top {
                        let num = y(i - 1, j, k).add(&y(i, j - 1, k));
                        let den = y(i - 1, j - 1, k - 1)
                            .mul(&y(i - 1, j, k - 1).inv()?.add(&y(i, j - 1, k - 1).inv()?));
                        y(i, j, k).mul(&den).eq_cross(&num)
                    } else {
                        // Top level: the unique maximal tuple covers the
                        // full rectangle, so the telescoping product of the
                        // levels closes against rect(i, j).
                        let rect = Fraction::from_poly(self.input.rect(i, j));
                        y(i, j, top)
                            .mul(&Fraction::from_poly(self.ybar[&(i, j, top - 1)].clone()))
                            .eq_cross(&rect)
                    };
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

impl RskArrays {
    /// Labeled text layout of all four tables, level by level with the
    /// bottom-right corners aligned on the same index ranges.
    pub fn render_tables(&self) -> String {
        let (m, n) = (self.input.m as i64, self.input.n as i64);
        let mut out = String::new();
        let max_level = m.min(n);
        out.push_str("ybar:\n");
        for k in 0..=max_level {
            out.push_str(&format!("level k={k} (i={k}..{m}, j={k}..{n}):\n"));
            for i in k..=m {
                let row: Vec<String> = (k..=n)
                    .map(|j| self.ybar[&(i, j, k)].render(true))
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out.push_str("ytilde:\n");
        for k in 0..=max_level {
            out.push_str(&format!("level k={k} (i={k}..{m}, j={k}..{n}):\n"));
            for i in k..=m {
                let row: Vec<String> = (k..=n)
                    .map(|j| self.ytilde[&(i, j, k)].render(true))
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out.push_str("y:\n");
        for k in 0..=(max_level + 1) {
            out.push_str(&format!("level k={k} (i={}..{m}, j={}..{n}):\n", k - 1, k - 1));
            for i in (k - 1)..=m {
                let row: Vec<String> = ((k - 1)..=n)
                    .map(|j| self.y[&(i, j, k)].render(true))
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out.push_str("z:\n");
        for i in 1..=self.input.m {
            let row: Vec<String> = (1..=self.input.n)
                .map(|j| self.z_at(i, j).render(true))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Increasing triangular product of length `l` hanging southeast of `(i,j)`.
pub fn tri_plus(x: &RskInput, i: u32, j: u32, l: u32) -> Result<Poly> {
    if l == 0 {
        return Ok(Poly::one());
    }
    if !(i >= 1 && j >= 1 && l <= (x.m - i + 1).min(x.n - j + 1)) {
        return Err(Error::arg("triangular product out of range"));
    }
    let mut out = Poly::one();
    for r in i..=(i + l - 1) {
        for s in j..=(j + i + l - r - 1) {
            out = &out * x.x(r, s);
        }
    }
    Ok(out)
}

/// Decreasing triangular product of length `l` hugging `(i,j)` from the
/// northwest.
pub fn tri_minus(x: &RskInput, i: u32, j: u32, l: u32) -> Result<Poly> {
    if l == 0 {
        return Ok(Poly::one());
    }
    if !(l <= i.min(j)) {
        return Err(Error::arg("triangular product out of range"));
    }
    let mut out = Poly::one();
    for r in (i - l + 1)..=i {
        for s in (j + i - l - r + 1)..=j {
            out = &out * x.x(r, s);
        }
    }
    Ok(out)
}

/// Which of the three pattern variants a vertical-extension bijection uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriVariant {
    /// Sinks at even positions; target levels `(k-1, k)` at `(i-1,j-1)` and `(i,j)`.
    Even,
    /// Sinks at `{1,3,...,2k-3}`; targets at `(i,j-1)` and `(i-1,j)`.
    OddLow,
    /// Sinks at `{3,5,...,2k-1}`; targets at `(i-1,j)` and `(i,j-1)`, with
    /// the leftmost blue endpoint slid one step left.
    OddHigh,
}

/// Check one vertical-extension bijection: cardinality, injectivity,
/// membership of the image, and the exact weight equation tying the pattern
/// weight to the two raw array entries.
pub fn verify_triangle_bijection(x: &RskInput, i: u32, j: u32, k: u32, variant: TriVariant) -> Result<bool> {
    use crate::paths::{enumerate_pnc, Pattern};
    if !(k >= 2 && i >= 3 && j >= 3 && k < i.min(j) && i <= x.m && j <= x.n) {
        return Err(Error::arg("bijection check needs 2 <= k < min(i,j), i,j >= 3"));
    }
    // Edge weights of the sub-network are irrelevant here: only vertex
    // products enter the modified weight.
    let sub = grid_network_unit(i, j, k)?;
    let grid = plain_grid(x.m, x.n)?;
    let vw = x.vertex_weights(&grid);
    let at = |r: u32, c: u32| grid.vertex_by_coord((r as i32, c as i32)).unwrap();

    let evens: Vec<u32> = (1..=(2 * k - 2)).filter(|v| v % 2 == 0).collect();
    let (j_pattern, red_target, blue_target): (Vec<u32>, u32, u32) = match variant {
        TriVariant::Even => (evens.clone(), i - 1, i),
        TriVariant::OddLow => ((1..=(2 * k - 3)).filter(|v| v % 2 == 1).collect(), i, i - 1),
        TriVariant::OddHigh => ((3..=(2 * k - 1)).filter(|v| v % 2 == 1).collect(), i - 1, i),
    };
    let pattern = Pattern::new(evens.clone(), j_pattern);
    let pairs = enumerate_pnc(&sub, &pattern)?;

    // Translate a path in the sub-network to big-grid vertex ids and extend
    // it vertically: prepend its column up to row 1, append its end column
    // down to the target row.
    let extend = |path: &[usize], target_row: u32| -> Vec<usize> {
        let coords: Vec<(i32, i32)> = path.iter().map(|&v| sub.coord(v).unwrap()).collect();
        let mut out = Vec::new();
        let (r0, c0) = coords[0];
        for r in 1..r0 {
            out.push(at(r as u32, c0 as u32));
        }
        for &(r, c) in &coords {
            out.push(at(r as u32, c as u32));
        }
        let (re, ce) = coords[coords.len() - 1];
        for r in (re + 1)..=(target_row as i32) {
            out.push(at(r as u32, ce as u32));
        }
        out
    };
    let slide_left = |path: &[usize]| -> Vec<usize> {
        // Drop the final vertex; valid because the last step of the leftmost
        // blue path is horizontal (its sink neighbor above is another blue
        // endpoint).
        path[..path.len() - 1].to_vec()
    };

    let map_pair = |pair: &crate::paths::PncPair| -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let reds: Vec<Vec<usize>> = pair.red.iter().map(|p| extend(p, red_target)).collect();
        let blues: Vec<Vec<usize>> = pair
            .blue
            .iter()
            .enumerate()
            .map(|(s, p)| {
                if variant == TriVariant::OddHigh && s == 0 {
                    let moved = extend(p, i);
                    slide_left(&moved)
                } else {
                    extend(p, blue_target)
                }
            })
            .collect();
        (reds, blues)
    };

    // Expected image components.
    let rsk_set = |ii: i64, jj: i64, kk: i64| -> Result<Vec<Vec<Vec<usize>>>> {
        let xs: Vec<usize> = (1..=kk).map(|l| at(1, l as u32)).collect();
        let ys: Vec<usize> = (1..=kk).map(|l| at(ii as u32, (jj - kk + l) as u32)).collect();
        enumerate_nc_tuples(&grid, &xs, &ys)
    };
    let (red_set, blue_set) = match variant {
        TriVariant::Even => (
            rsk_set(i as i64 - 1, j as i64 - 1, k as i64 - 1)?,
            rsk_set(i as i64, j as i64, k as i64)?,
        ),
        TriVariant::OddLow => (
            rsk_set(i as i64, j as i64 - 1, k as i64 - 1)?,
            rsk_set(i as i64 - 1, j as i64, k as i64)?,
        ),
        TriVariant::OddHigh => (
            rsk_set(i as i64 - 1, j as i64, k as i64 - 1)?,
            rsk_set(i as i64, j as i64 - 1, k as i64)?,
        ),
    };

    let kappa = &tri_plus(x, 1, 1, k - 2)? * &tri_plus(x, 1, 1, k - 1)?;
    let (corr, lhs_tri) = match variant {
        TriVariant::Even => (
            Poly::one(),
            &tri_minus(x, i - 1, j - 1, k - 2)? * &tri_minus(x, i, j, k - 1)?,
        ),
        TriVariant::OddLow => (
            x.x(i - k + 1, j).clone(),
            &tri_minus(x, i, j - 1, k - 2)? * &tri_minus(x, i - 1, j, k - 1)?,
        ),
        TriVariant::OddHigh => (
            x.x(i, j - k + 1).clone(),
            &tri_minus(x, i - 1, j, k - 2)? * &tri_minus(x, i, j - 1, k - 1)?,
        ),
    };

    let mut images: Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)> = Vec::new();
    for pair in &pairs {
        let (reds, blues) = map_pair(pair);
        if !red_set.contains(&reds) || !blue_set.contains(&blues) {
            return Ok(false);
        }
        // Weight equation, cross-multiplied by the correction factor.
        let src_coords: Poly = {
            let sub_vw = x.vertex_weights(&sub);
            crate::paths::pair_hat_weight(pair, &sub_vw)
        };
        let lhs = &(&src_coords * &kappa) * &lhs_tri;
        let img_wt = &tuple_hat_weight(&reds, &vw) * &tuple_hat_weight(&blues, &vw);
        if lhs != &img_wt * &corr {
            return Ok(false);
        }
        images.push((reds, blues));
    }
    images.sort();
    images.dedup();
    Ok(images.len() == pairs.len() && pairs.len() == red_set.len() * blue_set.len())
}

/// The two triangular-product identities that convert the corrected pattern
/// weights into the product identity.
pub fn verify_triangle_identities(x: &RskInput, i: u32, j: u32, k: u32) -> Result<bool> {
    if !(k >= 2 && k <= i.min(j).saturating_sub(1)) {
        return Err(Error::arg("need 2 <= k <= min(i,j)-1"));
    }
    let x_ij = x.x(i, j);
    let base = &tri_minus(x, i - 1, j - 1, k - 2)? * &tri_minus(x, i, j, k - 1)?;
    let lhs1 = &(x_ij * &tri_minus(x, i - 1, j, k - 2)?) * &tri_minus(x, i, j - 1, k - 1)?;
    let rhs1 = &base * x.x(i, j - k + 1);
    let lhs2 = &(x_ij * &tri_minus(x, i, j - 1, k - 2)?) * &tri_minus(x, i - 1, j, k - 1)?;
    let rhs2 = &base * x.x(i - k + 1, j);
    Ok(lhs1 == rhs1 && lhs2 == rhs2)
}
